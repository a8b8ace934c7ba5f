#include "gammalab/abelian.hpp"
#include "gammalab/cache.hpp"
#include "gammalab/config.hpp"
#include "gammalab/descriptor.hpp"
#include "gammalab/errors.hpp"
#include "gammalab/gamma.hpp"
#include "gammalab/heights.hpp"
#include "gammalab/numfield.hpp"
#include "gammalab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <mpfr.h>

#include <cstdio>
#include <ctime>
#include <iostream>

using namespace gammalab;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string rat_decimal(const BigRat& q, int digits = 12) {
    mpfr_t t;
    mpfr_init2(t, 128);
    mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
    char buf[64];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, t);
    mpfr_clear(t);
    return buf;
}

ordered_json fr_json(const FactoredReal& v) {
    ordered_json j;
    j["exact"] = v.to_string();
    j["decimal"] = v.to_decimal(12);
    return j;
}

ordered_json height_json(const HeightInterval& h) {
    ordered_json j;
    j["lo"] = rat_decimal(h.lo);
    j["hi"] = rat_decimal(h.hi);
    if (h.exact) {
        j["exact"] = "log(" + h.exact->arg.get_str() + ")/" + std::to_string(h.exact->root);
    }
    return j;
}

std::string poly_descriptor(const IntPoly& f) {
    std::string s = "poly=";
    for (int i = 0; i <= f.degree(); ++i) {
        if (i) s += ",";
        s += f.coeff(i).get_str();
    }
    return s;
}

// report envelope
struct Output {
    const RunConfig& cfg;
    std::string command;
    std::vector<std::string> refs;
    ordered_json results = ordered_json::object();
    ordered_json failures = ordered_json::array();
    std::vector<std::string> text;
    std::string csv;

    explicit Output(const RunConfig& c, std::string cmd, std::vector<std::string> r)
        : cfg(c), command(std::move(cmd)), refs(std::move(r)) {}

    void emit() const {
        if (cfg.format == "json") {
            ordered_json doc;
            doc["schema"] = 1;
            doc["command"] = command;
            doc["config_digest"] = cfg.digest();
            if (!cfg.deterministic) {
                char buf[64];
                std::time_t now = std::time(nullptr);
                std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
                doc["generated_at"] = buf;
            }
            doc["paper_refs"] = refs;
            doc["results"] = results;
            doc["failures"] = failures;
            std::cout << doc.dump(2) << "\n";
            return;
        }
        if (cfg.format == "csv" && !csv.empty()) {
            std::cout << csv;
            return;
        }
        if (!cfg.deterministic) {
            char buf[64];
            std::time_t now = std::time(nullptr);
            std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
            std::cout << "# " << command << " at " << buf << "\n";
        }
        for (const auto& line : text) std::cout << line << "\n";
        if (!failures.empty()) {
            std::cout << "failures:\n";
            for (const auto& f : failures) std::cout << "  " << f.get<std::string>() << "\n";
        }
    }
};

// descriptors that must be abelian for lattice work
AbelianField require_abelian(const FieldDescriptor& d, const std::string& what) {
    if (!d.is_abelian())
        throw UsageError(what + " requires an abelian descriptor (got " + d.text + ")");
    return *d.abelian;
}

HeightBound parse_bound(const std::string& text) {
    if (text.rfind("log:", 0) == 0) return HeightBound::log_of(parse_rational(text.substr(4)));
    try {
        return HeightBound::from_value(parse_rational(text));
    } catch (const Error&) {
        throw;
    } catch (...) {
        throw UsageError("bad height bound '" + text + "' (use a decimal or log:<rational>)");
    }
}

// ------------------------------------------------------------- commands ---

int cmd_field_info(const RunConfig& cfg, FieldCache& cache, const std::string& desc_text) {
    FieldDescriptor d = parse_descriptor(desc_text);
    Output out(cfg, "field info", {"def:conductor-discriminant", "alg:round2-maximal-order"});
    if (d.is_abelian()) {
        const AbelianField& f = *d.abelian;
        FactoredReal disc = cache.abelian_disc_of(f, cfg);
        out.results["descriptor"] = f.descriptor();
        out.results["degree"] = f.degree;
        out.results["conductor"] = f.modulus;
        out.results["abs_disc"] = fr_json(disc);
        out.text.push_back("field:     " + f.descriptor());
        out.text.push_back("degree:    " + std::to_string(f.degree));
        out.text.push_back("conductor: " + std::to_string(f.modulus));
        out.text.push_back("|disc|:    " + disc.to_string() + "  ~ " + disc.to_decimal(10));
        if (f.degree <= cfg.degree_cap) {
            GeneratorPoly gen = generator_polynomial(f, cfg.degree_cap);
            out.results["min_poly"] = gen.poly.to_string();
            if (gen.fallback_level > 1)
                out.results["period_fallback_level"] = gen.fallback_level;
            out.text.push_back("min poly:  " + gen.poly.to_string() +
                               (gen.fallback_level > 1
                                    ? "  (period fallback level " +
                                          std::to_string(gen.fallback_level) + ")"
                                    : ""));
        }
    } else {
        IntPoly gen = monic_generator(*d.poly);
        FieldSummary s = cache.build(gen, cfg);
        FactoredReal disc = factor_integer(abs(s.disc));
        if (!(gen == *d.poly))
            out.text.push_back("note: rescaled to the monic generator " + gen.to_string());
        out.results["descriptor"] = poly_descriptor(*d.poly);
        out.results["degree"] = s.degree;
        out.results["min_poly"] = d.poly->to_string();
        out.results["disc"] = s.disc.get_str();
        out.results["abs_disc"] = fr_json(disc);
        out.results["index"] = s.index.get_str();
        out.text.push_back("field:    " + poly_descriptor(*d.poly));
        out.text.push_back("min poly: " + d.poly->to_string());
        out.text.push_back("degree:   " + std::to_string(s.degree));
        out.text.push_back("disc:     " + s.disc.get_str() + " = " +
                           std::string(s.disc < 0 ? "-" : "") + disc.to_string());
        out.text.push_back("index:    " + s.index.get_str());
    }
    out.emit();
    return 0;
}

int cmd_gamma(const RunConfig& cfg, FieldCache& cache, const std::string& m_text,
              const std::string& f_text) {
    FieldDescriptor md = parse_descriptor(m_text);
    FieldDescriptor fd = parse_descriptor(f_text);
    Output out(cfg, "gamma", {"def:gamma_M(F)", "id:discriminant-tower"});
    FactoredReal value;
    if (md.is_abelian() && fd.is_abelian()) {
        AbelianField m = *md.abelian, f = *fd.abelian;
        AbelianField mf = join(m, f);
        value = gamma_value(cache.abelian_disc_of(f, cfg), cache.abelian_disc_of(mf, cfg),
                            BigInt(mf.degree), BigInt(f.degree));
        out.results["MF"] = mf.descriptor();
        out.results["MF_degree"] = mf.degree;
        out.text.push_back("M:  " + m.descriptor());
        out.text.push_back("F:  " + f.descriptor());
        out.text.push_back("MF: " + mf.descriptor() + "  (degree " +
                           std::to_string(mf.degree) + ")");
    } else {
        IntPoly fm = md.is_abelian() ? generator_polynomial(*md.abelian, cfg.degree_cap).poly
                                     : monic_generator(*md.poly);
        IntPoly ff = fd.is_abelian() ? generator_polynomial(*fd.abelian, cfg.degree_cap).poly
                                     : monic_generator(*fd.poly);
        FieldSummary sf = cache.build(ff, cfg);
        bool disjoint = true;
        IntPoly comp = compositum_polynomial(fm, ff, cfg.degree_cap, &disjoint);
        FieldSummary smf = cache.build(comp, cfg);
        value = gamma_value(factor_integer(abs(sf.disc)), factor_integer(abs(smf.disc)),
                            BigInt(smf.degree), BigInt(sf.degree));
        out.results["MF"] = poly_descriptor(comp);
        out.results["MF_degree"] = smf.degree;
        out.results["linearly_disjoint"] = disjoint;
        out.text.push_back("M:  " + fm.to_string());
        out.text.push_back("F:  " + ff.to_string());
        out.text.push_back("MF: " + comp.to_string() + "  (degree " +
                           std::to_string(smf.degree) + ")");
        if (!disjoint)
            out.text.push_back("note: non-linearly-disjoint embedding choice");
    }
    out.results["gamma"] = fr_json(value);
    out.text.push_back("gamma_M(F) = " + value.to_string() + "  ~ " + value.to_decimal(10));
    out.emit();
    return 0;
}

int cmd_gamma_prime(const RunConfig& cfg, const std::string& m_text, const std::string& k_text) {
    AbelianField m = require_abelian(parse_descriptor(m_text), "gamma-prime");
    AbelianField k = require_abelian(parse_descriptor(k_text), "gamma-prime");
    GammaReport rep = gamma_prime(m, k, cfg.subgroup_cap);
    Output out(cfg, "gamma-prime", {"def:gamma-prime", "cor:galois-internal-sup"});
    out.results["M"] = m.descriptor();
    out.results["K"] = k.descriptor();
    ordered_json entries = ordered_json::array();
    out.text.push_back("gamma'(M/K) for M = " + m.descriptor() + ", K = " + k.descriptor());
    char line[256];
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
        const auto& e = rep.entries[i];
        ordered_json je;
        je["F"] = e.field.descriptor();
        je["degree"] = e.field.degree;
        je["gamma"] = fr_json(e.value);
        je["is_sup"] = (i == rep.sup_index);
        entries.push_back(je);
        std::snprintf(line, sizeof line, "  F = %-24s deg %-3ld gamma = %-24s ~ %s%s",
                      e.field.descriptor().c_str(), e.field.degree, e.value.to_string().c_str(),
                      e.value.to_decimal(10).c_str(), i == rep.sup_index ? "   <-- sup" : "");
        out.text.push_back(line);
    }
    out.results["entries"] = entries;
    out.results["sup"] = fr_json(rep.sup_value);
    out.results["sup_witness"] = rep.sup_witness().descriptor();
    out.text.push_back("sup = " + rep.sup_value.to_string() + "  ~ " +
                       rep.sup_value.to_decimal(10) + "   witness F = " +
                       rep.sup_witness().descriptor());
    if (rep.stage_bound) {
        out.results["stage_bound"] = fr_json(*rep.stage_bound);
        out.text.push_back("stage bound sup |disc|^(1/p^2) = " + rep.stage_bound->to_string() +
                           "  ~ " + rep.stage_bound->to_decimal(10));
    }
    out.emit();
    return 0;
}

int cmd_tower_build(const RunConfig& cfg, int stages) {
    CFTower tower = build_cf_tower(stages);
    Output out(cfg, "tower build", {"constr:cyclic-prime-tower", "bound:stage-disc-root-leq-3"});
    ordered_json rows = ordered_json::array();
    char line[256];
    out.text.push_back("  i   p_i   q_i   |disc|        stage value q^((p-1)/p^2)     <= 3");
    bool all_ok = true;
    for (std::size_t i = 0; i < tower.stages.size(); ++i) {
        const CFStage& s = tower.stages[i];
        ordered_json r;
        r["i"] = i + 1;
        r["p"] = s.p;
        r["q"] = s.q;
        r["abs_disc"] = s.abs_disc.to_string();
        r["stage_value"] = fr_json(s.stage_value);
        r["leq3"] = s.leq3;
        rows.push_back(r);
        all_ok = all_ok && s.leq3;
        std::snprintf(line, sizeof line, "%3zu %5llu %5llu   %-12s  %-16s ~ %-10s  %s", i + 1,
                      (unsigned long long)s.p, (unsigned long long)s.q,
                      s.abs_disc.to_string().c_str(), s.stage_value.to_string().c_str(),
                      s.stage_value.to_decimal(6).c_str(), s.leq3 ? "yes" : "NO");
        out.text.push_back(line);
    }
    out.results["stages"] = rows;
    out.results["all_leq3"] = all_ok;
    if (!all_ok) out.failures.push_back("a stage violates the <= 3 bound");
    out.emit();
    return all_ok ? 0 : int(ExitCode::counterexample);
}

int cmd_tower_scan(const RunConfig& cfg, int stages, const std::string& base_text) {
    CFTower tower = build_cf_tower(stages);
    AbelianField base = require_abelian(parse_descriptor(base_text), "tower scan");
    ScanReport rep = liminf_scan(tower, base, cfg.subset_cap);
    Output out(cfg, "tower scan",
               {"bound:cyclic-tower-sup", "id:coprime-compositum-disc", "def:gamma-prime"});
    auto mask_str = [&](std::uint32_t mask) {
        std::string s;
        for (std::size_t i = 0; i < tower.stages.size(); ++i)
            if (mask & (1u << i)) {
                if (!s.empty()) s += ",";
                s += std::to_string(tower.stages[i].p);
            }
        return s.empty() ? std::string("-") : s;
    };
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const ScanRow& r = rep.rows[i];
        ordered_json jr;
        jr["stages"] = mask_str(r.subset_mask);
        jr["degree"] = r.degree;
        jr["gamma_prime_sup"] = fr_json(r.sup_value);
        jr["witness_stages"] = mask_str(r.witness_mask);
        jr["witness_degree"] = r.witness_degree;
        jr["is_max"] = (i == rep.max_row);
        rows.push_back(jr);
    }
    out.results["base"] = base.descriptor();
    out.results["rows"] = rows;
    out.results["sub_composita"] = rep.rows.size();
    out.results["pairs_checked"] = rep.pairs_checked;
    out.results["closed_form_verified"] = rep.closed_form_verified;
    out.results["max_gamma_prime"] = fr_json(rep.max_value);
    out.results["stage_bound"] = fr_json(rep.bound);
    out.results["max_leq3"] = rep.max_leq3;

    char line[256];
    std::snprintf(line, sizeof line,
                  "scanned %zu sub-composita over %d stages (base %s), %ld (M, F) pairs",
                  rep.rows.size(), stages, base.descriptor().c_str(), rep.pairs_checked);
    out.text.push_back(line);
    const ScanRow& best = rep.rows[rep.max_row];
    std::snprintf(line, sizeof line, "max gamma'(M/K) = %s  ~ %s  at stages {%s}, degree %ld",
                  rep.max_value.to_string().c_str(), rep.max_value.to_decimal(10).c_str(),
                  mask_str(best.subset_mask).c_str(), best.degree);
    out.text.push_back(line);
    out.text.push_back("stage bound sup |disc|^(1/p^2) = " + rep.bound.to_string() + "  ~ " +
                       rep.bound.to_decimal(10));
    out.text.push_back(std::string("closed-form check: ") +
                       (rep.closed_form_verified ? "exact agreement on every pair" : "MISMATCH"));
    out.text.push_back(std::string("verdict: max <= 3 ") + (rep.max_leq3 ? "holds" : "FAILS") +
                       " (exact comparison); the finite frontier plus the stage bound stand in "
                       "for the liminf");
    bool ok = rep.max_leq3 && rep.closed_form_verified;
    if (!rep.closed_form_verified) out.failures.push_back("closed-form mismatch in scan");
    if (!rep.max_leq3) out.failures.push_back("scan max exceeds 3");
    out.emit();
    return ok ? 0 : int(ExitCode::counterexample);
}

int cmd_verify(const RunConfig& cfg, FieldCache& cache, const std::string& suite, long trials) {
    static const std::map<std::string, std::string> refs{
        {"lemma21", "ineq:compositum-disc-divisibility"},
        {"prop22", "ineq:gamma-monotone-under-meet"},
        {"cor23", "cor:galois-internal-sup"},
        {"prop31", "bound:cyclic-tower-sup"}};
    auto it = refs.find(suite);
    if (it == refs.end())
        throw UsageError("verify: unknown suite '" + suite +
                         "' (expected lemma21, prop22, prop31 or cor23)");
    VerifyResult res = verify_suite(suite, trials, cfg, cache);
    Output out(cfg, "verify " + suite, {it->second});
    out.results["suite"] = suite;
    out.results["trials"] = res.trials;
    out.results["passed"] = res.passed;
    out.results["failed"] = res.failed;
    out.results["seed"] = cfg.seed;
    out.text.push_back("suite " + suite + ": " + std::to_string(res.passed) + "/" +
                       std::to_string(res.trials) + " trials passed (seed " +
                       std::to_string(cfg.seed) + ")");
    if (res.failed > 0) {
        out.failures.push_back(res.first_counterexample);
        out.text.push_back("FIRST COUNTEREXAMPLE: " + res.first_counterexample);
        out.text.push_back("a failed trial contradicts a proved statement: this is a bug");
    }
    out.emit();
    return res.failed == 0 ? 0 : int(ExitCode::counterexample);
}

int cmd_heights_enumerate(const RunConfig& cfg, int degree, const std::string& bound_text) {
    HeightBound bound = parse_bound(bound_text);
    HeightsOptions opt;
    opt.tol = cfg.tol;
    opt.screen_size = cfg.screen_size;
    opt.degree_cap = cfg.degree_cap;
    Census census = enumerate_bounded(degree, bound, opt);
    Output out(cfg, "heights enumerate",
               {"def:weil-height-mahler", "thm:finiteness-bounded-height"});
    out.results["degree"] = degree;
    out.results["bound"] = bound.to_string();
    ordered_json entries = ordered_json::array();
    std::string csv = "min_poly;degree;height_lo;height_hi;field_id;screen_N\n";
    for (const auto& e : census.entries) {
        ordered_json je;
        je["min_poly"] = poly_descriptor(e.min_poly);
        je["height"] = height_json(e.height);
        entries.push_back(je);
        csv += poly_descriptor(e.min_poly).substr(5) + ";" + std::to_string(degree) + ";" +
               rat_decimal(e.height.lo) + ";" + rat_decimal(e.height.hi) + ";;\n";
    }
    out.results["entries"] = entries;
    out.results["polynomials"] = census.polynomials();
    out.results["roots"] = census.roots();
    ordered_json amb = ordered_json::array();
    for (const auto& f : census.boundary_ambiguous) amb.push_back(poly_descriptor(f));
    out.results["boundary_ambiguous"] = amb;
    out.csv = csv;
    out.text.push_back("degree " + std::to_string(degree) + ", height < " + bound.to_string());
    for (const auto& e : census.entries)
        out.text.push_back("  " + e.min_poly.to_string() + "   h in [" +
                           rat_decimal(e.height.lo) + ", " + rat_decimal(e.height.hi) + "]");
    out.text.push_back(std::to_string(census.polynomials()) + " minimal polynomials, " +
                       std::to_string(census.roots()) + " algebraic numbers");
    if (!census.boundary_ambiguous.empty())
        out.text.push_back(std::to_string(census.boundary_ambiguous.size()) +
                           " boundary-ambiguous candidates reported separately");
    out.emit();
    return 0;
}

int cmd_heights_probe(const RunConfig& cfg, const std::string& field_text,
                      const std::string& bound_text) {
    AbelianField field = require_abelian(parse_descriptor(field_text), "heights probe");
    HeightBound bound = parse_bound(bound_text);
    HeightsOptions opt;
    opt.tol = cfg.tol;
    opt.screen_size = cfg.screen_size;
    opt.degree_cap = cfg.degree_cap;
    ProbeReport rep = min_height_probe(field, bound, opt);
    Output out(cfg, "heights probe",
               {"probe:min-height-in-stage-field", "def:weil-height-mahler"});
    out.results["field"] = field.descriptor();
    out.results["bound"] = bound.to_string();
    out.results["screen_N"] = rep.screen_size;
    ordered_json cands = ordered_json::array();
    std::string csv = "min_poly;degree;height_lo;height_hi;field_id;screen_N\n";
    auto status_str = [](ProbeCandidate::Status s) {
        switch (s) {
            case ProbeCandidate::Status::identified: return "identified (Chebotarev screen)";
            case ProbeCandidate::Status::rejected_disc: return "rejected: field discriminant";
            default: return "rejected: splitting pattern";
        }
    };
    for (const auto& c : rep.candidates) {
        ordered_json jc;
        jc["min_poly"] = poly_descriptor(c.poly);
        jc["height"] = height_json(c.height);
        jc["status"] = status_str(c.status);
        cands.push_back(jc);
        bool id = c.status == ProbeCandidate::Status::identified;
        csv += poly_descriptor(c.poly).substr(5) + ";" + std::to_string(field.degree) + ";" +
               rat_decimal(c.height.lo) + ";" + rat_decimal(c.height.hi) + ";" +
               (id ? field.descriptor() : "") + ";" + std::to_string(rep.screen_size) + "\n";
        out.text.push_back("  " + c.poly.to_string() + "   h in [" + rat_decimal(c.height.lo) +
                           ", " + rat_decimal(c.height.hi) + "]   " + status_str(c.status));
    }
    out.results["candidates"] = cands;
    out.csv = csv;
    if (rep.none_below) {
        out.results["min_height"] = "none below bound";
        out.text.push_back("none below " + bound.to_string() + ": inf over " +
                           field.descriptor() + " \\ Q of h is >= the bound");
    } else {
        out.results["min_height"] = height_json(*rep.min_height);
        out.results["witness"] = poly_descriptor(*rep.witness);
        out.text.push_back("min height in [" + rat_decimal(rep.min_height->lo) + ", " +
                           rat_decimal(rep.min_height->hi) + "] attained by " +
                           rep.witness->to_string());
    }
    out.emit();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with discriminant-growth invariants of number fields"};
    app.footer(
        "exit codes: 0 ok, 2 usage or bad descriptor, 3 configured cap exceeded,\n"
        "            4 verification counterexample (a proved statement failed: bug),\n"
        "            5 unrecoverable cache corruption");
    app.require_subcommand(1);

    std::string config_file;
    std::map<std::string, std::string> overrides;
    app.add_option("--config", config_file, "key = value configuration file");

    auto add_override = [&](const std::string& flag, const std::string& key,
                            const std::string& help) {
        app.add_option_function<std::string>(
               flag, [&overrides, key](const std::string& v) { overrides[key] = v; }, help)
            ->expected(1);
    };
    add_override("--format", "format", "output format: text, json or csv");
    add_override("--cache-dir", "cache_dir", "directory for the field cache");
    add_override("--seed", "seed", "seed for randomized suites");
    add_override("--threads", "threads", "worker threads (0 = available parallelism)");
    add_override("--degree-cap", "degree_cap", "maximal field degree");
    add_override("--subgroup-cap", "subgroup_cap", "maximal [M:K] in subgroup enumeration");
    add_override("--subset-cap", "subset_cap", "maximal tower stages in a scan");
    add_override("--screen", "screen_size", "splitting-screen prime count");
    add_override("--tol", "tol", "height interval tolerance");
    app.add_flag_callback("--deterministic",
                          [&overrides] { overrides["deterministic"] = "1"; },
                          "suppress timestamps; byte-identical reruns");
    app.add_flag_callback("--no-cache", [&overrides] { overrides["no_cache"] = "1"; },
                          "bypass the on-disk cache");
    app.add_flag_callback("--cache-audit", [&overrides] { overrides["cache_audit"] = "1"; },
                          "recompute on cache hits and compare");

    // field info
    auto* field = app.add_subcommand("field", "field inspection");
    field->require_subcommand(1);
    field->fallthrough();
    auto* info = field->add_subcommand("info", "degree, conductor/min-poly, |disc| factored");
    info->fallthrough();
    std::string info_desc;
    info->add_option("descriptor", info_desc,
                     "Q | sqrt<d> | zeta<n> | cyclic(q,p) | m=..;H=.. | poly=c0,c1,...")
        ->required();

    // gamma
    auto* gamma_cmd = app.add_subcommand("gamma", "gamma_M(F), exact and decimal");
    gamma_cmd->fallthrough();
    std::string gm, gf;
    gamma_cmd->add_option("--M", gm, "field M")->required();
    gamma_cmd->add_option("--F", gf, "field F")->required();

    // gamma-prime
    auto* gp_cmd = app.add_subcommand("gamma-prime", "gamma'(M/K) over all intermediate fields");
    gp_cmd->fallthrough();
    std::string gpm, gpk = "Q";
    gp_cmd->add_option("--M", gpm, "abelian field M")->required();
    gp_cmd->add_option("--K", gpk, "abelian base K (default Q)");

    // tower build / scan
    auto* tower = app.add_subcommand("tower", "cyclic prime-degree tower");
    tower->require_subcommand(1);
    tower->fallthrough();
    auto* tb = tower->add_subcommand("build", "stage table with the <= 3 verdicts");
    tb->fallthrough();
    int tb_stages = 1;
    tb->add_option("--stages", tb_stages, "number of stages")->required();
    auto* ts = tower->add_subcommand("scan", "gamma' over every sub-compositum");
    ts->fallthrough();
    int ts_stages = 1;
    std::string ts_base = "Q";
    ts->add_option("--stages", ts_stages, "number of stages")->required();
    ts->add_option("--base", ts_base, "base field K (a sub-compositum; default Q)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "randomized property suites");
    verify_cmd->fallthrough();
    std::string suite;
    long trials = 200;
    verify_cmd->add_option("suite", suite, "lemma21 | prop22 | prop31 | cor23")->required();
    verify_cmd->add_option("--trials", trials, "number of trials (default 200)");

    // heights
    auto* heights = app.add_subcommand("heights", "Weil height census and probes");
    heights->require_subcommand(1);
    heights->fallthrough();
    auto* he = heights->add_subcommand("enumerate", "all degree-d numbers of height < bound");
    he->fallthrough();
    int he_degree = 1;
    std::string he_bound;
    he->add_option("--degree", he_degree, "exact degree")->required();
    he->add_option("--bound", he_bound, "height bound: decimal or log:<rational>")->required();
    auto* hp = heights->add_subcommand("probe", "minimum height in a prime-degree abelian field");
    hp->fallthrough();
    std::string hp_field, hp_bound;
    hp->add_option("--field", hp_field, "abelian field of prime degree")->required();
    hp->add_option("--bound", hp_bound, "height bound: decimal or log:<rational>")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return int(ExitCode::usage);
    }

    try {
        RunConfig cfg = load_config(config_file, overrides);
        FieldCache cache(cfg.no_cache ? "" : cfg.cache_dir, cfg.cache_audit);
        if (info->parsed()) return cmd_field_info(cfg, cache, info_desc);
        if (gamma_cmd->parsed()) return cmd_gamma(cfg, cache, gm, gf);
        if (gp_cmd->parsed()) return cmd_gamma_prime(cfg, gpm, gpk);
        if (tb->parsed()) return cmd_tower_build(cfg, tb_stages);
        if (ts->parsed()) return cmd_tower_scan(cfg, ts_stages, ts_base);
        if (verify_cmd->parsed()) return cmd_verify(cfg, cache, suite, trials);
        if (he->parsed()) return cmd_heights_enumerate(cfg, he_degree, he_bound);
        if (hp->parsed()) return cmd_heights_probe(cfg, hp_field, hp_bound);
        throw UsageError("no subcommand given");
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return int(e.code);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
