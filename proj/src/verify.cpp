#include "gammalab/verify.hpp"

#include "gammalab/errors.hpp"
#include "gammalab/gamma.hpp"
#include "gammalab/numfield.hpp"
#include "gammalab/parallel.hpp"
#include "gammalab/polyfactor.hpp"

#include <random>
#include <sstream>

namespace gammalab {

namespace {

std::mt19937_64 trial_rng(std::uint64_t seed, long index) {
    return std::mt19937_64(seed * 0x9e3779b97f4a7c15ull + 0x517cc1b727220a95ull * (index + 1));
}

// random monic irreducible squarefree polynomial, degree 2..4, coeffs in [-3,3]
IntPoly random_small_field_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dd(2, 4), dc(-3, 3);
    while (true) {
        int deg = dd(rng);
        std::vector<BigInt> c(deg + 1);
        for (int i = 0; i < deg; ++i) c[i] = dc(rng);
        c[deg] = 1;
        IntPoly f(std::move(c));
        if (!is_squarefree(f)) continue;
        if (!is_irreducible_over_Q(f)) continue;
        return f;
    }
}

// random canonical abelian field with small conductor and degree <= 12
AbelianField random_abelian(std::mt19937_64& rng) {
    while (true) {
        std::uint64_t m = 3 + rng() % 46;
        std::vector<std::uint64_t> gens;
        for (int i = 0; i < 2; ++i) {
            std::uint64_t x = 1 + rng() % m;
            int guard = 0;
            while (std::gcd(x, m) != 1 && ++guard < 200) x = 1 + rng() % m;
            if (std::gcd(x, m) == 1) gens.push_back(x);
        }
        AbelianField f = make_abelian(m, gens);
        if (f.degree <= 12) return f;
    }
}

struct TrialOutcome {
    bool ok = true;
    std::string detail;
};

TrialOutcome lemma21_trial(std::mt19937_64& rng, const RunConfig& cfg, FieldCache& cache) {
    IntPoly f, g;
    while (true) {
        f = random_small_field_poly(rng);
        g = random_small_field_poly(rng);
        if (gcd(discriminant(f), discriminant(g)) == 1) break;
    }
    FieldSummary l = cache.build(f, cfg);
    FieldSummary lp = cache.build(g, cfg);
    IntPoly comp = compositum_polynomial(f, g, cfg.degree_cap);
    FieldSummary llp = cache.build(comp, cfg);

    BigInt lhs = abs(llp.disc);
    BigInt rhs = ipow(abs(l.disc), (unsigned long)(llp.degree / l.degree)) *
                 ipow(abs(lp.disc), (unsigned long)(llp.degree / lp.degree));
    if (mpz_divisible_p(rhs.get_mpz_t(), lhs.get_mpz_t())) return {};
    std::ostringstream os;
    os << "L: " << f.to_string() << " (disc " << l.disc.get_str() << "), L': " << g.to_string()
       << " (disc " << lp.disc.get_str() << "), LL' disc " << llp.disc.get_str() << ": " << "N(D_{LL'/Q}) = "
       << lhs.get_str() << " does not divide " << rhs.get_str();
    return {false, os.str()};
}

TrialOutcome prop22_trial(std::mt19937_64& rng, const RunConfig& cfg) {
    AbelianField m = random_abelian(rng);
    if (rng() % 2) {
        AbelianField extra = random_abelian(rng);
        if (m.degree * extra.degree <= 16) m = join(m, extra);
    }
    AbelianField f = random_abelian(rng);
    AbelianField e = meet(m, f);
    if (!linearly_disjoint(m, f, e)) {
        return {false, "linear disjointness over the meet failed for M = " + m.descriptor() +
                           ", F = " + f.descriptor()};
    }
    AbelianField mf = join(m, f);
    FactoredReal g_f =
        gamma_value(abelian_disc(f), abelian_disc(mf), BigInt(mf.degree), BigInt(f.degree));
    FactoredReal g_e =
        gamma_value(abelian_disc(e), abelian_disc(m), BigInt(m.degree), BigInt(e.degree));
    if (g_f > g_e)
        return {false, "gamma_M(F) = " + g_f.to_string() + " > gamma_M(M n F) = " +
                           g_e.to_string() + " for M = " + m.descriptor() +
                           ", F = " + f.descriptor()};
    GammaReport prime = gamma_prime(m, rationals(), cfg.subgroup_cap);
    if (g_e > prime.sup_value)
        return {false, "gamma_M(M n F) = " + g_e.to_string() + " > gamma'(M/Q) = " +
                           prime.sup_value.to_string() + " for M = " + m.descriptor() +
                           ", F = " + f.descriptor()};
    return {};
}

TrialOutcome cor23_trial(std::mt19937_64& rng, const RunConfig& cfg) {
    AbelianField m = random_abelian(rng);
    std::vector<AbelianField> all = default_external_sample(m, rationals());
    std::vector<AbelianField> picked;
    for (int i = 0; i < 12 && !all.empty(); ++i) picked.push_back(all[rng() % all.size()]);
    ExternalSampleReport rep = gamma_external_sample(m, rationals(), picked, cfg.subgroup_cap);
    for (const auto& s : rep.samples) {
        if (s.gamma_f > rep.prime.sup_value)
            return {false, "external F = " + s.field.descriptor() + " has gamma_M(F) = " +
                               s.gamma_f.to_string() + " > gamma'(M/Q) = " +
                               rep.prime.sup_value.to_string() + " for M = " + m.descriptor()};
        if (!s.chain_ok)
            return {false, "chain gamma_M(F) <= gamma_M(M n F) <= gamma'(M/Q) failed for M = " +
                               m.descriptor() + ", F = " + s.field.descriptor()};
    }
    return {};
}

TrialOutcome prop31_trial(std::mt19937_64& rng, const RunConfig& cfg) {
    int n = 2 + int(rng() % 4);
    CFTower tower = build_cf_tower(n);
    std::uint32_t base_mask = std::uint32_t(rng() % (1u << (n - 1)));  // proper subset
    AbelianField base = rationals();
    for (int i = 0; i < n; ++i)
        if (base_mask & (1u << i)) base = join(base, tower.stages[i].field);
    ScanReport rep = liminf_scan(tower, base, cfg.subset_cap);
    if (!rep.closed_form_verified)
        return {false, "closed form mismatch in a scan with " + std::to_string(n) +
                           " stages, base " + base.descriptor()};
    if (rep.max_value > rep.bound)
        return {false, "scan max " + rep.max_value.to_string() + " exceeds the stage bound " +
                           rep.bound.to_string()};
    if (!rep.max_leq3)
        return {false, "scan max " + rep.max_value.to_string() + " exceeds 3"};
    return {};
}

} // namespace

VerifyResult verify_suite(const std::string& suite, long trials, const RunConfig& cfg,
                          FieldCache& cache) {
    if (trials < 1) throw UsageError("verify: trials must be >= 1");
    VerifyResult res;
    res.suite = suite;
    res.trials = trials;
    std::vector<TrialOutcome> outcomes(trials);

    std::function<TrialOutcome(std::mt19937_64&)> body;
    if (suite == "lemma21")
        body = [&](std::mt19937_64& rng) { return lemma21_trial(rng, cfg, cache); };
    else if (suite == "prop22")
        body = [&](std::mt19937_64& rng) { return prop22_trial(rng, cfg); };
    else if (suite == "cor23")
        body = [&](std::mt19937_64& rng) { return cor23_trial(rng, cfg); };
    else if (suite == "prop31")
        body = [&](std::mt19937_64& rng) { return prop31_trial(rng, cfg); };
    else
        throw UsageError("verify: unknown suite '" + suite +
                         "' (expected lemma21, prop22, prop31 or cor23)");

    parallel_for(trials, cfg.threads, [&](long i) {
        std::mt19937_64 rng = trial_rng(cfg.seed, i);
        outcomes[i] = body(rng);
    });

    for (long i = 0; i < trials; ++i) {
        if (outcomes[i].ok) {
            ++res.passed;
        } else {
            ++res.failed;
            if (res.first_counterexample.empty())
                res.first_counterexample =
                    "trial " + std::to_string(i) + ": " + outcomes[i].detail;
        }
    }
    return res;
}

} // namespace gammalab
