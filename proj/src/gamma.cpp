#include "gammalab/gamma.hpp"

#include "gammalab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace gammalab {

namespace {

using u64 = std::uint64_t;

const FactoredReal& three() {
    static const FactoredReal t = FactoredReal::from_integer(3);
    return t;
}

} // namespace

FactoredReal gamma_value(const FactoredReal& disc_F, const FactoredReal& disc_MF,
                         const BigInt& deg_MF, const BigInt& deg_F) {
    if (deg_F <= 0 || deg_MF <= 0 || !mpz_divisible_p(deg_MF.get_mpz_t(), deg_F.get_mpz_t()))
        throw UsageError("gamma_value: [F:Q] must divide [MF:Q]");
    BigInt rel = deg_MF / deg_F;  // [MF:F]
    BigRat e_mf = make_rat(BigInt(1), BigInt(deg_MF * rel));
    BigRat e_f = make_rat(BigInt(1), deg_MF);
    return disc_MF.pow(e_mf) / disc_F.pow(e_f);
}

GammaReport gamma_prime(const AbelianField& M, const AbelianField& K, long subgroup_cap) {
    GammaReport rep;
    rep.base = K;
    rep.field = M;
    FactoredReal disc_M = abelian_disc(M);
    std::vector<AbelianField> fields = intermediate_fields(K, M, subgroup_cap);
    rep.entries.reserve(fields.size());
    for (auto& f : fields) {
        // F subset M, so MF = M
        FactoredReal g = gamma_value(abelian_disc(f), disc_M, BigInt(M.degree), BigInt(f.degree));
        rep.entries.push_back({std::move(f), std::move(g)});
    }
    rep.sup_index = 0;
    rep.sup_value = rep.entries[0].value;
    for (std::size_t i = 1; i < rep.entries.size(); ++i) {
        if (rep.entries[i].value > rep.sup_value) {
            rep.sup_value = rep.entries[i].value;
            rep.sup_index = i;
        }
    }

    // stage bound, when M splits into prime-degree pieces over Q
    if (K.is_rationals() && M.degree > 1) {
        BigInt deg(M.degree);
        bool squarefree_degree = true;
        std::vector<AbelianField> stages;
        for (const auto& [p, e] : factor_map(deg))
            if (e > 1) squarefree_degree = false;
        if (squarefree_degree) {
            for (const auto& entry : rep.entries)
                if (entry.field.degree > 1 && is_prime(BigInt(entry.field.degree)) &&
                    M.degree % entry.field.degree == 0)
                    stages.push_back(entry.field);
        }
        if (squarefree_degree && !stages.empty()) {
            try {
                rep.stage_bound = prop_3_1_bound(stages);
            } catch (const Error&) {
                // discriminants share a prime (or a cap bites): not applicable
            }
        }
    }
    return rep;
}

std::vector<AbelianField> default_external_sample(const AbelianField& M, const AbelianField& K) {
    std::vector<AbelianField> raw;
    for (long d = -30; d <= 30; ++d) {
        if (d == 0 || d == 1) continue;
        bool squarefree = true;
        for (long s = 2; s * s <= std::abs(d); ++s)
            if (d % (s * s) == 0) {
                squarefree = false;
                break;
            }
        if (squarefree) raw.push_back(quadratic_field(d));
    }
    for (auto [q, p] : std::vector<std::pair<u64, u64>>{
             {5, 2}, {7, 3}, {11, 5}, {13, 3}, {29, 7}, {31, 5}})
        raw.push_back(cyclic_subfield(q, p));

    std::vector<AbelianField> out;
    for (const auto& f : raw) {
        AbelianField lifted = join(f, K);  // ensure F contains K
        if (is_subfield(lifted, M)) continue;
        if (std::find(out.begin(), out.end(), lifted) == out.end()) out.push_back(lifted);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ExternalSampleReport gamma_external_sample(const AbelianField& M, const AbelianField& K,
                                           const std::vector<AbelianField>& samples,
                                           long subgroup_cap) {
    ExternalSampleReport rep;
    rep.prime = gamma_prime(M, K, subgroup_cap);
    FactoredReal disc_M = abelian_disc(M);
    for (const auto& f : samples) {
        if (!is_subfield(K, f))
            throw UsageError("gamma_external_sample: sample does not contain the base");
        ExternalSample s;
        s.field = f;
        AbelianField mf = join(M, f);
        s.meet_with_m = meet(M, f);
        s.gamma_f = gamma_value(abelian_disc(f), abelian_disc(mf), BigInt(mf.degree),
                                BigInt(f.degree));
        s.gamma_meet = gamma_value(abelian_disc(s.meet_with_m), disc_M, BigInt(M.degree),
                                   BigInt(s.meet_with_m.degree));
        s.chain_ok = s.gamma_f <= s.gamma_meet && s.gamma_meet <= rep.prime.sup_value;
        rep.all_ok = rep.all_ok && s.chain_ok;
        rep.samples.push_back(std::move(s));
    }
    return rep;
}

FactoredReal prop_3_1_bound(const std::vector<AbelianField>& stages) {
    if (stages.empty()) throw UsageError("prop_3_1_bound: empty stage list");
    std::vector<long> degrees;
    std::vector<FactoredReal> discs;
    for (const auto& f : stages) {
        if (!is_prime(BigInt(f.degree)))
            throw UsageError("prop_3_1_bound: degree " + std::to_string(f.degree) +
                             " is not prime");
        degrees.push_back(f.degree);
        discs.push_back(abelian_disc(f));
    }
    std::sort(degrees.begin(), degrees.end());
    if (std::adjacent_find(degrees.begin(), degrees.end()) != degrees.end())
        throw UsageError("prop_3_1_bound: degrees are not distinct");
    for (std::size_t i = 0; i < discs.size(); ++i)
        for (std::size_t j = i + 1; j < discs.size(); ++j)
            if (!discs[i].coprime_to(discs[j]))
                throw UsageError("prop_3_1_bound: discriminants are not pairwise coprime");

    FactoredReal best;
    bool first = true;
    for (std::size_t i = 0; i < stages.size(); ++i) {
        BigInt p2 = BigInt(stages[i].degree) * BigInt(stages[i].degree);
        FactoredReal v = discs[i].pow(make_rat(BigInt(1), p2));
        if (first || v > best) {
            best = v;
            first = false;
        }
    }
    return best;
}

CFTower build_cf_tower(int n) {
    if (n < 1) throw UsageError("build_cf_tower: need at least one stage");
    if (n > 64) throw CapError("build_cf_tower: stage cap is 64");
    CFTower tower;
    std::vector<u64> used;
    BigInt p(1);
    for (int i = 0; i < n; ++i) {
        p = next_prime(p);
        u64 pu = p.get_ui();
        // least unused prime q = 1 (mod p) with q^(p-1) <= 3^(p^2)
        BigInt three_pow = ipow(BigInt(3), pu * pu);
        BigInt q(1);
        bool found = false;
        while (true) {
            q = next_prime(q);
            if (ipow(q, pu - 1) > three_pow) break;
            if ((q - 1) % p != 0) continue;
            if (std::find(used.begin(), used.end(), q.get_ui()) != used.end()) continue;
            found = true;
            break;
        }
        if (!found)
            throw Error(ExitCode::cap_exceeded,
                        "build_cf_tower: no admissible prime q for p = " + std::to_string(pu) +
                            " below the search bound");
        u64 qu = q.get_ui();
        used.push_back(qu);
        CFStage stage;
        stage.p = pu;
        stage.q = qu;
        stage.field = cyclic_subfield(qu, pu);
        stage.abs_disc = FactoredReal::prime_power(q, BigRat(static_cast<unsigned long>(pu - 1)));
        stage.stage_value =
            FactoredReal::prime_power(q, make_rat(BigInt(pu - 1), BigInt(pu) * BigInt(pu)));
        stage.leq3 = stage.stage_value <= three();
        tower.stages.push_back(std::move(stage));
    }
    return tower;
}

namespace {

// degree and conductor of a stage subset; degrees fit in long for n <= 12
long subset_degree(const CFTower& t, std::uint32_t mask) {
    long d = 1;
    for (std::size_t i = 0; i < t.stages.size(); ++i)
        if (mask & (1u << i)) d *= long(t.stages[i].p);
    return d;
}

// |disc| of the join of a stage subset: coprime conductors, so the stage
// discriminants multiply with exponents [L_S : L_i]
FactoredReal subset_disc(const CFTower& t, std::uint32_t mask, long deg) {
    FactoredReal::Map m;
    for (std::size_t i = 0; i < t.stages.size(); ++i)
        if (mask & (1u << i)) {
            long pi = long(t.stages[i].p);
            BigInt e = BigInt(pi - 1) * BigInt(deg / pi);
            m[BigInt(static_cast<unsigned long>(t.stages[i].q))] = BigRat(e);
        }
    return FactoredReal::from_map(std::move(m));
}

// closed form gamma_M(F) = |disc M'|^(1/[M':Q]^2) for M' the complement subset
FactoredReal closed_form_gamma(const CFTower& t, std::uint32_t complement_mask) {
    long d = subset_degree(t, complement_mask);
    return subset_disc(t, complement_mask, d).pow(make_rat(BigInt(1), BigInt(d) * BigInt(d)));
}

} // namespace

ScanReport liminf_scan(const CFTower& tower, const AbelianField& K, int subset_cap) {
    int n = int(tower.stages.size());
    if (n > subset_cap)
        throw CapError("liminf_scan: " + std::to_string(n) + " stages exceed subset cap " +
                       std::to_string(subset_cap));

    // support of K among the stages, validated by reconstruction
    std::uint32_t base_mask = 0;
    for (int i = 0; i < n; ++i)
        if (K.degree % long(tower.stages[i].p) == 0) base_mask |= (1u << i);
    {
        AbelianField rebuilt = rationals();
        for (int i = 0; i < n; ++i)
            if (base_mask & (1u << i)) rebuilt = join(rebuilt, tower.stages[i].field);
        if (!(rebuilt == K))
            throw UsageError("liminf_scan: base is not a sub-compositum of the tower");
    }

    // canonical order: by degree (stage-subset degrees are distinct)
    std::vector<std::uint32_t> supersets;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
        if ((mask & base_mask) == base_mask) supersets.push_back(mask);
    std::sort(supersets.begin(), supersets.end(), [&](std::uint32_t a, std::uint32_t b) {
        return subset_degree(tower, a) < subset_degree(tower, b);
    });

    ScanReport rep;
    rep.closed_form_verified = true;
    bool first_row = true;
    for (std::uint32_t s_mask : supersets) {
        long deg_m = subset_degree(tower, s_mask);
        FactoredReal disc_m = subset_disc(tower, s_mask, deg_m);

        // intermediate fields F of M/K are the subsets base_mask <= T <= S
        std::vector<std::uint32_t> subs;
        std::uint32_t free_mask = s_mask & ~base_mask;
        for (std::uint32_t t = free_mask;; t = (t - 1) & free_mask) {
            subs.push_back(t | base_mask);
            if (t == 0) break;
        }
        std::sort(subs.begin(), subs.end(), [&](std::uint32_t a, std::uint32_t b) {
            return subset_degree(tower, a) < subset_degree(tower, b);
        });

        ScanRow row;
        row.subset_mask = s_mask;
        row.degree = deg_m;
        bool first = true;
        for (std::uint32_t t_mask : subs) {
            long deg_f = subset_degree(tower, t_mask);
            FactoredReal disc_f = subset_disc(tower, t_mask, deg_f);
            FactoredReal direct = gamma_value(disc_f, disc_m, BigInt(deg_m), BigInt(deg_f));
            FactoredReal closed = closed_form_gamma(tower, s_mask & ~t_mask);
            if (!(direct == closed)) rep.closed_form_verified = false;
            ++rep.pairs_checked;
            if (first || direct > row.sup_value) {
                row.sup_value = direct;
                row.witness_mask = t_mask;
                row.witness_degree = deg_f;
                first = false;
            }
        }
        if (first_row || row.sup_value > rep.max_value) {
            rep.max_value = row.sup_value;
            rep.max_row = rep.rows.size();
            first_row = false;
        }
        rep.rows.push_back(std::move(row));
    }

    std::vector<AbelianField> stage_fields;
    for (const auto& s : tower.stages) stage_fields.push_back(s.field);
    rep.bound = prop_3_1_bound(stage_fields);
    rep.max_leq3 = rep.max_value <= three();
    return rep;
}

} // namespace gammalab
