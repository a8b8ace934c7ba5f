#ifndef GAMMALAB_GAMMA_HPP
#define GAMMALAB_GAMMA_HPP

#include "gammalab/abelian.hpp"
#include "gammalab/factored_real.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gammalab {

/* gamma_M(F) = |disc(MF)|^(1/([MF:Q][MF:F])) / |disc(F)|^(1/[MF:Q]),
 * evaluated exactly from absolute-discriminant values and degrees.
 * deg_F must divide deg_MF.
 */
FactoredReal gamma_value(const FactoredReal& disc_F, const FactoredReal& disc_MF,
                         const BigInt& deg_MF, const BigInt& deg_F);

struct GammaEntry {
    AbelianField field;  // F
    FactoredReal value;  // gamma_M(F)
};

struct GammaReport {
    AbelianField base;   // K
    AbelianField field;  // M
    std::vector<GammaEntry> entries;  // canonical (degree, conductor, H) order
    FactoredReal sup_value;
    std::size_t sup_index = 0;  // first maximizer in canonical order
    // sup_i |disc(L_i)|^(1/p_i^2) when M decomposes into prime-degree stages
    // with pairwise coprime discriminants (base Q); absent otherwise
    std::optional<FactoredReal> stage_bound;
    const AbelianField& sup_witness() const { return entries[sup_index].field; }
};

// gamma'(M/K): the sup of gamma_M(F) over the intermediate fields K c F c M.
GammaReport gamma_prime(const AbelianField& M, const AbelianField& K, long subgroup_cap = 4096);

struct ExternalSample {
    AbelianField field;        // F (contains K)
    AbelianField meet_with_m;  // M n F
    FactoredReal gamma_f;      // gamma_M(F)
    FactoredReal gamma_meet;   // gamma_M(M n F)
    bool chain_ok = false;     // gamma_f <= gamma_meet <= gamma'(M/K)
};

struct ExternalSampleReport {
    GammaReport prime;
    std::vector<ExternalSample> samples;
    bool all_ok = true;
};

/* Executable content of the compositum inequality and its corollary:
 * every external F yields gamma_M(F) <= gamma_M(M n F) <= gamma'(M/K).
 * Any violation is a theorem counterexample, i.e. a bug.
 */
ExternalSampleReport gamma_external_sample(const AbelianField& M, const AbelianField& K,
                                           const std::vector<AbelianField>& samples,
                                           long subgroup_cap = 4096);

// quadratic fields with small squarefree d plus small cyclic prime-degree
// fields, joined up to K, minus anything contained in M
std::vector<AbelianField> default_external_sample(const AbelianField& M, const AbelianField& K);

// sup of |disc(L_i)|^(1/p_i^2) over fields of distinct prime degrees p_i with
// pairwise coprime discriminants (both conditions checked).
FactoredReal prop_3_1_bound(const std::vector<AbelianField>& stages);

struct CFStage {
    std::uint64_t p, q;        // q = 1 (mod p), q prime
    AbelianField field;        // cyclic_subfield(q, p)
    FactoredReal abs_disc;     // q^(p-1)
    FactoredReal stage_value;  // q^((p-1)/p^2)
    bool leq3 = false;         // stage_value <= 3, exact
};

struct CFTower {
    std::vector<CFStage> stages;
};

/* For the first n primes p_i, the least unused prime q_i = 1 (mod p_i) with
 * q_i^(p_i-1) <= 3^(p_i^2), exactly. Every stage satisfies the <= 3 bound by
 * construction; search-bound exhaustion is reported, never skipped.
 */
CFTower build_cf_tower(int n);

struct ScanRow {
    std::uint32_t subset_mask = 0;  // stages joined into M
    long degree = 0;                // [M:Q]
    FactoredReal sup_value;         // gamma'(M/K)
    std::uint32_t witness_mask = 0; // stage support of the witness F
    long witness_degree = 0;
};

struct ScanReport {
    std::vector<ScanRow> rows;  // one per scanned sub-compositum, canonical order
    FactoredReal max_value;
    std::size_t max_row = 0;
    FactoredReal bound;    // prop_3_1_bound over the tower stages
    bool max_leq3 = false; // exact verdict against the integer 3
    long pairs_checked = 0;
    bool closed_form_verified = false;  // direct evaluation == |disc M'|^(1/[M':Q]^2) everywhere
};

/* Enumerates every sub-compositum M (join of a nonempty stage subset
 * containing K's support) and computes gamma'(M/K) through the subset
 * structure: subfields of a squarefree-cyclic compositum correspond to stage
 * subsets, and discriminants multiply across coprime stages. Each gamma value
 * is evaluated both directly and by the closed form |disc M'|^(1/[M':Q]^2)
 * and the two are required to agree exactly.
 */
ScanReport liminf_scan(const CFTower& tower, const AbelianField& K, int subset_cap = 12);

} // namespace gammalab

#endif
