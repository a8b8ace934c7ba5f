#ifndef GAMMALAB_ABELIAN_HPP
#define GAMMALAB_ABELIAN_HPP

#include "gammalab/factored_real.hpp"
#include "gammalab/intpoly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gammalab {

/* An abelian number field as the fixed field of H <= (Z/mZ)* acting on
 * Q(zeta_m). Canonical: m is the conductor and H is stored as the sorted
 * full element list. Q is (1, {0}).
 */
struct AbelianField {
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> subgroup{0};
    long degree = 1;

    bool operator==(const AbelianField& o) const {
        return modulus == o.modulus && subgroup == o.subgroup;
    }
    // canonical order for reports: (degree, conductor, subgroup lex)
    bool operator<(const AbelianField& o) const {
        if (degree != o.degree) return degree < o.degree;
        if (modulus != o.modulus) return modulus < o.modulus;
        return subgroup < o.subgroup;
    }

    bool is_rationals() const { return modulus == 1; }
    std::string descriptor() const;  // "m=24;H=1,23"
};

AbelianField rationals();

// Canonicalizes: closes the generator set, minimizes the conductor.
AbelianField make_abelian(std::uint64_t modulus, const std::vector<std::uint64_t>& subgroup_gens);

// The unique degree-p subfield of Q(zeta_q), q prime, q = 1 (mod p).
AbelianField cyclic_subfield(std::uint64_t q, std::uint64_t p);

// Q(sqrt d), d squarefree, d != 0, 1.
AbelianField quadratic_field(long d);

AbelianField cyclotomic_field(std::uint64_t n);

// compositum: lift to lcm modulus, intersect the fixing subgroups
AbelianField join(const AbelianField& a, const AbelianField& b);

// intersection: reduce to gcd modulus, generate from both images
AbelianField meet(const AbelianField& a, const AbelianField& b);

bool is_subfield(const AbelianField& sub, const AbelianField& super);

/* All F with K subset F subset M, endpoints included, in canonical order.
 * Enumerates subgroups between the fixing groups; [M:K] is capped by
 * subgroup_cap and the materialized element lists by an internal budget.
 */
std::vector<AbelianField> intermediate_fields(const AbelianField& K, const AbelianField& M,
                                              long subgroup_cap = 4096);

// |Delta| by conductor-discriminant: the product of the conductors of the
// degree-many characters of (Z/m)*/H.
FactoredReal abelian_disc(const AbelianField& a);

// degree multiplicativity over the meet, with meet(a, b) == over
bool linearly_disjoint(const AbelianField& a, const AbelianField& b, const AbelianField& over);

struct GeneratorPoly {
    IntPoly poly;
    int fallback_level = 1;  // 1 = plain Gaussian period; >1 noted in reports
};

/* Minimal polynomial over Q of the Gaussian period sum_{h in H} zeta_m^h,
 * expanded exactly in Z[Y]/(Y^m - 1) and reduced mod the m-th cyclotomic
 * polynomial. A degenerate period (non-squarefree product) retries with the
 * invariant sums sum_h sum_{j<=t} zeta^{j c h}, t = 2..8.
 */
GeneratorPoly generator_polynomial(const AbelianField& a, int degree_cap = 24);

// Parses the canonical textual form "m=<conductor>;H=<residues>", braces
// optional around the residue list.
AbelianField parse_abelian(const std::string& text);

} // namespace gammalab

#endif
