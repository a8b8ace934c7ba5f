#ifndef GAMMALAB_POLYFACTOR_HPP
#define GAMMALAB_POLYFACTOR_HPP

#include "gammalab/intpoly.hpp"

#include <cstdint>
#include <vector>

namespace gammalab {

struct QFactorization {
    BigRat unit;  // f = unit * prod factors[i].first ^ factors[i].second
    std::vector<std::pair<IntPoly, int>> factors;  // primitive, irreducible, lc > 0, sorted
};

/* Complete factorization over Q: squarefree decomposition, then for each
 * part factorization modulo the smallest prime not dividing lc*disc
 * (distinct-degree plus equal-degree splitting), Hensel lifting to a
 * Landau-Mignotte height bound, and subset recombination. Deterministic:
 * the equal-degree splitting draws from a stream seeded by the polynomial.
 */
QFactorization factor_over_Q(const IntPoly& f);

bool is_irreducible_over_Q(const IntPoly& f);

// Degrees (with multiplicity) of the irreducible factors of f mod p,
// in increasing order. Requires f mod p nonzero.
std::vector<int> factor_degrees_mod_p(const IntPoly& f, std::uint64_t p);

// True iff f splits into deg(f) distinct linear factors mod p.
bool splits_completely_mod_p(const IntPoly& f, std::uint64_t p);

// True iff f has a root mod p (gcd with x^p - x is nonconstant).
bool has_root_mod_p(const IntPoly& f, std::uint64_t p);

} // namespace gammalab

#endif
