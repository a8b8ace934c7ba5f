#ifndef GAMMALAB_NUMFIELD_HPP
#define GAMMALAB_NUMFIELD_HPP

#include "gammalab/intpoly.hpp"
#include "gammalab/linalg.hpp"

#include <string>

namespace gammalab {

/* A number field K = Q[x]/(f) with its maximal order.
 * `basis` rows are an integral basis of O_K written in the power basis
 * 1, theta, ..., theta^(n-1); lower-triangular positive HNF over a common
 * denominator. disc(f) = index^2 * disc.
 */
struct NumberField {
    IntPoly min_poly;
    int degree = 0;
    QMat basis;
    BigInt disc;   // signed
    BigInt index;  // [O_K : Z[theta]]

    BigInt abs_disc() const { return abs(disc); }
    std::string descriptor() const;  // "poly=c0,c1,..."
};

struct BuildOptions {
    int degree_cap = 24;
    bool check_irreducible = true;  // callers that already certified f may skip
};

// Round 2 (Pohst-Zassenhaus): start from Z[theta] and enlarge at every prime
// whose square divides disc(f) until p-maximal.
NumberField build_field(const IntPoly& f, const BuildOptions& opt = {});

struct CompositumResult {
    NumberField field;
    bool linearly_disjoint = true;  // false: non-linearly-disjoint embedding choice
    int shift = 1;                  // k such that alpha + k*beta generates
};

/* Field generated by alpha + k*beta for the least k >= 1 making
 * Res_y(f(y), g(x - k y)) squarefree. Irreducible characteristic polynomial
 * gives the full linearly disjoint compositum; otherwise one irreducible
 * factor of maximal degree is chosen (deterministically) and flagged.
 */
CompositumResult compositum(const NumberField& K, const NumberField& L, int degree_cap = 24);

// the defining polynomial alone (monic, irreducible), without the Round 2 run
IntPoly compositum_polynomial(const IntPoly& f, const IntPoly& g, int degree_cap,
                              bool* linearly_disjoint = nullptr, int* shift = nullptr);

// minimal polynomial of lc(f) * alpha: monic with the same root field
IntPoly monic_generator(const IntPoly& f);

// |disc(L)| / |disc(K)|^deg_LK; throws "fields not in a tower" when the
// quotient is not a positive integer.
BigInt rel_disc_norm(const NumberField& L, const NumberField& K, int deg_LK);
BigInt rel_disc_norm_abs(const BigInt& abs_disc_L, const BigInt& abs_disc_K, int deg_LK);

struct Lemma21Report {
    BigInt lhs;       // N(D_{LL'/K})
    BigInt rhs;       // N(D_{L/K})^[LL':L] * N(D_{L'/K})^[LL':L']
    bool divides = false;
    BigInt quotient;  // rhs / lhs when divides
    int deg_LLp = 0;
    bool linearly_disjoint = true;
};

// Norm-level divisibility of relative discriminants in a compositum.
// K must be contained in both L and L' (callers assert; tower_screen below
// offers a necessary-condition check).
Lemma21Report check_lemma_2_1(const NumberField& K, const NumberField& L, const NumberField& Lp,
                              int degree_cap = 24);

/* Necessary-condition screen for K being a subfield of L: at every prime
 * (up to `n_primes`, skipping leading coefficients and discriminants) where
 * min_poly(L) has a root, min_poly(K) must have one too. A screen, not a
 * proof of containment.
 */
bool tower_screen(const NumberField& K, const NumberField& L, int n_primes = 40);

} // namespace gammalab

#endif
