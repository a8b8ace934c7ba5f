#ifndef GAMMALAB_HEIGHTS_HPP
#define GAMMALAB_HEIGHTS_HPP

#include "gammalab/abelian.hpp"
#include "gammalab/intpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gammalab {

/* Enclosure of the absolute logarithmic Weil height of the roots of an
 * irreducible integer polynomial: h in [lo, hi], always. When the value is
 * known in closed form (rational numbers, roots of unity, all roots certified
 * inside or outside the unit circle) `exact` carries h = log(arg)/root, and
 * comparisons against such heights are exact.
 */
struct HeightInterval {
    BigRat lo, hi;
    struct Exact {
        BigInt arg;  // >= 1
        int root;    // h = log(arg)/root
    };
    std::optional<Exact> exact;
    bool is_zero() const { return exact && exact->arg == 1; }
};

// A height bound: either log(log_arg) for exact boundary semantics, or a
// plain rational value.
struct HeightBound {
    std::optional<BigRat> log_arg;  // > 1
    BigRat value;                   // used when !log_arg
    static HeightBound from_value(const BigRat& v);
    static HeightBound log_of(const BigRat& q);
    std::string to_string() const;
};

struct HeightsOptions {
    BigRat tol = make_rat(BigInt(1), ipow(BigInt(10), 10));
    long work_cap = 20000000;  // coefficient-box volume cap
    int screen_size = 50;      // splitting-screen prime count
    int degree_cap = 24;
};

/* Certified interval of width <= tol via complex root isolation
 * (Durand-Kerner in MPFR with a posteriori disk bounds, precision escalated
 * until the disks are disjoint and the enclosure is tight).
 */
HeightInterval weil_height(const IntPoly& f, const BigRat& tol, bool assume_irreducible = false);
HeightInterval weil_height(const IntPoly& f);

enum class BoundCmp { below, at_or_above, ambiguous };

// h(f) < bound, decided exactly where possible and otherwise by interval
// refinement; `ambiguous` only at the refinement cap.
BoundCmp height_below(const IntPoly& f, const HeightBound& bound, const HeightsOptions& opt = {},
                      HeightInterval* out = nullptr);

struct CensusEntry {
    IntPoly min_poly;
    HeightInterval height;
};

struct Census {
    int degree = 0;
    std::vector<CensusEntry> entries;         // canonical order, one per Galois orbit
    std::vector<IntPoly> boundary_ambiguous;  // refinement-cap hits, never silently dropped
    std::vector<BigInt> coeff_box;            // |a_i| <= coeff_box[i]
    long polynomials() const { return long(entries.size()); }
    long roots() const { return degree * long(entries.size()); }
};

/* Complete list of degree-d minimal polynomials with h < bound: coefficients
 * range over |a_i| <= binom(d, i) e^(d B), primitive irreducible polynomials
 * with positive leading coefficient, filtered by interval-safe comparison.
 */
Census enumerate_bounded(int degree, const HeightBound& bound, const HeightsOptions& opt = {});

struct ProbeCandidate {
    IntPoly poly;
    HeightInterval height;
    enum class Status { identified, rejected_disc, rejected_splitting } status;
};

struct ProbeReport {
    AbelianField field;
    int screen_size = 0;
    std::vector<ProbeCandidate> candidates;  // every degree-p candidate with h < bound
    bool none_below = true;
    std::optional<HeightInterval> min_height;
    std::optional<IntPoly> witness;
};

/* Minimum height of a generator of the prime-degree abelian field L among
 * elements of height < bound. Candidates are identified with L by (a) degree,
 * (b) field discriminant equal to the conductor-discriminant value, and
 * (c) splitting pattern agreement at the first screen_size unramified primes
 * (a Chebotarev screen, recorded as such). "none below" certifies
 * inf { h(a) : a in L \ Q } >= bound, since elements of L \ Q have degree
 * exactly p.
 */
ProbeReport min_height_probe(const AbelianField& L, const HeightBound& bound,
                             const HeightsOptions& opt = {});

// minimal polynomial of alpha^k for a root alpha of irreducible f
IntPoly power_min_poly(const IntPoly& f, int k);

} // namespace gammalab

#endif
