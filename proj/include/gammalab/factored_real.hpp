#ifndef GAMMALAB_FACTORED_REAL_HPP
#define GAMMALAB_FACTORED_REAL_HPP

#include "gammalab/intmath.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace gammalab {

/* A positive real number of the form prod p^(e_p) with distinct prime bases
 * and nonzero rational exponents. The empty product is 1. This is the exact
 * carrier of every gamma value and every |disc|^(1/n) bound in the project;
 * no floating point is involved in arithmetic or comparison.
 */
class FactoredReal {
  public:
    using Map = std::map<BigInt, BigRat>;

    FactoredReal() = default;  // the number 1

    static FactoredReal one() { return FactoredReal(); }

    // n >= 1 is factored; n = 1 gives the empty product.
    static FactoredReal from_integer(const BigInt& n);

    // Bases are verified prime; zero exponents are dropped.
    static FactoredReal from_map(Map m);

    static FactoredReal prime_power(const BigInt& p, const BigRat& e);

    const Map& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    // True when every exponent is a nonnegative integer.
    bool is_integral() const;
    // Requires is_integral(); expands the product.
    BigInt to_integer() const;

    FactoredReal operator*(const FactoredReal& o) const;
    FactoredReal operator/(const FactoredReal& o) const;
    FactoredReal inverse() const;
    FactoredReal pow(long k) const;
    FactoredReal pow(const BigRat& q) const;

    bool operator==(const FactoredReal& o) const { return factors_ == o.factors_; }

    // True when the two values share no prime base.
    bool coprime_to(const FactoredReal& o) const;

    /* Exact ordering of the represented reals. Denominators are cleared by
     * their lcm and the two integer power-products are compared; when those
     * integers would be astronomically large the decision is made instead
     * through certified dyadic bounds on log2 of each prime (pure integer
     * fixed-point), refined until the sign is determined. Equality never
     * reaches either route: equal canonical maps compare equal up front.
     */
    std::strong_ordering compare(const FactoredReal& o) const;

    bool operator<(const FactoredReal& o) const { return compare(o) == std::strong_ordering::less; }
    bool operator>(const FactoredReal& o) const { return compare(o) == std::strong_ordering::greater; }
    bool operator<=(const FactoredReal& o) const { return compare(o) != std::strong_ordering::greater; }
    bool operator>=(const FactoredReal& o) const { return compare(o) != std::strong_ordering::less; }

    // Exact rendering, e.g. "2^(1/2) * 3^(1/8)"; "1" for the empty product.
    std::string to_string() const;

    // Decimal approximation for reports only (MPFR, round-to-nearest).
    // Never used in any comparison.
    std::string to_decimal(int digits = 10) const;

  private:
    Map factors_;
};

FactoredReal factor_integer(const BigInt& n);

namespace detail {
// Certified bounds lo/2^prec <= log2(p) <= hi/2^prec, integers only.
// Exposed for the oracle tests.
struct Log2Bounds {
    BigInt lo, hi;
    long prec;
};
Log2Bounds log2_bounds(const BigInt& p, long prec);

// Test hooks: the two comparison routes, each usable standalone.
std::strong_ordering compare_materialized(const FactoredReal& a, const FactoredReal& b);
std::optional<std::strong_ordering> compare_certified_log(const FactoredReal& a,
                                                          const FactoredReal& b, long max_prec);
} // namespace detail

} // namespace gammalab

#endif
