#ifndef GAMMALAB_INTPOLY_HPP
#define GAMMALAB_INTPOLY_HPP

#include "gammalab/intmath.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gammalab {

/* Univariate polynomial over the integers, constant term first.
 * Normalized: no stored leading zeros; the zero polynomial has an empty
 * coefficient vector and degree -1.
 */
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const BigInt& c);
    static IntPoly x_power(int k);  // x^k

    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(int i) const { return (i >= 0 && i < int(c_.size())) ? c_[i] : BigInt(0); }
    const BigInt& lc() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly mul_scalar(const BigInt& k) const;
    IntPoly mul_xpow(int k) const;

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    // Lexicographic on (degree, coefficients constant-first); canonical order
    // for deterministic factor lists and witnesses.
    bool operator<(const IntPoly& o) const;

    BigInt eval(const BigInt& x) const;
    BigRat eval(const BigRat& x) const;

    IntPoly derivative() const;
    BigInt content() const;          // gcd of coefficients, >= 0
    IntPoly primitive_part() const;  // sign of lc preserved

    std::string to_string(const std::string& var = "x") const;

  private:
    std::vector<BigInt> c_;
    void normalize();
};

struct PseudoDiv {
    IntPoly quo, rem;
    unsigned long power;  // lc(g)^power * f = quo * g + rem
};

// power is fixed to deg(f) - deg(g) + 1 (subresultant convention).
PseudoDiv pseudo_divrem(const IntPoly& f, const IntPoly& g);

// Exact division in Z[x]; throws if f is not divisible by g over Z.
IntPoly div_exact(const IntPoly& f, const IntPoly& g);

// Division in Q[x] restricted to integer inputs: f = q*g + r with
// deg r < deg g; only valid over Z when g is monic.
void divrem_monic(const IntPoly& f, const IntPoly& g, IntPoly& q, IntPoly& r);

// gcd in Z[x] (primitive PRS), normalized with positive leading coefficient.
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

// Res(f, g) = lc(f)^deg(g) * prod g(alpha) over roots of f, by the
// subresultant PRS.
BigInt resultant(const IntPoly& f, const IntPoly& g);

// (-1)^(d(d-1)/2) Res(f, f') / lc(f)
BigInt discriminant(const IntPoly& f);

// Yun: f = unit * prod_i out[i].first ^ out[i].second with squarefree,
// pairwise coprime, primitive, positive-lc parts.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

bool is_squarefree(const IntPoly& f);

// g(a + b*x)
IntPoly compose_linear(const IntPoly& g, const BigInt& a, const BigInt& b);

// x^deg(f) * f(1/x), i.e. reversed coefficients, normalized.
IntPoly reverse_poly(const IntPoly& f);

// Exact interpolation of an integer polynomial of degree <= deg from values
// at the points 0, 1, -1, 2, -2, ...; throws if the result is not integral.
IntPoly interpolate_integer(int deg, const std::function<BigInt(const BigInt&)>& eval_at);

} // namespace gammalab

#endif
