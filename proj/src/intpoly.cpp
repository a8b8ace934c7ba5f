#include "gammalab/intpoly.hpp"

#include "gammalab/errors.hpp"

#include <sstream>

namespace gammalab {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

IntPoly IntPoly::constant(const BigInt& c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(c);
    return p;
}

IntPoly IntPoly::x_power(int k) {
    IntPoly p;
    p.c_.assign(k + 1, BigInt(0));
    p.c_[k] = 1;
    return p;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPoly::lc() const {
    static const BigInt zero(0);
    return c_.empty() ? zero : c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> r = c_;
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::mul_scalar(const BigInt& k) const {
    if (k == 0) return IntPoly();
    std::vector<BigInt> r = c_;
    for (auto& v : r) v *= k;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::mul_xpow(int k) const {
    if (is_zero()) return IntPoly();
    std::vector<BigInt> r(c_.size() + k, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return IntPoly(std::move(r));
}

bool IntPoly::operator<(const IntPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        int cmp = ::cmp(c_[i], o.c_[i]);
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

BigRat IntPoly::eval(const BigRat& x) const {
    BigRat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + BigRat(*it);
    return r;
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return IntPoly();
    std::vector<BigInt> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * long(i);
    return IntPoly(std::move(r));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& v : c_) g = gcd(g, v);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    BigInt c = content();
    std::vector<BigInt> r = c_;
    for (auto& v : r) v /= c;
    return IntPoly(std::move(r));
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& a = c_[i];
        if (a == 0) continue;
        BigInt mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

PseudoDiv pseudo_divrem(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw UsageError("pseudo_divrem: division by zero polynomial");
    int df = f.degree(), dg = g.degree();
    if (df < dg) return {IntPoly(), f, 0};
    unsigned long e = (unsigned long)(df - dg + 1);
    const BigInt& b = g.lc();
    IntPoly r = f, q;
    unsigned long steps = 0;
    while (!r.is_zero() && r.degree() >= dg) {
        int k = r.degree() - dg;
        IntPoly t = IntPoly::constant(r.lc()).mul_xpow(k);
        q = q.mul_scalar(b) + t;
        r = r.mul_scalar(b) - g * t;
        ++steps;
    }
    // pad so that exactly lc(g)^e * f = q*g + r
    for (; steps < e; ++steps) {
        q = q.mul_scalar(b);
        r = r.mul_scalar(b);
    }
    return {std::move(q), std::move(r), e};
}

IntPoly div_exact(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw UsageError("div_exact: division by zero polynomial");
    if (f.is_zero()) return IntPoly();
    int df = f.degree(), dg = g.degree();
    if (df < dg) throw UsageError("div_exact: not divisible (degree)");
    std::vector<BigInt> q(df - dg + 1, BigInt(0));
    std::vector<BigInt> r = f.coeffs();
    for (int i = df - dg; i >= 0; --i) {
        BigInt num = r[i + dg];
        if (num == 0) continue;
        if (!mpz_divisible_p(num.get_mpz_t(), g.lc().get_mpz_t()))
            throw UsageError("div_exact: not divisible (coefficient)");
        BigInt qi = num / g.lc();
        q[i] = qi;
        for (int j = 0; j <= dg; ++j) r[i + j] -= qi * g.coeff(j);
    }
    for (const auto& v : r)
        if (v != 0) throw UsageError("div_exact: nonzero remainder");
    return IntPoly(std::move(q));
}

void divrem_monic(const IntPoly& f, const IntPoly& g, IntPoly& q, IntPoly& r) {
    if (!g.is_monic()) throw UsageError("divrem_monic: divisor must be monic");
    int dg = g.degree();
    std::vector<BigInt> rem = f.coeffs();
    std::vector<BigInt> quo(std::max(0, f.degree() - dg + 1), BigInt(0));
    for (int i = f.degree() - dg; i >= 0; --i) {
        BigInt qi = rem[i + dg];
        if (qi == 0) continue;
        quo[i] = qi;
        for (int j = 0; j <= dg; ++j) rem[i + j] -= qi * g.coeff(j);
    }
    q = IntPoly(std::move(quo));
    r = IntPoly(std::move(rem));
}

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) return IntPoly();
    if (f.is_zero()) return g.lc() < 0 ? -g : g;
    if (g.is_zero()) return f.lc() < 0 ? -f : f;
    BigInt c = gcd(f.content(), g.content());
    IntPoly a = f.primitive_part(), b = g.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_divrem(a, b).rem;
        a = b;
        b = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    if (a.lc() < 0) a = -a;
    return a.mul_scalar(c);
}

BigInt resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    if (f.degree() == 0 && g.degree() == 0) return 1;
    if (f.degree() == 0) return ipow(f.lc(), g.degree());
    if (g.degree() == 0) return ipow(g.lc(), f.degree());

    IntPoly A = f, B = g;
    int sign = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
        std::swap(A, B);
    }
    BigInt ca = A.content(), cb = B.content();
    A = A.primitive_part();
    B = B.primitive_part();
    // Res(ca*A, cb*B) = ca^deg(B) * cb^deg(A) * Res(A, B)
    BigInt t = ipow(ca, B.degree()) * ipow(cb, A.degree());

    BigInt gg = 1, h = 1;
    int s = 1;
    while (true) {
        int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        IntPoly R = pseudo_divrem(A, B).rem;
        A = B;
        BigInt divisor = gg * ipow(h, (unsigned long)delta);
        if (R.is_zero()) {
            B = IntPoly();
        } else {
            std::vector<BigInt> rc = R.coeffs();
            for (auto& v : rc) {
                if (!mpz_divisible_p(v.get_mpz_t(), divisor.get_mpz_t()))
                    throw Error(ExitCode::usage, "resultant: internal exact-division failure");
                v /= divisor;
            }
            B = IntPoly(std::move(rc));
        }
        if (B.is_zero()) return 0;  // nontrivial common factor
        gg = A.lc();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = gg;
        } else {
            BigInt num = ipow(gg, (unsigned long)delta);
            BigInt den = ipow(h, (unsigned long)(delta - 1));
            h = num / den;
        }
        if (B.degree() == 0) {
            int dA = A.degree();
            BigInt num = ipow(B.lc(), (unsigned long)dA);
            BigInt den = (dA >= 1) ? ipow(h, (unsigned long)(dA - 1)) : BigInt(1);
            return BigInt(sign * s) * t * (num / den);
        }
    }
}

BigInt discriminant(const IntPoly& f) {
    int d = f.degree();
    if (d < 1) throw UsageError("discriminant: degree must be >= 1");
    if (d == 1) return 1;
    BigInt r = resultant(f, f.derivative());
    BigInt q = r / f.lc();
    if (q * f.lc() != r) throw Error(ExitCode::usage, "discriminant: lc does not divide resultant");
    int e = (d * (d - 1) / 2) % 2;
    return e ? BigInt(-q) : q;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
    if (f.is_zero()) throw UsageError("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly w = f.primitive_part();
    if (w.lc() < 0) w = -w;
    if (w.degree() == 0) return out;

    IntPoly d = w.derivative();
    IntPoly g1 = poly_gcd(w, d);
    IntPoly b = div_exact(w, g1);
    IntPoly c = div_exact(d, g1) - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        IntPoly g = poly_gcd(b, c);
        if (g.degree() > 0) {
            IntPoly gp = g.lc() < 0 ? -g : g;
            out.emplace_back(gp.primitive_part(), i);
        }
        b = div_exact(b, g);
        c = div_exact(c, g) - b.derivative();
        ++i;
    }
    return out;
}

bool is_squarefree(const IntPoly& f) {
    if (f.degree() < 1) return !f.is_zero();
    return poly_gcd(f, f.derivative()).degree() == 0;
}

IntPoly compose_linear(const IntPoly& g, const BigInt& a, const BigInt& b) {
    IntPoly lin(std::vector<BigInt>{a, b});
    IntPoly r;
    for (int i = g.degree(); i >= 0; --i) r = r * lin + IntPoly::constant(g.coeff(i));
    return r;
}

IntPoly reverse_poly(const IntPoly& f) {
    std::vector<BigInt> r(f.coeffs().rbegin(), f.coeffs().rend());
    return IntPoly(std::move(r));
}

IntPoly interpolate_integer(int deg, const std::function<BigInt(const BigInt&)>& eval_at) {
    // points 0, 1, -1, 2, -2, ...
    int n = deg + 1;
    std::vector<BigRat> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        BigInt x = (i % 2 == 1) ? BigInt((i + 1) / 2) : BigInt(-(i / 2));
        xs[i] = BigRat(x);
        ys[i] = BigRat(eval_at(x));
    }
    // Newton divided differences
    std::vector<BigRat> dd = ys;
    for (int j = 1; j < n; ++j)
        for (int i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    // expand to monomial basis
    std::vector<BigRat> acc(n, BigRat(0));
    std::vector<BigRat> basis{BigRat(1)};  // prod (x - x_k)
    for (int i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += dd[i] * basis[k];
        if (i + 1 < n) {
            basis.push_back(BigRat(0));
            for (int k = int(basis.size()) - 1; k >= 1; --k)
                basis[k] = basis[k - 1] - xs[i] * basis[k];
            basis[0] = -xs[i] * basis[0];
        }
    }
    std::vector<BigInt> out(n);
    for (int i = 0; i < n; ++i) {
        if (acc[i].get_den() != 1)
            throw Error(ExitCode::usage, "interpolate_integer: non-integer coefficient");
        out[i] = acc[i].get_num();
    }
    return IntPoly(std::move(out));
}

} // namespace gammalab
