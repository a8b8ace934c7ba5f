#include "gammalab/factored_real.hpp"

#include "gammalab/errors.hpp"

#include <mpfr.h>

#include <cmath>
#include <mutex>
#include <sstream>

namespace gammalab {

namespace {

// Above this estimated bit size the cleared-denominator integers are not
// materialized; the certified log2 route decides instead.
constexpr double kMaterializeBits = double(1u << 16);
constexpr long kMaxLogPrec = 1L << 14;

void require_prime_base(const BigInt& p) {
    if (p < 2 || !is_prime(p))
        throw UsageError("FactoredReal: base " + p.get_str() + " is not prime");
}

} // namespace

FactoredReal FactoredReal::from_integer(const BigInt& n) {
    if (n < 1) throw UsageError("FactoredReal::from_integer: argument must be >= 1");
    Map m;
    for (const auto& [p, e] : factor_map(n)) m[p] = BigRat(e);
    FactoredReal r;
    r.factors_ = std::move(m);
    return r;
}

FactoredReal FactoredReal::from_map(Map m) {
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == 0) {
            it = m.erase(it);
        } else {
            require_prime_base(it->first);
            ++it;
        }
    }
    FactoredReal r;
    r.factors_ = std::move(m);
    return r;
}

FactoredReal FactoredReal::prime_power(const BigInt& p, const BigRat& e) {
    Map m;
    if (e != 0) {
        require_prime_base(p);
        m[p] = e;
    }
    FactoredReal r;
    r.factors_ = std::move(m);
    return r;
}

bool FactoredReal::is_integral() const {
    for (const auto& [p, e] : factors_)
        if (e < 0 || e.get_den() != 1) return false;
    return true;
}

BigInt FactoredReal::to_integer() const {
    if (!is_integral()) throw UsageError("FactoredReal::to_integer: value is not an integer");
    BigInt n = 1;
    for (const auto& [p, e] : factors_) {
        if (!e.get_num().fits_ulong_p())
            throw CapError("FactoredReal::to_integer: exponent too large to expand");
        n *= ipow(p, e.get_num().get_ui());
    }
    return n;
}

FactoredReal FactoredReal::operator*(const FactoredReal& o) const {
    Map m = factors_;
    for (const auto& [p, e] : o.factors_) {
        auto it = m.find(p);
        if (it == m.end()) {
            m[p] = e;
        } else {
            it->second += e;
            if (it->second == 0) m.erase(it);
        }
    }
    FactoredReal r;
    r.factors_ = std::move(m);
    return r;
}

FactoredReal FactoredReal::inverse() const {
    Map m;
    for (const auto& [p, e] : factors_) m[p] = -e;
    FactoredReal r;
    r.factors_ = std::move(m);
    return r;
}

FactoredReal FactoredReal::operator/(const FactoredReal& o) const { return *this * o.inverse(); }

FactoredReal FactoredReal::pow(long k) const { return pow(BigRat(k)); }

FactoredReal FactoredReal::pow(const BigRat& q) const {
    Map m;
    if (q != 0)
        for (const auto& [p, e] : factors_) m[p] = e * q;
    FactoredReal r;
    r.factors_ = std::move(m);
    return r;
}

bool FactoredReal::coprime_to(const FactoredReal& o) const {
    for (const auto& [p, e] : factors_)
        if (o.factors_.count(p)) return false;
    return true;
}

namespace detail {

Log2Bounds log2_bounds(const BigInt& p, long prec) {
    if (p < 2) throw UsageError("log2_bounds: argument must be >= 2");
    const long t = prec;         // fractional bits extracted
    const long P = prec + 8;     // internal fixed-point precision
    const long k = long(bit_length(p)) - 1;

    // x = p / 2^k in [1,2), as fixed-point X ~ x*2^P; floor and ceil starts.
    BigInt xlo = (p << P) >> k;
    BigInt xhi = xlo;
    if (((p << P) & ((BigInt(1) << k) - 1)) != 0) xhi += 1;

    const BigInt one_fp = BigInt(1) << P;
    const BigInt two_fp = BigInt(1) << (P + 1);

    BigInt flo = 0, fhi = 0;  // accumulated fraction bits, resolution 2^-t
    for (long j = 0; j < t; ++j) {
        flo <<= 1;
        xlo = (xlo * xlo) >> P;
        if (xlo >= two_fp) {
            flo += 1;
            xlo >>= 1;
        }
        fhi <<= 1;
        BigInt sq = xhi * xhi;
        xhi = sq >> P;
        if ((sq & (one_fp - 1)) != 0) xhi += 1;
        if (xhi >= two_fp) {
            fhi += 1;
            xhi = (xhi + 1) >> 1;
        }
    }
    Log2Bounds b;
    b.prec = t;
    b.lo = (BigInt(k) << t) + flo - 1;
    b.hi = (BigInt(k) << t) + fhi + 2;  // +1 tail of the expansion, +1 slack
    return b;
}

namespace {

// Cleared-denominator integer exponents of a/b, split by sign.
// Returns (prime, exponent) with all exponents positive.
struct ClearedDiff {
    std::vector<std::pair<BigInt, BigInt>> pos, neg;
};

ClearedDiff cleared_diff(const FactoredReal& a, const FactoredReal& b) {
    std::map<BigInt, BigRat> diff = a.factors();
    for (const auto& [p, e] : b.factors()) {
        auto it = diff.find(p);
        if (it == diff.end()) {
            diff[p] = -e;
        } else {
            it->second -= e;
            if (it->second == 0) diff.erase(it);
        }
    }
    BigInt d = 1;
    for (const auto& [p, e] : diff) d = lcm(d, BigInt(e.get_den()));
    ClearedDiff out;
    for (const auto& [p, e] : diff) {
        BigInt u = e.get_num() * (d / e.get_den());
        if (u > 0)
            out.pos.emplace_back(p, u);
        else
            out.neg.emplace_back(p, -u);
    }
    return out;
}

double estimate_bits(const std::vector<std::pair<BigInt, BigInt>>& side) {
    double bits = 0;
    for (const auto& [p, u] : side) bits += u.get_d() * std::log2(p.get_d());
    return bits;
}

BigInt materialize(const std::vector<std::pair<BigInt, BigInt>>& side) {
    BigInt r = 1;
    for (const auto& [p, u] : side) {
        if (!u.fits_ulong_p()) throw CapError("fr_compare: cleared exponent does not fit");
        r *= ipow(p, u.get_ui());
    }
    return r;
}

} // namespace

std::strong_ordering compare_materialized(const FactoredReal& a, const FactoredReal& b) {
    ClearedDiff d = cleared_diff(a, b);
    BigInt u = materialize(d.pos);
    BigInt v = materialize(d.neg);
    if (u < v) return std::strong_ordering::less;
    if (u > v) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

namespace {

// the scan recompares the same small primes thousands of times
Log2Bounds cached_log2_bounds(const BigInt& p, long prec) {
    static std::mutex mu;
    static std::map<std::pair<BigInt, long>, Log2Bounds> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, prec);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Log2Bounds b = log2_bounds(p, prec);
    if (cache.size() < 4096) cache.emplace(key, b);
    return b;
}

} // namespace

std::optional<std::strong_ordering> compare_certified_log(const FactoredReal& a,
                                                          const FactoredReal& b, long max_prec) {
    ClearedDiff d = cleared_diff(a, b);
    if (d.pos.empty() && d.neg.empty()) return std::strong_ordering::equal;
    if (d.neg.empty()) return std::strong_ordering::greater;
    if (d.pos.empty()) return std::strong_ordering::less;
    for (long prec = 64; prec <= max_prec; prec *= 2) {
        BigInt slo = 0, shi = 0;
        for (const auto& [p, u] : d.pos) {
            Log2Bounds lb = cached_log2_bounds(p, prec);
            slo += u * lb.lo;
            shi += u * lb.hi;
        }
        for (const auto& [p, u] : d.neg) {
            Log2Bounds lb = cached_log2_bounds(p, prec);
            slo -= u * lb.hi;
            shi -= u * lb.lo;
        }
        if (slo > 0) return std::strong_ordering::greater;
        if (shi < 0) return std::strong_ordering::less;
    }
    return std::nullopt;
}

} // namespace detail

std::strong_ordering FactoredReal::compare(const FactoredReal& o) const {
    if (factors_ == o.factors_) return std::strong_ordering::equal;
    detail::ClearedDiff d = detail::cleared_diff(*this, o);
    // one-sided: all exponent differences share a sign
    if (d.neg.empty()) return std::strong_ordering::greater;
    if (d.pos.empty()) return std::strong_ordering::less;
    double bits = std::max(detail::estimate_bits(d.pos), detail::estimate_bits(d.neg));
    if (bits <= kMaterializeBits) return detail::compare_materialized(*this, o);
    if (auto r = detail::compare_certified_log(*this, o, kMaxLogPrec)) return *r;
    return detail::compare_materialized(*this, o);
}

std::string FactoredReal::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : factors_) {
        if (!first) os << " * ";
        first = false;
        os << p.get_str();
        if (e == 1) continue;
        if (e.get_den() == 1)
            os << "^" << e.get_num().get_str();
        else
            os << "^(" << e.get_num().get_str() << "/" << e.get_den().get_str() << ")";
    }
    return os.str();
}

std::string FactoredReal::to_decimal(int digits) const {
    const mpfr_prec_t prec = std::max(128, digits * 4 + 64);
    mpfr_t acc, t;
    mpfr_init2(acc, prec);
    mpfr_init2(t, prec);
    mpfr_set_zero(acc, 1);
    for (const auto& [p, e] : factors_) {
        mpfr_set_z(t, p.get_mpz_t(), MPFR_RNDN);
        mpfr_log2(t, t, MPFR_RNDN);
        mpfr_mul_q(t, t, e.get_mpq_t(), MPFR_RNDN);
        mpfr_add(acc, acc, t, MPFR_RNDN);
    }
    mpfr_exp2(acc, acc, MPFR_RNDN);
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, acc);
    mpfr_clear(acc);
    mpfr_clear(t);
    return buf;
}

FactoredReal factor_integer(const BigInt& n) { return FactoredReal::from_integer(n); }

} // namespace gammalab
