#include "gammalab/heights.hpp"

#include "gammalab/errors.hpp"
#include "gammalab/numfield.hpp"
#include "gammalab/polyfactor.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace gammalab {

namespace {

// ----------------------------------------------------------- mpfr RAII ----

struct Real {
    mpfr_t v;
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v, prec); mpfr_set_zero(v, 1); }
    Real(const Real& o) {
        mpfr_init2(v, mpfr_get_prec(o.v));
        mpfr_set(v, o.v, MPFR_RNDN);
    }
    Real& operator=(const Real& o) {
        if (this != &o) mpfr_set(v, o.v, MPFR_RNDN);
        return *this;
    }
    ~Real() { mpfr_clear(v); }
};

struct Cplx {
    Real re, im;
    explicit Cplx(mpfr_prec_t p) : re(p), im(p) {}
};

// exact dyadic mpfr -> rational
BigRat to_rat(const mpfr_t x) {
    if (mpfr_zero_p(x)) return BigRat(0);
    mpz_t z;
    mpz_init(z);
    mpfr_exp_t e = mpfr_get_z_2exp(z, x);
    BigRat r{mpz_class(z)};
    mpz_clear(z);
    if (e >= 0) {
        mpz_class shift = 1;
        mpz_mul_2exp(shift.get_mpz_t(), shift.get_mpz_t(), (unsigned long)e);
        r *= BigRat(shift);
    } else {
        mpz_class shift = 1;
        mpz_mul_2exp(shift.get_mpz_t(), shift.get_mpz_t(), (unsigned long)(-e));
        r /= BigRat(shift);
    }
    return r;
}

// complex Horner evaluation of f at z, round-to-nearest at working precision
void eval_poly(Cplx& out, const IntPoly& f, const Cplx& z, mpfr_prec_t prec) {
    Real tre(prec), tim(prec), t1(prec), t2(prec);
    mpfr_set_zero(tre.v, 1);
    mpfr_set_zero(tim.v, 1);
    for (int i = f.degree(); i >= 0; --i) {
        // (tre + i tim) * z + f_i
        mpfr_mul(t1.v, tre.v, z.re.v, MPFR_RNDN);
        mpfr_mul(t2.v, tim.v, z.im.v, MPFR_RNDN);
        mpfr_sub(t1.v, t1.v, t2.v, MPFR_RNDN);  // new re without f_i
        mpfr_mul(t2.v, tre.v, z.im.v, MPFR_RNDN);
        mpfr_set(tre.v, t1.v, MPFR_RNDN);
        mpfr_mul(t1.v, tim.v, z.re.v, MPFR_RNDN);
        mpfr_add(tim.v, t1.v, t2.v, MPFR_RNDN);
        mpfr_add_z(tre.v, tre.v, f.coeff(i).get_mpz_t(), MPFR_RNDN);
    }
    mpfr_set(out.re.v, tre.v, MPFR_RNDN);
    mpfr_set(out.im.v, tim.v, MPFR_RNDN);
}

// crude upward bound on sum |f_i| (|z|+1)^i, for evaluation-error slack
void eval_error_bound(mpfr_t out, const IntPoly& f, const Cplx& z, mpfr_prec_t work_prec) {
    mpfr_t r, t;
    mpfr_init2(r, 64);
    mpfr_init2(t, 64);
    mpfr_hypot(r, z.re.v, z.im.v, MPFR_RNDU);
    mpfr_add_ui(r, r, 1, MPFR_RNDU);
    mpfr_set_zero(out, 1);
    for (int i = 0; i <= f.degree(); ++i) {
        mpfr_pow_ui(t, r, (unsigned long)i, MPFR_RNDU);
        BigInt mag = abs(f.coeff(i));
        mpfr_mul_z(t, t, mag.get_mpz_t(), MPFR_RNDU);
        mpfr_add(out, out, t, MPFR_RNDU);
    }
    // 8(d+1) ulp slack at the working precision
    mpfr_mul_ui(out, out, 8 * (unsigned long)(f.degree() + 1), MPFR_RNDU);
    mpfr_mul_2si(out, out, -(long)work_prec, MPFR_RNDU);
    mpfr_clear(r);
    mpfr_clear(t);
}

struct RootDisk {
    Cplx center;
    Real radius;  // certified: the disk contains exactly one root
    RootDisk(mpfr_prec_t p) : center(p), radius(p) {}
};

// Durand-Kerner at the given precision; seeds reused across escalations.
// Returns certified pairwise-disjoint disks or nothing (retry higher).
std::optional<std::vector<RootDisk>> isolate_roots(const IntPoly& f, mpfr_prec_t prec,
                                                   std::vector<Cplx>* seeds) {
    const int d = f.degree();
    IntPoly fp = f.derivative();

    std::vector<Cplx> z;
    z.reserve(d);
    if (seeds && int(seeds->size()) == d) {
        for (auto& s : *seeds) {
            Cplx c(prec);
            mpfr_set(c.re.v, s.re.v, MPFR_RNDN);
            mpfr_set(c.im.v, s.im.v, MPFR_RNDN);
            z.push_back(std::move(c));
        }
    } else {
        // Cauchy-style radius: 1 + max |f_i / f_d|
        double scale = 1.0;
        double lc = std::abs(f.lc().get_d());
        for (int i = 0; i < d; ++i)
            scale = std::max(scale, std::abs(f.coeff(i).get_d()) / lc);
        scale = 1.0 + scale;
        for (int i = 0; i < d; ++i) {
            Cplx c(prec);
            double ang = 6.2831853071795864769 * (i + 0.25) / d;
            mpfr_set_d(c.re.v, 0.9 * scale * std::cos(ang), MPFR_RNDN);
            mpfr_set_d(c.im.v, 0.9 * scale * std::sin(ang), MPFR_RNDN);
            z.push_back(std::move(c));
        }
    }

    Real num_re(prec), num_im(prec), den_re(prec), den_im(prec);
    Real t1(prec), t2(prec), t3(prec), mag(prec), step(prec), maxstep(prec);
    Cplx fz(prec);
    const int max_iters = 200 + 20 * d;
    for (int iter = 0; iter < max_iters; ++iter) {
        mpfr_set_zero(maxstep.v, 1);
        for (int i = 0; i < d; ++i) {
            eval_poly(fz, f, z[i], prec);
            // denominator: lc * prod_{j != i} (z_i - z_j)
            mpfr_set_z(den_re.v, f.lc().get_mpz_t(), MPFR_RNDN);
            mpfr_set_zero(den_im.v, 1);
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                mpfr_sub(t1.v, z[i].re.v, z[j].re.v, MPFR_RNDN);
                mpfr_sub(t2.v, z[i].im.v, z[j].im.v, MPFR_RNDN);
                // (den_re + i den_im) *= (t1 + i t2)
                mpfr_mul(t3.v, den_re.v, t1.v, MPFR_RNDN);
                mpfr_mul(mag.v, den_im.v, t2.v, MPFR_RNDN);
                mpfr_sub(num_re.v, t3.v, mag.v, MPFR_RNDN);
                mpfr_mul(t3.v, den_re.v, t2.v, MPFR_RNDN);
                mpfr_mul(mag.v, den_im.v, t1.v, MPFR_RNDN);
                mpfr_add(num_im.v, t3.v, mag.v, MPFR_RNDN);
                mpfr_set(den_re.v, num_re.v, MPFR_RNDN);
                mpfr_set(den_im.v, num_im.v, MPFR_RNDN);
            }
            // delta = f(z_i) / den
            mpfr_mul(t1.v, den_re.v, den_re.v, MPFR_RNDN);
            mpfr_mul(t2.v, den_im.v, den_im.v, MPFR_RNDN);
            mpfr_add(t1.v, t1.v, t2.v, MPFR_RNDN);  // |den|^2
            if (mpfr_zero_p(t1.v)) return std::nullopt;
            mpfr_mul(t2.v, fz.re.v, den_re.v, MPFR_RNDN);
            mpfr_mul(t3.v, fz.im.v, den_im.v, MPFR_RNDN);
            mpfr_add(num_re.v, t2.v, t3.v, MPFR_RNDN);
            mpfr_div(num_re.v, num_re.v, t1.v, MPFR_RNDN);
            mpfr_mul(t2.v, fz.im.v, den_re.v, MPFR_RNDN);
            mpfr_mul(t3.v, fz.re.v, den_im.v, MPFR_RNDN);
            mpfr_sub(num_im.v, t2.v, t3.v, MPFR_RNDN);
            mpfr_div(num_im.v, num_im.v, t1.v, MPFR_RNDN);
            mpfr_sub(z[i].re.v, z[i].re.v, num_re.v, MPFR_RNDN);
            mpfr_sub(z[i].im.v, z[i].im.v, num_im.v, MPFR_RNDN);
            mpfr_hypot(step.v, num_re.v, num_im.v, MPFR_RNDU);
            mpfr_max(maxstep.v, maxstep.v, step.v, MPFR_RNDU);
        }
        mpfr_set_ui_2exp(t1.v, 1, -(long)(prec / 2) - 4, MPFR_RNDN);
        if (mpfr_cmp(maxstep.v, t1.v) < 0) break;
    }
    if (seeds) {
        seeds->clear();
        for (auto& c : z) {
            Cplx s(prec);
            mpfr_set(s.re.v, c.re.v, MPFR_RNDN);
            mpfr_set(s.im.v, c.im.v, MPFR_RNDN);
            seeds->push_back(std::move(s));
        }
    }

    // a posteriori certification: D(z_i, d |f(z_i)| / |f'(z_i)|) contains a
    // root; pairwise disjoint disks then isolate all d of them
    std::vector<RootDisk> disks;
    mpfr_t err, errp, fmag, fpmag;
    mpfr_init2(err, 64);
    mpfr_init2(errp, 64);
    mpfr_init2(fmag, 64);
    mpfr_init2(fpmag, 64);
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
        eval_poly(fz, f, z[i], prec);
        eval_error_bound(err, f, z[i], prec);
        mpfr_hypot(fmag, fz.re.v, fz.im.v, MPFR_RNDU);
        mpfr_add(fmag, fmag, err, MPFR_RNDU);  // upper |f(z)|
        eval_poly(fz, fp, z[i], prec);
        eval_error_bound(errp, fp, z[i], prec);
        mpfr_hypot(fpmag, fz.re.v, fz.im.v, MPFR_RNDD);
        mpfr_sub(fpmag, fpmag, errp, MPFR_RNDD);  // lower |f'(z)|
        if (mpfr_sgn(fpmag) <= 0) {
            ok = false;
            break;
        }
        RootDisk disk(prec);
        mpfr_set(disk.center.re.v, z[i].re.v, MPFR_RNDN);
        mpfr_set(disk.center.im.v, z[i].im.v, MPFR_RNDN);
        mpfr_mul_ui(fmag, fmag, (unsigned long)d, MPFR_RNDU);
        mpfr_div(disk.radius.v, fmag, fpmag, MPFR_RNDU);
        disks.push_back(std::move(disk));
    }
    if (!ok) {
        mpfr_clears(err, errp, fmag, fpmag, (mpfr_ptr) nullptr);
        return std::nullopt;
    }
    // disjointness with directed slack
    Real dist(prec), rsum(prec);
    for (int i = 0; i < d && ok; ++i) {
        for (int j = i + 1; j < d && ok; ++j) {
            mpfr_sub(t1.v, disks[i].center.re.v, disks[j].center.re.v, MPFR_RNDN);
            mpfr_sub(t2.v, disks[i].center.im.v, disks[j].center.im.v, MPFR_RNDN);
            mpfr_hypot(dist.v, t1.v, t2.v, MPFR_RNDD);
            mpfr_mul_2si(t3.v, dist.v, -(long)prec + 4, MPFR_RNDU);
            mpfr_sub(dist.v, dist.v, t3.v, MPFR_RNDD);  // rigorous lower bound
            mpfr_add(rsum.v, disks[i].radius.v, disks[j].radius.v, MPFR_RNDU);
            if (mpfr_cmp(dist.v, rsum.v) <= 0) ok = false;
        }
    }
    mpfr_clears(err, errp, fmag, fpmag, (mpfr_ptr) nullptr);
    if (!ok) return std::nullopt;
    return disks;
}

// candidate cyclotomic indices with phi(k) = n; cached per degree
const std::vector<std::uint64_t>& cyclotomic_candidates(int n) {
    static std::map<int, std::vector<std::uint64_t>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::uint64_t> out;
    // phi(k) >= sqrt(k/2), so k <= 2 n^2 + 1
    for (std::uint64_t k = 1; k <= std::uint64_t(2) * n * n + 1; ++k)
        if (euler_phi(BigInt(static_cast<unsigned long>(k))) == n) out.push_back(k);
    return cache.emplace(n, std::move(out)).first->second;
}

std::map<std::uint64_t, IntPoly>& cyclotomic_cache() {
    static std::map<std::uint64_t, IntPoly> cache;
    return cache;
}

IntPoly cyclotomic_poly_of(std::uint64_t m) {
    auto& cache = cyclotomic_cache();
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<BigInt> xm(m + 1, BigInt(0));
    xm[0] = -1;
    xm[m] = 1;
    IntPoly num(std::move(xm));
    for (std::uint64_t d = 1; d <= m / 2; ++d)
        if (m % d == 0) num = div_exact(num, cyclotomic_poly_of(d));
    cache.emplace(m, num);
    return num;
}

HeightInterval exact_height(const BigInt& arg, int root, const BigRat& tol) {
    HeightInterval h;
    h.exact = HeightInterval::Exact{arg, root};
    if (arg == 1) {
        h.lo = h.hi = 0;
        return h;
    }
    for (mpfr_prec_t prec = 128;; prec *= 2) {
        mpfr_t lo, hi;
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        mpfr_set_z(lo, arg.get_mpz_t(), MPFR_RNDD);
        mpfr_log(lo, lo, MPFR_RNDD);
        mpfr_div_ui(lo, lo, (unsigned long)root, MPFR_RNDD);
        mpfr_set_z(hi, arg.get_mpz_t(), MPFR_RNDU);
        mpfr_log(hi, hi, MPFR_RNDU);
        mpfr_div_ui(hi, hi, (unsigned long)root, MPFR_RNDU);
        h.lo = to_rat(lo);
        h.hi = to_rat(hi);
        mpfr_clear(lo);
        mpfr_clear(hi);
        if (h.hi - h.lo <= tol || prec >= 1 << 12) break;
    }
    return h;
}

} // namespace

HeightBound HeightBound::from_value(const BigRat& v) {
    if (v <= 0) throw UsageError("height bound must be positive");
    HeightBound b;
    b.value = v;
    return b;
}

HeightBound HeightBound::log_of(const BigRat& q) {
    if (q <= 1) throw UsageError("log height bound needs argument > 1");
    HeightBound b;
    b.log_arg = q;
    return b;
}

std::string HeightBound::to_string() const {
    std::ostringstream os;
    if (log_arg)
        os << "log(" << log_arg->get_str() << ")";
    else
        os << value.get_str();
    return os.str();
}

HeightInterval weil_height(const IntPoly& f_in, const BigRat& tol, bool assume_irreducible) {
    IntPoly f = f_in.primitive_part();
    if (f.lc() < 0) f = -f;
    int d = f.degree();
    if (d < 1) throw UsageError("weil_height: degree must be >= 1");
    if (!assume_irreducible && !is_irreducible_over_Q(f))
        throw UsageError("weil_height: polynomial is reducible");

    if (d == 1) {
        // alpha = -a0/a1 with gcd(a0, a1) = 1: h = log max(|a0|, |a1|)
        BigInt arg = abs(f.coeff(0));
        if (f.coeff(1) > arg) arg = f.coeff(1);
        return exact_height(arg, 1, tol);
    }
    if (f.is_monic()) {
        for (std::uint64_t k : cyclotomic_candidates(d))
            if (f == cyclotomic_poly_of(k)) return exact_height(BigInt(1), 1, tol);
    }

    std::vector<Cplx> seeds;
    for (mpfr_prec_t prec = 192;; prec *= 2) {
        if (prec > (1 << 13))
            throw CapError("weil_height: precision cap reached for " + f.to_string());
        auto disks = isolate_roots(f, prec, &seeds);
        if (!disks) continue;

        // |z| bounds per root, then Mahler bounds
        mpfr_t mlo, mhi, t, zlo, zhi;
        mpfr_init2(mlo, prec);
        mpfr_init2(mhi, prec);
        mpfr_init2(t, prec);
        mpfr_init2(zlo, prec);
        mpfr_init2(zhi, prec);
        mpfr_set_z(mlo, f.lc().get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(mhi, f.lc().get_mpz_t(), MPFR_RNDU);
        bool all_inside = true, all_outside = true;
        for (const auto& disk : *disks) {
            mpfr_hypot(t, disk.center.re.v, disk.center.im.v, MPFR_RNDD);
            mpfr_mul_2si(zlo, t, -(long)prec + 4, MPFR_RNDD);
            mpfr_sub(zlo, t, zlo, MPFR_RNDD);
            mpfr_sub(zlo, zlo, disk.radius.v, MPFR_RNDD);
            mpfr_hypot(t, disk.center.re.v, disk.center.im.v, MPFR_RNDU);
            mpfr_mul_2si(zhi, t, -(long)prec + 4, MPFR_RNDU);
            mpfr_add(zhi, t, zhi, MPFR_RNDU);
            mpfr_add(zhi, zhi, disk.radius.v, MPFR_RNDU);
            if (mpfr_cmp_ui(zhi, 1) >= 0) all_inside = false;
            if (mpfr_cmp_ui(zlo, 1) <= 0) all_outside = false;
            if (mpfr_cmp_ui(zlo, 1) > 0) mpfr_mul(mlo, mlo, zlo, MPFR_RNDD);
            if (mpfr_cmp_ui(zhi, 1) > 0) mpfr_mul(mhi, mhi, zhi, MPFR_RNDU);
        }
        if (all_inside) {
            // Mahler measure is exactly |lc|
            mpfr_clears(mlo, mhi, t, zlo, zhi, (mpfr_ptr) nullptr);
            return exact_height(abs(f.lc()), d, tol);
        }
        if (all_outside) {
            // every root outside the unit circle: M = |a_0|
            mpfr_clears(mlo, mhi, t, zlo, zhi, (mpfr_ptr) nullptr);
            return exact_height(abs(f.coeff(0)), d, tol);
        }
        HeightInterval h;
        mpfr_log(mlo, mlo, MPFR_RNDD);
        mpfr_div_ui(mlo, mlo, (unsigned long)d, MPFR_RNDD);
        mpfr_log(mhi, mhi, MPFR_RNDU);
        mpfr_div_ui(mhi, mhi, (unsigned long)d, MPFR_RNDU);
        h.lo = to_rat(mlo);
        h.hi = to_rat(mhi);
        if (h.lo < 0) h.lo = 0;  // Mahler measure of an integer polynomial is >= 1
        mpfr_clears(mlo, mhi, t, zlo, zhi, (mpfr_ptr) nullptr);
        if (h.hi - h.lo <= tol) return h;
    }
}

HeightInterval weil_height(const IntPoly& f) { return weil_height(f, HeightsOptions{}.tol); }

namespace {

// rational enclosure of a bound value
void bound_interval(const HeightBound& b, mpfr_prec_t prec, BigRat& lo, BigRat& hi) {
    if (!b.log_arg) {
        lo = hi = b.value;
        return;
    }
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_set_q(t, b.log_arg->get_mpq_t(), MPFR_RNDD);
    mpfr_log(t, t, MPFR_RNDD);
    lo = to_rat(t);
    mpfr_set_q(t, b.log_arg->get_mpq_t(), MPFR_RNDU);
    mpfr_log(t, t, MPFR_RNDU);
    hi = to_rat(t);
    mpfr_clear(t);
}

} // namespace

BoundCmp height_below(const IntPoly& f, const HeightBound& bound, const HeightsOptions& opt,
                      HeightInterval* out) {
    BigRat tol = opt.tol;
    mpfr_prec_t bprec = 128;
    for (int round = 0; round < 16; ++round) {
        HeightInterval h = weil_height(f, tol, true);
        if (out) *out = h;
        if (h.exact && bound.log_arg) {
            // log(arg)/root < log(q)  <=>  arg < q^root, exactly
            BigRat lhs(h.exact->arg);
            BigRat rhs = *bound.log_arg;
            BigRat rhs_pow(1);
            for (int i = 0; i < h.exact->root; ++i) rhs_pow *= rhs;
            return lhs < rhs_pow ? BoundCmp::below : BoundCmp::at_or_above;
        }
        if (h.exact && h.exact->arg == 1) return BoundCmp::below;  // bounds are positive
        BigRat blo, bhi;
        bound_interval(bound, bprec, blo, bhi);
        if (h.hi < blo) return BoundCmp::below;
        if (h.lo >= bhi) return BoundCmp::at_or_above;
        tol /= 1024;
        bprec *= 2;
        if (bprec > (1 << 13)) break;
    }
    return BoundCmp::ambiguous;
}

namespace {

BigRat mahler_cap(int degree, const HeightBound& b) {
    if (b.log_arg) {
        BigRat cap(1);
        for (int i = 0; i < degree; ++i) cap *= *b.log_arg;
        return cap;  // e^(d log q) = q^d, exactly
    }
    mpfr_t t;
    mpfr_init2(t, 128);
    mpfr_set_q(t, b.value.get_mpq_t(), MPFR_RNDU);
    mpfr_mul_ui(t, t, (unsigned long)degree, MPFR_RNDU);
    mpfr_exp(t, t, MPFR_RNDU);
    BigRat cap = to_rat(t);
    mpfr_clear(t);
    return cap;
}

BigInt binom(int n, int k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

} // namespace

Census enumerate_bounded(int degree, const HeightBound& bound, const HeightsOptions& opt) {
    if (degree < 1) throw UsageError("enumerate_bounded: degree must be >= 1");
    if (degree > opt.degree_cap) throw CapError("enumerate_bounded: degree cap exceeded");
    Census census;
    census.degree = degree;

    BigRat cap = mahler_cap(degree, bound);
    census.coeff_box.resize(degree + 1);
    BigRat volume(1);
    for (int i = 0; i <= degree; ++i) {
        census.coeff_box[i] = rat_floor(BigRat(binom(degree, i)) * cap);
        volume *= BigRat(2 * census.coeff_box[i] + 1);
    }
    if (volume > BigRat(BigInt(opt.work_cap)))
        throw CapError("enumerate_bounded: coefficient box of volume " +
                       rat_floor(volume).get_str() + " exceeds work cap " +
                       std::to_string(opt.work_cap) + " (reduce the bound or degree)");

    std::vector<long> c(degree + 1);
    std::vector<long> box(degree + 1);
    for (int i = 0; i <= degree; ++i) {
        if (!census.coeff_box[i].fits_slong_p())
            throw CapError("enumerate_bounded: coefficient bound does not fit");
        box[i] = census.coeff_box[i].get_si();
    }
    if (box[degree] < 1) return census;  // empty box

    // iterate: a_d in [1, box_d], others in [-box_i, box_i]
    for (int i = 0; i < degree; ++i) c[i] = -box[i];
    c[degree] = 1;
    while (true) {
        std::vector<BigInt> coeffs(degree + 1);
        for (int i = 0; i <= degree; ++i) coeffs[i] = c[i];
        IntPoly f(std::move(coeffs));
        bool usable = f.degree() == degree && (degree == 1 || f.coeff(0) != 0) &&
                      f.content() == 1;
        if (usable && degree > 1) usable = is_irreducible_over_Q(f);
        if (usable) {
            HeightInterval h;
            switch (height_below(f, bound, opt, &h)) {
                case BoundCmp::below:
                    census.entries.push_back({f, h});
                    break;
                case BoundCmp::ambiguous:
                    census.boundary_ambiguous.push_back(f);
                    break;
                case BoundCmp::at_or_above:
                    break;
            }
        }
        // odometer
        int i = 0;
        while (i <= degree) {
            ++c[i];
            long lo_i = (i == degree) ? 1 : -box[i];
            if (c[i] <= box[i]) break;
            c[i] = lo_i;
            ++i;
        }
        if (i > degree) break;
    }
    std::sort(census.entries.begin(), census.entries.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return a.min_poly < b.min_poly; });
    return census;
}

ProbeReport min_height_probe(const AbelianField& L, const HeightBound& bound,
                             const HeightsOptions& opt) {
    if (!is_prime(BigInt(L.degree)))
        throw UsageError("min_height_probe: field degree must be prime");
    ProbeReport rep;
    rep.field = L;
    rep.screen_size = opt.screen_size;

    BigInt target_disc = abelian_disc(L).to_integer();
    Census census = enumerate_bounded(int(L.degree), bound, opt);
    for (const auto& entry : census.entries) {
        ProbeCandidate cand{entry.min_poly, entry.height,
                            ProbeCandidate::Status::rejected_disc};
        // (b) necessary: the field discriminant matches. Non-monic g defines
        // the same field as the monic minimal polynomial of lc * alpha.
        IntPoly g = entry.min_poly;
        NumberField k = build_field(monic_generator(g), {opt.degree_cap, false});
        if (k.abs_disc() != target_disc) {
            rep.candidates.push_back(std::move(cand));
            continue;
        }
        // (c) splitting screen at the first screen_size unramified primes
        cand.status = ProbeCandidate::Status::identified;
        BigInt skip = BigInt(static_cast<unsigned long>(L.modulus)) * discriminant(g) * g.lc();
        int used = 0;
        BigInt r(1);
        while (used < opt.screen_size) {
            r = next_prime(r);
            if (mpz_divisible_p(skip.get_mpz_t(), r.get_mpz_t())) continue;
            ++used;
            BigInt residue = r % BigInt(static_cast<unsigned long>(L.modulus));
            bool predicted = std::binary_search(L.subgroup.begin(), L.subgroup.end(),
                                                residue.get_ui());
            bool actual = splits_completely_mod_p(g, r.get_ui());
            if (predicted != actual) {
                cand.status = ProbeCandidate::Status::rejected_splitting;
                break;
            }
        }
        rep.candidates.push_back(std::move(cand));
    }

    for (const auto& cand : rep.candidates) {
        if (cand.status != ProbeCandidate::Status::identified) continue;
        rep.none_below = false;
        if (!rep.min_height || cand.height.hi < rep.min_height->lo) {
            rep.min_height = cand.height;
            rep.witness = cand.poly;
        }
    }
    return rep;
}

IntPoly power_min_poly(const IntPoly& f, int k) {
    if (f.degree() < 1) throw UsageError("power_min_poly: degree must be >= 1");
    if (k < 1) throw UsageError("power_min_poly: power must be >= 1");
    IntPoly r = interpolate_integer(f.degree(), [&](const BigInt& x0) {
        std::vector<BigInt> g(k + 1, BigInt(0));
        g[0] = x0;
        g[k] = -1;
        return resultant(f, IntPoly(std::move(g)));
    });
    auto fac = factor_over_Q(r);
    return fac.factors.front().first;  // all irreducible factors coincide
}

} // namespace gammalab
