#include "gammalab/numfield.hpp"

#include "gammalab/errors.hpp"
#include "gammalab/polyfactor.hpp"

#include <algorithm>
#include <sstream>

namespace gammalab {

namespace {


// rational polynomial product reduced mod monic f, power-basis coords
std::vector<BigRat> mul_mod_f(const std::vector<BigRat>& a, const std::vector<BigRat>& b,
                              const IntPoly& f) {
    int n = f.degree();
    std::vector<BigRat> prod(2 * n - 1, BigRat(0));
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
    }
    for (int m = 2 * n - 2; m >= n; --m) {
        if (prod[m] == 0) continue;
        BigRat c = prod[m];
        prod[m] = 0;
        for (int j = 0; j < n; ++j) prod[m - n + j] -= c * BigRat(f.coeff(j));
    }
    prod.resize(n);
    return prod;
}

// O-coords structure tensor S[i][j] = coords of w_i * w_j; entries integral
// for an order (asserted).
std::vector<ZMat> structure_tensor(const IntPoly& f, const QMat& basis, const QMat& basis_inv) {
    int n = f.degree();
    std::vector<ZMat> s(n, ZMat(n, std::vector<BigInt>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            std::vector<BigRat> prod = mul_mod_f(basis[i], basis[j], f);
            std::vector<BigRat> coords = vec_mul(prod, basis_inv);
            for (int k = 0; k < n; ++k) {
                if (coords[k].get_den() != 1)
                    throw Error(ExitCode::usage, "structure constants not integral");
                s[i][j][k] = coords[k].get_num();
            }
            if (j != i) s[j][i] = s[i][j];
        }
    }
    return s;
}

std::vector<ZMat> tensor_mod_p(const std::vector<ZMat>& s, const BigInt& p) {
    int n = int(s.size());
    std::vector<ZMat> t(n, ZMat(n, std::vector<BigInt>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                BigInt v = s[i][j][k] % p;
                if (v < 0) v += p;
                t[i][j][k] = v;
            }
    return t;
}

std::vector<BigInt> elt_mul_mod_p(const std::vector<BigInt>& x, const std::vector<BigInt>& y,
                                  const std::vector<ZMat>& t, const BigInt& p) {
    int n = int(x.size());
    std::vector<BigInt> z(n, BigInt(0));
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            BigInt c = x[i] * y[j] % p;
            const auto& row = t[i][j];
            for (int k = 0; k < n; ++k)
                if (row[k] != 0) z[k] = (z[k] + c * row[k]) % p;
        }
    }
    return z;
}

std::vector<BigInt> elt_pow_mod_p(std::vector<BigInt> base, BigInt e, const std::vector<ZMat>& t,
                                  const BigInt& p, const std::vector<BigInt>& one) {
    std::vector<BigInt> r = one;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = elt_mul_mod_p(r, base, t, p);
        base = elt_mul_mod_p(base, base, t, p);
        e >>= 1;
    }
    return r;
}

// one enlargement pass at p; returns true if the order grew
bool p_enlarge_once(const IntPoly& f, QMat& basis, const BigInt& p) {
    int n = f.degree();
    QMat basis_inv = q_inverse(basis);
    std::vector<ZMat> s = structure_tensor(f, basis, basis_inv);
    std::vector<ZMat> t = tensor_mod_p(s, p);

    // multiplicative identity of O in O-coords
    std::vector<BigRat> one_power(n, BigRat(0));
    one_power[0] = 1;
    std::vector<BigRat> one_coords = vec_mul(one_power, basis_inv);
    std::vector<BigInt> one(n);
    for (int k = 0; k < n; ++k) {
        if (one_coords[k].get_den() != 1)
            throw Error(ExitCode::usage, "unit not integral in order");
        BigInt v = one_coords[k].get_num() % p;
        if (v < 0) v += p;
        one[k] = v;
    }

    // Frobenius matrix x -> x^p, then power to p^e >= n
    ZMat frob(n);
    for (int i = 0; i < n; ++i) {
        std::vector<BigInt> e_i(n, BigInt(0));
        e_i[i] = 1;
        frob[i] = elt_pow_mod_p(e_i, p, t, p, one);
    }
    ZMat a = frob;
    BigInt pk = p;
    while (pk < n) {
        a = zp_mul(a, frob, p);
        pk *= p;
    }

    ZMat rad_kernel = zp_left_kernel(a, p);

    // radical lattice in O-coords: kernel lifts + p*I
    std::vector<std::vector<BigInt>> gens = rad_kernel;
    for (int i = 0; i < n; ++i) {
        std::vector<BigInt> row(n, BigInt(0));
        row[i] = p;
        gens.push_back(std::move(row));
    }
    ZMat rad = hnf_rows(gens, n);

    // idealizer: W = { y in O : y * I_p  subset  p * I_p }
    QMat rad_q(n, std::vector<BigRat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rad_q[i][j] = BigRat(rad[i][j]);
    QMat rad_inv = q_inverse(rad_q);

    ZMat cond(n, std::vector<BigInt>(n * n, BigInt(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // z = w_i * r_j in O-coords
            std::vector<BigRat> z(n, BigRat(0));
            for (int k = 0; k < n; ++k) {
                if (rad[j][k] == 0) continue;
                for (int l = 0; l < n; ++l) z[l] += BigRat(rad[j][k]) * BigRat(s[i][k][l]);
            }
            std::vector<BigRat> zr = vec_mul(z, rad_inv);  // coords w.r.t. radical basis
            for (int k = 0; k < n; ++k) {
                if (zr[k].get_den() != 1)
                    throw Error(ExitCode::usage, "radical coords not integral");
                BigInt v = zr[k].get_num() % p;
                if (v < 0) v += p;
                cond[i][j * n + k] = v;
            }
        }
    }
    ZMat w_kernel = zp_left_kernel(cond, p);
    if (w_kernel.empty()) return false;  // p-maximal already

    std::vector<std::vector<BigInt>> wgens = w_kernel;
    for (int i = 0; i < n; ++i) {
        std::vector<BigInt> row(n, BigInt(0));
        row[i] = p;
        wgens.push_back(std::move(row));
    }
    ZMat w = hnf_rows(wgens, n);

    // new order basis = (W / p) * old basis
    QMat wq(n, std::vector<BigRat>(n));
    bool grew = false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            wq[i][j] = make_rat(w[i][j], p);
            if (i == j && w[i][j] != p) grew = true;
            if (i != j && w[i][j] != 0) grew = true;
        }
    if (!grew) return false;
    basis = q_mul(wq, basis);
    return true;
}

void canonicalize_basis(NumberField& k) {
    int n = k.degree;
    BigInt den = 1;
    for (const auto& row : k.basis)
        for (const auto& v : row) den = lcm(den, BigInt(v.get_den()));
    std::vector<std::vector<BigInt>> z(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            BigRat scaled = k.basis[i][j] * BigRat(den);
            z[i][j] = scaled.get_num();
        }
    ZMat h = hnf_rows(z, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) k.basis[i][j] = BigRat(h[i][j]) / BigRat(den);
}

} // namespace

std::string NumberField::descriptor() const {
    std::ostringstream os;
    os << "poly=";
    for (int i = 0; i <= min_poly.degree(); ++i) {
        if (i) os << ",";
        os << min_poly.coeff(i).get_str();
    }
    return os.str();
}

NumberField build_field(const IntPoly& f, const BuildOptions& opt) {
    if (f.degree() < 1) throw UsageError("build_field: degree must be >= 1");
    if (!f.is_monic()) throw UsageError("build_field: polynomial must be monic");
    if (f.degree() > opt.degree_cap)
        throw CapError("build_field: degree " + std::to_string(f.degree()) + " exceeds cap " +
                       std::to_string(opt.degree_cap));
    if (opt.check_irreducible && !is_irreducible_over_Q(f))
        throw UsageError("build_field: polynomial is reducible over Q");

    NumberField k;
    k.min_poly = f;
    k.degree = f.degree();
    k.basis = q_identity(k.degree);

    BigInt disc_f = discriminant(f);
    for (const auto& [p, e] : factor_map(abs(disc_f))) {
        if (e < 2) continue;
        while (p_enlarge_once(f, k.basis, p)) {
        }
    }

    BigRat det = q_det(k.basis);
    BigRat abs_det = det < 0 ? BigRat(-det) : det;
    if (abs_det.get_num() != 1)
        throw Error(ExitCode::usage, "build_field: basis determinant not of the form 1/m");
    k.index = abs_det.get_den();
    BigRat d = BigRat(disc_f) * abs_det * abs_det;
    if (d.get_den() != 1) throw Error(ExitCode::usage, "build_field: discriminant not integral");
    k.disc = d.get_num();
    canonicalize_basis(k);
    return k;
}

IntPoly compositum_polynomial(const IntPoly& f, const IntPoly& g, int degree_cap,
                              bool* linearly_disjoint, int* shift) {
    int m = f.degree(), n = g.degree();
    if (m * n > degree_cap)
        throw CapError("compositum: degree " + std::to_string(m * n) + " exceeds cap " +
                       std::to_string(degree_cap));
    if (linearly_disjoint) *linearly_disjoint = true;
    if (shift) *shift = 1;
    if (m == 1) return g;
    if (n == 1) return f;

    for (int k = 1;; ++k) {
        // char poly of alpha + k*beta: Res_y(f(y), g(x - k y)), monic of deg m*n
        IntPoly c = interpolate_integer(m * n, [&](const BigInt& x0) {
            return resultant(f, compose_linear(g, x0, BigInt(-k)));
        });
        if (!is_squarefree(c)) continue;
        if (shift) *shift = k;
        auto fac = factor_over_Q(c);
        if (fac.factors.size() == 1 && fac.factors[0].second == 1) return c;
        // non-linearly-disjoint: take the lexicographically first factor of
        // maximal degree (factors come sorted by (degree, coeffs))
        if (linearly_disjoint) *linearly_disjoint = false;
        const IntPoly* best = nullptr;
        for (const auto& [h, e] : fac.factors)
            if (!best || h.degree() > best->degree()) best = &h;
        return *best;
    }
}

CompositumResult compositum(const NumberField& K, const NumberField& L, int degree_cap) {
    if (K.degree == 1) return {L, true, 1};
    if (L.degree == 1) return {K, true, 1};
    bool disjoint = true;
    int shift = 1;
    IntPoly c = compositum_polynomial(K.min_poly, L.min_poly, degree_cap, &disjoint, &shift);
    NumberField comp = build_field(c, {degree_cap, false});
    return {std::move(comp), disjoint, shift};
}

IntPoly monic_generator(const IntPoly& f_in) {
    IntPoly f = f_in.primitive_part();
    if (f.lc() < 0) f = -f;
    if (f.degree() < 1) throw UsageError("monic_generator: degree must be >= 1");
    if (f.is_monic()) return f;
    std::vector<BigInt> c(f.degree() + 1);
    c[f.degree()] = 1;
    BigInt scale = 1;
    for (int i = f.degree() - 1; i >= 0; --i) {
        c[i] = f.coeff(i) * scale;
        scale *= f.lc();
    }
    return IntPoly(std::move(c));
}

BigInt rel_disc_norm_abs(const BigInt& abs_disc_L, const BigInt& abs_disc_K, int deg_LK) {
    BigInt den = ipow(abs_disc_K, (unsigned long)deg_LK);
    if (!mpz_divisible_p(abs_disc_L.get_mpz_t(), den.get_mpz_t()))
        throw UsageError("rel_disc_norm: fields not in a tower (non-integral quotient)");
    return abs_disc_L / den;
}

BigInt rel_disc_norm(const NumberField& L, const NumberField& K, int deg_LK) {
    if (L.degree != K.degree * deg_LK)
        throw UsageError("rel_disc_norm: degree mismatch with [L:K]");
    return rel_disc_norm_abs(L.abs_disc(), K.abs_disc(), deg_LK);
}

Lemma21Report check_lemma_2_1(const NumberField& K, const NumberField& L, const NumberField& Lp,
                              int degree_cap) {
    CompositumResult comp = compositum(L, Lp, degree_cap);
    const NumberField& LLp = comp.field;
    if (LLp.degree % L.degree != 0 || LLp.degree % Lp.degree != 0 || LLp.degree % K.degree != 0)
        throw UsageError("check_lemma_2_1: compositum degree incompatible with tower");

    Lemma21Report rep;
    rep.deg_LLp = LLp.degree;
    rep.linearly_disjoint = comp.linearly_disjoint;
    rep.lhs = rel_disc_norm(LLp, K, LLp.degree / K.degree);
    BigInt nl = rel_disc_norm(L, K, L.degree / K.degree);
    BigInt nlp = rel_disc_norm(Lp, K, Lp.degree / K.degree);
    rep.rhs = ipow(nl, (unsigned long)(LLp.degree / L.degree)) *
              ipow(nlp, (unsigned long)(LLp.degree / Lp.degree));
    rep.divides = mpz_divisible_p(rep.rhs.get_mpz_t(), rep.lhs.get_mpz_t());
    if (rep.divides) rep.quotient = rep.rhs / rep.lhs;
    return rep;
}

bool tower_screen(const NumberField& K, const NumberField& L, int n_primes) {
    if (L.degree % K.degree != 0) return false;
    BigInt skip = K.min_poly.lc() * L.min_poly.lc() * discriminant(K.min_poly) *
                  discriminant(L.min_poly);
    int used = 0;
    BigInt p(2);
    while (used < n_primes) {
        p = next_prime(p);
        if (mpz_divisible_p(skip.get_mpz_t(), p.get_mpz_t())) continue;
        ++used;
        std::uint64_t pu = p.get_ui();
        if (has_root_mod_p(L.min_poly, pu) && !has_root_mod_p(K.min_poly, pu)) return false;
    }
    return true;
}

} // namespace gammalab
