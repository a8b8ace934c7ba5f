#include "gammalab/polyfactor.hpp"

#include "gammalab/errors.hpp"

#include <algorithm>
#include <random>

namespace gammalab {

namespace {

constexpr int kMaxModularFactors = 24;

// ---------------------------------------------------------------- mod p ---

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return u64(u128(a) * b % p); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1 % p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a % p, p - 2); }  // p prime
};

// Dense polynomial over F_p, constant term first, no leading zeros.
struct PolyP {
    std::vector<u64> c;
    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    u64 lc() const { return c.back(); }
    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

PolyP reduce_mod_p(const IntPoly& f, const Fp& F) {
    PolyP r;
    r.c.resize(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        BigInt v = f.coeff(i) % BigInt(static_cast<unsigned long>(F.p));
        if (v < 0) v += BigInt(static_cast<unsigned long>(F.p));
        r.c[i] = v.get_ui();
    }
    r.normalize();
    return r;
}

PolyP mul(const PolyP& a, const PolyP& b, const Fp& F) {
    if (a.is_zero() || b.is_zero()) return {};
    PolyP r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = (r.c[i + j] + u128(a.c[i]) * b.c[j]) % F.p;
    }
    r.normalize();
    return r;
}

void divrem(const PolyP& f, const PolyP& g, PolyP& q, PolyP& r, const Fp& F) {
    r = f;
    q = {};
    int dg = g.degree();
    if (dg < 0) throw UsageError("mod-p division by zero");
    if (f.degree() < dg) return;
    q.c.assign(f.degree() - dg + 1, 0);
    u64 inv_lc = F.inv(g.lc());
    for (int i = f.degree() - dg; i >= 0; --i) {
        if (int(r.c.size()) - 1 < i + dg) continue;
        u64 t = F.mul(r.c[i + dg], inv_lc);
        if (!t) continue;
        q.c[i] = t;
        for (int j = 0; j <= dg; ++j) r.c[i + j] = F.sub(r.c[i + j], F.mul(t, g.c[j]));
    }
    r.normalize();
    q.normalize();
}

PolyP rem(const PolyP& f, const PolyP& g, const Fp& F) {
    PolyP q, r;
    divrem(f, g, q, r, F);
    return r;
}

PolyP make_monic(const PolyP& f, const Fp& F) {
    PolyP r = f;
    if (r.is_zero() || r.lc() == 1) return r;
    u64 s = F.inv(r.lc());
    for (auto& v : r.c) v = F.mul(v, s);
    return r;
}

PolyP gcd(PolyP a, PolyP b, const Fp& F) {
    while (!b.is_zero()) {
        PolyP r = rem(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, F);
}

PolyP sub(const PolyP& a, const PolyP& b, const Fp& F) {
    PolyP r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), 0);
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = F.sub(r.c[i], b.c[i]);
    r.normalize();
    return r;
}

PolyP add(const PolyP& a, const PolyP& b, const Fp& F) {
    PolyP r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), 0);
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = F.add(r.c[i], b.c[i]);
    r.normalize();
    return r;
}

PolyP pow_mod(PolyP base, BigInt e, const PolyP& f, const Fp& F) {
    PolyP r{{1}};
    base = rem(base, f, F);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, base, F), f, F);
        base = rem(mul(base, base, F), f, F);
        e >>= 1;
    }
    return r;
}

PolyP x_poly() { return PolyP{{0, 1}}; }

PolyP random_poly(int max_deg, const Fp& F, std::mt19937_64& rng) {
    PolyP r;
    r.c.resize(max_deg + 1);
    for (auto& v : r.c) v = rng() % F.p;
    r.normalize();
    return r;
}

// Cantor-Zassenhaus equal-degree splitting: g is squarefree monic, a product
// of irreducibles all of degree d.
void equal_degree_split(const PolyP& g, int d, const Fp& F, std::mt19937_64& rng,
                        std::vector<PolyP>& out) {
    if (g.degree() == d) {
        out.push_back(make_monic(g, F));
        return;
    }
    while (true) {
        PolyP a = random_poly(g.degree() - 1, F, rng);
        if (a.degree() < 1) continue;
        PolyP b;
        if (F.p == 2) {
            // additive trace map of F_{2^d} splits the product
            PolyP t = rem(a, g, F);
            for (int i = 0; i < d; ++i) {
                b = add(b, t, F);
                t = rem(mul(t, t, F), g, F);
            }
        } else {
            BigInt e = (ipow(BigInt(static_cast<unsigned long>(F.p)), d) - 1) / 2;
            b = pow_mod(a, e, g, F);
            if (b.is_zero()) continue;
            b.c[0] = F.sub(b.c[0], 1);
            b.normalize();
        }
        PolyP h = gcd(b, g, F);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            PolyP q, r;
            divrem(g, h, q, r, F);
            equal_degree_split(h, d, F, rng, out);
            equal_degree_split(make_monic(q, F), d, F, rng, out);
            return;
        }
    }
}

// Distinct-degree then equal-degree factorization of a squarefree monic f.
std::vector<PolyP> factor_squarefree_mod_p(PolyP f, const Fp& F, std::mt19937_64& rng) {
    std::vector<PolyP> out;
    f = make_monic(f, F);
    PolyP h = x_poly();
    int d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            out.push_back(f);  // what is left is irreducible
            break;
        }
        h = pow_mod(h, BigInt(static_cast<unsigned long>(F.p)), f, F);
        PolyP hx = sub(h, x_poly(), F);
        PolyP g = gcd(hx, f, F);
        if (g.degree() > 0) {
            equal_degree_split(g, d, F, rng, out);
            PolyP q, r;
            divrem(f, g, q, r, F);
            f = make_monic(q, F);
            h = rem(h, f, F);
        }
    }
    return out;
}

// ------------------------------------------------------------- mod p^k ----

BigInt sym_mod(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

IntPoly poly_sym_mod(const IntPoly& f, const BigInt& m) {
    std::vector<BigInt> c(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) c[i] = sym_mod(f.coeff(i), m);
    return IntPoly(std::move(c));
}

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const BigInt& m) {
    return poly_sym_mod(a * b, m);
}

// division by monic h, all arithmetic mod m
void divrem_monic_mod(const IntPoly& f, const IntPoly& h, const BigInt& m, IntPoly& q,
                      IntPoly& r) {
    divrem_monic(poly_sym_mod(f, m), h, q, r);
    q = poly_sym_mod(q, m);
    r = poly_sym_mod(r, m);
}

struct HenselPair {
    IntPoly g, h, s, t;  // f = g*h, s*g + t*h = 1  (mod m)
};

// One quadratic step: from mod m to mod m^2. g and h monic.
HenselPair hensel_step(const IntPoly& f, const HenselPair& in, const BigInt& m) {
    BigInt m2 = m * m;
    IntPoly e = poly_sym_mod(f - in.g * in.h, m2);
    IntPoly q, r;
    divrem_monic_mod(mul_mod(in.s, e, m2), in.h, m2, q, r);
    IntPoly g1 = poly_sym_mod(in.g + mul_mod(in.t, e, m2) + mul_mod(q, in.g, m2), m2);
    IntPoly h1 = poly_sym_mod(in.h + r, m2);
    IntPoly b = poly_sym_mod(in.s * g1 + in.t * h1 - IntPoly::constant(1), m2);
    IntPoly c, d;
    divrem_monic_mod(mul_mod(in.s, b, m2), h1, m2, c, d);
    IntPoly s1 = poly_sym_mod(in.s - d, m2);
    IntPoly t1 = poly_sym_mod(in.t - mul_mod(in.t, b, m2) - mul_mod(c, g1, m2), m2);
    return {g1, h1, s1, t1};
}

// extended euclid in F_p[x]: s*a + t*b = 1 for coprime a, b
void modp_bezout(const PolyP& a, const PolyP& b, const Fp& F, PolyP& s, PolyP& t) {
    PolyP r0 = a, r1 = b;
    PolyP s0{{1}}, s1{}, t0{}, t1{{1}};
    while (!r1.is_zero()) {
        PolyP q, r2;
        divrem(r0, r1, q, r2, F);
        PolyP s2 = sub(s0, mul(q, s1, F), F);
        PolyP t2 = sub(t0, mul(q, t1, F), F);
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.degree() != 0) throw Error(ExitCode::usage, "modp_bezout: inputs not coprime");
    u64 inv = F.inv(r0.lc());
    for (auto& v : s0.c) v = F.mul(v, inv);
    for (auto& v : t0.c) v = F.mul(v, inv);
    s = s0;
    t = t0;
}

IntPoly lift_from_p(const PolyP& f, const Fp& F) {
    std::vector<BigInt> c(f.c.size());
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        BigInt v(static_cast<unsigned long>(f.c[i]));
        if (2 * f.c[i] > F.p) v -= BigInt(static_cast<unsigned long>(F.p));
        c[i] = v;
    }
    return IntPoly(std::move(c));
}

// Lift the factorization f = prod(parts) from mod p to mod >= target.
// f monic, parts monic and pairwise coprime mod p.
std::vector<IntPoly> hensel_lift_tree(const IntPoly& f, const std::vector<PolyP>& parts,
                                      const Fp& F, const BigInt& target) {
    if (parts.size() == 1) {
        return {f};  // the unique lift of full degree is f itself
    }
    std::size_t half = parts.size() / 2;
    PolyP gp{{1}}, hp{{1}};
    for (std::size_t i = 0; i < half; ++i) gp = mul(gp, parts[i], F);
    for (std::size_t i = half; i < parts.size(); ++i) hp = mul(hp, parts[i], F);
    PolyP sp, tp;
    modp_bezout(gp, hp, F, sp, tp);

    HenselPair cur{lift_from_p(gp, F), lift_from_p(hp, F), lift_from_p(sp, F),
                   lift_from_p(tp, F)};
    BigInt m(static_cast<unsigned long>(F.p));
    while (m < target) {
        cur = hensel_step(f, cur, m);
        m = m * m;
    }
    std::vector<PolyP> left(parts.begin(), parts.begin() + half);
    std::vector<PolyP> right(parts.begin() + half, parts.end());
    auto a = hensel_lift_tree(cur.g, left, F, target);
    auto b = hensel_lift_tree(cur.h, right, F, target);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// ----------------------------------------------------------- recombine ----

BigInt mignotte_bound(const IntPoly& f) {
    // coarse but safe height bound for any monic factor of monic f
    BigInt norm2_sq = 0;
    for (int i = 0; i <= f.degree(); ++i) norm2_sq += f.coeff(i) * f.coeff(i);
    BigInt norm2 = sqrt(norm2_sq) + 1;
    return (norm2 + 1) << (unsigned long)(f.degree() + 1);
}

// Factor a primitive squarefree monic polynomial.
std::vector<IntPoly> factor_squarefree_monic(const IntPoly& f, std::mt19937_64& rng) {
    if (f.degree() == 1) return {f};

    BigInt disc = discriminant(f);
    // smallest p not dividing lc * disc; lc = 1 here
    u64 p = 2;
    while (mpz_divisible_ui_p(disc.get_mpz_t(), p)) {
        BigInt np = next_prime(BigInt(static_cast<unsigned long>(p)));
        p = np.get_ui();
    }
    Fp F{p};

    std::vector<PolyP> parts = factor_squarefree_mod_p(reduce_mod_p(f, F), F, rng);
    std::sort(parts.begin(), parts.end(),
              [](const PolyP& a, const PolyP& b) { return a.c < b.c; });
    if (parts.size() == 1) return {f};
    if (int(parts.size()) > kMaxModularFactors)
        throw CapError("factor_over_Q: more than 24 modular factors");

    BigInt bound = mignotte_bound(f);
    BigInt target = 2 * bound + 1;
    std::vector<IntPoly> lifted = hensel_lift_tree(f, parts, F, target);
    BigInt m(static_cast<unsigned long>(p));
    while (m < target) m = m * m;

    // Zassenhaus subset search over the lifted factors.
    std::vector<IntPoly> result;
    std::vector<int> live(lifted.size());
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = int(i);
    IntPoly rest = f;

    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        IntPoly cand = IntPoly::constant(1);
        for (int i : subset) cand = poly_sym_mod(cand * lifted[i], m);
        // quick screen: a true factor's constant term divides rest(0)
        BigInt r0 = rest.coeff(0), c0 = cand.coeff(0);
        if (r0 != 0 && (c0 == 0 || !mpz_divisible_p(r0.get_mpz_t(), c0.get_mpz_t())))
            return false;
        IntPoly q, r;
        divrem_monic(rest, cand, q, r);
        if (!r.is_zero()) return false;
        result.push_back(cand);
        rest = q;
        std::vector<int> keep;
        for (int i : live)
            if (std::find(subset.begin(), subset.end(), i) == subset.end()) keep.push_back(i);
        live = keep;
        return true;
    };

    for (std::size_t size = 1; size <= live.size();) {
        if (2 * size > live.size()) {
            break;  // remainder is irreducible
        }
        // iterate over subsets of `live` of the given size
        std::vector<int> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = int(i);
        bool found = false;
        while (true) {
            std::vector<int> subset(size);
            for (std::size_t i = 0; i < size; ++i) subset[i] = live[idx[i]];
            if (try_subset(subset)) {
                found = true;
                break;
            }
            // next combination
            int i = int(size) - 1;
            while (i >= 0 && idx[i] == int(live.size()) - int(size) + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++size;
        // after a hit, retry the same size against the reduced live set
    }
    if (rest.degree() > 0) result.push_back(rest);
    return result;
}

std::mt19937_64 seeded_rng_for(const IntPoly& f) {
    // reproducible across runs and thread schedules
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i <= f.degree(); ++i) {
        for (char c : f.coeff(i).get_str()) {
            h ^= std::uint64_t(static_cast<unsigned char>(c));
            h *= 1099511628211ull;
        }
        h ^= 0x9e3779b97f4a7c15ull;
    }
    return std::mt19937_64(h);
}

} // namespace

QFactorization factor_over_Q(const IntPoly& f) {
    if (f.is_zero()) throw UsageError("factor_over_Q: zero polynomial");
    QFactorization out;
    BigInt c = f.content();
    out.unit = BigRat(f.lc() < 0 ? BigInt(-c) : c);
    if (f.degree() == 0) return out;

    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        IntPoly g = part;
        // pull out the x factor first (x is irreducible)
        int xval = 0;
        while (!g.is_zero() && g.coeff(0) == 0) {
            g = div_exact(g, IntPoly::x_power(1));
            ++xval;
        }
        if (xval > 0) out.factors.emplace_back(IntPoly::x_power(1), mult * xval);
        if (g.degree() < 1) continue;

        std::vector<IntPoly> irr;
        if (g.is_monic()) {
            auto rng = seeded_rng_for(g);
            irr = factor_squarefree_monic(g, rng);
        } else {
            // monic transform G(x) = l^(d-1) g(x/l); roots scale by l
            const BigInt l = g.lc();
            std::vector<BigInt> gc(g.degree() + 1);
            gc[g.degree()] = 1;
            BigInt scale = 1;
            for (int i = g.degree() - 1; i >= 0; --i) {
                gc[i] = g.coeff(i) * scale;
                scale *= l;
            }
            IntPoly G(std::move(gc));
            auto rng = seeded_rng_for(G);
            for (const IntPoly& h : factor_squarefree_monic(G, rng)) {
                IntPoly back = compose_linear(h, BigInt(0), l).primitive_part();  // h(l*x)
                if (back.lc() < 0) back = -back;
                irr.push_back(back);
            }
        }
        for (auto& h : irr) {
            if (h.lc() < 0) h = -h;
            out.factors.emplace_back(h.primitive_part(), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bool is_irreducible_over_Q(const IntPoly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_over_Q(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

std::vector<int> factor_degrees_mod_p(const IntPoly& f, std::uint64_t p) {
    Fp F{p};
    PolyP g = reduce_mod_p(f, F);
    if (g.degree() != f.degree())
        throw UsageError("factor_degrees_mod_p: p divides the leading coefficient");
    PolyP d;
    d.c.resize(g.c.size() - 1);
    for (std::size_t i = 1; i < g.c.size(); ++i) d.c[i - 1] = F.mul(g.c[i], i % p);
    d.normalize();
    if (d.is_zero() || gcd(g, d, F).degree() != 0)
        throw UsageError("factor_degrees_mod_p: f is not squarefree mod p");
    auto rng = seeded_rng_for(f);
    std::vector<int> degs;
    for (const auto& part : factor_squarefree_mod_p(g, F, rng)) degs.push_back(part.degree());
    std::sort(degs.begin(), degs.end());
    return degs;
}

bool splits_completely_mod_p(const IntPoly& f, std::uint64_t p) {
    Fp F{p};
    PolyP g = reduce_mod_p(f, F);
    if (g.degree() != f.degree() || g.degree() < 1) return false;
    g = make_monic(g, F);
    // g | x^p - x  <=>  g splits into distinct linear factors
    PolyP xp = pow_mod(x_poly(), BigInt(static_cast<unsigned long>(p)), g, F);
    PolyP diff = sub(xp, x_poly(), F);
    return rem(diff, g, F).is_zero();
}

bool has_root_mod_p(const IntPoly& f, std::uint64_t p) {
    Fp F{p};
    PolyP g = reduce_mod_p(f, F);
    if (g.is_zero()) return true;
    if (g.degree() < 1) return false;
    g = make_monic(g, F);
    PolyP xp = pow_mod(x_poly(), BigInt(static_cast<unsigned long>(p)), g, F);
    return gcd(sub(xp, x_poly(), F), g, F).degree() >= 1;
}

} // namespace gammalab
