#include "gammalab/abelian.hpp"

#include "gammalab/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gammalab {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kModulusCap = u64(1) << 62;
constexpr std::size_t kElementBudget = 5u << 20;  // max materialized subgroup elements
constexpr std::size_t kCharBudget = 200000;       // max phi(m) for character work

u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::map<u64, int> factor_u64(u64 n) {
    std::map<u64, int> out;
    for (const auto& [p, e] : factor_map(BigInt(static_cast<unsigned long>(n))))
        out[p.get_ui()] = int(e);
    return out;
}

u64 phi_u64(u64 n) {
    u64 phi = 1;
    for (const auto& [p, e] : factor_u64(n)) {
        u64 pe = 1;
        for (int i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

std::vector<u64> divisors_u64(u64 n) {
    std::vector<u64> divs{1};
    for (const auto& [p, e] : factor_u64(n)) {
        std::size_t sz = divs.size();
        u64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// least primitive root modulo an odd prime power q^a
u64 primitive_root(u64 q, int a) {
    u64 phi_q = q - 1;
    auto fac = factor_u64(phi_q);
    u64 g = 0;
    for (u64 c = 2; c < q; ++c) {
        bool ok = true;
        for (const auto& [r, e] : fac)
            if (powmod_u64(c, phi_q / r, q) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            g = c;
            break;
        }
    }
    if (a == 1) return g;
    u64 q2 = q * q;
    if (powmod_u64(g, q - 1, q2) == 1) g += q;
    return g;  // a primitive root mod q^a for all a >= 1
}

// CRT lift: x = r mod pp, x = 1 mod (m/pp)
u64 crt_lift_unit(u64 r, u64 pp, u64 m) {
    u64 rest = m / pp;
    if (rest == 1) return r % m;
    // x = r + pp * t, t = (1 - r) * inv(pp) mod rest
    u64 pp_inv = powmod_u64(pp % rest, phi_u64(rest) - 1, rest);
    u64 diff = (1 % rest + rest - r % rest) % rest;
    u64 t = mulmod(diff, pp_inv, rest);
    return (r + u128(pp) * t) % m;
}

struct Component {
    u64 prime;
    int exp;
    u64 prime_power;
    std::vector<u64> gens;    // lifted to mod m
    std::vector<u64> orders;  // matching gens
    std::vector<u64> local_gens;  // mod prime_power
};

struct UnitGroup {
    u64 m;
    std::vector<Component> comps;
};

UnitGroup unit_group(u64 m) {
    UnitGroup g;
    g.m = m;
    if (m <= 2) return g;
    for (const auto& [q, a] : factor_u64(m)) {
        u64 pp = 1;
        for (int i = 0; i < a; ++i) pp *= q;
        Component c{q, a, pp, {}, {}, {}};
        if (q == 2) {
            if (a == 1) continue;
            if (a == 2) {
                c.local_gens = {3};
                c.orders = {2};
            } else {
                u64 five = 5 % pp;
                c.local_gens = {pp - 1, five};
                c.orders = {2, u64(1) << (a - 2)};
            }
        } else {
            c.local_gens = {primitive_root(q, a) % pp};
            c.orders = {phi_u64(pp)};
        }
        for (u64 lg : c.local_gens) c.gens.push_back(crt_lift_unit(lg, pp, m));
        g.comps.push_back(std::move(c));
    }
    return g;
}

// generators (lifted mod m) of ker((Z/m)* -> (Z/d)*), d | m
std::vector<u64> kernel_generators(const UnitGroup& g, u64 d) {
    std::vector<u64> out;
    for (const auto& c : g.comps) {
        u64 db = gcd_u64(d, c.prime_power);  // q^min(a,b)
        if (c.prime == 2) {
            int b = 0;
            for (u64 t = db; t > 1; t /= 2) ++b;
            int a = c.exp;
            if (a < 2) continue;
            if (b <= 1) {
                for (u64 lg : c.local_gens) out.push_back(crt_lift_unit(lg, c.prime_power, g.m));
            } else if (b == 2) {
                if (a >= 3) {
                    u64 five = 5 % c.prime_power;
                    out.push_back(crt_lift_unit(five, c.prime_power, g.m));
                }
                // a == 2: kernel trivial
            } else {
                // b >= 3: kernel = <5^(2^(b-2))>
                if (a >= 3 && b < a) {
                    u64 e = u64(1) << (b - 2);
                    u64 v = powmod_u64(5 % c.prime_power, e, c.prime_power);
                    out.push_back(crt_lift_unit(v, c.prime_power, g.m));
                }
            }
        } else {
            u64 phi_db = phi_u64(db);
            u64 v = powmod_u64(c.local_gens[0], phi_db, c.prime_power);
            if (v != 1) out.push_back(crt_lift_unit(v, c.prime_power, g.m));
        }
    }
    return out;
}

// closure of a generating set under multiplication mod m
std::vector<u64> closure(u64 m, std::vector<u64> gens) {
    std::set<u64> seen{1 % m};
    std::vector<u64> work{1 % m};
    for (u64& v : gens) v %= m;
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (u64 gv : gens) {
            u64 x = mulmod(work[i], gv, m);
            if (seen.insert(x).second) {
                work.push_back(x);
                if (seen.size() > kElementBudget)
                    throw CapError("abelian: subgroup element budget exceeded");
            }
        }
    }
    return {seen.begin(), seen.end()};
}

// subgroup S (sorted) extended by one element: union of cosets S x^k
std::vector<u64> extend_subgroup(u64 m, const std::vector<u64>& s, u64 x) {
    std::set<u64> acc(s.begin(), s.end());
    u64 xs = x % m;
    u64 pw = xs;
    while (!std::binary_search(s.begin(), s.end(), pw)) {
        for (u64 v : s) acc.insert(mulmod(v, pw, m));
        pw = mulmod(pw, xs, m);
        if (acc.size() > kElementBudget) throw CapError("abelian: subgroup element budget");
    }
    return {acc.begin(), acc.end()};
}

bool in_sorted(const std::vector<u64>& v, u64 x) {
    return std::binary_search(v.begin(), v.end(), x);
}

AbelianField canonicalize(u64 m, std::vector<u64> subgroup) {
    std::sort(subgroup.begin(), subgroup.end());
    if (m <= 2) return AbelianField{1, {0}, 1};
    UnitGroup g = unit_group(m);
    u64 phi_m = phi_u64(m);
    long degree = long(phi_m / subgroup.size());
    for (u64 d : divisors_u64(m)) {
        bool contains_kernel = true;
        for (u64 kg : kernel_generators(g, d))
            if (!in_sorted(subgroup, kg)) {
                contains_kernel = false;
                break;
            }
        if (!contains_kernel) continue;
        if (d <= 2) return AbelianField{1, {0}, 1};
        std::set<u64> image;
        for (u64 h : subgroup) image.insert(h % d);
        AbelianField out;
        out.modulus = d;
        out.subgroup.assign(image.begin(), image.end());
        out.degree = long(phi_u64(d) / out.subgroup.size());
        if (out.degree != degree)
            throw Error(ExitCode::usage, "abelian: canonicalization degree mismatch");
        return out;
    }
    throw Error(ExitCode::usage, "abelian: canonicalization failed");
}

// small generating set of a subgroup given as a full element list
std::vector<u64> generating_set(u64 m, const std::vector<u64>& subgroup) {
    std::vector<u64> gens;
    std::vector<u64> have{1 % m};
    for (u64 x : subgroup) {
        if (in_sorted(have, x)) continue;
        gens.push_back(x);
        have = extend_subgroup(m, have, x);
        if (have.size() == subgroup.size()) break;
    }
    return gens;
}

} // namespace

AbelianField rationals() { return AbelianField{1, {0}, 1}; }

std::string AbelianField::descriptor() const {
    std::ostringstream os;
    os << "m=" << modulus << ";H=";
    for (std::size_t i = 0; i < subgroup.size(); ++i) {
        if (i) os << ",";
        os << subgroup[i];
    }
    return os.str();
}

AbelianField make_abelian(u64 modulus, const std::vector<u64>& subgroup_gens) {
    if (modulus == 0) throw UsageError("make_abelian: modulus must be positive");
    if (modulus >= kModulusCap) throw CapError("make_abelian: modulus too large");
    if (modulus <= 2) return rationals();
    for (u64 x : subgroup_gens)
        if (gcd_u64(x % modulus, modulus) != 1)
            throw UsageError("make_abelian: subgroup element not coprime to modulus");
    return canonicalize(modulus, closure(modulus, subgroup_gens));
}

AbelianField cyclic_subfield(u64 q, u64 p) {
    if (!is_prime(BigInt(static_cast<unsigned long>(q))))
        throw UsageError("cyclic_subfield: q must be prime");
    if (!is_prime(BigInt(static_cast<unsigned long>(p))))
        throw UsageError("cyclic_subfield: p must be prime");
    if ((q - 1) % p != 0) throw UsageError("cyclic_subfield: q is not 1 mod p");
    u64 g = primitive_root(q, 1);
    AbelianField f = make_abelian(q, {powmod_u64(g, p, q)});
    if (f.degree != long(p))
        throw Error(ExitCode::usage, "cyclic_subfield: degree mismatch");
    return f;
}

AbelianField quadratic_field(long d) {
    if (d == 0 || d == 1) throw UsageError("quadratic_field: d must be squarefree, not 0 or 1");
    BigInt bd(d);
    for (const auto& [p, e] : factor_map(abs(bd)))
        if (e >= 2) throw UsageError("quadratic_field: d must be squarefree");
    long disc = (((d % 4) + 4) % 4 == 1) ? d : 4 * d;
    u64 m = u64(disc < 0 ? -disc : disc);
    std::vector<u64> h;
    for (u64 x = 1; x < m; ++x) {
        if (gcd_u64(x, m) != 1) continue;
        if (mpz_kronecker_ui(BigInt(disc).get_mpz_t(), static_cast<unsigned long>(x)) == 1)
            h.push_back(x);
    }
    AbelianField f = canonicalize(m, std::move(h));
    if (f.degree != 2 || f.modulus != m)
        throw Error(ExitCode::usage, "quadratic_field: construction failed");
    return f;
}

AbelianField cyclotomic_field(u64 n) {
    if (n == 0) throw UsageError("cyclotomic_field: n must be positive");
    return make_abelian(n, {});
}

AbelianField join(const AbelianField& a, const AbelianField& b) {
    if (a.is_rationals()) return b;
    if (b.is_rationals()) return a;
    u64 g = gcd_u64(a.modulus, b.modulus);
    u128 lcm_wide = u128(a.modulus) / g * b.modulus;
    if (lcm_wide >= kModulusCap) throw CapError("join: compositum conductor too large");
    u64 m = u64(lcm_wide);
    // a unit mod m is determined by the compatible pair (x mod ma, y mod mb);
    // x + ma*t = y (mod mb) solves to t = (y-x)/g * inv(ma/g) mod (mb/g),
    // and gcd(ma/g, mb/g) = 1 always
    u64 ma = a.modulus, mb = b.modulus;
    u64 mb_red = mb / g, ma_red = ma / g;
    std::vector<u64> h;
    h.reserve(a.subgroup.size() * b.subgroup.size());
    u64 inv = 0;
    if (mb_red > 1) inv = powmod_u64(ma_red % mb_red, phi_u64(mb_red) - 1, mb_red);
    for (u64 x : a.subgroup) {
        for (u64 y : b.subgroup) {
            if (x % g != y % g) continue;
            u64 z;
            if (mb_red == 1) {
                z = x % m;
            } else {
                u64 diff = (y % mb + mb - x % mb) % mb;  // divisible by g
                u64 t = mulmod((diff / g) % mb_red, inv, mb_red);
                z = (x + u128(ma) * t) % m;
            }
            h.push_back(z);
        }
    }
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    return canonicalize(m, std::move(h));
}

AbelianField meet(const AbelianField& a, const AbelianField& b) {
    u64 g = gcd_u64(a.modulus, b.modulus);
    if (g <= 2) return rationals();
    std::vector<u64> gens;
    for (u64 x : a.subgroup) gens.push_back(x % g);
    for (u64 y : b.subgroup) gens.push_back(y % g);
    return canonicalize(g, closure(g, gens));
}

bool is_subfield(const AbelianField& sub, const AbelianField& super) {
    if (sub.is_rationals()) return true;
    if (super.modulus % sub.modulus != 0) return false;
    for (u64 h : super.subgroup)
        if (!in_sorted(sub.subgroup, h % sub.modulus)) return false;
    return true;
}

std::vector<AbelianField> intermediate_fields(const AbelianField& K, const AbelianField& M,
                                              long subgroup_cap) {
    if (!is_subfield(K, M)) throw UsageError("intermediate_fields: K is not a subfield of M");
    if (M.degree % K.degree != 0)
        throw Error(ExitCode::usage, "intermediate_fields: degree inconsistency");
    long quotient = M.degree / K.degree;
    if (quotient > subgroup_cap)
        throw CapError("intermediate_fields: [M:K] = " + std::to_string(quotient) +
                       " exceeds subgroup cap " + std::to_string(subgroup_cap));

    u64 m = M.modulus;
    if (m == 1) return {rationals()};
    UnitGroup g = unit_group(m);

    // fixing subgroup of K at modulus m: preimage of H_K
    std::vector<u64> hk_lift;
    {
        std::vector<u64> gens = kernel_generators(g, K.modulus);
        if (!K.is_rationals()) {
            std::vector<u64> kgens = generating_set(K.modulus, K.subgroup);
            for (u64 h : kgens) {
                u64 x = h;
                while (gcd_u64(x, m) != 1) x += K.modulus;
                gens.push_back(x % m);
            }
        }
        hk_lift = closure(m, gens);
    }
    if (long(hk_lift.size() / M.subgroup.size()) != quotient)
        throw Error(ExitCode::usage, "intermediate_fields: lift size mismatch");

    // BFS over the subgroup lattice between H_M and the lift of H_K
    std::set<std::vector<u64>> seen;
    std::vector<std::vector<u64>> work{M.subgroup};
    seen.insert(M.subgroup);
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (u64 x : hk_lift) {
            if (in_sorted(work[i], x)) continue;
            std::vector<u64> bigger = extend_subgroup(m, work[i], x);
            if (seen.insert(bigger).second) {
                work.push_back(std::move(bigger));
                if (seen.size() > 20000)
                    throw CapError("intermediate_fields: subgroup lattice too large");
            }
        }
    }
    std::vector<AbelianField> out;
    out.reserve(work.size());
    for (const auto& s : work) out.push_back(canonicalize(m, s));
    std::sort(out.begin(), out.end());
    return out;
}

FactoredReal abelian_disc(const AbelianField& a) {
    if (a.is_rationals()) return FactoredReal::one();
    u64 m = a.modulus;
    u64 phi_m = phi_u64(m);
    if (phi_m > kCharBudget) throw CapError("abelian_disc: phi(m) exceeds character budget");
    UnitGroup g = unit_group(m);

    // flatten components into a generator list
    struct Gen {
        u64 value;
        u64 order;
    };
    std::vector<Gen> gens;
    for (const auto& c : g.comps)
        for (std::size_t i = 0; i < c.gens.size(); ++i) gens.push_back({c.gens[i], c.orders[i]});

    // discrete logs w.r.t. the generator list, by meet-in-the-middle-free
    // brute force per component (component orders are desk-scale)
    auto dlog_vector = [&](u64 x) {
        std::vector<u64> e(gens.size());
        std::size_t gi = 0;
        for (const auto& c : g.comps) {
            u64 pp = c.prime_power;
            u64 xr = x % pp;
            if (c.prime == 2 && c.exp >= 3) {
                // (Z/2^a)* = <-1> x <5>
                u64 five = 5 % pp, m1 = pp - 1;
                bool found = false;
                for (u64 s = 0; s < 2 && !found; ++s) {
                    u64 base = s ? m1 : 1;
                    u64 acc = base;
                    for (u64 k = 0; k < c.orders[1]; ++k) {
                        if (acc == xr) {
                            e[gi] = s;
                            e[gi + 1] = k;
                            found = true;
                            break;
                        }
                        acc = mulmod(acc, five, pp);
                    }
                }
                if (!found) throw Error(ExitCode::usage, "abelian: dlog failed (2-part)");
                gi += 2;
            } else {
                u64 gen = c.local_gens[0] % pp;
                u64 acc = 1;
                bool found = false;
                for (u64 k = 0; k < c.orders[0]; ++k) {
                    if (acc == xr) {
                        e[gi] = k;
                        found = true;
                        break;
                    }
                    acc = mulmod(acc, gen, pp);
                }
                if (!found) throw Error(ExitCode::usage, "abelian: dlog failed");
                gi += 1;
            }
        }
        return e;
    };

    std::vector<u64> hgens = generating_set(m, a.subgroup);
    std::vector<std::vector<u64>> hlogs;
    for (u64 h : hgens) hlogs.push_back(dlog_vector(h));

    u64 bigN = 1;
    for (const auto& gen : gens) bigN = std::lcm(bigN, gen.order);

    // kernel generator dlogs per divisor, for conductors
    std::vector<u64> divs = divisors_u64(m);
    std::vector<std::vector<std::vector<u64>>> ker_logs(divs.size());
    for (std::size_t di = 0; di < divs.size(); ++di)
        for (u64 kg : kernel_generators(g, divs[di])) ker_logs[di].push_back(dlog_vector(kg));

    auto chi_trivial_on = [&](const std::vector<u64>& chi, const std::vector<u64>& logs) {
        u128 acc = 0;
        for (std::size_t j = 0; j < gens.size(); ++j)
            acc += u128(chi[j]) * logs[j] % bigN * (bigN / gens[j].order) % bigN;
        return acc % bigN == 0;
    };

    FactoredReal disc = FactoredReal::one();
    long count = 0;
    // iterate all characters chi(g_j) = zeta_{order_j}^{chi_j}
    std::vector<u64> chi(gens.size(), 0);
    while (true) {
        bool trivial_on_h = true;
        for (const auto& logs : hlogs)
            if (!chi_trivial_on(chi, logs)) {
                trivial_on_h = false;
                break;
            }
        if (trivial_on_h) {
            ++count;
            for (std::size_t di = 0; di < divs.size(); ++di) {
                bool induced = true;
                for (const auto& logs : ker_logs[di])
                    if (!chi_trivial_on(chi, logs)) {
                        induced = false;
                        break;
                    }
                if (induced) {
                    disc = disc *
                           FactoredReal::from_integer(BigInt(static_cast<unsigned long>(divs[di])));
                    break;
                }
            }
        }
        // increment mixed-radix counter
        std::size_t j = 0;
        while (j < gens.size()) {
            if (++chi[j] < gens[j].order) break;
            chi[j] = 0;
            ++j;
        }
        if (j == gens.size()) break;
    }
    if (count != a.degree)
        throw Error(ExitCode::usage, "abelian_disc: character count does not match degree");
    return disc;
}

bool linearly_disjoint(const AbelianField& a, const AbelianField& b, const AbelianField& over) {
    if (!is_subfield(over, a) || !is_subfield(over, b))
        throw UsageError("linearly_disjoint: base is not contained in both fields");
    AbelianField j = join(a, b);
    AbelianField mt = meet(a, b);
    long da = a.degree / over.degree, db = b.degree / over.degree;
    return mt == over && j.degree == over.degree * da * db;
}

namespace {

IntPoly cyclotomic_poly(u64 m, std::map<u64, IntPoly>& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<BigInt> xm(m + 1, BigInt(0));
    xm[0] = -1;
    xm[m] = 1;
    IntPoly num(std::move(xm));
    for (u64 d : divisors_u64(m))
        if (d < m) num = div_exact(num, cyclotomic_poly(d, cache));
    cache.emplace(m, num);
    return num;
}

} // namespace

GeneratorPoly generator_polynomial(const AbelianField& a, int degree_cap) {
    if (a.degree > degree_cap)
        throw CapError("generator_polynomial: degree exceeds cap");
    if (a.is_rationals()) return {IntPoly{-1, 1}, 1};
    const u64 m = a.modulus;
    const long n = a.degree;

    // coset representatives of H in (Z/m)*
    std::vector<u64> reps;
    {
        std::set<u64> covered;
        for (u64 c = 1; c < m && long(reps.size()) < n; ++c) {
            if (gcd_u64(c, m) != 1 || covered.count(c)) continue;
            reps.push_back(c);
            for (u64 h : a.subgroup) covered.insert(mulmod(c, h, m));
        }
    }

    std::map<u64, IntPoly> cyc_cache;
    IntPoly phi_m = cyclotomic_poly(m, cyc_cache);

    for (int t = 1; t <= 8; ++t) {
        // eta_c = sum_{h in H} sum_{j=1..t} zeta^(j c h), as exponent vectors
        std::vector<std::vector<BigInt>> eta(reps.size(), std::vector<BigInt>(m, BigInt(0)));
        for (std::size_t ci = 0; ci < reps.size(); ++ci)
            for (u64 h : a.subgroup)
                for (int j = 1; j <= t; ++j)
                    eta[ci][mulmod(mulmod(reps[ci], h, m), u64(j) % m, m)] += 1;

        // P(x) = prod_c (x - eta_c) with coefficients in Z[Y]/(Y^m - 1)
        std::vector<std::vector<BigInt>> coeff(n + 1, std::vector<BigInt>(m, BigInt(0)));
        coeff[0][0] = 1;  // constant polynomial 1
        for (long used = 0; used < n; ++used) {
            const auto& e = eta[used];
            // new[k] = old[k-1] - e * old[k]   (cyclic convolution by e)
            std::vector<std::vector<BigInt>> next(n + 1, std::vector<BigInt>(m, BigInt(0)));
            for (long k = used + 1; k >= 0; --k) {
                if (k > 0) next[k] = coeff[k - 1];
                if (k <= used) {
                    for (u64 i = 0; i < m; ++i) {
                        if (e[i] == 0) continue;
                        for (u64 s = 0; s < m; ++s) {
                            if (coeff[k][s] == 0) continue;
                            next[k][(i + s) % m] -= e[i] * coeff[k][s];
                        }
                    }
                }
            }
            coeff = std::move(next);
        }

        // reduce each coefficient mod Phi_m; must land in Z
        std::vector<BigInt> c_int(n + 1);
        bool ok = true;
        for (long k = 0; k <= n && ok; ++k) {
            IntPoly y(std::vector<BigInt>(coeff[k]));
            IntPoly q, r;
            divrem_monic(y, phi_m, q, r);
            if (r.degree() > 0) ok = false;
            else c_int[k] = r.coeff(0);
        }
        if (!ok)
            throw Error(ExitCode::usage, "generator_polynomial: coefficient not rational");

        IntPoly p(std::move(c_int));
        if (p.degree() == n && is_squarefree(p)) return {p, t};
        // degenerate period: retry with the next invariant sum
    }
    throw Error(ExitCode::usage,
                "generator_polynomial: degenerate period after all fallbacks for " +
                    a.descriptor());
}

AbelianField parse_abelian(const std::string& text) {
    auto fail = [&] { throw UsageError("bad abelian descriptor: " + text); };
    if (text.rfind("m=", 0) != 0) fail();
    auto semi = text.find(';');
    if (semi == std::string::npos) fail();
    u64 m = 0;
    try {
        m = std::stoull(text.substr(2, semi - 2));
    } catch (...) {
        fail();
    }
    std::string rest = text.substr(semi + 1);
    if (rest.rfind("H=", 0) != 0) fail();
    rest = rest.substr(2);
    if (!rest.empty() && rest.front() == '{') rest = rest.substr(1);
    if (!rest.empty() && rest.back() == '}') rest.pop_back();
    std::vector<u64> gens;
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            gens.push_back(std::stoull(item));
        } catch (...) {
            fail();
        }
    }
    if (m == 1) return rationals();
    return make_abelian(m, gens);
}

} // namespace gammalab
