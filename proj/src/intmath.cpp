#include "gammalab/intmath.hpp"

#include "gammalab/errors.hpp"

#include <algorithm>

namespace gammalab {

namespace {

constexpr unsigned long kTrialBound = 1000000;

// Brent's cycle-finding variant of Pollard rho. n must be composite, odd,
// and free of factors below the trial bound.
BigInt pollard_brent(const BigInt& n, unsigned long c0) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        BigInt r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        return r;
    }
    for (unsigned long c = c0;; ++c) {
        BigInt y = 2, r = 1, q = 1, g = 1, x, ys;
        while (g == 1) {
            x = y;
            for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
            BigInt k = 0;
            while (k < r && g == 1) {
                ys = y;
                BigInt lim = BigInt(r - k);
                if (lim > 128) lim = 128;
                for (BigInt i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += 128;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n) return g;
        // cycle degenerated for this c; retry with the next constant
    }
}

void factor_rec(const BigInt& n, std::map<BigInt, unsigned long>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    BigInt d = pollard_brent(n, 1);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::map<BigInt, unsigned long> factor_map(const BigInt& n) {
    if (n <= 0) throw UsageError("factor_map: argument must be positive");
    std::map<BigInt, unsigned long> out;
    BigInt m = n;
    for (unsigned long p = 2; p <= kTrialBound && m > 1; p = (p == 2 ? 3 : p + 2)) {
        if (BigInt(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out[BigInt(p)] += 1;
            m /= p;
        }
    }
    if (m > 1) {
        if (is_prime(m))
            out[m] += 1;
        else
            factor_rec(m, out);
    }
    return out;
}

BigInt euler_phi(const BigInt& n) {
    BigInt phi = 1;
    for (const auto& [p, e] : factor_map(n)) phi *= ipow(p, e - 1) * (p - 1);
    return phi;
}

std::vector<BigInt> divisors_sorted(const BigInt& n, std::size_t cap) {
    std::vector<BigInt> divs{1};
    for (const auto& [p, e] : factor_map(n)) {
        std::size_t sz = divs.size();
        if (sz * (e + 1) > cap) throw CapError("divisors_sorted: too many divisors");
        BigInt pk = 1;
        for (unsigned long k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    BigInt p = 1;
    while (out.size() < count) {
        p = next_prime(p);
        out.push_back(p.get_ui());
    }
    return out;
}

} // namespace gammalab
