#ifndef GAMMALAB_INTMATH_HPP
#define GAMMALAB_INTMATH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gammalab {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt powmod(const BigInt& base, const BigInt& e, const BigInt& m) {
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool is_prime(const BigInt& n) {
    // BPSW + Miller-Rabin rounds; deterministic for anything desk-scale.
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

inline BigInt next_prime(const BigInt& n) {
    BigInt r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline unsigned long bit_length(const BigInt& n) {
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    BigRat q(num);
    q /= BigRat(den);
    return q;  // mpq_class keeps canonical form
}

// base-10 parse regardless of leading zeros (the mpz_class string
// constructor auto-detects octal/hex)
inline BigInt parse_bigint(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    return BigInt(s.c_str(), 10);
}

inline BigInt rat_floor(const BigRat& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

// Factorization of a positive integer as prime -> multiplicity.
// Trial division up to 10^6, then Brent's variant of Pollard rho.
std::map<BigInt, unsigned long> factor_map(const BigInt& n);

// Euler phi from the factorization machinery.
BigInt euler_phi(const BigInt& n);

// Divisors of n in increasing order. Throws CapError past `cap` divisors.
std::vector<BigInt> divisors_sorted(const BigInt& n, std::size_t cap = 1u << 20);

// First `count` primes satisfying pred-free streaming (simple helper).
std::vector<std::uint64_t> first_primes(std::size_t count);

} // namespace gammalab

#endif
