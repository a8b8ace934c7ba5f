#include "gammalab/errors.hpp"
#include "gammalab/factored_real.hpp"
#include "gammalab/intmath.hpp"

#include <doctest.h>
#include <mpfr.h>

#include <random>

using namespace gammalab;

namespace {

FactoredReal fr(std::initializer_list<std::pair<long, std::pair<long, long>>> items) {
    FactoredReal::Map m;
    for (const auto& [p, e] : items) m[BigInt(p)] = make_rat(BigInt(e.first), BigInt(e.second));
    return FactoredReal::from_map(std::move(m));
}

} // namespace

TEST_CASE("factor_integer small cases") {
    CHECK(factor_integer(1).is_one());
    auto f = factor_integer(2304);
    FactoredReal::Map want{{BigInt(2), BigRat(8)}, {BigInt(3), BigRat(2)}};
    CHECK(f.factors() == want);
    auto g = factor_integer(14641);
    FactoredReal::Map want2{{BigInt(11), BigRat(4)}};
    CHECK(g.factors() == want2);
    CHECK_THROWS_AS(factor_integer(0), UsageError);
}

TEST_CASE("factor round trip on a random corpus up to 1e9") {
    std::mt19937_64 rng(20240801);
    std::uniform_int_distribution<long> dist(1, 1000000000L);
    for (int i = 0; i < 300; ++i) {
        BigInt n(dist(rng));
        CHECK(factor_integer(n).to_integer() == n);
    }
    // a few adversarial shapes
    std::vector<BigInt> hard{BigInt("999999999989"), BigInt(BigInt("1000003") * BigInt("1000033")),
                             ipow(BigInt(2), 40), ipow(BigInt(10007), 3)};
    for (const BigInt& n : hard) CHECK(factor_integer(n).to_integer() == n);
}

TEST_CASE("factor_map rejects nonpositive and verifies primality of bases") {
    CHECK_THROWS_AS(FactoredReal::prime_power(BigInt(6), BigRat(1)), UsageError);
    CHECK_THROWS_AS(FactoredReal::prime_power(BigInt(1), BigRat(1)), UsageError);
    CHECK(FactoredReal::prime_power(BigInt(7), BigRat(0)).is_one());
}

TEST_CASE("fr_compare examples") {
    auto a = fr({{2, {1, 2}}});
    auto b = fr({{2, {3, 4}}});
    CHECK(a < b);

    // {2:1/2, 3:1/8} vs {3:1}: cleared by d=8, 2^8*3 = 768 < 3^16 = 43046721
    auto c = fr({{2, {1, 2}}, {3, {1, 8}}});
    auto three = fr({{3, {1, 1}}});
    CHECK(c < three);

    CHECK(FactoredReal::one().compare(FactoredReal::one()) == std::strong_ordering::equal);
}

TEST_CASE("fr ops examples") {
    auto x = factor_integer(2304).pow(make_rat(1, 16));
    CHECK(x == fr({{2, {1, 2}}, {3, {1, 8}}}));

    auto y = fr({{2, {5, 3}}, {7, {1, 2}}});
    CHECK((y * y.inverse()).is_one());
    CHECK((y / y).is_one());

    CHECK(fr({{3, {1, 1}}}).pow(make_rat(1, 4)) == fr({{3, {1, 4}}}));
}

TEST_CASE("order is total and consistent with multiplication") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> pe(-5, 5), pick(0, 3);
    const long primes[] = {2, 3, 5, 7};
    auto random_fr = [&] {
        FactoredReal::Map m;
        for (int i = 0; i < 3; ++i) {
            long p = primes[pick(rng)];
            int num = pe(rng);
            int den = 1 + std::abs(pe(rng));
            if (num != 0) m[BigInt(p)] += make_rat(BigInt(num), BigInt(den));
        }
        for (auto it = m.begin(); it != m.end();)
            it = (it->second == 0) ? m.erase(it) : std::next(it);
        return FactoredReal::from_map(std::move(m));
    };
    for (int i = 0; i < 200; ++i) {
        auto a = random_fr(), b = random_fr(), c = random_fr();
        auto ord = a.compare(b);
        // antisymmetry
        CHECK(b.compare(a) == (ord == std::strong_ordering::less    ? std::strong_ordering::greater
                               : ord == std::strong_ordering::greater ? std::strong_ordering::less
                                                                      : std::strong_ordering::equal));
        // multiplication preserves order
        CHECK((a * c).compare(b * c) == ord);
        // rational power then inverse power is identity
        auto q = make_rat(BigInt(2 + (i % 5)), BigInt(3));
        CHECK(a.pow(q).pow(BigRat(1) / q) == a);
    }
}

TEST_CASE("log2_bounds encloses mpfr log2 and is tight") {
    mpfr_t ref, lo, hi;
    mpfr_init2(ref, 512);
    mpfr_init2(lo, 512);
    mpfr_init2(hi, 512);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(2, 100000000L);
    for (int i = 0; i < 60; ++i) {
        BigInt p = next_prime(BigInt(dist(rng)));
        for (long prec : {64L, 128L, 256L}) {
            auto b = detail::log2_bounds(p, prec);
            CHECK(b.lo < b.hi);
            mpfr_set_z(ref, p.get_mpz_t(), MPFR_RNDN);
            mpfr_log2(ref, ref, MPFR_RNDN);
            mpfr_set_z(lo, b.lo.get_mpz_t(), MPFR_RNDN);
            mpfr_div_2ui(lo, lo, prec, MPFR_RNDN);
            mpfr_set_z(hi, b.hi.get_mpz_t(), MPFR_RNDN);
            mpfr_div_2ui(hi, hi, prec, MPFR_RNDN);
            CHECK(mpfr_cmp(lo, ref) <= 0);
            CHECK(mpfr_cmp(hi, ref) >= 0);
            // width at most a few ulps at the requested precision
            CHECK(b.hi - b.lo <= 8);
        }
    }
    mpfr_clear(ref);
    mpfr_clear(lo);
    mpfr_clear(hi);
}

TEST_CASE("certified-log route agrees with materialization") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> pe(-40, 40);
    const long primes[] = {2, 3, 5, 7, 11, 13};
    for (int i = 0; i < 300; ++i) {
        FactoredReal::Map ma, mb;
        for (long p : primes) {
            int ea = pe(rng), eb = pe(rng);
            if (ea) ma[BigInt(p)] = make_rat(BigInt(ea), BigInt(1 + (i % 7)));
            if (eb) mb[BigInt(p)] = make_rat(BigInt(eb), BigInt(1 + (i % 5)));
        }
        auto a = FactoredReal::from_map(std::move(ma));
        auto b = FactoredReal::from_map(std::move(mb));
        auto fast = detail::compare_certified_log(a, b, 1 << 14);
        REQUIRE(fast.has_value());
        CHECK(*fast == detail::compare_materialized(a, b));
    }
}

TEST_CASE("huge-denominator comparisons stay fast and correct") {
    // gamma-shaped values: q^((p-1)/(p*d)) with d the degree of an 8-stage
    // tower compositum; materialized integers would have ~1e7 bits.
    const long d = 2L * 3 * 5 * 7 * 11 * 13 * 17 * 19;
    auto g1 = FactoredReal::prime_power(BigInt(191), make_rat(BigInt(18), BigInt(19L * d)));
    auto g2 = FactoredReal::prime_power(BigInt(103), make_rat(BigInt(16), BigInt(17L * d)));
    auto three = FactoredReal::from_integer(3);
    CHECK(g1 < three);
    CHECK(g2 < three);
    CHECK(g2.compare(g1) == (g2 < g1 ? std::strong_ordering::less : std::strong_ordering::greater));
    // sanity: both are > 1
    CHECK(g1 > FactoredReal::one());
    CHECK(g2 > FactoredReal::one());
}

TEST_CASE("decimal rendering is plausible and report-only") {
    auto v = factor_integer(2304).pow(make_rat(1, 16));
    CHECK(v.to_decimal(5) == "1.6224");
    CHECK(v.to_decimal(10) == "1.622389604");
    CHECK(factor_integer(14641).to_string() == "11^4");
    CHECK(fr({{2, {1, 2}}, {3, {1, 8}}}).to_string() == "2^(1/2) * 3^(1/8)");
    CHECK(FactoredReal::one().to_string() == "1");
}

TEST_CASE("divisors and phi") {
    auto d = divisors_sorted(BigInt(24));
    std::vector<BigInt> want{1, 2, 3, 4, 6, 8, 12, 24};
    CHECK(d == want);
    CHECK(euler_phi(BigInt(24)) == 8);
    CHECK(euler_phi(BigInt(1)) == 1);
    CHECK(euler_phi(BigInt(11)) == 10);
}
