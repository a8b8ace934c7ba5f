#include "gammalab/errors.hpp"
#include "gammalab/numfield.hpp"
#include "gammalab/polyfactor.hpp"

#include <doctest.h>

#include <random>

using namespace gammalab;

TEST_CASE("x^2 - 5: disc 5, index 2, basis {1, (1+x)/2}") {
    NumberField k = build_field(IntPoly{-5, 0, 1});
    CHECK(k.degree == 2);
    CHECK(k.disc == 5);
    CHECK(k.index == 2);
    REQUIRE(k.basis.size() == 2);
    CHECK(k.basis[0] == std::vector<BigRat>{BigRat(1), BigRat(0)});
    CHECK(k.basis[1] == std::vector<BigRat>{make_rat(1, 2), make_rat(1, 2)});
    // the golden-ratio style generator: y = (1+x)/2 satisfies y^2 - y - 1 = 0
    // tower check on the polynomial discriminant: 20 = 2^2 * 5
    CHECK(discriminant(k.min_poly) == k.index * k.index * k.disc);
}

TEST_CASE("x^3 - x - 1: disc -23, power basis") {
    NumberField k = build_field(IntPoly{-1, -1, 0, 1});
    CHECK(k.disc == -23);
    CHECK(k.index == 1);
    CHECK(k.basis == q_identity(3));
}

TEST_CASE("2cos(2pi/11) quintic: disc 14641 = 11^4") {
    NumberField k = build_field(IntPoly{1, 3, -3, -4, 1, 1});
    CHECK(k.degree == 5);
    CHECK(k.disc == 14641);
}

TEST_CASE("more discriminants with known values") {
    CHECK(build_field(IntPoly{1, 1, 1}).disc == -3);   // Q(zeta_3)
    CHECK(build_field(IntPoly{1, 0, 1}).disc == -4);   // Q(i)
    CHECK(build_field(IntPoly{-2, 0, 1}).disc == 8);   // Q(sqrt 2)
    CHECK(build_field(IntPoly{-3, 0, 1}).disc == 12);  // Q(sqrt 3)
    CHECK(build_field(IntPoly{2, 0, 1}).disc == -8);   // Q(sqrt -2)
    // index-2 case x^2 + 3 for Q(sqrt -3)
    NumberField k = build_field(IntPoly{3, 0, 1});
    CHECK(k.disc == -3);
    CHECK(k.index == 2);
    // cyclotomic Z[zeta_5], disc 125
    CHECK(build_field(IntPoly{1, 1, 1, 1, 1}).disc == 125);
    // a classic index example: x^3 - x^2 - 2x - 8 (Dedekind), disc -503
    CHECK(build_field(IntPoly{-8, -2, -1, 1}).disc == -503);
    CHECK(build_field(IntPoly{-8, -2, -1, 1}).index == 2);
}

TEST_CASE("build_field rejects bad input") {
    CHECK_THROWS_AS(build_field(IntPoly{-1, 0, 1}), UsageError);       // reducible
    CHECK_THROWS_AS(build_field(IntPoly{-2, 0, 2}), UsageError);       // not monic
    BuildOptions small;
    small.degree_cap = 3;
    CHECK_THROWS_AS(build_field(IntPoly{1, 0, 0, 0, 1}, small), CapError);
}

TEST_CASE("compositum Q(sqrt2) * Q(sqrt3): degree 4, disc 2304") {
    NumberField a = build_field(IntPoly{-2, 0, 1});
    NumberField b = build_field(IntPoly{-3, 0, 1});
    CompositumResult c = compositum(a, b);
    CHECK(c.linearly_disjoint);
    CHECK(c.field.degree == 4);
    CHECK(c.field.disc == 2304);
}

TEST_CASE("compositum with Q is the identity") {
    NumberField a = build_field(IntPoly{-2, 0, 1});
    NumberField q = build_field(IntPoly{0, 1});
    CompositumResult c = compositum(a, q);
    CHECK(c.field.min_poly == a.min_poly);
    CHECK(c.linearly_disjoint);
}

TEST_CASE("compositum of equal fields is flagged") {
    NumberField a = build_field(IntPoly{-2, 0, 1});
    CompositumResult c = compositum(a, a);
    CHECK_FALSE(c.linearly_disjoint);
    CHECK(c.field.degree == 2);
    CHECK(c.field.abs_disc() == 8);  // still Q(sqrt 2)
}

TEST_CASE("rel_disc_norm examples") {
    NumberField a = build_field(IntPoly{-2, 0, 1});
    NumberField b = build_field(IntPoly{-3, 0, 1});
    NumberField ab = compositum(a, b).field;
    NumberField q = build_field(IntPoly{0, 1});

    CHECK(rel_disc_norm(ab, a, 2) == 36);  // 2304 / 8^2
    CHECK(rel_disc_norm(a, a, 1) == 1);
    CHECK(rel_disc_norm(build_field(IntPoly{1, 1, 1}), q, 2) == 3);
    CHECK_THROWS_AS(rel_disc_norm(ab, b, 1), UsageError);  // degree mismatch
    // non-integral quotient -> not a tower
    CHECK_THROWS_AS(rel_disc_norm_abs(BigInt(8), BigInt(3), 1), UsageError);
}

TEST_CASE("lemma 2.1 norm-divisibility examples") {
    NumberField q = build_field(IntPoly{0, 1});
    NumberField a = build_field(IntPoly{-2, 0, 1});
    NumberField b = build_field(IntPoly{-3, 0, 1});

    Lemma21Report r = check_lemma_2_1(q, a, b);
    CHECK(r.lhs == 2304);
    CHECK(r.rhs == 9216);  // 8^2 * 12^2
    CHECK(r.divides);
    CHECK(r.quotient == 4);

    // L = L': lhs = N(D), rhs = N(D)^2
    Lemma21Report r2 = check_lemma_2_1(q, a, a);
    CHECK(r2.lhs == 8);
    CHECK(r2.rhs == 64);
    CHECK(r2.divides);

    // mixed signature: Q(sqrt2, sqrt-3)
    NumberField c = build_field(IntPoly{1, 1, 1});
    Lemma21Report r3 = check_lemma_2_1(q, a, c);
    CHECK(r3.divides);
    CHECK(r3.lhs == rel_disc_norm(compositum(a, c).field, q, 4));
    CHECK(r3.rhs == 64 * 9);
}

TEST_CASE("index-squared invariant on a random corpus") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coeff(-4, 4);
    int built = 0;
    while (built < 20) {
        int deg = 2 + int(rng() % 3);
        std::vector<BigInt> c(deg + 1);
        for (int i = 0; i < deg; ++i) c[i] = coeff(rng);
        c[deg] = 1;
        IntPoly f(std::move(c));
        if (f.degree() != deg || !is_squarefree(f) || !is_irreducible_over_Q(f)) continue;
        NumberField k = build_field(f);
        CHECK(discriminant(f) == k.index * k.index * k.disc);
        // disc sign must match (index^2 > 0)
        CHECK(((k.disc > 0) == (discriminant(f) > 0)));
        ++built;
    }
}

TEST_CASE("rel_disc_norm is 1 iff |disc_L| = |disc_K|^[L:K] (unramified test)") {
    // Q(sqrt 5) inside Q(zeta 5): the quartic has disc 125, the quadratic 5;
    // 125 / 5^2 = 5 != 1 (ramification above 5 continues up the tower)
    NumberField z5 = build_field(IntPoly{1, 1, 1, 1, 1});
    NumberField s5 = build_field(IntPoly{-5, 0, 1});
    CHECK(rel_disc_norm(z5, s5, 2) == 5);
    // and the genuinely unramified step: Q(sqrt -3) over Q has norm 3, so
    // the only unramified case here is the trivial one
    CHECK(rel_disc_norm(s5, s5, 1) == 1);
}

TEST_CASE("tower screen accepts true subfields and rejects impostors") {
    NumberField a = build_field(IntPoly{-2, 0, 1});
    NumberField b = build_field(IntPoly{-3, 0, 1});
    NumberField ab = compositum(a, b).field;
    NumberField s5 = build_field(IntPoly{-5, 0, 1});
    CHECK(tower_screen(a, ab));
    CHECK(tower_screen(b, ab));
    CHECK_FALSE(tower_screen(s5, ab));
}

TEST_CASE("hnf_rows: canonical lower-triangular lattice bases") {
    // rows spanning the lattice 2Z x Z + (1,1)
    std::vector<std::vector<BigInt>> rows{{BigInt(2), BigInt(0)}, {BigInt(1), BigInt(1)}};
    ZMat h = hnf_rows(rows, 2);
    CHECK(h[0] == std::vector<BigInt>{2, 0});
    CHECK(h[1] == std::vector<BigInt>{1, 1});

    // redundant generators reduce to the same basis, entries reduced mod pivots
    std::vector<std::vector<BigInt>> rows2{{BigInt(4), BigInt(0)},
                                           {BigInt(6), BigInt(0)},
                                           {BigInt(5), BigInt(1)},
                                           {BigInt(3), BigInt(1)}};
    ZMat h2 = hnf_rows(rows2, 2);
    CHECK(h2[0] == std::vector<BigInt>{2, 0});
    CHECK(h2[1] == std::vector<BigInt>{1, 1});

    // determinant = covolume = product of the diagonal
    std::vector<std::vector<BigInt>> rows3{{BigInt(6), BigInt(4), BigInt(2)},
                                           {BigInt(0), BigInt(3), BigInt(1)},
                                           {BigInt(0), BigInt(0), BigInt(5)},
                                           {BigInt(6), BigInt(7), BigInt(8)}};
    ZMat h3 = hnf_rows(rows3, 3);
    BigInt det = h3[0][0] * h3[1][1] * h3[2][2];
    CHECK(det == 90);  // the stacked row was dependent
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) CHECK(h3[i][j] == 0);

    CHECK_THROWS_AS(
        hnf_rows({{BigInt(1), BigInt(0)}, {BigInt(2), BigInt(0)}}, 2), Error);
}
