#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "galcov/polynomial.hpp"
#include "galcov/realroots.hpp"

using namespace galcov;

namespace {

IntPolynomial lin(long a, long b) { return IntPolynomial{Int(b), Int(a)}; }  // a x + b

IntPolynomial random_poly(std::mt19937_64& rng, int deg, int coeff_range) {
    std::uniform_int_distribution<long> d(-coeff_range, coeff_range);
    std::vector<Int> cs;
    for (int i = 0; i < deg; ++i) cs.emplace_back(d(rng));
    long lead = 0;
    while (lead == 0) lead = d(rng);
    cs.emplace_back(lead);
    return IntPolynomial(std::move(cs));
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    IntPolynomial p{1, 2, 3};  // 3x^2 + 2x + 1
    IntPolynomial q{-1, 1};    // x - 1
    CHECK(p.degree() == 2);
    CHECK((p + q) == IntPolynomial{0, 3, 3});
    CHECK((p - q) == IntPolynomial{2, 1, 3});
    CHECK((p * q) == IntPolynomial{-1, -1, -1, 3});
    CHECK((-q) == IntPolynomial{1, -1});
    CHECK(p.evaluate(Int(2)) == 17);
    CHECK(p.derivative() == IntPolynomial{2, 6});
    CHECK(IntPolynomial{}.is_zero());
    CHECK(IntPolynomial{0, 0}.is_zero());
    CHECK(IntPolynomial{}.degree() == -1);
}

TEST_CASE("content and primitive part") {
    IntPolynomial p{4, -2, 6};
    CHECK(content(p) == 2);
    CHECK(primitive_part(p) == IntPolynomial{2, -1, 3});
    IntPolynomial neg{-4, -8};
    CHECK(primitive_part(neg) == IntPolynomial{1, 2});  // leading made positive
}

TEST_CASE("divmod and divexact") {
    RatPolynomial a{Rat(-1), Rat(0), Rat(1)};  // x^2 - 1
    RatPolynomial b{Rat(1), Rat(1)};           // x + 1
    auto [q, r] = divmod(a, b);
    CHECK(r.is_zero());
    CHECK(q == RatPolynomial{Rat(-1), Rat(1)});
    IntPolynomial prod = lin(2, -1) * lin(3, 5);
    CHECK(divexact(prod, lin(2, -1)) == lin(3, 5));
    CHECK_THROWS_AS(divexact(IntPolynomial{1, 1}, IntPolynomial{1, 2}), std::domain_error);
}

TEST_CASE("integer polynomial gcd") {
    IntPolynomial a = lin(1, -1) * lin(1, 2);   // (x-1)(x+2)
    IntPolynomial b = lin(1, -1) * lin(1, 3);   // (x-1)(x+3)
    CHECK(gcd(a, b) == lin(1, -1));
    CHECK(gcd(a, IntPolynomial{}) == a);
    IntPolynomial c = lin(2, -1) * lin(2, -1) * lin(3, 1);
    CHECK(gcd(c, c.derivative()) == lin(2, -1));
    CHECK(is_squarefree(a));
    CHECK_FALSE(is_squarefree(c));
    // scalar contents carried through
    CHECK(gcd(a * Int(6), b * Int(4)) == lin(1, -1) * Int(2));
}

TEST_CASE("clear_denominators") {
    RatPolynomial q{make_rat(1, 2), make_rat(-5, 2), Rat(1)};
    auto [ip, scale] = clear_denominators(q);
    CHECK(ip == IntPolynomial{1, -5, 2});
    CHECK(scale == make_rat(1, 2));
    CHECK(content(ip) == 1);
}

TEST_CASE("eval_homogeneous matches rational evaluation") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        IntPolynomial p = random_poly(rng, 5, 20);
        std::uniform_int_distribution<long> d(-10, 10);
        long num = d(rng);
        long den = 0;
        while (den == 0) den = std::abs(d(rng));
        Rat x = make_rat(num, den);
        Rat direct = to_rational(p).evaluate(x);
        Rat homog = make_rat(eval_homogeneous(p, Int(num), Int(den)), pow_int(Int(den), 5));
        // p has degree exactly 5 by construction
        CHECK(direct == homog);
    }
}

TEST_CASE("resultant small known values") {
    CHECK(resultant(lin(1, -1), lin(1, -3)) == Int(-2));  // Res(x-1, x-3) = (1)-3 = -2
    IntPolynomial p = lin(1, -1) * lin(1, -2);            // (x-1)(x-2)
    CHECK(resultant(p, lin(1, -3)) == Int(2));            // (1-3)(2-3) = 2
    CHECK(resultant(p, IntPolynomial{5}) == Int(25));     // constant^deg
    CHECK(resultant(IntPolynomial{5}, p) == Int(25));
    CHECK(resultant(p, IntPolynomial{}) == Int(0));
}

TEST_CASE("resultant equals product over roots (oracle)") {
    // P = lc * prod (x - r_i) with integer roots: Res(P, Q) = lc^degQ * prod Q(r_i)
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-8, 8);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<long> roots;
        int k = 1 + int(rng() % 4);
        for (int i = 0; i < k; ++i) roots.push_back(d(rng));
        long lc = 0;
        while (lc == 0) lc = d(rng);
        IntPolynomial p{Int(lc)};
        for (long r : roots) p = p * lin(1, -r);
        IntPolynomial q = random_poly(rng, 1 + int(rng() % 3), 9);
        Int expected = pow_int(Int(lc), std::size_t(q.degree()));
        for (long r : roots) expected *= q.evaluate(Int(r));
        CHECK(resultant(p, q) == expected);
    }
}

TEST_CASE("resultant symmetry and multiplicativity") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        IntPolynomial a = random_poly(rng, 1 + int(rng() % 4), 12);
        IntPolynomial b = random_poly(rng, 1 + int(rng() % 4), 12);
        IntPolynomial c = random_poly(rng, 1 + int(rng() % 3), 12);
        Int rab = resultant(a, b);
        Int sign = (a.degree() * b.degree()) % 2 == 0 ? 1 : -1;
        CHECK(resultant(b, a) == sign * rab);
        CHECK(resultant(a, b * c) == rab * resultant(a, c));
    }
}

TEST_CASE("bivariate resultant via polynomial coefficients") {
    // Res_x(x^2 - T, x - 3) = 9 - T
    using TPoly = Polynomial<Int>;
    using XPoly = Polynomial<TPoly>;
    XPoly p{TPoly{0, -1}, TPoly{0}, TPoly{1}};  // x^2 - T
    XPoly q{TPoly{-3}, TPoly{1}};               // x - 3
    TPoly r = resultant(p, q);
    CHECK(r == TPoly{9, -1});
}

TEST_CASE("discriminant known values") {
    CHECK(discriminant(IntPolynomial{1, 0, 1}) == Int(-4));        // x^2 + 1
    CHECK(discriminant(IntPolynomial{1, 8401, 1}) == Int(70576797));
    CHECK(discriminant(lin(1, -1) * lin(1, -4)) == Int(9));        // (a-b)^2
    CHECK(discriminant(lin(1, -1) * lin(1, -1) * lin(1, 2)) == Int(0));
    // quadratic formula b^2 - 4ac on random quadratics
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int trial = 0; trial < 30; ++trial) {
        long a = 0, b = d(rng), c = d(rng);
        while (a == 0) a = d(rng);
        CHECK(discriminant(IntPolynomial{Int(c), Int(b), Int(a)}) == Int(b) * b - Int(4) * a * c);
    }
}

TEST_CASE("polynomial printing") {
    CHECK(poly_to_string(IntPolynomial{1, -5, 2}) == "2*x^2 - 5*x + 1");
    CHECK(poly_to_string(IntPolynomial{}) == "0");
    CHECK(poly_to_string(IntPolynomial{0, 1}) == "x");
    CHECK(poly_to_string(IntPolynomial{-7}) == "-7");
}
