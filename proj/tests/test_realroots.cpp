#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "galcov/cover.hpp"
#include "galcov/realroots.hpp"

using namespace galcov;

namespace {

IntPolynomial ip(std::initializer_list<long> cs) {
    std::vector<Int> v;
    for (long c : cs) v.emplace_back(c);
    return IntPolynomial(std::move(v));
}

IntPolynomial from_roots(const std::vector<Rat>& roots) {
    IntPolynomial p{1};
    for (const auto& r : roots) p = p * IntPolynomial{-r.get_num(), r.get_den()};
    return p;
}

}  // namespace

TEST_CASE("sturm counts on known polynomials") {
    CHECK(sturm_count(ip({1, 8401, 1})) == 2);
    CHECK(sturm_count(ip({1, 0, 1})) == 0);
    CHECK(sturm_count(ip({-2, 0, 1})) == 2);       // x^2 - 2
    CHECK(sturm_count(ip({-1, -1, 0, 1})) == 1);   // x^3 - x - 1
    CHECK(sturm_count(ip({0, -1, 0, 1})) == 3);    // x(x-1)(x+1)
}

TEST_CASE("squarefree precondition") {
    CHECK_THROWS_AS(sturm_count(ip({1, -2, 1})), NotSquarefreeError);  // (x-1)^2
    CHECK_THROWS_AS(signature_of(ip({1, -2, 1})), NotSquarefreeError);
}

TEST_CASE("interval semantics: half-open (lo, hi]") {
    IntPolynomial p = from_roots({Rat(1), Rat(2), Rat(3)});
    CHECK(sturm_count(p, Rat(1), Rat(3)) == 2);   // 2 and 3; 1 excluded
    CHECK(sturm_count(p, Rat(0), Rat(1)) == 1);   // 1 included
    CHECK(sturm_count(p, Rat(0), Rat(3)) == 3);
    CHECK(sturm_count(p, Rat(3), Rat(100)) == 0);
    CHECK(sturm_count(p, Bound::neg_inf(), Bound::at(Rat(1))) == 1);
    CHECK(sturm_count(p, Bound::at(Rat(1)), Bound::pos_inf()) == 2);
    CHECK(sturm_count(p, make_rat(3, 2), make_rat(5, 2)) == 1);
}

TEST_CASE("sturm against a constructed-roots oracle") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> d(-12, 12);
    std::uniform_int_distribution<long> dp(1, 6);
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<Rat> roots;
        int k = 1 + int(rng() % 4);
        for (int i = 0; i < k; ++i) {
            Rat r = make_rat(d(rng), dp(rng));
            bool dup = false;
            for (const auto& x : roots) dup = dup || x == r;
            if (!dup) roots.push_back(r);
        }
        IntPolynomial p = from_roots(roots);
        if (rng() % 2) p = p * ip({1, 0, 1});  // extra complex pair
        CHECK(sturm_count(p) == int(roots.size()));
        Rat lo = make_rat(d(rng), dp(rng));
        Rat hi = lo + Rat(1 + long(rng() % 6));
        int expect = 0;
        for (const auto& r : roots)
            if (lo < r && r <= hi) ++expect;
        INFO("roots=" << roots.size() << " lo=" << to_string(lo) << " hi=" << to_string(hi));
        CHECK(sturm_count(p, lo, hi) == expect);
    }
}

TEST_CASE("degree parity gives a real root for odd degree") {
    // cubic family members always keep at least one real root
    CurveFamily c3 = build_curve(CaseId::C3);
    for (long y : {1L, 5L, 7L, 11L}) {
        IntPolynomial p = specialize_monic(c3, pow_int(Int(y), 5));
        CHECK(sturm_count(p) >= 1);
        CHECK(sturm_count(p) % 2 == 1);
    }
}

TEST_CASE("signatures of family members") {
    CurveFamily c2 = build_curve(CaseId::C2);
    CHECK(signature_of(specialize_monic(c2, pow_int(Int(7), 5))) == Signature{2, 0});

    CurveFamily d3 = build_curve(CaseId::D3);
    CHECK(signature_of(specialize_monic(d3, pow_int(Int(19), 3))) == Signature{0, 3});
    CHECK(signature_of(specialize_monic(d3, pow_int(Int(19), 5))) == Signature{0, 3});

    CurveFamily c4 = build_curve(CaseId::C4);
    CHECK(signature_of(specialize_monic(c4, pow_int(Int(17), 5))) == Signature{4, 0});

    CurveFamily d4 = build_curve(CaseId::D4);
    CHECK(signature_of(specialize_monic(d4, pow_int(Int(97), 5))) == Signature{0, 4});

    CurveFamily d6 = build_curve(CaseId::D6);
    CHECK(signature_of(specialize_monic(d6, pow_int(Int(62929), 5))) == Signature{0, 6});
}

TEST_CASE("discriminant and squarefreeness") {
    CHECK(discriminant(ip({1, 0, 1})) == Int(-4));
    CHECK(discriminant(ip({1, 8401, 1})) == Int(70576797));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Int> cs;
        int deg = 2 + int(rng() % 4);
        for (int i = 0; i < deg; ++i) cs.emplace_back(d(rng));
        cs.emplace_back(1 + std::abs(d(rng)));
        IntPolynomial p(std::move(cs));
        bool sf = gcd(p, p.derivative()).degree() == 0;
        CHECK((discriminant(p) != 0) == sf);
    }
    // squareful by construction
    IntPolynomial q = ip({-1, 1}) * ip({-1, 1}) * ip({2, 1});
    CHECK(discriminant(q) == Int(0));
}

TEST_CASE("rank bound arithmetic") {
    CHECK(rank_bound(10, Signature{6, 0}) == 5);
    CHECK(rank_bound(16, Signature{0, 6}) == 11);
    CHECK(rank_bound(2, Signature{2, 0}) == 1);
    CHECK(rank_bound(7, Signature{0, 3}) == 5);
    CHECK(rank_bound(1, Signature{3, 0}) == 0);  // floored
    CHECK_THROWS_AS(rank_bound(-1, Signature{1, 0}), std::invalid_argument);
}

TEST_CASE("claimed rank bounds per case") {
    const std::map<CaseId, int> expected = {
        {CaseId::C2, 1}, {CaseId::C3, 2}, {CaseId::C4, 3}, {CaseId::C6, 5},
        {CaseId::D2, 3}, {CaseId::D3, 5}, {CaseId::D4, 7}, {CaseId::D6, 11}};
    for (auto [id, bound] : expected) {
        const GroupCase& c = get_case(id);
        CHECK(c.rank_bound == bound);
        long deg = build_curve(id).A.degree();
        Signature claim = c.totally_real ? Signature{int(deg), 0} : Signature{0, int(deg / 2)};
        CHECK(rank_bound(c.s, claim) == bound);
    }
}
