#include <doctest.h>

#include <random>

#include "ahs/arith.hpp"

using namespace ahs;

namespace {
LaurentPoly v(int e) { return LaurentPoly::vpow(e); }

LaurentPoly randomPoly(std::mt19937& g) {
    std::uniform_int_distribution<int> c(-4, 4), lo(-3, 3), len(0, 4);
    std::vector<Integer> cs;
    int m = len(g);
    for (int k = 0; k < m; ++k) cs.emplace_back(c(g));
    return LaurentPoly::fromCoeffs(lo(g), cs);
}
}  // namespace

TEST_CASE("laurent arithmetic examples") {
    CHECK((v(2) - 1) + 1 == v(2));
    CHECK((v(1) - 1) * (v(1) + 1) == v(2) - 1);
    CHECK((v(4) - 1).exactDiv(v(2) - 1) == v(2) + 1);
    CHECK_THROWS_AS((v(4) + 1).exactDiv(v(2) - 1), Error);
    CHECK((v(-2) * v(3)) == v(1));
    CHECK(LaurentPoly(0).isZero());
    CHECK((v(3) - v(3)).isZero());
}

TEST_CASE("laurent ring axioms on random triples") {
    std::mt19937 g(7);
    for (int t = 0; t < 200; ++t) {
        auto a = randomPoly(g), b = randomPoly(g), c = randomPoly(g);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!b.isZero()) CHECK((a * b).exactDiv(b) == a);
        CHECK(specializeV1(a * b) == specializeV1(a) * specializeV1(b));
    }
}

TEST_CASE("evaluation at prime powers") {
    // a_{E_{1,3}}, n = 2: q - 1
    CHECK(evaluateAtPrimePower(v(2) - 1, 3) == 2);
    CHECK(evaluateAtPrimePower(LaurentPoly(1), 11) == 1);
    CHECK(evaluateAtPrimePower(v(2) + 1, 5) == 6);
    CHECK_THROWS_AS(evaluateAtPrimePower(v(1), 5), Error);
    RationalFn f(v(2) + 1, v(2) - 1);
    CHECK(evaluateAtPrimePower(f, 3) == 2);
    try {
        evaluateAtPrimePower(f, 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DenominatorVanishes);
    }
    std::mt19937 g(3);
    for (int t = 0; t < 100; ++t) {
        auto a = randomPoly(g).squareVariable(), b = randomPoly(g).squareVariable();
        for (int q : {2, 3, 5})
            CHECK(evaluateAtPrimePower(a * b, q) == evaluateAtPrimePower(a, q) * evaluateAtPrimePower(b, q));
    }
}

TEST_CASE("rational functions are canonical") {
    RationalFn a(v(4) - 1, v(2) - 1);
    CHECK(a.isLaurent());
    CHECK(a.toLaurent() == v(2) + 1);
    RationalFn b(v(3), v(1) - v(3));  // v^3 / (v - v^3) = v^2/(1 - v^2) = -v^2/(v^2 - 1)
    CHECK(b.den() == v(2) - 1);
    CHECK(b.num() == -v(2));
    RationalFn c = RationalFn(1) / RationalFn(v(1) - 1) - RationalFn(1) / RationalFn(v(1) - 1);
    CHECK(c.isZero());
    RationalFn d(2 * v(1) + 2, 4 * v(2) - 4);
    CHECK(d.num() == LaurentPoly(1));
    CHECK(d.den() == 2 * v(1) - 2);
    CHECK(RationalFn(v(1) + 1, v(1) - 1) * RationalFn(v(1) - 1) == RationalFn(v(1) + 1));
}

TEST_CASE("specialization at v = 1") {
    for (int k = 1; k <= 5; ++k) CHECK(specializeV1(RationalFn(v(2 * k) - 1, v(2) - 1)) == k);
    try {
        specializeV1(RationalFn(1, v(1) - 1));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PoleAtOne);
    }
    CHECK(specializeV1(RationalFn(v(3))) == 1);
    CHECK(specializeV1(RationalFn(v(1), v(1) + 1)) == Rational(1, 2));
}

TEST_CASE("interpolation") {
    QPoly f = interpolateAndVerify({{2, 3}, {3, 4}, {5, 6}, {7, 8}}, 1);
    CHECK(f == QPoly{1, 1});
    CHECK(interpolateAndVerify({{2, 1}, {3, 1}, {5, 1}}, 0) == QPoly{1});
    try {
        interpolateAndVerify({{2, 1}, {3, 2}, {5, 1}}, 0);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::VerificationFailed);
    }
    try {
        // (q^2 + q)/2 sampled at 4 points but claimed to be degree <= 1 would fail; here non-integers
        interpolateAndVerify({{1, 0}, {3, 1}, {5, 2}, {7, 3}, {9, 4}}, 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonIntegerCoefficients);
    }
    std::mt19937 g(11);
    for (int t = 0; t < 50; ++t) {
        std::uniform_int_distribution<int> c(-9, 9), deg(0, 5);
        QPoly p;
        int d = deg(g);
        for (int k = 0; k <= d; ++k) p.emplace_back(c(g));
        while (!p.empty() && p.back() == 0) p.pop_back();
        std::vector<std::pair<Integer, Integer>> s;
        for (int q : {2, 3, 5, 7, 11, 13, 17, 19, 23}) s.emplace_back(q, evalQPoly(p, q));
        CHECK(interpolateAndVerify(s, 6) == p);
    }
}

TEST_CASE("gaussian binomials and GL orders") {
    // [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4
    CHECK(gaussianBinomialV(4, 2) == LaurentPoly::fromCoeffs(0, {1, 0, 1, 0, 2, 0, 1, 0, 1}));
    CHECK(evaluateAtPrimePower(glOrder(2), 2) == 6);
    CHECK(evaluateAtPrimePower(glOrder(2), 3) == 48);
}
