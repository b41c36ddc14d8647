#include <doctest.h>

#include <set>

#include "ahs/hall.hpp"

using namespace ahs;

namespace {

std::vector<SegmentMultiset> generators(int n, int maxLen) {
    std::vector<SegmentMultiset> g;
    for (int i = 1; i <= n; ++i)
        for (int l = 1; l <= maxLen; ++l) g.push_back(PeriodicMat::E(n, i, i + l));
    return g;
}

HallElement up(const SegmentMultiset& a) { return HallElement::monomial(HallSign::Plus, a); }

}  // namespace

TEST_CASE("plus product of E12 with itself") {
    QuiverOracle o(2);
    HallAlgebra h(o);
    auto e = PeriodicMat::E(2, 1, 2);
    HallElement p = h.plusProduct(up(e), up(e));
    REQUIRE(p.terms.size() == 1);
    CHECK(p.terms.begin()->first == PeriodicMat::E(2, 1, 2, 2));
    CHECK(p.terms.begin()->second == RationalFn(LaurentPoly::fromCoeffs(1, {1, 0, 1})));

    HallElement m = h.minusProduct(HallElement::monomial(HallSign::Minus, e), HallElement::monomial(HallSign::Minus, e));
    CHECK(m.terms.begin()->second == p.terms.begin()->second);
}

TEST_CASE("unit") {
    QuiverOracle o(3);
    HallAlgebra h(o);
    auto x = up(PeriodicMat::E(3, 1, 3));
    x.addTerm(PeriodicMat::E(3, 2, 3), RationalFn::vpow(-2));
    CHECK(h.plusProduct(up(PeriodicMat(3)), x) == x);
    CHECK(h.plusProduct(x, up(PeriodicMat(3))) == x);
}

TEST_CASE("E12 times E23 agrees with submodule counts") {
    QuiverOracle o(3);
    HallAlgebra h(o);
    auto a = PeriodicMat::E(3, 1, 2), b = PeriodicMat::E(3, 2, 3);
    const auto& m = h.plusMonomials(a, b);
    std::set<SegmentMultiset> support;
    for (const auto& [c, f] : m) support.insert(c);
    const auto c1 = PeriodicMat::E(3, 1, 3), c2 = a + b;
    CHECK(support == std::set<SegmentMultiset>{c1, c2});
    for (int p : {2, 3, 5}) {
        for (const auto& c : {c1, c2}) {
            // twist <d(A), d(B)> = <e1, e2> = -1
            const Rational count(o.countSubmodules(c, a, b, p));
            CHECK(evaluateAtPrimePower(m.at(c) * LaurentPoly::vpow(1), p) == count);
        }
    }
}

TEST_CASE("tildeFactor") {
    QuiverOracle o2(2);
    HallAlgebra h(o2);
    CHECK(h.tildeFactor(PeriodicMat::E(2, 1, 2)) == LaurentPoly(1));
    CHECK(h.tildeFactor(PeriodicMat::E(2, 1, 3)) == LaurentPoly::vpow(-1));
    CHECK(h.tildeFactor(PeriodicMat::E(2, 1, 2, 2)) == LaurentPoly::vpow(2));
}

TEST_CASE("grading and plus/minus symmetry") {
    for (int n : {2, 3}) {
        QuiverOracle o(n);
        HallAlgebra h(o);
        auto g = generators(n, 2);
        for (const auto& a : g)
            for (const auto& b : g) {
                const auto& p = h.plusMonomials(a, b);
                CHECK(!p.empty());
                for (const auto& [c, f] : p) CHECK(c.dimVector() == a.dimVector() + b.dimVector());
                CHECK(h.minusMonomials(b, a) == p);
            }
    }
}

TEST_CASE("associativity on generator triples") {
    for (int n : {2, 3}) {
        QuiverOracle o(n);
        HallAlgebra h(o);
        auto g = generators(n, 3);
        int checked = 0;
        for (const auto& a : g)
            for (const auto& b : g)
                for (const auto& c : g) {
                    if (a.dimTotal() + b.dimTotal() + c.dimTotal() > 5) continue;
                    auto l = h.plusProduct(h.plusProduct(up(a), up(b)), up(c));
                    auto r = h.plusProduct(up(a), h.plusProduct(up(b), up(c)));
                    CHECK(l == r);
                    ++checked;
                }
        CHECK(checked > 0);
    }
}
