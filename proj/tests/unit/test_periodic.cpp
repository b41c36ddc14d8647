#include <doctest.h>

#include <random>

#include "ahs/periodic.hpp"

using namespace ahs;

TEST_CASE("euler form and dot") {
    auto e1 = PeriodicVec::unit(2, 1), e2 = PeriodicVec::unit(2, 2);
    CHECK(eulerForm(e1, e1) == 1);
    CHECK(eulerForm(e1, e2) == -1);
    CHECK(eulerForm(PeriodicVec::ones(3), PeriodicVec::ones(3)) == 0);
    CHECK(dot(PeriodicVec({1, 2}), PeriodicVec({3, 4})) == 11);
    CHECK(PeriodicVec({5, 7})(0) == 7);
    CHECK(PeriodicVec({5, 7})(-3) == 5);
}

TEST_CASE("matrix statistics") {
    auto E = [](int i, int j) { return PeriodicMat::E(2, i, j); };
    CHECK(E(1, 3).dimVector() == PeriodicVec({1, 1}));
    CHECK(E(1, 2).ro() == PeriodicVec::unit(2, 1));
    CHECK(E(1, 2).co() == PeriodicVec::unit(2, 2));
    PeriodicVec lam({2, 3, 1});
    CHECK(PeriodicMat::semisimple(lam).dimVector() == lam);
    CHECK(E(1, 4).dimTotal() == 3);
    CHECK(E(1, 4).dimVector().sum() == 3);
    // E[3,5] is stored with row 1
    CHECK(E(3, 5) == E(1, 3));
    CHECK(E(1, 3).transpose() == PeriodicMat::E(2, 3, 1));
    CHECK(E(1, 3).transpose().entries().begin()->first == std::make_pair(1, -1));
    CHECK(mST(1, 4, 2) == 1);
    CHECK(mST(1, 3, 2) == 0);
    CHECK(mST(5, 5, 2) == 0);
}

TEST_CASE("degree identity and sigma on random plus matrices") {
    std::mt19937 g(5);
    for (int n : {2, 3, 4}) {
        for (int t = 0; t < 100; ++t) {
            PeriodicMat a(n);
            std::uniform_int_distribution<int> row(1, n), len(1, 5), mult(0, 2);
            for (int k = 0; k < 3; ++k) {
                int i = row(g);
                a.add(i, i + len(g), mult(g));
            }
            // d(A)_i - d(A)_{i-1} = ro_i - co_i
            for (int i = 1; i <= n; ++i) CHECK(a.dimVector()(i) - a.dimVector()(i - 1) == a.degree()(i));
            CHECK(a.dimTotal() == a.dimVector().sum());
            CHECK(a.sigma() == a.ro().sum());
            CHECK(a.sigma() == a.co().sum());
            CHECK(a.transpose().transpose() == a);
            auto [p, m] = splitOffdiag(a + a.transpose());
            CHECK(p == a);
            CHECK(m == a.transpose());
            CHECK(p.satisfies(MatVariant::Plus));
            CHECK(m.satisfies(MatVariant::Minus));
        }
    }
}

TEST_CASE("k tilde reduction") {
    CHECK(kTildeReduce(PeriodicVec({2, 1})) == PeriodicVec({1, 0}));
    PeriodicVec nu({3, -1, 0});
    CHECK(kToKTilde(kTildeToK(nu)) == nu);
    CHECK(kTildeToK(PeriodicVec({1, 0})) == PeriodicVec({1, -1}));
}

TEST_CASE("hook order") {
    const int n = 3;
    auto E = [&](int i, int j) { return PeriodicMat::E(n, i, j); };
    CHECK(orderCompare(E(1, 2) + E(2, 3), E(1, 3)) == Order::Less);
    CHECK(orderCompare(E(1, 3), E(1, 2) + E(2, 3)) == Order::Greater);
    CHECK(orderCompare(E(1, 3), E(1, 3)) == Order::Equal);
    CHECK(orderCompare(E(1, 2), E(2, 3)) == Order::Incomparable);

    // partial order axioms on a generated set
    std::vector<PeriodicMat> set;
    for (int i = 1; i <= n; ++i)
        for (int j = i - 2; j <= i + 2; ++j)
            for (int k = 1; k <= n; ++k) {
                PeriodicMat m = E(i, j) + E(k, k + 1);
                set.push_back(m);
            }
    for (const auto& a : set)
        for (const auto& b : set) {
            Order ab = orderCompare(a, b), ba = orderCompare(b, a);
            if (ab == Order::Equal) CHECK(a.offdiagPart() == b.offdiagPart());
            if (ab == Order::Less) CHECK(ba == Order::Greater);
            for (const auto& c : set)
                if (ab == Order::Less && orderCompare(b, c) == Order::Less) CHECK(orderCompare(a, c) == Order::Less);
        }
}

TEST_CASE("sigma_i") {
    // A = E_{1,2} + E_{2,1}, n = 2: sigma_1 = a_{1,0} + a_{0,1} = a_{1,0} + a_{2,3}; sigma_2 = a_{2,1} + a_{1,2}
    PeriodicMat a = PeriodicMat::E(2, 1, 2) + PeriodicMat::E(2, 2, 1);
    CHECK(a.sigmaI(2) == 2);
    CHECK(a.sigmaI(1) == 0);
}

TEST_CASE("literals") {
    CHECK(parseMatrix("{(1,2):2}", 2) == PeriodicMat::E(2, 1, 2, 2));
    CHECK(parseMatrix("E[1,2]+E[2,3]", 3) == PeriodicMat::E(3, 1, 2) + PeriodicMat::E(3, 2, 3));
    CHECK(parseMatrix("2E[1,3]", 2) == PeriodicMat::E(2, 1, 3, 2));
    CHECK(parseMatrix("0", 2).isZero());
    CHECK(parseMatrix("{}", 2).isZero());
    CHECK(parseMatrix(PeriodicMat::E(3, 2, 7, 4).toString(), 3) == PeriodicMat::E(3, 2, 7, 4));
    CHECK(parseVector("(1,-2)", 2) == PeriodicVec({1, -2}));
    CHECK_THROWS_AS(parseMatrix("{(3,2):1}", 2), Error);
    CHECK_THROWS_AS(parseVector("(1,2,3)", 2), Error);
}
