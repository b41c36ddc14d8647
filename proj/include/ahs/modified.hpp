#pragma once

// The modified algebra with idempotents 1_lambda, in the basis u~+_A 1_lambda u~-_B.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ahs/double_hall.hpp"

namespace ahs {

struct BlockKey {
    SegmentMultiset plus;
    PeriodicVec lambda;
    SegmentMultiset minus;
    friend bool operator<(const BlockKey& a, const BlockKey& b) {
        return std::tie(a.plus, a.lambda, a.minus) < std::tie(b.plus, b.lambda, b.minus);
    }
    friend bool operator==(const BlockKey& a, const BlockKey& b) {
        return a.plus == b.plus && a.lambda == b.lambda && a.minus == b.minus;
    }
    PeriodicVec leftBlock() const { return lambda + plus.degree(); }
    PeriodicVec rightBlock() const { return lambda + minus.degree(); }
};

class BlockElement {
public:
    BlockElement() = default;
    explicit BlockElement(int n) : n_(n) {}
    static BlockElement monomial(const SegmentMultiset& a, const PeriodicVec& lambda, const SegmentMultiset& b,
                                 const RationalFn& c = 1);
    static BlockElement idempotent(const PeriodicVec& lambda);

    int n() const { return n_; }
    const std::map<BlockKey, RationalFn>& terms() const { return t_; }
    bool isZero() const { return t_.empty(); }
    void addTerm(const BlockKey& k, const RationalFn& c);
    RationalFn coeff(const BlockKey& k) const;
    // every coefficient lies in Z[v, v^-1]
    bool isIntegral() const;

    BlockElement& operator+=(const BlockElement& o);
    BlockElement& operator-=(const BlockElement& o);
    BlockElement& operator*=(const RationalFn& c);
    friend BlockElement operator+(BlockElement a, const BlockElement& b) { return a += b; }
    friend BlockElement operator-(BlockElement a, const BlockElement& b) { return a -= b; }
    friend BlockElement operator*(const RationalFn& c, BlockElement a) { return a *= c; }
    friend bool operator==(const BlockElement& a, const BlockElement& b) { return a.t_ == b.t_; }
    friend bool operator!=(const BlockElement& a, const BlockElement& b) { return !(a == b); }

    std::string toString() const;

private:
    int n_ = 0;
    std::map<BlockKey, RationalFn> t_;
};

bool integralityCheck(const BlockElement& x);

// C is a plus-minus matrix: C+ is the plus part, t(C-) the transpose of its minus part.
struct GTerm {
    PeriodicMat c;
    PeriodicVec j;  // K~ exponent, j_n = 0
    RationalFn coeff;
};

// A product of integer intervals, one per coordinate 1..n.
struct LambdaWindow {
    std::vector<std::pair<int, int>> ranges;
    static LambdaWindow cube(int n, int lo, int hi);
    std::vector<PeriodicVec> points() const;
    bool contains(const PeriodicVec& x) const;
    std::string toString() const;
};

struct WindowedFamily {
    LambdaWindow window;
    std::map<PeriodicVec, BlockElement> values;  // keyed by the right block
};

bool completionIntegralMembership(const WindowedFamily& f);

class ModifiedAlgebra {
public:
    explicit ModifiedAlgebra(DoubleHallEngine& engine) : e_(engine) {}
    DoubleHallEngine& engine() { return e_; }
    int n() const { return e_.n(); }

    BlockElement projectToBlock(const PBWElement& x, const PeriodicVec& lambda, const PeriodicVec& mu);

    // u~-_B u~+_A = sum g u~+_{C+} u~-_{t(C-)} K~^j
    std::vector<GTerm> gExpansion(const SegmentMultiset& a, const SegmentMultiset& b);
    // All nonzero f_{A,B,C,lambda}; throws IntegralityViolation.
    std::map<PeriodicMat, RationalFn> fCoefficients(const SegmentMultiset& a, const SegmentMultiset& b,
                                                    const PeriodicVec& lambda);
    RationalFn fCoefficient(const SegmentMultiset& a, const SegmentMultiset& b, const PeriodicMat& c,
                            const PeriodicVec& lambda);

    BlockElement productViaLift(const BlockKey& x, const BlockKey& y);
    // The lambda-independent part: v^{...} u+_A u-_B u+_C u-_D in the PBW basis.
    PBWElement liftedProduct(const SegmentMultiset& a, const SegmentMultiset& b, const SegmentMultiset& c,
                             const SegmentMultiset& d);
    BlockElement productViaLift(const BlockKey& x, const BlockKey& y, const PBWElement& lifted);
    BlockElement productViaF(const BlockKey& x, const BlockKey& y);
    // Both paths; throws PathDisagreement when they differ.
    BlockElement blockMonomialProduct(const BlockKey& x, const BlockKey& y);
    BlockElement blockProduct(const BlockElement& x, const BlockElement& y);

    // u 1_lambda
    BlockElement embedAt(const PBWElement& u, const PeriodicVec& lambda);
    WindowedFamily completionEmbedOnWindow(const PBWElement& u, const LambdaWindow& w);
    // Phi(u) Phi(w) on the window; factors of Phi(u) outside the window are computed as needed.
    WindowedFamily completionProductOnWindow(const PBWElement& u, const PBWElement& w, const LambdaWindow& win);

private:
    int tExp(const SegmentMultiset& a);
    DoubleHallEngine& e_;
    std::map<std::pair<SegmentMultiset, SegmentMultiset>, std::vector<GTerm>> g_;
};

}  // namespace ahs
