#pragma once

// The positive and negative halves with the twisted Hall multiplication.

#include <map>
#include <string>
#include <utility>

#include "ahs/oracle.hpp"

namespace ahs {

enum class HallSign { Plus, Minus };

struct HallElement {
    HallSign sign = HallSign::Plus;
    std::map<SegmentMultiset, RationalFn> terms;

    static HallElement monomial(HallSign s, const SegmentMultiset& a, const RationalFn& c = 1);
    void addTerm(const SegmentMultiset& a, const RationalFn& c);
    bool isZero() const { return terms.empty(); }
    HallElement& operator+=(const HallElement& o);
    HallElement& operator*=(const RationalFn& c);
    friend bool operator==(const HallElement& a, const HallElement& b) {
        return a.sign == b.sign && a.terms == b.terms;
    }
    std::string toString() const;
};

class HallAlgebra {
public:
    explicit HallAlgebra(QuiverOracle& oracle) : oracle_(oracle) {}
    QuiverOracle& oracle() { return oracle_; }
    int n() const { return oracle_.n(); }

    // u+_A u+_B and u-_A u-_B as sums over C.
    const std::map<SegmentMultiset, LaurentPoly>& plusMonomials(const SegmentMultiset& a, const SegmentMultiset& b);
    const std::map<SegmentMultiset, LaurentPoly>& minusMonomials(const SegmentMultiset& a, const SegmentMultiset& b);

    HallElement plusProduct(const HallElement& x, const HallElement& y);
    HallElement minusProduct(const HallElement& x, const HallElement& y);

    // v^{dim End M(A) - dim M(A)}
    LaurentPoly tildeFactor(const SegmentMultiset& a);
    int tildeExponent(const SegmentMultiset& a);

private:
    const std::map<SegmentMultiset, LaurentPoly>& product(const SegmentMultiset& a, const SegmentMultiset& b, bool plus);

    QuiverOracle& oracle_;
    std::map<std::tuple<bool, SegmentMultiset, SegmentMultiset>, std::map<SegmentMultiset, LaurentPoly>> memo_;
};

}  // namespace ahs
