#include "ahs/hall.hpp"

namespace ahs {

HallElement HallElement::monomial(HallSign s, const SegmentMultiset& a, const RationalFn& c) {
    HallElement e;
    e.sign = s;
    e.addTerm(a, c);
    return e;
}

void HallElement::addTerm(const SegmentMultiset& a, const RationalFn& c) {
    if (c.isZero()) return;
    auto [it, fresh] = terms.emplace(a, c);
    if (!fresh) {
        it->second += c;
        if (it->second.isZero()) terms.erase(it);
    }
}

HallElement& HallElement::operator+=(const HallElement& o) {
    if (o.sign != sign && !o.isZero() && !isZero()) fail(ErrorKind::InvalidArgument, "mixed signs in Hall sum");
    if (isZero()) sign = o.sign;
    for (const auto& [a, c] : o.terms) addTerm(a, c);
    return *this;
}

HallElement& HallElement::operator*=(const RationalFn& c) {
    if (c.isZero()) {
        terms.clear();
        return *this;
    }
    for (auto& [a, x] : terms) x *= c;
    return *this;
}

std::string HallElement::toString() const {
    if (terms.empty()) return "0";
    std::string s;
    const char* u = sign == HallSign::Plus ? "u+" : "u-";
    for (const auto& [a, c] : terms) {
        if (!s.empty()) s += " + ";
        s += "(" + c.toString() + ")*" + u + a.toString();
    }
    return s;
}

const std::map<SegmentMultiset, LaurentPoly>& HallAlgebra::product(const SegmentMultiset& a, const SegmentMultiset& b,
                                                                   bool plus) {
    auto key = std::make_tuple(plus, a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    a.require(MatVariant::Plus, "Hall product");
    b.require(MatVariant::Plus, "Hall product");
    const PeriodicVec da = a.dimVector(), db = b.dimVector();
    std::map<SegmentMultiset, LaurentPoly> out;
    if (a.isZero()) {
        out.emplace(b, 1);
    } else if (b.isZero()) {
        out.emplace(a, 1);
    } else {
        // plus: v^<d(A),d(B)> phi^C_{A,B}; minus: v^<d(B),d(A)> phi^C_{B,A}
        const int e = plus ? eulerForm(da, db) : eulerForm(db, da);
        for (const auto& [c, f] : plus ? oracle_.hallProductV(a, b) : oracle_.hallProductV(b, a)) out.emplace(c, f.shifted(e));
    }
    return memo_.emplace(key, std::move(out)).first->second;
}

const std::map<SegmentMultiset, LaurentPoly>& HallAlgebra::plusMonomials(const SegmentMultiset& a,
                                                                         const SegmentMultiset& b) {
    return product(a, b, true);
}

const std::map<SegmentMultiset, LaurentPoly>& HallAlgebra::minusMonomials(const SegmentMultiset& a,
                                                                          const SegmentMultiset& b) {
    return product(a, b, false);
}

namespace {

HallElement multiply(HallAlgebra& h, const HallElement& x, const HallElement& y, HallSign s) {
    if ((!x.isZero() && x.sign != s) || (!y.isZero() && y.sign != s))
        fail(ErrorKind::InvalidArgument, "Hall product with wrong sign");
    HallElement out;
    out.sign = s;
    for (const auto& [a, ca] : x.terms)
        for (const auto& [b, cb] : y.terms) {
            const auto& m = s == HallSign::Plus ? h.plusMonomials(a, b) : h.minusMonomials(a, b);
            const RationalFn c = ca * cb;
            for (const auto& [cc, f] : m) out.addTerm(cc, c * RationalFn(f));
        }
    return out;
}

}  // namespace

HallElement HallAlgebra::plusProduct(const HallElement& x, const HallElement& y) {
    return multiply(*this, x, y, HallSign::Plus);
}

HallElement HallAlgebra::minusProduct(const HallElement& x, const HallElement& y) {
    return multiply(*this, x, y, HallSign::Minus);
}

int HallAlgebra::tildeExponent(const SegmentMultiset& a) { return oracle_.endDim(a) - a.dimTotal(); }

LaurentPoly HallAlgebra::tildeFactor(const SegmentMultiset& a) { return LaurentPoly::vpow(tildeExponent(a)); }

}  // namespace ahs
