#include "ahs/modified.hpp"

#include <sstream>

namespace ahs {

namespace {
RationalFn vp(int e) { return RationalFn::vpow(e); }
}  // namespace

BlockElement BlockElement::monomial(const SegmentMultiset& a, const PeriodicVec& lambda, const SegmentMultiset& b,
                                    const RationalFn& c) {
    a.require(MatVariant::Plus, "block monomial");
    b.require(MatVariant::Plus, "block monomial");
    BlockElement e(lambda.n());
    e.addTerm({a, lambda, b}, c);
    return e;
}

BlockElement BlockElement::idempotent(const PeriodicVec& lambda) {
    return monomial(PeriodicMat(lambda.n()), lambda, PeriodicMat(lambda.n()));
}

void BlockElement::addTerm(const BlockKey& k, const RationalFn& c) {
    if (c.isZero()) return;
    if (n_ == 0) n_ = k.lambda.n();
    auto [it, fresh] = t_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.isZero()) t_.erase(it);
    }
}

RationalFn BlockElement::coeff(const BlockKey& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? RationalFn() : it->second;
}

bool BlockElement::isIntegral() const {
    for (const auto& [k, c] : t_)
        if (!c.isLaurent()) return false;
    return true;
}

BlockElement& BlockElement::operator+=(const BlockElement& o) {
    for (const auto& [k, c] : o.t_) addTerm(k, c);
    return *this;
}

BlockElement& BlockElement::operator-=(const BlockElement& o) {
    for (const auto& [k, c] : o.t_) addTerm(k, -c);
    return *this;
}

BlockElement& BlockElement::operator*=(const RationalFn& c) {
    if (c.isZero()) {
        t_.clear();
        return *this;
    }
    for (auto& [k, x] : t_) x *= c;
    return *this;
}

std::string BlockElement::toString() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.toString() << ")";
        if (!k.plus.isZero()) os << "*~u+" << k.plus.toString();
        os << "*1_" << k.lambda.toString();
        if (!k.minus.isZero()) os << "*~u-" << k.minus.toString();
    }
    return os.str();
}

bool integralityCheck(const BlockElement& x) { return x.isIntegral(); }

LambdaWindow LambdaWindow::cube(int n, int lo, int hi) {
    LambdaWindow w;
    w.ranges.assign(static_cast<size_t>(n), {lo, hi});
    return w;
}

std::vector<PeriodicVec> LambdaWindow::points() const {
    const int n = static_cast<int>(ranges.size());
    std::vector<PeriodicVec> out{PeriodicVec(n)};
    for (int i = 0; i < n; ++i) {
        std::vector<PeriodicVec> next;
        for (const auto& p : out)
            for (int x = ranges[static_cast<size_t>(i)].first; x <= ranges[static_cast<size_t>(i)].second; ++x) {
                PeriodicVec q = p;
                q.at(i + 1) = x;
                next.push_back(q);
            }
        out = std::move(next);
    }
    return out;
}

bool LambdaWindow::contains(const PeriodicVec& x) const {
    for (size_t i = 0; i < ranges.size(); ++i) {
        const int c = x(static_cast<int>(i) + 1);
        if (c < ranges[i].first || c > ranges[i].second) return false;
    }
    return true;
}

std::string LambdaWindow::toString() const {
    std::string s;
    for (const auto& [lo, hi] : ranges) {
        if (!s.empty()) s += "x";
        s += "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    }
    return s;
}

bool completionIntegralMembership(const WindowedFamily& f) {
    for (const auto& [lam, x] : f.values)
        if (!x.isIntegral()) return false;
    return true;
}

int ModifiedAlgebra::tExp(const SegmentMultiset& a) { return a.isZero() ? 0 : e_.hall().tildeExponent(a); }

BlockElement ModifiedAlgebra::projectToBlock(const PBWElement& x, const PeriodicVec& lambda, const PeriodicVec& mu) {
    BlockElement out(lambda.n());
    const PeriodicVec target = lambda - mu;
    for (const auto& [k, c] : x.terms()) {
        if (k.degree() != target) continue;
        const PeriodicVec mid = lambda - k.plus.degree();
        out.addTerm({k.plus, mid, k.minus}, c * vp(dot(mid, k.k) - tExp(k.plus) - tExp(k.minus)));
    }
    return out;
}

std::vector<GTerm> ModifiedAlgebra::gExpansion(const SegmentMultiset& a, const SegmentMultiset& b) {
    auto it = g_.find({a, b});
    if (it != g_.end()) return it->second;
    const int base = tExp(a) + tExp(b);
    std::vector<GTerm> out;
    for (const auto& [k, c] : e_.commuteMinusPlus(b, a).terms()) {
        // u+_P K^m u-_Q = v^{-<d(Q), m>} u+_P u-_Q K^m
        const int e = base - tExp(k.plus) - tExp(k.minus) - eulerForm(k.minus.dimVector(), k.k);
        out.push_back({k.plus + k.minus.transpose(), kToKTilde(k.k), c * vp(e)});
    }
    return g_.emplace(std::make_pair(a, b), out).first->second;
}

std::map<PeriodicMat, RationalFn> ModifiedAlgebra::fCoefficients(const SegmentMultiset& a, const SegmentMultiset& b,
                                                                 const PeriodicVec& lambda) {
    std::map<PeriodicMat, RationalFn> acc;
    const int nn = lambda.n();
    for (const auto& g : gExpansion(a, b)) {
        int e = 0;
        for (int i = 1; i < nn; ++i) e += (lambda(i) - lambda(i + 1)) * g.j(i);
        acc[g.c] += g.coeff * vp(e);
    }
    std::map<PeriodicMat, RationalFn> out;
    for (auto& [c, f] : acc) {
        if (f.isZero()) continue;
        if (!f.isLaurent())
            fail(ErrorKind::IntegralityViolation, "f coefficient " + f.toString() + " for C = " + c.toString() +
                                                      ", lambda = " + lambda.toString() + " is not in Z[v,v^-1]");
        out.emplace(c, std::move(f));
    }
    return out;
}

RationalFn ModifiedAlgebra::fCoefficient(const SegmentMultiset& a, const SegmentMultiset& b, const PeriodicMat& c,
                                         const PeriodicVec& lambda) {
    auto all = fCoefficients(a, b, lambda);
    auto it = all.find(c);
    return it == all.end() ? RationalFn() : it->second;
}

PBWElement ModifiedAlgebra::liftedProduct(const SegmentMultiset& a, const SegmentMultiset& b,
                                          const SegmentMultiset& c, const SegmentMultiset& d) {
    const PeriodicVec zero(a.n());
    PBWElement p = e_.monomialProduct({a, zero, b}, {c, zero, d});
    p *= vp(tExp(a) + tExp(b) + tExp(c) + tExp(d));
    return p;
}

BlockElement ModifiedAlgebra::productViaLift(const BlockKey& x, const BlockKey& y, const PBWElement& lifted) {
    if (x.rightBlock() != y.leftBlock()) return BlockElement(x.lambda.n());
    return projectToBlock(lifted, x.leftBlock(), y.rightBlock());
}

BlockElement ModifiedAlgebra::productViaLift(const BlockKey& x, const BlockKey& y) {
    if (x.rightBlock() != y.leftBlock()) return BlockElement(x.lambda.n());
    return productViaLift(x, y, liftedProduct(x.plus, x.minus, y.plus, y.minus));
}

BlockElement ModifiedAlgebra::productViaF(const BlockKey& x, const BlockKey& y) {
    BlockElement out(x.lambda.n());
    if (x.rightBlock() != y.leftBlock()) return out;
    HallAlgebra& h = e_.hall();
    for (const auto& [c, f] : fCoefficients(y.plus, x.minus, y.lambda)) {
        const SegmentMultiset p = c.plusPart(), q = c.minusPart().transpose();
        const PeriodicVec nu = y.lambda - q.degree();
        for (const auto& [xp, fp] : h.plusMonomials(x.plus, p)) {
            const RationalFn cp = f * RationalFn(fp) * vp(tExp(x.plus) + tExp(p) - tExp(xp));
            for (const auto& [ym, fm] : h.minusMonomials(q, y.minus))
                out.addTerm({xp, nu, ym}, cp * RationalFn(fm) * vp(tExp(q) + tExp(y.minus) - tExp(ym)));
        }
    }
    return out;
}

BlockElement ModifiedAlgebra::blockMonomialProduct(const BlockKey& x, const BlockKey& y) {
    BlockElement a = productViaLift(x, y);
    BlockElement b = productViaF(x, y);
    if (a != b)
        fail(ErrorKind::PathDisagreement, "block product paths disagree: " + a.toString() + " vs " + b.toString());
    return a;
}

BlockElement ModifiedAlgebra::blockProduct(const BlockElement& x, const BlockElement& y) {
    BlockElement out(x.n() ? x.n() : y.n());
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            if (kx.rightBlock() != ky.leftBlock()) continue;
            out += (cx * cy) * blockMonomialProduct(kx, ky);
        }
    return out;
}

BlockElement ModifiedAlgebra::embedAt(const PBWElement& u, const PeriodicVec& lambda) {
    BlockElement out(lambda.n());
    for (const auto& [deg, comp] : u.components()) out += projectToBlock(comp, lambda + deg, lambda);
    return out;
}

WindowedFamily ModifiedAlgebra::completionEmbedOnWindow(const PBWElement& u, const LambdaWindow& w) {
    WindowedFamily f;
    f.window = w;
    for (const auto& lam : w.points()) f.values.emplace(lam, embedAt(u, lam));
    return f;
}

WindowedFamily ModifiedAlgebra::completionProductOnWindow(const PBWElement& u, const PBWElement& w,
                                                          const LambdaWindow& win) {
    WindowedFamily f;
    f.window = win;
    for (const auto& beta : win.points()) {
        const BlockElement right = embedAt(w, beta);
        BlockElement acc(beta.n());
        std::map<PeriodicVec, BlockElement> left;
        for (const auto& [k, c] : right.terms()) {
            const PeriodicVec alpha = k.leftBlock();
            auto it = left.find(alpha);
            if (it == left.end()) it = left.emplace(alpha, embedAt(u, alpha)).first;
            acc += blockProduct(it->second, BlockElement::monomial(k.plus, k.lambda, k.minus, c));
        }
        f.values.emplace(beta, std::move(acc));
    }
    return f;
}

}  // namespace ahs
