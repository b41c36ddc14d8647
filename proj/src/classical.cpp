#include "ahs/classical.hpp"

#include <algorithm>

namespace ahs {

namespace {

template <class Map>
void addRational(Map& t, const BlockKey& k, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

std::string rationalTermsToString(const std::map<BlockKey, Rational>& t, const char* mid) {
    if (t.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : t) {
        if (!s.empty()) s += " + ";
        s += "(" + c.get_str() + ")*w+[" + k.plus.toString() + "]" + mid + k.lambda.toString() + "*w-[" +
             k.minus.toString() + "]";
    }
    return s;
}

RationalFn constant(const Rational& q) { return RationalFn(Integer(q.get_num())) / RationalFn(Integer(q.get_den())); }

}  // namespace

// ---------------------------------------------------------------- ClassicalElement

ClassicalElement ClassicalElement::monomial(const SegmentMultiset& a, const PeriodicVec& lambda,
                                            const SegmentMultiset& b, const Rational& c) {
    a.require(MatVariant::Plus, "w+");
    b.require(MatVariant::Plus, "w-");
    if (!lambda.nonneg()) fail(ErrorKind::InvalidArgument, "binomial exponents must be nonnegative");
    ClassicalElement x(lambda.n());
    x.addTerm({a, lambda, b}, c);
    return x;
}

ClassicalElement ClassicalElement::scalar(int n, const Rational& c) {
    return monomial(PeriodicMat(n), PeriodicVec(n), PeriodicMat(n), c);
}

ClassicalElement ClassicalElement::wPlus(const SegmentMultiset& a) {
    return monomial(a, PeriodicVec(a.n()), PeriodicMat(a.n()));
}

ClassicalElement ClassicalElement::wMinus(const SegmentMultiset& b) {
    return monomial(PeriodicMat(b.n()), PeriodicVec(b.n()), b);
}

ClassicalElement ClassicalElement::binom(const PeriodicVec& lambda) {
    return monomial(PeriodicMat(lambda.n()), lambda, PeriodicMat(lambda.n()));
}

ClassicalElement ClassicalElement::loopGenerator(int n, int i, int j) {
    if (i < j) return wPlus(PeriodicMat::E(n, i, j));
    if (i > j) return wMinus(PeriodicMat::E(n, j, i));
    return binom(PeriodicVec::unit(n, wrap1(i, n)));
}

void ClassicalElement::addTerm(const BlockKey& k, const Rational& c) {
    if (!n_) n_ = k.lambda.n();
    addRational(t_, k, c);
}

Rational ClassicalElement::coeff(const BlockKey& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? Rational(0) : it->second;
}

int ClassicalElement::binomialDegree() const {
    int d = 0;
    for (const auto& [k, c] : t_) d = std::max(d, k.lambda.sum());
    return d;
}

ClassicalElement& ClassicalElement::operator+=(const ClassicalElement& o) {
    for (const auto& [k, c] : o.t_) addTerm(k, c);
    return *this;
}

ClassicalElement& ClassicalElement::operator-=(const ClassicalElement& o) {
    for (const auto& [k, c] : o.t_) addTerm(k, -c);
    return *this;
}

ClassicalElement& ClassicalElement::operator*=(const Rational& c) {
    if (c == 0) t_.clear();
    for (auto& [k, x] : t_) x *= c;
    return *this;
}

std::string ClassicalElement::toString() const { return rationalTermsToString(t_, "*binom"); }

// ---------------------------------------------------------------- ClassicalBlockElement

ClassicalBlockElement ClassicalBlockElement::monomial(const SegmentMultiset& a, const PeriodicVec& lambda,
                                                      const SegmentMultiset& b, const Rational& c) {
    ClassicalBlockElement x(lambda.n());
    x.addTerm({a, lambda, b}, c);
    return x;
}

ClassicalBlockElement ClassicalBlockElement::idempotent(const PeriodicVec& lambda) {
    return monomial(PeriodicMat(lambda.n()), lambda, PeriodicMat(lambda.n()));
}

ClassicalBlockElement ClassicalBlockElement::specialize(const BlockElement& x) {
    ClassicalBlockElement out(x.n());
    for (const auto& [k, c] : x.terms()) out.addTerm(k, c.valueAtOne());
    return out;
}

BlockElement ClassicalBlockElement::lift() const {
    BlockElement out(n_);
    for (const auto& [k, c] : t_) out.addTerm(k, constant(c));
    return out;
}

void ClassicalBlockElement::addTerm(const BlockKey& k, const Rational& c) {
    if (!n_) n_ = k.lambda.n();
    addRational(t_, k, c);
}

Rational ClassicalBlockElement::coeff(const BlockKey& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? Rational(0) : it->second;
}

ClassicalBlockElement& ClassicalBlockElement::operator+=(const ClassicalBlockElement& o) {
    for (const auto& [k, c] : o.t_) addTerm(k, c);
    return *this;
}

ClassicalBlockElement& ClassicalBlockElement::operator-=(const ClassicalBlockElement& o) {
    for (const auto& [k, c] : o.t_) addTerm(k, -c);
    return *this;
}

ClassicalBlockElement& ClassicalBlockElement::operator*=(const Rational& c) {
    if (c == 0) t_.clear();
    for (auto& [k, x] : t_) x *= c;
    return *this;
}

std::string ClassicalBlockElement::toString() const { return rationalTermsToString(t_, "*1_"); }

// ---------------------------------------------------------------- block side

Integer binomialProduct(const PeriodicVec& mu, const PeriodicVec& lambda) {
    Integer out = 1;
    for (int i = 1; i <= lambda.n(); ++i) {
        const int k = lambda(i);
        Integer num = 1, den = 1;
        for (int t = 0; t < k; ++t) {
            num *= mu(i) - t;
            den *= t + 1;
        }
        out *= num / den;
        if (out == 0) break;
    }
    return out;
}

ClassicalBlockElement classicalBlockProduct(ModifiedAlgebra& m, const ClassicalBlockElement& x,
                                            const ClassicalBlockElement& y) {
    return ClassicalBlockElement::specialize(m.blockProduct(x.lift(), y.lift()));
}

ClassicalBlockElement classicalClosedCommutator(int n, int i, int j, int k, int l, const PeriodicVec& lambda) {
    if (i >= j || k >= l) fail(ErrorKind::InvalidArgument, "closed commutator needs i < j and k < l");
    const PeriodicMat z(n);
    auto minus = [&](int a, int b) { return ClassicalBlockElement::monomial(z, lambda, PeriodicMat::E(n, a, b)); };
    auto plus = [&](int a, int b) {
        const PeriodicMat e = PeriodicMat::E(n, a, b);
        return ClassicalBlockElement::monomial(e, lambda - e.degree(), z);
    };
    const bool jl = modn(j - l, n) == 0, ik = modn(i - k, n) == 0;
    ClassicalBlockElement out(n);
    if (!jl && !ik) return out;
    if (jl && !ik) return k - l < i - j ? minus(k, i - j + l) : plus(i, k - l + j);
    if (!jl && ik) return Rational(-1) * (k - l < i - j ? minus(j + k - i, l) : plus(l - k + i, j));
    if (k - l == i - j) return Rational(lambda(i) - lambda(j)) * ClassicalBlockElement::idempotent(lambda);
    if (k - l < i - j) return minus(k, i - j + l) - minus(j + k - i, l);
    return plus(i, k - l + j) - plus(l - k + i, j);
}

ClassicalBlockElement phiOnBox(const ClassicalElement& x, int side) {
    const int n = x.n();
    ClassicalBlockElement out(n);
    const auto box = LambdaWindow::cube(n, 0, side - 1).points();
    for (const auto& [k, c] : x.terms())
        for (const auto& mu : box) out.addTerm({k.plus, mu, k.minus}, c * Rational(binomialProduct(mu, k.lambda)));
    return out;
}

// ---------------------------------------------------------------- classical product

namespace {

// Lift of X * Y computed from middle weights in [0, side)^n.
ClassicalElement liftPair(ModifiedAlgebra& m, const BlockKey& x, const BlockKey& y, int side, std::size_t& count) {
    const int n = m.n();
    const int margin = y.plus.dimTotal();
    const LambdaWindow box = LambdaWindow::cube(n, 0, side - 1);
    std::map<std::pair<SegmentMultiset, SegmentMultiset>, std::map<PeriodicVec, Rational>> observed;
    for (const auto& mx : LambdaWindow::cube(n, -margin, side - 1 + margin).points()) {
        const Integer bx = binomialProduct(mx, x.lambda);
        if (bx == 0) continue;
        const BlockKey kx{x.plus, mx, x.minus};
        const PeriodicVec nu = kx.rightBlock() - y.plus.degree();
        const Integer by = binomialProduct(nu, y.lambda);
        if (by == 0) continue;
        const BlockElement p = m.productViaF(kx, BlockKey{y.plus, nu, y.minus});
        ++count;
        for (const auto& [k, c] : p.terms()) {
            if (!box.contains(k.lambda)) continue;
            Rational& slot = observed[{k.plus, k.minus}][k.lambda];
            slot += Rational(bx * by) * c.valueAtOne();
        }
    }
    auto points = box.points();
    std::stable_sort(points.begin(), points.end(),
                     [](const PeriodicVec& a, const PeriodicVec& b) { return a.sum() < b.sum(); });
    ClassicalElement out(n);
    for (const auto& [ab, obs] : observed) {
        std::map<PeriodicVec, Rational> k;
        for (const auto& mu : points) {
            auto it = obs.find(mu);
            Rational val = it == obs.end() ? Rational(0) : it->second;
            for (const auto& [lam, c] : k)
                if (lam.leq(mu)) val -= c * Rational(binomialProduct(mu, lam));
            if (val != 0) k.emplace(mu, val);
        }
        for (const auto& [lam, c] : k) out.addTerm({ab.first, lam, ab.second}, c);
    }
    return out;
}

bool supportedIn(const ClassicalElement& x, int side) {
    const LambdaWindow box = LambdaWindow::cube(x.n(), 0, side - 1);
    for (const auto& [k, c] : x.terms())
        if (!box.contains(k.lambda)) return false;
    return true;
}

}  // namespace

ClassicalElement classicalProduct(ModifiedAlgebra& m, const ClassicalElement& x, const ClassicalElement& y,
                                  LiftReport* report) {
    const int n = m.n();
    ClassicalElement out(n);
    LiftReport rep;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            const int deg = kx.lambda.sum() + ky.lambda.sum() + std::min(kx.minus.dimTotal(), ky.plus.dimTotal());
            int side = deg + 2;
            ClassicalElement p = liftPair(m, kx, ky, side + 1, rep.blockProducts);
            if (!supportedIn(p, side)) {
                ++rep.retries;
                ++side;
                p = liftPair(m, kx, ky, side + 1, rep.blockProducts);
                if (!supportedIn(p, side))
                    fail(ErrorKind::WindowInstability, "binomial lift changed when the window grew to side " +
                                                           std::to_string(side + 1));
            }
            rep.side = std::max(rep.side, side);
            out += (cx * cy) * p;
        }
    if (report) *report = rep;
    return out;
}

ClassicalElement classicalCommutator(ModifiedAlgebra& m, const ClassicalElement& x, const ClassicalElement& y) {
    return classicalProduct(m, x, y) - classicalProduct(m, y, x);
}

PresentationReport verifyLoopPresentation(ModifiedAlgebra& m, int sampleBound) {
    const int n = m.n();
    PresentationReport rep;
    auto d = [n](int a, int b) { return modn(a - b, n) == 0 ? 1 : 0; };
    auto gen = [n](int i, int j) { return ClassicalElement::loopGenerator(n, i, j); };
    std::vector<std::pair<int, int>> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i - sampleBound; j <= i + sampleBound; ++j) gens.push_back({i, j});
    auto record = [&](const std::string& what, const ClassicalElement& lhs, const ClassicalElement& rhs) {
        ++rep.checked;
        if (lhs != rhs) rep.failures.push_back(what + ": " + lhs.toString() + " != " + rhs.toString());
    };
    for (int i = 1; i <= n; ++i)
        for (const auto& [k, l] : gens) {
            const auto lhs = classicalCommutator(m, gen(i, i), gen(k, l));
            record("[E" + std::to_string(i) + std::to_string(i) + ",E(" + std::to_string(k) + "," + std::to_string(l) +
                       ")]",
                   lhs, Rational(d(i, k) - d(i, l)) * gen(k, l));
        }
    for (const auto& [i, j] : gens)
        for (const auto& [k, l] : gens) {
            if (i == j || k == l) {
                ++rep.skipped;
                continue;
            }
            ClassicalElement rhs(n);
            if (d(j, k)) rhs += gen(i, l + j - k);
            if (d(l, i)) rhs -= gen(k, j + l - i);
            record("[E(" + std::to_string(i) + "," + std::to_string(j) + "),E(" + std::to_string(k) + "," +
                       std::to_string(l) + ")]",
                   classicalCommutator(m, gen(i, j), gen(k, l)), rhs);
        }
    return rep;
}

bool uZMembership(const ClassicalElement& x) {
    for (const auto& [k, c] : x.terms())
        if (c.get_den() != 1) return false;
    return true;
}

bool blockSideIntegral(const ClassicalElement& x, int side) {
    const ClassicalBlockElement img = phiOnBox(x, side);
    for (const auto& [k, c] : img.terms())
        if (c.get_den() != 1) return false;
    return true;
}

int classicalRank(const std::vector<ClassicalBlockElement>& family) {
    std::vector<ClassicalBlockElement> rows = family;
    int rk = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].isZero()) continue;
        ++rk;
        const auto [key, piv] = *rows[i].terms().begin();
        for (size_t j = i + 1; j < rows.size(); ++j) {
            const Rational c = rows[j].coeff(key);
            if (c != 0) rows[j] -= (c / piv) * rows[i];
        }
    }
    return rk;
}

// ---------------------------------------------------------------- eta_r

SchurElement specializeSchur(const SchurElement& x) {
    SchurElement out{x.n, x.r, {}};
    for (const auto& [a, c] : x.terms) out.addTerm(a, constant(c.valueAtOne()));
    return out;
}

SchurElement etaR(SchurAlgebra& s, const ClassicalElement& x) {
    const PeriodicVec zero(s.n());
    SchurElement out = s.zero();
    for (const auto& [k, c] : x.terms()) {
        SchurElement mid = s.zero();
        for (const auto& mu : s.weights()) mid.addTerm(PeriodicMat::diag(mu), RationalFn(binomialProduct(mu, k.lambda)));
        out += constant(c) * s.multiply(s.multiply(s.aJr(k.plus, zero), mid), s.aJr(k.minus.transpose(), zero));
    }
    return specializeSchur(out);
}

int schurRank(const std::vector<SchurElement>& family) {
    std::vector<SchurElement> rows = family;
    int rk = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].isZero()) continue;
        ++rk;
        const auto [key, piv] = *rows[i].terms.begin();
        for (size_t j = i + 1; j < rows.size(); ++j) {
            auto it = rows[j].terms.find(key);
            if (it != rows[j].terms.end()) rows[j] -= (it->second / piv) * rows[i];
        }
    }
    return rk;
}

}  // namespace ahs
