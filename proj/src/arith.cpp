#include "ahs/arith.hpp"

#include <algorithm>
#include <sstream>

namespace ahs {

const char* errorKindName(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotDivisible: return "NotDivisible";
        case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
        case ErrorKind::PoleAtOne: return "PoleAtOne";
        case ErrorKind::VerificationFailed: return "VerificationFailed";
        case ErrorKind::NonIntegerCoefficients: return "NonIntegerCoefficients";
        case ErrorKind::ScaleExceeded: return "ScaleExceeded";
        case ErrorKind::NotNilpotent: return "NotNilpotent";
        case ErrorKind::FieldDependentDimension: return "FieldDependentDimension";
        case ErrorKind::IntegralityViolation: return "IntegralityViolation";
        case ErrorKind::PathDisagreement: return "PathDisagreement";
        case ErrorKind::TriangularityViolation: return "TriangularityViolation";
        case ErrorKind::WindowInstability: return "WindowInstability";
        case ErrorKind::NotHomogeneous: return "NotHomogeneous";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownAtomForAlgebra: return "UnknownAtomForAlgebra";
    }
    return "Error";
}

namespace {

using Poly = std::vector<Integer>;

void trimPoly(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer polyContent(const Poly& p) {
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void divideContent(Poly& p, const Integer& g) {
    if (g == 0 || g == 1) return;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

Poly primitivePart(Poly p) {
    Integer g = polyContent(p);
    divideContent(p, g);
    if (!p.empty() && p.back() < 0)
        for (auto& c : p) c = -c;
    return p;
}

// a mod b via pseudo-division.
Poly pseudoRem(Poly a, const Poly& b) {
    const size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        Integer la = a.back();
        size_t shift = a.size() - 1 - db;
        for (auto& c : a) c *= lb;
        for (size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
        trimPoly(a);
    }
    return a;
}

Poly polyGcd(Poly a, Poly b) {
    a = primitivePart(std::move(a));
    b = primitivePart(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        Poly r = pseudoRem(a, b);
        a = std::move(b);
        b = primitivePart(std::move(r));
    }
    return a;
}

// Exact division in Z[v]; returns false if not exact.
bool polyDivExact(Poly a, const Poly& b, Poly& q) {
    trimPoly(a);
    if (a.empty()) {
        q.clear();
        return true;
    }
    if (a.size() < b.size()) return false;
    const size_t db = b.size() - 1;
    q.assign(a.size() - db, 0);
    const Integer& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        size_t shift = a.size() - 1 - db;
        if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t())) return false;
        Integer t = a.back() / lb;
        q[shift] = t;
        for (size_t k = 0; k <= db; ++k) a[k + shift] -= t * b[k];
        trimPoly(a);
    }
    if (!a.empty()) return false;
    trimPoly(q);
    return true;
}

}  // namespace

// ---------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}
LaurentPoly::LaurentPoly(const Integer& c) {
    if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exp) {
    LaurentPoly p(c);
    if (!p.isZero()) p.lo_ = exp;
    return p;
}

LaurentPoly LaurentPoly::fromCoeffs(int lo, std::vector<Integer> c) {
    LaurentPoly p;
    p.lo_ = lo;
    p.c_ = std::move(c);
    p.trim();
    return p;
}

void LaurentPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    if (k) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
        lo_ += static_cast<int>(k);
    }
    if (c_.empty()) lo_ = 0;
}

Integer LaurentPoly::coeff(int e) const {
    if (c_.empty() || e < lo_ || e > maxExp()) return 0;
    return c_[static_cast<size_t>(e - lo_)];
}

std::map<int, Integer> LaurentPoly::terms() const {
    std::map<int, Integer> t;
    for (size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) t[lo_ + static_cast<int>(k)] = c_[k];
    return t;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.isZero()) return *this;
    if (isZero()) return *this = o;
    int lo = std::min(lo_, o.lo_), hi = std::max(maxExp(), o.maxExp());
    if (lo < lo_) {
        c_.insert(c_.begin(), static_cast<size_t>(lo_ - lo), Integer(0));
        lo_ = lo;
    }
    c_.resize(static_cast<size_t>(hi - lo_ + 1), Integer(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[static_cast<size_t>(o.lo_ - lo_) + k] += o.c_[k];
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.isZero() || b.isZero()) return {};
    LaurentPoly r;
    r.lo_ = a.lo_ + b.lo_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.lo_ != b.lo_) return a.lo_ < b.lo_;
    return a.c_ < b.c_;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.isZero()) r.lo_ += k;
    return r;
}

LaurentPoly LaurentPoly::barInvolution() const {
    if (isZero()) return {};
    LaurentPoly r;
    r.c_.assign(c_.rbegin(), c_.rend());
    r.lo_ = -maxExp();
    return r;
}

LaurentPoly LaurentPoly::squareVariable() const {
    if (isZero()) return {};
    LaurentPoly r;
    r.lo_ = 2 * lo_;
    r.c_.assign(2 * c_.size() - 1, Integer(0));
    for (size_t k = 0; k < c_.size(); ++k) r.c_[2 * k] = c_[k];
    return r;
}

LaurentPoly LaurentPoly::exactDiv(const LaurentPoly& d) const {
    if (d.isZero()) fail(ErrorKind::DenominatorVanishes, "division by zero Laurent polynomial");
    if (isZero()) return {};
    Poly q;
    if (!polyDivExact(c_, d.c_, q)) fail(ErrorKind::NotDivisible, toString() + " by " + d.toString());
    return fromCoeffs(lo_ - d.lo_, std::move(q));
}

bool LaurentPoly::onlyEvenExponents() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0 && ((lo_ + static_cast<int>(k)) % 2 != 0)) return false;
    return true;
}

Integer LaurentPoly::valueAtOne() const {
    Integer s = 0;
    for (const auto& c : c_) s += c;
    return s;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
    if (isZero()) return 0;
    if (x == 0) {
        if (lo_ < 0) fail(ErrorKind::DenominatorVanishes, "negative power at v = 0");
        return lo_ == 0 ? Rational(c_[0]) : Rational(0);
    }
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    Rational p = 1;
    Rational base = lo_ >= 0 ? x : Rational(1) / x;
    for (int k = 0; k < std::abs(lo_); ++k) p *= base;
    Rational r = acc * p;
    r.canonicalize();
    return r;
}

Integer LaurentPoly::content() const { return polyContent(c_); }

std::string LaurentPoly::toString(char var) const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
        const Integer& c = c_[k];
        if (c == 0) continue;
        int e = lo_ + static_cast<int>(k);
        Integer a = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << '*';
        os << var;
        if (e != 1) {
            if (e < 0)
                os << "^(" << e << ')';
            else
                os << '^' << e;
        }
    }
    return os.str();
}

LaurentPoly pow(const LaurentPoly& x, unsigned k) {
    LaurentPoly r(1);
    for (unsigned i = 0; i < k; ++i) r *= x;
    return r;
}

// ---------------- RationalFn

RationalFn::RationalFn(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.isZero()) fail(ErrorKind::DenominatorVanishes, "zero denominator");
    normalize();
}

void RationalFn::normalize() {
    if (num_.isZero()) {
        den_ = LaurentPoly(1);
        return;
    }
    int s = den_.minExp();
    Poly d = den_.coeffs();
    Poly nm = num_.coeffs();
    int numLo = num_.minExp() - s;
    if (d.size() > 1) {
        Poly g = polyGcd(nm, d);
        if (g.size() > 1) {
            Poly q1, q2;
            polyDivExact(nm, g, q1);
            polyDivExact(d, g, q2);
            nm = std::move(q1);
            d = std::move(q2);
        }
    }
    Integer cn = polyContent(nm), cd = polyContent(d);
    Integer g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    divideContent(nm, g);
    divideContent(d, g);
    if (d.back() < 0) {
        for (auto& c : nm) c = -c;
        for (auto& c : d) c = -c;
    }
    num_ = LaurentPoly::fromCoeffs(numLo, std::move(nm));
    den_ = LaurentPoly::fromCoeffs(0, std::move(d));
}

LaurentPoly RationalFn::toLaurent() const {
    if (!den_.isOne()) fail(ErrorKind::NotDivisible, "not a Laurent polynomial: " + toString());
    return num_;
}

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
    if (o.isZero()) return *this;
    if (isZero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (den_.isOne()) return *this;
        normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
    if (isZero() || o.isZero()) return *this = RationalFn();
    num_ *= o.num_;
    if (den_.isOne() && o.den_.isOne()) return *this;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) {
    if (o.isZero()) fail(ErrorKind::DenominatorVanishes, "division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

RationalFn RationalFn::barInvolution() const { return RationalFn(num_.barInvolution(), den_.barInvolution()); }

Rational RationalFn::valueAtOne() const {
    Integer d = den_.valueAtOne();
    if (d == 0) fail(ErrorKind::PoleAtOne, toString());
    Rational r(num_.valueAtOne(), d);
    r.canonicalize();
    return r;
}

Rational RationalFn::evaluate(const Rational& x) const {
    Rational d = den_.evaluate(x);
    if (d == 0) fail(ErrorKind::DenominatorVanishes, toString() + " at v = " + x.get_str());
    Rational r = num_.evaluate(x) / d;
    r.canonicalize();
    return r;
}

std::string RationalFn::toString() const {
    if (den_.isOne()) return num_.toString();
    return "(" + num_.toString() + ")/(" + den_.toString() + ")";
}

// ---------------- specializations

namespace {
LaurentPoly halveExponents(const LaurentPoly& x) {
    if (!x.onlyEvenExponents()) fail(ErrorKind::InvalidArgument, "odd power of v in " + x.toString());
    std::vector<Integer> c;
    for (int e = x.minExp(); e <= x.maxExp() && !x.isZero(); e += 2) c.push_back(x.coeff(e));
    return LaurentPoly::fromCoeffs(x.isZero() ? 0 : x.minExp() / 2, std::move(c));
}
}  // namespace

Rational evaluateAtPrimePower(const LaurentPoly& x, const Integer& q) { return halveExponents(x).evaluate(Rational(q)); }

Rational evaluateAtPrimePower(const RationalFn& x, const Integer& q) {
    Rational d = halveExponents(x.den()).evaluate(Rational(q));
    if (d == 0) fail(ErrorKind::DenominatorVanishes, x.toString() + " at q = " + q.get_str());
    Rational r = halveExponents(x.num()).evaluate(Rational(q)) / d;
    r.canonicalize();
    return r;
}

Rational specializeV1(const RationalFn& x) { return x.valueAtOne(); }
Integer specializeV1(const LaurentPoly& x) { return x.valueAtOne(); }

// ---------------- interpolation

QPoly interpolateAndVerify(const std::vector<std::pair<Integer, Integer>>& samples, int degreeBound) {
    if (degreeBound < 0) degreeBound = 0;
    const size_t m = static_cast<size_t>(degreeBound) + 1;
    if (samples.size() < m + 2) fail(ErrorKind::InvalidArgument, "need degreeBound + 3 samples");
    // Newton divided differences.
    std::vector<Rational> dd(m);
    for (size_t i = 0; i < m; ++i) dd[i] = Rational(samples[i].second);
    for (size_t j = 1; j < m; ++j)
        for (size_t i = m - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(samples[i].first - samples[i - j].first);
            if (i == j) break;
        }
    // Expand Newton form into monomial coefficients.
    std::vector<Rational> coef(1, dd[m - 1]);
    for (size_t k = m - 1; k-- > 0;) {
        // coef = coef * (q - x_k) + dd[k]
        std::vector<Rational> next(coef.size() + 1, Rational(0));
        Rational xk(samples[k].first);
        for (size_t i = 0; i < coef.size(); ++i) {
            next[i + 1] += coef[i];
            next[i] -= coef[i] * xk;
        }
        next[0] += dd[k];
        coef = std::move(next);
    }
    QPoly f;
    for (auto& c : coef) {
        c.canonicalize();
        if (c.get_den() != 1) fail(ErrorKind::NonIntegerCoefficients, "interpolated coefficient " + c.get_str());
        f.push_back(c.get_num());
    }
    while (!f.empty() && f.back() == 0) f.pop_back();
    for (size_t i = m; i < samples.size(); ++i) {
        if (evalQPoly(f, samples[i].first) != samples[i].second)
            fail(ErrorKind::VerificationFailed, "interpolant " + qPolyToString(f) + " disagrees at q = " +
                                                    samples[i].first.get_str());
    }
    return f;
}

Integer evalQPoly(const QPoly& f, const Integer& q) {
    Integer acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * q + *it;
    return acc;
}

LaurentPoly qPolyToV(const QPoly& f) { return LaurentPoly::fromCoeffs(0, f).squareVariable(); }

std::string qPolyToString(const QPoly& f) { return LaurentPoly::fromCoeffs(0, f).toString('q'); }

LaurentPoly gaussianBinomialV(int n, int k) {
    if (k < 0 || k > n) return {};
    // [n choose k] in q = v^2 via the q-Pascal rule.
    std::vector<std::vector<LaurentPoly>> t(static_cast<size_t>(n) + 1);
    for (int a = 0; a <= n; ++a) {
        t[a].resize(static_cast<size_t>(a) + 1);
        t[a][0] = 1;
        t[a][a] = 1;
        for (int b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + LaurentPoly::vpow(2 * b) * t[a - 1][b];
    }
    return t[n][k];
}

LaurentPoly glOrder(int m) {
    LaurentPoly r(1);
    for (int i = 0; i < m; ++i) r *= LaurentPoly::vpow(2 * m) - LaurentPoly::vpow(2 * i);
    return r;
}

Integer binomialInt(const Integer& top, unsigned k) {
    Integer num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= top - i;
        den *= i + 1;
    }
    return num / den;
}

}  // namespace ahs
