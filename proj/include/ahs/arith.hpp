#pragma once

// Exact arithmetic in Z[v, v^-1] and Q(v).

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ahs/errors.hpp"

namespace ahs {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense Laurent polynomial: coefficient of v^(lo+k) is c[k]. No zero at either end.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT
    LaurentPoly(const Integer& c);  // NOLINT
    static LaurentPoly monomial(const Integer& c, int exp);
    static LaurentPoly vpow(int exp) { return monomial(1, exp); }
    static LaurentPoly fromCoeffs(int lo, std::vector<Integer> c);

    bool isZero() const { return c_.empty(); }
    bool isOne() const { return lo_ == 0 && c_.size() == 1 && c_[0] == 1; }
    bool isMonomial() const { return c_.size() == 1; }
    int minExp() const { return lo_; }
    int maxExp() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    Integer coeff(int e) const;
    const std::vector<Integer>& coeffs() const { return c_; }
    std::map<int, Integer> terms() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.lo_ == b.lo_ && a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly shifted(int k) const;
    // v -> v^-1
    LaurentPoly barInvolution() const;
    // v -> v^2
    LaurentPoly squareVariable() const;
    // Exact quotient in Z[v,v^-1]; throws NotDivisible.
    LaurentPoly exactDiv(const LaurentPoly& d) const;
    bool onlyEvenExponents() const;
    Integer valueAtOne() const;
    Rational evaluate(const Rational& x) const;
    Integer content() const;

    std::string toString(char var = 'v') const;

private:
    void trim();
    int lo_ = 0;
    std::vector<Integer> c_;
};

LaurentPoly pow(const LaurentPoly& x, unsigned k);

// Element of Q(v), kept as num/den with den having v-adic valuation 0,
// positive leading coefficient and gcd(num, den) = 1 in Z[v].
class RationalFn {
public:
    RationalFn() = default;
    RationalFn(long c) : num_(c) {}  // NOLINT
    RationalFn(const Integer& c) : num_(c) {}  // NOLINT
    RationalFn(const LaurentPoly& p) : num_(p) {}  // NOLINT
    RationalFn(const LaurentPoly& num, const LaurentPoly& den);
    static RationalFn vpow(int e) { return RationalFn(LaurentPoly::vpow(e)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }
    bool isLaurent() const { return den_.isOne(); }
    bool isOne() const { return den_.isOne() && num_.isOne(); }
    // Throws NotDivisible if not Laurent.
    LaurentPoly toLaurent() const;

    RationalFn operator-() const;
    RationalFn& operator+=(const RationalFn& o);
    RationalFn& operator-=(const RationalFn& o);
    RationalFn& operator*=(const RationalFn& o);
    RationalFn& operator/=(const RationalFn& o);
    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
    friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
    friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
    friend bool operator==(const RationalFn& a, const RationalFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    RationalFn barInvolution() const;
    RationalFn shifted(int k) const { return RationalFn(num_.shifted(k), den_); }
    // Throws PoleAtOne.
    Rational valueAtOne() const;
    // Throws DenominatorVanishes.
    Rational evaluate(const Rational& x) const;

    std::string toString() const;

private:
    void normalize();
    LaurentPoly num_;
    LaurentPoly den_{1};
};

// Value at v^2 = q of a polynomial in v^2. Throws InvalidArgument on odd exponents.
Rational evaluateAtPrimePower(const LaurentPoly& x, const Integer& q);
Rational evaluateAtPrimePower(const RationalFn& x, const Integer& q);
Rational specializeV1(const RationalFn& x);
Integer specializeV1(const LaurentPoly& x);

// Polynomial in q given by integer coefficients, index = degree.
using QPoly = std::vector<Integer>;

// Fit a polynomial of degree <= degreeBound through the first degreeBound+1 samples
// and check it against the rest. Throws NonIntegerCoefficients or VerificationFailed.
QPoly interpolateAndVerify(const std::vector<std::pair<Integer, Integer>>& samples, int degreeBound);
// f(q) with q = v^2.
LaurentPoly qPolyToV(const QPoly& f);
Integer evalQPoly(const QPoly& f, const Integer& q);
std::string qPolyToString(const QPoly& f);

// Gaussian binomial and friends, as polynomials in v.
LaurentPoly gaussianBinomialV(int n, int k);  // unbalanced: polynomial in v^2
LaurentPoly glOrder(int m);                    // |GL_m(q)| at q = v^2

// Multivariate-free ordinary binomial with integer top.
Integer binomialInt(const Integer& top, unsigned k);

}  // namespace ahs
