#pragma once

// The v = 1 theory: the enveloping algebra of the loop algebra of gl_n in the basis
// w+_A prod binom(E_ii, lambda_i) w-_B, multiplied through the block model at v = 1.

#include <map>
#include <string>
#include <vector>

#include "ahs/schur.hpp"

namespace ahs {

// Keys reuse BlockKey; for ClassicalElement the lambda slot holds the binomial exponents.
class ClassicalElement {
public:
    ClassicalElement() = default;
    explicit ClassicalElement(int n) : n_(n) {}
    static ClassicalElement monomial(const SegmentMultiset& a, const PeriodicVec& lambda, const SegmentMultiset& b,
                                     const Rational& c = 1);
    static ClassicalElement scalar(int n, const Rational& c);
    static ClassicalElement wPlus(const SegmentMultiset& a);
    static ClassicalElement wMinus(const SegmentMultiset& b);
    // prod_i binom(E_ii, lambda_i)
    static ClassicalElement binom(const PeriodicVec& lambda);
    // E^Delta_{i,j}: w+ for i < j, w- of the transpose for i > j, binom(E_ii, 1) on the diagonal
    static ClassicalElement loopGenerator(int n, int i, int j);

    int n() const { return n_; }
    const std::map<BlockKey, Rational>& terms() const { return t_; }
    bool isZero() const { return t_.empty(); }
    void addTerm(const BlockKey& k, const Rational& c);
    Rational coeff(const BlockKey& k) const;
    int binomialDegree() const;

    ClassicalElement& operator+=(const ClassicalElement& o);
    ClassicalElement& operator-=(const ClassicalElement& o);
    ClassicalElement& operator*=(const Rational& c);
    friend ClassicalElement operator+(ClassicalElement a, const ClassicalElement& b) { return a += b; }
    friend ClassicalElement operator-(ClassicalElement a, const ClassicalElement& b) { return a -= b; }
    friend ClassicalElement operator*(const Rational& c, ClassicalElement a) { return a *= c; }
    friend bool operator==(const ClassicalElement& a, const ClassicalElement& b) { return a.t_ == b.t_; }
    friend bool operator!=(const ClassicalElement& a, const ClassicalElement& b) { return !(a == b); }

    std::string toString() const;

private:
    int n_ = 0;
    std::map<BlockKey, Rational> t_;
};

// The block model with rational coefficients; keys are u+_{A,1} 1_{lambda,1} u-_{B,1}.
class ClassicalBlockElement {
public:
    ClassicalBlockElement() = default;
    explicit ClassicalBlockElement(int n) : n_(n) {}
    static ClassicalBlockElement monomial(const SegmentMultiset& a, const PeriodicVec& lambda, const SegmentMultiset& b,
                                          const Rational& c = 1);
    static ClassicalBlockElement idempotent(const PeriodicVec& lambda);
    // Throws PoleAtOne.
    static ClassicalBlockElement specialize(const BlockElement& x);
    BlockElement lift() const;

    int n() const { return n_; }
    const std::map<BlockKey, Rational>& terms() const { return t_; }
    bool isZero() const { return t_.empty(); }
    void addTerm(const BlockKey& k, const Rational& c);
    Rational coeff(const BlockKey& k) const;

    ClassicalBlockElement& operator+=(const ClassicalBlockElement& o);
    ClassicalBlockElement& operator-=(const ClassicalBlockElement& o);
    ClassicalBlockElement& operator*=(const Rational& c);
    friend ClassicalBlockElement operator+(ClassicalBlockElement a, const ClassicalBlockElement& b) { return a += b; }
    friend ClassicalBlockElement operator-(ClassicalBlockElement a, const ClassicalBlockElement& b) { return a -= b; }
    friend ClassicalBlockElement operator*(const Rational& c, ClassicalBlockElement a) { return a *= c; }
    friend bool operator==(const ClassicalBlockElement& a, const ClassicalBlockElement& b) { return a.t_ == b.t_; }
    friend bool operator!=(const ClassicalBlockElement& a, const ClassicalBlockElement& b) { return !(a == b); }

    std::string toString() const;

private:
    int n_ = 0;
    std::map<BlockKey, Rational> t_;
};

// Generalized binomial prod_i binom(mu_i, lambda_i), mu_i may be negative.
Integer binomialProduct(const PeriodicVec& mu, const PeriodicVec& lambda);

ClassicalBlockElement classicalBlockProduct(ModifiedAlgebra& m, const ClassicalBlockElement& x,
                                            const ClassicalBlockElement& y);
// Closed forms for 1_lambda (u+_{E_ij} u-_{E_kl} - u-_{E_kl} u+_{E_ij}) at v = 1, i < j, k < l.
ClassicalBlockElement classicalClosedCommutator(int n, int i, int j, int k, int l, const PeriodicVec& lambda);

// The image of x on the middle weights mu in [0, side)^n.
ClassicalBlockElement phiOnBox(const ClassicalElement& x, int side);

struct LiftReport {
    int side = 0;          // box side used for the lift
    int retries = 0;       // window enlargements beyond the default
    std::size_t blockProducts = 0;
};

// Throws WindowInstability.
ClassicalElement classicalProduct(ModifiedAlgebra& m, const ClassicalElement& x, const ClassicalElement& y,
                                  LiftReport* report = nullptr);
ClassicalElement classicalCommutator(ModifiedAlgebra& m, const ClassicalElement& x, const ClassicalElement& y);

struct PresentationReport {
    int checked = 0;
    int skipped = 0;  // pairs outside the scope of a relation
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Relations [E_ii, E_kl] = (d_ik - d_il) E_kl and
// [E_ij, E_kl] = d_jk E_{i,l+j-k} - d_li E_{k,j+l-i} (i != j, k != l), with d comparing residues mod n.
PresentationReport verifyLoopPresentation(ModifiedAlgebra& m, int sampleBound);

bool uZMembership(const ClassicalElement& x);
// Block side: every coefficient of the phi image on the box is an integer.
bool blockSideIntegral(const ClassicalElement& x, int side);

// Rank of a family of v = 1 block images (phi injectivity witness).
int classicalRank(const std::vector<ClassicalBlockElement>& family);

// eta_r, with coefficients specialized at v = 1.
SchurElement etaR(SchurAlgebra& s, const ClassicalElement& x);
SchurElement specializeSchur(const SchurElement& x);
int schurRank(const std::vector<SchurElement>& family);

}  // namespace ahs
