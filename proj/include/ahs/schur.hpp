#pragma once

// The affine quantum Schur algebra realized as endomorphisms of permutation modules of the
// affine Hecke algebra of the extended affine symmetric group.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ahs/modified.hpp"

namespace ahs {

// Bijection w of Z with w(i + r) = w(i) + r, stored by its window w(1..r).
class AffinePerm {
public:
    AffinePerm() = default;
    explicit AffinePerm(std::vector<int> window);
    static AffinePerm identity(int r);
    static AffinePerm rotation(int r);  // i -> i + 1
    static AffinePerm simple(int r, int k);  // swaps k and k + 1 (mod r), 0 <= k < r

    int r() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const;
    const std::vector<int>& window() const { return w_; }
    AffinePerm operator*(const AffinePerm& o) const;  // composition, (x * y)(i) = x(y(i))
    AffinePerm inverse() const;
    int length() const;
    bool isLeftDescent(int k) const;  // l(s_k w) < l(w)
    bool isRightDescent(int k) const;
    friend bool operator<(const AffinePerm& a, const AffinePerm& b) { return a.w_ < b.w_; }
    friend bool operator==(const AffinePerm& a, const AffinePerm& b) { return a.w_ == b.w_; }
    std::string toString() const;

private:
    std::vector<int> w_;
};

int permLength(const AffinePerm& w);

enum class HeckeRelation { Standard, Swapped };  // (T-v^2)(T+1) = 0 or (T-1)(T+v^2) = 0
enum class SchurNormalization { Orbit, OrbitStrict, None };

struct SchurConvention {
    HeckeRelation hecke = HeckeRelation::Standard;
    SchurNormalization norm = SchurNormalization::Orbit;
    friend bool operator<(const SchurConvention& a, const SchurConvention& b) {
        return std::tie(a.hecke, a.norm) < std::tie(b.hecke, b.norm);
    }
    friend bool operator==(const SchurConvention& a, const SchurConvention& b) {
        return a.hecke == b.hecke && a.norm == b.norm;
    }
    std::string toString() const;
};

using HeckeElement = std::map<AffinePerm, LaurentPoly>;
HeckeElement heckeMultiply(const HeckeElement& x, const HeckeElement& y, HeckeRelation rel = HeckeRelation::Standard);
HeckeElement heckeLeftMultiply(const AffinePerm& x, const HeckeElement& h, HeckeRelation rel);

// a_{ij} = |R^lambda_i  intersect  w(R^mu_j)|, where R^lambda_i are consecutive blocks of sizes lambda_i.
PeriodicMat matrixCosetBijection(const PeriodicVec& lambda, const AffinePerm& w, const PeriodicVec& mu);
// Minimal length representative of the double coset of A.
AffinePerm minimalCosetRep(const PeriodicMat& a);
std::set<AffinePerm> doubleCoset(const PeriodicMat& a);

// Exponent d_A with [A] = v^{-d_A} (double coset sum).
int normalizationExponent(const PeriodicMat& a, SchurNormalization norm);

struct SchurElement {
    int n = 0;
    int r = 0;
    std::map<PeriodicMat, RationalFn> terms;
    void addTerm(const PeriodicMat& a, const RationalFn& c);
    bool isZero() const { return terms.empty(); }
    SchurElement& operator+=(const SchurElement& o);
    SchurElement& operator-=(const SchurElement& o);
    SchurElement& operator*=(const RationalFn& c);
    friend SchurElement operator+(SchurElement a, const SchurElement& b) { return a += b; }
    friend SchurElement operator-(SchurElement a, const SchurElement& b) { return a -= b; }
    friend SchurElement operator*(const RationalFn& c, SchurElement a) { return a *= c; }
    friend bool operator==(const SchurElement& a, const SchurElement& b) { return a.terms == b.terms; }
    friend bool operator!=(const SchurElement& a, const SchurElement& b) { return !(a == b); }
    int spread() const;
    std::string toString() const;
};

struct TriangularReport {
    SchurElement value;
    PeriodicMat leadingKey;
    RationalFn leadingCoeff;
    bool leadingIsUnit = false;
    bool lowerTermsSmaller = false;
};

struct SchurConfig {
    int maxR = 4;
    int maxSpread = 8;
};

class SchurAlgebra {
public:
    SchurAlgebra(int n, int r, SchurConvention conv = {}, SchurConfig cfg = {});
    int n() const { return n_; }
    int r() const { return r_; }
    const SchurConvention& convention() const { return conv_; }

    SchurElement zero() const;
    SchurElement basis(const PeriodicMat& a, const RationalFn& c = 1) const;  // [A], or 0 if sigma(A) != r
    SchurElement diagIdempotent(const PeriodicVec& lambda) const;
    SchurElement identity() const;
    // A(j, r)
    SchurElement aJr(const PeriodicMat& a, const PeriodicVec& j) const;
    std::vector<PeriodicVec> weights() const;  // Lambda(n, r)
    std::vector<PeriodicMat> basisWindow(int spread) const;

    const std::map<PeriodicMat, LaurentPoly>& monomialProduct(const PeriodicMat& a, const PeriodicMat& b);
    SchurElement multiply(const SchurElement& x, const SchurElement& y);

    // C+(0,r) [diag(lambda)] C-(0,r) with its leading term; throws TriangularityViolation.
    TriangularReport triangularExpand(const PeriodicMat& c, const PeriodicVec& lambda);
    // [A] as a Z[v,v^-1]-combination of C+(0,r)[diag(lambda)]C-(0,r), keyed by (C, lambda).
    std::map<std::pair<PeriodicMat, PeriodicVec>, RationalFn> surjectivityWitness(const PeriodicMat& a);

private:
    int n_, r_;
    SchurConvention conv_;
    SchurConfig cfg_;
    std::map<std::pair<PeriodicMat, PeriodicMat>, std::map<PeriodicMat, LaurentPoly>> memo_;
};

// zeta_r and its modified version.
SchurElement zetaR(DoubleHallEngine& e, SchurAlgebra& s, const PBWElement& x);
SchurElement zetaDotR(DoubleHallEngine& e, SchurAlgebra& s, const BlockElement& x);

struct CalibrationResult {
    SchurConvention convention;
    bool idempotentLaws = false;     // [diag] laws
    bool cartanRelations = false;    // K-commutation through zeta_r
    bool commutatorRelation = false; // semisimple commutator relation through zeta_r
    bool triangular = false;
    bool homomorphism = false;       // generator products through zeta_r
    bool passes() const { return idempotentLaws && cartanRelations && commutatorRelation && triangular && homomorphism; }
    std::string toString() const;
};

std::vector<CalibrationResult> calibrateSchur(QuiverOracle& oracle);

}  // namespace ahs
