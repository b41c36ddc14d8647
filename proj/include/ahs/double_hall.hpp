#pragma once

// The double Ringel-Hall algebra in the normal form u+_A K^j u-_B.

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>

#include "ahs/hall.hpp"

namespace ahs {

struct PBWKey {
    SegmentMultiset plus;
    PeriodicVec k;
    SegmentMultiset minus;
    friend bool operator<(const PBWKey& a, const PBWKey& b) {
        return std::tie(a.plus, a.k, a.minus) < std::tie(b.plus, b.k, b.minus);
    }
    friend bool operator==(const PBWKey& a, const PBWKey& b) {
        return a.plus == b.plus && a.k == b.k && a.minus == b.minus;
    }
    // deg u+_A - deg u-_B
    PeriodicVec degree() const { return plus.degree() - minus.degree(); }
};

class PBWElement {
public:
    PBWElement() = default;
    explicit PBWElement(int n) : n_(n) {}
    static PBWElement scalar(int n, const RationalFn& c);
    static PBWElement monomial(const SegmentMultiset& a, const PeriodicVec& k, const SegmentMultiset& b,
                               const RationalFn& c = 1);
    static PBWElement plus(const SegmentMultiset& a);
    static PBWElement minus(const SegmentMultiset& b);
    static PBWElement cartan(const PeriodicVec& k);
    // K~^nu stored as a K-exponent
    static PBWElement cartanTilde(const PeriodicVec& nu);

    int n() const { return n_; }
    const std::map<PBWKey, RationalFn>& terms() const { return t_; }
    bool isZero() const { return t_.empty(); }
    void addTerm(const PBWKey& key, const RationalFn& c);
    RationalFn coeff(const PBWKey& key) const;

    PBWElement& operator+=(const PBWElement& o);
    PBWElement& operator-=(const PBWElement& o);
    PBWElement& operator*=(const RationalFn& c);
    friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
    friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
    friend PBWElement operator*(const RationalFn& c, PBWElement a) { return a *= c; }
    friend bool operator==(const PBWElement& a, const PBWElement& b) { return a.t_ == b.t_; }
    friend bool operator!=(const PBWElement& a, const PBWElement& b) { return !(a == b); }

    // Homogeneous components keyed by degree.
    std::map<PeriodicVec, PBWElement> components() const;
    bool isHomogeneous() const { return components().size() <= 1; }

    std::string toString() const;

private:
    int n_ = 0;
    std::map<PBWKey, RationalFn> t_;
};

struct EngineConfig {
    int maxDim = 6;  // bound on d(A) + d(B) for a single u-_B u+_A rewrite
};

using PhiTable = std::map<std::pair<SegmentMultiset, SegmentMultiset>, RationalFn>;

class DoubleHallEngine {
public:
    explicit DoubleHallEngine(QuiverOracle& oracle, EngineConfig cfg = {}) : hall_(oracle), cfg_(cfg) {}
    int n() const { return hall_.n(); }
    HallAlgebra& hall() { return hall_; }
    QuiverOracle& oracle() { return hall_.oracle(); }
    const EngineConfig& config() const { return cfg_; }

    // All nonzero phi^{A1,B1}_{A,B} (resp. the tilde version), keyed by (A1, B1).
    const PhiTable& phiTable(const SegmentMultiset& a, const SegmentMultiset& b);
    const PhiTable& phiTildeTable(const SegmentMultiset& a, const SegmentMultiset& b);
    RationalFn phiCoefficient(const SegmentMultiset& a, const SegmentMultiset& b, const SegmentMultiset& a1,
                              const SegmentMultiset& b1);
    RationalFn phiTildeCoefficient(const SegmentMultiset& a, const SegmentMultiset& b, const SegmentMultiset& a1,
                                   const SegmentMultiset& b1);

    // Normal form of u-_B u+_A.
    const PBWElement& commuteMinusPlus(const SegmentMultiset& b, const SegmentMultiset& a);
    PBWElement pbwProduct(const PBWElement& x, const PBWElement& y);
    PBWElement monomialProduct(const PBWKey& x, const PBWKey& y);
    PBWElement power(const PBWElement& x, unsigned k);

    // u+_{E_ij} u-_{E_kl} - u-_{E_kl} u+_{E_ij} from the indecomposable closed forms,
    // evaluated without the general rewriting.
    PBWElement closedFormCommutator(int i, int j, int k, int l);
    // Both sides of the semisimple commutator relation.
    std::pair<PBWElement, PBWElement> semisimpleCommutatorSides(const PeriodicVec& lambda, const PeriodicVec& mu);
    bool semisimpleCommutatorCheck(const PeriodicVec& lambda, const PeriodicVec& mu);

    std::size_t memoSize() const;

private:
    const PBWElement& closedMinusPlus(int i, int j, int k, int l);

    HallAlgebra hall_;
    EngineConfig cfg_;
    mutable std::recursive_mutex mu_;
    std::map<std::pair<SegmentMultiset, SegmentMultiset>, PhiTable> phi_, phiTilde_;
    std::map<std::pair<SegmentMultiset, SegmentMultiset>, PBWElement> commute_;
    std::map<std::tuple<int, int, int, int>, PBWElement> closed_;
};

// K^m x, for x in normal form.
PBWElement leftCartan(const PeriodicVec& m, const PBWElement& x);

// Closed-form phi tables for indecomposable A = E_ij, B = E_kl.
PhiTable indecomposablePhiTable(int n, int i, int j, int k, int l);
PhiTable indecomposablePhiTildeTable(int n, int i, int j, int k, int l);
// The coefficient of the semisimple commutator relation.
RationalFn semisimplePhi(const PeriodicVec& lambda, const PeriodicVec& mu, const PeriodicVec& alpha,
                         const PeriodicVec& beta);

}  // namespace ahs
