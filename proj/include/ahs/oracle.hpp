#pragma once

// Nilpotent representations of the cyclic quiver over F_p and the Hall / automorphism
// polynomials obtained from brute-force counts.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ahs/arith.hpp"
#include "ahs/periodic.hpp"

namespace ahs {

class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(int rows, int cols, int p) : r_(rows), c_(cols), p_(p), a_(static_cast<size_t>(rows * cols), 0) {}
    static FpMatrix identity(int d, int p);
    int rows() const { return r_; }
    int cols() const { return c_; }
    int prime() const { return p_; }
    int& operator()(int i, int j) { return a_[static_cast<size_t>(i * c_ + j)]; }
    int operator()(int i, int j) const { return a_[static_cast<size_t>(i * c_ + j)]; }
    FpMatrix operator*(const FpMatrix& o) const;
    bool isZero() const;
    int rank() const;
    FpMatrix transposed() const;
    friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

private:
    int r_ = 0, c_ = 0, p_ = 2;
    std::vector<int> a_;
};

// Arrow x_i : M_i -> M_{i+1} is stored in maps[i-1] with shape d_{i+1} x d_i.
struct FiniteFieldRep {
    int p = 2;
    PeriodicVec dims;
    std::vector<FpMatrix> maps;
    int n() const { return dims.n(); }
    const FpMatrix& arrow(int i) const { return maps[static_cast<size_t>(modn(i - 1, n()))]; }
};

FiniteFieldRep buildRep(const SegmentMultiset& a, int p);
SegmentMultiset isoType(const FiniteFieldRep& rep);
// Conjugate every vertex space by an invertible matrix (for basis-independence tests).
FiniteFieldRep changeBasis(const FiniteFieldRep& rep, const std::vector<FpMatrix>& g);

const std::vector<int>& smallPrimes();

struct OracleConfig {
    int maxDim = 6;                        // bound on dimTotal(C)
    std::int64_t budget = 20'000'000;      // bound on enumerated candidates per call
    std::int64_t autBudget = 200'000;      // bound on brute-force endomorphism enumeration
};

struct HallRecord {
    QPoly poly;
    std::vector<int> fitPrimes;
    std::vector<int> verifyPrimes;
    int degreeBound = 0;
    std::string method = "subspaces";  // or "extensions"
};

struct AutRecord {
    QPoly poly;
    std::string method;  // "interpolation" or "structure"
    std::vector<int> checkedPrimes;
};

struct CacheStats {
    std::int64_t hits = 0;
    std::int64_t misses = 0;
};

using TypePair = std::pair<SegmentMultiset, SegmentMultiset>;  // (quotient type, submodule type)

class QuiverOracle {
public:
    explicit QuiverOracle(int n, OracleConfig cfg = {});
    int n() const { return n_; }
    const OracleConfig& config() const { return cfg_; }

    std::vector<SegmentMultiset> enumerateIsoTypes(const PeriodicVec& d) const;

    // Number of submodules N of M(C) with N ~ M(B) and M(C)/N ~ M(A).
    Integer countSubmodules(const SegmentMultiset& c, const SegmentMultiset& a, const SegmentMultiset& b, int p);
    // All arrow-stable graded subspaces of dimension vector b, tallied by (quotient, sub) type.
    std::map<TypePair, Integer> tallySubmodules(const SegmentMultiset& c, const PeriodicVec& b, int p);
    // Total number of arrow-stable graded subspaces, every dimension vector.
    Integer countAllStableSubspaces(const SegmentMultiset& c, int p);

    HallRecord hallRecord(const SegmentMultiset& c, const SegmentMultiset& a, const SegmentMultiset& b);
    QPoly hallPolynomial(const SegmentMultiset& c, const SegmentMultiset& a, const SegmentMultiset& b) {
        return hallRecord(c, a, b).poly;
    }
    // phi^C_{A,B} as an element of Z[v^2].
    LaurentPoly hallPolynomialV(const SegmentMultiset& c, const SegmentMultiset& a, const SegmentMultiset& b);
    // All C with nonzero phi^C_{A,B}, in v. Counts extensions of A by B when that is cheaper.
    std::map<SegmentMultiset, LaurentPoly> hallProductV(const SegmentMultiset& a, const SegmentMultiset& b);
    // Number of cocycles Z in sum_i Hom(A_i, B_{i+1}) whose middle term is isomorphic to each C.
    std::map<SegmentMultiset, Integer> tallyExtensions(const SegmentMultiset& a, const SegmentMultiset& b, int p) const;
    std::int64_t extensionCost(const SegmentMultiset& a, const SegmentMultiset& b) const;
    std::int64_t subspaceCost(const SegmentMultiset& a, const SegmentMultiset& b) const;
    // All (A, B) with nonzero phi^C_{A,B}.
    std::vector<std::pair<TypePair, LaurentPoly>> hallDecompositions(const SegmentMultiset& c);

    int endDim(const SegmentMultiset& a);
    int homDim(const SegmentMultiset& a, const SegmentMultiset& b);
    Integer autCountBruteForce(const SegmentMultiset& a, int p);
    AutRecord autRecord(const SegmentMultiset& a);
    QPoly autPolynomial(const SegmentMultiset& a) { return autRecord(a).poly; }
    LaurentPoly autPolynomialV(const SegmentMultiset& a) { return qPolyToV(autRecord(a).poly); }

    // Persistent cache (JSON). Loading merges; saving writes a temp file and renames it.
    void loadCache(const std::string& path);
    void saveCache(const std::string& path) const;
    void clearMemory();
    CacheStats stats() const;
    std::size_t cachedHallCount() const;
    std::size_t cachedAutCount() const;

private:
    const std::map<TypePair, Integer>& tallyCached(const SegmentMultiset& c, const PeriodicVec& b, int p);
    std::map<TypePair, Integer> computeTally(const SegmentMultiset& c, const PeriodicVec& b, int p) const;
    // Fills the tally cache for several primes at once, one task per prime.
    void prefetchTallies(const SegmentMultiset& c, const PeriodicVec& b, const std::vector<int>& primes);
    void computeHallFamily(const SegmentMultiset& c, const PeriodicVec& b);
    void computeProductFamily(const SegmentMultiset& a, const SegmentMultiset& b);
    int homDimAt(const SegmentMultiset& a, const SegmentMultiset& b, int p) const;
    std::string hallKey(const SegmentMultiset& c, const SegmentMultiset& a, const SegmentMultiset& b) const;
    std::string autKey(const SegmentMultiset& a) const;

    int n_;
    OracleConfig cfg_;
    mutable std::recursive_mutex mu_;
    std::map<std::string, HallRecord> hall_;
    std::map<std::string, AutRecord> aut_;
    std::map<std::pair<TypePair, int>, int> homDims_;
    std::map<std::tuple<SegmentMultiset, PeriodicVec, int>, std::map<TypePair, Integer>> tallies_;
    mutable CacheStats stats_;
};

}  // namespace ahs
