#pragma once

// Periodic vectors and matrices: lambda_i = lambda_{i-n}, a_{i+n,j+n} = a_{i,j}.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ahs/errors.hpp"

namespace ahs {

inline int modn(int i, int n) {
    int r = i % n;
    return r < 0 ? r + n : r;
}
// Representative of i in [1, n].
inline int wrap1(int i, int n) { return modn(i - 1, n) + 1; }
inline int floorDiv(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

class PeriodicVec {
public:
    PeriodicVec() = default;
    explicit PeriodicVec(int n) : w_(static_cast<size_t>(n), 0) {}
    explicit PeriodicVec(std::vector<int> window) : w_(std::move(window)) {}
    static PeriodicVec unit(int n, int i);
    static PeriodicVec ones(int n) { return PeriodicVec(std::vector<int>(static_cast<size_t>(n), 1)); }

    int n() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[static_cast<size_t>(modn(i - 1, n()))]; }
    int& at(int i) { return w_[static_cast<size_t>(modn(i - 1, n()))]; }
    const std::vector<int>& window() const { return w_; }

    bool isZero() const;
    bool nonneg() const;
    int sum() const;  // sigma(lambda)

    PeriodicVec operator-() const;
    PeriodicVec& operator+=(const PeriodicVec& o);
    PeriodicVec& operator-=(const PeriodicVec& o);
    friend PeriodicVec operator+(PeriodicVec a, const PeriodicVec& b) { return a += b; }
    friend PeriodicVec operator-(PeriodicVec a, const PeriodicVec& b) { return a -= b; }
    friend PeriodicVec operator*(int k, PeriodicVec a);
    friend bool operator==(const PeriodicVec& a, const PeriodicVec& b) { return a.w_ == b.w_; }
    friend bool operator!=(const PeriodicVec& a, const PeriodicVec& b) { return a.w_ != b.w_; }
    friend bool operator<(const PeriodicVec& a, const PeriodicVec& b) { return a.w_ < b.w_; }
    // componentwise <=
    bool leq(const PeriodicVec& o) const;

    std::string toString() const;

private:
    std::vector<int> w_;
};

int eulerForm(const PeriodicVec& a, const PeriodicVec& b);
int dot(const PeriodicVec& a, const PeriodicVec& b);
// K~-exponent reduction: nu - nu_n * 1.
PeriodicVec kTildeReduce(const PeriodicVec& nu);
// K~^nu = K^m with m_i = nu_i - nu_{i-1}; inverse normalised by nu_n = 0.
PeriodicVec kTildeToK(const PeriodicVec& nu);
PeriodicVec kToKTilde(const PeriodicVec& m);
// All nonnegative vectors with given sum, lexicographic order.
std::vector<PeriodicVec> compositions(int n, int r);

enum class MatVariant { General, Nonneg, Plus, Minus, Offdiag };

class PeriodicMat {
public:
    using Key = std::pair<int, int>;

    PeriodicMat() = default;
    explicit PeriodicMat(int n) : n_(n) {}
    static PeriodicMat E(int n, int i, int j, int a = 1);
    static PeriodicMat diag(const PeriodicVec& lambda);
    // A_lambda = sum lambda_i E_{i,i+1}
    static PeriodicMat semisimple(const PeriodicVec& lambda);

    int n() const { return n_; }
    int operator()(int i, int j) const;
    void add(int i, int j, int a);
    const std::map<Key, int>& entries() const { return e_; }
    bool isZero() const { return e_.empty(); }
    bool satisfies(MatVariant v) const;
    void require(MatVariant v, const char* what) const;

    PeriodicMat& operator+=(const PeriodicMat& o);
    PeriodicMat& operator-=(const PeriodicMat& o);
    friend PeriodicMat operator+(PeriodicMat a, const PeriodicMat& b) { return a += b; }
    friend PeriodicMat operator-(PeriodicMat a, const PeriodicMat& b) { return a -= b; }
    friend PeriodicMat operator*(int k, const PeriodicMat& a);
    friend bool operator==(const PeriodicMat& a, const PeriodicMat& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    friend bool operator!=(const PeriodicMat& a, const PeriodicMat& b) { return !(a == b); }
    friend bool operator<(const PeriodicMat& a, const PeriodicMat& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.e_ < b.e_;
    }

    PeriodicVec dimVector() const;  // plus matrices
    int dimTotal() const;           // sum a_{ij} (j - i)
    PeriodicVec ro() const;
    PeriodicVec co() const;
    int sigma() const;
    int spread() const;
    int sigmaHook(int i, int j) const;
    int sigmaI(int i) const;
    PeriodicMat transpose() const;
    PeriodicMat plusPart() const;
    PeriodicMat minusPart() const;
    PeriodicMat offdiagPart() const;
    PeriodicVec diagonal() const;
    // deg(u+_A) = ro(A) - co(A) for plus matrices.
    PeriodicVec degree() const { return ro() - co(); }

    std::string toString() const;

private:
    int n_ = 0;
    std::map<Key, int> e_;
};

using SegmentMultiset = PeriodicMat;  // a plus matrix: segment (i, l) has multiplicity a_{i,i+l}

std::pair<PeriodicMat, PeriodicMat> splitOffdiag(const PeriodicMat& a);
int mST(int s, int t, int n);

enum class Order { Less, Equal, Greater, Incomparable };
// Less iff A < B strictly in the hook order.
Order orderCompare(const PeriodicMat& a, const PeriodicMat& b);
const char* orderName(Order o);

// Literal syntax: "{(i,j):a, ...}", "E[i,j]", "0", sums "E[1,2]+E[2,3]", "2E[1,2]".
PeriodicMat parseMatrix(const std::string& text, int n);
PeriodicVec parseVector(const std::string& text, int n);

}  // namespace ahs
