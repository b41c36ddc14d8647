#include "ahs/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <thread>
#include <json.hpp>
#include <sstream>

namespace ahs {

namespace {

// f over xs, at most hardware_concurrency tasks in flight; f must not touch shared mutable state.
template <class T, class F>
auto parallelMap(const std::vector<T>& xs, F f) -> std::vector<decltype(f(xs[0]))> {
    using R = decltype(f(xs[0]));
    std::vector<R> out;
    out.reserve(xs.size());
    const size_t width = std::max(1u, std::thread::hardware_concurrency());
    if (width == 1) {
        for (const auto& x : xs) out.push_back(f(x));
        return out;
    }
    for (size_t start = 0; start < xs.size(); start += width) {
        std::vector<std::future<R>> batch;
        for (size_t k = start; k < std::min(xs.size(), start + width); ++k)
            batch.push_back(std::async(std::launch::async, f, xs[k]));
        for (auto& fu : batch) out.push_back(fu.get());
    }
    return out;
}

int invMod(int a, int p) {
    int r = 1, b = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Row-reduce in place; returns pivot columns.
std::vector<int> rref(std::vector<int>& m, int rows, int cols, int p) {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (m[static_cast<size_t>(i * cols + c)] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < cols; ++j) std::swap(m[static_cast<size_t>(sel * cols + j)], m[static_cast<size_t>(r * cols + j)]);
        int inv = invMod(m[static_cast<size_t>(r * cols + c)], p);
        for (int j = 0; j < cols; ++j) m[static_cast<size_t>(r * cols + j)] = m[static_cast<size_t>(r * cols + j)] * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            int f = m[static_cast<size_t>(i * cols + c)];
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j) {
                int& x = m[static_cast<size_t>(i * cols + j)];
                x = ((x - f * m[static_cast<size_t>(r * cols + j)]) % p + p) % p;
            }
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

int rankOf(std::vector<int> m, int rows, int cols, int p) {
    if (rows == 0 || cols == 0) return 0;
    return static_cast<int>(rref(m, rows, cols, p).size());
}

// Nullspace basis of a rows x cols matrix.
std::vector<std::vector<int>> nullspace(std::vector<int> m, int rows, int cols, int p) {
    std::vector<int> piv = rows ? rref(m, rows, cols, p) : std::vector<int>{};
    std::vector<char> isPiv(static_cast<size_t>(cols), 0);
    for (int c : piv) isPiv[static_cast<size_t>(c)] = 1;
    std::vector<std::vector<int>> basis;
    for (int f = 0; f < cols; ++f) {
        if (isPiv[static_cast<size_t>(f)]) continue;
        std::vector<int> v(static_cast<size_t>(cols), 0);
        v[static_cast<size_t>(f)] = 1;
        for (size_t r = 0; r < piv.size(); ++r)
            v[static_cast<size_t>(piv[r])] = (p - m[r * static_cast<size_t>(cols) + static_cast<size_t>(f)]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

// A subspace of F_p^c in reduced row echelon form.
struct Subspace {
    int dim = 0;
    std::vector<int> rows;  // dim x c
    std::vector<int> pivots;
};

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Number of b-dimensional subspaces of F_p^c.
std::int64_t gaussCount(int c, int b, int p) {
    if (b < 0 || b > c) return 0;
    long double num = 1, den = 1;
    for (int i = 0; i < b; ++i) {
        num *= static_cast<long double>(ipow(p, c - i) - 1);
        den *= static_cast<long double>(ipow(p, i + 1) - 1);
    }
    return static_cast<std::int64_t>(num / den + 0.5L);
}

std::vector<Subspace> allSubspaces(int c, int b, int p) {
    std::vector<Subspace> out;
    if (b < 0 || b > c) return out;
    std::vector<int> piv(static_cast<size_t>(b));
    std::function<void(int, int)> choose = [&](int k, int start) {
        if (k == b) {
            std::vector<char> isPiv(static_cast<size_t>(c), 0);
            for (int x : piv) isPiv[static_cast<size_t>(x)] = 1;
            std::vector<std::pair<int, int>> freePos;
            for (int r = 0; r < b; ++r)
                for (int j = piv[static_cast<size_t>(r)] + 1; j < c; ++j)
                    if (!isPiv[static_cast<size_t>(j)]) freePos.emplace_back(r, j);
            std::vector<int> vals(freePos.size(), 0);
            while (true) {
                Subspace s;
                s.dim = b;
                s.pivots = piv;
                s.rows.assign(static_cast<size_t>(b * c), 0);
                for (int r = 0; r < b; ++r) s.rows[static_cast<size_t>(r * c + piv[static_cast<size_t>(r)])] = 1;
                for (size_t f = 0; f < freePos.size(); ++f)
                    s.rows[static_cast<size_t>(freePos[f].first * c + freePos[f].second)] = vals[f];
                out.push_back(std::move(s));
                size_t k2 = 0;
                while (k2 < vals.size() && ++vals[k2] == p) vals[k2++] = 0;
                if (k2 == vals.size()) break;
            }
            return;
        }
        for (int x = start; x <= c - (b - k); ++x) {
            piv[static_cast<size_t>(k)] = x;
            choose(k + 1, x + 1);
        }
    };
    choose(0, 0);
    return out;
}

bool contains(const Subspace& u, int c, std::vector<int> v, int p) {
    for (int r = 0; r < u.dim; ++r) {
        int f = v[static_cast<size_t>(u.pivots[static_cast<size_t>(r)])];
        if (f == 0) continue;
        for (int j = 0; j < c; ++j) v[static_cast<size_t>(j)] = ((v[static_cast<size_t>(j)] - f * u.rows[static_cast<size_t>(r * c + j)]) % p + p) % p;
    }
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

// Multiplicities from path ranks r[i-1][l], l = 0..L (r[..][L] = 0).
SegmentMultiset typeFromRanks(int n, const std::vector<std::vector<int>>& r) {
    const int L = static_cast<int>(r[0].size()) - 1;
    auto rk = [&](int i, int l) { return l > L ? 0 : r[static_cast<size_t>(modn(i - 1, n))][static_cast<size_t>(l)]; };
    auto cc = [&](int i, int l) { return rk(i, l) - rk(i, l + 1); };
    auto g = [&](int e, int l) { return cc(e - l, l); };
    SegmentMultiset a(n);
    for (int e = 1; e <= n; ++e)
        for (int len = 1; len <= L; ++len) {
            int m = g(e, len - 1) - g(e, len);
            if (m < 0) fail(ErrorKind::VerificationFailed, "inconsistent rank data");
            if (m > 0) {
                int s = e - len + 1;
                a.add(s, s + len, m);
            }
        }
    return a;
}

// Matrix of F_p entries as flat vector helpers.
std::vector<int> matTimesRowsT(const FpMatrix& P, const Subspace& u, int c) {
    // P (rows x c) applied to each basis row of u, as a rows x dim matrix.
    std::vector<int> out(static_cast<size_t>(P.rows() * u.dim), 0);
    const int p = P.prime();
    for (int i = 0; i < P.rows(); ++i)
        for (int k = 0; k < u.dim; ++k) {
            int s = 0;
            for (int j = 0; j < c; ++j) s += P(i, j) * u.rows[static_cast<size_t>(k * c + j)];
            out[static_cast<size_t>(i * u.dim + k)] = s % p;
        }
    return out;
}

struct PathData {
    int L = 0;                                   // maximal segment length
    std::vector<std::vector<FpMatrix>> P;        // P[i-1][l] : M_i -> M_{i+l}
};

PathData pathMaps(const FiniteFieldRep& rep, int L) {
    PathData d;
    d.L = L;
    const int n = rep.n();
    d.P.resize(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        auto& row = d.P[static_cast<size_t>(i - 1)];
        row.push_back(FpMatrix::identity(rep.dims(i), rep.p));
        for (int l = 1; l <= L; ++l) row.push_back(rep.arrow(i + l - 1) * row.back());
    }
    return d;
}

int maxSegmentLength(const SegmentMultiset& c) {
    int L = 0;
    for (const auto& [k, a] : c.entries()) L = std::max(L, k.second - k.first);
    return L;
}

// Enumerates all arrow-stable graded subspaces with dimension vector b and calls visit(U).
template <class Visit>
void forEachStable(const FiniteFieldRep& rep, const PeriodicVec& b, Visit&& visit) {
    const int n = rep.n();
    const int p = rep.p;
    std::vector<std::vector<Subspace>> cand(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) cand[static_cast<size_t>(i - 1)] = allSubspaces(rep.dims(i), b(i), p);
    std::vector<const Subspace*> cur(static_cast<size_t>(n), nullptr);
    auto imageInside = [&](int i, const Subspace& ui, const Subspace& uj) {
        const FpMatrix& x = rep.arrow(i);
        const int ci = rep.dims(i), cj = rep.dims(i + 1);
        for (int k = 0; k < ui.dim; ++k) {
            std::vector<int> v(static_cast<size_t>(cj), 0);
            for (int a = 0; a < cj; ++a) {
                int s = 0;
                for (int j = 0; j < ci; ++j) s += x(a, j) * ui.rows[static_cast<size_t>(k * ci + j)];
                v[static_cast<size_t>(a)] = s % p;
            }
            if (!contains(uj, cj, std::move(v), p)) return false;
        }
        return true;
    };
    std::function<void(int)> rec = [&](int i) {
        if (i > n) {
            if (imageInside(n, *cur[static_cast<size_t>(n - 1)], *cur[0])) visit(cur);
            return;
        }
        for (const auto& u : cand[static_cast<size_t>(i - 1)]) {
            if (i > 1 && !imageInside(i - 1, *cur[static_cast<size_t>(i - 2)], u)) continue;
            cur[static_cast<size_t>(i - 1)] = &u;
            rec(i + 1);
        }
    };
    rec(1);
}

std::int64_t candidateBound(const FiniteFieldRep& rep, const PeriodicVec& b) {
    long double prod = 1;
    for (int i = 1; i <= rep.n(); ++i) prod *= static_cast<long double>(gaussCount(rep.dims(i), b(i), rep.p));
    return prod > 9e18L ? INT64_MAX : static_cast<std::int64_t>(prod);
}

std::vector<PeriodicVec> subVectors(const PeriodicVec& d) {
    std::vector<PeriodicVec> out{PeriodicVec(d.n())};
    for (int i = 1; i <= d.n(); ++i) {
        std::vector<PeriodicVec> next;
        for (const auto& v : out)
            for (int x = 0; x <= d(i); ++x) {
                PeriodicVec w = v;
                w.at(i) = x;
                next.push_back(w);
            }
        out = std::move(next);
    }
    return out;
}

nlohmann::json qpolyJson(const QPoly& f) {
    nlohmann::json j = nlohmann::json::object();
    for (size_t k = 0; k < f.size(); ++k)
        if (f[k] != 0) j[std::to_string(k)] = f[k].get_str();
    return j;
}

QPoly qpolyFromJson(const nlohmann::json& j) {
    QPoly f;
    for (auto it = j.begin(); it != j.end(); ++it) {
        size_t k = std::stoul(it.key());
        if (f.size() <= k) f.resize(k + 1, Integer(0));
        f[k] = Integer(it.value().get<std::string>());
    }
    return f;
}

}  // namespace

// ---------------- FpMatrix

FpMatrix FpMatrix::identity(int d, int p) {
    FpMatrix m(d, d, p);
    for (int i = 0; i < d; ++i) m(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    FpMatrix r(r_, o.c_, p_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            int a = (*this)(i, k);
            if (!a) continue;
            for (int j = 0; j < o.c_; ++j) r(i, j) = (r(i, j) + a * o(k, j)) % p_;
        }
    return r;
}

bool FpMatrix::isZero() const {
    return std::all_of(a_.begin(), a_.end(), [](int x) { return x == 0; });
}

int FpMatrix::rank() const { return rankOf(a_, r_, c_, p_); }

FpMatrix FpMatrix::transposed() const {
    FpMatrix t(c_, r_, p_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

const std::vector<int>& smallPrimes() {
    static const std::vector<int> ps = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61};
    return ps;
}

// ---------------- representations

FiniteFieldRep buildRep(const SegmentMultiset& a, int p) {
    a.require(MatVariant::Plus, "buildRep");
    const int n = a.n();
    FiniteFieldRep rep;
    rep.p = p;
    rep.dims = a.dimVector();
    // basis element (vertex, index) for each (segment copy, position)
    std::vector<std::vector<std::pair<int, int>>> chains;
    std::vector<int> used(static_cast<size_t>(n), 0);
    for (const auto& [k, m] : a.entries())
        for (int copy = 0; copy < m; ++copy) {
            std::vector<std::pair<int, int>> chain;
            for (int t = k.first; t < k.second; ++t) {
                int v = wrap1(t, n);
                chain.emplace_back(v, used[static_cast<size_t>(v - 1)]++);
            }
            chains.push_back(std::move(chain));
        }
    for (int i = 1; i <= n; ++i) rep.maps.emplace_back(rep.dims(i + 1), rep.dims(i), p);
    for (const auto& chain : chains)
        for (size_t k = 0; k + 1 < chain.size(); ++k) {
            auto [v, idx] = chain[k];
            auto [w, jdx] = chain[k + 1];
            rep.maps[static_cast<size_t>(v - 1)](jdx, idx) = 1;
        }
    return rep;
}

SegmentMultiset isoType(const FiniteFieldRep& rep) {
    const int n = rep.n();
    int N = 0;
    for (int i = 1; i <= n; ++i) N += rep.dims(i);
    PathData pd = pathMaps(rep, N + 1);
    std::vector<std::vector<int>> r(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        if (!pd.P[static_cast<size_t>(i - 1)][static_cast<size_t>(N)].isZero())
            fail(ErrorKind::NotNilpotent, "representation is not nilpotent");
        for (int l = 0; l <= N; ++l) r[static_cast<size_t>(i - 1)].push_back(pd.P[static_cast<size_t>(i - 1)][static_cast<size_t>(l)].rank());
    }
    return typeFromRanks(n, r);
}

FiniteFieldRep changeBasis(const FiniteFieldRep& rep, const std::vector<FpMatrix>& g) {
    // x_i' = g_{i+1} x_i g_i^{-1}; we take g_i to be a permutation-like invertible and use
    // its inverse computed by elimination.
    FiniteFieldRep out = rep;
    const int n = rep.n();
    std::vector<FpMatrix> ginv;
    for (int i = 1; i <= n; ++i) {
        const FpMatrix& m = g[static_cast<size_t>(i - 1)];
        int d = m.rows();
        std::vector<int> aug(static_cast<size_t>(d * 2 * d), 0);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                aug[static_cast<size_t>(r * 2 * d + c)] = m(r, c);
                aug[static_cast<size_t>(r * 2 * d + d + r)] = 1;
            }
        auto piv = rref(aug, d, 2 * d, rep.p);
        if (static_cast<int>(piv.size()) < d || (d > 0 && piv[static_cast<size_t>(d - 1)] >= d))
            fail(ErrorKind::InvalidArgument, "changeBasis needs invertible matrices");
        FpMatrix inv(d, d, rep.p);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) inv(r, c) = aug[static_cast<size_t>(r * 2 * d + d + c)];
        ginv.push_back(inv);
    }
    for (int i = 1; i <= n; ++i)
        out.maps[static_cast<size_t>(i - 1)] =
            g[static_cast<size_t>(modn(i, n))] * rep.arrow(i) * ginv[static_cast<size_t>(i - 1)];
    return out;
}

// ---------------- QuiverOracle

QuiverOracle::QuiverOracle(int n, OracleConfig cfg) : n_(n), cfg_(cfg) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "n must be positive");
}

std::vector<SegmentMultiset> QuiverOracle::enumerateIsoTypes(const PeriodicVec& d) const {
    if (!d.nonneg()) return {};
    const int total = d.sum();
    if (total > 4 * cfg_.maxDim) fail(ErrorKind::ScaleExceeded, "dimension vector too large: " + d.toString());
    std::vector<std::pair<int, int>> segs;  // (start, length)
    for (int s = 1; s <= n_; ++s)
        for (int len = 1; len <= total; ++len) segs.emplace_back(s, len);
    std::vector<SegmentMultiset> out;
    SegmentMultiset cur(n_);
    PeriodicVec left = d;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (left.isZero()) {
            out.push_back(cur);
            return;
        }
        if (k == segs.size()) return;
        auto [s, len] = segs[k];
        // how many copies fit
        int maxCopies = INT32_MAX;
        std::vector<int> hits(static_cast<size_t>(n_), 0);
        for (int t = s; t < s + len; ++t) ++hits[static_cast<size_t>(modn(t - 1, n_))];
        for (int i = 1; i <= n_; ++i)
            if (hits[static_cast<size_t>(i - 1)]) maxCopies = std::min(maxCopies, left(i) / hits[static_cast<size_t>(i - 1)]);
        for (int m = 0; m <= maxCopies; ++m) {
            if (m > 0) {
                cur.add(s, s + len, 1);
                for (int t = s; t < s + len; ++t) left.at(t) -= 1;
            }
            rec(k + 1);
        }
        for (int m = 1; m <= maxCopies; ++m) {
            cur.add(s, s + len, -1);
            for (int t = s; t < s + len; ++t) left.at(t) += 1;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

const std::map<TypePair, Integer>& QuiverOracle::tallyCached(const SegmentMultiset& c, const PeriodicVec& b, int p) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_tuple(c, b, p);
    auto it = tallies_.find(key);
    if (it != tallies_.end()) return it->second;
    return tallies_.emplace(key, computeTally(c, b, p)).first->second;
}

void QuiverOracle::prefetchTallies(const SegmentMultiset& c, const PeriodicVec& b, const std::vector<int>& primes) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    std::vector<int> missing;
    for (int p : primes)
        if (!tallies_.count(std::make_tuple(c, b, p))) missing.push_back(p);
    auto results = parallelMap(missing, [&](int p) { return computeTally(c, b, p); });
    for (size_t k = 0; k < missing.size(); ++k) tallies_.emplace(std::make_tuple(c, b, missing[k]), std::move(results[k]));
}

std::map<TypePair, Integer> QuiverOracle::computeTally(const SegmentMultiset& c, const PeriodicVec& b, int p) const {
    FiniteFieldRep rep = buildRep(c, p);
    std::int64_t bound = candidateBound(rep, b);
    if (bound > cfg_.budget)
        fail(ErrorKind::ScaleExceeded, "submodule enumeration of " + c.toString() + " at p = " + std::to_string(p) +
                                           " needs up to " + std::to_string(bound) + " candidates");
    const int L = maxSegmentLength(c);
    PathData pd = pathMaps(rep, L + 1);
    const PeriodicVec q = c.dimVector() - b;
    std::map<std::vector<int>, Integer> byRanks;
    forEachStable(rep, b, [&](const std::vector<const Subspace*>& U) {
        std::vector<int> sig;
        sig.reserve(static_cast<size_t>(2 * n_ * (L + 2)));
        for (int i = 1; i <= n_; ++i)
            for (int l = 0; l <= L + 1; ++l) {
                const FpMatrix& P = pd.P[static_cast<size_t>(i - 1)][static_cast<size_t>(l)];
                const Subspace& ui = *U[static_cast<size_t>(i - 1)];
                sig.push_back(rankOf(matTimesRowsT(P, ui, rep.dims(i)), P.rows(), ui.dim, p));
            }
        for (int i = 1; i <= n_; ++i)
            for (int l = 0; l <= L + 1; ++l) {
                const FpMatrix& P = pd.P[static_cast<size_t>(i - 1)][static_cast<size_t>(l)];
                const Subspace& uj = *U[static_cast<size_t>(modn(i + l - 1, n_))];
                const int rows = P.rows(), cols = P.cols() + uj.dim;
                std::vector<int> m(static_cast<size_t>(rows * cols), 0);
                for (int a = 0; a < rows; ++a) {
                    for (int j = 0; j < P.cols(); ++j) m[static_cast<size_t>(a * cols + j)] = P(a, j);
                    for (int k = 0; k < uj.dim; ++k) m[static_cast<size_t>(a * cols + P.cols() + k)] = uj.rows[static_cast<size_t>(k * rows + a)];
                }
                sig.push_back(rankOf(std::move(m), rows, cols, p) - uj.dim);
            }
        ++byRanks[sig];
    });
    std::map<TypePair, Integer> out;
    for (const auto& [sig, cnt] : byRanks) {
        std::vector<std::vector<int>> rs(static_cast<size_t>(n_)), rq(static_cast<size_t>(n_));
        size_t k = 0;
        for (int i = 0; i < n_; ++i)
            for (int l = 0; l <= L + 1; ++l) rs[static_cast<size_t>(i)].push_back(sig[k++]);
        for (int i = 0; i < n_; ++i)
            for (int l = 0; l <= L + 1; ++l) rq[static_cast<size_t>(i)].push_back(sig[k++]);
        SegmentMultiset sub = typeFromRanks(n_, rs), quo = typeFromRanks(n_, rq);
        if (sub.dimVector() != b || quo.dimVector() != q)
            fail(ErrorKind::VerificationFailed, "classification produced wrong dimension vectors");
        out[{quo, sub}] += cnt;
    }
    return out;
}

std::map<TypePair, Integer> QuiverOracle::tallySubmodules(const SegmentMultiset& c, const PeriodicVec& b, int p) {
    return tallyCached(c, b, p);
}

Integer QuiverOracle::countSubmodules(const SegmentMultiset& c, const SegmentMultiset& a, const SegmentMultiset& b, int p) {
    if (a.dimVector() + b.dimVector() != c.dimVector()) return 0;
    const auto& t = tallyCached(c, b.dimVector(), p);
    auto it = t.find({a, b});
    return it == t.end() ? Integer(0) : it->second;
}

Integer QuiverOracle::countAllStableSubspaces(const SegmentMultiset& c, int p) {
    FiniteFieldRep rep = buildRep(c, p);
    Integer total = 0;
    for (const auto& b : subVectors(c.dimVector())) {
        if (candidateBound(rep, b) > cfg_.budget) fail(ErrorKind::ScaleExceeded, "stable subspace count too large");
        std::int64_t cnt = 0;
        forEachStable(rep, b, [&](const std::vector<const Subspace*>&) { ++cnt; });
        total += cnt;
    }
    return total;
}

std::string QuiverOracle::hallKey(const SegmentMultiset& c, const SegmentMultiset& a, const SegmentMultiset& b) const {
    return std::to_string(n_) + "|" + c.toString() + "|" + a.toString() + "|" + b.toString();
}
std::string QuiverOracle::autKey(const SegmentMultiset& a) const { return std::to_string(n_) + "|" + a.toString(); }

void QuiverOracle::computeHallFamily(const SegmentMultiset& c, const PeriodicVec& b) {
    const PeriodicVec q = c.dimVector() - b;
    int bound = 0;
    for (int i = 1; i <= n_; ++i) bound += q(i) * b(i);
    auto subs = enumerateIsoTypes(b);
    auto quos = enumerateIsoTypes(q);
    for (int attempt = 0; attempt < 2; ++attempt) {
        const int D = bound + 2 * attempt;
        const size_t need = static_cast<size_t>(D) + 3;
        if (need > smallPrimes().size()) fail(ErrorKind::ScaleExceeded, "not enough primes for degree bound");
        std::vector<int> primes(smallPrimes().begin(), smallPrimes().begin() + static_cast<long>(need));
        prefetchTallies(c, b, primes);
        std::vector<const std::map<TypePair, Integer>*> tallies;
        for (int p : primes) tallies.push_back(&tallyCached(c, b, p));
        std::map<std::string, HallRecord> fresh;
        try {
            for (const auto& a : quos)
                for (const auto& s : subs) {
                    std::vector<std::pair<Integer, Integer>> samples;
                    for (size_t k = 0; k < primes.size(); ++k) {
                        auto it = tallies[k]->find({a, s});
                        samples.emplace_back(primes[k], it == tallies[k]->end() ? Integer(0) : it->second);
                    }
                    HallRecord rec;
                    rec.poly = interpolateAndVerify(samples, D);
                    rec.degreeBound = D;
                    rec.fitPrimes.assign(primes.begin(), primes.begin() + D + 1);
                    rec.verifyPrimes.assign(primes.begin() + D + 1, primes.end());
                    fresh.emplace(hallKey(c, a, s), std::move(rec));
                }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::VerificationFailed && attempt == 0) continue;
            throw;
        }
        for (auto& [k, r] : fresh) hall_.insert_or_assign(k, std::move(r));
        return;
    }
}

HallRecord QuiverOracle::hallRecord(const SegmentMultiset& c, const SegmentMultiset& a, const SegmentMultiset& b) {
    c.require(MatVariant::Plus, "hallPolynomial");
    a.require(MatVariant::Plus, "hallPolynomial");
    b.require(MatVariant::Plus, "hallPolynomial");
    if (a.dimVector() + b.dimVector() != c.dimVector()) return {};
    std::lock_guard<std::recursive_mutex> lock(mu_);
    const std::string key = hallKey(c, a, b);
    auto it = hall_.find(key);
    if (it != hall_.end()) {
        ++stats_.hits;
        return it->second;
    }
    if (c.dimTotal() > cfg_.maxDim) fail(ErrorKind::ScaleExceeded, "dimTotal(C) exceeds configured bound");
    ++stats_.misses;
    computeHallFamily(c, b.dimVector());
    return hall_.at(key);
}

LaurentPoly QuiverOracle::hallPolynomialV(const SegmentMultiset& c, const SegmentMultiset& a, const SegmentMultiset& b) {
    return qPolyToV(hallRecord(c, a, b).poly);
}

std::int64_t QuiverOracle::extensionCost(const SegmentMultiset& a, const SegmentMultiset& b) const {
    const PeriodicVec da = a.dimVector(), db = b.dimVector();
    int de = 0;
    for (int i = 1; i <= n_; ++i) de += da(i) * db(i + 1);
    const size_t need = static_cast<size_t>(de) + 3;
    if (need > smallPrimes().size()) return INT64_MAX;
    long double cost = 0;
    for (size_t k = 0; k < need; ++k) {
        long double t = 1;
        for (int i = 0; i < de; ++i) t *= smallPrimes()[k];
        cost += t;
    }
    return cost > 9e18L ? INT64_MAX : static_cast<std::int64_t>(cost);
}

std::int64_t QuiverOracle::subspaceCost(const SegmentMultiset& a, const SegmentMultiset& b) const {
    const PeriodicVec da = a.dimVector(), db = b.dimVector();
    int bound = 0;
    for (int i = 1; i <= n_; ++i) bound += da(i) * db(i);
    const size_t need = static_cast<size_t>(bound) + 3;
    if (need > smallPrimes().size()) return INT64_MAX;
    long double cost = 0;
    for (const auto& c : enumerateIsoTypes(da + db))
        for (size_t k = 0; k < need; ++k) cost += static_cast<long double>(candidateBound(buildRep(c, smallPrimes()[k]), db));
    return cost > 9e18L ? INT64_MAX : static_cast<std::int64_t>(cost);
}

std::map<SegmentMultiset, Integer> QuiverOracle::tallyExtensions(const SegmentMultiset& a, const SegmentMultiset& b, int p) const {
    a.require(MatVariant::Plus, "tallyExtensions");
    b.require(MatVariant::Plus, "tallyExtensions");
    const FiniteFieldRep ra = buildRep(a, p), rb = buildRep(b, p);
    FiniteFieldRep e;
    e.p = p;
    e.dims = ra.dims + rb.dims;
    struct Slot {
        int map, row, col;
    };
    std::vector<Slot> slots;
    for (int i = 1; i <= n_; ++i) {
        const int bi = rb.dims(i), bj = rb.dims(i + 1), ai = ra.dims(i), aj = ra.dims(i + 1);
        FpMatrix m(bj + aj, bi + ai, p);
        const FpMatrix& xb = rb.arrow(i);
        const FpMatrix& xa = ra.arrow(i);
        for (int r = 0; r < bj; ++r)
            for (int c = 0; c < bi; ++c) m(r, c) = xb(r, c);
        for (int r = 0; r < aj; ++r)
            for (int c = 0; c < ai; ++c) m(bj + r, bi + c) = xa(r, c);
        for (int r = 0; r < bj; ++r)
            for (int c = 0; c < ai; ++c) slots.push_back({i - 1, r, bi + c});
        e.maps.push_back(std::move(m));
    }
    long double total = 1;
    for (size_t k = 0; k < slots.size(); ++k) total *= p;
    if (total > static_cast<long double>(cfg_.budget))
        fail(ErrorKind::ScaleExceeded, "extension enumeration of " + a.toString() + " by " + b.toString() + " at p = " +
                                           std::to_string(p) + " needs " + std::to_string(static_cast<std::int64_t>(total)) + " candidates");
    std::map<SegmentMultiset, Integer> out;
    std::vector<int> z(slots.size(), 0);
    while (true) {
        for (size_t k = 0; k < slots.size(); ++k) e.maps[static_cast<size_t>(slots[k].map)](slots[k].row, slots[k].col) = z[k];
        out[isoType(e)] += 1;
        size_t k = 0;
        while (k < z.size() && ++z[k] == p) z[k++] = 0;
        if (k == z.size()) break;
    }
    return out;
}

void QuiverOracle::computeProductFamily(const SegmentMultiset& a, const SegmentMultiset& b) {
    const PeriodicVec da = a.dimVector(), db = b.dimVector();
    int de = 0, hom0 = 0;
    for (int i = 1; i <= n_; ++i) {
        de += da(i) * db(i + 1);
        hom0 += da(i) * db(i);
    }
    const size_t need = static_cast<size_t>(de) + 3;
    if (need > smallPrimes().size()) fail(ErrorKind::ScaleExceeded, "not enough primes for extension count");
    std::vector<int> primes(smallPrimes().begin(), smallPrimes().begin() + static_cast<long>(need));
    const auto tallies = parallelMap(primes, [&](int p) { return tallyExtensions(a, b, p); });
    const LaurentPoly denom = [&] {
        LaurentPoly d = LaurentPoly::fromCoeffs(hom0, autPolynomial(a));
        return d * LaurentPoly::fromCoeffs(0, autPolynomial(b));
    }();
    std::map<std::string, HallRecord> fresh;
    for (const auto& c : enumerateIsoTypes(da + db)) {
        std::vector<std::pair<Integer, Integer>> samples;
        for (size_t k = 0; k < primes.size(); ++k) {
            auto it = tallies[k].find(c);
            samples.emplace_back(primes[k], it == tallies[k].end() ? Integer(0) : it->second);
        }
        HallRecord rec;
        rec.method = "extensions";
        rec.degreeBound = de;
        rec.fitPrimes.assign(primes.begin(), primes.begin() + de + 1);
        rec.verifyPrimes.assign(primes.begin() + de + 1, primes.end());
        const QPoly count = interpolateAndVerify(samples, de);
        const LaurentPoly num = LaurentPoly::fromCoeffs(0, count) * LaurentPoly::fromCoeffs(0, autPolynomial(c));
        if (!num.isZero()) {
            LaurentPoly phi;
            try {
                phi = num.exactDiv(denom);
            } catch (const Error&) {
                fail(ErrorKind::VerificationFailed, "extension count for " + c.toString() + " is not divisible by the automorphism factor");
            }
            if (phi.minExp() < 0) fail(ErrorKind::VerificationFailed, "extension count for " + c.toString() + " gives a non-polynomial");
            for (int k = 0; k <= phi.maxExp(); ++k) rec.poly.push_back(phi.coeff(k));
        }
        fresh.emplace(hallKey(c, a, b), std::move(rec));
    }
    for (auto& [k, r] : fresh) hall_.insert_or_assign(k, std::move(r));
}

std::map<SegmentMultiset, LaurentPoly> QuiverOracle::hallProductV(const SegmentMultiset& a, const SegmentMultiset& b) {
    a.require(MatVariant::Plus, "hallProduct");
    b.require(MatVariant::Plus, "hallProduct");
    std::lock_guard<std::recursive_mutex> lock(mu_);
    const auto cs = enumerateIsoTypes(a.dimVector() + b.dimVector());
    bool cached = true;
    for (const auto& c : cs) cached = cached && hall_.count(hallKey(c, a, b));
    if (!cached) {
        const std::int64_t ext = extensionCost(a, b);
        if (ext <= cfg_.budget && ext <= subspaceCost(a, b)) {
            ++stats_.misses;
            computeProductFamily(a, b);
        }
    }
    std::map<SegmentMultiset, LaurentPoly> out;
    for (const auto& c : cs) {
        LaurentPoly f = hallPolynomialV(c, a, b);
        if (!f.isZero()) out.emplace(c, f);
    }
    return out;
}

std::vector<std::pair<TypePair, LaurentPoly>> QuiverOracle::hallDecompositions(const SegmentMultiset& c) {
    std::vector<std::pair<TypePair, LaurentPoly>> out;
    for (const auto& b : subVectors(c.dimVector())) {
        const PeriodicVec q = c.dimVector() - b;
        for (const auto& a : enumerateIsoTypes(q))
            for (const auto& s : enumerateIsoTypes(b)) {
                LaurentPoly f = hallPolynomialV(c, a, s);
                if (!f.isZero()) out.push_back({{a, s}, f});
            }
    }
    return out;
}

namespace {

struct HomSystem {
    std::vector<int> matrix;
    int rows = 0, cols = 0;
    std::vector<int> offset;  // start of f_i block (row-major b_i x a_i)
};

HomSystem homSystem(const FiniteFieldRep& ra, const FiniteFieldRep& rb) {
    const int n = ra.n();
    const int p = ra.p;
    HomSystem h;
    for (int i = 1; i <= n; ++i) {
        h.offset.push_back(h.cols);
        h.cols += rb.dims(i) * ra.dims(i);
    }
    std::vector<std::vector<int>> eqs;
    for (int i = 1; i <= n; ++i) {
        const int ai = ra.dims(i), bi = rb.dims(i), aj = ra.dims(i + 1), bj = rb.dims(i + 1);
        (void)aj;
        const FpMatrix& xa = ra.arrow(i);
        const FpMatrix& xb = rb.arrow(i);
        const int oi = h.offset[static_cast<size_t>(i - 1)], oj = h.offset[static_cast<size_t>(modn(i, n))];
        // (xb f_i - f_{i+1} xa)[r][c] = 0 for r < b_{i+1}, c < a_i
        for (int r = 0; r < bj; ++r)
            for (int c = 0; c < ai; ++c) {
                std::vector<int> row(static_cast<size_t>(h.cols), 0);
                for (int k = 0; k < bi; ++k) {
                    auto& x = row[static_cast<size_t>(oi + k * ai + c)];
                    x = (x + xb(r, k)) % p;
                }
                for (int k = 0; k < ra.dims(i + 1); ++k) {
                    auto& x = row[static_cast<size_t>(oj + r * ra.dims(i + 1) + k)];
                    x = ((x - xa(k, c)) % p + p) % p;
                }
                eqs.push_back(std::move(row));
            }
    }
    h.rows = static_cast<int>(eqs.size());
    for (auto& e : eqs) h.matrix.insert(h.matrix.end(), e.begin(), e.end());
    return h;
}

}  // namespace

int QuiverOracle::homDimAt(const SegmentMultiset& a, const SegmentMultiset& b, int p) const {
    HomSystem h = homSystem(buildRep(a, p), buildRep(b, p));
    return h.cols - rankOf(h.matrix, h.rows, h.cols, p);
}

int QuiverOracle::homDim(const SegmentMultiset& a, const SegmentMultiset& b) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(std::make_pair(a, b), 0);
    auto it = homDims_.find(key);
    if (it != homDims_.end()) return it->second;
    int d2 = homDimAt(a, b, 2), d3 = homDimAt(a, b, 3);
    if (d2 != d3)
        fail(ErrorKind::FieldDependentDimension,
             "Hom(" + a.toString() + ", " + b.toString() + ") has dimension " + std::to_string(d2) + " over F_2 and " +
                 std::to_string(d3) + " over F_3");
    homDims_[key] = d2;
    return d2;
}

int QuiverOracle::endDim(const SegmentMultiset& a) { return homDim(a, a); }

Integer QuiverOracle::autCountBruteForce(const SegmentMultiset& a, int p) {
    FiniteFieldRep ra = buildRep(a, p);
    HomSystem h = homSystem(ra, ra);
    auto basis = nullspace(h.matrix, h.rows, h.cols, p);
    const int e = static_cast<int>(basis.size());
    long double total = 1;
    for (int i = 0; i < e; ++i) total *= p;
    if (total > static_cast<long double>(cfg_.budget))
        fail(ErrorKind::ScaleExceeded, "End(" + a.toString() + ") has p^" + std::to_string(e) + " elements");
    const int n = ra.n();
    const size_t cols = static_cast<size_t>(h.cols);
    std::vector<int> coef(static_cast<size_t>(e), 0);
    std::vector<int> f(cols, 0), scratch;
    // Invertibility of each vertex block, by elimination mod p in place.
    auto invertible = [&]() {
        for (int i = 1; i <= n; ++i) {
            const int d = ra.dims(i);
            if (d == 0) continue;
            const auto* src = f.data() + h.offset[static_cast<size_t>(i - 1)];
            scratch.assign(src, src + d * d);
            for (int c = 0; c < d; ++c) {
                int sel = c;
                while (sel < d && scratch[static_cast<size_t>(sel * d + c)] == 0) ++sel;
                if (sel == d) return false;
                if (sel != c)
                    for (int j = c; j < d; ++j) std::swap(scratch[static_cast<size_t>(sel * d + j)], scratch[static_cast<size_t>(c * d + j)]);
                const int inv = invMod(scratch[static_cast<size_t>(c * d + c)], p);
                for (int r = c + 1; r < d; ++r) {
                    const int t = scratch[static_cast<size_t>(r * d + c)] * inv % p;
                    if (t == 0) continue;
                    for (int j = c; j < d; ++j) {
                        int& x = scratch[static_cast<size_t>(r * d + j)];
                        x = ((x - t * scratch[static_cast<size_t>(c * d + j)]) % p + p) % p;
                    }
                }
            }
        }
        return true;
    };
    std::int64_t count = 0;
    while (true) {
        if (invertible()) ++count;
        // Odometer step; every digit that moves (including a wrap p-1 -> 0) adds its basis vector once.
        size_t k = 0;
        for (; k < coef.size(); ++k) {
            const auto& b = basis[k];
            for (size_t j = 0; j < cols; ++j) f[j] = (f[j] + b[j]) % p;
            if (++coef[k] < p) break;
            coef[k] = 0;
        }
        if (k == coef.size()) break;
    }
    return count;
}

AutRecord QuiverOracle::autRecord(const SegmentMultiset& a) {
    a.require(MatVariant::Plus, "autPolynomial");
    std::lock_guard<std::recursive_mutex> lock(mu_);
    const std::string key = autKey(a);
    auto it = aut_.find(key);
    if (it != aut_.end()) {
        ++stats_.hits;
        return it->second;
    }
    ++stats_.misses;
    const int e = endDim(a);
    // |Aut| = q^{e - sum m^2} prod |GL_m(q)| over segment multiplicities m.
    LaurentPoly structure = LaurentPoly::vpow(0);
    int sq = 0;
    for (const auto& [k, m] : a.entries()) {
        structure *= glOrder(m);
        sq += m * m;
    }
    structure *= LaurentPoly::vpow(2 * (e - sq));
    QPoly fromStructure;
    for (int k = 0; k <= structure.maxExp(); k += 2) fromStructure.push_back(structure.coeff(k));

    AutRecord rec;
    const auto& ps = smallPrimes();
    long double cost = static_cast<size_t>(e) + 3 > ps.size() ? 1e30L : 0;
    for (int k = 0; k < e + 3 && static_cast<size_t>(k) < ps.size(); ++k) {
        long double t = 1;
        for (int i = 0; i < e; ++i) t *= ps[static_cast<size_t>(k)];
        cost += t;
    }
    if (cost <= static_cast<long double>(cfg_.autBudget)) {
        std::vector<std::pair<Integer, Integer>> samples;
        for (int k = 0; k < e + 3; ++k) samples.emplace_back(ps[static_cast<size_t>(k)], autCountBruteForce(a, ps[static_cast<size_t>(k)]));
        rec.poly = interpolateAndVerify(samples, e);
        rec.method = "interpolation";
        for (int k = 0; k < e + 3; ++k) rec.checkedPrimes.push_back(ps[static_cast<size_t>(k)]);
        if (rec.poly != fromStructure)
            fail(ErrorKind::VerificationFailed, "automorphism count of " + a.toString() + " disagrees with the structure formula");
    } else {
        rec.poly = fromStructure;
        rec.method = "structure";
        for (int p : ps) {
            long double t = 1;
            for (int i = 0; i < e; ++i) t *= p;
            if (t > static_cast<long double>(cfg_.autBudget)) break;
            if (autCountBruteForce(a, p) != evalQPoly(fromStructure, p))
                fail(ErrorKind::VerificationFailed, "automorphism count of " + a.toString() + " at p = " + std::to_string(p));
            rec.checkedPrimes.push_back(p);
        }
    }
    aut_.emplace(key, rec);
    return rec;
}

void QuiverOracle::loadCache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(ErrorKind::ParseError, "cache file " + path + ": " + e.what());
    }
    if (j.value("schema", "") != "ahs-cache/1") fail(ErrorKind::ParseError, "cache file " + path + " has unknown schema");
    std::lock_guard<std::recursive_mutex> lock(mu_);
    const std::string prefix = std::to_string(n_) + "|";
    for (auto it = j["hall"].begin(); it != j["hall"].end(); ++it) {
        if (it.key().rfind(prefix, 0) != 0) continue;
        HallRecord r;
        r.poly = qpolyFromJson(it.value()["poly"]);
        r.fitPrimes = it.value()["fit_primes"].get<std::vector<int>>();
        r.verifyPrimes = it.value()["verify_primes"].get<std::vector<int>>();
        r.degreeBound = it.value()["degree_bound"].get<int>();
        r.method = it.value().value("method", "subspaces");
        hall_.insert_or_assign(it.key(), std::move(r));
    }
    for (auto it = j["aut"].begin(); it != j["aut"].end(); ++it) {
        if (it.key().rfind(prefix, 0) != 0) continue;
        AutRecord r;
        r.poly = qpolyFromJson(it.value()["poly"]);
        r.method = it.value()["method"].get<std::string>();
        r.checkedPrimes = it.value()["checked_primes"].get<std::vector<int>>();
        aut_.insert_or_assign(it.key(), std::move(r));
    }
}

void QuiverOracle::saveCache(const std::string& path) const {
    nlohmann::json j;
    {
        std::ifstream in(path);
        if (in) {
            try {
                in >> j;
            } catch (...) {
                j = nlohmann::json();
            }
        }
    }
    if (!j.is_object() || j.value("schema", "") != "ahs-cache/1") j = nlohmann::json::object();
    j["schema"] = "ahs-cache/1";
    if (!j.contains("hall")) j["hall"] = nlohmann::json::object();
    if (!j.contains("aut")) j["aut"] = nlohmann::json::object();
    {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        for (const auto& [k, r] : hall_)
            j["hall"][k] = {{"poly", qpolyJson(r.poly)},
                            {"fit_primes", r.fitPrimes},
                            {"verify_primes", r.verifyPrimes},
                            {"degree_bound", r.degreeBound},
                            {"method", r.method}};
        for (const auto& [k, r] : aut_)
            j["aut"][k] = {{"poly", qpolyJson(r.poly)}, {"method", r.method}, {"checked_primes", r.checkedPrimes}};
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) fail(ErrorKind::InvalidArgument, "cannot write cache file " + tmp);
        out << j.dump(1) << '\n';
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) fail(ErrorKind::InvalidArgument, "cannot publish cache file " + path);
}

void QuiverOracle::clearMemory() {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    hall_.clear();
    aut_.clear();
    homDims_.clear();
    tallies_.clear();
    stats_ = {};
}

CacheStats QuiverOracle::stats() const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return stats_;
}
std::size_t QuiverOracle::cachedHallCount() const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return hall_.size();
}
std::size_t QuiverOracle::cachedAutCount() const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return aut_.size();
}

}  // namespace ahs
