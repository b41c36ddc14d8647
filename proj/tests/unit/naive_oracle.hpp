#pragma once

// Independent brute-force model of segment modules over F_p: subspaces are explicit
// sets of vectors and module types are read off kernel sizes. Only for tiny cases.

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace naive {

struct Segment {
    int top;  // in [1, n]
    int len;
    bool operator<(const Segment& o) const { return std::tie(top, len) < std::tie(o.top, o.len); }
    bool operator==(const Segment& o) const { return top == o.top && len == o.len; }
};
using Type = std::map<Segment, int>;

struct Rep {
    int n = 0, p = 2;
    std::vector<int> dims;                         // dims[i], i = 0..n-1
    std::vector<std::vector<std::vector<int>>> x;  // x[i][row][col] : V_i -> V_{i+1}
};

inline int md(int a, int n) { return ((a % n) + n) % n; }

inline Rep segmentRep(int n, const Type& t, int p) {
    Rep r;
    r.n = n;
    r.p = p;
    r.dims.assign(n, 0);
    std::vector<std::vector<std::pair<int, int>>> chains;
    for (auto [seg, m] : t)
        for (int c = 0; c < m; ++c) {
            std::vector<std::pair<int, int>> ch;
            for (int k = 0; k < seg.len; ++k) {
                int v = md(seg.top - 1 + k, n);
                ch.push_back({v, r.dims[v]++});
            }
            chains.push_back(ch);
        }
    r.x.resize(n);
    for (int i = 0; i < n; ++i) r.x[i].assign(r.dims[md(i + 1, n)], std::vector<int>(r.dims[i], 0));
    for (auto& ch : chains)
        for (size_t k = 0; k + 1 < ch.size(); ++k) r.x[ch[k].first][ch[k + 1].second][ch[k].second] = 1;
    return r;
}

inline std::vector<int> decode(int code, int d, int p) {
    std::vector<int> v(d);
    for (int k = 0; k < d; ++k) {
        v[k] = code % p;
        code /= p;
    }
    return v;
}
inline int encode(const std::vector<int>& v, int p) {
    int c = 0;
    for (int k = static_cast<int>(v.size()) - 1; k >= 0; --k) c = c * p + v[k];
    return c;
}
inline int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Every subspace of F_p^d as a sorted set of codes.
inline std::vector<std::vector<int>> subspaces(int d, int p) {
    const int N = ipow(p, d);
    auto closure = [&](std::vector<int> gens) {
        std::set<int> s{0};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> cur(s.begin(), s.end());
            for (int a : cur)
                for (int g : gens)
                    for (int c = 1; c < p; ++c) {
                        auto va = decode(a, d, p), vg = decode(g, d, p);
                        for (int k = 0; k < d; ++k) va[k] = (va[k] + c * vg[k]) % p;
                        if (s.insert(encode(va, p)).second) grew = true;
                    }
        }
        return std::vector<int>(s.begin(), s.end());
    };
    std::set<std::vector<int>> all;
    std::vector<std::vector<int>> frontier{{0}};
    all.insert({0});
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (auto& u : frontier)
            for (int v = 1; v < N; ++v) {
                if (std::binary_search(u.begin(), u.end(), v)) continue;
                std::vector<int> gens = u;
                gens.push_back(v);
                auto w = closure(gens);
                if (all.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    return {all.begin(), all.end()};
}

inline std::vector<int> apply(const Rep& r, int i, const std::vector<int>& v) {
    int j = md(i + 1, r.n);
    std::vector<int> out(r.dims[j], 0);
    for (int a = 0; a < r.dims[j]; ++a) {
        int s = 0;
        for (int b = 0; b < r.dims[i]; ++b) s += r.x[i][a][b] * v[b];
        out[a] = s % r.p;
    }
    return out;
}

inline int logp(int x, int p) {
    int e = 0;
    while (x > 1) {
        x /= p;
        ++e;
    }
    return e;
}

// Type from kernel data: K(i,k) = dim of vectors at vertex i whose k-step image lies in
// W_{i+k}, minus dim W_i (W = 0 for the submodule itself, W = U for the quotient).
inline Type typeFromKernels(int n, int maxLen, const std::vector<std::vector<int>>& K) {
    auto h = [&](int i, int k) {
        if (k <= 0) return 0;
        return K[md(i, n)][k] - K[md(i, n)][k - 1];
    };
    Type t;
    for (int e = 0; e < n; ++e)
        for (int L = 1; L <= maxLen; ++L) {
            int m = h(e - L + 1, L) - h(e - L, L + 1);
            if (m > 0) t[{md(e - L + 1, n) + 1, L}] = m;
        }
    return t;
}

// (quotient type, sub type) -> count
inline std::map<std::pair<Type, Type>, long> tally(const Rep& r) {
    const int n = r.n, p = r.p;
    int total = 0;
    for (int d : r.dims) total += d;
    std::vector<std::vector<std::vector<int>>> subs(n);
    for (int i = 0; i < n; ++i) subs[i] = subspaces(r.dims[i], p);
    std::map<std::pair<Type, Type>, long> out;
    std::vector<const std::vector<int>*> U(n);
    auto inU = [&](int i, const std::vector<int>& v) {
        return std::binary_search(U[i]->begin(), U[i]->end(), encode(v, p));
    };
    std::vector<int> idx(n, 0);
    while (true) {
        for (int i = 0; i < n; ++i) U[i] = &subs[i][idx[i]];
        bool stable = true;
        for (int i = 0; i < n && stable; ++i)
            for (int c : *U[i])
                if (!inU(md(i + 1, n), apply(r, i, decode(c, r.dims[i], p)))) {
                    stable = false;
                    break;
                }
        if (stable) {
            std::vector<std::vector<int>> Ks(n, std::vector<int>(total + 2, 0)), Kq = Ks;
            for (int i = 0; i < n; ++i) {
                int dimU = logp(static_cast<int>(U[i]->size()), p);
                for (int k = 0; k <= total + 1; ++k) {
                    int cntS = 0, cntQ = 0;
                    for (int c = 0; c < ipow(p, r.dims[i]); ++c) {
                        auto v = decode(c, r.dims[i], p);
                        bool inside = std::binary_search(U[i]->begin(), U[i]->end(), c);
                        int j = i;
                        for (int s = 0; s < k; ++s) {
                            v = apply(r, j, v);
                            j = md(j + 1, n);
                        }
                        bool zero = std::all_of(v.begin(), v.end(), [](int a) { return a == 0; });
                        if (inside && zero) ++cntS;
                        if (std::binary_search(U[j]->begin(), U[j]->end(), encode(v, p))) ++cntQ;
                    }
                    Ks[i][k] = logp(cntS, p);
                    Kq[i][k] = logp(cntQ, p) - dimU;
                }
            }
            ++out[{typeFromKernels(n, total, Kq), typeFromKernels(n, total, Ks)}];
        }
        int k = 0;
        while (k < n && ++idx[k] == static_cast<int>(subs[k].size())) idx[k++] = 0;
        if (k == n) break;
    }
    return out;
}

}  // namespace naive
