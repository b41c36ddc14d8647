#include "ahs/periodic.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace ahs {

PeriodicVec PeriodicVec::unit(int n, int i) {
    PeriodicVec v(n);
    v.at(i) = 1;
    return v;
}

bool PeriodicVec::isZero() const {
    return std::all_of(w_.begin(), w_.end(), [](int x) { return x == 0; });
}
bool PeriodicVec::nonneg() const {
    return std::all_of(w_.begin(), w_.end(), [](int x) { return x >= 0; });
}
int PeriodicVec::sum() const {
    int s = 0;
    for (int x : w_) s += x;
    return s;
}

PeriodicVec PeriodicVec::operator-() const {
    PeriodicVec r = *this;
    for (auto& x : r.w_) x = -x;
    return r;
}
PeriodicVec& PeriodicVec::operator+=(const PeriodicVec& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] += o.w_[k];
    return *this;
}
PeriodicVec& PeriodicVec::operator-=(const PeriodicVec& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] -= o.w_[k];
    return *this;
}
PeriodicVec operator*(int k, PeriodicVec a) {
    for (auto& x : a.w_) x *= k;
    return a;
}
bool PeriodicVec::leq(const PeriodicVec& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
        if (w_[k] > o.w_[k]) return false;
    return true;
}

std::string PeriodicVec::toString() const {
    std::ostringstream os;
    os << '(';
    for (size_t k = 0; k < w_.size(); ++k) os << (k ? "," : "") << w_[k];
    os << ')';
    return os.str();
}

int eulerForm(const PeriodicVec& a, const PeriodicVec& b) {
    int s = 0;
    for (int i = 1; i <= a.n(); ++i) s += a(i) * b(i) - a(i) * b(i + 1);
    return s;
}

int dot(const PeriodicVec& a, const PeriodicVec& b) {
    int s = 0;
    for (int i = 1; i <= a.n(); ++i) s += a(i) * b(i);
    return s;
}

PeriodicVec kTildeReduce(const PeriodicVec& nu) {
    int last = nu(nu.n());
    PeriodicVec r = nu;
    for (int i = 1; i <= r.n(); ++i) r.at(i) -= last;
    return r;
}

PeriodicVec kTildeToK(const PeriodicVec& nu) {
    PeriodicVec m(nu.n());
    for (int i = 1; i <= nu.n(); ++i) m.at(i) = nu(i) - nu(i - 1);
    return m;
}

PeriodicVec kToKTilde(const PeriodicVec& m) {
    if (m.sum() != 0) fail(ErrorKind::InvalidArgument, "K-exponent " + m.toString() + " is not a K~ monomial");
    PeriodicVec nu(m.n());
    int acc = 0;
    for (int i = 1; i <= m.n(); ++i) {
        acc += m(i);
        nu.at(i) = acc;
    }
    return nu;
}

namespace {
void compositionsRec(int n, int i, int left, std::vector<int>& cur, std::vector<PeriodicVec>& out) {
    if (i == n - 1) {
        cur[static_cast<size_t>(i)] = left;
        out.emplace_back(cur);
        return;
    }
    for (int x = left; x >= 0; --x) {
        cur[static_cast<size_t>(i)] = x;
        compositionsRec(n, i + 1, left - x, cur, out);
    }
}
}  // namespace

std::vector<PeriodicVec> compositions(int n, int r) {
    std::vector<PeriodicVec> out;
    if (r < 0) return out;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    compositionsRec(n, 0, r, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------- PeriodicMat

PeriodicMat PeriodicMat::E(int n, int i, int j, int a) {
    PeriodicMat m(n);
    m.add(i, j, a);
    return m;
}

PeriodicMat PeriodicMat::diag(const PeriodicVec& lambda) {
    PeriodicMat m(lambda.n());
    for (int i = 1; i <= lambda.n(); ++i) m.add(i, i, lambda(i));
    return m;
}

PeriodicMat PeriodicMat::semisimple(const PeriodicVec& lambda) {
    PeriodicMat m(lambda.n());
    for (int i = 1; i <= lambda.n(); ++i) m.add(i, i + 1, lambda(i));
    return m;
}

int PeriodicMat::operator()(int i, int j) const {
    int i0 = wrap1(i, n_);
    auto it = e_.find({i0, j + (i0 - i)});
    return it == e_.end() ? 0 : it->second;
}

void PeriodicMat::add(int i, int j, int a) {
    if (a == 0) return;
    int i0 = wrap1(i, n_);
    Key k{i0, j + (i0 - i)};
    int& v = e_[k];
    v += a;
    if (v == 0) e_.erase(k);
}

bool PeriodicMat::satisfies(MatVariant var) const {
    for (const auto& [k, a] : e_) {
        switch (var) {
            case MatVariant::General: break;
            case MatVariant::Nonneg:
                if (a < 0) return false;
                break;
            case MatVariant::Plus:
                if (a < 0 || k.second <= k.first) return false;
                break;
            case MatVariant::Minus:
                if (a < 0 || k.second >= k.first) return false;
                break;
            case MatVariant::Offdiag:
                if (a < 0 || k.second == k.first) return false;
                break;
        }
    }
    return true;
}

void PeriodicMat::require(MatVariant v, const char* what) const {
    if (!satisfies(v)) fail(ErrorKind::InvalidArgument, std::string(what) + ": unexpected matrix " + toString());
}

PeriodicMat& PeriodicMat::operator+=(const PeriodicMat& o) {
    if (n_ == 0) n_ = o.n_;
    for (const auto& [k, a] : o.e_) add(k.first, k.second, a);
    return *this;
}
PeriodicMat& PeriodicMat::operator-=(const PeriodicMat& o) {
    if (n_ == 0) n_ = o.n_;
    for (const auto& [k, a] : o.e_) add(k.first, k.second, -a);
    return *this;
}
PeriodicMat operator*(int k, const PeriodicMat& a) {
    PeriodicMat r(a.n_);
    if (k == 0) return r;
    for (const auto& [key, x] : a.e_) r.e_[key] = k * x;
    return r;
}

PeriodicVec PeriodicMat::dimVector() const {
    PeriodicVec d(n_);
    for (const auto& [k, a] : e_)
        for (int t = k.first; t < k.second; ++t) d.at(t) += a;
    return d;
}

int PeriodicMat::dimTotal() const {
    int s = 0;
    for (const auto& [k, a] : e_) s += a * (k.second - k.first);
    return s;
}

PeriodicVec PeriodicMat::ro() const {
    PeriodicVec v(n_);
    for (const auto& [k, a] : e_) v.at(k.first) += a;
    return v;
}

PeriodicVec PeriodicMat::co() const {
    PeriodicVec v(n_);
    for (const auto& [k, a] : e_) v.at(k.second) += a;
    return v;
}

int PeriodicMat::sigma() const {
    int s = 0;
    for (const auto& [k, a] : e_) s += a;
    return s;
}

int PeriodicMat::spread() const {
    int s = 0;
    for (const auto& [k, a] : e_) s = std::max(s, std::abs(k.second - k.first));
    return s;
}

namespace {
int ceilDiv(int a, int b) { return -floorDiv(-a, b); }
}  // namespace

int PeriodicMat::sigmaHook(int i, int j) const {
    if (i == j) fail(ErrorKind::InvalidArgument, "sigmaHook needs i != j");
    int s = 0;
    for (const auto& [k, a] : e_) {
        int lo, hi;
        if (i < j) {
            hi = floorDiv(i - k.first, n_);
            lo = ceilDiv(j - k.second, n_);
        } else {
            lo = ceilDiv(i - k.first, n_);
            hi = floorDiv(j - k.second, n_);
        }
        if (hi >= lo) s += a * (hi - lo + 1);
    }
    return s;
}

int PeriodicMat::sigmaI(int i) const {
    int s = 0;
    for (const auto& [k, a] : e_) {
        // a_{i,j}, j < i: the copy of (k.first, k.second) whose row is i
        if (modn(k.first - i, n_) == 0) {
            int shift = i - k.first;
            if (k.second + shift < i) s += a;
        }
        // a_{j,i}, j < i
        if (modn(k.second - i, n_) == 0) {
            int shift = i - k.second;
            if (k.first + shift < i) s += a;
        }
    }
    return s;
}

PeriodicMat PeriodicMat::transpose() const {
    PeriodicMat t(n_);
    for (const auto& [k, a] : e_) t.add(k.second, k.first, a);
    return t;
}

PeriodicMat PeriodicMat::plusPart() const {
    PeriodicMat r(n_);
    for (const auto& [k, a] : e_)
        if (k.second > k.first) r.e_[k] = a;
    return r;
}
PeriodicMat PeriodicMat::minusPart() const {
    PeriodicMat r(n_);
    for (const auto& [k, a] : e_)
        if (k.second < k.first) r.e_[k] = a;
    return r;
}
PeriodicMat PeriodicMat::offdiagPart() const {
    PeriodicMat r(n_);
    for (const auto& [k, a] : e_)
        if (k.second != k.first) r.e_[k] = a;
    return r;
}
PeriodicVec PeriodicMat::diagonal() const {
    PeriodicVec d(n_);
    for (const auto& [k, a] : e_)
        if (k.second == k.first) d.at(k.first) = a;
    return d;
}

std::string PeriodicMat::toString() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [k, a] : e_) {
        os << (first ? "" : ",") << '(' << k.first << ',' << k.second << "):" << a;
        first = false;
    }
    os << '}';
    return os.str();
}

std::pair<PeriodicMat, PeriodicMat> splitOffdiag(const PeriodicMat& a) {
    a.require(MatVariant::Offdiag, "splitOffdiag");
    return {a.plusPart(), a.minusPart()};
}

int mST(int s, int t, int n) {
    if (t < s) fail(ErrorKind::InvalidArgument, "mST needs s <= t");
    if (s == t) return 0;
    return floorDiv(t - s - 1, n);
}

Order orderCompare(const PeriodicMat& a, const PeriodicMat& b) {
    const int n = a.n();
    const int S = std::max(a.spread(), b.spread());
    bool le = true, ge = true;
    for (int i = 1; i <= n; ++i)
        for (int j = 1 - S; j <= n + S; ++j) {
            if (i == j) continue;
            int x = a.sigmaHook(i, j), y = b.sigmaHook(i, j);
            if (x > y) le = false;
            if (x < y) ge = false;
        }
    if (le && ge) return Order::Equal;
    if (le) return Order::Less;
    if (ge) return Order::Greater;
    return Order::Incomparable;
}

const char* orderName(Order o) {
    switch (o) {
        case Order::Less: return "less";
        case Order::Equal: return "equal";
        case Order::Greater: return "greater";
        case Order::Incomparable: return "incomparable";
    }
    return "";
}

// ---------------- literals

namespace {

struct Cursor {
    const std::string& s;
    size_t p = 0;
    void ws() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool eat(char c) {
        ws();
        if (p < s.size() && s[p] == c) {
            ++p;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(ErrorKind::ParseError, std::string("expected '") + c + "' at position " + std::to_string(p) + " in \"" + s + "\"");
    }
    bool peekDigit() {
        ws();
        return p < s.size() && (std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == '-');
    }
    int integer() {
        ws();
        size_t start = p;
        if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (start == p || (p == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail(ErrorKind::ParseError, "expected integer at position " + std::to_string(start) + " in \"" + s + "\"");
        return std::stoi(s.substr(start, p - start));
    }
    bool done() {
        ws();
        return p >= s.size();
    }
};

}  // namespace

PeriodicMat parseMatrix(const std::string& text, int n) {
    Cursor c{text};
    PeriodicMat m(n);
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        if (!first) {
            if (c.eat('+'))
                sign = 1;
            else if (c.eat('-'))
                sign = -1;
            else
                fail(ErrorKind::ParseError, "expected '+' at position " + std::to_string(c.p) + " in \"" + text + "\"");
        }
        first = false;
        int mult = 1;
        c.ws();
        if (c.p < text.size() && std::isdigit(static_cast<unsigned char>(text[c.p]))) {
            mult = c.integer();
            c.eat('*');
        }
        c.ws();
        if (c.p < text.size() && (text[c.p] == 'E' || text[c.p] == '[')) {
            if (text[c.p] == 'E') ++c.p;
            c.expect('[');
            int i = c.integer();
            c.expect(',');
            int j = c.integer();
            c.expect(']');
            m.add(i, j, sign * mult);
        } else if (c.eat('{')) {
            if (!c.eat('}')) {
                do {
                    c.expect('(');
                    int i = c.integer();
                    c.expect(',');
                    int j = c.integer();
                    c.expect(')');
                    c.expect(':');
                    int a = c.integer();
                    if (i < 1 || i > n) fail(ErrorKind::ParseError, "row index must lie in [1,n]: \"" + text + "\"");
                    m.add(i, j, sign * mult * a);
                } while (c.eat(','));
                c.expect('}');
            }
        } else if (mult == 0 || (c.p < text.size() && text[c.p] == '0')) {
            if (c.p < text.size() && text[c.p] == '0') ++c.p;
        } else {
            fail(ErrorKind::ParseError, "bad matrix literal at position " + std::to_string(c.p) + " in \"" + text + "\"");
        }
    }
    return m;
}

PeriodicVec parseVector(const std::string& text, int n) {
    Cursor c{text};
    c.expect('(');
    std::vector<int> w;
    if (!c.eat(')')) {
        do {
            w.push_back(c.integer());
        } while (c.eat(','));
        c.expect(')');
    }
    if (!c.done()) fail(ErrorKind::ParseError, "trailing input in vector \"" + text + "\"");
    if (static_cast<int>(w.size()) != n)
        fail(ErrorKind::ParseError, "vector \"" + text + "\" must have " + std::to_string(n) + " entries");
    return PeriodicVec(std::move(w));
}

}  // namespace ahs
