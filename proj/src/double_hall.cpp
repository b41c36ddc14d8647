#include "ahs/double_hall.hpp"

#include <sstream>

namespace ahs {

namespace {

SegmentMultiset zeroMat(int n) { return SegmentMultiset(n); }

// E_{s,t} with E_{s,s} = 0.
SegmentMultiset seg(int n, int s, int t) { return s == t ? zeroMat(n) : PeriodicMat::E(n, s, t); }

RationalFn vp(int e) { return RationalFn::vpow(e); }

PeriodicVec kk(int n, int a, int b) { return PeriodicVec::unit(n, a) - PeriodicVec::unit(n, b); }

}  // namespace

// ---------------------------------------------------------------- PBWElement

PBWElement PBWElement::scalar(int n, const RationalFn& c) {
    PBWElement e(n);
    e.addTerm({zeroMat(n), PeriodicVec(n), zeroMat(n)}, c);
    return e;
}

PBWElement PBWElement::monomial(const SegmentMultiset& a, const PeriodicVec& k, const SegmentMultiset& b,
                                const RationalFn& c) {
    a.require(MatVariant::Plus, "PBW monomial");
    b.require(MatVariant::Plus, "PBW monomial");
    if (a.n() != k.n() || b.n() != k.n()) fail(ErrorKind::InvalidArgument, "PBW monomial: mismatched n");
    PBWElement e(k.n());
    e.addTerm({a, k, b}, c);
    return e;
}

PBWElement PBWElement::plus(const SegmentMultiset& a) { return monomial(a, PeriodicVec(a.n()), zeroMat(a.n())); }
PBWElement PBWElement::minus(const SegmentMultiset& b) { return monomial(zeroMat(b.n()), PeriodicVec(b.n()), b); }
PBWElement PBWElement::cartan(const PeriodicVec& k) { return monomial(zeroMat(k.n()), k, zeroMat(k.n())); }
PBWElement PBWElement::cartanTilde(const PeriodicVec& nu) { return cartan(kTildeToK(nu)); }

void PBWElement::addTerm(const PBWKey& key, const RationalFn& c) {
    if (c.isZero()) return;
    if (n_ == 0) n_ = key.k.n();
    auto [it, fresh] = t_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.isZero()) t_.erase(it);
    }
}

RationalFn PBWElement::coeff(const PBWKey& key) const {
    auto it = t_.find(key);
    return it == t_.end() ? RationalFn() : it->second;
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
    for (const auto& [k, c] : o.t_) addTerm(k, c);
    return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
    for (const auto& [k, c] : o.t_) addTerm(k, -c);
    return *this;
}

PBWElement& PBWElement::operator*=(const RationalFn& c) {
    if (c.isZero()) {
        t_.clear();
        return *this;
    }
    for (auto& [k, x] : t_) x *= c;
    return *this;
}

std::map<PeriodicVec, PBWElement> PBWElement::components() const {
    std::map<PeriodicVec, PBWElement> out;
    for (const auto& [k, c] : t_) {
        auto it = out.try_emplace(k.degree(), PBWElement(n_)).first;
        it->second.addTerm(k, c);
    }
    return out;
}

std::string PBWElement::toString() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.toString() << ")";
        if (!k.plus.isZero()) os << "*u+" << k.plus.toString();
        if (!k.k.isZero()) os << "*K" << k.k.toString();
        if (!k.minus.isZero()) os << "*u-" << k.minus.toString();
    }
    return os.str();
}

PBWElement leftCartan(const PeriodicVec& m, const PBWElement& x) {
    PBWElement out(m.n());
    for (const auto& [k, c] : x.terms())
        out.addTerm({k.plus, k.k + m, k.minus}, c * vp(eulerForm(k.plus.dimVector(), m)));
    return out;
}

// ---------------------------------------------------------------- phi tables

namespace {

using Decomp = std::map<SegmentMultiset, std::vector<std::pair<SegmentMultiset, LaurentPoly>>>;

// Group phi^C_{X,Y} by X (bySub = false) or by Y (bySub = true).
Decomp group(QuiverOracle& o, const SegmentMultiset& c, bool bySub) {
    Decomp out;
    if (c.isZero()) {
        out[c].push_back({c, 1});
        return out;
    }
    for (const auto& [tp, f] : o.hallDecompositions(c)) {
        const auto& [quot, sub] = tp;
        if (bySub)
            out[sub].push_back({quot, f});
        else
            out[quot].push_back({sub, f});
    }
    return out;
}

LaurentPoly autV(QuiverOracle& o, const SegmentMultiset& a) { return a.isZero() ? LaurentPoly(1) : o.autPolynomialV(a); }

PhiTable buildPhi(QuiverOracle& o, const SegmentMultiset& a, const SegmentMultiset& b, bool tilde) {
    // phi: the shared A2 is the submodule of both; tilde: the shared A2 is the quotient of both.
    const Decomp da = group(o, a, !tilde), db = group(o, b, !tilde);
    std::map<std::pair<SegmentMultiset, SegmentMultiset>, LaurentPoly> acc;
    for (const auto& [a2, listA] : da) {
        auto jt = db.find(a2);
        if (jt == db.end()) continue;
        const LaurentPoly w = LaurentPoly::vpow(2 * a2.dimTotal()) * autV(o, a2);
        for (const auto& [a1, f] : listA)
            for (const auto& [b1, g] : jt->second) acc[{a1, b1}] += w * f * g;
    }
    const LaurentPoly den = autV(o, a) * autV(o, b);
    PhiTable out;
    for (const auto& [key, s] : acc) {
        if (s.isZero()) continue;
        out.emplace(key, RationalFn(s * autV(o, key.first) * autV(o, key.second), den));
    }
    return out;
}

}  // namespace

const PhiTable& DoubleHallEngine::phiTable(const SegmentMultiset& a, const SegmentMultiset& b) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = phi_.find({a, b});
    if (it != phi_.end()) return it->second;
    a.require(MatVariant::Plus, "phi");
    b.require(MatVariant::Plus, "phi");
    return phi_.emplace(std::make_pair(a, b), buildPhi(oracle(), a, b, false)).first->second;
}

const PhiTable& DoubleHallEngine::phiTildeTable(const SegmentMultiset& a, const SegmentMultiset& b) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = phiTilde_.find({a, b});
    if (it != phiTilde_.end()) return it->second;
    a.require(MatVariant::Plus, "phi~");
    b.require(MatVariant::Plus, "phi~");
    return phiTilde_.emplace(std::make_pair(a, b), buildPhi(oracle(), a, b, true)).first->second;
}

RationalFn DoubleHallEngine::phiCoefficient(const SegmentMultiset& a, const SegmentMultiset& b,
                                            const SegmentMultiset& a1, const SegmentMultiset& b1) {
    if (!a1.dimVector().leq(a.dimVector()) || a.dimVector() - a1.dimVector() != b.dimVector() - b1.dimVector())
        return {};
    const PhiTable& t = phiTable(a, b);
    auto it = t.find({a1, b1});
    return it == t.end() ? RationalFn() : it->second;
}

RationalFn DoubleHallEngine::phiTildeCoefficient(const SegmentMultiset& a, const SegmentMultiset& b,
                                                 const SegmentMultiset& a1, const SegmentMultiset& b1) {
    if (!a1.dimVector().leq(a.dimVector()) || a.dimVector() - a1.dimVector() != b.dimVector() - b1.dimVector())
        return {};
    const PhiTable& t = phiTildeTable(a, b);
    auto it = t.find({a1, b1});
    return it == t.end() ? RationalFn() : it->second;
}

// ---------------------------------------------------------------- rewriting

const PBWElement& DoubleHallEngine::commuteMinusPlus(const SegmentMultiset& b, const SegmentMultiset& a) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = commute_.find({b, a});
    if (it != commute_.end()) return it->second;
    const int nn = n();
    PBWElement out = PBWElement::monomial(a, PeriodicVec(nn), b);
    if (!a.isZero() && !b.isZero()) {
        if (a.dimTotal() + b.dimTotal() > cfg_.maxDim)
            fail(ErrorKind::ScaleExceeded, "u-u+ rewrite of size " + std::to_string(a.dimTotal() + b.dimTotal()));
        const PeriodicVec da = a.dimVector(), db = b.dimVector();
        const int lead = eulerForm(db, db) + eulerForm(db, da);
        for (const auto& [key, phi] : phiTildeTable(a, b)) {
            const auto& [a1, b1] = key;
            if (a1 == a && b1 == b) continue;
            const PeriodicVec d1 = a1.dimVector(), e1 = b1.dimVector();
            const int e = eulerForm(db, da) + eulerForm(db - e1, d1) + eulerForm(db, e1) - lead;
            const PeriodicVec m = kTildeToK(e1 - db);
            out.addTerm({a1, m, b1}, phi * vp(e + eulerForm(d1, m)));
        }
        for (const auto& [key, phi] : phiTable(a, b)) {
            const auto& [a1, b1] = key;
            if (a1 == a && b1 == b) continue;
            const PeriodicVec e1 = b1.dimVector();
            const int e = eulerForm(db, db) + eulerForm(e1, da + db - e1) - lead;
            const PBWElement inner = leftCartan(kTildeToK(db - e1), commuteMinusPlus(b1, a1));
            out -= (phi * vp(e)) * inner;
        }
    }
    return commute_.emplace(std::make_pair(b, a), std::move(out)).first->second;
}

PBWElement DoubleHallEngine::monomialProduct(const PBWKey& x, const PBWKey& y) {
    const int nn = x.k.n();
    PBWElement out(nn);
    const PBWElement mid = commuteMinusPlus(x.minus, y.plus);
    for (const auto& [t, c] : mid.terms()) {
        const RationalFn c1 = c * vp(eulerForm(t.plus.dimVector(), x.k) + eulerForm(t.minus.dimVector(), y.k));
        const PeriodicVec k = x.k + t.k + y.k;
        const auto& pp = hall_.plusMonomials(x.plus, t.plus);
        const auto& mm = hall_.minusMonomials(t.minus, y.minus);
        for (const auto& [cp, fp] : pp)
            for (const auto& [cm, fm] : mm) out.addTerm({cp, k, cm}, c1 * RationalFn(fp * fm));
    }
    return out;
}

PBWElement DoubleHallEngine::pbwProduct(const PBWElement& x, const PBWElement& y) {
    PBWElement out(x.n() ? x.n() : y.n());
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            PBWElement m = monomialProduct(kx, ky);
            m *= cx * cy;
            out += m;
        }
    return out;
}

PBWElement DoubleHallEngine::power(const PBWElement& x, unsigned k) {
    PBWElement out = PBWElement::scalar(n(), 1);
    for (unsigned i = 0; i < k; ++i) out = pbwProduct(out, x);
    return out;
}

std::size_t DoubleHallEngine::memoSize() const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return commute_.size();
}

// ---------------------------------------------------------------- closed forms

PhiTable indecomposablePhiTable(int n, int i, int j, int k, int l) {
    PhiTable t;
    t.emplace(std::make_pair(seg(n, i, j), seg(n, k, l)), RationalFn(1));
    if (modn(j - l, n) != 0) return t;
    const int h = k - l + j;
    auto a = [&](int s) {
        return mST(i, s, n) + mST(h, s, n) - mST(i, j, n) - mST(k, l, n) + mST(s, j, n) + j - s;
    };
    const RationalFn q1 = RationalFn(LaurentPoly::vpow(2) - LaurentPoly(1));
    for (int s = std::max(i, h) + 1; s < j; ++s)
        t.emplace(std::make_pair(seg(n, i, s), seg(n, k, s - j + l)), q1 * vp(2 * a(s)));
    if (h == i)
        t.emplace(std::make_pair(zeroMat(n), zeroMat(n)), vp(2 * a(i)) / q1);
    else if (h < i)
        t.emplace(std::make_pair(zeroMat(n), seg(n, k, i - j + l)), vp(2 * a(i)));
    else
        t.emplace(std::make_pair(seg(n, i, h), zeroMat(n)), vp(2 * a(h)));
    return t;
}

PhiTable indecomposablePhiTildeTable(int n, int i, int j, int k, int l) {
    PhiTable t;
    t.emplace(std::make_pair(seg(n, i, j), seg(n, k, l)), RationalFn(1));
    if (modn(i - k, n) != 0) return t;
    const int h = l - k + i;
    auto b = [&](int s) {
        return mST(s, j, n) + mST(s + k - i, l, n) - mST(i, j, n) - mST(k, l, n) + mST(i, s, n) + s - i;
    };
    const RationalFn q1 = RationalFn(LaurentPoly::vpow(2) - LaurentPoly(1));
    for (int s = i + 1; s < std::min(j, h); ++s)
        t.emplace(std::make_pair(seg(n, s, j), seg(n, s, h)), q1 * vp(2 * b(s)));
    if (h == j)
        t.emplace(std::make_pair(zeroMat(n), zeroMat(n)), vp(2 * b(j)) / q1);
    else if (h > j)
        t.emplace(std::make_pair(zeroMat(n), seg(n, j, h)), vp(2 * b(j)));
    else
        t.emplace(std::make_pair(seg(n, h, j), zeroMat(n)), vp(2 * b(h)));
    return t;
}

const PBWElement& DoubleHallEngine::closedMinusPlus(int i, int j, int k, int l) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    const int nn = n();
    // canonical representatives keep the memo small
    const int si = floorDiv(i - 1, nn) * nn, sk = floorDiv(k - 1, nn) * nn;
    i -= si, j -= si, k -= sk, l -= sk;
    auto key = std::make_tuple(i, j, k, l);
    auto it = closed_.find(key);
    if (it != closed_.end()) return it->second;
    PBWElement out = PBWElement::monomial(seg(nn, i, j), PeriodicVec(nn), seg(nn, k, l));
    out -= closedFormCommutator(i, j, k, l);
    return closed_.emplace(key, std::move(out)).first->second;
}

PBWElement DoubleHallEngine::closedFormCommutator(int i, int j, int k, int l) {
    if (!(i < j) || !(k < l)) fail(ErrorKind::InvalidArgument, "closedFormCommutator needs i < j and k < l");
    const int nn = n();
    const bool jl = modn(j - l, nn) == 0, ik = modn(i - k, nn) == 0;
    PBWElement out(nn);
    if (!jl && !ik) return out;

    auto dE = [&](int s, int t) { return s == t ? PeriodicVec(nn) : seg(nn, s, t).dimVector(); };
    auto a = [&](int s) {
        return mST(i, s, nn) + mST(k - l + j, s, nn) - mST(i, j, nn) - mST(k, l, nn) + mST(s, j, nn) + j - s;
    };
    auto b = [&](int s) {
        return mST(s, j, nn) + mST(s + k - i, l, nn) - mST(i, j, nn) - mST(k, l, nn) + mST(i, s, nn) + s - i;
    };
    auto f = [&](int s) {
        return 2 * a(s) + eulerForm(dE(k, l), dE(k, l)) + eulerForm(dE(k, s - j + l), dE(i, j) + dE(s, j));
    };
    auto g = [&](int s) {
        return 2 * b(s) + eulerForm(dE(k, l), dE(i, j)) + eulerForm(dE(i, s), dE(s, j)) +
               eulerForm(dE(k, l), dE(s + k - i, l));
    };
    auto ft = [&](int s) { return f(s) - f(j); };
    auto gt = [&](int s) { return g(s) - g(i); };
    const RationalFn q1 = RationalFn(LaurentPoly::vpow(2) - LaurentPoly(1));
    const PeriodicVec zero(nn);

    // c K^m u-_{E_{y1,y2}} u+_{E_{x1,x2}}
    auto kmp = [&](const RationalFn& c, const PeriodicVec& m, int y1, int y2, int x1, int x2) {
        PBWElement t = (x1 == x2 || y1 == y2)
                           ? PBWElement::monomial(seg(nn, x1, x2), zero, seg(nn, y1, y2))
                           : closedMinusPlus(x1, x2, y1, y2);
        out += c * leftCartan(m, t);
    };
    // c K^m u+_{E_{x1,x2}} u-_{E_{y1,y2}}
    auto kpm = [&](const RationalFn& c, const PeriodicVec& m, int x1, int x2, int y1, int y2) {
        out += c * leftCartan(m, PBWElement::monomial(seg(nn, x1, x2), zero, seg(nn, y1, y2)));
    };

    const int h = k - l + j;  // left end of B shifted to end at j
    const int r = l - k + i;  // right end of B shifted to start at i
    const bool caseI = k - l < i - j, caseII = k - l > i - j;
    if (jl && !ik) {
        if (caseI) {
            for (int s = i + 1; s < j; ++s) kmp(q1 * vp(ft(s)), kk(nn, s, j), k, s - j + l, i, s);
            kmp(vp(ft(i)), kk(nn, i, j), k, i - j + l, i, i);
        } else {
            for (int s = h + 1; s < j; ++s) kmp(q1 * vp(ft(s)), kk(nn, s, j), k, s - j + l, i, s);
            kpm(vp(ft(h)), kk(nn, k, j), i, h, k, k);
        }
    } else if (!jl && ik) {
        if (caseI) {
            for (int s = i + 1; s < j; ++s) kpm(-q1 * vp(gt(s)), kk(nn, s, i), s, j, s + k - i, l);
            kpm(-vp(gt(j)), kk(nn, j, i), j, j, j + k - i, l);
        } else {
            for (int s = i + 1; s < r; ++s) kpm(-q1 * vp(gt(s)), kk(nn, s, i), s, j, s + k - i, l);
            kpm(-vp(gt(r)), kk(nn, l, i), r, j, l, l);
        }
    } else if (!caseI && !caseII) {
        for (int s = i + 1; s < j; ++s) {
            kmp(q1 * vp(ft(s)), kk(nn, s, j), i, s, i, s);
            kpm(-q1 * vp(gt(s)), kk(nn, s, i), s, j, s, j);
        }
        const RationalFn c = vp(ft(i)) / q1;
        out += c * PBWElement::cartan(kk(nn, i, j));
        out -= c * PBWElement::cartan(kk(nn, j, i));
    } else if (caseI) {
        for (int s = i + 1; s < j; ++s) {
            kmp(q1 * vp(ft(s)), kk(nn, s, j), k, s - j + l, i, s);
            kpm(-q1 * vp(gt(s)), kk(nn, s, i), s, j, s + k - i, l);
        }
        kmp(vp(ft(i)), kk(nn, i, j), k, i - j + l, i, i);
        kpm(-vp(gt(j)), kk(nn, j, i), j, j, j + k - i, l);
    } else {
        kpm(vp(ft(h)), kk(nn, i, j), i, h, k, k);
        for (int s = h + 1; s < j; ++s) kmp(q1 * vp(ft(s)), kk(nn, s, j), k, s - j + l, i, s);
        kpm(-vp(gt(r)), kk(nn, j, i), r, j, l, l);
        for (int s = i + 1; s < r; ++s) kpm(-q1 * vp(gt(s)), kk(nn, s, i), s, j, s + k - i, l);
    }
    return out;
}

// ---------------------------------------------------------------- semisimple relation

RationalFn semisimplePhi(const PeriodicVec& lambda, const PeriodicVec& mu, const PeriodicVec& alpha,
                         const PeriodicVec& beta) {
    const int nn = lambda.n();
    if (lambda - alpha != mu - beta || !(lambda - alpha).nonneg() || !alpha.nonneg() || !beta.nonneg()) return {};
    int e = 0;
    RationalFn prod = 1;
    for (int i = 1; i <= nn; ++i) {
        const int g = lambda(i) - alpha(i);
        e += g * (1 - alpha(i) - beta(i));
        for (int s = 0; s < g; ++s) prod /= RationalFn(LaurentPoly::vpow(2 * g) - LaurentPoly::vpow(2 * s));
    }
    return vp(2 * e) * prod;
}

std::pair<PBWElement, PBWElement> DoubleHallEngine::semisimpleCommutatorSides(const PeriodicVec& lambda,
                                                                              const PeriodicVec& mu) {
    if (!lambda.nonneg() || !mu.nonneg()) fail(ErrorKind::InvalidArgument, "semisimple relation needs lambda, mu >= 0");
    const int nn = n();
    PBWElement lhs(nn), rhs(nn);
    PeriodicVec lo(nn);
    for (int i = 1; i <= nn; ++i) lo.at(i) = std::min(lambda(i), mu(i));
    // gamma = lambda - alpha = mu - beta ranges over 0 <= gamma <= min(lambda, mu)
    std::vector<PeriodicVec> gammas{PeriodicVec(nn)};
    for (int i = 1; i <= nn; ++i) {
        std::vector<PeriodicVec> next;
        for (const auto& g : gammas)
            for (int x = 0; x <= lo(i); ++x) {
                PeriodicVec h = g;
                h.at(i) = x;
                next.push_back(h);
            }
        gammas = std::move(next);
    }
    for (const auto& g : gammas) {
        const PeriodicVec alpha = lambda - g, beta = mu - g;
        const RationalFn phi = semisimplePhi(lambda, mu, alpha, beta);
        const SegmentMultiset aa = PeriodicMat::semisimple(alpha), ab = PeriodicMat::semisimple(beta);
        const int el = eulerForm(mu, mu) + eulerForm(beta, lambda + mu - beta);
        lhs += (phi * vp(el)) * leftCartan(kTildeToK(mu - beta), commuteMinusPlus(ab, aa));
        const int er = eulerForm(mu, lambda) + eulerForm(mu - beta, alpha) + eulerForm(mu, beta);
        rhs += (phi * vp(er)) * leftCartan(kTildeToK(beta - mu), PBWElement::monomial(aa, PeriodicVec(nn), ab));
    }
    return {lhs, rhs};
}

bool DoubleHallEngine::semisimpleCommutatorCheck(const PeriodicVec& lambda, const PeriodicVec& mu) {
    auto [l, r] = semisimpleCommutatorSides(lambda, mu);
    return l == r;
}

}  // namespace ahs
