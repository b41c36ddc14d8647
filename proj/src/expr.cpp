#include "ahs/expr.hpp"

#include <cctype>
#include <sstream>

namespace ahs {

const char* algebraName(AlgebraKind a) {
    switch (a) {
        case AlgebraKind::HallPlus: return "hall+";
        case AlgebraKind::HallMinus: return "hall-";
        case AlgebraKind::Double: return "double";
        case AlgebraKind::Modified: return "modified";
        case AlgebraKind::Schur: return "schur";
        case AlgebraKind::Classical: return "classical";
    }
    return "?";
}

AlgebraKind parseAlgebraName(const std::string& s) {
    for (auto a : {AlgebraKind::HallPlus, AlgebraKind::HallMinus, AlgebraKind::Double, AlgebraKind::Modified,
                   AlgebraKind::Schur, AlgebraKind::Classical})
        if (s == algebraName(a)) return a;
    fail(ErrorKind::InvalidArgument, "unknown algebra '" + s + "'");
}

namespace {

bool allowed(AtomKind k, AlgebraKind a) {
    switch (a) {
        case AlgebraKind::HallPlus: return k == AtomKind::UPlus || k == AtomKind::UTildePlus;
        case AlgebraKind::HallMinus: return k == AtomKind::UMinus || k == AtomKind::UTildeMinus;
        case AlgebraKind::Double:
        case AlgebraKind::Modified:
            if (k == AtomKind::Idempotent) return a == AlgebraKind::Modified;
            return k == AtomKind::UPlus || k == AtomKind::UMinus || k == AtomKind::UTildePlus ||
                   k == AtomKind::UTildeMinus || k == AtomKind::K || k == AtomKind::KTilde;
        case AlgebraKind::Schur: return k == AtomKind::SchurBasis;
        case AlgebraKind::Classical:
            return k == AtomKind::LoopGen || k == AtomKind::Binom || k == AtomKind::WPlus || k == AtomKind::WMinus;
    }
    return false;
}

class Parser {
public:
    Parser(const std::string& s, AlgebraKind a, int n) : s_(s), alg_(a), n_(n) {}

    Expr parse() {
        Expr e = expr();
        skip();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at(const char* lit) {
        skip();
        return s_.compare(pos_, std::char_traits<char>::length(lit), lit) == 0;
    }
    bool eat(const char* lit) {
        if (!at(lit)) return false;
        pos_ += std::char_traits<char>::length(lit);
        return true;
    }
    void expect(const char* lit) {
        if (!eat(lit)) error(std::string("expected '") + lit + "'");
    }

    Expr expr() {
        Expr e = term();
        while (true) {
            Expr::Op op;
            if (eat("+")) op = Expr::Op::Add;
            else if (eat("-")) op = Expr::Op::Sub;
            else return e;
            Expr r = term();
            e = Expr{op, 0, {}, 0, {std::move(e), std::move(r)}};
        }
    }

    bool startsPrimary() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
               c == '~' || c == '[';
    }

    Expr term() {
        Expr e = factor();
        while (true) {
            Expr::Op op;
            if (eat("*")) op = Expr::Op::Mul;
            else if (eat("/")) op = Expr::Op::Div;
            else if (startsPrimary()) op = Expr::Op::Mul;
            else return e;
            Expr r = factor();
            e = Expr{op, 0, {}, 0, {std::move(e), std::move(r)}};
        }
    }

    Expr factor() {
        if (eat("-")) return Expr{Expr::Op::Neg, 0, {}, 0, {factor()}};
        Expr b = primary();
        if (eat("^")) {
            int k = 0;
            if (eat("(")) {
                const bool neg = eat("-");
                k = integer();
                if (neg) k = -k;
                expect(")");
            } else {
                k = integer();
            }
            return Expr{Expr::Op::Pow, 0, {}, k, {std::move(b)}};
        }
        return b;
    }

    int integer() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) error("expected an integer");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    // Text up to the bracket closing the one just consumed.
    std::string bracketed(char close) {
        int depth = 0;
        const size_t start = pos_;
        for (; pos_ < s_.size(); ++pos_) {
            const char c = s_[pos_];
            if (c == '[' || c == '(' || c == '{') ++depth;
            else if (c == ']' || c == ')' || c == '}') {
                if (depth == 0) {
                    if (c != close) error(std::string("expected '") + close + "'");
                    return s_.substr(start, pos_++ - start);
                }
                --depth;
            }
        }
        error(std::string("missing '") + close + "'");
    }

    PeriodicMat matrixArg(const std::string& text, size_t at) {
        int i, j;
        char tail;
        if (std::sscanf(text.c_str(), " %d , %d %c", &i, &j, &tail) == 2) {
            if (i >= j) {
                pos_ = at;
                error("segment [" + text + "] needs i < j");
            }
            return PeriodicMat::E(n_, i, j);
        }
        try {
            return parseMatrix(text, n_);
        } catch (const Error& e) {
            pos_ = at;
            error(std::string("bad matrix: ") + e.what());
        }
    }

    PeriodicVec vectorArg(const std::string& text, size_t at) {
        int i;
        char tail;
        if (std::sscanf(text.c_str(), " %d %c", &i, &tail) == 1) return PeriodicVec::unit(n_, i);
        try {
            return parseVector(text, n_);
        } catch (const Error& e) {
            pos_ = at;
            error(std::string("bad vector: ") + e.what());
        }
    }

    Expr atomExpr(Atom a, size_t at) {
        if (!allowed(a.kind, alg_))
            fail(ErrorKind::UnknownAtomForAlgebra, "'" + printAtom(a) + "' is not an atom of " + algebraName(alg_) +
                                                       " (position " + std::to_string(at) + ")");
        Expr e;
        e.op = Expr::Op::Atom;
        e.atom = std::move(a);
        return e;
    }

    Expr primary() {
        skip();
        const size_t at = pos_;
        if (pos_ >= s_.size()) error("unexpected end of input");
        Atom a;
        auto withMatrix = [&](AtomKind k) {
            a.kind = k;
            const size_t inner = pos_;
            a.mat = matrixArg(bracketed(']'), inner);
            a.mat.require(MatVariant::Plus, "atom");
            return atomExpr(a, at);
        };
        if (eat("(")) {
            Expr e = expr();
            expect(")");
            return e;
        }
        if (eat("1_{")) {
            a.kind = AtomKind::Idempotent;
            const size_t inner = pos_;
            a.vec = vectorArg(bracketed('}'), inner);
            return atomExpr(a, at);
        }
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            const size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Expr e;
            e.num = Integer(s_.substr(start, pos_ - start));
            return e;
        }
        if (eat("~u+[")) return withMatrix(AtomKind::UTildePlus);
        if (eat("~u-[")) return withMatrix(AtomKind::UTildeMinus);
        if (eat("u+[")) return withMatrix(AtomKind::UPlus);
        if (eat("u-[")) return withMatrix(AtomKind::UMinus);
        if (eat("w+[")) return withMatrix(AtomKind::WPlus);
        if (eat("w-[")) return withMatrix(AtomKind::WMinus);
        if (eat("K~[") || eat("K[")) {
            a.kind = s_[at + 1] == '~' ? AtomKind::KTilde : AtomKind::K;
            const size_t inner = pos_;
            a.vec = vectorArg(bracketed(']'), inner);
            return atomExpr(a, at);
        }
        if (eat("[")) {
            a.kind = AtomKind::SchurBasis;
            const size_t inner = pos_;
            const std::string text = bracketed(']');
            try {
                a.mat = parseMatrix(text, n_);
            } catch (const Error& e) {
                pos_ = inner;
                error(std::string("bad matrix: ") + e.what());
            }
            a.mat.require(MatVariant::Nonneg, "Schur basis element");
            return atomExpr(a, at);
        }
        if (eat("E[")) {
            a.kind = AtomKind::LoopGen;
            a.i = integer();
            expect(",");
            a.j = integer();
            expect("]");
            return atomExpr(a, at);
        }
        if (eat("binom(")) {
            a.kind = AtomKind::Binom;
            expect("E[");
            a.i = integer();
            expect(",");
            const int i2 = integer();
            if (i2 != a.i) error("binom needs a diagonal E[i,i]");
            expect("]");
            expect(",");
            a.k = integer();
            expect(")");
            return atomExpr(a, at);
        }
        if (s_[pos_] == 'v' && (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
            ++pos_;
            if (alg_ == AlgebraKind::Classical)
                fail(ErrorKind::UnknownAtomForAlgebra, "'v' is not a scalar of classical (position " + std::to_string(at) + ")");
            Expr e;
            e.op = Expr::Op::Var;
            return e;
        }
        error("unknown token");
    }

    const std::string& s_;
    size_t pos_ = 0;
    AlgebraKind alg_;
    int n_;
};

std::string segmentOrMatrix(const PeriodicMat& m) {
    if (m.entries().size() == 1 && m.entries().begin()->second == 1) {
        const auto [i, j] = m.entries().begin()->first;
        return std::to_string(i) + "," + std::to_string(j);
    }
    return m.toString();
}

int precedence(const Expr& e) {
    switch (e.op) {
        case Expr::Op::Add:
        case Expr::Op::Sub: return 1;
        case Expr::Op::Mul:
        case Expr::Op::Div: return 2;
        case Expr::Op::Neg: return 3;
        case Expr::Op::Pow: return 4;
        default: return 5;
    }
}

std::string wrapIf(const Expr& e, bool cond) { return cond ? "(" + printExpr(e) + ")" : printExpr(e); }

}  // namespace

Expr parseExpr(const std::string& text, AlgebraKind alg, int n) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "n must be positive");
    return Parser(text, alg, n).parse();
}

std::string printAtom(const Atom& a) {
    switch (a.kind) {
        case AtomKind::UPlus: return "u+[" + segmentOrMatrix(a.mat) + "]";
        case AtomKind::UMinus: return "u-[" + segmentOrMatrix(a.mat) + "]";
        case AtomKind::UTildePlus: return "~u+[" + segmentOrMatrix(a.mat) + "]";
        case AtomKind::UTildeMinus: return "~u-[" + segmentOrMatrix(a.mat) + "]";
        case AtomKind::WPlus: return "w+[" + segmentOrMatrix(a.mat) + "]";
        case AtomKind::WMinus: return "w-[" + segmentOrMatrix(a.mat) + "]";
        case AtomKind::K: return "K[" + a.vec.toString() + "]";
        case AtomKind::KTilde: return "K~[" + a.vec.toString() + "]";
        case AtomKind::Idempotent: return "1_{" + a.vec.toString() + "}";
        case AtomKind::SchurBasis: return "[" + a.mat.toString() + "]";
        case AtomKind::LoopGen: return "E[" + std::to_string(a.i) + "," + std::to_string(a.j) + "]";
        case AtomKind::Binom:
            return "binom(E[" + std::to_string(a.i) + "," + std::to_string(a.i) + "]," + std::to_string(a.k) + ")";
    }
    return "?";
}

std::string printExpr(const Expr& e) {
    switch (e.op) {
        case Expr::Op::Num: return e.num.get_str();
        case Expr::Op::Var: return "v";
        case Expr::Op::Atom: return printAtom(e.atom);
        case Expr::Op::Neg: return "-" + wrapIf(e.kids[0], precedence(e.kids[0]) < 4);
        case Expr::Op::Add:
        case Expr::Op::Sub:
            return printExpr(e.kids[0]) + (e.op == Expr::Op::Add ? " + " : " - ") +
                   wrapIf(e.kids[1], precedence(e.kids[1]) <= 1);
        case Expr::Op::Mul:
        case Expr::Op::Div:
            return wrapIf(e.kids[0], precedence(e.kids[0]) <= 1) + (e.op == Expr::Op::Mul ? "*" : "/") +
                   wrapIf(e.kids[1], precedence(e.kids[1]) <= 2);
        case Expr::Op::Pow: {
            std::string k = e.power < 0 ? "(" + std::to_string(e.power) + ")" : std::to_string(e.power);
            return wrapIf(e.kids[0], precedence(e.kids[0]) < 5) + "^" + k;
        }
    }
    return "?";
}

// ---------------------------------------------------------------- evaluation

namespace {

Rational toRational(const RationalFn& c) {
    if (c.isZero()) return 0;
    const auto& nu = c.num();
    const auto& de = c.den();
    if (nu.minExp() != 0 || nu.maxExp() != 0 || de.minExp() != 0 || de.maxExp() != 0)
        fail(ErrorKind::InvalidArgument, "classical coefficients must be rational numbers, got " + c.toString());
    Rational q(nu.coeff(0), de.coeff(0));
    q.canonicalize();
    return q;
}

bool isScalar(const Value& v) { return std::holds_alternative<RationalFn>(v); }

class Evaluator {
public:
    explicit Evaluator(EvalContext& c) : ctx_(c) {
        if (ctx_.alg == AlgebraKind::Schur ? ctx_.schur == nullptr : ctx_.modified == nullptr)
            fail(ErrorKind::InvalidArgument, std::string("no algebra bound for ") + algebraName(ctx_.alg));
    }

    Value eval(const Expr& e) {
        switch (e.op) {
            case Expr::Op::Num: return RationalFn(e.num);
            case Expr::Op::Var: return RationalFn::vpow(1);
            case Expr::Op::Atom: return atom(e.atom);
            case Expr::Op::Neg: return scale(eval(e.kids[0]), RationalFn(-1));
            case Expr::Op::Add: return add(eval(e.kids[0]), eval(e.kids[1]));
            case Expr::Op::Sub: return add(eval(e.kids[0]), scale(eval(e.kids[1]), RationalFn(-1)));
            case Expr::Op::Mul: return mul(eval(e.kids[0]), eval(e.kids[1]));
            case Expr::Op::Div: {
                Value d = eval(e.kids[1]);
                if (!isScalar(d)) fail(ErrorKind::InvalidArgument, "division by a non-scalar");
                const RationalFn& s = std::get<RationalFn>(d);
                if (s.isZero()) fail(ErrorKind::DenominatorVanishes, "division by zero");
                return scale(eval(e.kids[0]), RationalFn(1) / s);
            }
            case Expr::Op::Pow: {
                Value b = eval(e.kids[0]);
                if (isScalar(b)) {
                    const RationalFn& s = std::get<RationalFn>(b);
                    if (e.power < 0 && s.isZero()) fail(ErrorKind::DenominatorVanishes, "zero to a negative power");
                    RationalFn base = e.power < 0 ? RationalFn(1) / s : s, r(1);
                    for (int i = 0; i < std::abs(e.power); ++i) r *= base;
                    return r;
                }
                if (e.power < 0) fail(ErrorKind::InvalidArgument, "negative power of an algebra element");
                Value r = RationalFn(1);
                for (int i = 0; i < e.power; ++i) r = mul(r, b);
                return r;
            }
        }
        fail(ErrorKind::InvalidArgument, "bad expression");
    }

private:
    DoubleHallEngine& engine() { return ctx_.modified->engine(); }

    Value atom(const Atom& a) {
        switch (a.kind) {
            case AtomKind::UPlus:
            case AtomKind::UTildePlus:
            case AtomKind::UMinus:
            case AtomKind::UTildeMinus: {
                const bool plus = a.kind == AtomKind::UPlus || a.kind == AtomKind::UTildePlus;
                const bool tilde = a.kind == AtomKind::UTildePlus || a.kind == AtomKind::UTildeMinus;
                const RationalFn c = tilde && !a.mat.isZero() ? RationalFn(engine().hall().tildeFactor(a.mat)) : RationalFn(1);
                if (ctx_.alg == AlgebraKind::HallPlus || ctx_.alg == AlgebraKind::HallMinus)
                    return HallElement::monomial(plus ? HallSign::Plus : HallSign::Minus, a.mat, c);
                return c * (plus ? PBWElement::plus(a.mat) : PBWElement::minus(a.mat));
            }
            case AtomKind::K: return PBWElement::cartan(a.vec);
            case AtomKind::KTilde: return PBWElement::cartanTilde(a.vec);
            case AtomKind::Idempotent: return BlockElement::idempotent(a.vec);
            case AtomKind::SchurBasis: {
                if (a.mat.sigma() != ctx_.schur->r())
                    fail(ErrorKind::InvalidArgument, "[" + a.mat.toString() + "] has sigma " + std::to_string(a.mat.sigma()) +
                                                         ", not r = " + std::to_string(ctx_.schur->r()));
                return ctx_.schur->basis(a.mat);
            }
            case AtomKind::LoopGen: return ClassicalElement::loopGenerator(ctx_.modified->n(), a.i, a.j);
            case AtomKind::Binom: {
                PeriodicVec l(ctx_.modified->n());
                l.at(a.i) = a.k;
                return ClassicalElement::binom(l);
            }
            case AtomKind::WPlus: return ClassicalElement::wPlus(a.mat);
            case AtomKind::WMinus: return ClassicalElement::wMinus(a.mat);
        }
        fail(ErrorKind::InvalidArgument, "bad atom");
    }

    Value identity() {
        const int n = ctx_.alg == AlgebraKind::Schur ? ctx_.schur->n() : ctx_.modified->n();
        switch (ctx_.alg) {
            case AlgebraKind::HallPlus: return HallElement::monomial(HallSign::Plus, PeriodicMat(n));
            case AlgebraKind::HallMinus: return HallElement::monomial(HallSign::Minus, PeriodicMat(n));
            case AlgebraKind::Double:
            case AlgebraKind::Modified: return PBWElement::scalar(n, 1);
            case AlgebraKind::Schur: return ctx_.schur->identity();
            case AlgebraKind::Classical: return ClassicalElement::scalar(n, 1);
        }
        fail(ErrorKind::InvalidArgument, "bad algebra");
    }

    Value scale(Value x, const RationalFn& c) {
        return std::visit(
            [&](auto&& e) -> Value {
                using T = std::decay_t<decltype(e)>;
                if constexpr (std::is_same_v<T, RationalFn>) return e * c;
                else if constexpr (std::is_same_v<T, ClassicalElement>) return toRational(c) * e;
                else if constexpr (std::is_same_v<T, HallElement>) {
                    T r = e;
                    r *= c;
                    return r;
                } else return c * e;
            },
            x);
    }

    Value promote(const Value& x) { return isScalar(x) ? scale(identity(), std::get<RationalFn>(x)) : x; }

    Value add(Value x, Value y) {
        if (isScalar(x) && isScalar(y)) return std::get<RationalFn>(x) + std::get<RationalFn>(y);
        x = promote(x);
        y = promote(y);
        if (x.index() != y.index())
            fail(ErrorKind::InvalidArgument, "cannot add a block element to an element without an idempotent");
        return std::visit(
            [&](auto&& a) -> Value {
                using T = std::decay_t<decltype(a)>;
                T r = a;
                r += std::get<T>(y);
                return r;
            },
            x);
    }

    BlockElement leftAct(const PBWElement& u, const BlockElement& x) {
        BlockElement out(x.n());
        for (const auto& [k, c] : x.terms()) {
            BlockElement t(x.n());
            t.addTerm(k, c);
            out += ctx_.modified->blockProduct(ctx_.modified->embedAt(u, k.leftBlock()), t);
        }
        return out;
    }

    BlockElement rightAct(const BlockElement& x, const PBWElement& u) {
        BlockElement out(x.n());
        for (const auto& [k, c] : x.terms()) {
            BlockElement t(x.n());
            t.addTerm(k, c);
            for (const auto& [deg, comp] : u.components())
                out += ctx_.modified->blockProduct(t, ctx_.modified->embedAt(comp, k.rightBlock() - deg));
        }
        return out;
    }

    Value mul(const Value& x, const Value& y) {
        if (isScalar(x)) return scale(y, std::get<RationalFn>(x));
        if (isScalar(y)) return scale(x, std::get<RationalFn>(y));
        if (auto* a = std::get_if<HallElement>(&x)) {
            const auto& b = std::get<HallElement>(y);
            return a->sign == HallSign::Plus ? engine().hall().plusProduct(*a, b) : engine().hall().minusProduct(*a, b);
        }
        if (auto* a = std::get_if<SchurElement>(&x)) return ctx_.schur->multiply(*a, std::get<SchurElement>(y));
        if (auto* a = std::get_if<ClassicalElement>(&x))
            return classicalProduct(*ctx_.modified, *a, std::get<ClassicalElement>(y));
        auto* pa = std::get_if<PBWElement>(&x);
        auto* pb = std::get_if<PBWElement>(&y);
        auto* ba = std::get_if<BlockElement>(&x);
        auto* bb = std::get_if<BlockElement>(&y);
        if (pa && pb) return engine().pbwProduct(*pa, *pb);
        if (pa && bb) return leftAct(*pa, *bb);
        if (ba && pb) return rightAct(*ba, *pb);
        if (ba && bb) return ctx_.modified->blockProduct(*ba, *bb);
        fail(ErrorKind::InvalidArgument, "incompatible operands");
    }

    EvalContext& ctx_;
};

}  // namespace

Value evaluate(const Expr& e, EvalContext& ctx) {
    Value v = Evaluator(ctx).eval(e);
    if (ctx.alg == AlgebraKind::Modified && std::holds_alternative<PBWElement>(v))
        fail(ErrorKind::InvalidArgument, "a modified expression needs an idempotent 1_{(...)}");
    return v;
}

Value evaluate(const std::string& text, EvalContext& ctx) {
    const int n = ctx.alg == AlgebraKind::Schur ? ctx.schur->n() : ctx.modified->n();
    return evaluate(parseExpr(text, ctx.alg, n), ctx);
}

Value evaluateProduct(const std::vector<std::string>& factors, EvalContext& ctx) {
    if (factors.empty()) fail(ErrorKind::InvalidArgument, "no factors");
    const int n = ctx.alg == AlgebraKind::Schur ? ctx.schur->n() : ctx.modified->n();
    Expr e = parseExpr(factors[0], ctx.alg, n);
    for (size_t k = 1; k < factors.size(); ++k) {
        try {
            e = Expr{Expr::Op::Mul, 0, {}, 0, {std::move(e), parseExpr(factors[k], ctx.alg, n)}};
        } catch (const Error& err) {
            fail(err.kind(), "factor " + std::to_string(k + 1) + ": " + std::string(err.what()).substr(std::string(errorKindName(err.kind())).size() + 2));
        }
    }
    return evaluate(e, ctx);
}

// ---------------------------------------------------------------- printing

std::string formatCoeff(const RationalFn& c) {
    if (c.isLaurent()) return c.num().toString();
    std::string num = c.num().toString(), den = c.den().toString();
    if (num.find(' ') != std::string::npos) num = "(" + num + ")";
    if (den.find_first_of(" *") != std::string::npos || den[0] == '-') den = "(" + den + ")";
    return num + "/" + den;
}

namespace {

std::string joinTerms(const std::vector<std::pair<std::string, std::string>>& terms) {
    // (coefficient text, monomial text); monomial may be empty for scalars
    if (terms.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < terms.size(); ++k) {
        const auto& [c, m] = terms[k];
        std::string piece;
        const bool wrap = c.find_first_of(" /") != std::string::npos;
        if (m.empty()) piece = c;
        else if (c == "1") piece = m;
        else if (c == "-1") piece = "-" + m;
        else piece = wrap ? "(" + c + ")*" + m : c + "*" + m;
        out += k == 0 ? piece : " + " + piece;
    }
    return out;
}

std::string word(std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        out += out.empty() ? p : " " + p;
    }
    return out;
}

std::string mat(const char* head, const PeriodicMat& m) {
    if (m.isZero()) return "";
    return std::string(head) + "[" + segmentOrMatrix(m) + "]";
}

}  // namespace

std::string formatHall(const HallElement& x) {
    std::vector<std::pair<std::string, std::string>> t;
    const char* head = x.sign == HallSign::Plus ? "u+" : "u-";
    for (const auto& [a, c] : x.terms) t.emplace_back(formatCoeff(c), a.isZero() ? "" : mat(head, a));
    return joinTerms(t);
}

std::string formatPBW(const PBWElement& x) {
    std::vector<std::pair<std::string, std::string>> t;
    for (const auto& [k, c] : x.terms())
        t.emplace_back(formatCoeff(c),
                       word({mat("u+", k.plus), k.k.isZero() ? "" : "K[" + k.k.toString() + "]", mat("u-", k.minus)}));
    return joinTerms(t);
}

std::string formatBlock(const BlockElement& x) {
    std::vector<std::pair<std::string, std::string>> t;
    for (const auto& [k, c] : x.terms())
        t.emplace_back(formatCoeff(c), word({mat("~u+", k.plus), "1_{" + k.lambda.toString() + "}", mat("~u-", k.minus)}));
    return joinTerms(t);
}

std::string formatSchur(const SchurElement& x) {
    std::vector<std::pair<std::string, std::string>> t;
    for (const auto& [a, c] : x.terms) t.emplace_back(formatCoeff(c), "[" + a.toString() + "]");
    return joinTerms(t);
}

std::string formatClassical(const ClassicalElement& x) {
    std::vector<std::pair<std::string, std::string>> t;
    for (const auto& [k, c] : x.terms()) {
        std::string binoms;
        for (int i = 1; i <= k.lambda.n(); ++i)
            if (k.lambda(i) != 0)
                binoms = word({binoms, "binom(E[" + std::to_string(i) + "," + std::to_string(i) + "]," +
                                           std::to_string(k.lambda(i)) + ")"});
        std::ostringstream cs;
        cs << c;
        t.emplace_back(cs.str(), word({mat("w+", k.plus), binoms, mat("w-", k.minus)}));
    }
    return joinTerms(t);
}

std::string formatValue(const Value& v) {
    return std::visit(
        [](auto&& e) -> std::string {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, RationalFn>) return formatCoeff(e);
            else if constexpr (std::is_same_v<T, HallElement>) return formatHall(e);
            else if constexpr (std::is_same_v<T, PBWElement>) return formatPBW(e);
            else if constexpr (std::is_same_v<T, BlockElement>) return formatBlock(e);
            else if constexpr (std::is_same_v<T, SchurElement>) return formatSchur(e);
            else return formatClassical(e);
        },
        v);
}

}  // namespace ahs
