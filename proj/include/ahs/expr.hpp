#pragma once

// Expressions over the atoms of each algebra, and their evaluation.

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ahs/classical.hpp"
#include "ahs/modified.hpp"
#include "ahs/schur.hpp"

namespace ahs {

enum class AlgebraKind { HallPlus, HallMinus, Double, Modified, Schur, Classical };

const char* algebraName(AlgebraKind a);
AlgebraKind parseAlgebraName(const std::string& s);

enum class AtomKind {
    UPlus,        // u+[..]
    UMinus,       // u-[..]
    UTildePlus,   // ~u+[..]
    UTildeMinus,  // ~u-[..]
    K,            // K[i] or K[(vec)]
    KTilde,       // K~[i] or K~[(vec)]
    Idempotent,   // 1_{(vec)}
    SchurBasis,   // [matrix]
    LoopGen,      // E[i,j]
    Binom,        // binom(E[i,i],k)
    WPlus,        // w+[..]
    WMinus,       // w-[..]
};

struct Atom {
    AtomKind kind = AtomKind::UPlus;
    PeriodicMat mat;
    PeriodicVec vec;
    int i = 0, j = 0, k = 0;
    friend bool operator==(const Atom& a, const Atom& b) {
        return a.kind == b.kind && a.mat == b.mat && a.vec == b.vec && a.i == b.i && a.j == b.j && a.k == b.k;
    }
};

struct Expr {
    enum class Op { Num, Var, Atom, Neg, Add, Sub, Mul, Div, Pow };
    Op op = Op::Num;
    Integer num;
    Atom atom;
    int power = 0;
    std::vector<Expr> kids;
    friend bool operator==(const Expr& a, const Expr& b) {
        return a.op == b.op && a.num == b.num && a.atom == b.atom && a.power == b.power && a.kids == b.kids;
    }
};

// Throws ParseError (with position) or UnknownAtomForAlgebra.
Expr parseExpr(const std::string& text, AlgebraKind alg, int n);
std::string printExpr(const Expr& e);
std::string printAtom(const Atom& a);

using Value = std::variant<RationalFn, HallElement, PBWElement, BlockElement, SchurElement, ClassicalElement>;

struct EvalContext {
    AlgebraKind alg;
    ModifiedAlgebra* modified = nullptr;  // every algebra except schur and classical goes through its engine
    SchurAlgebra* schur = nullptr;
};

Value evaluate(const Expr& e, EvalContext& ctx);
Value evaluate(const std::string& text, EvalContext& ctx);
// Product of separately parsed factors.
Value evaluateProduct(const std::vector<std::string>& factors, EvalContext& ctx);

// Canonical text in the parseable grammar.
std::string formatCoeff(const RationalFn& c);
std::string formatValue(const Value& v);
std::string formatHall(const HallElement& x);
std::string formatPBW(const PBWElement& x);
std::string formatBlock(const BlockElement& x);
std::string formatSchur(const SchurElement& x);
std::string formatClassical(const ClassicalElement& x);

}  // namespace ahs
