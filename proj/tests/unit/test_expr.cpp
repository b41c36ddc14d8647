#include <doctest.h>

#include <optional>

#include "ahs/serialize.hpp"
#include "ahs/suites.hpp"

using namespace ahs;

namespace {

Context& ctx2() {
    static Workspace ws;
    return ws.at(2);
}

Value eval(AlgebraKind alg, const std::string& text, SchurAlgebra* s = nullptr) {
    EvalContext c{alg, &ctx2().modified, s};
    return evaluate(text, c);
}

std::optional<ErrorKind> kindOf(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("parse/print round trip") {
    const std::vector<std::pair<AlgebraKind, std::string>> cases = {
        {AlgebraKind::Double, "u+[1,3]"},
        {AlgebraKind::Double, "u+[{(1,2):2,(2,4):1}] K[(1,-1)] u-[1,2]"},
        {AlgebraKind::Double, "(v^2 + 1)*u+[1,2] - v^(-1)*K[1]^(-2)"},
        {AlgebraKind::Double, "(K[(1,1)] - K[1])/(v - 1)"},
        {AlgebraKind::Modified, "~u+[1,2] 1_{(1,0)} ~u-[2,3]"},
        {AlgebraKind::Classical, "E[1,2]*E[2,3] - binom(E[1,1],2)"},
        {AlgebraKind::Classical, "w+[1,3] w-[1,2]"},
        {AlgebraKind::HallPlus, "u+[1,2]^3"},
    };
    for (const auto& [alg, text] : cases) {
        CAPTURE(text);
        const Expr e = parseExpr(text, alg, 2);
        const std::string p = printExpr(e);
        CHECK(parseExpr(p, alg, 2) == e);
        CHECK(printExpr(parseExpr(p, alg, 2)) == p);
    }
}

TEST_CASE("evaluating the formatted value gives the value back") {
    const std::vector<std::pair<AlgebraKind, std::string>> cases = {
        {AlgebraKind::Double, "u-[1,2] u+[1,2]"},
        {AlgebraKind::Double, "u-[1,3] u+[2,3]"},
        {AlgebraKind::Double, "(K[(1,1)] - K[1])/(v - 1) + v^(-3)*u+[1,2]/(v + 1)"},
        {AlgebraKind::Modified, "u+[1,2] 1_{(0,0)} u-[1,2]"},
        {AlgebraKind::Modified, "u-[1,2] u+[2,3] 1_{(1,-1)}"},
        {AlgebraKind::HallPlus, "u+[1,2] u+[2,3]"},
        {AlgebraKind::HallMinus, "u-[1,2] u-[1,2]"},
        {AlgebraKind::Classical, "E[1,2]*E[2,3] - 1/2*binom(E[1,1],2)"},
    };
    for (const auto& [alg, text] : cases) {
        CAPTURE(text);
        const Value x = eval(alg, text);
        const std::string f = formatValue(x);
        CAPTURE(f);
        CHECK(eval(alg, f) == x);
    }
    SchurAlgebra s(2, 2);
    const Value y = eval(AlgebraKind::Schur, "[{(1,1):1,(2,2):1}] ([{(1,1):1,(1,2):1}] + v*[{(1,2):1,(2,2):1}])", &s);
    CHECK(formatValue(y) != "0");
    CHECK(eval(AlgebraKind::Schur, formatValue(y), &s) == y);
}

TEST_CASE("atoms and algebras") {
    CHECK(std::holds_alternative<PBWElement>(eval(AlgebraKind::Double, "u+[1,3]")));
    CHECK(std::holds_alternative<BlockElement>(eval(AlgebraKind::Modified, "1_{(1,0)}")));
    CHECK(kindOf([] { parseExpr("u+[1,3]", AlgebraKind::Classical, 2); }) == ErrorKind::UnknownAtomForAlgebra);
    CHECK(kindOf([] { parseExpr("v*E[1,2]", AlgebraKind::Classical, 2); }) == ErrorKind::UnknownAtomForAlgebra);
    CHECK(kindOf([] { parseExpr("1_{(1,0)}", AlgebraKind::Double, 2); }) == ErrorKind::UnknownAtomForAlgebra);
    CHECK(kindOf([] { parseExpr("u+[1,3", AlgebraKind::Double, 2); }) == ErrorKind::ParseError);
    CHECK(kindOf([] { eval(AlgebraKind::Modified, "u+[1,2]"); }).has_value());
}

TEST_CASE("parse errors carry a position") {
    try {
        parseExpr("u+[1,2] + * K[1]", AlgebraKind::Double, 2);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(std::string(e.what()).find("position 10") != std::string::npos);
    }
}

TEST_CASE("factors are parsed separately") {
    EvalContext c{AlgebraKind::Double, &ctx2().modified, nullptr};
    CHECK(evaluateProduct({"u-[1,2]", "u+[1,2]"}, c) == eval(AlgebraKind::Double, "u-[1,2] u+[1,2]"));
    try {
        evaluateProduct({"u+[1,2]", "K[1"}, c);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("factor 2") != std::string::npos);
    }
}

TEST_CASE("json documents") {
    const Value x = eval(AlgebraKind::Double, "v*u+[1,2] K[(1,0)] u-[2,3]");
    const auto d = valueDocument(x, AlgebraKind::Double);
    CHECK(d["schema"] == kSchema);
    CHECK(d["algebra"] == "double");
    REQUIRE(d["terms"].size() == 1);
    CHECK(d["terms"][0]["j"] == nlohmann::json::array({1, 0}));
    CHECK(d["terms"][0]["coeff"]["num"]["coeffs"]["1"] == "1");
    CHECK(eval(AlgebraKind::Double, d["text"].get<std::string>()) == x);
    CHECK(laurentJson(LaurentPoly::monomial(3, 2) + LaurentPoly(1), "q")["coeffs"]["1"] == "3");
    CHECK(kindOf([] { formatInQ(LaurentPoly::vpow(1)); }) == ErrorKind::InvalidArgument);
    CHECK(formatInQ(LaurentPoly::vpow(2) + LaurentPoly(1)) == "q + 1");
}

TEST_CASE("reports") {
    Workspace ws, ws2;
    SuiteParams p;
    p.nList = {2};
    p.maxDim = 2;
    const Report a = runSuite("uniserial", p, ws), b = runSuite("uniserial", p, ws2);
    CHECK(a.pass());
    CHECK(reportJson(a).dump() == reportJson(b).dump());
    CHECK_FALSE(reportJson(a).contains("seconds"));
    CHECK(reportJson(a)["schema"] == kSchema);

    Report empty;
    empty.suite = "none";
    CHECK(reportJson(empty)["checks"].is_array());
    CHECK(reportText(empty).size() > 0);

    Report bad;
    bad.suite = "x";
    CheckResult c;
    c.name = "forced";
    c.expect(true, nullptr);
    c.expect(false, {{"A", "{(1,2):1}"}});
    bad.checks.push_back(c);
    CHECK_FALSE(bad.pass());
    const auto j = reportJson(bad);
    CHECK(j["checks"][0]["verdict"] == "FAIL");
    CHECK(j["checks"][0]["counterexamples"][0]["A"] == "{(1,2):1}");
    CHECK(kindOf([&] { runSuite("nope", p, ws); }) == ErrorKind::InvalidArgument);
}
