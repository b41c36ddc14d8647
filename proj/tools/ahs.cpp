#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ahs/serialize.hpp"
#include "ahs/suites.hpp"

using namespace ahs;
using nlohmann::json;

namespace {

int exitCodeFor(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError:
        case ErrorKind::UnknownAtomForAlgebra:
        case ErrorKind::InvalidArgument:
        case ErrorKind::ScaleExceeded: return 2;
        default: return 1;
    }
}

struct Common {
    int n = 2;
    std::string format = "text";
    std::string var = "v";
};

void addCommon(CLI::App* c, Common& o) {
    c->add_option("-n", o.n, "Number of vertices of the cyclic quiver")->check(CLI::PositiveNumber);
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

std::string cachePath() {
    const char* p = std::getenv("AHS_CACHE");
    return p ? p : "";
}

void printPoly(const LaurentPoly& f, const Common& o, const std::string& what) {
    if (o.format == "json")
        std::cout << json{{"schema", kSchema}, {"kind", what}, {"value", laurentJson(f, o.var)}}.dump(2) << "\n";
    else
        std::cout << (o.var == "q" ? formatInQ(f) : f.toString()) << "\n";
}

void printValue(const Value& v, AlgebraKind alg, const Common& o) {
    if (o.format == "json")
        std::cout << valueDocument(v, alg).dump(2) << "\n";
    else
        std::cout << formatValue(v) << "\n";
}

PBWElement asPBW(const Value& v, int n) {
    if (auto* s = std::get_if<RationalFn>(&v)) return PBWElement::scalar(n, *s);
    return std::get<PBWElement>(v);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Affine Hall algebras, integral forms and affine Schur algebras"};
    app.require_subcommand(1);
    Common o;
    std::string cm, am, bm;

    auto* hallpoly = app.add_subcommand("hallpoly", "Hall polynomial phi^C_{A,B}");
    addCommon(hallpoly, o);
    hallpoly->add_option("-C", cm, "Extension type")->required();
    hallpoly->add_option("-A", am, "Quotient type")->required();
    hallpoly->add_option("-B", bm, "Submodule type")->required();
    hallpoly->add_option("--var", o.var, "Print in v or q = v^2")->check(CLI::IsMember({"v", "q"}));

    auto* aut = app.add_subcommand("aut", "Automorphism polynomial a_A");
    addCommon(aut, o);
    aut->add_option("-A", am, "Module type")->required();
    aut->add_option("--var", o.var, "Print in v or q = v^2")->check(CLI::IsMember({"v", "q"}));

    std::string check;
    std::vector<int> rList{1, 2};
    auto* commute = app.add_subcommand("commute", "Normal form of u-_B u+_A");
    addCommon(commute, o);
    commute->add_option("--minus", bm, "B")->required();
    commute->add_option("--plus", am, "A")->required();
    commute->add_option("--check", check, "Cross-check")->check(CLI::IsMember({"closed-form", "both-paths"}));
    commute->add_option("-r", rList, "Schur degrees for both-paths")->delimiter(',');

    std::string algebra = "double";
    std::vector<std::string> exprs;
    std::string window;
    int r = 1;
    auto* product = app.add_subcommand("product", "Evaluate and multiply expressions");
    addCommon(product, o);
    product->add_option("--algebra", algebra, "Algebra")
        ->check(CLI::IsMember({"hall+", "hall-", "double", "modified", "schur", "classical"}));
    product->add_option("-r", r, "Degree for the schur algebra");
    product->add_option("--window", window, "lo:hi; embed a double expression into the completion on [lo,hi]^n");
    product->allow_extras()->footer("Positional arguments: EXPR... (multiplied left to right)");

    auto* zeta = app.add_subcommand("zeta", "zeta_r of a double (or zeta-dot of a modified) expression");
    addCommon(zeta, o);
    zeta->add_option("-r", r, "Degree")->required();
    zeta->add_option("--algebra", algebra, "double or modified")->check(CLI::IsMember({"double", "modified"}));
    zeta->allow_extras()->footer("Positional argument: EXPR");

    auto* schurProduct = app.add_subcommand("schur-product", "Product in the affine q-Schur algebra");
    addCommon(schurProduct, o);
    schurProduct->add_option("-r", r, "Degree")->required();
    schurProduct->allow_extras()->footer("Positional arguments: EXPR... (multiplied left to right)");

    auto* eta = app.add_subcommand("eta", "eta_r of a classical expression");
    addCommon(eta, o);
    eta->add_option("-r", r, "Degree")->required();
    eta->allow_extras()->footer("Positional argument: EXPR");

    SuiteParams sp;
    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "Suite name or all");
    verify->add_option("-n", sp.nList, "n values")->delimiter(',');
    verify->add_option("-r", sp.rList, "r values")->delimiter(',');
    verify->add_option("--max-dim", sp.maxDim, "Size bound (suite default if 0)");
    verify->add_option("--seed", sp.seed, "Seed for randomized checks");
    verify->add_flag("--timing", sp.timing, "Include timings");
    verify->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* cache = app.add_subcommand("cache", "Inspect or clear the AHS_CACHE file");
    cache->require_subcommand(1);
    auto* inspect = cache->add_subcommand("inspect", "Summarize the cache");
    auto* clear = cache->add_subcommand("clear", "Delete the cache file");
    inspect->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*cache) {
            const std::string path = cachePath();
            if (path.empty()) {
                std::cerr << "AHS_CACHE is not set\n";
                return 2;
            }
            if (*clear) {
                std::filesystem::remove(path);
                std::cout << "removed " << path << "\n";
                return 0;
            }
            json j;
            std::ifstream in(path);
            if (in) in >> j;
            std::map<std::string, std::pair<int, int>> per;  // n -> (hall, aut)
            for (const char* sec : {"hall", "aut"})
                if (j.contains(sec))
                    for (auto it = j[sec].begin(); it != j[sec].end(); ++it) {
                        const std::string n = it.key().substr(0, it.key().find('|'));
                        (std::string(sec) == "hall" ? per[n].first : per[n].second)++;
                    }
            if (o.format == "json") {
                json out = {{"schema", kSchema}, {"kind", "cache"}, {"path", path}, {"entries", json::object()}};
                for (const auto& [n, c] : per) out["entries"][n] = {{"hall", c.first}, {"aut", c.second}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << path << "\n";
                for (const auto& [n, c] : per) std::cout << "  n=" << n << "  hall=" << c.first << "  aut=" << c.second << "\n";
            }
            return 0;
        }

        Workspace ws(cachePath());
        int code = 0;
        if (*verify) {
            Report rep = runSuite(suite, sp, ws);
            if (o.format == "json")
                std::cout << reportJson(rep).dump(2) << "\n";
            else
                std::cout << reportText(rep);
            code = rep.pass() ? 0 : 1;
        } else if (*hallpoly) {
            QuiverOracle& q = ws.at(o.n).oracle;
            printPoly(q.hallPolynomialV(parseMatrix(cm, o.n), parseMatrix(am, o.n), parseMatrix(bm, o.n)), o, "hall-polynomial");
        } else if (*aut) {
            printPoly(ws.at(o.n).oracle.autPolynomialV(parseMatrix(am, o.n)), o, "automorphism-polynomial");
        } else if (*commute) {
            DoubleHallEngine& e = ws.at(o.n).engine;
            const auto a = parseMatrix(am, o.n), b = parseMatrix(bm, o.n);
            a.require(MatVariant::Plus, "--plus");
            b.require(MatVariant::Plus, "--minus");
            const PBWElement nf = e.commuteMinusPlus(b, a);
            bool ok = true;
            json verdict;
            if (check == "closed-form") {
                if (a.entries().size() != 1 || a.entries().begin()->second != 1 || b.entries().size() != 1 ||
                    b.entries().begin()->second != 1)
                    fail(ErrorKind::InvalidArgument, "--check closed-form needs single segments");
                const auto [i, j] = a.entries().begin()->first;
                const auto [k, l] = b.entries().begin()->first;
                const PBWElement lhs = e.pbwProduct(PBWElement::plus(a), PBWElement::minus(b)) - nf;
                ok = lhs == e.closedFormCommutator(i, j, k, l);
                verdict = {{"check", check}, {"commutator", pbwJson(lhs)}};
            } else if (check == "both-paths") {
                for (int rr : rList) {
                    SchurAlgebra s(o.n, rr);
                    ok = ok && zetaR(e, s, nf) == s.multiply(zetaR(e, s, PBWElement::minus(b)), zetaR(e, s, PBWElement::plus(a)));
                }
                verdict = {{"check", check}, {"r", rList}};
            }
            if (o.format == "json") {
                json out = valueDocument(nf, AlgebraKind::Double);
                if (!check.empty()) {
                    verdict["verdict"] = ok ? "MATCH" : "MISMATCH";
                    out["check"] = verdict;
                }
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << formatPBW(nf) << "\n";
                if (!check.empty()) std::cout << (ok ? "MATCH" : "MISMATCH") << "\n";
            }
            code = ok ? 0 : 1;
        } else if (*product || *schurProduct || *zeta || *eta) {
            // Raw arguments: CLI11 would split a bracketed positional like [{(1,1):2}] into a list.
            for (CLI::App* sub : {product, schurProduct, zeta, eta})
                if (*sub) exprs = sub->remaining();
            for (const auto& x : exprs)
                if (x.rfind("--", 0) == 0) fail(ErrorKind::InvalidArgument, "unknown option " + x);
            if (exprs.empty()) fail(ErrorKind::InvalidArgument, "no expression given");
            if ((*zeta || *eta) && exprs.size() != 1) fail(ErrorKind::InvalidArgument, "expects a single expression");
            const AlgebraKind alg = *schurProduct ? AlgebraKind::Schur
                                    : *eta        ? AlgebraKind::Classical
                                                  : parseAlgebraName(algebra);
            Context& c = ws.at(o.n);
            std::unique_ptr<SchurAlgebra> s;
            if (alg == AlgebraKind::Schur || *zeta || *eta) s = std::make_unique<SchurAlgebra>(o.n, r);
            EvalContext ctx{alg, &c.modified, s.get()};
            Value v = evaluateProduct(exprs, ctx);
            if (*zeta) {
                v = alg == AlgebraKind::Modified ? zetaDotR(c.engine, *s, std::get<BlockElement>(v))
                                                 : zetaR(c.engine, *s, asPBW(v, o.n));
                printValue(v, AlgebraKind::Schur, o);
            } else if (*eta) {
                if (auto* sc = std::get_if<RationalFn>(&v)) v = ClassicalElement::scalar(o.n, specializeV1(*sc));
                printValue(etaR(*s, std::get<ClassicalElement>(v)), AlgebraKind::Schur, o);
            } else if (!window.empty()) {
                if (alg != AlgebraKind::Double) fail(ErrorKind::InvalidArgument, "--window needs --algebra double");
                int lo = 0, hi = 0;
                if (std::sscanf(window.c_str(), "%d:%d", &lo, &hi) != 2 || lo > hi)
                    fail(ErrorKind::InvalidArgument, "--window expects lo:hi");
                const auto fam = c.modified.completionEmbedOnWindow(asPBW(v, o.n), LambdaWindow::cube(o.n, lo, hi));
                const bool member = completionIntegralMembership(fam);
                if (o.format == "json") {
                    json vals = json::array();
                    for (const auto& [lam, b] : fam.values) vals.push_back({{"mu", vectorJson(lam)}, {"terms", blockJson(b)}});
                    std::cout << json{{"schema", kSchema}, {"kind", "windowed-family"}, {"window", window},
                                      {"integral", member}, {"values", vals}}
                                     .dump(2)
                              << "\n";
                } else {
                    for (const auto& [lam, b] : fam.values) std::cout << lam.toString() << ": " << formatBlock(b) << "\n";
                    std::cout << (member ? "integral" : "not integral") << "\n";
                }
            } else {
                printValue(v, alg, o);
            }
        }
        ws.saveCache();
        return code;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exitCodeFor(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
