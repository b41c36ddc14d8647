#include "ahs/serialize.hpp"

#include <sstream>

namespace ahs {

using nlohmann::json;

std::string formatInQ(const LaurentPoly& p) {
    if (!p.onlyEvenExponents()) fail(ErrorKind::InvalidArgument, p.toString() + " is not a polynomial in q = v^2");
    std::vector<Integer> c;
    for (int e = p.minExp(); e <= p.maxExp(); e += 2) c.push_back(p.coeff(e));
    return LaurentPoly::fromCoeffs(p.minExp() / 2, c).toString('q');
}

json laurentJson(const LaurentPoly& p, const std::string& var) {
    json coeffs = json::object();
    const bool q = var == "q";
    if (q && !p.onlyEvenExponents()) fail(ErrorKind::InvalidArgument, p.toString() + " is not a polynomial in q = v^2");
    for (const auto& [e, c] : p.terms()) coeffs[std::to_string(q ? e / 2 : e)] = c.get_str();
    return {{"var", var}, {"coeffs", coeffs}};
}

json qpolyJson(const QPoly& f) { return laurentJson(qPolyToV(f), "q"); }

json rationalFnJson(const RationalFn& c) { return {{"num", laurentJson(c.num())}, {"den", laurentJson(c.den())}}; }

json matrixJson(const PeriodicMat& m) { return m.toString(); }

json vectorJson(const PeriodicVec& v) { return v.window(); }

json hallJson(const HallElement& x) {
    json t = json::array();
    for (const auto& [a, c] : x.terms) t.push_back({{"A", matrixJson(a)}, {"coeff", rationalFnJson(c)}});
    return t;
}

json pbwJson(const PBWElement& x) {
    json t = json::array();
    for (const auto& [k, c] : x.terms())
        t.push_back({{"A", matrixJson(k.plus)}, {"j", vectorJson(k.k)}, {"B", matrixJson(k.minus)}, {"coeff", rationalFnJson(c)}});
    return t;
}

json blockJson(const BlockElement& x) {
    json t = json::array();
    for (const auto& [k, c] : x.terms())
        t.push_back({{"A", matrixJson(k.plus)},
                     {"lambda", vectorJson(k.lambda)},
                     {"B", matrixJson(k.minus)},
                     {"coeff", rationalFnJson(c)}});
    return t;
}

json schurJson(const SchurElement& x) {
    json t = json::array();
    for (const auto& [a, c] : x.terms) t.push_back({{"matrix", matrixJson(a)}, {"coeff", rationalFnJson(c)}});
    return t;
}

json classicalJson(const ClassicalElement& x) {
    json t = json::array();
    for (const auto& [k, c] : x.terms()) {
        std::ostringstream cs;
        cs << c.get_num() << "/" << c.get_den();
        t.push_back({{"A", matrixJson(k.plus)}, {"lambda", vectorJson(k.lambda)}, {"B", matrixJson(k.minus)}, {"coeff", cs.str()}});
    }
    return t;
}

json valueDocument(const Value& v, AlgebraKind alg) {
    json d = {{"schema", kSchema}, {"algebra", algebraName(alg)}};
    std::visit(
        [&](auto&& e) {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, RationalFn>) {
                d["kind"] = "scalar";
                d["value"] = rationalFnJson(e);
            } else if constexpr (std::is_same_v<T, HallElement>) {
                d["kind"] = e.sign == HallSign::Plus ? "hall+" : "hall-";
                d["terms"] = hallJson(e);
            } else if constexpr (std::is_same_v<T, PBWElement>) {
                d["kind"] = "pbw";
                d["terms"] = pbwJson(e);
            } else if constexpr (std::is_same_v<T, BlockElement>) {
                d["kind"] = "block";
                d["terms"] = blockJson(e);
            } else if constexpr (std::is_same_v<T, SchurElement>) {
                d["kind"] = "schur";
                d["r"] = e.r;
                d["terms"] = schurJson(e);
            } else {
                d["kind"] = "classical";
                d["terms"] = classicalJson(e);
            }
        },
        v);
    d["text"] = formatValue(v);
    return d;
}

}  // namespace ahs
