#pragma once

// JSON encodings. Every document carries a "schema" field.

#include <json.hpp>

#include "ahs/expr.hpp"

namespace ahs {

inline constexpr const char* kSchema = "ahs/1";

// {"var": "v", "coeffs": {"<exp>": "<integer>"}}; with var "q" the polynomial must be even in v.
nlohmann::json laurentJson(const LaurentPoly& p, const std::string& var = "v");
nlohmann::json qpolyJson(const QPoly& f);
// {"num": laurent, "den": laurent}
nlohmann::json rationalFnJson(const RationalFn& c);
nlohmann::json matrixJson(const PeriodicMat& m);
nlohmann::json vectorJson(const PeriodicVec& v);

nlohmann::json hallJson(const HallElement& x);
nlohmann::json pbwJson(const PBWElement& x);
nlohmann::json blockJson(const BlockElement& x);
nlohmann::json schurJson(const SchurElement& x);
nlohmann::json classicalJson(const ClassicalElement& x);
// {"schema", "algebra", "terms", "text"}
nlohmann::json valueDocument(const Value& v, AlgebraKind alg);

// Laurent polynomial in q = v^2 when every exponent is even; throws InvalidArgument otherwise.
std::string formatInQ(const LaurentPoly& p);

}  // namespace ahs
