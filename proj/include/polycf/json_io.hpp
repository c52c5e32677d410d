#pragma once

#include <json.hpp>
#include <string>

#include "polycf/analysis.hpp"
#include "polycf/cf.hpp"
#include "polycf/errors.hpp"
#include "polycf/generators.hpp"

namespace polycf::json_io {

using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" (or "p") decimal strings.
std::string rational_string(const Rational& q);
Rational rational_from_json(const Json& j);

/// Polynomial: array of coefficient strings, ascending.
Json to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const Json& j);

/// {"num": [...], "den": [...]}. A plain string is parsed as an expression in n.
Json to_json(const RationalFunction& r);
RationalFunction ratfn_from_json(const Json& j);

/// {"b0": "p/q", "prefix": [["a", "b"], ...], "tail": {"a", "b", "start_index"} | null}.
/// Tail term k (k >= 1) is (a(start_index + k - 1), b(start_index + k - 1)).
Json to_json(const CFSpec& cf);
CFSpec cf_from_json(const Json& j);
CFSpec parse_cf(const std::string& text);

Json to_json(const LimitEstimate& e);
Json to_json(const std::vector<Convergent>& cs);
Json to_json(const LimitClaim& c);
Json to_json(const FamilyMember& m);
Json to_json(const TietzeReport& r);
Json to_json(const GrowthBound& g);
Json to_json(const VerificationReport& r);
/// {"error": kind, "message": text, "index": n | null}.
Json to_json(const Error& e);

/// Significant digits used for error quantities in reports.
inline constexpr int kErrorDigits = 6;

}  // namespace polycf::json_io
