#include "polycf/json_io.hpp"

namespace polycf::json_io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (!j.is_string()) malformed("integer must be a decimal string");
  const Rational q = parse_rational(j.get<std::string>());
  if (q.get_den() != 1) malformed("expected an integer, got " + j.get<std::string>());
  return q.get_num();
}

Json optional_index(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

std::string rational_string(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) malformed("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

IntPolynomial poly_from_json(const Json& j) {
  if (!j.is_array()) malformed("polynomial must be an array of coefficients");
  std::vector<Integer> coeffs;
  for (const auto& c : j) coeffs.push_back(integer_from_json(c));
  return IntPolynomial(std::move(coeffs));
}

Json to_json(const RationalFunction& r) { return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

RationalFunction ratfn_from_json(const Json& j) {
  if (j.is_string()) return parse_ratfn(j.get<std::string>());
  IntPolynomial den = poly_from_json(field(j, "den"));
  if (den.is_zero()) malformed("rational function with zero denominator");
  return RationalFunction(poly_from_json(field(j, "num")), std::move(den));
}

Json to_json(const CFSpec& cf) {
  Json prefix = Json::array();
  for (const auto& t : cf.prefix) prefix.push_back(Json::array({rational_string(t.a), rational_string(t.b)}));
  Json tail = nullptr;
  if (cf.tail) {
    tail = Json{{"a", to_json(cf.tail->a)}, {"b", to_json(cf.tail->b)}, {"start_index", cf.tail->start_index}};
  }
  return Json{{"b0", rational_string(cf.b0)}, {"prefix", prefix}, {"tail", tail}};
}

CFSpec cf_from_json(const Json& j) {
  CFSpec cf;
  cf.b0 = rational_from_json(field(j, "b0"));
  if (j.contains("prefix")) {
    const Json& prefix = j.at("prefix");
    if (!prefix.is_array()) malformed("prefix must be an array");
    for (const auto& t : prefix) {
      if (!t.is_array() || t.size() != 2) malformed("prefix terms must be [a, b] pairs");
      cf.prefix.push_back({rational_from_json(t[0]), rational_from_json(t[1])});
    }
  }
  if (j.contains("tail") && !j.at("tail").is_null()) {
    const Json& t = j.at("tail");
    Tail tail{ratfn_from_json(field(t, "a")), ratfn_from_json(field(t, "b")), 1};
    if (t.contains("start_index")) {
      if (!t.at("start_index").is_number_integer()) malformed("start_index must be an integer");
      tail.start_index = t.at("start_index").get<long>();
    }
    cf.tail = std::move(tail);
  }
  return cf;
}

CFSpec parse_cf(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  return cf_from_json(j);
}

Json to_json(const LimitEstimate& e) {
  return Json{{"value", e.value.to_decimal()},
              {"error_bound", e.error_bound.to_decimal(kErrorDigits)},
              {"terms_used", e.terms_used},
              {"converged", e.converged}};
}

Json to_json(const std::vector<Convergent>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) {
    Json value = nullptr;
    if (c.B != 0) value = rational_string(Rational(c.A / c.B));
    out.push_back(Json{{"n", c.index}, {"A", rational_string(c.A)}, {"B", rational_string(c.B)}, {"value", value}});
  }
  return out;
}

Json to_json(const LimitClaim& c) {
  if (c.kind == LimitClaim::Kind::ExactRational) {
    return Json{{"kind", "ExactRational"}, {"value", rational_string(c.value)}};
  }
  return Json{{"kind", "NamedConstant"}, {"constant", to_string(c.constant)}};
}

Json to_json(const FamilyMember& m) {
  Json hyps = Json::array();
  for (const auto& h : m.hypotheses) {
    Json entry{{"name", h.name}, {"holds", h.holds}, {"first_failure", optional_index(h.first_failure)}};
    if (!h.holds) entry["failure"] = std::string(to_string(h.failure_kind));
    hyps.push_back(std::move(entry));
  }
  return Json{{"id", m.id}, {"params", m.params}, {"cf", to_json(m.cf)},
              {"limit", to_json(m.limit)}, {"hypotheses", hyps}, {"verified", m.verified()}};
}

Json to_json(const TietzeReport& r) {
  return Json{{"holds", r.holds}, {"N0", optional_index(r.N0)}, {"method", to_string(r.method)},
              {"scan_limit", r.scan_limit}};
}

Json to_json(const GrowthBound& g) {
  return Json{{"kind", to_string(g.kind)},   {"k", g.k},
              {"D", rational_string(g.D)},   {"epsilon", rational_string(g.epsilon)},
              {"C", g.C.to_decimal(kErrorDigits)}, {"phi", g.phi.to_decimal()},
              {"terms", g.terms}};
}

Json to_json(const VerificationReport& r) {
  return Json{{"preset", r.id},
              {"params", r.params},
              {"terms", r.terms},
              {"precision_bits", r.precision_bits},
              {"claimed", r.claimed},
              {"value", r.value.to_decimal()},
              {"oracle", r.oracle.to_decimal()},
              {"abs_err", r.abs_err.to_decimal(kErrorDigits)},
              {"rel_err", r.rel_err.to_decimal(kErrorDigits)},
              {"error_bound", r.error_bound.to_decimal(kErrorDigits)},
              {"tolerance", r.tolerance.to_decimal(kErrorDigits)},
              {"verdict", to_string(r.verdict)}};
}

Json to_json(const Error& e) {
  return Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}, {"index", optional_index(e.index())}};
}

}  // namespace polycf::json_io
