#include <string>

#include "omegaforge/error.hpp"
#include "omegaforge/exact/serialize.hpp"

namespace omegaforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NegativeOrder: return "NegativeOrder";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotSubset: return "NotSubset";
    case ErrorKind::NotTight: return "NotTight";
    case ErrorKind::NotADistribution: return "NotADistribution";
    case ErrorKind::MissingValueBound: return "MissingValueBound";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::NoRoot: return "NoRoot";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::NotLocalBasis: return "NotLocalBasis";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::SpanDeficit: return "SpanDeficit";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorKind::ParseError, "malformed rational: " + std::string(text));
  if (num.front() == '+') num.remove_prefix(1);
  BigInt p(std::string(num), 10);
  BigInt q(std::string(den), 10);
  if (q == 0) throw Error(ErrorKind::ParseError, "zero denominator: " + std::string(text));
  Rational out(p, q);
  out.canonicalize();
  return out;
}

nlohmann::json laurent_to_json(const LaurentPoly& p) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = to_string(c);
  return out;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "Laurent polynomial must be a JSON object");
  LaurentPoly out;
  for (const auto& [key, value] : j.items()) {
    if (!valid_integer(key)) throw Error(ErrorKind::ParseError, "bad exponent: " + key);
    if (!value.is_string()) throw Error(ErrorKind::ParseError, "coefficient must be a string");
    out.add_term(std::stoi(key), parse_field(value.get<std::string>()));
  }
  return out;
}

FieldElem field_from_json(const nlohmann::json& j) {
  if (!j.is_string()) throw Error(ErrorKind::ParseError, "field element must be a string");
  return parse_field(j.get<std::string>());
}

}  // namespace omegaforge
