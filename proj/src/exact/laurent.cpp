#include "omegaforge/exact/laurent.hpp"

#include "omegaforge/error.hpp"

namespace omegaforge {

LaurentPoly::LaurentPoly(FieldElem constant) {
  if (!constant.is_zero()) terms_.emplace(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(FieldElem c, int exponent) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace(exponent, std::move(c));
  return p;
}

std::optional<int> LaurentPoly::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LaurentPoly::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

FieldElem LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? FieldElem() : it->second;
}

void LaurentPoly::add_term(int exponent, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly laurent_scale(const LaurentPoly& p, int e) {
  LaurentPoly out;
  for (const auto& [exp, c] : p.terms()) out.add_term(exp + e, c);
  return out;
}

FieldElem laurent_limit(const LaurentPoly& p) {
  auto lo = p.min_exponent();
  if (lo && *lo < 0)
    throw Error(ErrorKind::NegativeOrder, "divergent limit, lowest exponent " + std::to_string(*lo), *lo);
  return p.coefficient(0);
}

LaurentPoly pow(const LaurentPoly& p, unsigned n) {
  LaurentPoly out(1);
  for (unsigned k = 0; k < n; ++k) out *= p;
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*t^" + std::to_string(e);
  }
  return out;
}

}  // namespace omegaforge
