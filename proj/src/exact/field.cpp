#include "omegaforge/exact/field.hpp"

#include <cmath>

#include "omegaforge/error.hpp"

namespace omegaforge {

bool FieldElem::is_zero() const {
  return sgn(coords_[0]) == 0 && sgn(coords_[1]) == 0 && sgn(coords_[2]) == 0 &&
         sgn(coords_[3]) == 0;
}

bool FieldElem::is_rational() const {
  return sgn(coords_[1]) == 0 && sgn(coords_[2]) == 0 && sgn(coords_[3]) == 0;
}

bool FieldElem::is_one() const { return is_rational() && coords_[0] == 1; }

FieldElem FieldElem::operator-() const {
  return FieldElem(-coords_[0], -coords_[1], -coords_[2], -coords_[3]);
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  for (int k = 0; k < 4; ++k) coords_[k] += o.coords_[k];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  for (int k = 0; k < 4; ++k) coords_[k] -= o.coords_[k];
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  *this = *this * o;
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  *this = *this / o;
  return *this;
}

// Basis products: i·i = −1, √2·√2 = 2, i·√2 = i√2, i·i√2 = −√2,
// √2·i√2 = 2i, i√2·i√2 = −2.
FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  if (a.is_rational() && b.is_rational()) return FieldElem(Rational(a.r() * b.r()));
  const auto& [a0, a1, a2, a3] = a.coords_;
  const auto& [b0, b1, b2, b3] = b.coords_;
  Rational r = a0 * b0 - a1 * b1 + 2 * a2 * b2 - 2 * a3 * b3;
  Rational c = a0 * b1 + a1 * b0 + 2 * a2 * b3 + 2 * a3 * b2;
  Rational s = a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1;
  Rational cs = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
  return FieldElem(std::move(r), std::move(c), std::move(s), std::move(cs));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  if (b.is_rational()) {
    if (sgn(b.r()) == 0) throw Error(ErrorKind::DivisionByZero, "division by zero in Q(i,sqrt2)");
    return FieldElem(a.r() / b.r(), a.c() / b.r(), a.s() / b.r(), a.cs() / b.r());
  }
  return a * b.inverse();
}

bool operator<(const FieldElem& a, const FieldElem& b) {
  for (int k = 0; k < 4; ++k) {
    int c = cmp(a.coords_[k], b.coords_[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

FieldElem FieldElem::conj_i() const { return FieldElem(coords_[0], -coords_[1], coords_[2], -coords_[3]); }

FieldElem FieldElem::conj_sqrt2() const { return FieldElem(coords_[0], coords_[1], -coords_[2], -coords_[3]); }

// Write x = u + v√2 with u, v ∈ ℚ(i). Then x·conj_sqrt2(x) = u² − 2v² ∈ ℚ(i),
// and that is inverted through its complex conjugate.
FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(i,sqrt2)");
  if (is_rational()) return FieldElem(Rational(1 / coords_[0]));
  FieldElem bar = conj_sqrt2();
  FieldElem norm1 = *this * bar;  // in ℚ(i)
  FieldElem norm1_bar = norm1.conj_i();
  Rational norm2 = (norm1 * norm1_bar).r();  // |u²−2v²|² ∈ ℚ, nonzero
  FieldElem num = bar * norm1_bar;
  return FieldElem(num.r() / norm2, num.c() / norm2, num.s() / norm2, num.cs() / norm2);
}

std::complex<double> FieldElem::to_complex() const {
  const double root2 = std::sqrt(2.0);
  return {coords_[0].get_d() + root2 * coords_[2].get_d(), coords_[1].get_d() + root2 * coords_[3].get_d()};
}

std::string to_string(const FieldElem& x) {
  return "(" + to_string(x.r()) + "," + to_string(x.c()) + "," + to_string(x.s()) + "," + to_string(x.cs()) + ")";
}

FieldElem parse_field(std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw Error(ErrorKind::ParseError, "field element must look like (r,c,s,cs): " + std::string(text));
  std::string_view body = text.substr(1, text.size() - 2);
  std::array<Rational, 4> parts;
  std::size_t pos = 0;
  for (int k = 0; k < 4; ++k) {
    std::size_t comma = body.find(',', pos);
    if ((k < 3) != (comma != std::string_view::npos))
      throw Error(ErrorKind::ParseError, "field element needs four coordinates: " + std::string(text));
    std::string_view part = body.substr(pos, k < 3 ? comma - pos : std::string_view::npos);
    parts[k] = parse_rational(part);
    pos = comma + 1;
  }
  return FieldElem(parts[0], parts[1], parts[2], parts[3]);
}

}  // namespace omegaforge
