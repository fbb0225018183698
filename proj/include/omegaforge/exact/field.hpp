#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>

#include "omegaforge/exact/rational.hpp"

namespace omegaforge {

/// Element r + c·i + s·√2 + cs·i√2 of ℚ(i,√2).
///
/// The field is stored as a fixed four-dimensional ℚ-algebra, so equality
/// is coordinate equality and every value is canonical as long as its
/// rationals are.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(long v) : coords_{Rational(v), 0, 0, 0} {}  // NOLINT: implicit by design of literals
  FieldElem(Rational r) : coords_{std::move(r), 0, 0, 0} {}  // NOLINT
  FieldElem(Rational r, Rational c, Rational s, Rational cs)
      : coords_{std::move(r), std::move(c), std::move(s), std::move(cs)} {}

  static FieldElem imag_unit() { return FieldElem(0, 1, 0, 0); }
  static FieldElem sqrt2() { return FieldElem(0, 0, 1, 0); }

  const Rational& r() const { return coords_[0]; }
  const Rational& c() const { return coords_[1]; }
  const Rational& s() const { return coords_[2]; }
  const Rational& cs() const { return coords_[3]; }
  const std::array<Rational, 4>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;  // c = s = cs = 0
  bool is_one() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);

  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
  /// Lexicographic on (r, c, s, cs). Not an order compatible with the field
  /// structure; used for sorting and fingerprints.
  friend bool operator<(const FieldElem& a, const FieldElem& b);

  /// i ↦ −i.
  FieldElem conj_i() const;
  /// √2 ↦ −√2.
  FieldElem conj_sqrt2() const;
  /// Throws Error(DivisionByZero) on zero.
  FieldElem inverse() const;

  std::complex<double> to_complex() const;

 private:
  std::array<Rational, 4> coords_{};
};

inline bool is_zero(const FieldElem& x) { return x.is_zero(); }

/// "(r,c,s,cs)" with each coordinate as "p/q".
std::string to_string(const FieldElem& x);
FieldElem parse_field(std::string_view text);

}  // namespace omegaforge
