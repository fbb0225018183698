#pragma once

#include <map>
#include <optional>
#include <string>

#include "omegaforge/exact/field.hpp"

namespace omegaforge {

/// Laurent polynomial in one variable t with ℚ(i,√2) coefficients. Zero
/// coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, FieldElem>;

  LaurentPoly() = default;
  LaurentPoly(FieldElem constant);  // NOLINT
  LaurentPoly(long constant) : LaurentPoly(FieldElem(constant)) {}  // NOLINT

  /// c · t^exponent
  static LaurentPoly monomial(FieldElem c, int exponent);
  /// t^exponent
  static LaurentPoly t_pow(int exponent) { return monomial(FieldElem(1), exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Lowest exponent; nullopt for the zero polynomial.
  std::optional<int> min_exponent() const;
  std::optional<int> max_exponent() const;
  FieldElem coefficient(int exponent) const;

  /// Adds c·t^exponent, dropping the term if it cancels.
  void add_term(int exponent, const FieldElem& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  Terms terms_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

/// Multiplies by t^e.
LaurentPoly laurent_scale(const LaurentPoly& p, int e);

/// lim_{t→0} p. Throws Error(NegativeOrder, payload = min exponent) when a
/// negative exponent is present.
FieldElem laurent_limit(const LaurentPoly& p);

LaurentPoly pow(const LaurentPoly& p, unsigned n);

std::string to_string(const LaurentPoly& p);

}  // namespace omegaforge
