#include <gtest/gtest.h>

#include <random>

#include "omegaforge/error.hpp"
#include "omegaforge/exact/serialize.hpp"

using namespace omegaforge;

namespace {

FieldElem q(long p, long d = 1) { return FieldElem(make_rational(p, d)); }
const FieldElem I = FieldElem::imag_unit();
const FieldElem R2 = FieldElem::sqrt2();

FieldElem random_elem(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  return FieldElem(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)),
                   make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
}

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-4, 4), count(0, 4);
  LaurentPoly p;
  for (int k = count(rng); k > 0; --k) p.add_term(exp(rng), random_elem(rng));
  return p;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational r = make_rational(6, -4);
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
  EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Field, DefiningRelations) {
  EXPECT_EQ(I * I, q(-1));
  EXPECT_EQ(R2 * R2, q(2));
  EXPECT_EQ((q(1) + R2) * (q(1) - R2), q(-1));
  FieldElem h = R2 * q(1, 2);
  EXPECT_EQ((h + h * I) * (h - h * I), q(1));
}

TEST(Field, DivisionByZero) {
  try {
    (void)(q(1) / FieldElem());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(Field, AxiomsOnRandomElements) {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 200; ++n) {
    FieldElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), q(1));
    EXPECT_EQ(a.conj_i().conj_i(), a);
    EXPECT_EQ(a.conj_sqrt2().conj_sqrt2(), a);
    EXPECT_EQ((a * b).conj_i(), a.conj_i() * b.conj_i());
    EXPECT_EQ((a * b).conj_sqrt2(), a.conj_sqrt2() * b.conj_sqrt2());
    EXPECT_EQ(parse_field(to_string(a)), a);
  }
}

TEST(Field, ComplexValueAgreesWithCoordinates) {
  FieldElem x(make_rational(1, 2), 3, -1, make_rational(2, 3));
  std::complex<double> z = x.to_complex();
  EXPECT_NEAR(z.real(), 0.5 - std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(z.imag(), 3 + 2.0 / 3 * std::sqrt(2.0), 1e-12);
}

TEST(Laurent, Limits) {
  EXPECT_EQ(laurent_limit(LaurentPoly(3) + LaurentPoly::t_pow(1)), q(3));
  try {
    laurent_limit(LaurentPoly::t_pow(-1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NegativeOrder);
    EXPECT_EQ(e.payload(), -1);
  }
  LaurentPoly p = LaurentPoly::t_pow(-2) * (LaurentPoly::t_pow(2) + LaurentPoly::t_pow(6));
  EXPECT_EQ(laurent_limit(p), q(1));
}

TEST(Laurent, Scale) {
  EXPECT_EQ(laurent_scale(LaurentPoly::t_pow(-2), 2), LaurentPoly(1));
  EXPECT_EQ(laurent_scale(LaurentPoly(1) + LaurentPoly::t_pow(1), -1), LaurentPoly::t_pow(-1) + LaurentPoly(1));
  // l = (m t² − 1)² / (2 t⁸) at m = 2
  LaurentPoly mt = LaurentPoly::monomial(q(2), 2) - LaurentPoly(1);
  LaurentPoly l = mt * mt * LaurentPoly::monomial(q(1, 2), -8);
  LaurentPoly want = LaurentPoly::monomial(q(2), 4) - LaurentPoly::monomial(q(2), 2) + LaurentPoly(q(1, 2));
  EXPECT_EQ(laurent_scale(l, 8), want);
}

TEST(Laurent, NoZeroCoefficientsStored) {
  LaurentPoly p = LaurentPoly::t_pow(3) - LaurentPoly::t_pow(3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_FALSE(p.min_exponent().has_value());
}

TEST(Laurent, RingAxiomsAndScaleLimit) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 100; ++n) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    for (const auto& [e, coeff] : a.terms()) EXPECT_FALSE(coeff.is_zero());
    if (!a.is_zero()) {
      int e = -*a.min_exponent();
      EXPECT_EQ(laurent_limit(laurent_scale(a, e)), a.coefficient(-e));
    }
    EXPECT_EQ(laurent_from_json(laurent_to_json(a)), a);
  }
  EXPECT_EQ(pow(LaurentPoly(1) + LaurentPoly::t_pow(1), 3).coefficient(2), q(3));
}
