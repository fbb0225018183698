#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "omegaforge/constructions/constructions.hpp"
#include "omegaforge/tensor/tensor.hpp"

namespace omegaforge {

using CurveVector = std::vector<LaurentPoly>;
/// Sparse square matrices keyed by (row, column).
using CurveMatrix = std::map<std::pair<int, int>, LaurentPoly>;
using SparseMatrix = std::map<std::pair<int, int>, FieldElem>;

struct RankOneTerm {
  CurveVector u, v, w;  // v, w unused when symmetric
  LaurentPoly weight = LaurentPoly(1);
};

struct RankOneCurveCert {
  std::string name;
  std::vector<RankOneTerm> terms;
  bool symmetric = false;
  int e = 0;
  Tensor target;
  std::optional<std::array<std::vector<FieldElem>, 3>> rescale;
};

struct Recipe {
  std::string name;
  std::vector<std::pair<std::string, LaurentPoly>> combination;
  int e = 0;
  SparseMatrix limit;
};

struct SpanLimitCert {
  std::string name;
  int dim = 0;
  std::vector<std::string> generator_names;
  std::vector<CurveMatrix> generators;
  std::vector<Recipe> recipes;
  Tensor target;
};

struct ToricDegenerationCert {
  std::string name;
  std::array<std::vector<int>, 3> exponents;
  Tensor source;
  Tensor target;
  int e = 0;
};

using Certificate = std::variant<RankOneCurveCert, SpanLimitCert, ToricDegenerationCert>;

struct CertReport {
  std::string kind;
  std::string name;
  bool pass = false;
  std::string error;  // ErrorKind name when failing
  std::string detail;
  long term_count = 0;
  long span_dimension = -1;
  long target_dimension = -1;
  std::vector<std::string> recipe_results;
};

CertReport verify_rank_one_cert(const RankOneCurveCert& cert);
CertReport verify_span_limit_cert(const SpanLimitCert& cert);
CertReport verify_toric_degeneration(const ToricDegenerationCert& cert);
CertReport verify_certificate(const Certificate& cert);
std::vector<CertReport> verify_all(const std::vector<Certificate>& certs);
std::vector<CertReport> verify_all_serial(const std::vector<Certificate>& certs);

/// Σ weight·u⊗v⊗w (or weight·u⊗u⊗u) before scaling.
CurveTensor expand_rank_one(const RankOneCurveCert& cert);

RankOneCurveCert build_strassen_cert(int n);
/// Cube sums for T_HW,m, m ∈ {0, 1}.
RankOneCurveCert build_waring_cert(int m);
SpanLimitCert build_hw_span_cert(int m);
ToricDegenerationCert build_a3_toric_cert();

/// Index list of generators whose matrix has rank ≤ 1 over ℚ(i,√2)(t).
std::vector<bool> generators_rank_one(const SpanLimitCert& cert);

/// Slices T(·,·,k) as matrices, one per third-factor index.
std::vector<SparseMatrix> slice_matrices(const Tensor& t);

/// Every certificate obtained by perturbing one stored coefficient (adding 1
/// to a vector coordinate, weight, matrix entry, recipe coefficient, claimed
/// limit, rescaling factor, exponent or target entry).
std::vector<Certificate> single_entry_corruptions(const Certificate& cert);

struct BorderRankStatus {
  long lower = 0;
  long upper = 0;
  bool tight = false;
  bool certified = false;
  std::string upper_provenance;
};

BorderRankStatus border_rank_status(const NamedTensorSpec& spec, const std::vector<Certificate>& certs);

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const CertReport& r);
nlohmann::json status_to_json(const BorderRankStatus& s);

}  // namespace omegaforge
