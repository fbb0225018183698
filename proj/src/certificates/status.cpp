#include <omp.h>

#include <algorithm>

#include "omegaforge/certificates/certificates.hpp"
#include "omegaforge/parallel.hpp"

namespace omegaforge {

CertReport verify_certificate(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> CertReport {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, RankOneCurveCert>) return verify_rank_one_cert(c);
        else if constexpr (std::is_same_v<T, SpanLimitCert>) return verify_span_limit_cert(c);
        else return verify_toric_degeneration(c);
      },
      cert);
}

std::vector<CertReport> verify_all(const std::vector<Certificate>& certs) {
  std::vector<CertReport> out(certs.size());
  const long n = static_cast<long>(certs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_cap())
  for (long k = 0; k < n; ++k) out[k] = verify_certificate(certs[k]);
  return out;
}

std::vector<CertReport> verify_all_serial(const std::vector<Certificate>& certs) {
  std::vector<CertReport> out;
  for (const auto& c : certs) out.push_back(verify_certificate(c));
  return out;
}

namespace {

const Tensor* certified_tensor(const Certificate& c) {
  if (auto* r = std::get_if<RankOneCurveCert>(&c)) return &r->target;
  if (auto* s = std::get_if<SpanLimitCert>(&c)) return &s->target;
  return nullptr;
}

long bound_of(const Certificate& c) {
  if (auto* r = std::get_if<RankOneCurveCert>(&c)) return static_cast<long>(r->terms.size());
  if (auto* s = std::get_if<SpanLimitCert>(&c)) return static_cast<long>(s->generators.size());
  return 0;
}

}  // namespace

BorderRankStatus border_rank_status(const NamedTensorSpec& spec, const std::vector<Certificate>& certs) {
  BorderRankStatus s;
  for (int f = 0; f < 3; ++f) s.lower = std::max(s.lower, static_cast<long>(flattening_rank(spec.tensor, f)));
  for (const auto& c : certs) {
    const Tensor* t = certified_tensor(c);
    if (!t || t->dims() != spec.tensor.dims() || t->entries() != spec.tensor.entries()) continue;
    if (!verify_certificate(c).pass) continue;
    if (auto* span = std::get_if<SpanLimitCert>(&c)) {
      auto ranks = generators_rank_one(*span);
      if (std::find(ranks.begin(), ranks.end(), false) != ranks.end()) continue;
    }
    const long b = bound_of(c);
    if (!s.certified || b < s.upper) {
      s.upper = b;
      s.certified = true;
      s.upper_provenance = std::holds_alternative<SpanLimitCert>(c) ? "span-limit certificate" : "rank-one-curve certificate";
    }
  }
  if (!s.certified && spec.budget > 0) {
    s.upper = spec.budget;
    s.upper_provenance = spec.budget_provenance;
  }
  s.tight = s.upper > 0 && s.upper == s.lower;
  return s;
}

}  // namespace omegaforge
