#include "omegaforge/algebra/algebra.hpp"
#include "omegaforge/certificates/certificates.hpp"

namespace omegaforge {

namespace {

void require_algebra(const Tensor& t, const char* which) {
  Algebra a{t.dim(0), 0, {}, t};
  a.structure.clear_labels();
  if (!unit_is_identity(a) || !is_commutative(a) || !is_associative(a))
    throw Error(ErrorKind::Mismatch, std::string(which) + " is not the structure tensor of a unital commutative algebra");
}

}  // namespace

CertReport verify_toric_degeneration(const ToricDegenerationCert& cert) {
  CertReport r;
  r.kind = "toric_degeneration";
  r.name = cert.name;
  try {
    if (cert.source.dims() != cert.target.dims()) throw Error(ErrorKind::ShapeMismatch, "source and target dims differ");
    for (int f = 0; f < 3; ++f)
      if (static_cast<int>(cert.exponents[f].size()) != cert.source.dim(f))
        throw Error(ErrorKind::ShapeMismatch, "exponent list has wrong length");
    if (cert.source.dim(0) != cert.source.dim(1) || cert.source.dim(1) != cert.source.dim(2))
      throw Error(ErrorKind::ShapeMismatch, "algebra tensors are square");
    require_algebra(cert.source, "source");
    require_algebra(cert.target, "target");
    CurveTensor curve(cert.source.dims());
    for (const auto& [idx, v] : cert.source.entries())
      curve.set(idx, LaurentPoly::monomial(v, cert.exponents[0][idx[0]] + cert.exponents[1][idx[1]] +
                                                  cert.exponents[2][idx[2]]));
    Tensor limit = curve_limit(curve, cert.e);
    limit.clear_labels();
    if (limit.entries() != cert.target.entries()) {
      for (const auto& [idx, v] : cert.target.entries())
        if (limit.get(idx) != v)
          throw Error(ErrorKind::Mismatch, "entry (" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
                                               std::to_string(idx[2]) + ") differs from the target");
      throw Error(ErrorKind::Mismatch, "limit has entries outside the target");
    }
    r.pass = true;
  } catch (const Error& ex) {
    r.error = to_string(ex.kind());
    r.detail = ex.what();
  }
  return r;
}

ToricDegenerationCert build_a3_toric_cert() {
  ToricDegenerationCert cert;
  cert.name = "a3 to paired cw6";
  cert.source = a3_tensor().tensor;
  cert.target = multiplication_tensor(cw_algebra_paired(6));
  // Basis a..h; the letters b, c, d, h are scaled in the first two factors.
  const std::vector<int> up{0, 1, 1, 1, 0, 0, 0, 1};
  std::vector<int> down(up.size());
  for (std::size_t k = 0; k < up.size(); ++k) down[k] = -up[k];
  cert.exponents = {up, up, down};
  cert.e = 0;
  return cert;
}

}  // namespace omegaforge
