#include "omegaforge/certificates/certificates.hpp"

namespace omegaforge {

namespace {

void check_length(const CurveVector& v, int dim, const char* what) {
  if (static_cast<int>(v.size()) != dim) throw Error(ErrorKind::ShapeMismatch, std::string(what) + " has wrong length");
}

CurveVector linear(int dim, std::initializer_list<std::pair<int, LaurentPoly>> terms) {
  CurveVector v(dim);
  for (const auto& [k, c] : terms) v[k] += c;
  return v;
}

LaurentPoly t(int e) { return LaurentPoly::t_pow(e); }
LaurentPoly c(long p, long q = 1) { return LaurentPoly(FieldElem(make_rational(p, q))); }

}  // namespace

CurveTensor expand_rank_one(const RankOneCurveCert& cert) {
  const Index3& dims = cert.target.dims();
  CurveTensor out(dims);
  for (const auto& term : cert.terms) {
    const CurveVector& u = term.u;
    const CurveVector& v = cert.symmetric ? term.u : term.v;
    const CurveVector& w = cert.symmetric ? term.u : term.w;
    check_length(u, dims[0], "u");
    check_length(v, dims[1], "v");
    check_length(w, dims[2], "w");
    for (int i = 0; i < dims[0]; ++i) {
      if (u[i].is_zero()) continue;
      LaurentPoly wu = term.weight * u[i];
      for (int j = 0; j < dims[1]; ++j) {
        if (v[j].is_zero()) continue;
        LaurentPoly wuv = wu * v[j];
        for (int k = 0; k < dims[2]; ++k)
          if (!w[k].is_zero()) out.add({i, j, k}, wuv * w[k]);
      }
    }
  }
  return out;
}

CertReport verify_rank_one_cert(const RankOneCurveCert& cert) {
  CertReport r;
  r.kind = "rank_one_curve";
  r.name = cert.name;
  r.term_count = static_cast<long>(cert.terms.size());
  try {
    CurveTensor curve = expand_rank_one(cert);
    Tensor limit = curve_limit(curve, cert.e);
    if (cert.rescale) {
      Tensor scaled(limit.dims());
      for (const auto& [idx, v] : limit.entries()) {
        FieldElem f = v;
        for (int a = 0; a < 3; ++a) {
          const auto& s = (*cert.rescale)[a];
          if (static_cast<int>(s.size()) != limit.dim(a)) throw Error(ErrorKind::ShapeMismatch, "rescaling has wrong length");
          f *= s[idx[a]];
        }
        scaled.set(idx, f);
      }
      limit = std::move(scaled);
    }
    for (const auto& [idx, v] : cert.target.entries())
      if (limit.get(idx) != v)
        throw Error(ErrorKind::Mismatch, "entry (" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
                                             std::to_string(idx[2]) + ") differs from the target");
    for (const auto& [idx, v] : limit.entries())
      if (cert.target.get(idx).is_zero())
        throw Error(ErrorKind::Mismatch, "entry (" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
                                             std::to_string(idx[2]) + ") is not in the target");
    r.pass = true;
  } catch (const Error& ex) {
    r.error = to_string(ex.kind());
    r.detail = ex.what();
  }
  return r;
}

RankOneCurveCert build_strassen_cert(int n) {
  NamedTensorSpec s = strassen(n);
  RankOneCurveCert cert{"strassen n=" + std::to_string(n), {}, false, -1, s.tensor, std::nullopt};
  const int du = n + 1, dw = n;
  CurveVector sum_w(dw);
  for (int j = 1; j <= n; ++j) {
    RankOneTerm term;
    term.u = linear(du, {{0, c(1)}, {j, t(1)}});
    term.v = linear(du, {{0, c(1)}, {j, t(1)}});
    term.w = linear(dw, {{j - 1, c(1)}});
    cert.terms.push_back(term);
    sum_w[j - 1] = c(1);
  }
  cert.terms.push_back({linear(du, {{0, c(1)}}), linear(du, {{0, c(1)}}), sum_w, c(-1)});
  return cert;
}

RankOneCurveCert build_waring_cert(int m) {
  if (m != 0 && m != 1) throw Error(ErrorKind::BadParams, "cube-sum certificates exist for m = 0 and m = 1");
  NamedTensorSpec s = hw_tensor(m);
  const int n = s.tensor.dim(0);
  RankOneCurveCert cert{"waring m=" + std::to_string(m), {}, true, 0, s.tensor, std::nullopt};
  auto cube = [&](LaurentPoly weight, CurveVector form) { cert.terms.push_back({std::move(form), {}, {}, std::move(weight)}); };
  std::vector<FieldElem> scale(n, FieldElem(1));
  if (m == 0) {
    const int a1 = 0, a2 = 1, b0 = 2, b1 = 3, b2 = 4;
    cert.e = -1;
    cube(c(3), linear(n, {{a1, c(1)}, {b1, t(1)}}));
    cube(c(6), linear(n, {{a2, c(1)}, {b2, t(1)}}));
    cube(c(1), linear(n, {{a1, c(1)}, {a2, c(-2)}}));
    cube(c(-3), linear(n, {{a1, c(1)}, {a2, c(-1)}, {b0, t(1)}}));
    cube(c(-1), linear(n, {{a1, c(1)}, {a2, c(1)}, {b0, c(-3) * t(1)}}));
    scale[b0] = FieldElem(make_rational(1, 6));
    scale[b1] = FieldElem(make_rational(1, 3));
    scale[b2] = FieldElem(make_rational(1, 6));
  } else {
    const int a1 = 0, a2 = 1, x1 = 2, y1 = 3, z1 = 4, b0 = 5, b1 = 6, b2 = 7;
    cert.e = -3;
    cube(c(1), linear(n, {{a1, c(-1)}, {a2, c(-1)}, {b0, t(3)}}));
    cube(c(1, 3), linear(n, {{a1, c(-1)}, {a2, c(1)}}));
    cube(c(1), linear(n, {{a1, c(1)}, {y1, -t(2)}, {b1, t(3)}}));
    cube(c(1, 3), linear(n, {{a1, c(1)}, {a2, c(-1)}, {x1, c(3) * t(1)}, {b0, c(-3) * t(3)}}));
    cube(c(1, 4), linear(n, {{a2, c(2)}, {x1, c(-2) * t(1)}, {z1, -t(2)}, {b2, t(3)}}));
    cube(c(1), linear(n, {{a1, c(-1)}, {x1, c(-2) * t(1)}, {y1, t(2)}}));
    cube(c(1, 4), linear(n, {{a2, c(-2)}, {z1, t(2)}}));
    cube(c(1), linear(n, {{a1, c(1)}, {a2, c(1)}, {x1, t(1)}}));
    scale[b0] = FieldElem(make_rational(1, 2));
    scale[y1] = FieldElem(make_rational(1, 2));
  }
  cert.rescale = std::array<std::vector<FieldElem>, 3>{scale, scale, scale};
  return cert;
}

}  // namespace omegaforge
