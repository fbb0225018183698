#include <functional>

#include "omegaforge/certificates/certificates.hpp"
#include "omegaforge/exact/serialize.hpp"
#include "omegaforge/tensor/tensor_json.hpp"

namespace omegaforge {

using nlohmann::json;

namespace {

json vector_to_json(const CurveVector& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(laurent_to_json(p));
  return out;
}

CurveVector vector_from_json(const json& j) {
  CurveVector v;
  for (const auto& p : j) v.push_back(laurent_from_json(p));
  return v;
}

json to_json(const RankOneCurveCert& c) {
  json terms = json::array();
  for (const auto& t : c.terms) {
    json term{{"weight", laurent_to_json(t.weight)}, {"u", vector_to_json(t.u)}};
    if (!c.symmetric) {
      term["v"] = vector_to_json(t.v);
      term["w"] = vector_to_json(t.w);
    }
    terms.push_back(term);
  }
  json out{{"kind", "rank_one_curve"}, {"name", c.name}, {"symmetric", c.symmetric},
           {"e", c.e},                 {"terms", terms},  {"target", tensor_to_json(c.target)}};
  if (c.rescale) {
    json r = json::array();
    for (const auto& f : *c.rescale) {
      json row = json::array();
      for (const auto& x : f) row.push_back(to_string(x));
      r.push_back(row);
    }
    out["rescale"] = r;
  }
  return out;
}

json to_json(const SpanLimitCert& c) {
  json gens = json::array();
  for (std::size_t g = 0; g < c.generators.size(); ++g) {
    json entries = json::array();
    for (const auto& [e, p] : c.generators[g]) entries.push_back({e.first, e.second, laurent_to_json(p)});
    gens.push_back({{"name", c.generator_names[g]}, {"entries", entries}});
  }
  json recipes = json::array();
  for (const auto& r : c.recipes) {
    json comb = json::array(), limit = json::array();
    for (const auto& [name, p] : r.combination) comb.push_back({name, laurent_to_json(p)});
    for (const auto& [e, v] : r.limit) limit.push_back({e.first, e.second, to_string(v)});
    recipes.push_back({{"name", r.name}, {"e", r.e}, {"combination", comb}, {"limit", limit}});
  }
  return {{"kind", "span_limit"}, {"name", c.name},       {"dim", c.dim},
          {"generators", gens},   {"recipes", recipes},   {"target", tensor_to_json(c.target)}};
}

json to_json(const ToricDegenerationCert& c) {
  return {{"kind", "toric_degeneration"},         {"name", c.name}, {"exponents", c.exponents}, {"e", c.e},
          {"source", tensor_to_json(c.source)}, {"target", tensor_to_json(c.target)}};
}

}  // namespace

json certificate_to_json(const Certificate& cert) {
  json out = std::visit([](const auto& c) { return to_json(c); }, cert);
  out["schema_version"] = 1;
  return out;
}

Certificate certificate_from_json(const json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rank_one_curve") {
      RankOneCurveCert c;
      c.name = j.value("name", std::string());
      c.symmetric = j.at("symmetric").get<bool>();
      c.e = j.at("e").get<int>();
      c.target = tensor_from_json(j.at("target"));
      for (const auto& t : j.at("terms")) {
        RankOneTerm term;
        term.weight = laurent_from_json(t.at("weight"));
        term.u = vector_from_json(t.at("u"));
        if (!c.symmetric) {
          term.v = vector_from_json(t.at("v"));
          term.w = vector_from_json(t.at("w"));
        }
        c.terms.push_back(std::move(term));
      }
      if (j.contains("rescale")) {
        std::array<std::vector<FieldElem>, 3> r;
        for (int f = 0; f < 3; ++f)
          for (const auto& x : j.at("rescale").at(f)) r[f].push_back(field_from_json(x));
        c.rescale = r;
      }
      return c;
    }
    if (kind == "span_limit") {
      SpanLimitCert c;
      c.name = j.value("name", std::string());
      c.dim = j.at("dim").get<int>();
      c.target = tensor_from_json(j.at("target"));
      for (const auto& g : j.at("generators")) {
        c.generator_names.push_back(g.at("name").get<std::string>());
        CurveMatrix m;
        for (const auto& e : g.at("entries")) m[{e.at(0).get<int>(), e.at(1).get<int>()}] = laurent_from_json(e.at(2));
        c.generators.push_back(std::move(m));
      }
      for (const auto& r : j.at("recipes")) {
        Recipe recipe;
        recipe.name = r.at("name").get<std::string>();
        recipe.e = r.at("e").get<int>();
        for (const auto& p : r.at("combination"))
          recipe.combination.push_back({p.at(0).get<std::string>(), laurent_from_json(p.at(1))});
        for (const auto& e : r.at("limit")) recipe.limit[{e.at(0).get<int>(), e.at(1).get<int>()}] = field_from_json(e.at(2));
        c.recipes.push_back(std::move(recipe));
      }
      return c;
    }
    if (kind == "toric_degeneration") {
      ToricDegenerationCert c;
      c.name = j.value("name", std::string());
      c.exponents = j.at("exponents").get<std::array<std::vector<int>, 3>>();
      c.e = j.at("e").get<int>();
      c.source = tensor_from_json(j.at("source"));
      c.target = tensor_from_json(j.at("target"));
      return c;
    }
    throw Error(ErrorKind::ParseError, "unknown certificate kind: " + kind);
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("certificate JSON: ") + ex.what());
  }
}

json report_to_json(const CertReport& r) {
  json out{{"kind", r.kind}, {"name", r.name}, {"pass", r.pass}, {"term_count", r.term_count}};
  if (!r.pass) {
    out["error"] = r.error;
    out["detail"] = r.detail;
  }
  if (r.span_dimension >= 0) {
    out["span_dimension"] = r.span_dimension;
    out["target_dimension"] = r.target_dimension;
  }
  if (!r.recipe_results.empty()) out["recipes"] = r.recipe_results;
  return out;
}

json status_to_json(const BorderRankStatus& s) {
  return {{"lower", s.lower},
          {"upper", s.upper},
          {"tight", s.tight},
          {"certified", s.certified},
          {"upper_provenance", s.upper_provenance}};
}

namespace {

const LaurentPoly kOne(1);

void bump(LaurentPoly& p) { p += kOne; }

void bump_tensor(const Tensor& t, const std::function<void(Tensor)>& emit) {
  for (const auto& [idx, v] : t.entries()) {
    Tensor c = t;
    c.set(idx, v + FieldElem(1));
    emit(std::move(c));
  }
}

}  // namespace

std::vector<Certificate> single_entry_corruptions(const Certificate& cert) {
  std::vector<Certificate> out;
  if (auto* r = std::get_if<RankOneCurveCert>(&cert)) {
    for (std::size_t k = 0; k < r->terms.size(); ++k) {
      {
        RankOneCurveCert c = *r;
        bump(c.terms[k].weight);
        out.push_back(std::move(c));
      }
      for (int f = 0; f < (r->symmetric ? 1 : 3); ++f) {
        const CurveVector& v = f == 0 ? r->terms[k].u : f == 1 ? r->terms[k].v : r->terms[k].w;
        for (std::size_t i = 0; i < v.size(); ++i) {
          RankOneCurveCert c = *r;
          CurveVector& w = f == 0 ? c.terms[k].u : f == 1 ? c.terms[k].v : c.terms[k].w;
          bump(w[i]);
          out.push_back(std::move(c));
        }
      }
    }
    if (r->rescale)
      for (int f = 0; f < 3; ++f)
        for (std::size_t i = 0; i < (*r->rescale)[f].size(); ++i) {
          RankOneCurveCert c = *r;
          (*c.rescale)[f][i] += FieldElem(1);
          out.push_back(std::move(c));
        }
    bump_tensor(r->target, [&](Tensor t) {
      RankOneCurveCert c = *r;
      c.target = std::move(t);
      out.push_back(std::move(c));
    });
  } else if (auto* s = std::get_if<SpanLimitCert>(&cert)) {
    for (std::size_t g = 0; g < s->generators.size(); ++g)
      for (const auto& [e, p] : s->generators[g]) {
        SpanLimitCert c = *s;
        bump(c.generators[g][e]);
        out.push_back(std::move(c));
      }
    for (std::size_t k = 0; k < s->recipes.size(); ++k) {
      for (std::size_t i = 0; i < s->recipes[k].combination.size(); ++i) {
        SpanLimitCert c = *s;
        bump(c.recipes[k].combination[i].second);
        out.push_back(std::move(c));
      }
      for (const auto& [e, v] : s->recipes[k].limit) {
        SpanLimitCert c = *s;
        c.recipes[k].limit[e] += FieldElem(1);
        out.push_back(std::move(c));
      }
    }
  } else {
    const auto& d = std::get<ToricDegenerationCert>(cert);
    for (int f = 0; f < 3; ++f)
      for (std::size_t i = 0; i < d.exponents[f].size(); ++i) {
        ToricDegenerationCert c = d;
        c.exponents[f][i] += 1;
        out.push_back(std::move(c));
      }
    bump_tensor(d.source, [&](Tensor t) {
      ToricDegenerationCert c = d;
      c.source = std::move(t);
      out.push_back(std::move(c));
    });
    bump_tensor(d.target, [&](Tensor t) {
      ToricDegenerationCert c = d;
      c.target = std::move(t);
      out.push_back(std::move(c));
    });
  }
  return out;
}

}  // namespace omegaforge
