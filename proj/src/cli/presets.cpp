#include <algorithm>
#include <cmath>
#include <fstream>

#include "omegaforge/cli/cli.hpp"

namespace omegaforge {

std::string default_presets_path() { return std::string(OMEGAFORGE_DATA_DIR) + "/value_presets.json"; }

std::vector<ValuePreset> presets_from_json(const nlohmann::json& j) {
  std::vector<ValuePreset> out;
  try {
    if (j.value("group", std::string("cyclic3")) != "cyclic3")
      throw Error(ErrorKind::ParseError, "presets are defined for the cyclic group only");
    for (const auto& e : j.at("entries")) {
      ValuePreset p;
      p.family = e.at("family").get<std::string>();
      p.blocks = e.at("blocks").get<std::vector<Triple>>();
      p.type = e.at("type").get<std::string>();
      p.source = e.value("source", std::string());
      if (p.type == "affine") {
        p.constant = e.at("constant").get<std::vector<long>>();
        p.base = e.at("base").get<std::vector<long>>();
      } else if (p.type == "nested") {
        p.inner = blocking_from_json(e.at("inner"));
      } else {
        throw Error(ErrorKind::ParseError, "unknown preset type: " + p.type);
      }
      out.push_back(std::move(p));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("presets JSON: ") + ex.what());
  }
  return out;
}

std::vector<ValuePreset> load_presets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open presets file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("presets JSON: ") + ex.what());
  }
  return presets_from_json(j);
}

namespace {

double evaluate(const std::vector<long>& poly, long m) {
  double v = 0, power = 1;
  for (long c : poly) {
    v += static_cast<double>(c) * power;
    power *= static_cast<double>(m);
  }
  return v;
}

const ValuePreset* find_preset(const std::vector<ValuePreset>& presets, const std::string& family, const Triple& t) {
  for (const auto& p : presets)
    if (p.family == family && std::find(p.blocks.begin(), p.blocks.end(), t) != p.blocks.end()) return &p;
  return nullptr;
}

std::string triple_name(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

}  // namespace

ValuedProblem build_laser_problem(const NamedTensorSpec& spec, const RunConfig& cfg,
                                  const std::vector<ValuePreset>& presets) {
  spec.blocking.validate(spec.tensor.dims());
  ValuedProblem out;
  LaserProblem& prob = out.problem;
  prob.support = support(spec.tensor, spec.blocking);
  prob.group = cfg.group;
  prob.brank_budget = spec.budget;
  if (!is_tight(prob.support, cfg.tight_search_bound)) throw Error(ErrorKind::NotTight, "support is not tight");
  const bool use_presets = cfg.group == Group::Cyclic3;
  auto m_it = spec.params.find("m");
  const long m = m_it == spec.params.end() ? 0 : m_it->second;
  for (const auto& t : prob.support) {
    const ValuePreset* p = use_presets ? find_preset(presets, spec.family, t) : nullptr;
    if (p && p->type == "affine") {
      const double c = evaluate(p->constant, m), b = evaluate(p->base, m);
      if (c <= 0 || b <= 0) throw Error(ErrorKind::BadParams, "preset value is not positive at this m");
      prob.values[t] = {std::log(c), std::log(b)};
      out.provenance[t] = "preset: " + p->source;
      continue;
    }
    Tensor block = block_component(spec.tensor, spec.blocking, t);
    if (p) {
      NestedOptions nopts;
      nopts.tight_search_bound = cfg.tight_search_bound;
      nopts.optimize.mode = cfg.mode;
      prob.values[t] = nested_value_bound(block, *p->inner, cfg.group, nopts);
      out.provenance[t] = "nested: " + p->source;
      continue;
    }
    auto abc = recognize_matmult(block);
    if (!abc) throw Error(ErrorKind::MissingValueBound, "no value for block " + triple_name(t));
    prob.values[t] = matmult_value((*abc)[0], (*abc)[1], (*abc)[2], cfg.group);
    out.provenance[t] = "recognized M<" + std::to_string((*abc)[0]) + "," + std::to_string((*abc)[1]) + "," +
                        std::to_string((*abc)[2]) + ">";
  }
  return out;
}

}  // namespace omegaforge
