#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "omegaforge/certificates/certificates.hpp"
#include "omegaforge/cli/cli.hpp"
#include "omegaforge/exact/serialize.hpp"
#include "omegaforge/laser/laser_json.hpp"

namespace omegaforge {

using nlohmann::json;
namespace fs = std::filesystem;

void RunConfig::validate() const {
  if (!(omega_tol > 0) || !(inner_tol > 0)) throw Error(ErrorKind::BadParams, "tolerances must be positive");
  if (threads < 0) throw Error(ErrorKind::BadParams, "thread cap must be non-negative");
  if (tight_search_bound < 1) throw Error(ErrorKind::BadParams, "tightness search bound must be at least 1");
}

json config_to_json(const RunConfig& c) {
  return {{"command", c.command},
          {"input", c.input},
          {"group", to_string(c.group)},
          {"omega_tol", c.omega_tol},
          {"inner_tol", c.inner_tol},
          {"tight_search_bound", c.tight_search_bound},
          {"penalty_mode", to_string(c.mode)},
          {"presets", c.presets_path.empty() ? default_presets_path() : c.presets_path}};
}

std::string config_hash(const RunConfig& c) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : config_to_json(c).dump()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

json envelope(const std::string& kind, const RunConfig& cfg) {
  return {{"schema_version", 1},
          {"kind", kind},
          {"tool_version", OMEGAFORGE_VERSION},
          {"config_hash", config_hash(cfg)},
          {"config", config_to_json(cfg)}};
}

json witness_to_json(const TightWitness& w) {
  json maps = json::array();
  for (const auto& m : w.maps) {
    json f = json::object();
    for (const auto& [label, v] : m) f[std::to_string(label)] = v;
    maps.push_back(f);
  }
  return {{"r", w.r}, {"bound", w.bound}, {"maps", maps}};
}

json distribution_json(const RationalDistribution& d) {
  json out = json::array();
  for (const auto& [t, q] : d) out.push_back({t, to_string(q)});
  return out;
}

}  // namespace

CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const Error& ex) {
    return {kExitInputError, {{"schema_version", 1}, {"kind", "error"}, {"error", to_string(ex.kind())}, {"message", ex.what()}}};
  } catch (const json::exception& ex) {
    return {kExitInputError, {{"schema_version", 1}, {"kind", "error"}, {"error", "ParseError"}, {"message", ex.what()}}};
  }
}

CommandResult cmd_construct(const std::string& family, const std::map<std::string, int>& params, const RunConfig& cfg) {
  cfg.validate();
  json out = spec_to_json(construct(family, params));
  out["tool_version"] = OMEGAFORGE_VERSION;
  out["config_hash"] = config_hash(cfg);
  return {kExitOk, out};
}

CommandResult cmd_check_blocking(const NamedTensorSpec& spec, const RunConfig& cfg) {
  cfg.validate();
  json out = envelope("blocking_diagnostics", cfg);
  SupportSet phi = support(spec.tensor, spec.blocking);
  out["family"] = spec.family;
  out["support_size"] = phi.size();
  out["support"] = support_to_json(phi);
  auto w = is_tight(phi, cfg.tight_search_bound);
  out["tight"] = w.has_value();
  if (w) out["tight_witness"] = witness_to_json(*w);
  ReconstructibilityResult r = is_reconstructible(phi);
  out["reconstructible"] = r.reconstructible;
  if (r.counterexample)
    out["counterexample"] = {distribution_json(r.counterexample->first), distribution_json(r.counterexample->second)};
  return {kExitOk, out};
}

CommandResult cmd_bound(const NamedTensorSpec& spec, const RunConfig& cfg) {
  cfg.validate();
  auto presets = load_presets(cfg.presets_path.empty() ? default_presets_path() : cfg.presets_path);
  ValuedProblem vp = build_laser_problem(spec, cfg, presets);
  SolveOptions opts;
  opts.omega_tol = cfg.omega_tol;
  opts.optimize.mode = cfg.mode;
  OmegaBoundReport rep = solve_omega(vp.problem, opts);
  json out = envelope("omega_bound", cfg);
  out["family"] = spec.family;
  out["params"] = spec.params;
  out["budget"] = spec.budget;
  out["budget_provenance"] = spec.budget_provenance;
  out["report"] = report_to_json(rep);
  json blocks = json::array();
  for (const auto& [t, v] : vp.problem.values)
    blocks.push_back({{"block", t}, {"alpha", v.alpha}, {"beta", v.beta}, {"provenance", vp.provenance.at(t)}});
  out["blocks"] = blocks;
  if (!rep.reconstructible) {
    out["caveat"] = rep.mode == PenaltyMode::MaxentRestricted
                        ? "support is not reconstructible: the distribution is restricted to the max-entropy family "
                          "for its marginals, where the penalty vanishes"
                        : "support is not reconstructible and the penalty is off: the bound ignores the penalty term";
  }
  return {kExitOk, out};
}

CommandResult cmd_verify(const json& cert_json, const RunConfig& cfg) {
  cfg.validate();
  Certificate cert = certificate_from_json(cert_json);
  CertReport r = verify_certificate(cert);
  json out = envelope("verification", cfg);
  out["result"] = report_to_json(r);
  if (auto* span = std::get_if<SpanLimitCert>(&cert)) out["generators_rank_one"] = generators_rank_one(*span);
  return {r.pass ? kExitOk : kExitVerifyFailed, out};
}

CommandResult cmd_report(const std::string& directory, const RunConfig& cfg) {
  cfg.validate();
  if (!fs::is_directory(directory)) throw Error(ErrorKind::ParseError, "not a directory: " + directory);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(directory))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  json rows = json::array();
  for (const auto& f : files) {
    std::ifstream in(f);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) continue;
    const std::string kind = j.value("kind", std::string());
    if (kind == "omega_bound") {
      json row{{"file", f.filename().string()},
               {"kind", kind},
               {"family", j.value("family", std::string())},
               {"params", j.value("params", json::object())},
               {"omega_star", j.at("report").at("omega_star")},
               {"status", j.at("report").at("status")},
               {"penalty_mode", j.at("report").at("penalty_mode")},
               {"provenance", "computed by laser run, config " + j.value("config_hash", std::string())}};
      if (j.contains("caveat")) row["caveat"] = j["caveat"];
      rows.push_back(row);
    } else if (kind == "verification") {
      rows.push_back({{"file", f.filename().string()},
                      {"kind", kind},
                      {"name", j.at("result").value("name", std::string())},
                      {"pass", j.at("result").at("pass")},
                      {"provenance", "exact verification, config " + j.value("config_hash", std::string())}});
    }
  }
  json out = envelope("summary", cfg);
  out["rows"] = rows;
  return {kExitOk, out};
}

CommandResult cmd_emit_fixtures(const std::string& directory, const RunConfig& cfg) {
  cfg.validate();
  fs::create_directories(directory);
  std::vector<std::pair<std::string, Certificate>> certs;
  for (int n : {2, 5}) certs.emplace_back("strassen_n" + std::to_string(n), build_strassen_cert(n));
  for (int m : {0, 1}) certs.emplace_back("waring_m" + std::to_string(m), build_waring_cert(m));
  for (int m = 1; m <= 5; ++m) certs.emplace_back("span_limit_m" + std::to_string(m), build_hw_span_cert(m));
  certs.emplace_back("a3_toric", build_a3_toric_cert());
  json written = json::array();
  for (const auto& [name, cert] : certs) {
    fs::path p = fs::path(directory) / (name + ".json");
    std::ofstream(p) << certificate_to_json(cert).dump(1) << "\n";
    written.push_back(p.filename().string());
  }
  json out = envelope("fixtures", cfg);
  out["files"] = written;
  return {kExitOk, out};
}

}  // namespace omegaforge
