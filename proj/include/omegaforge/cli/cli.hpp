#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "omegaforge/constructions/constructions.hpp"
#include "omegaforge/laser/laser.hpp"

namespace omegaforge {

enum ExitCode { kExitOk = 0, kExitVerifyFailed = 2, kExitInputError = 3 };

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;
  Group group = Group::Cyclic3;
  double omega_tol = 1e-6;
  double inner_tol = 1e-9;
  int threads = 0;
  int tight_search_bound = 8;
  PenaltyMode mode = PenaltyMode::MaxentRestricted;
  std::string presets_path;

  void validate() const;
};

nlohmann::json config_to_json(const RunConfig& c);
/// FNV-1a 64 of the canonical config JSON, as 16 hex digits.
std::string config_hash(const RunConfig& c);

struct ValuePreset {
  std::string family;
  std::vector<Triple> blocks;
  std::string type;                       // affine or nested
  std::vector<long> constant, base;       // polynomials in m, lowest degree first
  std::optional<Blocking> inner;
  std::string source;
};

std::string default_presets_path();
std::vector<ValuePreset> load_presets(const std::string& path);
std::vector<ValuePreset> presets_from_json(const nlohmann::json& j);

struct ValuedProblem {
  LaserProblem problem;
  std::map<Triple, std::string> provenance;
};

/// Support, tightness check and block values for a named tensor. Throws
/// NotTight or MissingValueBound.
ValuedProblem build_laser_problem(const NamedTensorSpec& spec, const RunConfig& cfg,
                                  const std::vector<ValuePreset>& presets);

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json output;
};

CommandResult cmd_construct(const std::string& family, const std::map<std::string, int>& params, const RunConfig& cfg);
CommandResult cmd_check_blocking(const NamedTensorSpec& spec, const RunConfig& cfg);
CommandResult cmd_bound(const NamedTensorSpec& spec, const RunConfig& cfg);
CommandResult cmd_verify(const nlohmann::json& cert, const RunConfig& cfg);
CommandResult cmd_report(const std::string& directory, const RunConfig& cfg);
/// Writes the shipped certificate fixtures into a directory.
CommandResult cmd_emit_fixtures(const std::string& directory, const RunConfig& cfg);

/// Runs a command body, mapping Error to exit code 3 with an error object.
CommandResult guarded(const std::function<CommandResult()>& body);

}  // namespace omegaforge
