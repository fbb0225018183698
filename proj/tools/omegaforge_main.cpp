#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "omegaforge/algebra/algebra.hpp"
#include "omegaforge/cli/cli.hpp"
#include "omegaforge/parallel.hpp"
#include "omegaforge/tensor/tensor_json.hpp"

using namespace omegaforge;
using nlohmann::json;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorKind::ParseError, "invalid JSON in " + path);
  return j;
}

int emit(const CommandResult& r, const std::string& out) {
  const std::string text = r.output.dump(2);
  if (out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return kExitInputError;
    }
    f << text << "\n";
  }
  if (r.exit_code == kExitInputError && r.output.contains("message"))
    std::cerr << r.output["message"].get<std::string>() << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"omegaforge: tensor constructions, laser bounds and certificate checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", OMEGAFORGE_VERSION);

  RunConfig cfg;
  std::string group = "cyclic3", mode = "maxent-restricted";
  app.add_option("--group", group, "Symmetry group")->check(CLI::IsMember({"trivial", "cyclic3", "s3"}));
  app.add_option("--omega-tol", cfg.omega_tol, "Bisection tolerance for omega");
  app.add_option("--inner-tol", cfg.inner_tol, "Inner optimisation tolerance");
  app.add_option("--penalty-mode", mode, "Penalty mode")->check(CLI::IsMember({"maxent-restricted", "off"}));
  app.add_option("--threads", cfg.threads, "Thread cap (0 = OMEGAFORGE_THREADS or all cores)");
  app.add_option("--out", cfg.output, "Output file (default stdout)");
  app.add_option("--presets", cfg.presets_path, "Value preset file");
  app.add_option("--tight-bound", cfg.tight_search_bound, "Search bound for tightness witnesses");

  std::string family, input;
  int n = -1, m = -1, a = -1, b = -1, c = -1;
  auto* construct = app.add_subcommand("construct", "Write a named tensor with blocking and budget");
  construct->add_option("family", family, "strassen, cw-small, cw-big, hw, smoothable, a3, matmult")->required();
  construct->add_option("--n", n);
  construct->add_option("--m", m);
  construct->add_option("--a", a);
  construct->add_option("--b", b);
  construct->add_option("--c", c);

  auto* check = app.add_subcommand("check-blocking", "Support, tightness and reconstructibility");
  check->add_option("tensor", input)->required();
  auto* bound = app.add_subcommand("bound", "Laser bound on omega");
  bound->add_option("tensor", input)->required();
  auto* verify = app.add_subcommand("verify", "Verify a certificate exactly");
  verify->add_option("certificate", input)->required();
  auto* report = app.add_subcommand("report", "Summarise the reports in a directory");
  report->add_option("directory", input)->required();
  auto* fixtures = app.add_subcommand("emit-fixtures", "Write the certificate fixtures");
  fixtures->add_option("directory", input)->required();

  std::string algebra_kind;
  std::vector<int> exponents;
  bool as_tensor = false;
  auto* algebra = app.add_subcommand("algebra", "Write an algebra (cw, cw-paired, smoothable, apolar)");
  algebra->add_option("kind", algebra_kind)->required()->check(CLI::IsMember({"cw", "cw-paired", "smoothable", "apolar"}));
  algebra->add_option("--n", n);
  algebra->add_option("--m", m);
  algebra->add_option("--exponents", exponents, "Monomial exponents for apolar");
  algebra->add_flag("--tensor", as_tensor, "Emit the multiplication tensor instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  cfg.input = input;

  CommandResult result = guarded([&]() -> CommandResult {
    cfg.group = parse_group(group);
    cfg.mode = parse_penalty_mode(mode);
    cfg.validate();
    if (cfg.threads > 0) set_thread_cap(cfg.threads);
    if (sub == construct) {
      std::map<std::string, int> params;
      for (auto [key, v] : {std::pair{"n", n}, {"m", m}, {"a", a}, {"b", b}, {"c", c}})
        if (v >= 0) params[key] = v;
      return cmd_construct(family, params, cfg);
    }
    if (sub == check) return cmd_check_blocking(spec_from_json(read_json(input)), cfg);
    if (sub == bound) return cmd_bound(spec_from_json(read_json(input)), cfg);
    if (sub == verify) return cmd_verify(read_json(input), cfg);
    if (sub == report) return cmd_report(input, cfg);
    if (sub == fixtures) return cmd_emit_fixtures(input, cfg);
    Algebra alg;
    if (algebra_kind == "cw") alg = cw_algebra(n);
    else if (algebra_kind == "cw-paired") alg = cw_algebra_paired(n);
    else if (algebra_kind == "smoothable") alg = smoothable_algebra(m);
    else alg = monomial_apolar_algebra(exponents);
    return {kExitOk, as_tensor ? tensor_to_json(multiplication_tensor(alg)) : algebra_to_json(alg)};
  });
  return emit(result, cfg.output);
}
