#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "omegaforge/algebra/algebra.hpp"
#include "omegaforge/cli/cli.hpp"

using namespace omegaforge;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void check(int id, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& ex) {
    o = {false, std::string("exception: ") + ex.what()};
  }
  std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  if (!o.pass) ++failures;
  std::printf("AC%d %s %s (%.2f s)\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), took.count());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

struct Bound {
  double omega;
  double seconds;
  nlohmann::json out;
};

Bound run_bound(const NamedTensorSpec& spec, PenaltyMode mode = PenaltyMode::MaxentRestricted) {
  RunConfig cfg;
  cfg.mode = mode;
  auto t = std::chrono::steady_clock::now();
  CommandResult r = cmd_bound(spec, cfg);
  return {r.output.at("report").at("omega_star").get<double>(), seconds_since(t), r.output};
}

std::string fmt(const char* f, double a, double b = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

bool same_marginals(const RationalDistribution& p, const RationalDistribution& q) {
  for (int f = 0; f < 3; ++f) {
    std::map<int, Rational> mp, mq;
    for (const auto& [t, x] : p) mp[t[f]] += x;
    for (const auto& [t, x] : q) mq[t[f]] += x;
    for (auto& [l, x] : mp)
      if (mq[l] != x) return false;
    for (auto& [l, x] : mq)
      if (mp[l] != x) return false;
  }
  return true;
}

bool is_distribution(const RationalDistribution& p) {
  Rational total = 0;
  for (const auto& [t, x] : p) {
    if (sgn(x) < 0) return false;
    total += x;
  }
  return total == 1;
}

Distribution random_distribution(const SupportSet& s, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  Distribution d = Distribution::uniform(s);
  double total = 0;
  for (auto& w : d.weights) total += (w = e(rng));
  for (auto& w : d.weights) w /= total;
  return d;
}

const SupportSet kPhi{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
const SupportSet kPhiPrime{{2, 1, 0}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {0, 1, 2}};

}  // namespace

int main() {
  check(1, [] {
    Bound b = run_bound(strassen(5));
    double want = std::log(54.0) / std::log(5.0);
    return Outcome{std::fabs(b.omega - want) <= 1e-4 && b.seconds < 1,
                   fmt("strassen(5) omega*=%.6f target=%.6f", b.omega, want)};
  });

  check(2, [] {
    Bound b = run_bound(hw_tensor(7));
    return Outcome{b.omega <= 2.450 && b.omega >= 2.40 && b.seconds < 10, fmt("hw(7) omega*=%.6f", b.omega)};
  });

  check(3, [] {
    Bound b = run_bound(smoothable_tensor(4));
    return Outcome{b.omega <= 2.431 && b.omega >= 2.40 && b.seconds < 10, fmt("smoothable(4) omega*=%.6f", b.omega)};
  });

  check(4, [] {
    Bound b = run_bound(a3_tensor());
    bool caveat = b.out.contains("caveat");
    return Outcome{b.omega <= 2.565 && caveat && b.seconds < 30,
                   fmt("a3 maxent-restricted omega*=%.6f caveat=%.0f", b.omega, caveat)};
  });

  check(5, [] {
    NamedTensorSpec s = hw_tensor(7);
    Tensor corner = block_component(s.tensor, s.blocking, {0, 0, 2});
    ValueBound v = nested_value_bound(corner, singleton_blocking(corner.dims()), Group::Cyclic3);
    return Outcome{v.alpha >= std::log(12.0) - 1e-9 && v.beta == 0,
                   fmt("corner alpha=%.12f beta=%g", v.alpha, v.beta)};
  });

  check(6, [] {
    auto t = std::chrono::steady_clock::now();
    bool ok = true;
    long corruptions = 0, caught = 0;
    std::string failed;
    for (const auto& name : fixture_names()) {
      Certificate c = load_fixture(name);
      if (!verify_certificate(c).pass) {
        ok = false;
        failed += " " + name;
      }
      auto bad = single_entry_corruptions(c);
      for (const auto& r : verify_all(bad)) caught += !r.pass;
      corruptions += static_cast<long>(bad.size());
    }
    double secs = seconds_since(t);
    ok = ok && caught == corruptions && secs < 10;
    return Outcome{ok, std::to_string(fixture_names().size()) + " fixtures, " + std::to_string(caught) + "/" +
                           std::to_string(corruptions) + " corruptions rejected" + failed};
  });

  check(7, [] {
    bool ok = true;
    for (int m = 1; m <= 5; ++m) {
      BorderRankStatus s = border_rank_status(hw_tensor(m), {build_hw_span_cert(m)});
      ok = ok && s.lower == 3 * m + 5 && s.upper == 3 * m + 5 && s.tight;
    }
    for (int n = 2; n <= 6; ++n) {
      BorderRankStatus s = border_rank_status(strassen(n), {build_strassen_cert(n)});
      ok = ok && s.lower == n + 1 && s.upper == n + 1 && s.tight;
    }
    return Outcome{ok, "hw m=1..5 and strassen n=2..6"};
  });

  check(8, [] {
    bool phi = is_reconstructible(kPhi).reconstructible;
    auto prime = is_reconstructible(kPhiPrime);
    bool pair = prime.counterexample && is_distribution(prime.counterexample->first) &&
                is_distribution(prime.counterexample->second) &&
                prime.counterexample->first != prime.counterexample->second &&
                same_marginals(prime.counterexample->first, prime.counterexample->second);
    TightWitness w{1, 2, {}};
    for (int l = 0; l <= 2; ++l) {
      w.maps[0][l] = {l};
      w.maps[1][l] = {l};
      w.maps[2][l] = {l - 2};
    }
    bool witness = validate_tight_witness(kPhi, w);
    NamedTensorSpec a3 = a3_tensor();
    bool a3_nonrec = !is_reconstructible(support(a3.tensor, a3.blocking)).reconstructible;
    bool ok = phi && !prime.reconstructible && pair && witness && a3_nonrec;
    return Outcome{ok, std::string("phi=") + (phi ? "rec" : "nonrec") + " phi'=" +
                           (prime.reconstructible ? "rec" : "nonrec") + " pair=" + (pair ? "valid" : "invalid") +
                           " witness=" + (witness ? "ok" : "bad") + " a3=" + (a3_nonrec ? "nonrec" : "rec")};
  });

  check(9, [] {
    bool ok = true;
    for (int n = 2; n <= 8; ++n) ok = ok && hilbert_function(cw_algebra(n)) == std::vector<int>{1, n, 1};
    for (int m = 1; m <= 5; ++m) ok = ok && hilbert_function(smoothable_algebra(m)) == std::vector<int>{1, 3 * m, 2};
    ok = ok && hilbert_function(monomial_apolar_algebra({1, 1, 1})) == std::vector<int>{1, 3, 3, 1};
    // apolar(xy) in the basis 1, x + y/2, i·x − (i/2)·y, xy is cw_algebra(2).
    const FieldElem i = FieldElem::imag_unit(), h = FieldElem(make_rational(1, 2)), o(1), z(0);
    Matrix<FieldElem> p{{o, z, z, z}, {z, h, o, z}, {z, -(h * i), i, z}, {z, z, z, o}};
    Matrix<FieldElem> c{{o, z, z, z}, {z, o, h, z}, {z, i, -(h * i), z}, {z, z, z, o}};
    Tensor xy = apply_restriction(multiplication_tensor(monomial_apolar_algebra({1, 1})), FactorMaps{{p, p, c}});
    ok = ok && equal_up_to_permutation(xy, cw_big(2).tensor);
    Algebra a = cw_algebra(2), b = monomial_apolar_algebra({1, 1});
    ok = ok && multiplication_tensor(tensor_product(a, b)).entries() ==
                   kronecker(multiplication_tensor(a), multiplication_tensor(b)).entries();
    return Outcome{ok, "hilbert functions, apolar(xy) ~ T_CW,2, tensor product = kronecker"};
  });

  check(10, [] {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> label(0, 2);
    std::vector<LaserProblem> probs;
    auto presets = load_presets(default_presets_path());
    for (const auto& spec : {strassen(5), hw_tensor(7), smoothable_tensor(2)})
      probs.push_back(build_laser_problem(spec, RunConfig{}, presets).problem);
    LaserProblem prime;
    prime.support = kPhiPrime;
    for (const auto& t : kPhiPrime) prime.values[t] = {0.1 * t[0], 0.2 * t[2]};
    probs.push_back(prime);
    for (int k = 1; k <= 6; ++k) {
      LaserProblem p;
      while (static_cast<int>(p.support.size()) < k) p.support.insert({label(rng), label(rng), label(rng)});
      for (const auto& t : p.support) p.values[t] = {u(rng), u(rng)};
      probs.push_back(p);
    }
    double worst_chord = 0;
    for (int n = 0; n < 1000; ++n) {
      const LaserProblem& p = probs[n % probs.size()];
      PenaltyMode mode = is_reconstructible(p.support).reconstructible ? PenaltyMode::MaxentRestricted : PenaltyMode::Off;
      Distribution a = random_distribution(p.support, rng), b = random_distribution(p.support, rng), c = a;
      double lam = u(rng), w = 2 + u(rng);
      for (std::size_t k = 0; k < c.weights.size(); ++k) c.weights[k] = lam * a.weights[k] + (1 - lam) * b.weights[k];
      double gap = lam * laser_rhs(p, a, w, mode) + (1 - lam) * laser_rhs(p, b, w, mode) - laser_rhs(p, c, w, mode);
      worst_chord = std::max(worst_chord, gap);
    }
    double worst_grid = -1e300;
    OptimizeOptions off;
    off.mode = PenaltyMode::Off;
    for (const auto& p : probs)
      if (p.support.size() <= 6)
        worst_grid = std::max(worst_grid, oracle::grid_max(p, 2.4) - optimize_distribution(p, 2.4, off).value);
    bool decreasing = true;
    for (const std::vector<double>& q : {std::vector<double>{0.5, 0.3, 0.2}, std::vector<double>{0.1, 0.9},
                                         std::vector<double>{0.25, 0.25, 0.4, 0.1}}) {
      double prev = 1e300;
      for (long n : {10L, 100L, 1000L}) {
        std::vector<long> counts;
        long used = 0;
        for (std::size_t k = 0; k + 1 < q.size(); ++k) used += counts.emplace_back(std::lround(q[k] * n));
        counts.push_back(n - used);
        double g = multinomial_entropy_gap(counts, n);
        decreasing = decreasing && g < prev;
        prev = g;
      }
    }
    bool ok = worst_chord <= 1e-9 && worst_grid <= 1e-9 && decreasing;
    return Outcome{ok, fmt("worst chord violation %.2e, worst grid excess %.2e", worst_chord, worst_grid) +
                           (decreasing ? ", entropy gaps decreasing" : ", entropy gaps not decreasing")};
  });

  return failures == 0 ? 0 : 1;
}
