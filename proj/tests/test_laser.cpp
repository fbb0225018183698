#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "omegaforge/cli/cli.hpp"
#include "omegaforge/laser/laser_json.hpp"

using namespace omegaforge;

namespace {

const SupportSet kPhi{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
const SupportSet kPhiPrime{{2, 1, 0}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {0, 1, 2}};

LaserProblem hw_problem(int m) {
  LaserProblem p;
  p.support = kPhi;
  for (const auto& t : kPhi)
    p.values[t] = std::count(t.begin(), t.end(), 2) ? ValueBound{std::log(12.0), 0} : ValueBound{std::log(4.0), std::log(2.0 * m)};
  p.brank_budget = 3 * m + 5;
  return p;
}

LaserProblem strassen_problem(int n) {
  LaserProblem p;
  p.support = {{0, 1, 1}, {1, 0, 1}};
  for (const auto& t : p.support) p.values[t] = {0, std::log(static_cast<double>(n))};
  p.brank_budget = n + 1;
  return p;
}

LaserProblem corner_problem() {
  NamedTensorSpec s = hw_tensor(1);
  Tensor corner = block_component(s.tensor, s.blocking, {0, 0, 2});
  LaserProblem p;
  p.support = support(corner, singleton_blocking(corner.dims()));
  for (const auto& t : p.support) p.values[t] = {0, 0};
  return p;
}

Distribution random_distribution(const SupportSet& s, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  Distribution d = Distribution::uniform(s);
  double total = 0;
  for (auto& w : d.weights) total += (w = e(rng));
  for (auto& w : d.weights) w /= total;
  return d;
}

LaserProblem random_problem(std::mt19937_64& rng, int size) {
  std::uniform_int_distribution<int> label(0, 2);
  std::uniform_real_distribution<double> val(0.0, 1.5);
  LaserProblem p;
  while (static_cast<int>(p.support.size()) < size) p.support.insert({label(rng), label(rng), label(rng)});
  for (const auto& t : p.support) p.values[t] = {val(rng), val(rng)};
  return p;
}

}  // namespace

TEST(Entropy, Basics) {
  EXPECT_NEAR(entropy(std::vector<double>{0.5, 0.5}), std::log(2.0), 1e-15);
  EXPECT_EQ(entropy(std::vector<double>{1.0}), 0.0);
  EXPECT_THROW(entropy(std::vector<double>{0.7, 0.7}), Error);
  EXPECT_THROW(entropy(std::vector<double>{1.5, -0.5}), Error);
  Distribution d = Distribution::uniform({{0, 1, 1}, {1, 0, 1}});
  Marginals m = d.marginals();
  EXPECT_NEAR(entropy(m[0]), std::log(2.0), 1e-15);
  EXPECT_NEAR(entropy(m[1]), std::log(2.0), 1e-15);
  EXPECT_EQ(entropy(m[2]), 0.0);
}

TEST(LaserRhs, KnownValues) {
  LaserProblem s = strassen_problem(5);
  for (double w : {2.0, 2.4, 3.0})
    EXPECT_NEAR(laser_rhs(s, Distribution::uniform(s.support), w), 2 * std::log(2.0) + w * std::log(5.0), 1e-12);
  LaserProblem c = corner_problem();
  Distribution d = Distribution::uniform(c.support);
  for (std::size_t k = 0; k < d.triples.size(); ++k) d.weights[k] = d.triples[k][2] == 0 ? 1.0 / 6 : 1.0 / 3;
  EXPECT_NEAR(laser_rhs(c, d, 2.5), std::log(12.0), 1e-12);
  LaserProblem h = hw_problem(7);
  std::map<Triple, double> point{{{0, 0, 2}, 1.0}};
  EXPECT_NEAR(laser_rhs(h, Distribution::from_map(point), 2.3), std::log(12.0), 1e-12);
  LaserProblem missing = h;
  missing.values.erase({0, 1, 1});
  try {
    laser_rhs(missing, Distribution::uniform(h.support), 2.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingValueBound);
  }
}

TEST(LaserRhs, ConcaveAlongChords) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<LaserProblem> probs{hw_problem(7), strassen_problem(5), corner_problem()};
  for (int k = 1; k <= 6; ++k) probs.push_back(random_problem(rng, k));
  for (int n = 0; n < 1000; ++n) {
    const LaserProblem& p = probs[n % probs.size()];
    PenaltyMode mode = is_reconstructible(p.support).reconstructible ? PenaltyMode::MaxentRestricted : PenaltyMode::Off;
    Distribution a = random_distribution(p.support, rng), b = random_distribution(p.support, rng), c = a;
    double lam = u(rng), w = 2 + u(rng);
    for (std::size_t k = 0; k < c.weights.size(); ++k) c.weights[k] = lam * a.weights[k] + (1 - lam) * b.weights[k];
    double mid = laser_rhs(p, c, w, mode);
    double chord = lam * laser_rhs(p, a, w, mode) + (1 - lam) * laser_rhs(p, b, w, mode);
    EXPECT_GE(mid, chord - 1e-9);
  }
}

TEST(MaxEntropy, Properties) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 10; ++n) {
    Distribution p = random_distribution(kPhi, rng);
    Distribution q = max_entropy_with_marginals(kPhi, p.marginals());
    for (std::size_t k = 0; k < p.weights.size(); ++k) EXPECT_NEAR(q.weights[k], p.weights[k], 1e-8);
    EXPECT_NEAR(gamma_penalty(kPhi, p), 0.0, 1e-9);
  }
  Distribution uni = Distribution::uniform(kPhiPrime);
  Distribution q = max_entropy_with_marginals(kPhiPrime, uni.marginals());
  for (double w : q.weights) EXPECT_NEAR(w, 1.0 / 6, 1e-10);
  Distribution single = max_entropy_with_marginals({{1, 2, 0}}, Distribution::uniform({{1, 2, 0}}).marginals());
  EXPECT_NEAR(single.weights[0], 1.0, 1e-15);
  Marginals bad = uni.marginals();
  bad[0][7] = 0.5;
  EXPECT_THROW(max_entropy_with_marginals(kPhiPrime, bad), Error);
}

TEST(Penalty, Values) {
  std::map<Triple, double> orbit{{{0, 1, 2}, 1.0 / 3}, {{2, 0, 1}, 1.0 / 3}, {{1, 2, 0}, 1.0 / 3}};
  EXPECT_NEAR(gamma_penalty(kPhiPrime, Distribution::from_map(orbit)), std::log(2.0), 1e-9);
  std::map<Triple, double> point{{{0, 1, 2}, 1.0}};
  EXPECT_NEAR(gamma_penalty(kPhiPrime, Distribution::from_map(point)), 0.0, 1e-12);
  std::mt19937_64 rng(9);
  for (int n = 0; n < 20; ++n) EXPECT_GE(gamma_penalty(kPhiPrime, random_distribution(kPhiPrime, rng)), 0.0);
}

TEST(Optimize, KnownOptima) {
  OptimizeResult s = optimize_distribution(strassen_problem(5), 2.5);
  for (double w : s.p.weights) EXPECT_NEAR(w, 0.5, 1e-6);
  LaserProblem single;
  single.support = {{0, 0, 0}};
  single.values[{0, 0, 0}] = {1.0, 0.5};
  OptimizeResult r = optimize_distribution(single, 2.2);
  EXPECT_NEAR(r.p.weights[0], 1.0, 1e-12);
  EXPECT_NEAR(r.value, 2.1, 1e-12);
  OptimizeResult c = optimize_distribution(corner_problem(), 2.0);
  EXPECT_NEAR(c.value, std::log(12.0), 1e-9);
}

TEST(Optimize, BeatsGridOracle) {
  std::vector<LaserProblem> probs{strassen_problem(5), corner_problem(), hw_problem(7)};
  std::mt19937_64 rng(13);
  for (int k = 1; k <= 5; ++k) probs.push_back(random_problem(rng, k));
  LaserProblem prime;
  prime.support = kPhiPrime;
  for (const auto& t : kPhiPrime) prime.values[t] = {0.1 * t[0], 0.2 * t[2]};
  probs.push_back(prime);
  OptimizeOptions off;
  off.mode = PenaltyMode::Off;
  for (const auto& p : probs)
    for (double w : {2.0, 2.5}) {
      double got = optimize_distribution(p, w, off).value;
      EXPECT_GE(got, oracle::grid_max(p, w) - 1e-9);
    }
}

TEST(Solve, StrassenClosedForm) {
  const double want = std::log(54.0) / std::log(5.0);
  OmegaBoundReport r = solve_omega(strassen_problem(5));
  EXPECT_EQ(r.status, "ok");
  EXPECT_NEAR(r.omega_star, want, 1e-6);
  EXPECT_NEAR(schonhage_solve({{5, 5, 5, 4}}, 216), want, 1e-9);
  EXPECT_NEAR(r.omega_star, schonhage_solve({{5, 5, 5, 4}}, 216), 1e-6);
}

TEST(Solve, HwAndSentinels) {
  OmegaBoundReport r = solve_omega(hw_problem(7));
  EXPECT_LE(r.omega_star, 2.45);
  EXPECT_GE(r.omega_star, 2.40);
  EXPECT_LE(std::fabs(r.residual), 1e-6 * 3 + 1e-9);
  OptimizeResult at = optimize_distribution(hw_problem(7), r.omega_star);
  EXPECT_NEAR(at.value, 3 * std::log(26.0), 1e-4);
  LaserProblem flat = hw_problem(7);
  for (auto& [t, v] : flat.values) v.beta = 0;
  try {
    solve_omega(flat);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unbounded);
  }
  EXPECT_THROW(schonhage_solve({{1, 1, 1, 1}}, 1), Error);
  EXPECT_NEAR(schonhage_solve({{3, 3, 3, 1}}, 27), 3.0, 1e-9);
}

TEST(Solve, MonotoneInOmega) {
  LaserProblem p = hw_problem(3);
  double prev = -1e300;
  for (double w = 2.0; w <= 3.0; w += 0.1) {
    double v = optimize_distribution(p, w).value;
    EXPECT_GE(v, prev - 1e-12);
    prev = v;
  }
}

TEST(Nested, CornerAndMatmult) {
  NamedTensorSpec s = hw_tensor(7);
  Tensor corner = block_component(s.tensor, s.blocking, {0, 0, 2});
  ValueBound v = nested_value_bound(corner, singleton_blocking(corner.dims()), Group::Cyclic3);
  EXPECT_GE(v.alpha, std::log(12.0) - 1e-9);
  EXPECT_EQ(v.beta, 0.0);
  for (int m = 2; m <= 4; ++m) {
    Tensor mm = matmult_tensor(1, m, 1);
    ValueBound w = nested_value_bound(mm, singleton_blocking(mm.dims()), Group::Cyclic3);
    EXPECT_NEAR(w.alpha, 0.0, 1e-12);
    EXPECT_NEAR(w.beta, std::log(static_cast<double>(m)), 1e-12);
  }
  Tensor bad({2, 2, 2});
  bad.set({0, 0, 0}, FieldElem(1));
  bad.set({1, 0, 0}, FieldElem(1));
  EXPECT_THROW(nested_value_bound(bad, singleton_blocking(bad.dims()), Group::Cyclic3), Error);
}

TEST(Recognize, MatmultBlocks) {
  NamedTensorSpec ta = smoothable_tensor(2);
  auto abc = recognize_matmult(block_component(ta.tensor, ta.blocking, {0, 1, 1}));
  ASSERT_TRUE(abc);
  EXPECT_EQ((*abc)[0] * (*abc)[1] * (*abc)[2], 6);
  EXPECT_EQ(std::count(abc->begin(), abc->end(), 1), 2);
  auto two = recognize_matmult(matmult_tensor(2, 1, 1));
  ASSERT_TRUE(two);
  EXPECT_EQ(*two, (std::array<int, 3>{2, 1, 1}));
  Tensor p = matmult_tensor(2, 2, 1);
  p.set({0, 0, 0}, FieldElem(2));
  EXPECT_FALSE(recognize_matmult(p));
  Tensor q = matmult_tensor(2, 2, 2);
  q.set({3, 0, 1}, FieldElem(1));
  EXPECT_FALSE(recognize_matmult(q));
}

TEST(ProblemJson, RoundTrip) {
  LaserProblem p = hw_problem(2);
  LaserProblem q = problem_from_json(problem_to_json(p));
  EXPECT_EQ(q.support, p.support);
  EXPECT_EQ(q.brank_budget, p.brank_budget);
  for (const auto& [t, v] : p.values) {
    EXPECT_EQ(q.values.at(t).alpha, v.alpha);
    EXPECT_EQ(q.values.at(t).beta, v.beta);
  }
}

TEST(Snapshot, SumsToOne) {
  std::mt19937_64 rng(1);
  Distribution d = random_distribution(kPhi, rng);
  Rational total = 0;
  for (const auto& [t, q] : d.snapshot()) total += q;
  EXPECT_LT(std::fabs(total.get_d() - 1), 1e-11);
}
