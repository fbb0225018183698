#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "omegaforge/constructions/constructions.hpp"

using namespace omegaforge;

namespace {

const SupportSet kPhi{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
const SupportSet kPhiPrime{{2, 1, 0}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {0, 1, 2}};

// Brute-force oracle: does a diagonal subset of Φ admit α+β+γ = 0 on Δ and
// ≥ 1 off Δ with values in [−b, b]?
bool brute_degeneration(const SupportSet& delta, const SupportSet& phi, int b) {
  std::array<std::vector<int>, 3> labels;
  for (int f = 0; f < 3; ++f) labels[f] = labels_of(phi, f);
  std::array<std::map<int, int>, 3> val;
  std::vector<std::pair<int, int>> slots;
  for (int f = 0; f < 3; ++f)
    for (int l : labels[f]) slots.push_back({f, l});
  auto assigned = [&](const Triple& t, std::size_t k) {
    for (int f = 0; f < 3; ++f) {
      auto pos = std::find(slots.begin(), slots.end(), std::pair<int, int>{f, t[f]}) - slots.begin();
      if (static_cast<std::size_t>(pos) >= k) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t k) {
    for (const auto& t : phi) {
      if (!assigned(t, k)) continue;
      int s = val[0][t[0]] + val[1][t[1]] + val[2][t[2]];
      if (delta.count(t) ? s != 0 : s < 1) return false;
    }
    if (k == slots.size()) return true;
    for (int v = -b; v <= b; ++v) {
      val[slots[k].first][slots[k].second] = v;
      if (go(k + 1)) return true;
    }
    return false;
  };
  return go(0);
}

}  // namespace

TEST(Support, NamedTensors) {
  for (int n = 1; n <= 4; ++n) {
    NamedTensorSpec s = strassen(n);
    EXPECT_EQ(support(s.tensor, s.blocking), (SupportSet{{0, 1, 1}, {1, 0, 1}}));
  }
  NamedTensorSpec h = hw_tensor(2);
  EXPECT_EQ(support(h.tensor, h.blocking), kPhi);
  EXPECT_TRUE(support(Tensor(h.tensor.dims()), h.blocking).empty());
  NamedTensorSpec h0 = hw_tensor(0);
  EXPECT_EQ(support(h0.tensor, h0.blocking), (SupportSet{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
}

TEST(Support, BlocksSumToTensor) {
  NamedTensorSpec s = hw_tensor(1);
  NamedTensorSpec a = a3_tensor();
  for (const NamedTensorSpec* spec : {&s, &a}) {
    std::size_t total = 0;
    for (const auto& t : support(spec->tensor, spec->blocking)) total += block_component(spec->tensor, spec->blocking, t).size();
    EXPECT_EQ(total, spec->tensor.size());
  }
  NamedTensorSpec st = strassen(4);
  Tensor b = block_component(st.tensor, st.blocking, {0, 1, 1});
  EXPECT_TRUE(equal_up_to_permutation(b, matmult_tensor(1, 1, 4)));
  EXPECT_TRUE(block_component(st.tensor, st.blocking, {0, 0, 1}).empty());
}

TEST(Blocking, ValidationAndJson) {
  Blocking d = hw_default_blocking(1);
  EXPECT_NO_THROW(d.validate({8, 8, 8}));
  EXPECT_THROW(d.validate({9, 8, 8}), Error);
  EXPECT_EQ(blocking_to_json(blocking_from_json(blocking_to_json(d))), blocking_to_json(d));
  EXPECT_EQ(support_from_json(support_to_json(kPhi)), kPhi);
}

TEST(Tightness, Witnesses) {
  auto w = is_tight(kPhi, 4);
  ASSERT_TRUE(w);
  EXPECT_TRUE(validate_tight_witness(kPhi, *w));
  TightWitness canonical{1, 2, {}};
  TightWitness literal{1, 2, {}};
  for (int l = 0; l <= 2; ++l) {
    canonical.maps[0][l] = {l};
    canonical.maps[1][l] = {l};
    canonical.maps[2][l] = {l - 2};
    literal.maps[0][l] = {l};
    literal.maps[1][l] = {l};
    literal.maps[2][l] = {2 - l};
  }
  EXPECT_TRUE(validate_tight_witness(kPhi, canonical));
  EXPECT_FALSE(validate_tight_witness(kPhi, literal));
  auto wp = is_tight(kPhiPrime, 4);
  ASSERT_TRUE(wp);
  EXPECT_TRUE(validate_tight_witness(kPhiPrime, *wp));
  EXPECT_FALSE(is_tight({{0, 0, 0}, {1, 0, 0}}, 5));
  EXPECT_FALSE(tight_unbounded({{0, 0, 0}, {1, 0, 0}}));
  EXPECT_THROW(is_tight(kPhi, 0), Error);
}

TEST(Tightness, WitnessesValidateOnNamedSupports) {
  for (const NamedTensorSpec& s : {hw_tensor(3), smoothable_tensor(2), a3_tensor(), strassen(3)}) {
    SupportSet phi = support(s.tensor, s.blocking);
    auto w = is_tight(phi, 8);
    ASSERT_TRUE(w) << s.family;
    EXPECT_TRUE(validate_tight_witness(phi, *w));
    auto u = tight_unbounded(phi);
    ASSERT_TRUE(u);
    EXPECT_TRUE(validate_tight_witness(phi, *u));
  }
}

TEST(Reconstructibility, NamedSupports) {
  EXPECT_TRUE(is_reconstructible(kPhi).reconstructible);
  EXPECT_TRUE(is_reconstructible({{0, 1, 2}}).reconstructible);
  auto r = is_reconstructible(kPhiPrime);
  ASSERT_FALSE(r.reconstructible);
  ASSERT_TRUE(r.counterexample);
  const auto& [p, q] = *r.counterexample;
  for (const auto& t : kPhiPrime) EXPECT_EQ(p.at(t), make_rational(1, 6));
  SupportSet orbit{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
  for (const auto& t : kPhiPrime) {
    Rational got = q.count(t) ? q.at(t) : Rational(0);
    EXPECT_EQ(got, orbit.count(t) ? make_rational(1, 3) : Rational(0));
  }
  NamedTensorSpec a = a3_tensor();
  EXPECT_FALSE(is_reconstructible(support(a.tensor, a.blocking)).reconstructible);
}

TEST(Reconstructibility, CounterexamplesShareMarginals) {
  for (const SupportSet& phi : {kPhiPrime, support(a3_tensor().tensor, a3_tensor().blocking)}) {
    auto r = is_reconstructible(phi);
    ASSERT_TRUE(r.counterexample);
    const auto& [p, q] = *r.counterexample;
    EXPECT_NE(p, q);
    for (int f = 0; f < 3; ++f) {
      std::map<int, Rational> mp, mq;
      Rational sp = 0, sq = 0;
      for (const auto& [t, x] : p) {
        mp[t[f]] += x;
        sp += x;
        EXPECT_GE(x, 0);
      }
      for (const auto& [t, x] : q) {
        mq[t[f]] += x;
        sq += x;
        EXPECT_GE(x, 0);
      }
      EXPECT_EQ(mp, mq);
      EXPECT_EQ(sp, 1);
      EXPECT_EQ(sq, 1);
    }
  }
}

TEST(Degeneration, Witnesses) {
  auto w = is_combinatorial_degeneration(kPhi, kPhi);
  ASSERT_TRUE(w);
  EXPECT_TRUE(validate_degeneration(kPhi, kPhi, *w));
  SupportSet psi{{0, 0, 2}, {1, 1, 0}};
  auto w2 = is_combinatorial_degeneration(psi, kPhi);
  EXPECT_EQ(w2.has_value(), brute_degeneration(psi, kPhi, 3));
  if (w2) EXPECT_TRUE(validate_degeneration(psi, kPhi, *w2));
  try {
    is_combinatorial_degeneration({{5, 5, 5}}, kPhi);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSubset);
  }
}

TEST(Degeneration, AgreesWithBruteForceOnSubsets) {
  std::vector<Triple> all(kPhiPrime.begin(), kPhiPrime.end());
  for (unsigned mask = 1; mask < (1u << all.size()); ++mask) {
    SupportSet psi;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (mask >> k & 1) psi.insert(all[k]);
    auto w = is_combinatorial_degeneration(psi, kPhiPrime);
    EXPECT_EQ(w.has_value(), brute_degeneration(psi, kPhiPrime, 3)) << mask;
    if (w) EXPECT_TRUE(validate_degeneration(psi, kPhiPrime, *w));
  }
}

TEST(Diagonals, Basics) {
  EXPECT_TRUE(is_diagonal({{0, 1, 2}}));
  EXPECT_FALSE(is_diagonal({{0, 0, 0}, {0, 1, 1}}));
  EXPECT_TRUE(is_balanced(kPhiPrime, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}));
  EXPECT_FALSE(is_balanced({{0, 1, 2}, {0, 2, 1}, {1, 0, 0}}, {0, 1}, {0, 1, 2}, {0, 1, 2}));
  SupportSet diag{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  EXPECT_EQ(max_degeneration_diagonal(diag), diag);
  EXPECT_TRUE(max_degeneration_diagonal({}).empty());
}

TEST(Diagonals, MaximumMatchesExhaustiveSearch) {
  for (const SupportSet& phi : {kPhi, kPhiPrime}) {
    SupportSet d = max_degeneration_diagonal(phi);
    EXPECT_TRUE(is_diagonal(d));
    auto w = is_combinatorial_degeneration(d, phi);
    ASSERT_TRUE(w);
    EXPECT_TRUE(validate_degeneration(d, phi, *w));
    std::vector<Triple> all(phi.begin(), phi.end());
    std::size_t best = 0;
    for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
      SupportSet s;
      for (std::size_t k = 0; k < all.size(); ++k)
        if (mask >> k & 1) s.insert(all[k]);
      if (s.size() > best && is_diagonal(s) && brute_degeneration(s, phi, 3)) best = s.size();
    }
    EXPECT_EQ(d.size(), best);
  }
  EXPECT_GE(max_degeneration_diagonal(kPhiPrime).size(), 2u);
  SupportSet big;
  for (int i = 0; i < 30; ++i)
    for (int j = 0; j < 30; ++j) big.insert({i, j, 59 - i - j});
  EXPECT_THROW(max_degeneration_diagonal(big, 100), Error);
}

TEST(EntropyGap, Values) {
  EXPECT_NEAR(multinomial_entropy_gap({5, 5}, 10), std::fabs(std::log(252.0) / 10 - std::log(2.0)), 1e-12);
  EXPECT_EQ(multinomial_entropy_gap({7}, 7), 0.0);
  // lgamma oracle
  auto oracle = [](const std::vector<long>& q, long n) {
    double lm = std::lgamma(n + 1.0), h = 0;
    for (long x : q) {
      lm -= std::lgamma(x + 1.0);
      if (x > 0) h -= static_cast<double>(x) / n * std::log(static_cast<double>(x) / n);
    }
    return std::fabs(lm / n - h);
  };
  for (long n : {10L, 100L, 1000L}) {
    std::vector<long> q{n / 2, 3 * n / 10, n - n / 2 - 3 * n / 10};
    EXPECT_NEAR(multinomial_entropy_gap(q, n), oracle(q, n), 1e-9);
    std::vector<long> q2{2 * q[0], 2 * q[1], 2 * q[2]};
    EXPECT_LT(multinomial_entropy_gap(q2, 2 * n), multinomial_entropy_gap(q, n));
  }
}
