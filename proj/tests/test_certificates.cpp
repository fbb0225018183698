#include <gtest/gtest.h>

#include <chrono>

#include "fixtures.hpp"
#include "omegaforge/algebra/algebra.hpp"
#include "omegaforge/constructions/constructions.hpp"
#include "omegaforge/error.hpp"

using namespace omegaforge;

TEST(Fixtures, AllPass) {
  for (const auto& name : fixture_names()) {
    CertReport r = verify_certificate(load_fixture(name));
    EXPECT_TRUE(r.pass) << name << ": " << r.error << " " << r.detail;
  }
}

TEST(Fixtures, MatchBuilders) {
  EXPECT_EQ(load_fixture_json("strassen_n5"), certificate_to_json(build_strassen_cert(5)));
  EXPECT_EQ(load_fixture_json("waring_m1"), certificate_to_json(build_waring_cert(1)));
  EXPECT_EQ(load_fixture_json("span_limit_m3"), certificate_to_json(build_hw_span_cert(3)));
  EXPECT_EQ(load_fixture_json("a3_toric"), certificate_to_json(build_a3_toric_cert()));
}

TEST(Fixtures, JsonRoundTrip) {
  for (const auto& name : fixture_names()) {
    auto j = load_fixture_json(name);
    EXPECT_EQ(certificate_to_json(certificate_from_json(j)), j) << name;
  }
}

TEST(Corruptions, EveryOneFails) {
  auto start = std::chrono::steady_clock::now();
  long total = 0;
  for (const auto& name : fixture_names()) {
    auto bad = single_entry_corruptions(load_fixture(name));
    EXPECT_FALSE(bad.empty()) << name;
    auto reports = verify_all(bad);
    for (std::size_t k = 0; k < reports.size(); ++k)
      EXPECT_FALSE(reports[k].pass) << name << " corruption " << k;
    total += static_cast<long>(bad.size());
  }
  EXPECT_GT(total, 100);
  std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  RecordProperty("seconds", std::to_string(took.count()));
}

TEST(RankOne, StrassenRange) {
  for (int n = 1; n <= 6; ++n) {
    CertReport r = verify_rank_one_cert(build_strassen_cert(n));
    EXPECT_TRUE(r.pass) << n;
    EXPECT_EQ(r.term_count, n + 1);
  }
}

TEST(RankOne, WaringTermCounts) {
  EXPECT_EQ(build_waring_cert(0).terms.size(), 5u);
  EXPECT_EQ(build_waring_cert(1).terms.size(), 8u);
  EXPECT_THROW(build_waring_cert(2), Error);
}

TEST(RankOne, WrongExponentFails) {
  RankOneCurveCert c = build_strassen_cert(3);
  c.e += 1;
  CertReport r = verify_rank_one_cert(c);
  EXPECT_FALSE(r.pass);
  c.e -= 6;
  r = verify_rank_one_cert(c);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.error, "NegativeOrder");
}

TEST(SpanLimit, Dimensions) {
  for (int m = 1; m <= 5; ++m) {
    SpanLimitCert c = build_hw_span_cert(m);
    EXPECT_EQ(c.generators.size(), static_cast<std::size_t>(3 * m + 5));
    CertReport r = verify_span_limit_cert(c);
    EXPECT_TRUE(r.pass) << m << " " << r.detail;
    EXPECT_EQ(r.span_dimension, 3 * m + 5);
    EXPECT_EQ(r.target_dimension, 3 * m + 5);
    auto ones = generators_rank_one(c);
    EXPECT_EQ(ones.size(), c.generators.size());
  }
}

TEST(SpanLimit, DroppedGeneratorFails) {
  SpanLimitCert c = build_hw_span_cert(2);
  c.generators.pop_back();
  c.generator_names.pop_back();
  EXPECT_FALSE(verify_span_limit_cert(c).pass);
}

TEST(SliceMatrices, Reassemble) {
  Tensor t = hw_tensor(1).tensor;
  auto slices = slice_matrices(t);
  ASSERT_EQ(slices.size(), static_cast<std::size_t>(t.dim(2)));
  std::size_t count = 0;
  for (int k = 0; k < t.dim(2); ++k)
    for (const auto& [rc, v] : slices[k]) {
      EXPECT_EQ(t.get({rc.first, rc.second, k}), v);
      ++count;
    }
  EXPECT_EQ(count, t.size());
}

TEST(Toric, A3ToPairedCw) {
  ToricDegenerationCert c = build_a3_toric_cert();
  CertReport r = verify_toric_degeneration(c);
  EXPECT_TRUE(r.pass) << r.detail;
  EXPECT_TRUE(equal_up_to_permutation(c.target, multiplication_tensor(cw_algebra_paired(6))));
  EXPECT_TRUE(equal_up_to_permutation(c.source, a3_tensor().tensor));
  c.exponents[2][7] += 1;
  EXPECT_FALSE(verify_toric_degeneration(c).pass);
}

TEST(Status, HwTight) {
  for (int m = 1; m <= 5; ++m) {
    BorderRankStatus s = border_rank_status(hw_tensor(m), {build_hw_span_cert(m)});
    EXPECT_EQ(s.lower, 3 * m + 5);
    EXPECT_EQ(s.upper, 3 * m + 5);
    EXPECT_TRUE(s.tight);
  }
}

TEST(Status, StrassenTight) {
  for (int n = 2; n <= 6; ++n) {
    BorderRankStatus s = border_rank_status(strassen(n), {build_strassen_cert(n)});
    EXPECT_EQ(s.lower, n + 1);
    EXPECT_EQ(s.upper, n + 1);
    EXPECT_TRUE(s.tight);
    EXPECT_TRUE(s.certified);
  }
}

TEST(Status, WithoutCertificate) {
  BorderRankStatus s = border_rank_status(a3_tensor(), {});
  EXPECT_EQ(s.lower, 8);
  EXPECT_EQ(s.upper, 8);
  EXPECT_FALSE(s.certified);
  EXPECT_EQ(s.upper_provenance, "assumed-smoothable");
}

TEST(Parallel, VerifyAllMatchesSerial) {
  std::vector<Certificate> certs;
  for (const auto& name : fixture_names()) certs.push_back(load_fixture(name));
  auto bad = single_entry_corruptions(certs.front());
  certs.insert(certs.end(), bad.begin(), bad.end());
  auto a = verify_all(certs), b = verify_all_serial(certs);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(report_to_json(a[k]), report_to_json(b[k]));
}
