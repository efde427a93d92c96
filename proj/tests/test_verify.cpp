#include <random>
#include <set>

#include <gtest/gtest.h>

#include "addcomp/constructions.hpp"
#include "addcomp/errors.hpp"
#include "addcomp/verify.hpp"
#include "oracles.hpp"

using namespace addcomp;
using namespace addcomp::verify;
using u64 = std::uint64_t;

namespace {

std::vector<u64> V(std::initializer_list<u64> xs) { return xs; }

TruncatedSet from(const std::set<u64>& s, u64 N) {
  return TruncatedSet::from_elements(N, std::vector<u64>(s.begin(), s.end()));
}

}  // namespace

TEST(Coverage, EvensPlusOneTwo) {
  const CoverageReport r =
      coverage_exceptions(truncate(AP{2, 2}, 10), TruncatedSet::from_elements(10, V({1, 2})));
  EXPECT_EQ(r.exceptions, V({1, 2}));
  EXPECT_EQ(r.max_exception, std::optional<u64>(2));
  EXPECT_TRUE(r.stable);
}

TEST(Coverage, FullSetPlusOne) {
  const CoverageReport r =
      coverage_exceptions(TruncatedSet::full(10), TruncatedSet::from_elements(10, V({1})));
  EXPECT_EQ(r.exceptions, V({1}));
  EXPECT_EQ(r.max_exception, std::optional<u64>(1));
}

TEST(Coverage, UnstableWhenExceptionsKeepGrowing) {
  const CoverageReport r = coverage_exceptions(truncate(AP{2, 2}, 100),
                                               TruncatedSet::from_elements(100, V({2})));
  EXPECT_EQ(r.max_exception, std::optional<u64>(99));
  EXPECT_EQ(r.max_exception_half, std::optional<u64>(49));
  EXPECT_FALSE(r.stable);
}

TEST(Coverage, RequiresWindowOfTwo) {
  EXPECT_THROW(coverage_exceptions(TruncatedSet(1), TruncatedSet(1)), PreconditionError);
}

TEST(Coverage, MatchesDoubleLoopOnRandomSets) {
  std::mt19937_64 rng(314159);
  const u64 N = 300;
  for (int t = 0; t < 200; ++t) {
    std::set<u64> a, b;
    const int na = 1 + static_cast<int>(rng() % 80), nb = 1 + static_cast<int>(rng() % 20);
    for (int i = 0; i < na; ++i) a.insert(1 + rng() % N);
    for (int i = 0; i < nb; ++i) b.insert(1 + rng() % N);
    const auto expect = oracle::complement(oracle::sumset(a, b, N), N);
    const CoverageReport r = coverage_exceptions(from(a, N), from(b, N));
    ASSERT_EQ(std::set<u64>(r.exceptions.begin(), r.exceptions.end()), expect);
  }
}

TEST(Coverage, ExceptionsAreMonotoneInWindow) {
  std::mt19937_64 rng(2718);
  for (int t = 0; t < 50; ++t) {
    const u64 N = 2 * (50 + rng() % 400);
    std::set<u64> a, b;
    for (int i = 0; i < 60; ++i) a.insert(1 + rng() % N);
    for (int i = 0; i < 10; ++i) b.insert(1 + rng() % N);
    const CoverageReport full = coverage_exceptions(from(a, N), from(b, N));
    const auto ah = from(a, N).restrict_to(N / 2), bh = from(b, N).restrict_to(N / 2);
    const CoverageReport half = coverage_exceptions(ah, bh);
    std::vector<u64> clipped;
    for (u64 x : full.exceptions) {
      if (x <= N / 2) clipped.push_back(x);
    }
    ASSERT_EQ(clipped, half.exceptions);
    ASSERT_EQ(full.max_exception_half, half.max_exception);
  }
}

TEST(Coverage, ThreadCountDoesNotChangeReport) {
  const u64 N = 3 * TruncatedSet::kBlockBits + 5;
  const auto a = truncate(AP{3, 7}, N);
  const auto b = TruncatedSet::from_elements(N, V({1, 2, 4, 9, 11}));
  const CoverageReport one = coverage_exceptions(a, b, ExecConfig{1});
  const CoverageReport many = coverage_exceptions(a, b, ExecConfig{4});
  EXPECT_EQ(one.exceptions, many.exceptions);
  EXPECT_EQ(one.stable, many.stable);
}

TEST(Avoidance, GeometricDepthFive) {
  const u64 N = 729;
  const auto a = geometric_avoider(3, 5);
  const auto set = TruncatedSet::from_elements(N, a);
  EXPECT_TRUE(avoidance_check(set, V({3, 9, 27, 81, 243})).empty());
}

TEST(Avoidance, EvensAvoidFour) {
  EXPECT_TRUE(avoidance_check(truncate(AP{2, 2}, 20), V({4})).empty());
  EXPECT_EQ(avoidance_check(truncate(AP{2, 2}, 20), V({4, 5, 7})), V({5, 7}));
}

TEST(Avoidance, FullSetHasNoSums) {
  EXPECT_TRUE(avoidance_check(TruncatedSet::full(50), V({1, 7, 50})).empty());
}

TEST(Avoidance, MatchesDoubleLoop) {
  std::mt19937_64 rng(55);
  const u64 N = 200;
  for (int t = 0; t < 100; ++t) {
    std::set<u64> a;
    for (int i = 0; i < 50; ++i) a.insert(1 + rng() % N);
    std::vector<u64> s;
    for (u64 x = 1 + rng() % 7; x <= N; x += 1 + rng() % 13) s.push_back(x);
    const auto sums = oracle::sumset(a, oracle::complement(a, N), N);
    std::vector<u64> expect;
    for (u64 x : s) {
      if (sums.count(x)) expect.push_back(x);
    }
    ASSERT_EQ(avoidance_check(from(a, N), s), expect);
  }
}

TEST(Closure, Examples) {
  const Thm1Result r = thm1_avoider(Thm1Plan{V({1, 4, 9, 16}), V({1})});
  EXPECT_TRUE(closure_check(r.set, r.plan.s_prefix, r.set.bound()));
  EXPECT_FALSE(closure_check(TruncatedSet::from_elements(4, V({1, 2})), V({4}), 4));
  EXPECT_TRUE(closure_check(TruncatedSet(10), V({3, 7}), 10));
  EXPECT_THROW(closure_check(TruncatedSet(10), V({3}), 11), PreconditionError);
}

TEST(Closure, ImpliesAvoidanceOnThm1Fixtures) {
  const std::vector<std::vector<u64>> targets{
      {1, 4, 9, 16, 25}, {2}, {3, 9, 27, 81}, {5, 6, 11, 17, 40}, {2, 3, 5, 7, 11, 13, 17}};
  const std::vector<std::vector<u64>> seeds{{1}, {1, 2}, {2}};
  for (const auto& s : targets) {
    for (const auto& x : seeds) {
      if (x.back() >= s.back()) continue;
      const Thm1Result r = thm1_avoider(Thm1Plan{s, x});
      const u64 N = r.set.bound();
      if (closure_check(r.set, s, N)) {
        EXPECT_TRUE(avoidance_check(r.set, s).empty());
      }
    }
  }
}

TEST(Udap, Examples) {
  EXPECT_TRUE(udap_certificate(std::vector<AP>{{1, 2}, {2, 4}}, {}));
  EXPECT_FALSE(udap_certificate(std::vector<AP>{{1, 3}, {4, 6}}, {}));
  EXPECT_TRUE(udap_certificate(std::vector<AP>{{5, 7}}, {}));
  EXPECT_FALSE(udap_certificate(std::vector<AP>{{2, 2}}, std::vector<AP>{{4, 8}}));
  EXPECT_TRUE(udap_certificate(std::vector<AP>{{2, 2}, {1, 8}}, std::vector<AP>{{5, 8}}));
}

TEST(CertificateType, FirstFailureAndJson) {
  Certificate c;
  c.add("alpha", "[1,10]", true);
  c.add("beta", "[1,10]", false, "x");
  c.add("gamma", "[1,10]", false);
  EXPECT_FALSE(c.ok());
  EXPECT_EQ(c.first_failure(), "beta");
  const Json j = to_json(c);
  EXPECT_EQ(j.at("checks").size(), 3u);
  EXPECT_EQ(j.at("checks")[1].at("name"), "beta");
  EXPECT_FALSE(j.at("checks")[1].at("ok").get<bool>());
}

TEST(CoverageJson, SampleIsCapped) {
  const CoverageReport r = coverage_exceptions(truncate(AP{2, 2}, 1000),
                                               TruncatedSet::from_elements(1000, V({2})));
  const Json j = to_json(r);
  EXPECT_EQ(j.at("N").get<u64>(), 1000u);
  EXPECT_EQ(j.at("exceptions_count").get<u64>(), r.exceptions.size());
  EXPECT_EQ(j.at("sample_exceptions").size(), 100u);
  EXPECT_FALSE(j.at("stable").get<bool>());
}
