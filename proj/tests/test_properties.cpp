// Randomized properties with fixed seeds, so failures replay exactly.

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "addcomp/ap.hpp"
#include "addcomp/density.hpp"
#include "addcomp/expansion.hpp"
#include "addcomp/mset.hpp"
#include "addcomp/numtheory.hpp"
#include "addcomp/truncated_set.hpp"
#include "addcomp/verify.hpp"
#include "oracles.hpp"

using namespace addcomp;
using u64 = std::uint64_t;

namespace {

u64 ipow(u64 b, u64 e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

DigitExpansion random_expansion(std::mt19937_64& rng, u64 q, u64 max_len) {
  std::vector<Digit> pre(rng() % (max_len + 1)), period(1 + rng() % max_len);
  for (auto& d : pre) d = static_cast<Digit>(rng() % q);
  for (auto& d : period) d = static_cast<Digit>(rng() % q);
  return DigitExpansion(q, pre, period);
}

}  // namespace

TEST(Properties, RationalIsReduced) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 2000; ++t) {
    const auto num = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const auto den = static_cast<std::int64_t>(rng() % 1000) + 1;
    const Rational r{BigInt(num), BigInt(rng() % 2 ? den : -den)};
    ASSERT_GE(r.den(), 1);
    ASSERT_EQ(boost::multiprecision::gcd(r.num(), r.den()), 1);
  }
}

TEST(Properties, ExpansionRoundTripDigitRangeAndPeriod) {
  for (u64 q = 2; q <= 10; ++q) {
    for (u64 v = 1; v <= 500; v += (v < 60 ? 1 : 7)) {
      for (u64 u = 0; u <= v; u += 1 + v / 25) {
        const Rational alpha{BigInt(u), BigInt(v)};
        const DigitExpansion e = expand(alpha, q);
        ASSERT_EQ(value(e), alpha);
        for (Digit d : e.preperiod()) ASSERT_LT(d, q);
        for (Digit d : e.period()) ASSERT_LT(d, q);
        ASSERT_FALSE(e.period().empty());
        ASSERT_LT(e.period().size(), static_cast<std::size_t>(alpha.den()) + 1);
      }
    }
  }
}

TEST(Properties, GreedyLaw) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    const u64 q = 2 + rng() % 9;
    const u64 v = 1 + rng() % 500;
    const Rational alpha{BigInt(rng() % v), BigInt(v)};
    const DigitExpansion e = expand(alpha, q);
    for (u64 n = 0; n <= 30; ++n) {
      const BigInt qn = big_pow(q, n);
      ASSERT_EQ(prefix_value(e, n), Rational((Rational(qn) * alpha).floor(), qn));
    }
  }
}

TEST(Properties, OrderDividesTotient) {
  for (u64 n = 2; n <= 200; ++n) {
    const u64 phi = nt::totient(n);
    for (u64 g = 1; g <= 200; ++g) {
      if (std::gcd(g, n) != 1) continue;
      ASSERT_EQ(phi % nt::multiplicative_order(static_cast<std::int64_t>(g), n), 0u);
    }
  }
}

TEST(Properties, PrimitiveRootLiftsFromSquare) {
  for (u64 p = 3; p <= 50; p += 2) {
    if (!oracle::is_prime(p)) continue;
    for (u64 g = 2; g <= 100; ++g) {
      if (!nt::is_primitive_root(static_cast<std::int64_t>(g), p * p)) continue;
      ASSERT_TRUE(nt::is_primitive_root(static_cast<std::int64_t>(g), p * p * p));
      ASSERT_TRUE(nt::is_primitive_root(static_cast<std::int64_t>(g), p * p * p * p));
    }
  }
}

TEST(Properties, AdjustmentByAnyMultipleOfP) {
  for (u64 p = 3; p <= 50; p += 2) {
    if (!oracle::is_prime(p)) continue;
    for (u64 g = 2; g <= 100; ++g) {
      const auto gs = static_cast<std::int64_t>(g);
      if (!nt::is_primitive_root(gs, p) || nt::is_primitive_root(gs, p * p)) continue;
      for (u64 t = 1; t < p; ++t) {
        ASSERT_TRUE(oracle::is_primitive_root(g + t * p, p * p)) << g << " " << p << " " << t;
      }
    }
  }
}

TEST(Properties, PrimesInApAgainstSieve) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const u64 a = 1 + rng() % 30;
    u64 b = 1 + rng() % 60;
    while (std::gcd(a, b) != 1) ++b;
    const auto r = nt::primes_in_ap(a, b, 1000, 3000);
    std::vector<u64> expect;
    for (u64 x = b; x <= 3000; x += a) {
      if (oracle::is_prime(x)) expect.push_back(x);
    }
    ASSERT_EQ(r.primes, expect) << a << " " << b;
  }
}

TEST(Properties, MSetMembershipMatchesDefinition) {
  std::mt19937_64 rng(4);
  for (u64 q = 2; q <= 5; ++q) {
    for (int t = 0; t < 40; ++t) {
      const DigitExpansion e = random_expansion(rng, q, 6);
      const MSet m(q, e);
      const u64 x_max = ipow(q, 5);
      const auto naive = oracle::mset_members(q, [&](u64 n) { return e.digit(n); }, x_max, 60);
      for (u64 x = 1; x <= x_max; ++x) {
        ASSERT_EQ(mset_member(m, x), naive.count(x) == 1) << e.str() << " x=" << x;
      }
    }
  }
}

TEST(Properties, MSetLevelsStructure) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const u64 q = 2 + rng() % 6;
    const DigitExpansion e = random_expansion(rng, q, 5);
    const MSet m(q, e);
    const u64 d = 1 + rng() % 6;
    const MSetLevels lv = mset_levels(m, d);
    ASSERT_TRUE(udap_disjoint(lv.levels.aps));
    u64 expected_count = 0;
    for (u64 n = 1; n <= d; ++n) {
      ASSERT_LT(m.level_offset(n), ipow(q, n));
      expected_count += e.digit(n);
    }
    ASSERT_EQ(lv.levels.aps.size(), expected_count);
    for (const AP& ap : lv.levels.aps) ASSERT_LE(ap.diff, ipow(q, d));
    ASSERT_EQ(lv.residual.diff, ipow(q, d));
    for (const AP& ap : lv.levels.aps) ASSERT_FALSE(aps_intersect(ap, lv.residual));
    // Every member sits in a level progression or in the residual.
    const u64 N = 4 * ipow(q, d) + 7;
    for (u64 x : truncate(m, N).elements()) {
      bool inside = lv.residual.contains(x);
      for (const AP& ap : lv.levels.aps) inside = inside || ap.contains(x);
      ASSERT_TRUE(inside) << e.str() << " x=" << x;
    }
  }
}

TEST(Properties, DensityReportCertifiesExactDensity) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 40; ++t) {
    const u64 q = 2 + rng() % 4;
    const u64 d = 2 + rng() % 3;
    const MSet m(q, random_expansion(rng, q, 4));
    ASSERT_EQ(exact_density(m), value(m.expansion()));
    const std::vector<u64> cps{ipow(q, d), ipow(q, 2 * d)};
    const DensityReport r = density_report(m, cps, exact_density(m), d);
    ASSERT_TRUE(r.all_ok()) << m.expansion().str();
  }
}

TEST(Properties, SumsetMatchesDoubleLoop) {
  std::mt19937_64 rng(7);
  const u64 N = 200;
  for (int t = 0; t < 300; ++t) {
    std::set<u64> a, b;
    for (u64 i = 0, n = rng() % 60; i < n; ++i) a.insert(1 + rng() % N);
    for (u64 i = 0, n = rng() % 60; i < n; ++i) b.insert(1 + rng() % N);
    const auto ta = TruncatedSet::from_elements(N, std::vector<u64>(a.begin(), a.end()));
    const auto tb = TruncatedSet::from_elements(N, std::vector<u64>(b.begin(), b.end()));
    const auto got = sumset(ta, tb).elements();
    ASSERT_EQ(std::set<u64>(got.begin(), got.end()), oracle::sumset(a, b, N));
  }
}

TEST(Properties, AffineCommutesWithTruncation) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    const AP ap{1 + rng() % 40, 1 + rng() % 15};
    const u64 N = 50 + rng() % 400;
    const auto u = static_cast<std::int64_t>(rng() % (N + 1));
    ASSERT_EQ(affine(truncate(ap, N), u, +1), truncate(translate(ap, u), N));
    ASSERT_EQ(affine(truncate(ap, N), u, -1).elements(), truncate(reflect(ap, u), N).elements());
    const auto neg = -static_cast<std::int64_t>(rng() % 30);
    ASSERT_EQ(affine(truncate(ap, N), neg, +1).restrict_to(N + neg),
              truncate(translate(ap, neg), N).restrict_to(N + neg));
  }
}
