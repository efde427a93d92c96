#include <cmath>

#include <gtest/gtest.h>

#include "addcomp/errors.hpp"
#include "addcomp/numtheory.hpp"
#include "oracles.hpp"

namespace nt = addcomp::nt;
using addcomp::Rational;
using u64 = std::uint64_t;

TEST(Totient, SmallValues) {
  EXPECT_EQ(nt::totient(1), 1u);
  EXPECT_EQ(nt::totient(7), 6u);
  EXPECT_EQ(nt::totient(12), 4u);
  EXPECT_EQ(nt::totient(210), 48u);
}

TEST(Totient, MatchesGcdScan) {
  for (u64 n = 1; n <= 2000; ++n) ASSERT_EQ(nt::totient(n), oracle::totient(n)) << n;
}

TEST(Primes, MillerRabinMatchesTrialDivision) {
  for (u64 n = 0; n <= 20000; ++n) ASSERT_EQ(nt::is_prime(n), oracle::is_prime(n)) << n;
}

TEST(Primes, LargeKnownValues) {
  EXPECT_TRUE(nt::is_prime(2305843009213693951ULL));  // 2^61 - 1
  EXPECT_FALSE(nt::is_prime(3215031751ULL));          // strong pseudoprime to 2, 3, 5, 7
  EXPECT_TRUE(nt::is_prime(18446744073709551557ULL));
}

TEST(Primes, SieveAgreesWithIsPrime) {
  const auto table = nt::prime_sieve(5000);
  for (u64 n = 0; n <= 5000; ++n) ASSERT_EQ(table[n], nt::is_prime(n)) << n;
}

TEST(Factorize, ReassemblesN) {
  for (u64 n = 2; n <= 3000; ++n) {
    u64 prod = 1;
    for (auto [p, e] : nt::factorize(n)) {
      ASSERT_TRUE(oracle::is_prime(p));
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    ASSERT_EQ(prod, n);
  }
}

TEST(Order, Examples) {
  EXPECT_EQ(nt::multiplicative_order(1, 9), 1u);
  EXPECT_EQ(nt::multiplicative_order(2, 5), 4u);
  EXPECT_EQ(nt::multiplicative_order(2, 9), 6u);
  EXPECT_EQ(nt::multiplicative_order(-1, 7), 2u);
}

TEST(Order, RejectsNonUnits) {
  EXPECT_THROW(nt::multiplicative_order(3, 9), addcomp::PreconditionError);
  EXPECT_THROW(nt::multiplicative_order(2, 1), addcomp::PreconditionError);
}

TEST(Order, MatchesRepeatedMultiplication) {
  for (u64 n = 2; n <= 300; ++n) {
    for (u64 g = 1; g < n; ++g) {
      if (std::gcd(g, n) != 1) continue;
      ASSERT_EQ(nt::multiplicative_order(static_cast<std::int64_t>(g), n), oracle::order(g, n))
          << g << " mod " << n;
    }
  }
}

TEST(PrimitiveRoot, Examples) {
  EXPECT_TRUE(nt::is_primitive_root(2, 5));
  EXPECT_FALSE(nt::is_primitive_root(4, 5));
  EXPECT_TRUE(nt::is_primitive_root(1, 2));
  EXPECT_FALSE(nt::is_primitive_root(3, 9));
}

TEST(PrimitiveRoot, MatchesBruteForce) {
  for (u64 n = 2; n <= 200; ++n) {
    for (u64 g = 1; g < n; ++g) {
      ASSERT_EQ(nt::is_primitive_root(static_cast<std::int64_t>(g), n),
                oracle::is_primitive_root(g, n))
          << g << " mod " << n;
    }
  }
}

TEST(CheckLift, Examples) {
  EXPECT_TRUE(nt::check_lift(2, 3, 5));
  EXPECT_TRUE(nt::check_lift(2, 5, 4));
  EXPECT_TRUE(nt::check_lift(3, 7, 3));
}

TEST(CheckLift, Preconditions) {
  EXPECT_THROW(nt::check_lift(2, 2, 3), addcomp::PreconditionError);
  EXPECT_THROW(nt::check_lift(2, 3, 2), addcomp::PreconditionError);
  EXPECT_THROW(nt::check_lift(4, 5, 3), addcomp::PreconditionError);
}

TEST(AdjustToP2, EveryPreconditionPairGivesGPlusP) {
  int pairs = 0;
  for (u64 p = 3; p <= 50; p += 2) {
    if (!oracle::is_prime(p)) continue;
    for (u64 g = 2; g < p * p; ++g) {
      if (!oracle::is_primitive_root(g, p) || oracle::is_primitive_root(g, p * p)) continue;
      ++pairs;
      const u64 adjusted = nt::adjust_to_p2(g, p);
      EXPECT_EQ(adjusted, g + p);
      EXPECT_TRUE(oracle::is_primitive_root(adjusted, p * p));
    }
  }
  EXPECT_GT(pairs, 0);
}

TEST(AdjustToP2, Preconditions) {
  EXPECT_THROW(nt::adjust_to_p2(2, 3), addcomp::PreconditionError);  // already primitive mod 9
  EXPECT_THROW(nt::adjust_to_p2(4, 5), addcomp::PreconditionError);  // not primitive mod 5
}

TEST(PrimesInAp, Examples) {
  EXPECT_EQ(nt::primes_in_ap(6, 5, 3, 100).primes, (std::vector<u64>{5, 11, 17}));
  EXPECT_EQ(nt::primes_in_ap(2, 1, 2, 10).primes, (std::vector<u64>{3, 5}));
  EXPECT_THROW(nt::primes_in_ap(4, 2, 1, 100), addcomp::PreconditionError);
}

TEST(PrimesInAp, IncompleteWhenBoundTooSmall) {
  const auto r = nt::primes_in_ap(10, 3, 5, 50);
  EXPECT_EQ(r.primes, (std::vector<u64>{3, 13, 23, 43}));
  EXPECT_FALSE(r.complete);
}

TEST(SmallTotientRatio, SmallestQualifyingFamilyMember) {
  // 8/30 < 3/10, so 30 already qualifies.
  EXPECT_EQ(nt::find_small_totient_ratio(Rational::parse("3/10"), 1'000'000), 30u);
  EXPECT_EQ(nt::find_small_totient_ratio(Rational::parse("1/4"), 1'000'000), 210u);
  EXPECT_EQ(nt::find_small_totient_ratio(Rational::parse("1/2"), 100), 6u);
  EXPECT_THROW(nt::find_small_totient_ratio(Rational::parse("1/1000000"), 100),
               addcomp::NotFoundError);
}

TEST(SmallTotientRatio, NoSmallerMultipleOfSixQualifies) {
  for (const char* eps : {"3/10", "1/4", "1/3", "2/5"}) {
    const Rational e = Rational::parse(eps);
    const u64 n = nt::find_small_totient_ratio(e, 1'000'000);
    for (u64 m = 6; m < n; m += 6) {
      EXPECT_FALSE(Rational(addcomp::BigInt(oracle::totient(m)), addcomp::BigInt(m)) < e)
          << eps << " " << m;
    }
  }
}

TEST(PrimorialFamily, OrderIsPrimorialsFirst) {
  std::vector<u64> seen;
  nt::search_primorial_family(60, [&](u64 n) {
    seen.push_back(n);
    return false;
  });
  EXPECT_EQ(seen, (std::vector<u64>{6, 30, 12, 18, 24, 36, 42, 48, 54, 60}));
}

TEST(ArtinPair, Examples) {
  EXPECT_EQ(nt::find_artin_pair(2, 100).witness.p, 3u);
  EXPECT_EQ(nt::find_artin_pair(10, 100).witness.p, 7u);
  EXPECT_EQ(nt::find_artin_pair(10, 100).witness.k, 2u);
  EXPECT_THROW(nt::find_artin_pair(4, 100), addcomp::PreconditionError);
  EXPECT_THROW(nt::find_artin_pair(1, 100), addcomp::PreconditionError);
}

TEST(ArtinPair, SkipsPrimesDividingA) {
  EXPECT_EQ(nt::find_artin_pair(2, 100, 3).witness.p, 5u);
}

TEST(ArtinPair, BoundExhaustedIsNotFound) {
  EXPECT_THROW(nt::find_artin_pair(2, 2), addcomp::NotFoundError);
}

TEST(ArtinPair, WitnessMatchesBruteForce) {
  for (u64 g = 2; g <= 40; ++g) {
    const u64 r = static_cast<u64>(std::sqrt(static_cast<double>(g)));
    if (r * r == g) continue;
    u64 expect = 0;
    for (u64 p = 3; p <= 60 && expect == 0; p += 2) {
      if (oracle::is_prime(p) && g % p != 0 && oracle::is_primitive_root(g, p * p)) expect = p;
    }
    if (expect == 0) {
      EXPECT_THROW(nt::find_artin_pair(g, 60), addcomp::NotFoundError) << g;
    } else {
      EXPECT_EQ(nt::find_artin_pair(g, 60).witness.p, expect) << g;
    }
  }
}
