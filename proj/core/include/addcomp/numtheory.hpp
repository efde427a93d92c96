#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "addcomp/rational.hpp"

/// Modular arithmetic on 64-bit integers: totient, orders, primitive roots,
/// primes in progressions and small-totient-ratio search.
///
/// Every modulus handled here is below 2^63. Products go through unsigned
/// __int128 so no intermediate overflows.
namespace addcomp::nt {

using u64 = std::uint64_t;

/// A candidate primitive root g together with the prime power p^k it is
/// claimed for.
struct PrimePowerWitness {
  u64 g = 0;
  u64 p = 0;
  unsigned k = 0;
};

u64 gcd(u64 a, u64 b);
u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

/// Deterministic for all 64-bit inputs (Miller-Rabin with a fixed base set).
bool is_prime(u64 n);

/// Eratosthenes table: entry x is true iff x is prime, for x <= n.
std::vector<bool> prime_sieve(u64 n);

/// Trial-division factorization, ascending primes with exponents.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

/// Distinct prime factors of n.
std::vector<u64> prime_divisors(u64 n);

u64 totient(u64 n);

/// Least t >= 1 with g^t = 1 (mod n). g may be negative; it is reduced
/// mod n first. Throws PreconditionError when gcd(g, n) != 1 or n < 2.
u64 multiplicative_order(std::int64_t g, u64 n);

/// g generates the unit group mod n. False when gcd(g, n) != 1.
bool is_primitive_root(std::int64_t g, u64 n);

/// Checks that a primitive root mod p^2 stays one mod p^k for 3 <= k <= k_max.
/// Throws PreconditionError unless p is an odd prime, g is a primitive root
/// mod p^2, k_max >= 3, and p^k_max < 2^63.
bool check_lift(u64 g, u64 p, unsigned k_max);

/// For g primitive mod p but not mod p^2, returns g + t p for the smallest
/// t in [1, p-1] that is primitive mod p^2. Throws PreconditionError when the
/// hypothesis fails and LemmaViolation if no t works.
u64 adjust_to_p2(u64 g, u64 p);

struct PrimesInAp {
  std::vector<u64> primes;
  bool complete = false;  ///< false when `bound` cut the search short
};

/// First `count` primes of the form a*n + b (n >= 0) that are < bound.
PrimesInAp primes_in_ap(u64 a, u64 b, u64 count, u64 bound);

/// Walks the composite primorial-first family in order: primorials
/// 6, 30, 210, ... up to bound, then the remaining multiples of 6 ascending.
/// Returns the first n accepted, or 0 when the family is exhausted.
u64 search_primorial_family(u64 bound, const std::function<bool(u64)>& accept);

/// Smallest member n of the primorial-first family with totient(n)/n < epsilon.
/// Throws NotFoundError if no n <= bound qualifies.
u64 find_small_totient_ratio(const Rational& epsilon, u64 bound);

struct ArtinSearch {
  PrimePowerWitness witness;   ///< k == 2
  std::vector<u64> near_misses;  ///< odd primes where g is primitive mod p but not mod p^2
};

/// Smallest odd prime p <= p_bound with g a primitive root mod p^2 and
/// `a` not divisible by p. Throws PreconditionError if g < 2 or g is a
/// perfect square, NotFoundError when the bound is exhausted.
ArtinSearch find_artin_pair(u64 g, u64 p_bound, u64 a = 1);

}  // namespace addcomp::nt
