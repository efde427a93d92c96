#include "addcomp/numtheory.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "addcomp/errors.hpp"

namespace addcomp::nt {

namespace {

constexpr u64 kMaxModulus = u64{1} << 63;

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// p^k, or 0 if it would reach 2^63.
u64 checked_pow(u64 p, unsigned k) {
  unsigned __int128 acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= p;
    if (acc >= kMaxModulus) return 0;
  }
  return static_cast<u64>(acc);
}

u64 reduce(std::int64_t g, u64 n) {
  if (g >= 0) return static_cast<u64>(g) % n;
  u64 mag = static_cast<u64>(-(g + 1)) + 1;  // |g| without overflow at INT64_MIN
  u64 r = mag % n;
  return r == 0 ? 0 : n - r;
}

}  // namespace

u64 gcd(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    exp >>= 1;
    base = mul_mod(base, base, m);
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kSmall{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kSmall) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (u64 a : kSmall) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<bool> prime_sieve(u64 n) {
  std::vector<bool> prime(n + 1, true);
  prime[0] = false;
  if (n >= 1) prime[1] = false;
  for (u64 i = 2; i * i <= n; ++i) {
    if (!prime[i]) continue;
    for (u64 j = i * i; j <= n; j += i) prime[j] = false;
  }
  return prime;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  auto strip = [&](u64 p) {
    if (n % p) return;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (u64 p = 5; p <= n / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

u64 totient(u64 n) {
  if (n == 0) throw PreconditionError("totient requires n >= 1");
  u64 result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

u64 multiplicative_order(std::int64_t g, u64 n) {
  if (n < 2) throw PreconditionError("multiplicative_order requires n >= 2");
  if (n >= kMaxModulus) throw PreconditionError("modulus must be below 2^63");
  u64 x = reduce(g, n);
  if (gcd(x, n) != 1) {
    throw PreconditionError("multiplicative_order: gcd(" + std::to_string(g) + ", " +
                            std::to_string(n) + ") != 1");
  }
  u64 order = totient(n);
  for (auto [r, e] : factorize(order)) {
    for (unsigned i = 0; i < e && order % r == 0 && pow_mod(x, order / r, n) == 1; ++i) order /= r;
  }
  return order;
}

bool is_primitive_root(std::int64_t g, u64 n) {
  if (n < 2) throw PreconditionError("is_primitive_root requires n >= 2");
  if (n >= kMaxModulus) throw PreconditionError("modulus must be below 2^63");
  u64 x = reduce(g, n);
  if (gcd(x, n) != 1) return false;
  u64 phi = totient(n);
  for (u64 r : prime_divisors(phi)) {
    if (pow_mod(x, phi / r, n) == 1) return false;
  }
  return true;
}

bool check_lift(u64 g, u64 p, unsigned k_max) {
  if (p < 3 || !is_prime(p)) throw PreconditionError("check_lift requires an odd prime p");
  if (k_max < 3) throw PreconditionError("check_lift requires k_max >= 3");
  if (checked_pow(p, k_max) == 0) throw PreconditionError("p^k_max must be below 2^63");
  if (g > static_cast<u64>(std::numeric_limits<std::int64_t>::max())) {
    throw PreconditionError("g out of range");
  }
  const auto gs = static_cast<std::int64_t>(g);
  if (!is_primitive_root(gs, p * p)) {
    throw PreconditionError("check_lift: " + std::to_string(g) + " is not a primitive root mod " +
                            std::to_string(p) + "^2");
  }
  for (unsigned k = 3; k <= k_max; ++k) {
    if (!is_primitive_root(gs, checked_pow(p, k))) return false;
  }
  return true;
}

u64 adjust_to_p2(u64 g, u64 p) {
  if (p < 3 || !is_prime(p)) throw PreconditionError("adjust_to_p2 requires an odd prime p");
  if (checked_pow(p, 2) == 0) throw PreconditionError("p^2 must be below 2^63");
  const auto gs = static_cast<std::int64_t>(g);
  if (!is_primitive_root(gs, p)) {
    throw PreconditionError("adjust_to_p2: " + std::to_string(g) + " is not a primitive root mod " +
                            std::to_string(p));
  }
  if (is_primitive_root(gs, p * p)) {
    throw PreconditionError("adjust_to_p2: " + std::to_string(g) +
                            " is already a primitive root mod " + std::to_string(p) + "^2");
  }
  for (u64 t = 1; t < p; ++t) {
    u64 candidate = g + t * p;
    if (is_primitive_root(static_cast<std::int64_t>(candidate), p * p)) return candidate;
  }
  throw LemmaViolation("adjust_to_p2: no g + tp is primitive mod p^2 for g = " +
                       std::to_string(g) + ", p = " + std::to_string(p));
}

PrimesInAp primes_in_ap(u64 a, u64 b, u64 count, u64 bound) {
  if (a == 0 || b == 0) throw PreconditionError("primes_in_ap requires positive a and b");
  if (gcd(a, b) != 1) {
    throw PreconditionError("primes_in_ap: gcd(" + std::to_string(a) + ", " + std::to_string(b) +
                            ") != 1");
  }
  PrimesInAp result;
  for (u64 x = b; x < bound && result.primes.size() < count; x += a) {
    if (is_prime(x)) result.primes.push_back(x);
    if (x > std::numeric_limits<u64>::max() - a) break;
  }
  result.complete = result.primes.size() == count;
  return result;
}

u64 search_primorial_family(u64 bound, const std::function<bool(u64)>& accept) {
  std::vector<u64> primorials;
  u64 primorial = 2;
  for (u64 p = 3;; p += 2) {
    if (!is_prime(p)) continue;
    if (primorial > bound / p) break;
    primorial *= p;
    primorials.push_back(primorial);
  }
  for (u64 n : primorials) {
    if (accept(n)) return n;
  }
  std::size_t next = 0;
  for (u64 n = 6; n <= bound; n += 6) {
    if (next < primorials.size() && primorials[next] == n) {
      ++next;
      continue;
    }
    if (accept(n)) return n;
    if (n > bound - 6) break;
  }
  return 0;
}

u64 find_small_totient_ratio(const Rational& epsilon, u64 bound) {
  if (epsilon <= Rational(0) || epsilon >= Rational(1)) {
    throw DomainError("find_small_totient_ratio requires epsilon in (0,1)");
  }
  u64 n = search_primorial_family(bound, [&](u64 m) {
    return BigInt(totient(m)) * epsilon.den() < epsilon.num() * BigInt(m);
  });
  if (n == 0) {
    throw NotFoundError("no n <= " + std::to_string(bound) + " with phi(n)/n < " + epsilon.str());
  }
  return n;
}

ArtinSearch find_artin_pair(u64 g, u64 p_bound, u64 a) {
  if (g < 2) throw PreconditionError("find_artin_pair requires g >= 2");
  u64 root = isqrt(g);
  if (root * root == g) {
    throw PreconditionError("find_artin_pair: " + std::to_string(g) + " is a perfect square");
  }
  if (g > static_cast<u64>(std::numeric_limits<std::int64_t>::max())) {
    throw PreconditionError("g out of range");
  }
  ArtinSearch result;
  const auto gs = static_cast<std::int64_t>(g);
  for (u64 p = 3; p <= p_bound; p += 2) {
    if (!is_prime(p) || g % p == 0 || (a != 0 && a % p == 0)) continue;
    if (checked_pow(p, 2) == 0) break;
    if (is_primitive_root(gs, p * p)) {
      result.witness = PrimePowerWitness{g, p, 2};
      return result;
    }
    if (is_primitive_root(gs, p)) result.near_misses.push_back(p);
  }
  std::string msg = "no odd prime p <= " + std::to_string(p_bound) + " with " +
                    std::to_string(g) + " primitive mod p^2 (inconclusive)";
  if (!result.near_misses.empty()) {
    msg += "; primitive mod p only for p =";
    for (u64 p : result.near_misses) msg += " " + std::to_string(p);
  }
  throw NotFoundError(msg);
}

}  // namespace addcomp::nt
