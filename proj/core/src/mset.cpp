#include "addcomp/mset.hpp"

#include <string>

#include "addcomp/errors.hpp"

namespace addcomp {

namespace {

using u128 = unsigned __int128;

constexpr u128 kLimit = u128{1} << 63;

// Visits every progression of M_{>= first_level} that can meet [1, N], as
// (start, step) with start possibly 0 (meaning the progression begins at
// step), then the single trailing element that deeper levels can contribute.
template <typename OnAp, typename OnSingle>
void walk_levels(const MSet& m, std::uint64_t N, std::uint64_t first_level, OnAp&& on_ap,
                 OnSingle&& on_single) {
  const u128 q = m.base();
  u128 prev = 1;  // q^{n-1}
  u128 s = 0;     // s_{n-1}
  std::uint64_t n = 1;
  for (; prev <= N; ++n) {
    const Digit a = m.digit(n);
    const u128 mod = prev * q;
    if (n >= first_level) {
      for (Digit i = 0; i < a; ++i) {
        const u128 start = s + i * prev;
        if (start > N) break;
        on_ap(start, mod);
      }
    }
    s += a * prev;
    prev = mod;
  }
  if (s >= 1 && s <= N) {
    auto level = m.first_nonzero_from(n);
    if (level && *level >= first_level) on_single(static_cast<std::uint64_t>(s));
  }
}

}  // namespace

MSet::MSet(std::uint64_t q, DigitExpansion expansion) : q_(q), exp_(std::move(expansion)) {
  if (exp_.base() != q_) {
    throw PreconditionError("expansion base " + std::to_string(exp_.base()) +
                            " does not match M-set base " + std::to_string(q_));
  }
}

std::uint64_t MSet::level_offset(std::uint64_t n) const {
  u128 prev = 1;
  u128 s = 0;
  for (std::uint64_t j = 1; j <= n; ++j) {
    s += exp_.digit(j) * prev;
    prev *= q_;
    if (prev >= kLimit) throw DomainError("level modulus q^n exceeds 2^63");
  }
  return static_cast<std::uint64_t>(s);
}

std::optional<std::uint64_t> MSet::first_nonzero_from(std::uint64_t n) const {
  if (n == 0) n = 1;
  const std::uint64_t span = exp_.preperiod().size() + exp_.period().size() + 1;
  for (std::uint64_t j = n; j < n + span; ++j) {
    if (exp_.digit(j) != 0) return j;
  }
  return std::nullopt;
}

MSet mset_build(std::uint64_t q, DigitExpansion expansion) { return MSet(q, std::move(expansion)); }

std::optional<std::uint64_t> mset_member_level(const MSet& m, std::uint64_t x) {
  if (x == 0) return std::nullopt;
  const std::uint64_t q = m.base();
  for (std::uint64_t n = 1;; ++n) {
    // Past the top digit of x every digit of x reads 0.
    if (x == 0) return m.first_nonzero_from(n);
    const Digit d = x % q;
    const Digit a = m.digit(n);
    if (d < a) return n;
    if (d > a) return std::nullopt;
    x /= q;
  }
}

MSetLevels mset_levels(const MSet& m, std::uint64_t d) {
  if (d == 0) throw PreconditionError("mset_levels requires depth >= 1");
  MSetLevels out;
  out.depth = d;
  const u128 q = m.base();
  u128 prev = 1;
  u128 s = 0;
  for (std::uint64_t n = 1; n <= d; ++n) {
    const u128 mod = prev * q;
    if (mod >= kLimit) throw DomainError("level modulus q^" + std::to_string(n) + " exceeds 2^63");
    const Digit a = m.digit(n);
    for (Digit i = 0; i < a; ++i) {
      out.levels.aps.push_back(AP::from_residue(static_cast<std::uint64_t>(s + i * prev),
                                                static_cast<std::uint64_t>(mod)));
    }
    s += a * prev;
    prev = mod;
  }
  out.residual = AP::from_residue(static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(prev));
  return out;
}

Rational exact_density(const MSet& m) { return value(m.expansion()); }

std::uint64_t mset_count(const MSet& m, std::uint64_t n, std::uint64_t first_level) {
  std::uint64_t total = 0;
  walk_levels(
      m, n, first_level,
      [&](u128 start, u128 step) {
        const u128 first = start == 0 ? step : start;
        if (first <= n) total += static_cast<std::uint64_t>((n - first) / step + 1);
      },
      [&](std::uint64_t) { ++total; });
  return total;
}

TruncatedSet truncate(const MSet& m, std::uint64_t N, std::uint64_t first_level) {
  TruncatedSet out(N);
  walk_levels(
      m, N, first_level,
      [&](u128 start, u128 step) {
        const u128 first = start == 0 ? step : start;
        if (first <= N) {
          out.insert(AP{static_cast<std::uint64_t>(first), static_cast<std::uint64_t>(
                                                               step > N ? N + 1 : step)});
        }
      },
      [&](std::uint64_t x) { out.insert(x); });
  return out;
}

}  // namespace addcomp
