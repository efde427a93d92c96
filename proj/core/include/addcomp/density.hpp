#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "addcomp/mset.hpp"
#include "addcomp/rational.hpp"
#include "addcomp/truncated_set.hpp"

namespace addcomp {

struct DensityCheckpoint {
  std::uint64_t n = 0;
  std::uint64_t count = 0;          ///< |A ∩ [1, n]|, exact
  Rational ratio;                   ///< count / n
  std::optional<Rational> bound;    ///< tolerance on |ratio - claimed|, M-set sources only
  std::optional<bool> ok;           ///< set whenever bound is
};

struct DensityReport {
  Rational claimed;
  std::vector<DensityCheckpoint> checkpoints;

  /// First checkpoint whose bound is violated.
  std::optional<DensityCheckpoint> first_violation() const;
  bool all_ok() const { return !first_violation(); }
};

/// Counting tolerance for an M-set truncated to depth d at window n:
///   1/q^d + max(1/q^d, 1/n) + d(q-1)/n.
/// Each of the <= d(q-1) level progressions miscounts by less than 1; the
/// tail beyond level d lies in one progression of modulus q^d, so it adds at
/// most n/q^d + 1 elements; the digit prefix undershoots the density by at
/// most 1/q^d. For n >= q^d this is 2/q^d + d(q-1)/n.
Rational mset_density_tolerance(std::uint64_t q, std::uint64_t d, std::uint64_t n);

/// Exact counts at each checkpoint, with the sandwich bound asserted at
/// every one. Checkpoints must be ascending and positive.
DensityReport density_report(const MSet& m, std::span<const std::uint64_t> checkpoints,
                             const Rational& claimed, std::uint64_t depth);

/// Exact counts only; no bound is asserted for arbitrary truncations.
DensityReport density_report(const TruncatedSet& a, std::span<const std::uint64_t> checkpoints,
                             const Rational& claimed);

}  // namespace addcomp
