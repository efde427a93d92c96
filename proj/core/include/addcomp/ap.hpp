#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace addcomp {

/// Infinite arithmetic progression {first + m * diff : m >= 0} inside
/// N = {1, 2, ...}.
struct AP {
  std::uint64_t first = 1;
  std::uint64_t diff = 1;

  /// Builds the progression r + diff*N_0 with 0 removed: a residue r that is
  /// a multiple of diff starts at diff instead. Throws DomainError if diff == 0.
  static AP from_residue(std::uint64_t r, std::uint64_t diff);

  bool contains(std::uint64_t x) const { return x >= first && (x - first) % diff == 0; }

  /// |AP ∩ [1, n]|.
  std::uint64_t count_upto(std::uint64_t n) const {
    return n < first ? 0 : (n - first) / diff + 1;
  }

  friend bool operator==(const AP&, const AP&) = default;
};

/// Finite union of arithmetic progressions claimed to be pairwise disjoint.
struct UdapSet {
  std::vector<AP> aps;
};

/// Two infinite progressions meet iff their starts agree modulo gcd of the
/// differences; a common element above both starts then always exists.
bool aps_intersect(const AP& a, const AP& b);

/// True iff the progressions are pairwise disjoint.
bool udap_disjoint(std::span<const AP> aps);

/// u + AP intersected with N. A negative u drops the leading terms below 1.
AP translate(const AP& ap, std::int64_t u);

/// u - AP intersected with N: always a finite set, returned ascending.
std::vector<std::uint64_t> reflect(const AP& ap, std::int64_t u);

/// u + A (sign = +1) or u - A (sign = -1) intersected with N, ascending and
/// without duplicates.
std::vector<std::uint64_t> affine(std::span<const std::uint64_t> elements, std::int64_t u,
                                  int sign);

}  // namespace addcomp
