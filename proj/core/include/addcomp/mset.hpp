#pragma once

#include <cstdint>
#include <optional>

#include "addcomp/ap.hpp"
#include "addcomp/expansion.hpp"
#include "addcomp/rational.hpp"
#include "addcomp/truncated_set.hpp"

namespace addcomp {

/// The leveled union M(q, (a_j)) = ∪_n (X_n \ {0}) with
///   X_n = ∪_{i < a_n} (s_{n-1} + i q^{n-1} + q^n N_0),
///   s_n = sum_{j < n} a_{j+1} q^j.
///
/// Only the digit sequence is stored. Level n holds a_n progressions of
/// modulus q^n, and everything past level d sits inside s_d + q^d N_0, which
/// is what makes finite computations on this infinite set exact.
class MSet {
 public:
  /// Throws PreconditionError when the expansion base differs from q.
  MSet(std::uint64_t q, DigitExpansion expansion);

  std::uint64_t base() const { return q_; }
  const DigitExpansion& expansion() const { return exp_; }
  Digit digit(std::uint64_t n) const { return exp_.digit(n); }

  /// s_n; throws DomainError when q^n does not fit below 2^63.
  std::uint64_t level_offset(std::uint64_t n) const;

  /// Smallest j >= n with a_j != 0, if any.
  std::optional<std::uint64_t> first_nonzero_from(std::uint64_t n) const;

  friend bool operator==(const MSet&, const MSet&) = default;

 private:
  std::uint64_t q_;
  DigitExpansion exp_;
};

MSet mset_build(std::uint64_t q, DigitExpansion expansion);

/// The level n whose progression contains x, or nullopt if x is not in M.
/// Reads base-q digits of x from the bottom: the low n-1 digits must equal
/// a_1..a_{n-1} and digit n must be below a_n.
std::optional<std::uint64_t> mset_member_level(const MSet& m, std::uint64_t x);

inline bool mset_member(const MSet& m, std::uint64_t x) {
  return x >= 1 && mset_member_level(m, x).has_value();
}

struct MSetLevels {
  UdapSet levels;    ///< progressions of levels 1..depth, level order
  AP residual;       ///< s_depth + q^depth N_0 (0 dropped), holds all deeper levels
  std::uint64_t depth = 0;
};

/// Materializes levels 1..d. Throws DomainError if q^d reaches 2^63.
MSetLevels mset_levels(const MSet& m, std::uint64_t d);

/// sum a_i / q^i.
Rational exact_density(const MSet& m);

/// |M_{>= first_level} ∩ [1, n]|, where M_{>= L} keeps only levels L, L+1, ...
std::uint64_t mset_count(const MSet& m, std::uint64_t n, std::uint64_t first_level = 1);

/// M_{>= first_level} ∩ [1, N] as a bit-vector.
TruncatedSet truncate(const MSet& m, std::uint64_t N, std::uint64_t first_level = 1);

}  // namespace addcomp
