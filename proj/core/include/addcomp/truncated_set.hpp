#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "addcomp/ap.hpp"

namespace addcomp {

/// Knobs for the block-parallel kernels. Output is identical for every
/// thread count.
struct ExecConfig {
  unsigned threads = 1;  ///< 0 picks std::thread::hardware_concurrency()
};

/// Exact characteristic bit-vector of a set restricted to [1, N].
///
/// Bit x stands for the integer x; bit 0 is always clear. Storage is split in
/// blocks of kBlockBits so kernels can work on disjoint ranges independently.
class TruncatedSet {
 public:
  static constexpr std::uint64_t kBlockBits = std::uint64_t{1} << 16;

  /// Empty set on [1, N]. Throws DomainError if N == 0.
  explicit TruncatedSet(std::uint64_t N);

  /// Elements outside [1, N] are ignored.
  static TruncatedSet from_elements(std::uint64_t N, std::span<const std::uint64_t> elements);
  static TruncatedSet full(std::uint64_t N);

  std::uint64_t bound() const { return n_; }

  bool contains(std::uint64_t x) const {
    return x >= 1 && x <= n_ && ((words_[x >> 6] >> (x & 63)) & 1);
  }
  void insert(std::uint64_t x) {
    if (x >= 1 && x <= n_) words_[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  void erase(std::uint64_t x) {
    if (x >= 1 && x <= n_) words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
  }

  /// Marks every element of the progression that is <= N.
  void insert(const AP& ap);

  std::uint64_t count() const;
  /// |A ∩ [1, n]| for n <= N.
  std::uint64_t count_upto(std::uint64_t n) const;

  std::vector<std::uint64_t> elements() const;
  std::optional<std::uint64_t> max_element() const;

  /// Same set viewed on the shorter window [1, n], n <= N.
  TruncatedSet restrict_to(std::uint64_t n) const;

  /// 64 bits starting at bit `pos`; bits below 0 or above N read as 0.
  std::uint64_t bits_at(std::int64_t pos) const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  TruncatedSet& operator|=(const TruncatedSet& o);
  TruncatedSet& operator&=(const TruncatedSet& o);
  TruncatedSet& operator^=(const TruncatedSet& o);
  friend TruncatedSet operator|(TruncatedSet a, const TruncatedSet& b) { return a |= b; }
  friend TruncatedSet operator&(TruncatedSet a, const TruncatedSet& b) { return a &= b; }
  friend TruncatedSet operator^(TruncatedSet a, const TruncatedSet& b) { return a ^= b; }

  friend bool operator==(const TruncatedSet&, const TruncatedSet&) = default;

  /// Clears bit 0 and everything above N.
  void normalize();

 private:
  void check_same_bound(const TruncatedSet& o) const;

  std::uint64_t n_;
  std::vector<std::uint64_t> words_;
};

TruncatedSet truncate(const AP& ap, std::uint64_t N);
TruncatedSet truncate(const UdapSet& set, std::uint64_t N);
TruncatedSet truncate(std::span<const std::uint64_t> elements, std::uint64_t N);

/// (A + B) ∩ [1, N]. Every element is >= 1, so sums <= N only involve parts
/// <= N and the result is exact. Shifted-OR over the sparser operand; output
/// block k only reads input bits below the end of block k.
/// Throws PreconditionError when the bounds differ.
TruncatedSet sumset(const TruncatedSet& a, const TruncatedSet& b, ExecConfig exec = {});

/// [1, N] \ A.
TruncatedSet complement_in_N(const TruncatedSet& a);

/// u + A (sign = +1) or u - A (sign = -1) intersected with [1, N].
/// For u - A only elements of A below u matter; with u > N + 1 the result is
/// exact on [u - N, N] only, since A is unknown beyond N.
TruncatedSet affine(const TruncatedSet& a, std::int64_t u, int sign);

}  // namespace addcomp
