#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "addcomp/rational.hpp"

namespace addcomp {

using Digit = std::uint64_t;

/// Eventually periodic base-q digit sequence a_1, a_2, ... representing
/// sum a_n / q^n.
///
/// Always held in canonical form: shortest period, then shortest preperiod.
/// The period is never empty; a terminating expansion has period {0}.
class DigitExpansion {
 public:
  /// Validates digits and canonicalizes. Throws DomainError on a digit
  /// outside [0, q-1], q < 2, or an empty period.
  DigitExpansion(std::uint64_t base, std::vector<Digit> preperiod, std::vector<Digit> period);

  /// Parses the textual form "q:pre|period", digits comma separated,
  /// e.g. "2:1|0" (= 1/2) or "27:|13".
  static DigitExpansion parse(std::string_view text);

  std::uint64_t base() const { return base_; }
  const std::vector<Digit>& preperiod() const { return pre_; }
  const std::vector<Digit>& period() const { return period_; }

  /// a_n for n >= 1.
  Digit digit(std::uint64_t n) const;

  /// True iff some a_j with j >= n is nonzero.
  bool tail_nonzero(std::uint64_t n) const;

  /// True iff every digit is zero (the value is 0).
  bool is_zero() const { return !tail_nonzero(1); }

  /// Same sequence with a_n replaced by `digit`.
  DigitExpansion with_digit(std::uint64_t n, Digit digit) const;

  /// a_{n+1}, a_{n+2}, ...: the expansion of q^n * value mod 1
  /// (or 1 when the tail is all q-1).
  DigitExpansion shifted(std::uint64_t n) const;

  /// "q:pre|period".
  std::string str() const;

  friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;

 private:
  void canonicalize();

  std::uint64_t base_;
  std::vector<Digit> pre_;
  std::vector<Digit> period_;
};

/// Greedy base-q expansion of alpha in [0,1]: a_n = floor(q^n a) - q floor(q^(n-1) a).
/// alpha = 1 is the all-(q-1) expansion. Throws DomainError outside [0,1].
DigitExpansion expand(const Rational& alpha, std::uint64_t q);

/// a_n; n must be >= 1.
Digit digit_at(const DigitExpansion& e, std::uint64_t n);

/// sum_{i<=d} a_i / q^i.
Rational prefix_value(const DigitExpansion& e, std::uint64_t d);

/// Exact value via the geometric series over the period.
Rational value(const DigitExpansion& e);

}  // namespace addcomp
