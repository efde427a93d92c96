#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "addcomp/ap.hpp"
#include "addcomp/mset.hpp"
#include "addcomp/rational.hpp"
#include "addcomp/truncated_set.hpp"

namespace addcomp::cli {

/// A set named on the command line.
///
///   even | odd | all | squares
///   1,2,5              elements
///   1:2,2:4            progressions first:diff (may be mixed with elements)
///   pow:a:g            {a g^i : i >= 1}
///   mset:q:pre|period  M(q, digits)
class SetSpec {
 public:
  static SetSpec parse(std::string_view text);

  bool finite() const;
  /// Explicitly listed elements, ascending.
  const std::vector<std::uint64_t>& listed() const { return elements_; }
  TruncatedSet realize(std::uint64_t N) const;
  /// The `count` smallest members; throws DomainError when they do not all
  /// lie below 2^40.
  std::vector<std::uint64_t> first(std::uint64_t count) const;
  const std::string& text() const { return text_; }

 private:
  enum class Kind { kList, kSquares, kPow, kMSet };

  Kind kind_ = Kind::kList;
  std::string text_;
  std::vector<std::uint64_t> elements_;
  std::vector<AP> aps_;
  std::uint64_t pow_a_ = 0;
  std::uint64_t pow_g_ = 0;
  std::optional<MSet> mset_;
};

/// Exact alpha from "num/den", an integer, or an expansion "q:pre|period".
/// Decimal input is rejected.
Rational parse_alpha(std::string_view text);

/// Comma-separated first:diff tokens.
std::vector<AP> parse_ap_list(std::string_view text);

/// Comma-separated unsigned integers.
std::vector<std::uint64_t> parse_u64_list(std::string_view text);

}  // namespace addcomp::cli
