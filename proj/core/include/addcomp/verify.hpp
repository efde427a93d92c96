#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "addcomp/ap.hpp"
#include "addcomp/set_io.hpp"
#include "addcomp/truncated_set.hpp"

/// Finite-window verification shared by every construction.
///
/// Nothing here proves an asymptotic statement. "Finitely many exceptions"
/// is reported as "the largest exception did not move between N/2 and N".
namespace addcomp::verify {

struct CoverageReport {
  std::uint64_t N = 0;
  std::vector<std::uint64_t> exceptions;  ///< [1, N] \ (A + B), ascending
  std::optional<std::uint64_t> max_exception;
  std::optional<std::uint64_t> max_exception_half;  ///< same quantity on [1, N/2]
  bool stable = false;                              ///< max_exception == max_exception_half
};

/// Exact exceptions of A + B on [1, N] where N is the common bound.
/// Requires N >= 2.
CoverageReport coverage_exceptions(const TruncatedSet& a, const TruncatedSet& b,
                                   ExecConfig exec = {});

/// Elements s of S inside [1, N] with s in A + ([1, N] \ A).
std::vector<std::uint64_t> avoidance_check(const TruncatedSet& a, std::span<const std::uint64_t> s,
                                           ExecConfig exec = {});

/// For every x in A ∩ [1, window] and b in S with b - x in [1, window]:
/// b - x is in A. Requires window <= A.bound().
bool closure_check(const TruncatedSet& a, std::span<const std::uint64_t> s_prefix,
                   std::uint64_t window);

/// Level progressions pairwise disjoint, and every residual disjoint from
/// every level progression and from the other residuals.
bool udap_certificate(std::span<const AP> levels, std::span<const AP> residuals);

struct Check {
  std::string name;
  std::string window;
  bool ok = false;
  std::string details;
};

struct Certificate {
  std::vector<Check> checks;

  bool ok() const;
  /// Name of the first failing check, empty when all pass.
  std::string first_failure() const;
  void add(std::string name, std::string window, bool ok, std::string details = {});
};

/// {N, exceptions_count, max_exception, stable, sample_exceptions}; the
/// sample holds at most the first 100 exceptions.
Json to_json(const CoverageReport& report);

/// {checks: [{name, window, ok, details}]}
Json to_json(const Certificate& cert);

}  // namespace addcomp::verify
