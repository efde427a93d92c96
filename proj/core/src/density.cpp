#include "addcomp/density.hpp"

#include <algorithm>
#include <string>

#include "addcomp/errors.hpp"

namespace addcomp {

namespace {

void check_checkpoints(std::span<const std::uint64_t> checkpoints) {
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] == 0) throw PreconditionError("density checkpoints must be positive");
    if (i && checkpoints[i] <= checkpoints[i - 1]) {
      throw PreconditionError("density checkpoints must be strictly ascending");
    }
  }
}

}  // namespace

std::optional<DensityCheckpoint> DensityReport::first_violation() const {
  for (const auto& cp : checkpoints) {
    if (cp.ok && !*cp.ok) return cp;
  }
  return std::nullopt;
}

Rational mset_density_tolerance(std::uint64_t q, std::uint64_t d, std::uint64_t n) {
  Rational level_term(BigInt(1), big_pow(q, d));
  Rational window_term(BigInt(1), BigInt(n));
  Rational ap_term(BigInt(d) * (q - 1), BigInt(n));
  return level_term + std::max(level_term, window_term) + ap_term;
}

DensityReport density_report(const MSet& m, std::span<const std::uint64_t> checkpoints,
                             const Rational& claimed, std::uint64_t depth) {
  check_checkpoints(checkpoints);
  if (depth == 0) throw PreconditionError("density_report requires depth >= 1");
  DensityReport report{claimed, {}};
  for (std::uint64_t n : checkpoints) {
    DensityCheckpoint cp;
    cp.n = n;
    cp.count = mset_count(m, n);
    cp.ratio = Rational(BigInt(cp.count), BigInt(n));
    cp.bound = mset_density_tolerance(m.base(), depth, n);
    cp.ok = abs(cp.ratio - claimed) <= *cp.bound;
    report.checkpoints.push_back(std::move(cp));
  }
  return report;
}

DensityReport density_report(const TruncatedSet& a, std::span<const std::uint64_t> checkpoints,
                             const Rational& claimed) {
  check_checkpoints(checkpoints);
  if (!checkpoints.empty() && checkpoints.back() > a.bound()) {
    throw PreconditionError("checkpoint " + std::to_string(checkpoints.back()) +
                            " exceeds the truncation bound");
  }
  DensityReport report{claimed, {}};
  for (std::uint64_t n : checkpoints) {
    DensityCheckpoint cp;
    cp.n = n;
    cp.count = a.count_upto(n);
    cp.ratio = Rational(BigInt(cp.count), BigInt(n));
    report.checkpoints.push_back(std::move(cp));
  }
  return report;
}

}  // namespace addcomp
