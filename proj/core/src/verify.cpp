#include "addcomp/verify.hpp"

#include <algorithm>

#include "addcomp/errors.hpp"

namespace addcomp::verify {

CoverageReport coverage_exceptions(const TruncatedSet& a, const TruncatedSet& b,
                                   ExecConfig exec) {
  if (a.bound() < 2) throw PreconditionError("coverage_exceptions requires N >= 2");
  CoverageReport report;
  report.N = a.bound();
  TruncatedSet missed = complement_in_N(sumset(a, b, exec));
  report.exceptions = missed.elements();
  if (!report.exceptions.empty()) report.max_exception = report.exceptions.back();

  const std::uint64_t half = report.N / 2;
  auto it = std::upper_bound(report.exceptions.begin(), report.exceptions.end(), half);
  if (it != report.exceptions.begin()) report.max_exception_half = *std::prev(it);
  report.stable = report.max_exception == report.max_exception_half;
  return report;
}

std::vector<std::uint64_t> avoidance_check(const TruncatedSet& a, std::span<const std::uint64_t> s,
                                           ExecConfig exec) {
  TruncatedSet sums = sumset(a, complement_in_N(a), exec);
  std::vector<std::uint64_t> violations;
  for (std::uint64_t x : s) {
    if (sums.contains(x)) violations.push_back(x);
  }
  std::sort(violations.begin(), violations.end());
  violations.erase(std::unique(violations.begin(), violations.end()), violations.end());
  return violations;
}

bool closure_check(const TruncatedSet& a, std::span<const std::uint64_t> s_prefix,
                   std::uint64_t window) {
  if (window > a.bound()) throw PreconditionError("closure_check window exceeds the truncation");
  for (std::uint64_t x : a.elements()) {
    if (x > window) break;
    for (std::uint64_t b : s_prefix) {
      if (b <= x) continue;
      const std::uint64_t y = b - x;
      if (y <= window && !a.contains(y)) return false;
    }
  }
  return true;
}

bool udap_certificate(std::span<const AP> levels, std::span<const AP> residuals) {
  if (!udap_disjoint(levels) || !udap_disjoint(residuals)) return false;
  for (const AP& r : residuals) {
    for (const AP& l : levels) {
      if (aps_intersect(r, l)) return false;
    }
  }
  return true;
}

bool Certificate::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

std::string Certificate::first_failure() const {
  for (const Check& c : checks) {
    if (!c.ok) return c.name;
  }
  return {};
}

void Certificate::add(std::string name, std::string window, bool ok, std::string details) {
  checks.push_back(Check{std::move(name), std::move(window), ok, std::move(details)});
}

Json to_json(const CoverageReport& report) {
  Json sample = Json::array();
  for (std::size_t i = 0; i < report.exceptions.size() && i < 100; ++i) {
    sample.push_back(report.exceptions[i]);
  }
  Json j;
  j["N"] = report.N;
  j["exceptions_count"] = report.exceptions.size();
  j["max_exception"] = report.max_exception ? Json(*report.max_exception) : Json(nullptr);
  j["stable"] = report.stable;
  j["sample_exceptions"] = std::move(sample);
  return j;
}

Json to_json(const Certificate& cert) {
  Json checks = Json::array();
  for (const Check& c : cert.checks) {
    checks.push_back(
        Json{{"name", c.name}, {"window", c.window}, {"ok", c.ok}, {"details", c.details}});
  }
  return Json{{"checks", std::move(checks)}};
}

}  // namespace addcomp::verify
