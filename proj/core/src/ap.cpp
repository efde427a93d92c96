#include "addcomp/ap.hpp"

#include <algorithm>
#include <numeric>

#include "addcomp/errors.hpp"

namespace addcomp {

AP AP::from_residue(std::uint64_t r, std::uint64_t diff) {
  if (diff == 0) throw DomainError("arithmetic progression with zero difference");
  std::uint64_t first = r % diff;
  return AP{first == 0 ? diff : first, diff};
}

bool aps_intersect(const AP& a, const AP& b) {
  std::uint64_t g = std::gcd(a.diff, b.diff);
  return a.first % g == b.first % g;
}

bool udap_disjoint(std::span<const AP> aps) {
  for (std::size_t i = 0; i < aps.size(); ++i) {
    for (std::size_t j = i + 1; j < aps.size(); ++j) {
      if (aps_intersect(aps[i], aps[j])) return false;
    }
  }
  return true;
}

AP translate(const AP& ap, std::int64_t u) {
  if (u >= 0) return AP{ap.first + static_cast<std::uint64_t>(u), ap.diff};
  auto down = static_cast<std::uint64_t>(-u);
  if (ap.first > down) return AP{ap.first - down, ap.diff};
  // Skip terms that land at or below zero.
  std::uint64_t skip = (down - ap.first) / ap.diff + 1;
  return AP{ap.first + skip * ap.diff - down, ap.diff};
}

std::vector<std::uint64_t> reflect(const AP& ap, std::int64_t u) {
  std::vector<std::uint64_t> out;
  if (u <= 0) return out;
  auto top = static_cast<std::uint64_t>(u);
  for (std::uint64_t x = ap.first; x < top; x += ap.diff) out.push_back(top - x);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> affine(std::span<const std::uint64_t> elements, std::int64_t u,
                                  int sign) {
  if (sign != 1 && sign != -1) throw PreconditionError("affine sign must be +1 or -1");
  std::vector<std::uint64_t> out;
  out.reserve(elements.size());
  for (std::uint64_t x : elements) {
    __int128 y = sign > 0 ? static_cast<__int128>(u) + x : static_cast<__int128>(u) - x;
    if (y >= 1) out.push_back(static_cast<std::uint64_t>(y));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace addcomp
