#include "addcomp/composite.hpp"

#include <algorithm>

namespace addcomp {

bool composite_member(const UdapComposite& c, std::uint64_t x) {
  if (x == 0) return false;
  for (const AP& ap : c.aps) {
    if (ap.contains(x)) return true;
  }
  for (const MComponent& part : c.parts) {
    if (x <= part.offset) continue;
    auto level = mset_member_level(part.set, x - part.offset);
    if (level && *level >= part.first_level) return true;
  }
  return false;
}

TruncatedSet truncate(const UdapComposite& c, std::uint64_t N) {
  TruncatedSet out(N);
  for (const AP& ap : c.aps) out.insert(ap);
  for (const MComponent& part : c.parts) {
    if (part.offset >= N) continue;
    TruncatedSet shifted = truncate(part.set, N - part.offset, part.first_level);
    for (std::uint64_t x : shifted.elements()) out.insert(x + part.offset);
  }
  return out;
}

std::uint64_t composite_count(const UdapComposite& c, std::uint64_t n) {
  std::uint64_t total = 0;
  for (const AP& ap : c.aps) total += ap.count_upto(n);
  for (const MComponent& part : c.parts) {
    if (part.offset < n) total += mset_count(part.set, n - part.offset, part.first_level);
  }
  return total;
}

Rational exact_density(const UdapComposite& c) {
  Rational total;
  for (const AP& ap : c.aps) total += Rational(BigInt(1), BigInt(ap.diff));
  for (const MComponent& part : c.parts) {
    const DigitExpansion& e = part.set.expansion();
    total += value(e) - prefix_value(e, part.first_level - 1);
  }
  return total;
}

CompositeLevels composite_levels(const UdapComposite& c, std::uint64_t depth) {
  CompositeLevels out;
  out.depth = depth;
  out.levels = c.aps;
  for (const MComponent& part : c.parts) {
    MSetLevels lv = mset_levels(part.set, depth);
    // Progressions are stored level by level, so the levels below
    // first_level are exactly the first sum_{n < first_level} a_n entries.
    std::uint64_t skip = 0;
    for (std::uint64_t n = 1; n < part.first_level && n <= depth; ++n) skip += part.set.digit(n);
    const auto offset = static_cast<std::int64_t>(part.offset);
    for (std::size_t i = skip; i < lv.levels.aps.size(); ++i) {
      out.levels.push_back(translate(lv.levels.aps[i], offset));
    }
    // A part whose digits vanish past depth has nothing left to hold.
    if (part.set.expansion().tail_nonzero(depth + 1)) {
      out.residuals.push_back(translate(lv.residual, offset));
    }
  }
  return out;
}

std::uint64_t feasible_depth(const UdapComposite& c, std::uint64_t wanted) {
  std::uint64_t best = std::max<std::uint64_t>(wanted, 1);
  for (const MComponent& part : c.parts) {
    unsigned __int128 mod = 1;
    std::uint64_t d = 0;
    while (d < best) {
      mod *= part.set.base();
      if (mod >= (static_cast<unsigned __int128>(1) << 63)) break;
      ++d;
    }
    best = std::max<std::uint64_t>(std::min(best, d), 1);
  }
  return best;
}

}  // namespace addcomp
