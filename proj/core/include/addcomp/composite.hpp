#pragma once

#include <cstdint>
#include <vector>

#include "addcomp/ap.hpp"
#include "addcomp/mset.hpp"
#include "addcomp/rational.hpp"
#include "addcomp/truncated_set.hpp"

namespace addcomp {

/// offset + M_{>= first_level}: a translated M-set, optionally with its
/// lowest levels dropped.
struct MComponent {
  std::uint64_t offset = 0;
  MSet set;
  std::uint64_t first_level = 1;
};

/// Finite list of progressions plus translated M-set components. This is the
/// shape every density-targeted construction produces; it is a UDAP set when
/// all pieces are pairwise disjoint (see composite_levels).
struct UdapComposite {
  std::vector<AP> aps;
  std::vector<MComponent> parts;
};

bool composite_member(const UdapComposite& c, std::uint64_t x);

TruncatedSet truncate(const UdapComposite& c, std::uint64_t N);

std::uint64_t composite_count(const UdapComposite& c, std::uint64_t n);

/// Sum of the piece densities. Equals the density of the union only when the
/// pieces are disjoint, which udap_certificate on composite_levels checks.
Rational exact_density(const UdapComposite& c);

struct CompositeLevels {
  std::vector<AP> levels;     ///< plain progressions, then each part's levels <= depth
  std::vector<AP> residuals;  ///< one per part with a nonzero digit past depth, containing its deeper levels
  std::uint64_t depth = 0;
};

/// Materializes every part to `depth`. Throws DomainError when a part's
/// modulus q^depth reaches 2^63.
CompositeLevels composite_levels(const UdapComposite& c, std::uint64_t depth);

/// Largest depth <= wanted whose moduli all stay below 2^63 (at least 1).
std::uint64_t feasible_depth(const UdapComposite& c, std::uint64_t wanted);

}  // namespace addcomp
