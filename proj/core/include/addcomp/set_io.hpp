#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "addcomp/ap.hpp"
#include "addcomp/composite.hpp"
#include "addcomp/density.hpp"
#include "addcomp/mset.hpp"
#include "addcomp/truncated_set.hpp"

namespace addcomp {

/// Insertion-ordered JSON so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

/// Line-oriented set export:
///
///   UDAP q=<q> depth=<d>
///   <first> <diff>            one line per progression
///   RESIDUAL <first> <diff>   one line per residual progression
std::string export_udap(std::uint64_t q, std::uint64_t depth, std::span<const AP> levels,
                        std::span<const AP> residuals);

std::string export_udap(const MSet& m, std::uint64_t depth);
std::string export_udap(const UdapComposite& c, std::uint64_t q, std::uint64_t depth);

///   ELEMENTS N=<N>
///   <x>                       ascending, one per line
std::string export_elements(const TruncatedSet& s);

Json to_json(const Rational& r);
Json to_json(const AP& ap);
Json to_json(const DigitExpansion& e);

/// {claimed, checkpoints: [{n, count, ratio, bound, ok}]}; bound and ok are
/// null for sources without a proved tolerance.
Json to_json(const DensityReport& report);

}  // namespace addcomp
