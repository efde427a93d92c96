#include "addcomp/set_io.hpp"

namespace addcomp {

std::string export_udap(std::uint64_t q, std::uint64_t depth, std::span<const AP> levels,
                        std::span<const AP> residuals) {
  std::string out = "UDAP q=" + std::to_string(q) + " depth=" + std::to_string(depth) + "\n";
  for (const AP& ap : levels) {
    out += std::to_string(ap.first) + " " + std::to_string(ap.diff) + "\n";
  }
  for (const AP& ap : residuals) {
    out += "RESIDUAL " + std::to_string(ap.first) + " " + std::to_string(ap.diff) + "\n";
  }
  return out;
}

std::string export_udap(const MSet& m, std::uint64_t depth) {
  MSetLevels lv = mset_levels(m, depth);
  return export_udap(m.base(), depth, lv.levels.aps, std::span<const AP>(&lv.residual, 1));
}

std::string export_udap(const UdapComposite& c, std::uint64_t q, std::uint64_t depth) {
  CompositeLevels lv = composite_levels(c, depth);
  return export_udap(q, depth, lv.levels, lv.residuals);
}

std::string export_elements(const TruncatedSet& s) {
  std::string out = "ELEMENTS N=" + std::to_string(s.bound()) + "\n";
  for (std::uint64_t x : s.elements()) {
    out += std::to_string(x);
    out += '\n';
  }
  return out;
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const AP& ap) { return Json{{"first", ap.first}, {"diff", ap.diff}}; }

Json to_json(const DigitExpansion& e) { return e.str(); }

Json to_json(const DensityReport& report) {
  Json cps = Json::array();
  for (const auto& cp : report.checkpoints) {
    Json j;
    j["n"] = cp.n;
    j["count"] = cp.count;
    j["ratio"] = cp.ratio.str();
    j["ratio_approx"] = cp.ratio.approx();
    j["bound"] = cp.bound ? Json(cp.bound->str()) : Json(nullptr);
    j["ok"] = cp.ok ? Json(*cp.ok) : Json(nullptr);
    cps.push_back(std::move(j));
  }
  return Json{{"claimed", report.claimed.str()}, {"checkpoints", std::move(cps)}};
}

}  // namespace addcomp
