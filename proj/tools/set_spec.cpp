#include "set_spec.hpp"

#include <algorithm>
#include <charconv>

#include "addcomp/errors.hpp"
#include "addcomp/expansion.hpp"

namespace addcomp::cli {

namespace {

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw PreconditionError("not an unsigned integer: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> parse_u64_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (std::string_view tok : split(text, ',')) out.push_back(parse_u64(tok));
  return out;
}

std::vector<AP> parse_ap_list(std::string_view text) {
  std::vector<AP> out;
  for (std::string_view tok : split(text, ',')) {
    const std::size_t colon = tok.find(':');
    if (colon == std::string_view::npos) {
      throw PreconditionError("expected first:diff, got '" + std::string(tok) + "'");
    }
    AP ap{parse_u64(tok.substr(0, colon)), parse_u64(tok.substr(colon + 1))};
    if (ap.first == 0 || ap.diff == 0) {
      throw DomainError("progression '" + std::string(tok) + "' needs first >= 1 and diff >= 1");
    }
    out.push_back(ap);
  }
  return out;
}

SetSpec SetSpec::parse(std::string_view text) {
  SetSpec s;
  s.text_ = std::string(text);
  if (text == "even") {
    s.aps_.push_back(AP{2, 2});
  } else if (text == "odd") {
    s.aps_.push_back(AP{1, 2});
  } else if (text == "all") {
    s.aps_.push_back(AP{1, 1});
  } else if (text == "squares") {
    s.kind_ = Kind::kSquares;
  } else if (text.starts_with("pow:")) {
    auto parts = split(text.substr(4), ':');
    if (parts.size() != 2) throw PreconditionError("expected pow:a:g, got '" + s.text_ + "'");
    s.kind_ = Kind::kPow;
    s.pow_a_ = parse_u64(parts[0]);
    s.pow_g_ = parse_u64(parts[1]);
    if (s.pow_a_ == 0 || s.pow_g_ < 2) throw DomainError("pow:a:g needs a >= 1 and g >= 2");
  } else if (text.starts_with("mset:")) {
    DigitExpansion e = DigitExpansion::parse(text.substr(5));
    s.kind_ = Kind::kMSet;
    s.mset_.emplace(e.base(), e);
  } else {
    if (text.empty()) throw PreconditionError("empty set specification");
    for (std::string_view tok : split(text, ',')) {
      const std::size_t colon = tok.find(':');
      if (colon == std::string_view::npos) {
        s.elements_.push_back(parse_u64(tok));
        continue;
      }
      s.aps_.push_back(parse_ap_list(tok).front());
    }
    std::sort(s.elements_.begin(), s.elements_.end());
    s.elements_.erase(std::unique(s.elements_.begin(), s.elements_.end()), s.elements_.end());
  }
  return s;
}

bool SetSpec::finite() const { return kind_ == Kind::kList && aps_.empty(); }

TruncatedSet SetSpec::realize(std::uint64_t N) const {
  TruncatedSet out(N);
  switch (kind_) {
    case Kind::kList:
      for (std::uint64_t x : elements_) out.insert(x);
      for (const AP& ap : aps_) out.insert(ap);
      break;
    case Kind::kSquares:
      for (std::uint64_t i = 1; i * i <= N; ++i) out.insert(i * i);
      break;
    case Kind::kPow: {
      unsigned __int128 x = static_cast<unsigned __int128>(pow_a_) * pow_g_;
      for (; x <= N; x *= pow_g_) out.insert(static_cast<std::uint64_t>(x));
      break;
    }
    case Kind::kMSet:
      out = truncate(*mset_, N);
      break;
  }
  return out;
}

std::vector<std::uint64_t> SetSpec::first(std::uint64_t count) const {
  for (std::uint64_t n = 1024;; n *= 2) {
    std::vector<std::uint64_t> xs = realize(n).elements();
    if (xs.size() >= count) {
      xs.resize(count);
      return xs;
    }
    if (finite() && n >= elements_.back()) return xs;
    if (n >= (std::uint64_t{1} << 40)) {
      throw DomainError("set '" + text_ + "' has fewer than " + std::to_string(count) +
                        " members below 2^40");
    }
  }
}

Rational parse_alpha(std::string_view text) {
  if (text.find(':') != std::string_view::npos) return value(DigitExpansion::parse(text));
  if (text.find_first_of(".eE") != std::string_view::npos) {
    throw PreconditionError("alpha must be exact (num/den or q:pre|period), got '" +
                            std::string(text) + "'");
  }
  return Rational::parse(text);
}

}  // namespace addcomp::cli
