#include "addcomp/expansion.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "addcomp/errors.hpp"

namespace addcomp {

namespace {

std::vector<Digit> parse_digits(std::string_view s, std::string_view whole) {
  std::vector<Digit> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    auto token = s.substr(start, comma == std::string_view::npos ? s.npos : comma - start);
    Digit d = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), d);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw PreconditionError("malformed digit '" + std::string(token) + "' in expansion '" +
                              std::string(whole) + "'");
    }
    out.push_back(d);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void join_digits(std::string& out, const std::vector<Digit>& digits) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(digits[i]);
  }
}

}  // namespace

DigitExpansion::DigitExpansion(std::uint64_t base, std::vector<Digit> preperiod,
                               std::vector<Digit> period)
    : base_(base), pre_(std::move(preperiod)), period_(std::move(period)) {
  if (base_ < 2) throw DomainError("expansion base must be >= 2");
  if (period_.empty()) throw DomainError("expansion period must be nonempty");
  auto bad = [this](Digit d) { return d >= base_; };
  if (std::any_of(pre_.begin(), pre_.end(), bad) ||
      std::any_of(period_.begin(), period_.end(), bad)) {
    throw DomainError("expansion digit outside [0, q-1] for q = " + std::to_string(base_));
  }
  canonicalize();
}

void DigitExpansion::canonicalize() {
  const std::size_t len = period_.size();
  for (std::size_t p = 1; p < len; ++p) {
    if (len % p) continue;
    bool repeats = true;
    for (std::size_t i = p; i < len && repeats; ++i) repeats = period_[i] == period_[i - p];
    if (repeats) {
      period_.resize(p);
      break;
    }
  }
  while (!pre_.empty() && pre_.back() == period_.back()) {
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    pre_.pop_back();
  }
}

DigitExpansion DigitExpansion::parse(std::string_view text) {
  auto colon = text.find(':');
  auto bar = text.find('|');
  if (colon == std::string_view::npos || bar == std::string_view::npos || bar < colon) {
    throw PreconditionError("expansion must look like q:pre|period, got '" + std::string(text) +
                            "'");
  }
  std::uint64_t q = 0;
  auto qs = text.substr(0, colon);
  auto [ptr, ec] = std::from_chars(qs.data(), qs.data() + qs.size(), q);
  if (qs.empty() || ec != std::errc() || ptr != qs.data() + qs.size()) {
    throw PreconditionError("malformed base in expansion '" + std::string(text) + "'");
  }
  return DigitExpansion(q, parse_digits(text.substr(colon + 1, bar - colon - 1), text),
                        parse_digits(text.substr(bar + 1), text));
}

Digit DigitExpansion::digit(std::uint64_t n) const {
  if (n == 0) throw PreconditionError("digit index starts at 1");
  if (n <= pre_.size()) return pre_[n - 1];
  return period_[(n - 1 - pre_.size()) % period_.size()];
}

bool DigitExpansion::tail_nonzero(std::uint64_t n) const {
  auto nz = [](Digit d) { return d != 0; };
  if (std::any_of(period_.begin(), period_.end(), nz)) return true;
  if (n == 0) n = 1;
  if (n > pre_.size()) return false;
  return std::any_of(pre_.begin() + static_cast<std::ptrdiff_t>(n - 1), pre_.end(), nz);
}

DigitExpansion DigitExpansion::with_digit(std::uint64_t n, Digit d) const {
  if (n == 0) throw PreconditionError("digit index starts at 1");
  std::vector<Digit> pre = pre_;
  std::vector<Digit> period = period_;
  while (pre.size() < n) {
    pre.push_back(period.front());
    std::rotate(period.begin(), period.begin() + 1, period.end());
  }
  pre[n - 1] = d;
  return DigitExpansion(base_, std::move(pre), std::move(period));
}

DigitExpansion DigitExpansion::shifted(std::uint64_t n) const {
  if (n <= pre_.size()) {
    return DigitExpansion(base_, std::vector<Digit>(pre_.begin() + static_cast<std::ptrdiff_t>(n), pre_.end()),
                          period_);
  }
  std::vector<Digit> period = period_;
  auto k = static_cast<std::ptrdiff_t>((n - pre_.size()) % period.size());
  std::rotate(period.begin(), period.begin() + k, period.end());
  return DigitExpansion(base_, {}, std::move(period));
}

std::string DigitExpansion::str() const {
  std::string out = std::to_string(base_) + ":";
  join_digits(out, pre_);
  out += '|';
  join_digits(out, period_);
  return out;
}

DigitExpansion expand(const Rational& alpha, std::uint64_t q) {
  if (q < 2) throw DomainError("expansion base must be >= 2");
  if (alpha < Rational(0) || alpha > Rational(1)) {
    throw DomainError("cannot expand " + alpha.str() + ": value outside [0,1]");
  }
  if (alpha == Rational(1)) return DigitExpansion(q, {}, {q - 1});

  // Long division: the remainder is the whole state, so the first repeated
  // remainder closes the period.
  const BigInt& den = alpha.den();
  BigInt rem = alpha.num();
  std::map<BigInt, std::size_t> seen;
  std::vector<Digit> digits;
  while (seen.find(rem) == seen.end()) {
    seen.emplace(rem, digits.size());
    BigInt scaled = rem * q;
    digits.push_back(static_cast<Digit>(scaled / den));
    rem = scaled % den;
  }
  auto start = static_cast<std::ptrdiff_t>(seen[rem]);
  return DigitExpansion(q, std::vector<Digit>(digits.begin(), digits.begin() + start),
                        std::vector<Digit>(digits.begin() + start, digits.end()));
}

Digit digit_at(const DigitExpansion& e, std::uint64_t n) { return e.digit(n); }

Rational prefix_value(const DigitExpansion& e, std::uint64_t d) {
  BigInt acc = 0;
  for (std::uint64_t i = 1; i <= d; ++i) acc = acc * e.base() + e.digit(i);
  return Rational(acc, big_pow(e.base(), d));
}

Rational value(const DigitExpansion& e) {
  const std::uint64_t q = e.base();
  const auto& pre = e.preperiod();
  const auto& period = e.period();
  Rational head = prefix_value(e, pre.size());
  BigInt block = 0;
  for (Digit d : period) block = block * q + d;
  BigInt scale = (big_pow(q, period.size()) - 1) * big_pow(q, pre.size());
  return head + Rational(block, scale);
}

}  // namespace addcomp
