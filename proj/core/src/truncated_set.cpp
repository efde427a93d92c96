#include "addcomp/truncated_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "addcomp/errors.hpp"
#include "parallel.hpp"

namespace addcomp {

namespace {

constexpr std::uint64_t kBlockWords = TruncatedSet::kBlockBits / 64;

}  // namespace

TruncatedSet::TruncatedSet(std::uint64_t N) : n_(N) {
  if (N == 0) throw DomainError("truncation bound must be >= 1");
  words_.assign(N / 64 + 1, 0);
}

TruncatedSet TruncatedSet::from_elements(std::uint64_t N, std::span<const std::uint64_t> elements) {
  TruncatedSet s(N);
  for (std::uint64_t x : elements) s.insert(x);
  return s;
}

TruncatedSet TruncatedSet::full(std::uint64_t N) {
  TruncatedSet s(N);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.normalize();
  return s;
}

void TruncatedSet::normalize() {
  words_[0] &= ~std::uint64_t{1};
  const std::uint64_t used = (n_ & 63) + 1;  // bits 0..(N mod 64) of the last word
  if (used < 64) words_.back() &= (std::uint64_t{1} << used) - 1;
}

void TruncatedSet::insert(const AP& ap) {
  if (ap.diff == 0) throw DomainError("arithmetic progression with zero difference");
  for (std::uint64_t x = ap.first; x <= n_; x += ap.diff) {
    words_[x >> 6] |= std::uint64_t{1} << (x & 63);
    if (ap.diff > n_ - x) break;
  }
}

std::uint64_t TruncatedSet::count() const {
  std::uint64_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

std::uint64_t TruncatedSet::count_upto(std::uint64_t n) const {
  n = std::min(n, n_);
  std::uint64_t c = 0;
  const std::uint64_t last = n >> 6;
  for (std::uint64_t i = 0; i < last; ++i) c += static_cast<std::uint64_t>(std::popcount(words_[i]));
  const std::uint64_t keep = (n & 63) + 1;
  std::uint64_t tail = words_[last];
  if (keep < 64) tail &= (std::uint64_t{1} << keep) - 1;
  return c + static_cast<std::uint64_t>(std::popcount(tail));
}

std::vector<std::uint64_t> TruncatedSet::elements() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::uint64_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::optional<std::uint64_t> TruncatedSet::max_element() const {
  for (std::uint64_t i = words_.size(); i-- > 0;) {
    if (words_[i]) return i * 64 + 63 - static_cast<std::uint64_t>(std::countl_zero(words_[i]));
  }
  return std::nullopt;
}

TruncatedSet TruncatedSet::restrict_to(std::uint64_t n) const {
  if (n > n_) throw PreconditionError("restrict_to: window exceeds the truncation bound");
  TruncatedSet out(n);
  std::copy_n(words_.begin(), out.words_.size(), out.words_.begin());
  out.normalize();
  return out;
}

std::uint64_t TruncatedSet::bits_at(std::int64_t pos) const {
  if (pos <= -64) return 0;
  if (pos < 0) return words_[0] << static_cast<unsigned>(-pos);
  auto upos = static_cast<std::uint64_t>(pos);
  std::uint64_t i = upos >> 6;
  unsigned off = upos & 63;
  if (i >= words_.size()) return 0;
  std::uint64_t lo = words_[i] >> off;
  if (off != 0 && i + 1 < words_.size()) lo |= words_[i + 1] << (64 - off);
  return lo;
}

void TruncatedSet::check_same_bound(const TruncatedSet& o) const {
  if (n_ != o.n_) {
    throw PreconditionError("truncation bounds differ: " + std::to_string(n_) + " vs " +
                            std::to_string(o.n_));
  }
}

TruncatedSet& TruncatedSet::operator|=(const TruncatedSet& o) {
  check_same_bound(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

TruncatedSet& TruncatedSet::operator&=(const TruncatedSet& o) {
  check_same_bound(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

TruncatedSet& TruncatedSet::operator^=(const TruncatedSet& o) {
  check_same_bound(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

TruncatedSet truncate(const AP& ap, std::uint64_t N) {
  TruncatedSet s(N);
  s.insert(ap);
  return s;
}

TruncatedSet truncate(const UdapSet& set, std::uint64_t N) {
  TruncatedSet s(N);
  for (const AP& ap : set.aps) s.insert(ap);
  return s;
}

TruncatedSet truncate(std::span<const std::uint64_t> elements, std::uint64_t N) {
  return TruncatedSet::from_elements(N, elements);
}

TruncatedSet sumset(const TruncatedSet& a, const TruncatedSet& b, ExecConfig exec) {
  if (a.bound() != b.bound()) {
    throw PreconditionError("sumset: truncation bounds differ: " + std::to_string(a.bound()) +
                            " vs " + std::to_string(b.bound()));
  }
  const bool a_sparse = a.count() <= b.count();
  const TruncatedSet& dense = a_sparse ? b : a;
  const std::vector<std::uint64_t> shifts = (a_sparse ? a : b).elements();

  TruncatedSet out(a.bound());
  auto in = dense.words();
  auto dst = out.words();
  const std::uint64_t nwords = dst.size();
  const std::uint64_t blocks = (nwords + kBlockWords - 1) / kBlockWords;

  detail::for_each_block(blocks, exec.threads, [&](std::uint64_t block) {
    const std::uint64_t w_begin = block * kBlockWords;
    const std::uint64_t w_end = std::min(nwords, w_begin + kBlockWords);
    const std::uint64_t bit_end = w_end * 64;
    for (std::uint64_t s : shifts) {
      if (s >= bit_end) break;
      // Output bit 64w + j reads input bit 64w + j - s = 64(w - k) + off + j.
      const unsigned off = static_cast<unsigned>((64 - (s & 63)) & 63);
      const std::uint64_t k = (s + off) / 64;
      if (off == 0) {
        for (std::uint64_t w = std::max(w_begin, k); w < w_end; ++w) dst[w] |= in[w - k];
      } else {
        // Output word k - 1 already receives the low bits of input word 0.
        for (std::uint64_t w = std::max(w_begin, k - 1); w < w_end; ++w) {
          std::uint64_t lo = w >= k ? in[w - k] >> off : 0;
          std::uint64_t hi = (w + 1 >= k && w + 1 - k < nwords) ? in[w + 1 - k] << (64 - off) : 0;
          dst[w] |= lo | hi;
        }
      }
    }
  });
  out.normalize();
  return out;
}

TruncatedSet complement_in_N(const TruncatedSet& a) {
  TruncatedSet out = a;
  for (std::uint64_t& w : out.words()) w = ~w;
  out.normalize();
  return out;
}

TruncatedSet affine(const TruncatedSet& a, std::int64_t u, int sign) {
  if (sign != 1 && sign != -1) throw PreconditionError("affine sign must be +1 or -1");
  TruncatedSet out(a.bound());
  for (std::uint64_t x : a.elements()) {
    __int128 y = sign > 0 ? static_cast<__int128>(u) + x : static_cast<__int128>(u) - x;
    if (y >= 1 && y <= static_cast<__int128>(a.bound())) out.insert(static_cast<std::uint64_t>(y));
  }
  return out;
}

}  // namespace addcomp
