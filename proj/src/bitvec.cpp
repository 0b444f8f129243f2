#include "fplab/bitvec.hpp"

#include <algorithm>

namespace fplab {

std::size_t BitVector::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitVector::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

BitVector& BitVector::operator|=(const BitVector& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

BitVector& BitVector::subtract(const BitVector& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

bool BitVector::is_subset_of(const BitVector& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

void BitVector::clear_tail() {
  if (n_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }
}

namespace {

// Bit i of the result is src[i mod n] for i in [0, n + 128): reading any
// 64-bit window starting below n never wraps.
std::vector<std::uint64_t> tile(const BitVector& src) {
  const std::size_t n = src.length();
  const std::size_t len = n + 128;
  std::vector<std::uint64_t> out((len + 63) / 64 + 1, 0);
  const auto words = src.words();
  for (std::size_t base = 0; base < len; base += n) {
    // OR a copy of src starting at bit offset `base`.
    const std::size_t wo = base >> 6;
    const unsigned sh = base & 63;
    for (std::size_t w = 0; w < words.size() && wo + w < out.size(); ++w) {
      out[wo + w] |= words[w] << sh;
      if (sh != 0 && wo + w + 1 < out.size()) out[wo + w + 1] |= words[w] >> (64 - sh);
    }
  }
  return out;
}

inline std::uint64_t window(const std::vector<std::uint64_t>& t, std::size_t start) {
  const std::size_t w = start >> 6;
  const unsigned sh = start & 63;
  if (sh == 0) return t[w];
  return (t[w] >> sh) | (t[w + 1] << (64 - sh));
}

}  // namespace

BitVector cyclic_sumset(const BitVector& lhs, const BitVector& rhs) {
  const std::size_t n = lhs.length();
  BitVector out(n);
  const bool lhs_smaller = lhs.count() <= rhs.count();
  const BitVector& small = lhs_smaller ? lhs : rhs;
  const BitVector& large = lhs_smaller ? rhs : lhs;
  if (small.none() || large.none()) return out;

  std::vector<std::size_t> shifts;
  small.for_each_set([&](std::uint32_t a) { shifts.push_back(a); });
  const auto tiled = tile(large);
  auto dst = out.words();
  const auto word_count = static_cast<std::int64_t>(dst.size());

  // out[x] = OR_a large[(x - a) mod n]; the window for output word w starts
  // at (64 w - a) mod n in the tiled copy.
#pragma omp parallel for schedule(static)
  for (std::int64_t w = 0; w < word_count; ++w) {
    const std::size_t x0 = static_cast<std::size_t>(w) * 64 % n;
    std::uint64_t acc = 0;
    for (std::size_t a : shifts) {
      const std::size_t start = (x0 + n - a) % n;
      acc |= window(tiled, start);
    }
    dst[static_cast<std::size_t>(w)] = acc;
  }
  out.clear_tail();
  return out;
}

BitVector cyclic_rotate(const BitVector& src, std::size_t shift) {
  BitVector single(src.length());
  single.set(shift % src.length());
  return cyclic_sumset(src, single);
}

}  // namespace fplab
