#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fplab {

/// Fixed-length bit array over positions [0, n). Bits past n in the last
/// word are kept clear.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t length() const noexcept { return n_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool all() const noexcept { return count() == n_; }

  BitVector& operator|=(const BitVector& o);
  BitVector& operator&=(const BitVector& o);
  /// this &= ~o
  BitVector& subtract(const BitVector& o);
  bool is_subset_of(const BitVector& o) const;

  void clear_tail();

  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Cyclic sumset of two subsets of Z/n given as length-n bit arrays:
/// {(a + b) mod n : a in lhs, b in rhs}. Each output word is the OR of
/// rotated words of the larger operand, one rotation per element of the
/// smaller one; output words are computed in parallel.
BitVector cyclic_sumset(const BitVector& lhs, const BitVector& rhs);

/// {(shift + x) mod n : x in src}.
BitVector cyclic_rotate(const BitVector& src, std::size_t shift);

}  // namespace fplab
