#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fracton::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Bit-packed vector over F2. Bits past `size()` in the last word are always zero.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

    static BitVector from_support(std::size_t len, std::span<const std::size_t> support);
    static BitVector ones(std::size_t len);

    std::size_t size() const { return len_; }
    std::size_t num_words() const { return words_.size(); }

    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value = true) {
        Word mask = Word{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    std::size_t weight() const {
        std::size_t w = 0;
        for (Word x : words_) {
            w += static_cast<std::size_t>(std::popcount(x));
        }
        return w;
    }
    bool is_zero() const;

    /// Ascending positions of ones.
    std::vector<std::size_t> support() const;

    BitVector& operator^=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    bool operator==(const BitVector&) const = default;

    /// Parity of the bitwise AND.
    bool dot(const BitVector& other) const;

    std::span<Word> words() { return words_; }
    std::span<const Word> words() const { return words_; }

  private:
    std::size_t len_ = 0;
    std::vector<Word> words_;
};

}  // namespace fracton::gf2
