#include "fracton/gf2/bit_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace fracton::gf2 {

BitVector BitVector::from_support(std::size_t len, std::span<const std::size_t> support) {
    BitVector v(len);
    for (std::size_t i : support) {
        if (i >= len) {
            throw std::out_of_range("BitVector::from_support: position out of range");
        }
        v.flip(i);
    }
    return v;
}

BitVector BitVector::ones(std::size_t len) {
    BitVector v(len);
    std::fill(v.words_.begin(), v.words_.end(), ~Word{0});
    if (len % kWordBits != 0) {
        v.words_.back() = (Word{1} << (len % kWordBits)) - 1;
    }
    return v;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        Word x = words_[w];
        while (x != 0) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.len_ != len_) {
        throw std::invalid_argument("BitVector: length mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    if (other.len_ != len_) {
        throw std::invalid_argument("BitVector: length mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.len_ != len_) {
        throw std::invalid_argument("BitVector: length mismatch");
    }
    Word acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        acc ^= words_[i] & other.words_[i];
    }
    return (std::popcount(acc) & 1) != 0;
}

}  // namespace fracton::gf2
