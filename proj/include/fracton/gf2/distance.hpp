#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fracton/gf2/bit_matrix.hpp"
#include "fracton/gf2/bit_vector.hpp"

namespace fracton::gf2 {

/// A code distance, or the "no codeword" sentinel which compares above every finite value.
class Distance {
  public:
    static Distance infinite() { return Distance(); }
    explicit Distance(std::size_t value) : value_(value) {}

    bool is_finite() const { return value_.has_value(); }
    std::size_t value() const { return value_.value(); }
    std::string to_string() const { return value_ ? std::to_string(*value_) : std::string("inf"); }

    std::strong_ordering operator<=>(const Distance& other) const {
        if (value_ && other.value_) {
            return *value_ <=> *other.value_;
        }
        return value_.has_value() ? std::strong_ordering::less
               : other.value_.has_value() ? std::strong_ordering::greater
                                           : std::strong_ordering::equal;
    }
    bool operator==(const Distance& other) const = default;

  private:
    Distance() = default;
    std::optional<std::size_t> value_;
};

struct MinWeightOptions {
    /// Enumerate exhaustively when the searched kernel has at most this dimension.
    std::size_t exhaustive_threshold = 28;
    /// Random information-set iterations above the threshold.
    std::size_t iterations = 2000;
    std::uint64_t seed = 0x5eed;
    /// Keep up to this many distinct minimum-weight vectors in MinWeightResult::minimal.
    std::size_t collect_minimal = 0;
};

struct MinWeightResult {
    Distance weight = Distance::infinite();
    /// A vector attaining `weight`; empty (size 0) when the weight is infinite.
    BitVector witness;
    bool exact = true;
    /// Distinct vectors of weight `weight` met during the search, in support order.
    std::vector<BitVector> minimal;
};

/// Minimum Hamming weight over kernel(M) minus {0}. Among minimum-weight vectors found,
/// the one with lexicographically smallest support is returned.
MinWeightResult min_weight_nonzero(const BitMatrix& m, const MinWeightOptions& options = {});

/// Minimum Hamming weight over kernel(M) minus rowspace(exclude).
MinWeightResult min_weight_nonzero(const BitMatrix& m, const BitMatrix& exclude,
                                   const MinWeightOptions& options = {});

/// True when a precedes b in the lexicographic order of ascending supports.
bool support_less(const BitVector& a, const BitVector& b);

}  // namespace fracton::gf2
