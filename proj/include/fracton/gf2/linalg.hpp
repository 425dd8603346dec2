#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fracton/gf2/bit_matrix.hpp"
#include "fracton/gf2/bit_vector.hpp"

namespace fracton::gf2 {

/// Reduced row echelon form: `rows` holds exactly rank() nonzero rows,
/// row i has its leading one in column `pivots[i]` and every other row is zero there.
struct Echelon {
    BitMatrix rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return pivots.size(); }
};

Echelon rref(BitMatrix m);

std::size_t rank(const BitMatrix& m);
std::size_t rank(const SparseBitMatrix& m);

/// Basis of {v : M v = 0}; size is cols - rank.
std::vector<BitVector> kernel_basis(const BitMatrix& m);
/// Basis of {y : y^T M = 0}; size is rows - rank.
std::vector<BitVector> cokernel_basis(const BitMatrix& m);

/// Some e with M e = s, or nullopt when s is outside the image of M.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& s);

/// Membership and reduction against a fixed row space.
class RowSpace {
  public:
    RowSpace() = default;
    explicit RowSpace(const BitMatrix& m);

    std::size_t dim() const { return echelon_.rank(); }
    std::size_t ambient() const { return cols_; }

    /// Returns v reduced modulo the row space; zero iff v lies in it.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }

  private:
    std::size_t cols_ = 0;
    Echelon echelon_;
};

BitMatrix transpose(const BitMatrix& m);
BitMatrix matmul(const BitMatrix& a, const BitMatrix& b);
BitMatrix kronecker(const BitMatrix& a, const BitMatrix& b);
BitMatrix add(const BitMatrix& a, const BitMatrix& b);
BitMatrix hconcat(const std::vector<BitMatrix>& blocks);
BitMatrix vconcat(const std::vector<BitMatrix>& blocks);
/// Block matrix; every block in a grid row shares a row count, every block in a grid column a column count.
BitMatrix block(const std::vector<std::vector<BitMatrix>>& grid);

}  // namespace fracton::gf2
