#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fracton/gf2/bit_vector.hpp"

namespace fracton::gf2 {

class SparseBitMatrix;

/// Dense row-major matrix over F2; each row is a packed BitVector.
/// This is the representation used by every row-reduction routine.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::size_t cols, std::vector<BitVector> rows);
    static BitMatrix from_entries(std::size_t rows, std::size_t cols,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& entries);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
    void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }

    const BitVector& row(std::size_t r) const { return rows_[r]; }
    BitVector& row(std::size_t r) { return rows_[r]; }
    const std::vector<BitVector>& row_vectors() const { return rows_; }

    BitVector column(std::size_t c) const;

    /// M * v.
    BitVector apply(const BitVector& v) const;
    /// v^T * M, i.e. the XOR of the rows selected by v.
    BitVector apply_left(const BitVector& v) const;

    std::size_t count_ones() const;
    bool is_zero() const;

    void append_row(BitVector row);
    BitMatrix select_rows(const std::vector<std::size_t>& keep) const;
    BitMatrix select_columns(const std::vector<std::size_t>& keep) const;

    bool operator==(const BitMatrix& other) const = default;

  private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Row-list (CSR-like) representation; used for construction, Tanner graphs and I/O.
class SparseBitMatrix {
  public:
    SparseBitMatrix() = default;
    SparseBitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), row_support_(rows) {}

    static SparseBitMatrix from_dense(const BitMatrix& m);
    BitMatrix to_dense() const;

    std::size_t rows() const { return row_support_.size(); }
    std::size_t cols() const { return cols_; }

    /// Toggle entry (r, c); keeps each row ascending and duplicate-free.
    void toggle(std::size_t r, std::size_t c);
    bool get(std::size_t r, std::size_t c) const;

    const std::vector<std::size_t>& row(std::size_t r) const { return row_support_[r]; }
    std::size_t nnz() const;

    /// Column lists: result[c] holds ascending rows with a one in column c.
    std::vector<std::vector<std::size_t>> column_support() const;

    SparseBitMatrix transposed() const;

    bool operator==(const SparseBitMatrix& other) const = default;

  private:
    std::size_t cols_ = 0;
    std::vector<std::vector<std::size_t>> row_support_;
};

}  // namespace fracton::gf2
