#include "fracton/gf2/bit_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace fracton::gf2 {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::vector<BitVector> rows) {
    for (const auto& r : rows) {
        if (r.size() != cols) {
            throw std::invalid_argument("BitMatrix::from_rows: row length mismatch");
        }
    }
    BitMatrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::from_entries(std::size_t rows, std::size_t cols,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& entries) {
    BitMatrix m(rows, cols);
    for (auto [r, c] : entries) {
        if (r >= rows || c >= cols) {
            throw std::out_of_range("BitMatrix::from_entries: entry out of range");
        }
        if (m.get(r, c)) {
            throw std::invalid_argument("BitMatrix::from_entries: duplicate entry");
        }
        m.set(r, c);
    }
    return m;
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        if (get(r, c)) {
            v.set(r);
        }
    }
    return v;
}

BitVector BitMatrix::apply(const BitVector& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("BitMatrix::apply: dimension mismatch");
    }
    BitVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        if (rows_[r].dot(v)) {
            out.set(r);
        }
    }
    return out;
}

BitVector BitMatrix::apply_left(const BitVector& v) const {
    if (v.size() != rows()) {
        throw std::invalid_argument("BitMatrix::apply_left: dimension mismatch");
    }
    BitVector out(cols_);
    for (std::size_t r : v.support()) {
        out ^= rows_[r];
    }
    return out;
}

std::size_t BitMatrix::count_ones() const {
    std::size_t total = 0;
    for (const auto& r : rows_) {
        total += r.weight();
    }
    return total;
}

bool BitMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.is_zero(); });
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != cols_) {
        throw std::invalid_argument("BitMatrix::append_row: length mismatch");
    }
    rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::select_rows(const std::vector<std::size_t>& keep) const {
    BitMatrix out;
    out.cols_ = cols_;
    out.rows_.reserve(keep.size());
    for (std::size_t r : keep) {
        out.rows_.push_back(rows_.at(r));
    }
    return out;
}

BitMatrix BitMatrix::select_columns(const std::vector<std::size_t>& keep) const {
    BitMatrix out(rows(), keep.size());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t j = 0; j < keep.size(); ++j) {
            if (get(r, keep[j])) {
                out.set(r, j);
            }
        }
    }
    return out;
}

SparseBitMatrix SparseBitMatrix::from_dense(const BitMatrix& m) {
    SparseBitMatrix s(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        s.row_support_[r] = m.row(r).support();
    }
    return s;
}

BitMatrix SparseBitMatrix::to_dense() const {
    BitMatrix m(rows(), cols_);
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c : row_support_[r]) {
            m.set(r, c);
        }
    }
    return m;
}

void SparseBitMatrix::toggle(std::size_t r, std::size_t c) {
    if (r >= rows() || c >= cols_) {
        throw std::out_of_range("SparseBitMatrix::toggle: entry out of range");
    }
    auto& row = row_support_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c);
    if (it != row.end() && *it == c) {
        row.erase(it);
    } else {
        row.insert(it, c);
    }
}

bool SparseBitMatrix::get(std::size_t r, std::size_t c) const {
    const auto& row = row_support_.at(r);
    return std::binary_search(row.begin(), row.end(), c);
}

std::size_t SparseBitMatrix::nnz() const {
    std::size_t total = 0;
    for (const auto& r : row_support_) {
        total += r.size();
    }
    return total;
}

std::vector<std::vector<std::size_t>> SparseBitMatrix::column_support() const {
    std::vector<std::vector<std::size_t>> cols(cols_);
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c : row_support_[r]) {
            cols[c].push_back(r);
        }
    }
    return cols;
}

SparseBitMatrix SparseBitMatrix::transposed() const {
    SparseBitMatrix t(cols_, rows());
    t.row_support_ = column_support();
    return t;
}

}  // namespace fracton::gf2
