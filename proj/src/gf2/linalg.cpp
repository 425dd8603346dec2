#include "fracton/gf2/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace fracton::gf2 {

namespace {

// XOR src into dst starting at word `from`; callers guarantee lower words of src are zero.
inline void xor_from(BitVector& dst, const BitVector& src, std::size_t from) {
    auto d = dst.words();
    auto s = src.words();
    for (std::size_t w = from; w < d.size(); ++w) {
        d[w] ^= s[w];
    }
}

// Eliminates over the first `pivot_cols` columns. With `full` set the result is reduced
// (zeros above pivots too); otherwise it is only row echelon.
std::vector<std::size_t> eliminate(std::vector<BitVector>& rows, std::size_t pivot_cols, bool full) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[p]);
        const std::size_t from = c / kWordBits;
        for (std::size_t i = full ? 0 : r + 1; i < rows.size(); ++i) {
            if (i != r && rows[i].get(c)) {
                xor_from(rows[i], rows[r], from);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Echelon rref(BitMatrix m) {
    std::vector<BitVector> rows = m.row_vectors();
    auto pivots = eliminate(rows, m.cols(), true);
    rows.resize(pivots.size());
    return Echelon{BitMatrix::from_rows(m.cols(), std::move(rows)), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m) {
    std::vector<BitVector> rows = m.row_vectors();
    return eliminate(rows, m.cols(), false).size();
}

std::size_t rank(const SparseBitMatrix& m) { return rank(m.to_dense()); }

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector v(m.cols());
        v.set(f);
        for (std::size_t i = 0; i < e.rank(); ++i) {
            if (e.rows.get(i, f)) {
                v.set(e.pivots[i]);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<BitVector> cokernel_basis(const BitMatrix& m) { return kernel_basis(transpose(m)); }

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& s) {
    if (s.size() != m.rows()) {
        throw std::invalid_argument("solve: syndrome length does not match row count");
    }
    const std::size_t n = m.cols();
    std::vector<BitVector> aug;
    aug.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVector row(n + 1);
        for (std::size_t c : m.row(r).support()) {
            row.set(c);
        }
        row.set(n, s.get(r));
        aug.push_back(std::move(row));
    }
    auto pivots = eliminate(aug, n, true);
    for (std::size_t r = pivots.size(); r < aug.size(); ++r) {
        if (aug[r].get(n)) {
            return std::nullopt;
        }
    }
    BitVector e(n);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        e.set(pivots[i], aug[i].get(n));
    }
    return e;
}

RowSpace::RowSpace(const BitMatrix& m) : cols_(m.cols()), echelon_(rref(m)) {}

BitVector RowSpace::reduce(BitVector v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("RowSpace::reduce: length mismatch");
    }
    for (std::size_t i = 0; i < echelon_.rank(); ++i) {
        if (v.get(echelon_.pivots[i])) {
            v ^= echelon_.rows.row(i);
        }
    }
    return v;
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c : m.row(r).support()) {
            t.set(c, r);
        }
    }
    return t;
}

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: inner dimensions differ");
    }
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k : a.row(r).support()) {
            out.row(r) ^= b.row(k);
        }
    }
    return out;
}

BitMatrix kronecker(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<std::vector<std::size_t>> b_support(b.rows());
    for (std::size_t k = 0; k < b.rows(); ++k) {
        b_support[k] = b.row(k).support();
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto a_support = a.row(i).support();
        for (std::size_t k = 0; k < b.rows(); ++k) {
            BitVector& dst = out.row(i * b.rows() + k);
            for (std::size_t j : a_support) {
                for (std::size_t l : b_support[k]) {
                    dst.set(j * b.cols() + l);
                }
            }
        }
    }
    return out;
}

BitMatrix add(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("add: shape mismatch");
    }
    BitMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        out.row(r) ^= b.row(r);
    }
    return out;
}

BitMatrix hconcat(const std::vector<BitMatrix>& blocks) {
    if (blocks.empty()) {
        return {};
    }
    const std::size_t rows = blocks.front().rows();
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) {
            throw std::invalid_argument("hconcat: row counts differ");
        }
        cols += b.cols();
    }
    BitMatrix out(rows, cols);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c : b.row(r).support()) {
                out.set(r, offset + c);
            }
        }
        offset += b.cols();
    }
    return out;
}

BitMatrix vconcat(const std::vector<BitMatrix>& blocks) {
    if (blocks.empty()) {
        return {};
    }
    const std::size_t cols = blocks.front().cols();
    std::vector<BitVector> rows;
    for (const auto& b : blocks) {
        if (b.cols() != cols) {
            throw std::invalid_argument("vconcat: column counts differ");
        }
        for (const auto& r : b.row_vectors()) {
            rows.push_back(r);
        }
    }
    return BitMatrix::from_rows(cols, std::move(rows));
}

BitMatrix block(const std::vector<std::vector<BitMatrix>>& grid) {
    std::vector<BitMatrix> stripes;
    stripes.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i > 0 && grid[i].size() != grid[0].size()) {
            throw std::invalid_argument("block: ragged grid");
        }
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
            if (i > 0 && grid[i][j].cols() != grid[0][j].cols()) {
                throw std::invalid_argument("block: column widths differ within a block column");
            }
        }
        stripes.push_back(hconcat(grid[i]));
    }
    return vconcat(stripes);
}

}  // namespace fracton::gf2
