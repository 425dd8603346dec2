#include "fracton/gf2/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fracton::gf2 {

namespace {

std::size_t parse_index(std::string_view token, const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw std::runtime_error(std::string("matrix format: bad ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        std::size_t j = line.find(' ', i);
        if (j == std::string_view::npos) {
            j = line.size();
        }
        if (j == i) {
            throw std::runtime_error("matrix format: repeated or leading space");
        }
        tokens.push_back(line.substr(i, j - i));
        i = j + 1;
        if (j < line.size() && i == line.size()) {
            throw std::runtime_error("matrix format: trailing space");
        }
    }
    return tokens;
}

}  // namespace

void write_matrix(std::ostream& out, const SparseBitMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto& row = m.row(r);
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                out << ' ';
            }
            out << row[i];
        }
        out << '\n';
    }
}

void write_matrix(std::ostream& out, const BitMatrix& m) { write_matrix(out, SparseBitMatrix::from_dense(m)); }

SparseBitMatrix read_matrix(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("matrix format: missing header");
    }
    auto header = split_spaces(line);
    if (header.size() != 2) {
        throw std::runtime_error("matrix format: header must be '<rows> <cols>'");
    }
    const std::size_t rows = parse_index(header[0], "row count");
    const std::size_t cols = parse_index(header[1], "column count");
    SparseBitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!std::getline(in, line)) {
            throw std::runtime_error("matrix format: expected " + std::to_string(rows) + " rows, got " +
                                     std::to_string(r));
        }
        std::size_t previous = 0;
        bool first = true;
        for (auto token : split_spaces(line)) {
            std::size_t c = parse_index(token, "column index");
            if (c >= cols) {
                throw std::runtime_error("matrix format: column index out of range in row " + std::to_string(r));
            }
            if (!first && c <= previous) {
                throw std::runtime_error("matrix format: indices not strictly ascending in row " + std::to_string(r));
            }
            m.toggle(r, c);
            previous = c;
            first = false;
        }
    }
    if (std::getline(in, line)) {
        throw std::runtime_error("matrix format: trailing content after last row");
    }
    return m;
}

std::string matrix_to_string(const SparseBitMatrix& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

SparseBitMatrix matrix_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
}

void save_matrix(const std::string& path, const SparseBitMatrix& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    write_matrix(out, m);
}

SparseBitMatrix load_matrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return read_matrix(in);
}

std::string support_to_string(const BitVector& v) {
    std::string out;
    for (std::size_t i : v.support()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(i);
    }
    return out;
}

}  // namespace fracton::gf2
