#pragma once

#include <iosfwd>
#include <string>

#include "fracton/gf2/bit_matrix.hpp"
#include "fracton/gf2/bit_vector.hpp"

namespace fracton::gf2 {

// Matrix text format:
//   line 1: "<rows> <cols>"
//   then exactly <rows> lines, each the ascending 0-based column indices of the ones in
//   that row separated by single spaces (an empty line is a zero row).

void write_matrix(std::ostream& out, const SparseBitMatrix& m);
void write_matrix(std::ostream& out, const BitMatrix& m);
SparseBitMatrix read_matrix(std::istream& in);

std::string matrix_to_string(const SparseBitMatrix& m);
SparseBitMatrix matrix_from_string(const std::string& text);

void save_matrix(const std::string& path, const SparseBitMatrix& m);
SparseBitMatrix load_matrix(const std::string& path);

/// Support list on one line, e.g. "3 7 12".
std::string support_to_string(const BitVector& v);

}  // namespace fracton::gf2
