#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "fracton/gf2/bit_matrix.hpp"

namespace fracton::codes {

/// Exponent tuple of a monomial x^e0 y^e1 z^e2 ...; one entry per axis.
using Monomial = std::vector<std::size_t>;

/// Element of the group algebra F_2[(Z_L)^D]: a set of monomials with exponents reduced mod L.
class PolynomialF2 {
  public:
    PolynomialF2(std::size_t dimension, std::size_t period);

    static PolynomialF2 one(std::size_t dimension, std::size_t period);
    /// Sum of monomials written with variables x, y, z, w (axes 0..3), e.g. "1+x+y+z",
    /// "1 + xy + yz + xz" or "x^2y". Repeated terms cancel mod 2.
    static PolynomialF2 parse(const std::string& text, std::size_t dimension, std::size_t period);

    std::size_t dimension() const { return dimension_; }
    std::size_t period() const { return period_; }
    /// L^D, the size of the group.
    std::size_t group_order() const;
    const std::set<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds (mod 2) one monomial; exponents are reduced mod L.
    void toggle(Monomial m);
    /// f(x^-1, y^-1, ...).
    PolynomialF2 conjugate() const;

    /// Row-major index of a monomial in [0, L^D).
    std::size_t index_of(const Monomial& m) const;
    Monomial monomial_at(std::size_t index) const;

    PolynomialF2 operator+(const PolynomialF2& other) const;
    PolynomialF2 operator*(const PolynomialF2& other) const;
    bool operator==(const PolynomialF2& other) const = default;

    std::string to_string() const;

  private:
    void require_same_ring(const PolynomialF2& other) const;

    std::size_t dimension_;
    std::size_t period_;
    std::set<Monomial> terms_;
};

/// L^D x L^D matrix of multiplication by f: entry (r, c) is the coefficient of g_r - g_c.
gf2::BitMatrix poly_to_circulant(const PolynomialF2& f);

/// Matrix over F_2[(Z_L)^D]; every entry shares one (D, L).
class Protograph {
  public:
    Protograph(std::size_t rows, std::size_t cols, std::size_t dimension, std::size_t period);
    static Protograph single(const PolynomialF2& f);
    static Protograph identity(std::size_t n, std::size_t dimension, std::size_t period);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t dimension() const { return dimension_; }
    std::size_t period() const { return period_; }

    const PolynomialF2& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, PolynomialF2 f);

    /// Transpose with every entry conjugated; expands to the binary transpose.
    Protograph conjugate_transpose() const;
    /// Replace each entry by its L^D x L^D circulant block.
    gf2::BitMatrix expand() const;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t dimension_;
    std::size_t period_;
    std::vector<PolynomialF2> entries_;
};

/// Kronecker product over the ring.
Protograph kronecker(const Protograph& a, const Protograph& b);
/// Horizontal concatenation over the ring.
Protograph hconcat(const Protograph& a, const Protograph& b);

}  // namespace fracton::codes
