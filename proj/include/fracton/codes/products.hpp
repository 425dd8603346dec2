#pragma once

#include <cstddef>

#include "fracton/codes/classical_code.hpp"
#include "fracton/codes/css_code.hpp"
#include "fracton/codes/polynomial.hpp"
#include "fracton/gf2/distance.hpp"

namespace fracton::codes {

/// Hypergraph product. Qubits are ordered as the n1 x n2 (bit, bit) pairs in row-major
/// order followed by the m1 x m2 (check, check) pairs:
///   H_X = [H1 (x) I_n2 | I_m1 (x) H2^T],  H_Z = [I_n1 (x) H2 | H1^T (x) I_m2].
CssCode hgp(const ClassicalCode& c1, const ClassicalCode& c2, const CssOptions& options = {});

struct PredictedParams {
    std::size_t n_q = 0;
    std::size_t k_q = 0;
    /// min(d1, d2, d1^T, d2^T); a trivial transpose code contributes the infinite sentinel.
    gf2::Distance d_q = gf2::Distance::infinite();
    bool d_exact = false;
    std::size_t k_x_transpose = 0;
    std::size_t k_z_transpose = 0;
};

/// Hypergraph-product parameters from the seeds' cached values alone. The distance is
/// left infinite (and d_exact false) when either seed was built without distances.
PredictedParams predicted_hgp_params(const ClassicalCode& c1, const ClassicalCode& c2);

/// Lifted product over F_2[(Z_L)^D]:
///   H_X = [A (x) I_nb | I_ma (x) B*],  H_Z = [I_na (x) B | A* (x) I_mb],
/// with * the conjugate transpose, then every entry expanded to its circulant.
CssCode lifted_product(const Protograph& a, const Protograph& b, const CssOptions& options = {});

/// Stabilizer map with H_X = [f | g] and H_Z = [g* | f*], i.e. lifted_product([f], [g*]).
CssCode hgp_fsl(const PolynomialF2& f, const PolynomialF2& g, const CssOptions& options = {});

/// Three-seed product with H_X = d1 and H_Z = d2^T, where
///   d1 = [I (x) H2^T (x) H3^T | H1^T (x) I (x) H3^T | H1^T (x) H2^T (x) I]
///   d2 = [[H1^T (x) I (x) I, H1^T (x) I (x) I, 0],
///         [I (x) H2^T (x) I, 0, I (x) H2^T (x) I],
///         [0, I (x) I (x) H3^T, I (x) I (x) H3^T]].
/// Qubits: n1 m2 m3 + m1 n2 m3 + m1 m2 n3.
CssCode threefold_product(const ClassicalCode& c1, const ClassicalCode& c2, const ClassicalCode& c3,
                          const CssOptions& options = {});

/// f = 1+x+y+z, g = 1+xy+yz+xz on (Z_L)^3; 2L^3 qubits.
CssCode haah_code(std::size_t L, const CssOptions& options = {});
/// lifted_product([f], [f]) with f = 1+x+y+z on (Z_L)^3.
CssCode checkerboard(std::size_t L, const CssOptions& options = {});
/// lifted_product([f], [f]) with f = 1+x+y on (Z_L)^2.
CssCode color_code_lp(std::size_t L, const CssOptions& options = {});
/// hgp_fsl(1+z, 1+x+y) on (Z_L)^3.
CssCode sierpinski_prism(std::size_t L, const CssOptions& options = {});
/// threefold_product of three circulants of 1+x on C_L; 3L^3 qubits.
CssCode xcube(std::size_t L, const CssOptions& options = {});

}  // namespace fracton::codes
