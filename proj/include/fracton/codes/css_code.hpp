#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "json.hpp"

#include "fracton/codes/classical_code.hpp"
#include "fracton/gf2/bit_matrix.hpp"
#include "fracton/gf2/distance.hpp"

namespace fracton::codes {

struct CssOptions {
    /// Quantum distances are costly; off by default and available through quantum_distance().
    bool compute_distance = false;
    gf2::MinWeightOptions distance;
};

enum class LogicalType { x, z };

struct QuantumDistance {
    gf2::MinWeightResult result;
    /// Pauli type of the witness logical.
    LogicalType type = LogicalType::x;
};

/// CSS code given by X and Z check matrices on n_q qubits. Commutation is checked at
/// construction and a violation throws std::logic_error.
class CssCode {
  public:
    CssCode(gf2::BitMatrix hx, gf2::BitMatrix hz, Provenance provenance, const CssOptions& options = {});

    const gf2::BitMatrix& hx() const { return hx_; }
    const gf2::BitMatrix& hz() const { return hz_; }
    const Provenance& provenance() const { return provenance_; }

    std::size_t n() const { return hx_.cols(); }
    std::size_t rank_x() const { return rank_x_; }
    std::size_t rank_z() const { return rank_z_; }
    /// n_q - rank(H_X) - rank(H_Z).
    std::size_t k() const { return n() - rank_x_ - rank_z_; }
    /// Redundant X checks, m_X - rank(H_X).
    std::size_t k_x_transpose() const { return hx_.rows() - rank_x_; }
    /// Redundant Z checks, m_Z - rank(H_Z).
    std::size_t k_z_transpose() const { return hz_.rows() - rank_z_; }
    /// log2 of the superselection sector count 2^(k_X^T + k_Z^T).
    std::size_t sector_exponent() const { return k_x_transpose() + k_z_transpose(); }
    /// Sector count, or nullopt when it does not fit in 64 bits.
    std::optional<std::uint64_t> sector_count() const;

    const std::optional<QuantumDistance>& distance() const { return distance_; }

    nlohmann::json metadata() const;

  private:
    gf2::BitMatrix hx_;
    gf2::BitMatrix hz_;
    Provenance provenance_;
    std::size_t rank_x_ = 0;
    std::size_t rank_z_ = 0;
    std::optional<QuantumDistance> distance_;
};

/// True when H_X H_Z^T = 0.
bool commutes(const gf2::BitMatrix& hx, const gf2::BitMatrix& hz);

/// Minimum weight over X logicals, ker(H_Z) minus rowspace(H_X), and Z logicals,
/// ker(H_X) minus rowspace(H_Z). Exact only when both searches are.
QuantumDistance quantum_distance(const gf2::BitMatrix& hx, const gf2::BitMatrix& hz,
                                 const gf2::MinWeightOptions& options = {});

}  // namespace fracton::codes
