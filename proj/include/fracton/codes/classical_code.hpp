#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "fracton/gf2/bit_matrix.hpp"
#include "fracton/gf2/distance.hpp"

namespace fracton::codes {

/// Where a code came from: constructor name, its parameters and (for random ensembles) the seed.
struct Provenance {
    std::string construction;
    nlohmann::json parameters = nlohmann::json::object();
    std::optional<std::uint64_t> seed;
};

struct CodeOptions {
    bool compute_distances = true;
    gf2::MinWeightOptions distance;
    /// Sampling seed to record in the provenance of randomly generated codes.
    std::optional<std::uint64_t> seed;
};

/// Classical linear code given by an m x n parity-check matrix, with its parameters
/// [n, k, d] and those of the transpose code computed once at construction.
class ClassicalCode {
  public:
    ClassicalCode(gf2::SparseBitMatrix h, Provenance provenance, const CodeOptions& options = {});

    const gf2::SparseBitMatrix& h() const { return h_; }
    const gf2::BitMatrix& dense() const { return dense_; }
    const Provenance& provenance() const { return provenance_; }

    std::size_t n() const { return h_.cols(); }
    std::size_t m() const { return h_.rows(); }
    std::size_t rank() const { return rank_; }
    /// Logical bits, n - rank(H).
    std::size_t k() const { return n() - rank_; }
    /// Logical bits of the transpose code, m - rank(H).
    std::size_t k_transpose() const { return m() - rank_; }

    bool has_distances() const { return distance_.has_value(); }
    /// Throws std::logic_error if distances were not computed.
    const gf2::MinWeightResult& distance() const;
    const gf2::MinWeightResult& distance_transpose() const;

    /// Metadata sidecar: construction, parameters, seed, cached k/d values and exactness flags.
    nlohmann::json metadata() const;

  private:
    gf2::SparseBitMatrix h_;
    gf2::BitMatrix dense_;
    Provenance provenance_;
    std::size_t rank_ = 0;
    std::optional<gf2::MinWeightResult> distance_;
    std::optional<gf2::MinWeightResult> distance_transpose_;
};

nlohmann::json distance_json(const gf2::MinWeightResult& r);

}  // namespace fracton::codes
