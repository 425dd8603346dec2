#include "fracton/codes/css_code.hpp"

#include <stdexcept>
#include <utility>

#include "fracton/gf2/linalg.hpp"

namespace fracton::codes {

bool commutes(const gf2::BitMatrix& hx, const gf2::BitMatrix& hz) {
    if (hx.cols() != hz.cols()) {
        return false;
    }
    for (std::size_t i = 0; i < hx.rows(); ++i) {
        for (std::size_t j = 0; j < hz.rows(); ++j) {
            if (hx.row(i).dot(hz.row(j))) {
                return false;
            }
        }
    }
    return true;
}

QuantumDistance quantum_distance(const gf2::BitMatrix& hx, const gf2::BitMatrix& hz,
                                 const gf2::MinWeightOptions& options) {
    gf2::MinWeightResult x = gf2::min_weight_nonzero(hz, hx, options);
    gf2::MinWeightResult z = gf2::min_weight_nonzero(hx, hz, options);
    const bool exact = x.exact && z.exact;
    QuantumDistance out;
    if (z.weight < x.weight || (z.weight == x.weight && z.weight.is_finite() && gf2::support_less(z.witness, x.witness))) {
        out = QuantumDistance{std::move(z), LogicalType::z};
    } else {
        out = QuantumDistance{std::move(x), LogicalType::x};
    }
    out.result.exact = exact;
    return out;
}

CssCode::CssCode(gf2::BitMatrix hx, gf2::BitMatrix hz, Provenance provenance, const CssOptions& options)
    : hx_(std::move(hx)), hz_(std::move(hz)), provenance_(std::move(provenance)) {
    if (hx_.cols() != hz_.cols()) {
        throw std::invalid_argument("CssCode: H_X and H_Z act on different qubit counts");
    }
    if (!commutes(hx_, hz_)) {
        throw std::logic_error("CssCode: H_X H_Z^T != 0 for " + provenance_.construction);
    }
    rank_x_ = gf2::rank(hx_);
    rank_z_ = gf2::rank(hz_);
    if (options.compute_distance) {
        distance_ = quantum_distance(hx_, hz_, options.distance);
    }
}

std::optional<std::uint64_t> CssCode::sector_count() const {
    if (sector_exponent() >= 64) {
        return std::nullopt;
    }
    return std::uint64_t{1} << sector_exponent();
}

nlohmann::json CssCode::metadata() const {
    nlohmann::json j;
    j["construction"] = provenance_.construction;
    j["parameters"] = provenance_.parameters;
    j["seed"] = provenance_.seed ? nlohmann::json(*provenance_.seed) : nlohmann::json(nullptr);
    j["n_q"] = n();
    j["m_x"] = hx_.rows();
    j["m_z"] = hz_.rows();
    j["k_q"] = k();
    j["k_x_transpose"] = k_x_transpose();
    j["k_z_transpose"] = k_z_transpose();
    j["sector_exponent"] = sector_exponent();
    if (distance_) {
        j["d_q"] = distance_json(distance_->result);
        j["d_q"]["type"] = distance_->type == LogicalType::x ? "X" : "Z";
    }
    return j;
}

}  // namespace fracton::codes
