#include "fracton/codes/classical_code.hpp"

#include <stdexcept>
#include <utility>

#include "fracton/gf2/linalg.hpp"

namespace fracton::codes {

ClassicalCode::ClassicalCode(gf2::SparseBitMatrix h, Provenance provenance, const CodeOptions& options)
    : h_(std::move(h)), dense_(h_.to_dense()), provenance_(std::move(provenance)), rank_(gf2::rank(dense_)) {
    if (options.seed) {
        provenance_.seed = options.seed;
    }
    if (options.compute_distances) {
        distance_ = gf2::min_weight_nonzero(dense_, options.distance);
        distance_transpose_ = gf2::min_weight_nonzero(gf2::transpose(dense_), options.distance);
    }
}

const gf2::MinWeightResult& ClassicalCode::distance() const {
    if (!distance_) {
        throw std::logic_error("ClassicalCode: distances were not computed for " + provenance_.construction);
    }
    return *distance_;
}

const gf2::MinWeightResult& ClassicalCode::distance_transpose() const {
    if (!distance_transpose_) {
        throw std::logic_error("ClassicalCode: distances were not computed for " + provenance_.construction);
    }
    return *distance_transpose_;
}

nlohmann::json distance_json(const gf2::MinWeightResult& r) {
    nlohmann::json j;
    j["value"] = r.weight.is_finite() ? nlohmann::json(r.weight.value()) : nlohmann::json("inf");
    j["exact"] = r.exact;
    j["witness"] = r.witness.support();
    return j;
}

nlohmann::json ClassicalCode::metadata() const {
    nlohmann::json j;
    j["construction"] = provenance_.construction;
    j["parameters"] = provenance_.parameters;
    j["seed"] = provenance_.seed ? nlohmann::json(*provenance_.seed) : nlohmann::json(nullptr);
    j["n"] = n();
    j["m"] = m();
    j["k"] = k();
    j["k_transpose"] = k_transpose();
    if (distance_) {
        j["d"] = distance_json(*distance_);
        j["d_transpose"] = distance_json(*distance_transpose_);
    }
    return j;
}

}  // namespace fracton::codes
