#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fracton/graph/graph.hpp"
#include "fracton/util/rng.hpp"

namespace fracton::graph {

class SamplingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Degree sequence for a simple graph.
struct DegreeSpec {
    std::vector<std::size_t> degrees;
};

/// Regular bipartite ensemble; requires num_bits * bit_degree == num_checks * check_degree.
struct BipartiteDegreeSpec {
    std::size_t num_bits = 0;
    std::size_t num_checks = 0;
    std::size_t bit_degree = 0;
    std::size_t check_degree = 0;

    /// Derives num_checks from the half-edge balance; throws when it is not an integer.
    static BipartiteDegreeSpec regular(std::size_t num_bits, std::size_t bit_degree, std::size_t check_degree);
};

/// What happened while sampling; discarded edges may leave vertices under their requested degree.
struct SamplingMetadata {
    std::size_t attempts = 0;
    std::size_t discarded_edges = 0;
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
};

struct SampledGraph {
    Graph graph;
    std::vector<std::size_t> requested_degrees;
    SamplingMetadata metadata;
};

struct SampledTanner {
    TannerGraph tanner;
    SamplingMetadata metadata;
};

inline constexpr std::size_t kMaxResamples = 1000;

/// Draws each degree uniformly from [low, high]; an odd total is fixed by incrementing one
/// uniformly chosen vertex still below `high` (or, if none is, decrementing one above `low`).
DegreeSpec sample_bounded_degrees(std::size_t n, std::size_t low, std::size_t high, util::Rng& rng);

/// Pairs half-edges uniformly at random, discards self-loops and parallel edges, and
/// resamples until the result is connected (at most kMaxResamples attempts).
SampledGraph configuration_model(const DegreeSpec& spec, std::uint64_t seed);

/// Bipartite variant: bit half-edges are only paired with check half-edges.
SampledTanner configuration_model_bipartite(const BipartiteDegreeSpec& spec, std::uint64_t seed);

}  // namespace fracton::graph
