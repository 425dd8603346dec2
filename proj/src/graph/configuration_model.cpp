#include "fracton/graph/configuration_model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fracton::graph {

BipartiteDegreeSpec BipartiteDegreeSpec::regular(std::size_t num_bits, std::size_t bit_degree,
                                                 std::size_t check_degree) {
    if (check_degree == 0 || (num_bits * bit_degree) % check_degree != 0) {
        throw SamplingError("bipartite spec: n * D_variable must be divisible by D_check");
    }
    return BipartiteDegreeSpec{num_bits, num_bits * bit_degree / check_degree, bit_degree, check_degree};
}

DegreeSpec sample_bounded_degrees(std::size_t n, std::size_t low, std::size_t high, util::Rng& rng) {
    if (low > high || n == 0) {
        throw SamplingError("degree bounds: need n > 0 and low <= high");
    }
    DegreeSpec spec;
    spec.degrees.resize(n);
    std::size_t total = 0;
    for (auto& d : spec.degrees) {
        d = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(low), static_cast<std::int64_t>(high)));
        total += d;
    }
    if (total % 2 == 1) {
        std::vector<std::size_t> below;
        for (std::size_t v = 0; v < n; ++v) {
            if (spec.degrees[v] < high) {
                below.push_back(v);
            }
        }
        if (!below.empty()) {
            ++spec.degrees[below[rng.below(below.size())]];
        } else {
            std::vector<std::size_t> above;
            for (std::size_t v = 0; v < n; ++v) {
                if (spec.degrees[v] > low) {
                    above.push_back(v);
                }
            }
            if (above.empty()) {
                throw SamplingError("degree bounds: cannot reach an even degree sum");
            }
            --spec.degrees[above[rng.below(above.size())]];
        }
    }
    return spec;
}

namespace {

SamplingMetadata degree_summary(const std::vector<std::size_t>& degrees, std::size_t attempts,
                                std::size_t discarded) {
    SamplingMetadata meta;
    meta.attempts = attempts;
    meta.discarded_edges = discarded;
    if (!degrees.empty()) {
        meta.min_degree = *std::min_element(degrees.begin(), degrees.end());
        meta.max_degree = *std::max_element(degrees.begin(), degrees.end());
    }
    return meta;
}

}  // namespace

SampledGraph configuration_model(const DegreeSpec& spec, std::uint64_t seed) {
    const std::size_t n = spec.degrees.size();
    const std::size_t total = std::accumulate(spec.degrees.begin(), spec.degrees.end(), std::size_t{0});
    if (n == 0 || total % 2 != 0) {
        throw SamplingError("configuration model: degree sum must be even and n > 0");
    }
    std::vector<std::size_t> stubs;
    stubs.reserve(total);
    for (std::size_t v = 0; v < n; ++v) {
        stubs.insert(stubs.end(), spec.degrees[v], v);
    }
    util::Rng rng(seed);
    for (std::size_t attempt = 1; attempt <= kMaxResamples; ++attempt) {
        std::vector<std::size_t> shuffled = stubs;
        rng.shuffle(shuffled);
        std::vector<Edge> edges;
        for (std::size_t i = 0; i + 1 < shuffled.size(); i += 2) {
            std::size_t u = shuffled[i];
            std::size_t v = shuffled[i + 1];
            if (u != v) {
                edges.emplace_back(std::min(u, v), std::max(u, v));
            }
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        Graph g(n, edges);
        if (!is_connected(g)) {
            continue;
        }
        std::vector<std::size_t> degrees(n);
        for (std::size_t v = 0; v < n; ++v) {
            degrees[v] = g.degree(v);
        }
        auto meta = degree_summary(degrees, attempt, total / 2 - g.num_edges());
        return SampledGraph{std::move(g), spec.degrees, meta};
    }
    throw SamplingError("configuration model: no connected sample after " + std::to_string(kMaxResamples) +
                        " attempts");
}

SampledTanner configuration_model_bipartite(const BipartiteDegreeSpec& spec, std::uint64_t seed) {
    if (spec.num_bits * spec.bit_degree != spec.num_checks * spec.check_degree) {
        throw SamplingError("bipartite configuration model: n * D_variable != m * D_check");
    }
    if (spec.num_bits == 0 || spec.num_checks == 0) {
        throw SamplingError("bipartite configuration model: empty side");
    }
    std::vector<std::size_t> bit_stubs;
    for (std::size_t b = 0; b < spec.num_bits; ++b) {
        bit_stubs.insert(bit_stubs.end(), spec.bit_degree, b);
    }
    std::vector<std::size_t> check_stubs;
    for (std::size_t c = 0; c < spec.num_checks; ++c) {
        check_stubs.insert(check_stubs.end(), spec.check_degree, c);
    }
    const std::size_t total = bit_stubs.size();
    util::Rng rng(seed);
    for (std::size_t attempt = 1; attempt <= kMaxResamples; ++attempt) {
        std::vector<std::size_t> shuffled = bit_stubs;
        rng.shuffle(shuffled);
        std::vector<Edge> edges;
        edges.reserve(total);
        for (std::size_t i = 0; i < total; ++i) {
            edges.emplace_back(check_stubs[i], shuffled[i]);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        TannerGraph t(spec.num_bits, spec.num_checks, edges);
        if (!is_connected(t)) {
            continue;
        }
        std::vector<std::size_t> degrees;
        for (std::size_t b = 0; b < t.num_bits(); ++b) {
            degrees.push_back(t.checks_of_bit(b).size());
        }
        for (std::size_t c = 0; c < t.num_checks(); ++c) {
            degrees.push_back(t.bits_of_check(c).size());
        }
        auto meta = degree_summary(degrees, attempt, total - edges.size());
        return SampledTanner{std::move(t), meta};
    }
    throw SamplingError("bipartite configuration model: no connected sample after " +
                        std::to_string(kMaxResamples) + " attempts");
}

}  // namespace fracton::graph
