#include "fracton/codes/seed_codes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracton/gf2/linalg.hpp"

namespace fracton::codes {

ClassicalCode repetition_code(std::size_t n, Topology topology, const CodeOptions& options) {
    if (n < 2) {
        throw std::invalid_argument("repetition_code: n must be at least 2");
    }
    const bool cyclic = topology == Topology::cyclic;
    const std::size_t m = cyclic ? n : n - 1;
    gf2::SparseBitMatrix h(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        h.toggle(i, i);
        h.toggle(i, (i + 1) % n);
    }
    Provenance p{"repetition", {{"n", n}, {"topology", cyclic ? "cyclic" : "open"}}, std::nullopt};
    return ClassicalCode(std::move(h), std::move(p), options);
}

ClassicalCode laplacian_code(const graph::Graph& g, const CodeOptions& options) {
    if (!graph::is_connected(g)) {
        throw std::invalid_argument("laplacian_code: graph is disconnected");
    }
    const std::size_t n = g.num_vertices();
    gf2::SparseBitMatrix h(n, n);
    for (std::size_t v = 0; v < n; ++v) {
        if (g.degree(v) % 2 == 1) {
            h.toggle(v, v);
        }
        for (std::size_t w : g.neighbors(v)) {
            h.toggle(v, w);
        }
    }
    Provenance p{"laplacian", {{"n", n}, {"edges", g.num_edges()}}, std::nullopt};
    return ClassicalCode(std::move(h), std::move(p), options);
}

ClassicalCode ising_code(const graph::Graph& g, const CodeOptions& options) {
    gf2::SparseBitMatrix h(g.num_edges(), g.num_vertices());
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        h.toggle(e, g.edges()[e].first);
        h.toggle(e, g.edges()[e].second);
    }
    Provenance p{"ising", {{"n", g.num_vertices()}, {"edges", g.num_edges()}}, std::nullopt};
    return ClassicalCode(std::move(h), std::move(p), options);
}

ClassicalCode typical_ldpc(const graph::TannerGraph& t, const CodeOptions& options) {
    if (t.num_checks() >= t.num_bits()) {
        throw std::invalid_argument("typical_ldpc: need fewer checks than bits");
    }
    if (!graph::is_connected(t)) {
        throw std::invalid_argument("typical_ldpc: Tanner graph is disconnected");
    }
    Provenance p{"typical-ldpc",
                 {{"n", t.num_bits()}, {"m", t.num_checks()}, {"kappa_b", t.kappa_b()}, {"kappa_c", t.kappa_c()}},
                 std::nullopt};
    return ClassicalCode(graph::matrix_from_tanner(t), std::move(p), options);
}

gf2::SparseBitMatrix frustrated_laplacian(const graph::Graph& g) {
    const std::size_t n = g.num_vertices();
    gf2::SparseBitMatrix h(n, n);
    for (std::size_t v = 0; v < n; ++v) {
        if (g.degree(v) % 2 == 0) {
            h.toggle(v, v);
        }
        for (std::size_t w : g.neighbors(v)) {
            h.toggle(v, w);
        }
    }
    return h;
}

PinwheelCode pinwheel_code(std::size_t generation, std::size_t period, const PinwheelOptions& options) {
    if (generation < 2) {
        throw std::invalid_argument("pinwheel_code: generation must be at least 2");
    }
    if (period < 2) {
        throw std::invalid_argument("pinwheel_code: depletion period must be at least 2");
    }
    if (options.depletion_offset >= period) {
        throw std::invalid_argument("pinwheel_code: depletion offset must be below the period");
    }
    tiling::TilingGraph tiling = tiling::generate_pinwheel(generation);
    const auto full = frustrated_laplacian(tiling.graph);
    const auto walk = tiling::boundary_vertices(tiling);

    std::vector<bool> removed(tiling.num_vertices(), false);
    std::vector<std::size_t> removed_checks;
    for (std::size_t j = 0; j < walk.size() / period; ++j) {
        const std::size_t v = walk[options.depletion_offset + j * period];
        removed[v] = true;
        removed_checks.push_back(v);
    }
    std::vector<std::size_t> check_vertices;
    for (std::size_t v = 0; v < tiling.num_vertices(); ++v) {
        if (!removed[v]) {
            check_vertices.push_back(v);
        }
    }
    gf2::SparseBitMatrix h(check_vertices.size(), tiling.num_vertices());
    for (std::size_t r = 0; r < check_vertices.size(); ++r) {
        for (std::size_t c : full.row(check_vertices[r])) {
            h.toggle(r, c);
        }
    }
    Provenance p{"pinwheel",
                 {{"N", generation},
                  {"p", period},
                  {"offset", options.depletion_offset},
                  {"boundary", walk.size()}},
                 std::nullopt};
    ClassicalCode code(std::move(h), std::move(p), options.code);
    std::optional<BoundaryGuardReport> guard;
    if (options.run_boundary_guard) {
        guard = boundary_guard(code, tiling, 2, options.code.distance);
    }
    return PinwheelCode{std::move(code), std::move(tiling), std::move(check_vertices), std::move(removed_checks),
                        std::move(guard)};
}

BoundaryGuardReport boundary_guard(const ClassicalCode& code, const tiling::TilingGraph& tiling, std::size_t reach,
                                   const gf2::MinWeightOptions& options) {
    const std::size_t n = tiling.num_vertices();
    std::vector<std::size_t> depth(n, SIZE_MAX);
    std::vector<std::size_t> frontier;
    for (std::size_t v = 0; v < n; ++v) {
        if (tiling.boundary[v]) {
            depth[v] = 0;
            frontier.push_back(v);
        }
    }
    for (std::size_t d = 1; d <= reach; ++d) {
        std::vector<std::size_t> next;
        for (std::size_t v : frontier) {
            for (std::size_t w : tiling.graph.neighbors(v)) {
                if (depth[w] == SIZE_MAX) {
                    depth[w] = d;
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::size_t> region;
    for (std::size_t v = 0; v < n; ++v) {
        if (depth[v] != SIZE_MAX) {
            region.push_back(v);
        }
    }
    const gf2::BitMatrix restricted = code.dense().select_columns(region);
    BoundaryGuardReport report;
    report.region_size = region.size();
    report.region_kernel_dim = region.size() - gf2::rank(restricted);
    report.threshold = std::sqrt(static_cast<double>(n)) / 2.0;
    gf2::MinWeightResult local = gf2::min_weight_nonzero(restricted, options);
    if (local.weight.is_finite()) {
        std::vector<std::size_t> lifted;
        for (std::size_t i : local.witness.support()) {
            lifted.push_back(region[i]);
        }
        local.witness = gf2::BitVector::from_support(n, lifted);
        report.flagged = static_cast<double>(local.weight.value()) < report.threshold;
    }
    report.shortest = std::move(local);
    return report;
}

}  // namespace fracton::codes
