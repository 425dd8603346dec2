#include "doctest.h"
#include "oracles.hpp"

#include "fracton/codes/seed_codes.hpp"
#include "fracton/gf2/linalg.hpp"
#include "fracton/graph/configuration_model.hpp"

using namespace fracton;
using namespace fracton::codes;
using gf2::BitMatrix;

namespace {

CodeOptions no_distance() {
    CodeOptions o;
    o.compute_distances = false;
    return o;
}

}  // namespace

TEST_SUITE("seed-codes") {
    TEST_CASE("repetition codes") {
        for (std::size_t n = 2; n <= 9; ++n) {
            const auto cyc = repetition_code(n, Topology::cyclic);
            CHECK(cyc.n() == n);
            CHECK(cyc.m() == n);
            CHECK(cyc.k() == 1);
            CHECK(cyc.k_transpose() == 1);
            CHECK(cyc.distance().weight.value() == n);
            CHECK(cyc.distance().exact);
            const auto open = repetition_code(n, Topology::open);
            CHECK(open.m() == n - 1);
            CHECK(open.k() == 1);
            CHECK(open.k_transpose() == 0);
            CHECK_FALSE(open.distance_transpose().weight.is_finite());
        }
        CHECK_THROWS_AS(repetition_code(1, Topology::cyclic), std::invalid_argument);
    }

    TEST_CASE("Laplacian rank on small named graphs") {
        CHECK(laplacian_code(graph::cycle_graph(4)).k() == 2);
        CHECK(laplacian_code(graph::cycle_graph(5)).k() == 1);
        CHECK(laplacian_code(graph::complete_graph(4)).k() == 3);
        CHECK(laplacian_code(graph::complete_graph(5)).k() == 1);
        for (std::size_t n = 3; n <= 9; ++n) {
            for (const auto& g : {graph::cycle_graph(n), graph::complete_graph(n), graph::path_graph(n)}) {
                const auto h = oracle::laplacian_by_hand(g);
                const auto code = laplacian_code(g, no_distance());
                CHECK(code.dense() == h);
                CHECK(code.k() == oracle::kernel_dim(h));
                CHECK(code.dense().apply(gf2::BitVector::ones(n)).is_zero());
            }
        }
    }

    TEST_CASE("every tree on at most 8 vertices has one Laplacian logical bit") {
        std::size_t trees = 0;
        std::size_t wrong = 0;
        for (std::size_t n = 2; n <= 8; ++n) {
            oracle::for_each_tree(n, [&](const graph::Graph& t) {
                REQUIRE(t.num_edges() == n - 1);
                ++trees;
                wrong += laplacian_code(t, no_distance()).k() == 1 ? 0 : 1;
            });
        }
        // Cayley: sum of n^(n-2) for n = 2..8.
        CHECK(trees == 1 + 3 + 16 + 125 + 1296 + 16807 + 262144);
        CHECK(wrong == 0);
    }

    TEST_CASE("Laplacian rank on random graphs matches enumeration") {
        util::Rng rng(31);
        for (int trial = 0; trial < 30; ++trial) {
            const auto spec = graph::sample_bounded_degrees(12, 2, 4, rng);
            const auto g = graph::configuration_model(spec, rng.next()).graph;
            CHECK(laplacian_code(g, no_distance()).k() == oracle::kernel_dim(oracle::laplacian_by_hand(g)));
        }
        graph::Graph split(4);
        split.add_edge(0, 1);
        split.add_edge(2, 3);
        CHECK_THROWS_AS(laplacian_code(split), std::invalid_argument);
    }

    TEST_CASE("Ising codes") {
        const auto c = ising_code(graph::cycle_graph(6));
        CHECK(c.m() == 6);
        CHECK(c.k() == 1);
        CHECK(c.k_transpose() == 1);
        CHECK(c.distance().weight.value() == 6);
        for (std::size_t r = 0; r < c.m(); ++r) {
            CHECK(c.h().row(r).size() == 2);
        }
        const auto torus = ising_code(graph::torus_grid(4, 4), no_distance());
        CHECK(torus.m() == 32);
        CHECK(torus.k() == 1);
        CHECK(torus.k_transpose() == 32 - 15);
    }

    TEST_CASE("typical LDPC codes need fewer checks than bits") {
        const auto s = graph::configuration_model_bipartite(graph::BipartiteDegreeSpec::regular(40, 3, 4), 1);
        const auto c = typical_ldpc(s.tanner, no_distance());
        CHECK(c.n() == 40);
        CHECK(c.m() == 30);
        CHECK(c.k() >= 10);
        const auto square = graph::configuration_model_bipartite({20, 20, 3, 3}, 1);
        CHECK_THROWS_AS(typical_ldpc(square.tanner), std::invalid_argument);
    }

    TEST_CASE("frustrated Laplacian maps all-ones to all-ones") {
        for (std::size_t N = 1; N <= 5; ++N) {
            const auto g = tiling::generate_pinwheel(N);
            const auto h = frustrated_laplacian(g.graph);
            const auto ones = gf2::BitVector::ones(g.num_vertices());
            CHECK(h.to_dense().apply(ones) == ones);
            for (std::size_t r = 0; r < h.rows(); ++r) {
                CHECK(h.row(r).size() % 2 == 1);
            }
        }
    }

    TEST_CASE("pinwheel codes") {
        PinwheelOptions o;
        const PinwheelCode pc = pinwheel_code(3, 7, o);
        CHECK(pc.code.n() == 196);
        CHECK(pc.code.m() == 192);
        CHECK(pc.removed_checks.size() == tiling::boundary_vertices(pc.tiling).size() / 7);
        CHECK(pc.check_vertices.size() == pc.code.m());
        // Regression constants from the first correct build.
        CHECK(pc.code.k() == 4);
        CHECK(pc.code.distance().weight.value() == 84);
        CHECK(pc.code.distance().exact);
        REQUIRE(pc.guard.has_value());
        CHECK_FALSE(pc.guard->flagged);

        // Depletion removes walk positions offset, offset + p, ...
        const auto walk = tiling::boundary_vertices(pc.tiling);
        for (std::size_t j = 0; j < pc.removed_checks.size(); ++j) {
            CHECK(pc.removed_checks[j] == walk[j * 7]);
        }
        o.depletion_offset = 3;
        o.run_boundary_guard = false;
        const PinwheelCode shifted = pinwheel_code(3, 7, o);
        CHECK(shifted.removed_checks.front() == walk[3]);
        CHECK_FALSE(shifted.guard.has_value());

        CHECK_THROWS_AS(pinwheel_code(1, 7), std::invalid_argument);
        CHECK_THROWS_AS(pinwheel_code(3, 1), std::invalid_argument);
        o.depletion_offset = 7;
        CHECK_THROWS_AS(pinwheel_code(3, 7, o), std::invalid_argument);
    }

    TEST_CASE("pinwheel k grows with the generation") {
        PinwheelOptions o;
        o.run_boundary_guard = false;
        o.code = no_distance();
        CHECK(pinwheel_code(4, 7, o).code.k() == 12);
        CHECK(pinwheel_code(3, 11, o).code.k() == 2);
        CHECK(pinwheel_code(4, 11, o).code.k() == 8);
        CHECK(pinwheel_code(3, 15, o).code.k() == 3);
    }
}
