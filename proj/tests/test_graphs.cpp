#include <numeric>
#include <sstream>

#include "doctest.h"

#include "fracton/graph/configuration_model.hpp"
#include "fracton/graph/graph.hpp"

using namespace fracton;
using namespace fracton::graph;

TEST_SUITE("graphs") {
    TEST_CASE("simple graph invariants") {
        Graph g(4);
        CHECK(g.add_edge(0, 1));
        CHECK_FALSE(g.add_edge(1, 0));
        CHECK_FALSE(g.add_edge(2, 2));
        CHECK(g.has_edge(1, 0));
        CHECK(g.num_edges() == 1);
        CHECK(cycle_graph(6).num_edges() == 6);
        CHECK(path_graph(6).num_edges() == 5);
        CHECK(complete_graph(5).num_edges() == 10);
        const Graph t = torus_grid(5, 4);
        CHECK(t.num_vertices() == 20);
        CHECK(t.num_edges() == 40);
        for (std::size_t v = 0; v < 20; ++v) {
            CHECK(t.degree(v) == 4);
        }
    }

    TEST_CASE("distances and balls") {
        const Graph c = cycle_graph(10);
        for (std::size_t v = 0; v < 10; ++v) {
            const std::size_t around = std::min(v, 10 - v);
            CHECK(graph_distance(c, 0, v) == around);
        }
        CHECK(ball(c, 0, 2).size() == 5);
        const Graph t = torus_grid(9, 9);
        // Diamond of radius 2 on a large enough torus: 1 + 4 + 8 sites.
        CHECK(ball(t, 40, 2).size() == 13);
        Graph split(4);
        split.add_edge(0, 1);
        split.add_edge(2, 3);
        CHECK_FALSE(is_connected(split));
        CHECK_FALSE(graph_distance(split, 0, 3).has_value());
    }

    TEST_CASE("Tanner graph round-trips through its matrix") {
        gf2::SparseBitMatrix h(3, 5);
        h.toggle(0, 0);
        h.toggle(0, 1);
        h.toggle(1, 1);
        h.toggle(1, 2);
        h.toggle(1, 4);
        h.toggle(2, 3);
        h.toggle(2, 4);
        const TannerGraph t = tanner_from_matrix(h);
        CHECK(t.num_bits() == 5);
        CHECK(t.num_checks() == 3);
        CHECK(t.num_edges() == 7);
        CHECK(t.kappa_c() == 3);
        CHECK(t.kappa_b() == 2);
        CHECK(matrix_from_tanner(t) == h);
        CHECK(is_connected(t));
        // Bit 0 to bit 3 passes check 0, bit 1, check 1, bit 4, check 2.
        CHECK(graph_distance(t, 0, 3) == 6);
    }

    TEST_CASE("graph text format round-trips") {
        const Graph g = torus_grid(3, 4);
        std::stringstream s;
        write_graph(s, g);
        CHECK(read_graph(s) == g);
    }

    TEST_CASE("bounded degree sequences") {
        util::Rng rng(4);
        for (int trial = 0; trial < 50; ++trial) {
            const DegreeSpec spec = sample_bounded_degrees(31, 3, 5, rng);
            const std::size_t total = std::accumulate(spec.degrees.begin(), spec.degrees.end(), std::size_t{0});
            CHECK(total % 2 == 0);
            for (std::size_t d : spec.degrees) {
                CHECK(d >= 3);
                CHECK(d <= 5);
            }
        }
    }

    TEST_CASE("configuration model samples are simple, connected and reproducible") {
        util::Rng rng(9);
        const DegreeSpec spec = sample_bounded_degrees(200, 3, 5, rng);
        const SampledGraph a = configuration_model(spec, 77);
        const SampledGraph b = configuration_model(spec, 77);
        CHECK(a.graph == b.graph);
        CHECK(is_connected(a.graph));
        std::size_t lost = 0;
        for (std::size_t v = 0; v < 200; ++v) {
            CHECK(a.graph.degree(v) <= spec.degrees[v]);
            lost += spec.degrees[v] - a.graph.degree(v);
        }
        CHECK(lost == 2 * a.metadata.discarded_edges);
        CHECK_FALSE(configuration_model(spec, 78).graph == a.graph);
    }

    TEST_CASE("three-regular degree sequence on four vertices") {
        // Discarding loops and parallel edges may leave a connected subgraph of K_4.
        const DegreeSpec spec{{3, 3, 3, 3}};
        const Graph k4 = complete_graph(4);
        std::size_t complete = 0;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const SampledGraph s = configuration_model(spec, seed);
            CHECK(is_connected(s.graph));
            for (const auto& [u, v] : s.graph.edges()) {
                CHECK(k4.has_edge(u, v));
            }
            CHECK(s.graph.num_edges() + s.metadata.discarded_edges == 6);
            if (s.metadata.discarded_edges == 0) {
                CHECK(s.graph == k4);
                ++complete;
            }
        }
        CHECK(complete > 0);
    }

    TEST_CASE("bipartite configuration model respects the degree split") {
        const auto spec = BipartiteDegreeSpec::regular(100, 3, 4);
        CHECK(spec.num_checks == 75);
        CHECK_THROWS(BipartiteDegreeSpec::regular(10, 3, 4));
        const SampledTanner s = configuration_model_bipartite(spec, 5);
        CHECK(s.tanner.num_bits() == 100);
        CHECK(s.tanner.num_checks() == 75);
        CHECK(is_connected(s.tanner));
        CHECK(s.tanner.kappa_b() <= 3);
        CHECK(s.tanner.kappa_c() <= 4);
        CHECK(s.tanner.num_edges() + s.metadata.discarded_edges == 300);
        CHECK(configuration_model_bipartite(spec, 5).tanner == s.tanner);
    }
}
