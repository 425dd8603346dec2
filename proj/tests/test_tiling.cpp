#include <cmath>
#include <set>

#include "doctest.h"

#include "fracton/tiling/pinwheel.hpp"

using namespace fracton;
using namespace fracton::tiling;

namespace {

Rational total_area(const std::vector<Triangle>& tiles) {
    Rational sum(0);
    for (const auto& t : tiles) {
        sum = sum + t.area();
    }
    return sum;
}

}  // namespace

TEST_SUITE("tiling") {
    TEST_CASE("rational arithmetic stays reduced") {
        const Rational a(2, 4);
        CHECK(a.num() == 1);
        CHECK(a.den() == 2);
        CHECK((a + Rational(1, 3)) == Rational(5, 6));
        CHECK((a * Rational(-2, 3)) == Rational(-1, 3));
        CHECK(Rational(3, -6) == Rational(-1, 2));
        CHECK_THROWS(a / Rational(0));
    }

    TEST_CASE("one substitution step") {
        for (const Triangle& seed : rectangle_seed()) {
            REQUIRE(seed.is_valid());
            const auto children = subdivide(seed);
            REQUIRE(children.size() == 5);
            std::size_t flipped = 0;
            for (const auto& c : children) {
                CHECK(c.is_valid());
                CHECK(c.scale() * Rational(5) == seed.scale());
                flipped += (c.mirrored != seed.mirrored) ? 1 : 0;
            }
            CHECK(flipped == 3);
            CHECK(total_area(children) == seed.area());
        }
        Triangle bad{Point{0, 0}, Point{1, 0}, Point{0, 1}, false};
        CHECK_FALSE(bad.is_valid());
        CHECK_THROWS_AS(subdivide(bad), InvalidTile);
    }

    TEST_CASE("patches cover the rectangle") {
        for (std::size_t n = 0; n <= 3; ++n) {
            const auto tiles = substitute({rectangle_seed()[0], rectangle_seed()[1]}, n);
            CHECK(tiles.size() == 2 * static_cast<std::size_t>(std::pow(5, n)));
            CHECK(total_area(tiles) == Rational(2));
        }
    }

    TEST_CASE("graph counts per generation") {
        // Regression constants from the first correct build, cross-checked by Euler's formula
        // for a disc (V - E + F = 1) and by the exact area cover above.
        struct Expected {
            std::size_t n, v, e, f, b;
        };
        for (const Expected x : {Expected{1, 12, 21, 10, 6}, Expected{2, 44, 93, 50, 18},
                                 Expected{3, 196, 445, 250, 30}, Expected{4, 928, 2177, 1250, 90}}) {
            const TilingGraph g = generate_pinwheel(x.n);
            CHECK(g.num_vertices() == x.v);
            CHECK(g.graph.num_edges() == x.e);
            CHECK(g.num_faces == x.f);
            CHECK(g.num_vertices() + g.num_faces == g.graph.num_edges() + 1);
            std::size_t boundary = 0;
            for (bool b : g.boundary) {
                boundary += b ? 1 : 0;
            }
            CHECK(boundary == x.b);
            CHECK(graph::is_connected(g.graph));
        }
    }

    TEST_CASE("boundary walk is a cycle through every boundary vertex") {
        const TilingGraph g = generate_pinwheel(3);
        const auto walk = boundary_vertices(g);
        const std::set<std::size_t> distinct(walk.begin(), walk.end());
        CHECK(distinct.size() == walk.size());
        for (std::size_t i = 0; i < walk.size(); ++i) {
            CHECK(g.boundary[walk[i]]);
            CHECK(g.graph.has_edge(walk[i], walk[(i + 1) % walk.size()]));
        }
        CHECK(g.vertices[walk.front()] == Point{0, 0});
    }

    TEST_CASE("vertices lie inside the rectangle") {
        const TilingGraph g = generate_pinwheel(2);
        for (const auto& p : g.vertices) {
            CHECK(p.x >= Rational(0));
            CHECK(p.x <= Rational(2));
            CHECK(p.y >= Rational(0));
            CHECK(p.y <= Rational(1));
        }
    }
}
