#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracton/graph/graph.hpp"
#include "fracton/tiling/rational.hpp"

namespace fracton::tiling {

/// Right triangle with legs in ratio 1:2. Corners are labelled by role:
/// `right` is the right-angle corner, `short_end` closes the short leg and
/// `long_end` closes the long leg. `mirrored` records chirality relative to the seed tiles.
struct Triangle {
    Point right;
    Point short_end;
    Point long_end;
    bool mirrored = false;

    std::array<Point, 3> corners() const { return {right, short_end, long_end}; }
    Rational area() const;
    /// Squared length of the short leg; the long leg is 4x and the hypotenuse 5x this.
    Rational scale() const { return squared_length(short_end - right); }
    /// True when the legs are perpendicular with squared lengths in ratio 1:4.
    bool is_valid() const;
    /// Sign of the (short_end - right) x (long_end - right) cross product.
    bool counter_clockwise() const;
};

class InvalidTile : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A substitution rule for triangle tilings.
class Substitution {
  public:
    virtual ~Substitution() = default;
    virtual std::vector<Triangle> subdivide(const Triangle& t) const = 0;
    virtual std::string name() const = 0;
};

/// Pinwheel substitution: one tile becomes five copies scaled by 1/sqrt(5).
/// Three children have the opposite chirality to the parent, two keep it.
class PinwheelSubstitution final : public Substitution {
  public:
    std::vector<Triangle> subdivide(const Triangle& t) const override;
    std::string name() const override { return "pinwheel"; }
};

/// Convenience wrapper over PinwheelSubstitution.
std::vector<Triangle> subdivide(const Triangle& t);

/// The 2x1 rectangle [0,2]x[0,1] cut along its diagonal into two 1:2:sqrt(5) tiles.
std::array<Triangle, 2> rectangle_seed();

std::vector<Triangle> substitute(std::vector<Triangle> tiles, std::size_t generations,
                                 const Substitution& rule = PinwheelSubstitution{});

/// Vertex graph of a triangle patch. Vertices are exact triangle corners (merged on exact
/// equality); every triangle side is split at each vertex lying on it, so T-junctions become
/// ordinary graph vertices.
struct TilingGraph {
    std::size_t generation = 0;
    std::vector<Point> vertices;
    graph::Graph graph;
    std::vector<bool> boundary;
    std::size_t num_faces = 0;
    Point lower_left;
    Point upper_right;

    std::size_t num_vertices() const { return vertices.size(); }
};

/// Builds the graph of `tiles` inside the axis-aligned box [lower_left, upper_right].
TilingGraph build_tiling_graph(const std::vector<Triangle>& tiles, Point lower_left, Point upper_right,
                               std::size_t generation);

/// Generation-N pinwheel patch of the 2x1 rectangle.
TilingGraph generate_pinwheel(std::size_t generation);

/// Boundary vertices in counter-clockwise perimeter order starting at the lower-left corner.
std::vector<std::size_t> boundary_vertices(const TilingGraph& g);

/// Coordinate file: one line "vertex x_num x_den y_num y_den boundary_flag" per vertex.
void write_coordinates(std::ostream& out, const TilingGraph& g);
/// Self-contained SVG drawing of the graph; boundary vertices are highlighted, and
/// `highlight` (optional) marks vertices in red.
void write_svg(std::ostream& out, const TilingGraph& g, const std::vector<bool>& highlight = {});

}  // namespace fracton::tiling
