#include "fracton/tiling/pinwheel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <unordered_map>
#include <utility>

namespace fracton::tiling {

Rational Triangle::area() const {
    Rational c = cross(short_end - right, long_end - right);
    return Rational(1, 2) * (c < Rational(0) ? -c : c);
}

bool Triangle::is_valid() const {
    const Point s = short_end - right;
    const Point l = long_end - right;
    const Rational s2 = squared_length(s);
    return s2 != Rational(0) && dot(s, l) == Rational(0) && squared_length(l) == Rational(4) * s2;
}

bool Triangle::counter_clockwise() const { return cross(short_end - right, long_end - right) > Rational(0); }

std::vector<Triangle> PinwheelSubstitution::subdivide(const Triangle& t) const {
    if (!t.is_valid()) {
        throw InvalidTile("pinwheel subdivide: tile is not a 1:2:sqrt(5) right triangle");
    }
    const Point& a = t.right;
    const Point& b = t.short_end;
    const Point& c = t.long_end;
    // Foot of the altitude from the right angle onto the hypotenuse.
    const Point foot = Rational(4, 5) * b + Rational(1, 5) * c;
    const Point mid_ac = Rational(1, 2) * (a + c);
    const Point mid_fc = Rational(1, 2) * (foot + c);
    const Point mid_af = Rational(1, 2) * (a + foot);
    const bool m = t.mirrored;
    return {
        Triangle{foot, b, a, !m},
        Triangle{mid_af, a, mid_ac, !m},
        Triangle{mid_fc, mid_ac, c, !m},
        Triangle{mid_fc, mid_ac, foot, m},
        Triangle{mid_af, foot, mid_ac, m},
    };
}

std::vector<Triangle> subdivide(const Triangle& t) { return PinwheelSubstitution{}.subdivide(t); }

std::array<Triangle, 2> rectangle_seed() {
    return {
        Triangle{Point{0, 0}, Point{0, 1}, Point{2, 0}, false},
        Triangle{Point{2, 1}, Point{2, 0}, Point{0, 1}, false},
    };
}

std::vector<Triangle> substitute(std::vector<Triangle> tiles, std::size_t generations, const Substitution& rule) {
    for (std::size_t g = 0; g < generations; ++g) {
        std::vector<Triangle> next;
        next.reserve(tiles.size() * 5);
        for (const auto& t : tiles) {
            auto children = rule.subdivide(t);
            next.insert(next.end(), children.begin(), children.end());
        }
        tiles = std::move(next);
    }
    return tiles;
}

namespace {

using Lattice = std::pair<std::int64_t, std::int64_t>;

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    std::int64_t l = std::lcm(a, b);
    if (l <= 0) {
        throw std::overflow_error("tiling: common denominator overflow");
    }
    return l;
}

std::int64_t to_lattice(const Rational& r, std::int64_t scale) { return r.num() * (scale / r.den()); }

struct PairHash {
    std::size_t operator()(const Lattice& p) const {
        return std::hash<std::int64_t>{}(p.first * 1000003 + p.second);
    }
};

}  // namespace

TilingGraph build_tiling_graph(const std::vector<Triangle>& tiles, Point lower_left, Point upper_right,
                               std::size_t generation) {
    std::int64_t scale = 1;
    auto absorb = [&](const Point& p) {
        scale = lcm64(scale, p.x.den());
        scale = lcm64(scale, p.y.den());
    };
    absorb(lower_left);
    absorb(upper_right);
    for (const auto& t : tiles) {
        for (const auto& p : t.corners()) {
            absorb(p);
        }
    }

    std::map<Lattice, Point> unique_points;
    for (const auto& t : tiles) {
        for (const auto& p : t.corners()) {
            unique_points.emplace(Lattice{to_lattice(p.x, scale), to_lattice(p.y, scale)}, p);
        }
    }
    TilingGraph out;
    out.generation = generation;
    out.num_faces = tiles.size();
    out.lower_left = lower_left;
    out.upper_right = upper_right;
    std::vector<Lattice> lattice;
    std::unordered_map<Lattice, std::size_t, PairHash> index;
    for (const auto& [key, p] : unique_points) {
        index.emplace(key, lattice.size());
        lattice.push_back(key);
        out.vertices.push_back(p);
    }
    const std::size_t n = lattice.size();

    std::vector<graph::Edge> sides;
    sides.reserve(tiles.size() * 3);
    for (const auto& t : tiles) {
        auto cs = t.corners();
        std::array<std::size_t, 3> ids{};
        for (std::size_t i = 0; i < 3; ++i) {
            ids[i] = index.at(Lattice{to_lattice(cs[i].x, scale), to_lattice(cs[i].y, scale)});
        }
        for (std::size_t i = 0; i < 3; ++i) {
            std::size_t u = ids[i];
            std::size_t v = ids[(i + 1) % 3];
            sides.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    std::sort(sides.begin(), sides.end());
    sides.erase(std::unique(sides.begin(), sides.end()), sides.end());

    double cell = 1.0;
    for (auto [u, v] : sides) {
        double dx = static_cast<double>(lattice[u].first - lattice[v].first);
        double dy = static_cast<double>(lattice[u].second - lattice[v].second);
        cell = std::max(cell, std::sqrt(dx * dx + dy * dy));
    }
    auto cell_of = [cell](std::int64_t c) { return static_cast<std::int64_t>(std::floor(static_cast<double>(c) / cell)); };
    std::unordered_map<Lattice, std::vector<std::size_t>, PairHash> buckets;
    for (std::size_t v = 0; v < n; ++v) {
        buckets[Lattice{cell_of(lattice[v].first), cell_of(lattice[v].second)}].push_back(v);
    }

    std::vector<graph::Edge> edges;
    for (auto [u, v] : sides) {
        const auto [x0, y0] = lattice[u];
        const auto [x1, y1] = lattice[v];
        const __int128 dx = x1 - x0;
        const __int128 dy = y1 - y0;
        const __int128 len2 = dx * dx + dy * dy;
        std::vector<std::pair<__int128, std::size_t>> along{{0, u}, {len2, v}};
        for (std::int64_t cx = cell_of(std::min(x0, x1)); cx <= cell_of(std::max(x0, x1)); ++cx) {
            for (std::int64_t cy = cell_of(std::min(y0, y1)); cy <= cell_of(std::max(y0, y1)); ++cy) {
                auto it = buckets.find(Lattice{cx, cy});
                if (it == buckets.end()) {
                    continue;
                }
                for (std::size_t w : it->second) {
                    if (w == u || w == v) {
                        continue;
                    }
                    const __int128 wx = lattice[w].first - x0;
                    const __int128 wy = lattice[w].second - y0;
                    if (dx * wy - dy * wx != 0) {
                        continue;
                    }
                    const __int128 t = dx * wx + dy * wy;
                    if (t > 0 && t < len2) {
                        along.emplace_back(t, w);
                    }
                }
            }
        }
        std::sort(along.begin(), along.end());
        for (std::size_t i = 0; i + 1 < along.size(); ++i) {
            std::size_t a = along[i].second;
            std::size_t b = along[i + 1].second;
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.graph = graph::Graph(n, edges);

    const std::int64_t xmin = to_lattice(lower_left.x, scale);
    const std::int64_t ymin = to_lattice(lower_left.y, scale);
    const std::int64_t xmax = to_lattice(upper_right.x, scale);
    const std::int64_t ymax = to_lattice(upper_right.y, scale);
    out.boundary.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        const auto [x, y] = lattice[v];
        out.boundary[v] = x == xmin || x == xmax || y == ymin || y == ymax;
    }
    return out;
}

TilingGraph generate_pinwheel(std::size_t generation) {
    if (generation < 1) {
        throw std::invalid_argument("generate_pinwheel: generation must be at least 1");
    }
    auto seed = rectangle_seed();
    auto tiles = substitute({seed.begin(), seed.end()}, generation);
    return build_tiling_graph(tiles, Point{0, 0}, Point{2, 1}, generation);
}

std::vector<std::size_t> boundary_vertices(const TilingGraph& g) {
    const Point& lo = g.lower_left;
    const Point& hi = g.upper_right;
    // Perimeter position: bottom edge, right edge, top edge, left edge (counter-clockwise).
    auto key = [&](const Point& p) -> std::pair<int, Rational> {
        if (p.y == lo.y && p.x != hi.x) {
            return {0, p.x};
        }
        if (p.x == hi.x && p.y != hi.y) {
            return {1, p.y};
        }
        if (p.y == hi.y && p.x != lo.x) {
            return {2, -p.x};
        }
        return {3, -p.y};
    };
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (g.boundary[v]) {
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end(),
              [&](std::size_t a, std::size_t b) { return key(g.vertices[a]) < key(g.vertices[b]); });
    return out;
}

void write_coordinates(std::ostream& out, const TilingGraph& g) {
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        const Point& p = g.vertices[v];
        out << v << ' ' << p.x.num() << ' ' << p.x.den() << ' ' << p.y.num() << ' ' << p.y.den() << ' '
            << (g.boundary[v] ? 1 : 0) << '\n';
    }
}

void write_svg(std::ostream& out, const TilingGraph& g, const std::vector<bool>& highlight) {
    const double width = 800.0;
    const double margin = 10.0;
    const double sx = (width - 2 * margin) / (g.upper_right.x - g.lower_left.x).to_double();
    const double height = 2 * margin + sx * (g.upper_right.y - g.lower_left.y).to_double();
    auto px = [&](const Point& p) { return margin + sx * (p.x - g.lower_left.x).to_double(); };
    auto py = [&](const Point& p) { return height - margin - sx * (p.y - g.lower_left.y).to_double(); };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    out << "<!-- pinwheel generation " << g.generation << ": " << g.num_vertices() << " vertices, "
        << g.graph.num_edges() << " edges -->\n";
    out << "<g stroke=\"#444\" stroke-width=\"0.6\">\n";
    for (auto [u, v] : g.graph.edges()) {
        out << "<line x1=\"" << px(g.vertices[u]) << "\" y1=\"" << py(g.vertices[u]) << "\" x2=\""
            << px(g.vertices[v]) << "\" y2=\"" << py(g.vertices[v]) << "\"/>\n";
    }
    out << "</g>\n";
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        const bool hot = v < highlight.size() && highlight[v];
        const char* fill = hot ? "#d62728" : (g.boundary[v] ? "#1f77b4" : "#222");
        out << "<circle cx=\"" << px(g.vertices[v]) << "\" cy=\"" << py(g.vertices[v]) << "\" r=\""
            << (hot ? 3.0 : 1.5) << "\" fill=\"" << fill << "\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace fracton::tiling
