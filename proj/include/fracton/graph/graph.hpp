#pragma once

#include <algorithm>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracton/gf2/bit_matrix.hpp"

namespace fracton::graph {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph: no self-loops, no parallel edges. Edges are stored with u < v, sorted.
class Graph {
  public:
    Graph() = default;
    explicit Graph(std::size_t n) : adjacency_(n) {}
    Graph(std::size_t n, const std::vector<Edge>& edges);

    std::size_t num_vertices() const { return adjacency_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
    const std::vector<std::vector<std::size_t>>& adjacency() const { return adjacency_; }
    std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
    bool has_edge(std::size_t u, std::size_t v) const;

    /// Returns false (and leaves the graph unchanged) for self-loops and existing edges.
    bool add_edge(std::size_t u, std::size_t v);

    bool operator==(const Graph& other) const { return edges_ == other.edges_ && num_vertices() == other.num_vertices(); }

  private:
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Periodic square lattice; vertex (x, y) has index y * width + x.
Graph torus_grid(std::size_t width, std::size_t height);

/// Bipartite bit/check graph of a parity-check matrix. Bits are vertices [0, n),
/// checks are vertices [n, n + m) in the unified indexing used by the metric functions.
class TannerGraph {
  public:
    TannerGraph() = default;
    TannerGraph(std::size_t num_bits, std::size_t num_checks, const std::vector<Edge>& check_bit_edges);

    std::size_t num_bits() const { return bit_checks_.size(); }
    std::size_t num_checks() const { return check_bits_.size(); }
    std::size_t num_edges() const;

    const std::vector<std::size_t>& checks_of_bit(std::size_t b) const { return bit_checks_[b]; }
    const std::vector<std::size_t>& bits_of_check(std::size_t c) const { return check_bits_[c]; }

    /// Max number of checks on a bit.
    std::size_t kappa_b() const;
    /// Max number of bits in a check.
    std::size_t kappa_c() const;
    std::size_t kappa() const { return std::max(kappa_b(), kappa_c()); }

    std::size_t check_vertex(std::size_t c) const { return num_bits() + c; }
    /// Neighbours in the unified bit-then-check indexing.
    std::vector<std::vector<std::size_t>> unified_adjacency() const;

    bool operator==(const TannerGraph& other) const = default;

  private:
    std::vector<std::vector<std::size_t>> bit_checks_;
    std::vector<std::vector<std::size_t>> check_bits_;
};

TannerGraph tanner_from_matrix(const gf2::SparseBitMatrix& h);
gf2::SparseBitMatrix matrix_from_tanner(const TannerGraph& t);

/// Breadth-first distances from `source`; nullopt marks unreachable vertices.
std::vector<std::optional<std::size_t>> bfs_distances(const std::vector<std::vector<std::size_t>>& adjacency,
                                                      std::size_t source);

std::optional<std::size_t> graph_distance(const Graph& g, std::size_t u, std::size_t v);
std::optional<std::size_t> graph_distance(const TannerGraph& t, std::size_t u, std::size_t v);

/// Vertices within `radius` of `center`, ascending.
std::vector<std::size_t> ball(const Graph& g, std::size_t center, std::size_t radius);
std::vector<std::size_t> ball(const TannerGraph& t, std::size_t center, std::size_t radius);

bool is_connected(const std::vector<std::vector<std::size_t>>& adjacency);
bool is_connected(const Graph& g);
bool is_connected(const TannerGraph& t);

/// Graph text format: first line "n", then one "u v" line per edge (0-based).
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

}  // namespace fracton::graph
