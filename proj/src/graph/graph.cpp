#include "fracton/graph/graph.hpp"

#include <cstdint>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fracton::graph {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : adjacency_(n) {
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw std::out_of_range("Graph: edge endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument("Graph: self-loop");
        }
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("Graph: parallel edge");
    }
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& a : adjacency_) {
        std::sort(a.begin(), a.end());
    }
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    const auto& a = adjacency_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
}

bool Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= num_vertices() || v >= num_vertices()) {
        throw std::out_of_range("Graph::add_edge: endpoint out of range");
    }
    if (u == v || has_edge(u, v)) {
        return false;
    }
    Edge e{std::min(u, v), std::max(u, v)};
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
    auto& au = adjacency_[u];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto& av = adjacency_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    return true;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) {
        throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

Graph torus_grid(std::size_t width, std::size_t height) {
    if (width < 3 || height < 3) {
        throw std::invalid_argument("torus_grid: both dimensions must be at least 3");
    }
    std::vector<Edge> edges;
    for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x) {
            const std::size_t v = y * width + x;
            edges.emplace_back(v, y * width + (x + 1) % width);
            edges.emplace_back(v, ((y + 1) % height) * width + x);
        }
    }
    return Graph(width * height, edges);
}

TannerGraph::TannerGraph(std::size_t num_bits, std::size_t num_checks, const std::vector<Edge>& check_bit_edges)
    : bit_checks_(num_bits), check_bits_(num_checks) {
    for (auto [c, b] : check_bit_edges) {
        if (c >= num_checks || b >= num_bits) {
            throw std::out_of_range("TannerGraph: edge endpoint out of range");
        }
        check_bits_[c].push_back(b);
        bit_checks_[b].push_back(c);
    }
    auto normalize = [](std::vector<std::vector<std::size_t>>& lists) {
        for (auto& l : lists) {
            std::sort(l.begin(), l.end());
            if (std::adjacent_find(l.begin(), l.end()) != l.end()) {
                throw std::invalid_argument("TannerGraph: parallel edge");
            }
        }
    };
    normalize(check_bits_);
    normalize(bit_checks_);
}

std::size_t TannerGraph::num_edges() const {
    std::size_t total = 0;
    for (const auto& l : check_bits_) {
        total += l.size();
    }
    return total;
}

std::size_t TannerGraph::kappa_b() const {
    std::size_t k = 0;
    for (const auto& l : bit_checks_) {
        k = std::max(k, l.size());
    }
    return k;
}

std::size_t TannerGraph::kappa_c() const {
    std::size_t k = 0;
    for (const auto& l : check_bits_) {
        k = std::max(k, l.size());
    }
    return k;
}

std::vector<std::vector<std::size_t>> TannerGraph::unified_adjacency() const {
    const std::size_t n = num_bits();
    std::vector<std::vector<std::size_t>> adj(n + num_checks());
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c : bit_checks_[b]) {
            adj[b].push_back(n + c);
        }
    }
    for (std::size_t c = 0; c < num_checks(); ++c) {
        adj[n + c] = check_bits_[c];
    }
    return adj;
}

TannerGraph tanner_from_matrix(const gf2::SparseBitMatrix& h) {
    std::vector<Edge> edges;
    edges.reserve(h.nnz());
    for (std::size_t r = 0; r < h.rows(); ++r) {
        for (std::size_t c : h.row(r)) {
            edges.emplace_back(r, c);
        }
    }
    return TannerGraph(h.cols(), h.rows(), edges);
}

gf2::SparseBitMatrix matrix_from_tanner(const TannerGraph& t) {
    gf2::SparseBitMatrix h(t.num_checks(), t.num_bits());
    for (std::size_t c = 0; c < t.num_checks(); ++c) {
        for (std::size_t b : t.bits_of_check(c)) {
            h.toggle(c, b);
        }
    }
    return h;
}

std::vector<std::optional<std::size_t>> bfs_distances(const std::vector<std::vector<std::size_t>>& adjacency,
                                                      std::size_t source) {
    if (source >= adjacency.size()) {
        throw std::out_of_range("bfs_distances: source out of range");
    }
    std::vector<std::optional<std::size_t>> dist(adjacency.size());
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : adjacency[v]) {
            if (!dist[w]) {
                dist[w] = *dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

namespace {

std::vector<std::size_t> ball_in(const std::vector<std::vector<std::size_t>>& adjacency, std::size_t center,
                                 std::size_t radius) {
    if (center >= adjacency.size()) {
        throw std::out_of_range("ball: center out of range");
    }
    std::vector<std::size_t> dist(adjacency.size(), SIZE_MAX);
    std::vector<std::size_t> frontier{center};
    std::vector<std::size_t> out{center};
    dist[center] = 0;
    for (std::size_t d = 1; d <= radius && !frontier.empty(); ++d) {
        std::vector<std::size_t> next;
        for (std::size_t v : frontier) {
            for (std::size_t w : adjacency[v]) {
                if (dist[w] == SIZE_MAX) {
                    dist[w] = d;
                    next.push_back(w);
                    out.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::optional<std::size_t> graph_distance(const Graph& g, std::size_t u, std::size_t v) {
    if (v >= g.num_vertices()) {
        throw std::out_of_range("graph_distance: vertex out of range");
    }
    return bfs_distances(g.adjacency(), u)[v];
}

std::optional<std::size_t> graph_distance(const TannerGraph& t, std::size_t u, std::size_t v) {
    auto adj = t.unified_adjacency();
    if (v >= adj.size()) {
        throw std::out_of_range("graph_distance: vertex out of range");
    }
    return bfs_distances(adj, u)[v];
}

std::vector<std::size_t> ball(const Graph& g, std::size_t center, std::size_t radius) {
    return ball_in(g.adjacency(), center, radius);
}

std::vector<std::size_t> ball(const TannerGraph& t, std::size_t center, std::size_t radius) {
    return ball_in(t.unified_adjacency(), center, radius);
}

bool is_connected(const std::vector<std::vector<std::size_t>>& adjacency) {
    if (adjacency.empty()) {
        return true;
    }
    auto dist = bfs_distances(adjacency, 0);
    return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

bool is_connected(const Graph& g) { return is_connected(g.adjacency()); }

bool is_connected(const TannerGraph& t) { return is_connected(t.unified_adjacency()); }

void write_graph(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << '\n';
    for (auto [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

Graph read_graph(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("graph format: missing vertex count");
    }
    std::size_t n = 0;
    {
        std::istringstream header(line);
        if (!(header >> n)) {
            throw std::runtime_error("graph format: bad vertex count");
        }
    }
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream row(line);
        std::size_t u = 0;
        std::size_t v = 0;
        if (!(row >> u >> v)) {
            throw std::runtime_error("graph format: bad edge line '" + line + "'");
        }
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

}  // namespace fracton::graph
