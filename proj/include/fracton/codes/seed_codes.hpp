#pragma once

#include <cstddef>
#include <vector>

#include "fracton/codes/classical_code.hpp"
#include "fracton/gf2/distance.hpp"
#include "fracton/graph/graph.hpp"
#include "fracton/tiling/pinwheel.hpp"

namespace fracton::codes {

enum class Topology { cyclic, open };

/// Cyclic: n checks e_i + e_{i+1 mod n}. Open: the n - 1 checks of a path.
ClassicalCode repetition_code(std::size_t n, Topology topology, const CodeOptions& options = {});

/// H = (graph Laplacian) mod 2. Square and symmetric; every row sums to zero, so the
/// all-ones vector is always a codeword. Throws std::invalid_argument on a disconnected graph.
ClassicalCode laplacian_code(const graph::Graph& g, const CodeOptions& options = {});

/// Nearest-neighbour Ising code: one two-bit check per edge of `g`.
ClassicalCode ising_code(const graph::Graph& g, const CodeOptions& options = {});

/// H read off a connected Tanner graph with fewer checks than bits.
ClassicalCode typical_ldpc(const graph::TannerGraph& t, const CodeOptions& options = {});

struct PinwheelOptions {
    std::size_t depletion_offset = 0;
    bool run_boundary_guard = true;
    CodeOptions code;
};

/// Result of searching for short codewords living next to the boundary.
struct BoundaryGuardReport {
    std::size_t region_size = 0;
    std::size_t region_kernel_dim = 0;
    gf2::MinWeightResult shortest;
    double threshold = 0.0;
    /// True when a codeword lighter than `threshold` lies entirely in the boundary region.
    bool flagged = false;
};

struct PinwheelCode {
    ClassicalCode code;
    tiling::TilingGraph tiling;
    /// Tiling vertex of each remaining check row.
    std::vector<std::size_t> check_vertices;
    /// Tiling vertices whose checks were depleted.
    std::vector<std::size_t> removed_checks;
    std::optional<BoundaryGuardReport> guard;
};

/// (L - I) mod 2 on the generation-N pinwheel graph, with every p-th check along the
/// boundary walk removed: positions offset, offset + p, ..., floor(boundary / p) of them.
PinwheelCode pinwheel_code(std::size_t generation, std::size_t period, const PinwheelOptions& options = {});

/// Undepleted (L - I) mod 2 over the tiling graph.
gf2::SparseBitMatrix frustrated_laplacian(const graph::Graph& g);

/// Minimum-weight codeword supported within graph distance `reach` of the boundary.
BoundaryGuardReport boundary_guard(const ClassicalCode& code, const tiling::TilingGraph& tiling,
                                   std::size_t reach = 2, const gf2::MinWeightOptions& options = {});

}  // namespace fracton::codes
