#pragma once

// Directed diameter of sampled orientations.
//
// A sampled D_rho(N) is rarely strongly connected, so the measured diameter
// is that of its largest strongly connected component (ties: the component
// holding the smallest label). That diameter is always finite.

#include <cstdint>
#include <vector>

#include "divorient/graph.hpp"
#include "divorient/scc.hpp"

namespace divorient {

enum class Direction { forward, backward };

struct EccentricityResult {
    std::uint32_t vertex;  ///< label
    std::uint32_t forward_ecc;
    std::uint32_t reachable_count;
};

/// Level-synchronous BFS. Visitation is tracked with an epoch stamp, so
/// repeated runs on graphs of the same size never clear arrays.
class BfsWorkspace {
public:
    /// Eccentricity of `source` in direction `dir` over reachable vertices.
    EccentricityResult run(const Digraph& d, VertexIndex source, Direction dir);

    /// Vertices of the last run in BFS order.
    [[nodiscard]] const std::vector<VertexIndex>& order() const noexcept { return order_; }
    /// order()[level_start()[k] .. level_start()[k+1]) is BFS level k.
    [[nodiscard]] const std::vector<std::uint32_t>& level_start() const noexcept { return level_start_; }
    /// BFS-tree parent from the last run; the source is its own parent.
    [[nodiscard]] VertexIndex parent(VertexIndex v) const { return parent_[v]; }

private:
    std::vector<std::uint32_t> stamp_;
    std::vector<VertexIndex> parent_;
    std::vector<VertexIndex> order_;
    std::vector<std::uint32_t> level_start_;
    std::uint32_t epoch_ = 0;
};

/// Induced subgraph with a map back to the labels of the source digraph.
struct InducedSubgraph {
    Digraph digraph;
    std::vector<std::uint32_t> labels;  ///< new index -> original label
};

InducedSubgraph restrict_to_largest_scc(const Digraph& d, const ComponentLabeling& labeling);

/// Oracle: BFS from every vertex. Requires strong connectivity and n <= 2000.
std::uint32_t all_pairs_diameter(const Digraph& d);

/// Bounds observed while running iFUB.
struct IfubTrace {
    VertexIndex start = 0;               ///< max total degree, smallest index on ties
    VertexIndex root = 0;
    std::uint32_t sweep_lower = 0;       ///< double-sweep lower bound
    std::uint32_t root_ecc = 0;          ///< max(forward, backward) eccentricity of root
    std::vector<std::uint32_t> lower;    ///< lower bound after each fringe level
    std::vector<std::uint32_t> upper;    ///< upper bound after each fringe level
    std::uint32_t bfs_runs = 0;
};

/// Exact diameter of a strongly connected digraph by the directed iterative
/// fringe upper bound method. Throws std::invalid_argument if d is not
/// strongly connected.
class IfubSolver {
public:
    std::uint32_t diameter(const Digraph& d, IfubTrace* trace = nullptr);

private:
    BfsWorkspace bfs_;
    std::vector<VertexIndex> fwd_order_, bwd_order_;
    std::vector<std::uint32_t> fwd_levels_, bwd_levels_;
};

std::uint32_t ifub_diameter(const Digraph& d, IfubTrace* trace = nullptr);

/// orient -> SCC -> largest component -> iFUB.
std::uint32_t sampled_graph_diameter(const DivisorGraph& g, const Orientation& o);

}  // namespace divorient
