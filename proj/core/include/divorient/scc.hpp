#pragma once

#include <cstdint>
#include <vector>

#include "divorient/graph.hpp"

namespace divorient {

/// Partition of vertex indices into strongly connected components.
/// Tarjan emits components sinks-first, so for every arc u -> v between
/// distinct components comp_id[u] > comp_id[v].
struct ComponentLabeling {
    std::vector<std::uint32_t> comp_id;     ///< vertex index -> component
    std::vector<std::uint32_t> comp_sizes;  ///< component -> vertex count

    [[nodiscard]] std::uint32_t num_components() const noexcept
    {
        return static_cast<std::uint32_t>(comp_sizes.size());
    }
};

/// Iterative Tarjan with reusable storage. Not thread-safe; use one per thread.
class SccWorkspace {
public:
    const ComponentLabeling& run(const Digraph& d);

private:
    struct Frame {
        VertexIndex v;
        std::uint32_t next;
    };
    std::vector<std::uint32_t> index_;
    std::vector<std::uint32_t> lowlink_;
    std::vector<VertexIndex> stack_;
    std::vector<Frame> calls_;
    ComponentLabeling labeling_;
};

/// O(V + E), no recursion.
ComponentLabeling strongly_connected_components(const Digraph& d);

std::uint32_t largest_scc_size(const ComponentLabeling& labeling);

/// Component of maximum size; ties go to the one holding the smallest vertex label.
std::uint32_t largest_component(const ComponentLabeling& labeling);

/// Size of the component containing `label` (1-based). Throws std::out_of_range.
std::uint32_t scc_size_of_vertex(const ComponentLabeling& labeling, std::uint32_t label);

/// Oracle: mutual reachability from a bitset transitive closure. n <= 64.
/// Components are numbered in order of their smallest vertex.
ComponentLabeling brute_force_scc(const Digraph& d);

/// True when both labelings induce the same vertex partition.
bool same_partition(const ComponentLabeling& a, const ComponentLabeling& b);

}  // namespace divorient
