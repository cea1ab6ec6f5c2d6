#pragma once

// Divisor graph G_N, its reference orientation D_N (larger label -> divisor),
// and seeded random orientations.
//
// Vertex labels are 1..n wherever an interface speaks of a "label". CSR
// arrays are indexed by the 0-based vertex index (label - 1).

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace divorient {

using VertexIndex = std::uint32_t;

/// Edge of G_N stored in reference direction hi -> lo, with lo | hi, lo < hi.
struct Edge {
    std::uint32_t hi;
    std::uint32_t lo;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Compressed adjacency: neighbours of index v are targets[offsets[v] .. offsets[v+1]).
struct Csr {
    std::vector<std::uint32_t> offsets;
    std::vector<VertexIndex> targets;
    std::vector<std::uint32_t> edge_ids;

    [[nodiscard]] std::span<const VertexIndex> neighbours(VertexIndex v) const
    {
        return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
    }
    [[nodiscard]] std::span<const std::uint32_t> edges_of(VertexIndex v) const
    {
        return {edge_ids.data() + offsets[v], edge_ids.data() + offsets[v + 1]};
    }
};

/// Immutable divisor graph. Edges are in canonical lexicographic (hi, lo)
/// order; every bit index of an Orientation refers to this order.
class DivisorGraph {
public:
    [[nodiscard]] std::uint32_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
    /// Reference orientation: index(hi) -> index(lo).
    [[nodiscard]] const Csr& csr_fwd() const noexcept { return fwd_; }
    /// Reference orientation reversed: index(lo) -> index(hi).
    [[nodiscard]] const Csr& csr_rev() const noexcept { return rev_; }

private:
    friend DivisorGraph build_divisor_graph(std::uint32_t n);

    std::uint32_t n_ = 0;
    std::vector<Edge> edges_;
    Csr fwd_;
    Csr rev_;
};

/// O(N log N) by enumerating multiples. Throws on N == 0 or N >= 2^31.
DivisorGraph build_divisor_graph(std::uint32_t n);

/// Directed graph in CSR form over vertex indices 0..n-1.
class Digraph {
public:
    Digraph() = default;

    /// Arcs given as (source label, target label), labels 1..n.
    static Digraph from_arcs(std::uint32_t n, std::span<const std::pair<std::uint32_t, std::uint32_t>> arcs);

    [[nodiscard]] std::uint32_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t arc_count() const noexcept { return out_targets_.size(); }

    [[nodiscard]] std::span<const VertexIndex> successors(VertexIndex v) const
    {
        return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
    }
    [[nodiscard]] std::span<const VertexIndex> predecessors(VertexIndex v) const
    {
        return {in_targets_.data() + in_offsets_[v], in_targets_.data() + in_offsets_[v + 1]};
    }
    [[nodiscard]] std::uint32_t out_degree(VertexIndex v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
    [[nodiscard]] std::uint32_t in_degree(VertexIndex v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

    /// Every arc as (source index, target index), sorted.
    [[nodiscard]] std::vector<std::pair<VertexIndex, VertexIndex>> arcs() const;
    [[nodiscard]] Digraph reversed() const;

    friend bool operator==(const Digraph& a, const Digraph& b) { return a.arcs() == b.arcs() && a.n_ == b.n_; }

    /// Rebuilds in place from 0-based arc endpoints; reuses storage.
    void assign(std::uint32_t n, std::span<const VertexIndex> sources, std::span<const VertexIndex> targets);

private:
    std::uint32_t n_ = 0;
    std::vector<std::uint32_t> out_offsets_{0};
    std::vector<VertexIndex> out_targets_;
    std::vector<std::uint32_t> in_offsets_{0};
    std::vector<VertexIndex> in_targets_;
};

/// Where an orientation's randomness came from.
struct SeedInfo {
    std::uint64_t master_seed = 0;
    std::uint64_t n = 0;
    std::uint64_t rho_index = 0;
    std::uint64_t sample_index = 0;
};

/// Master seed plus the rho coordinate of the experiment cell.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t rho_index = 0;
};

/// One bit per canonical edge; set means reversed (lo -> hi).
class Orientation {
public:
    Orientation() = default;
    explicit Orientation(std::size_t edge_count, bool all_flipped = false);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] bool flipped(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value);
    [[nodiscard]] std::size_t flip_count() const noexcept;
    [[nodiscard]] Orientation complemented() const;
    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }
    /// Bits in canonical edge order, '1' = reversed.
    [[nodiscard]] std::string bit_string() const;

    SeedInfo seed_info;

    friend bool operator==(const Orientation& a, const Orientation& b)
    {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Each edge reversed independently with probability rho, using the stream
/// stream_seed(master_seed, N, rho_index, sample_index). A draw u in [0,1)
/// reverses the edge when u < rho. Edges consume one draw each in canonical order.
Orientation sample_orientation(const DivisorGraph& g, double rho, SeedSpec seed, std::uint64_t sample_index);

/// Edge i contributes hi -> lo when bit i is clear, lo -> hi when set.
Digraph oriented_adjacency(const DivisorGraph& g, const Orientation& o);

/// Scratch for repeated orientation without reallocating.
class OrientationBuffers {
public:
    const Digraph& build(const DivisorGraph& g, const Orientation& o);

private:
    std::vector<VertexIndex> sources_;
    std::vector<VertexIndex> targets_;
    Digraph digraph_;
};

/// G_N as a symmetric digraph (both arcs per edge).
Digraph undirected_adjacency(const DivisorGraph& g);

/// `N=<n> E=<e> seed=<s> idx=<i> rho=<r>` then a newline and the flip bits.
std::string format_orientation_dump(const DivisorGraph& g, const Orientation& o, double rho);

}  // namespace divorient
