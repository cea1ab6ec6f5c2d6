#include "divorient/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "divorient/format.hpp"
#include "divorient/rng.hpp"

namespace divorient {

namespace {

// Counting-sort CSR build; within a vertex, entries keep input order.
void fill_csr(std::uint32_t n, std::span<const VertexIndex> keys, std::span<const VertexIndex> values,
              std::vector<std::uint32_t>& offsets, std::vector<VertexIndex>& targets,
              std::vector<std::uint32_t>* edge_ids)
{
    offsets.assign(std::size_t{n} + 1, 0);
    for (auto k : keys)
        ++offsets[k + 1];
    for (std::uint32_t v = 0; v < n; ++v)
        offsets[v + 1] += offsets[v];
    targets.resize(keys.size());
    if (edge_ids)
        edge_ids->resize(keys.size());
    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const auto pos = cursor[keys[i]]++;
        targets[pos] = values[i];
        if (edge_ids)
            (*edge_ids)[pos] = static_cast<std::uint32_t>(i);
    }
}

}  // namespace

DivisorGraph build_divisor_graph(std::uint32_t n)
{
    if (n == 0)
        throw std::invalid_argument("build_divisor_graph: N must be >= 1");
    if (n >= (std::uint32_t{1} << 31))
        throw std::invalid_argument("build_divisor_graph: N must be < 2^31");

    DivisorGraph g;
    g.n_ = n;

    // Proper-divisor counts give the per-hi offsets of the lexicographic order.
    std::vector<std::uint32_t> offsets(std::size_t{n} + 2, 0);
    for (std::uint64_t lo = 1; lo <= n; ++lo)
        for (std::uint64_t hi = 2 * lo; hi <= n; hi += lo)
            ++offsets[hi + 1];
    for (std::uint32_t v = 1; v <= n; ++v)
        offsets[v + 1] += offsets[v];
    const std::size_t m = offsets[std::size_t{n} + 1];
    g.edges_.resize(m);

    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::uint64_t lo = 1; lo <= n; ++lo)
        for (std::uint64_t hi = 2 * lo; hi <= n; hi += lo)
            g.edges_[cursor[hi]++] = Edge{static_cast<std::uint32_t>(hi), static_cast<std::uint32_t>(lo)};

    std::vector<VertexIndex> his(m), los(m);
    for (std::size_t i = 0; i < m; ++i) {
        his[i] = g.edges_[i].hi - 1;
        los[i] = g.edges_[i].lo - 1;
    }
    fill_csr(n, his, los, g.fwd_.offsets, g.fwd_.targets, &g.fwd_.edge_ids);
    fill_csr(n, los, his, g.rev_.offsets, g.rev_.targets, &g.rev_.edge_ids);
    return g;
}

Digraph Digraph::from_arcs(std::uint32_t n, std::span<const std::pair<std::uint32_t, std::uint32_t>> arcs)
{
    std::vector<VertexIndex> src, dst;
    src.reserve(arcs.size());
    dst.reserve(arcs.size());
    for (auto [u, v] : arcs) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::out_of_range("Digraph::from_arcs: arc endpoint outside 1..n");
        src.push_back(u - 1);
        dst.push_back(v - 1);
    }
    Digraph d;
    d.assign(n, src, dst);
    return d;
}

void Digraph::assign(std::uint32_t n, std::span<const VertexIndex> sources, std::span<const VertexIndex> targets)
{
    n_ = n;
    fill_csr(n, sources, targets, out_offsets_, out_targets_, nullptr);
    fill_csr(n, targets, sources, in_offsets_, in_targets_, nullptr);
}

std::vector<std::pair<VertexIndex, VertexIndex>> Digraph::arcs() const
{
    std::vector<std::pair<VertexIndex, VertexIndex>> out;
    out.reserve(arc_count());
    for (VertexIndex u = 0; u < n_; ++u)
        for (auto v : successors(u))
            out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

Digraph Digraph::reversed() const
{
    Digraph r;
    r.n_ = n_;
    r.out_offsets_ = in_offsets_;
    r.out_targets_ = in_targets_;
    r.in_offsets_ = out_offsets_;
    r.in_targets_ = out_targets_;
    return r;
}

Orientation::Orientation(std::size_t edge_count, bool all_flipped)
    : size_(edge_count), words_((edge_count + 63) / 64, all_flipped ? ~std::uint64_t{0} : 0)
{
    if (all_flipped && (edge_count & 63))
        words_.back() &= (std::uint64_t{1} << (edge_count & 63)) - 1;
}

void Orientation::set(std::size_t i, bool value)
{
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

std::size_t Orientation::flip_count() const noexcept
{
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

Orientation Orientation::complemented() const
{
    Orientation c(size_, true);
    for (std::size_t w = 0; w < words_.size(); ++w)
        c.words_[w] &= ~words_[w];
    c.seed_info = seed_info;
    return c;
}

std::string Orientation::bit_string() const
{
    std::string bits(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (flipped(i))
            bits[i] = '1';
    return bits;
}

Orientation sample_orientation(const DivisorGraph& g, double rho, SeedSpec seed, std::uint64_t sample_index)
{
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument("sample_orientation: rho must lie in [0,1]");
    const std::size_t m = g.edge_count();
    Orientation o(m);
    o.seed_info = SeedInfo{seed.master_seed, g.n(), seed.rho_index, sample_index};
    SplitMix64 rng(stream_seed(seed.master_seed, g.n(), seed.rho_index, sample_index));
    for (std::size_t i = 0; i < m; ++i)
        if (rng.next_unit() < rho)
            o.set(i, true);
    return o;
}

const Digraph& OrientationBuffers::build(const DivisorGraph& g, const Orientation& o)
{
    if (o.size() != g.edge_count())
        throw std::invalid_argument("oriented_adjacency: orientation length " + std::to_string(o.size()) +
                                    " does not match edge count " + std::to_string(g.edge_count()));
    const auto edges = g.edges();
    sources_.resize(edges.size());
    targets_.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const bool rev = o.flipped(i);
        sources_[i] = (rev ? edges[i].lo : edges[i].hi) - 1;
        targets_[i] = (rev ? edges[i].hi : edges[i].lo) - 1;
    }
    digraph_.assign(g.n(), sources_, targets_);
    return digraph_;
}

Digraph oriented_adjacency(const DivisorGraph& g, const Orientation& o)
{
    OrientationBuffers buffers;
    return buffers.build(g, o);
}

Digraph undirected_adjacency(const DivisorGraph& g)
{
    std::vector<VertexIndex> src, dst;
    src.reserve(2 * g.edge_count());
    dst.reserve(2 * g.edge_count());
    for (const auto& e : g.edges()) {
        src.push_back(e.hi - 1);
        dst.push_back(e.lo - 1);
        src.push_back(e.lo - 1);
        dst.push_back(e.hi - 1);
    }
    Digraph d;
    d.assign(g.n(), src, dst);
    return d;
}

std::string format_orientation_dump(const DivisorGraph& g, const Orientation& o, double rho)
{
    std::string out = "N=" + std::to_string(g.n()) + " E=" + std::to_string(g.edge_count()) +
                      " seed=" + std::to_string(o.seed_info.master_seed) +
                      " idx=" + std::to_string(o.seed_info.sample_index) + " rho=" + format_double(rho) + "\n";
    out += o.bit_string();
    out += '\n';
    return out;
}

}  // namespace divorient
