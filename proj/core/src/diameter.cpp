#include "divorient/diameter.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace divorient {

EccentricityResult BfsWorkspace::run(const Digraph& d, VertexIndex source, Direction dir)
{
    const std::uint32_t n = d.n();
    if (stamp_.size() != n) {
        stamp_.assign(n, 0);
        parent_.assign(n, 0);
        epoch_ = 0;
    }
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    order_.clear();
    level_start_.clear();

    stamp_[source] = epoch_;
    parent_[source] = source;
    order_.push_back(source);
    level_start_.push_back(0);
    std::size_t head = 0;
    while (head < order_.size()) {
        const std::size_t level_end = order_.size();
        for (; head < level_end; ++head) {
            const VertexIndex v = order_[head];
            const auto next = dir == Direction::forward ? d.successors(v) : d.predecessors(v);
            for (auto w : next) {
                if (stamp_[w] != epoch_) {
                    stamp_[w] = epoch_;
                    parent_[w] = v;
                    order_.push_back(w);
                }
            }
        }
        level_start_.push_back(static_cast<std::uint32_t>(level_end));
    }
    const auto levels = static_cast<std::uint32_t>(level_start_.size() - 1);
    return {source + 1, levels - 1, static_cast<std::uint32_t>(order_.size())};
}

InducedSubgraph restrict_to_largest_scc(const Digraph& d, const ComponentLabeling& labeling)
{
    InducedSubgraph sub;
    if (d.n() == 0)
        return sub;
    const std::uint32_t comp = largest_component(labeling);
    constexpr auto kAbsent = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> local(d.n(), kAbsent);
    for (VertexIndex v = 0; v < d.n(); ++v) {
        if (labeling.comp_id[v] == comp) {
            local[v] = static_cast<std::uint32_t>(sub.labels.size());
            sub.labels.push_back(v + 1);
        }
    }
    std::vector<VertexIndex> src, dst;
    for (VertexIndex v = 0; v < d.n(); ++v) {
        if (local[v] == kAbsent)
            continue;
        for (auto w : d.successors(v)) {
            if (local[w] != kAbsent) {
                src.push_back(local[v]);
                dst.push_back(local[w]);
            }
        }
    }
    sub.digraph.assign(static_cast<std::uint32_t>(sub.labels.size()), src, dst);
    return sub;
}

std::uint32_t all_pairs_diameter(const Digraph& d)
{
    if (d.n() > 2000)
        throw std::invalid_argument("all_pairs_diameter: at most 2000 vertices, got " + std::to_string(d.n()));
    BfsWorkspace bfs;
    std::uint32_t diam = 0;
    for (VertexIndex v = 0; v < d.n(); ++v) {
        const auto ecc = bfs.run(d, v, Direction::forward);
        if (ecc.reachable_count != d.n())
            throw std::invalid_argument("all_pairs_diameter: digraph is not strongly connected");
        diam = std::max(diam, ecc.forward_ecc);
    }
    return diam;
}

namespace {

void copy_levels(const BfsWorkspace& bfs, std::vector<VertexIndex>& order, std::vector<std::uint32_t>& levels)
{
    order = bfs.order();
    levels = bfs.level_start();
}

}  // namespace

std::uint32_t IfubSolver::diameter(const Digraph& d, IfubTrace* trace)
{
    const std::uint32_t n = d.n();
    if (n == 0)
        throw std::invalid_argument("ifub_diameter: empty digraph");
    IfubTrace local;
    IfubTrace& t = trace ? *trace : local;
    t = IfubTrace{};
    if (n == 1)
        return 0;

    auto bfs = [&](VertexIndex v, Direction dir) {
        ++t.bfs_runs;
        return bfs_.run(d, v, dir);
    };

    VertexIndex start = 0;
    std::uint32_t best_degree = 0;
    for (VertexIndex v = 0; v < n; ++v) {
        const std::uint32_t deg = d.out_degree(v) + d.in_degree(v);
        if (deg > best_degree) {
            best_degree = deg;
            start = v;
        }
    }
    t.start = start;

    // Double sweep: forward from start, then backward from the farthest vertex.
    const auto fwd_start = bfs(start, Direction::forward);
    const VertexIndex far = bfs_.order().back();
    const auto bwd_far = bfs(far, Direction::backward);
    std::uint32_t lower = std::max(fwd_start.forward_ecc, bwd_far.forward_ecc);
    t.sweep_lower = lower;

    // Midpoint of the shortest path from the backward-farthest vertex to `far`.
    VertexIndex mid = bfs_.order().back();
    for (std::uint32_t step = 0; step < bwd_far.forward_ecc / 2; ++step)
        mid = bfs_.parent(mid);

    // Root: whichever of {midpoint, start} has the smaller max eccentricity.
    VertexIndex root = mid;
    std::uint32_t root_fwd = 0, root_bwd = 0;
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (VertexIndex candidate : {mid, start}) {
        const auto f = bfs(candidate, Direction::forward);
        std::vector<VertexIndex> f_order;
        std::vector<std::uint32_t> f_levels;
        copy_levels(bfs_, f_order, f_levels);
        const auto b = bfs(candidate, Direction::backward);
        // Both directions reach everything from one vertex iff strongly connected.
        if (f.reachable_count != n || b.reachable_count != n)
            throw std::invalid_argument("ifub_diameter: digraph is not strongly connected");
        const std::uint32_t ecc = std::max(f.forward_ecc, b.forward_ecc);
        lower = std::max(lower, ecc);
        if (ecc < best) {
            best = ecc;
            root = candidate;
            root_fwd = f.forward_ecc;
            root_bwd = b.forward_ecc;
            fwd_order_ = std::move(f_order);
            fwd_levels_ = std::move(f_levels);
            copy_levels(bfs_, bwd_order_, bwd_levels_);
        }
        if (candidate == start && mid == start)
            break;
    }
    t.root = root;
    t.root_ecc = best;

    std::uint32_t level = std::max(root_fwd, root_bwd);
    std::uint32_t upper = 2 * level;
    t.lower.push_back(lower);
    t.upper.push_back(upper);
    while (upper > lower && level > 0) {
        // Sources at backward distance `level` from root: their forward eccentricity.
        if (level <= root_bwd) {
            for (std::uint32_t k = bwd_levels_[level]; k < bwd_levels_[level + 1] && lower < upper; ++k)
                lower = std::max(lower, bfs(bwd_order_[k], Direction::forward).forward_ecc);
        }
        // Targets at forward distance `level`: their backward eccentricity.
        if (level <= root_fwd) {
            for (std::uint32_t k = fwd_levels_[level]; k < fwd_levels_[level + 1] && lower < upper; ++k)
                lower = std::max(lower, bfs(fwd_order_[k], Direction::backward).forward_ecc);
        }
        --level;
        upper = std::max(lower, std::min(upper, 2 * level));
        t.lower.push_back(lower);
        t.upper.push_back(upper);
    }
    return lower;
}

std::uint32_t ifub_diameter(const Digraph& d, IfubTrace* trace)
{
    IfubSolver solver;
    return solver.diameter(d, trace);
}

std::uint32_t sampled_graph_diameter(const DivisorGraph& g, const Orientation& o)
{
    const Digraph d = oriented_adjacency(g, o);
    const ComponentLabeling labeling = strongly_connected_components(d);
    const InducedSubgraph core = restrict_to_largest_scc(d, labeling);
    return ifub_diameter(core.digraph);
}

}  // namespace divorient
