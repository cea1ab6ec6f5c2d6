#include "divorient/scc.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace divorient {

namespace {
constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
}

const ComponentLabeling& SccWorkspace::run(const Digraph& d)
{
    const std::uint32_t n = d.n();
    index_.assign(n, kUnvisited);
    lowlink_.assign(n, 0);
    stack_.clear();
    calls_.clear();
    labeling_.comp_id.assign(n, kUnvisited);
    labeling_.comp_sizes.clear();

    std::uint32_t counter = 0;
    for (VertexIndex root = 0; root < n; ++root) {
        if (index_[root] != kUnvisited)
            continue;
        index_[root] = lowlink_[root] = counter++;
        stack_.push_back(root);
        calls_.push_back({root, 0});

        while (!calls_.empty()) {
            Frame& f = calls_.back();
            const auto succ = d.successors(f.v);
            if (f.next < succ.size()) {
                const VertexIndex w = succ[f.next++];
                if (index_[w] == kUnvisited) {
                    index_[w] = lowlink_[w] = counter++;
                    stack_.push_back(w);
                    calls_.push_back({w, 0});
                } else if (labeling_.comp_id[w] == kUnvisited) {
                    // w is still on the stack.
                    lowlink_[f.v] = std::min(lowlink_[f.v], index_[w]);
                }
                continue;
            }

            const VertexIndex v = f.v;
            calls_.pop_back();
            if (!calls_.empty())
                lowlink_[calls_.back().v] = std::min(lowlink_[calls_.back().v], lowlink_[v]);
            if (lowlink_[v] == index_[v]) {
                const auto comp = static_cast<std::uint32_t>(labeling_.comp_sizes.size());
                std::uint32_t size = 0;
                VertexIndex w;
                do {
                    w = stack_.back();
                    stack_.pop_back();
                    labeling_.comp_id[w] = comp;
                    ++size;
                } while (w != v);
                labeling_.comp_sizes.push_back(size);
            }
        }
    }
    return labeling_;
}

ComponentLabeling strongly_connected_components(const Digraph& d)
{
    SccWorkspace ws;
    return ws.run(d);
}

std::uint32_t largest_scc_size(const ComponentLabeling& labeling)
{
    if (labeling.comp_sizes.empty())
        return 0;
    return *std::max_element(labeling.comp_sizes.begin(), labeling.comp_sizes.end());
}

std::uint32_t largest_component(const ComponentLabeling& labeling)
{
    if (labeling.comp_sizes.empty())
        throw std::invalid_argument("largest_component: empty labeling");
    const std::uint32_t best_size = largest_scc_size(labeling);
    // Scanning vertices in label order meets each component first at its minimum label.
    for (auto c : labeling.comp_id)
        if (labeling.comp_sizes[c] == best_size)
            return c;
    return 0;
}

std::uint32_t scc_size_of_vertex(const ComponentLabeling& labeling, std::uint32_t label)
{
    if (label < 1 || label > labeling.comp_id.size())
        throw std::out_of_range("scc_size_of_vertex: vertex label " + std::to_string(label) + " outside 1.." +
                                std::to_string(labeling.comp_id.size()));
    return labeling.comp_sizes[labeling.comp_id[label - 1]];
}

ComponentLabeling brute_force_scc(const Digraph& d)
{
    const std::uint32_t n = d.n();
    if (n > 64)
        throw std::invalid_argument("brute_force_scc: at most 64 vertices, got " + std::to_string(n));
    std::vector<std::uint64_t> reach(n);
    for (VertexIndex v = 0; v < n; ++v) {
        reach[v] = std::uint64_t{1} << v;
        for (auto w : d.successors(v))
            reach[v] |= std::uint64_t{1} << w;
    }
    for (std::uint32_t k = 0; k < n; ++k)
        for (std::uint32_t i = 0; i < n; ++i)
            if ((reach[i] >> k) & 1u)
                reach[i] |= reach[k];

    ComponentLabeling out;
    out.comp_id.assign(n, kUnvisited);
    for (VertexIndex v = 0; v < n; ++v) {
        if (out.comp_id[v] != kUnvisited)
            continue;
        const auto comp = static_cast<std::uint32_t>(out.comp_sizes.size());
        std::uint32_t size = 0;
        for (VertexIndex u = v; u < n; ++u) {
            if (((reach[v] >> u) & 1u) && ((reach[u] >> v) & 1u)) {
                out.comp_id[u] = comp;
                ++size;
            }
        }
        out.comp_sizes.push_back(size);
    }
    return out;
}

bool same_partition(const ComponentLabeling& a, const ComponentLabeling& b)
{
    if (a.comp_id.size() != b.comp_id.size() || a.comp_sizes.size() != b.comp_sizes.size())
        return false;
    std::vector<std::uint32_t> a_to_b(a.comp_sizes.size(), kUnvisited);
    std::vector<std::uint32_t> b_to_a(b.comp_sizes.size(), kUnvisited);
    for (std::size_t v = 0; v < a.comp_id.size(); ++v) {
        const auto ca = a.comp_id[v];
        const auto cb = b.comp_id[v];
        if (a_to_b[ca] == kUnvisited && b_to_a[cb] == kUnvisited) {
            a_to_b[ca] = cb;
            b_to_a[cb] = ca;
        } else if (a_to_b[ca] != cb || b_to_a[cb] != ca) {
            return false;
        }
    }
    return true;
}

}  // namespace divorient
