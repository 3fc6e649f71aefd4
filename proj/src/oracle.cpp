#include "krcore/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "krcore/errors.hpp"

namespace krcore {

namespace {

// Fixpoint peeling by repeated scans; deliberately the dumb version.
std::vector<char> peel_to_k_core(const std::vector<std::vector<int>>& adj, int k) {
    std::size_t n = adj.size();
    std::vector<char> in(n, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (!in[v]) continue;
            int d = 0;
            for (int w : adj[v])
                if (in[w]) ++d;
            if (d < k) {
                in[v] = 0;
                changed = true;
            }
        }
    }
    return in;
}

std::vector<std::vector<int>> components_of(const std::vector<std::vector<int>>& adj,
                                            const std::vector<char>& in) {
    std::size_t n = adj.size();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> comps;
    for (std::size_t s = 0; s < n; ++s) {
        if (!in[s] || seen[s]) continue;
        std::vector<int> comp, queue{static_cast<int>(s)};
        seen[s] = 1;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            comp.push_back(v);
            for (int w : adj[v])
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

}  // namespace

EnumResult brute_force_mkrc(const AttributedGraph& g, int k, const Threshold& t,
                            SimilarityMetric metric, int cap) {
    if (k < 1) throw std::invalid_argument("brute_force_mkrc: k must be positive");
    std::size_t n = g.size();

    // Adjacency with dissimilar edges removed, from the metric directly.
    std::vector<std::vector<int>> adj(n);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : g.neighbors(u)) {
            if (u >= v) continue;
            if (score_is_similar(similarity_score(g.attribute(u), g.attribute(v), metric), t)) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        }
    }
    std::vector<char> in = peel_to_k_core(adj, k);

    EnumResult out;
    std::vector<std::vector<VertexId>> all_cores;
    for (const std::vector<int>& comp : components_of(adj, in)) {
        std::size_t m = comp.size();
        if (m > static_cast<std::size_t>(cap) || m > 25)
            throw CapExceeded("component of size " + std::to_string(m) +
                              " exceeds the brute force cap of " +
                              std::to_string(std::min<long long>(cap, 25)));

        // Local adjacency and pairwise dissimilarity as bitmasks.
        std::vector<std::uint32_t> adj_mask(m, 0), dis_mask(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j) continue;
                if (std::binary_search(adj[comp[i]].begin(), adj[comp[i]].end(), comp[j]))
                    adj_mask[i] |= 1u << j;
                if (!score_is_similar(similarity_score(g.attribute(comp[i]),
                                                       g.attribute(comp[j]), metric), t))
                    dis_mask[i] |= 1u << j;
            }
        }
        std::vector<std::uint32_t> kept;
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            bool ok = true;
            for (std::size_t i = 0; ok && i < m; ++i) {
                if (!(mask & (1u << i))) continue;
                if (std::popcount(adj_mask[i] & mask) < k) ok = false;
                else if (dis_mask[i] & mask) ok = false;
            }
            if (!ok) continue;
            // connectivity by flooding bitmasks
            std::uint32_t start = mask & (~mask + 1);
            std::uint32_t reach = start, frontier = start;
            while (frontier) {
                std::uint32_t next = 0;
                for (std::size_t i = 0; i < m; ++i)
                    if (frontier & (1u << i)) next |= adj_mask[i] & mask;
                frontier = next & ~reach;
                reach |= next;
            }
            if (reach == mask) kept.push_back(mask);
        }
        for (std::uint32_t mask : kept) {
            bool contained = false;
            for (std::uint32_t other : kept)
                if (other != mask && (mask & other) == mask) { contained = true; break; }
            if (contained) continue;
            std::vector<VertexId> vertices;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (1u << i)) vertices.push_back(static_cast<VertexId>(comp[i]));
            std::sort(vertices.begin(), vertices.end());
            all_cores.push_back(std::move(vertices));
        }
    }
    std::sort(all_cores.begin(), all_cores.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    for (auto& vertices : all_cores) out.cores.push_back(KrCore{std::move(vertices)});
    return out;
}

std::optional<KrCore> brute_force_maximum(const AttributedGraph& g, int k, const Threshold& t,
                                          SimilarityMetric metric, int cap) {
    EnumResult all = brute_force_mkrc(g, k, t, metric, cap);
    if (all.cores.empty()) return std::nullopt;
    return all.cores.front();  // canonical order puts the maximum first
}

}  // namespace krcore
