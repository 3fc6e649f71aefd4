#include "krcore/baseline_clique.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "krcore/errors.hpp"

namespace krcore {

namespace {

struct CliqueSearch {
    const std::vector<std::vector<VertexId>>& adj;
    std::vector<std::vector<VertexId>>& out;
    long long budget;
    long long steps = 0;

    bool adjacent(VertexId u, VertexId v) const {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }

    // R grows along the recursion; P candidates, X already covered.
    void expand(std::vector<VertexId>& r, std::vector<VertexId> p, std::vector<VertexId> x) {
        if (++steps > budget)
            throw BudgetExceeded("clique enumeration budget of " + std::to_string(budget) +
                                 " exhausted");
        if (p.empty() && x.empty()) {
            out.push_back(r);
            return;
        }
        // Pivot with the most candidates among its neighbors.
        VertexId pivot = 0;
        std::size_t best = 0;
        bool have_pivot = false;
        for (const auto& pool : {p, x}) {
            for (VertexId u : pool) {
                std::size_t cnt = 0;
                for (VertexId v : p)
                    if (adjacent(u, v)) ++cnt;
                if (!have_pivot || cnt > best) {
                    have_pivot = true;
                    pivot = u;
                    best = cnt;
                }
            }
        }
        std::vector<VertexId> branch;
        for (VertexId v : p)
            if (!adjacent(pivot, v)) branch.push_back(v);
        for (VertexId v : branch) {
            std::vector<VertexId> np, nx;
            for (VertexId w : p)
                if (adjacent(v, w)) np.push_back(w);
            for (VertexId w : x)
                if (adjacent(v, w)) nx.push_back(w);
            r.push_back(v);
            expand(r, std::move(np), std::move(nx));
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
    }
};

}  // namespace

std::vector<std::vector<VertexId>> maximal_cliques(
    const std::vector<std::vector<VertexId>>& adjacency, long long budget) {
    std::vector<std::vector<VertexId>> out;
    CliqueSearch search{adjacency, out, budget};
    std::vector<VertexId> r, p, x;
    for (VertexId v = 0; v < adjacency.size(); ++v)
        if (!adjacency[v].empty()) p.push_back(v);
    // Isolated vertices are their own maximal cliques.
    for (VertexId v = 0; v < adjacency.size(); ++v)
        if (adjacency[v].empty()) out.push_back({v});
    if (!p.empty()) search.expand(r, std::move(p), std::move(x));
    for (auto& clique : out) std::sort(clique.begin(), clique.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

EnumResult clique_based_enum(const AttributedGraph& g, int k, const Threshold& t,
                             SimilarityMetric metric, const SearchOptions& opts) {
    if (k < 1) throw std::invalid_argument("clique_based_enum: k must be positive");
    Preprocessed pre = preprocess(g, k, t, metric);

    EnumResult out;
    std::set<std::vector<VertexId>> collected;  // global sorted vertex lists
    for (const ComponentInstance& inst : pre.components) {
        VertexSubset all = inst.graph.full_set();
        std::vector<std::vector<VertexId>> sim_adj;
        {
            auto full = inst.index.similarity_graph(all);
            sim_adj.assign(full.begin(), full.end());
        }
        std::set<std::vector<VertexId>> local;
        for (const auto& clique : maximal_cliques(sim_adj, opts.node_budget)) {
            VertexSubset members(inst.graph.size());
            for (VertexId v : clique) members.add(v);
            VertexSubset core = k_core(inst.graph, members, k);
            for (const VertexSubset& comp : connected_components(inst.graph, core)) {
                if (!is_valid_core(inst, comp, k)) continue;
                local.insert(comp.to_vector());
            }
        }
        // A clique's k-core can be contained in another clique's; keep the
        // containment-maximal ones only.
        for (const auto& core : local) {
            bool contained = false;
            for (const auto& other : local) {
                if (other.size() > core.size() &&
                    std::includes(other.begin(), other.end(), core.begin(), core.end())) {
                    contained = true;
                    break;
                }
            }
            if (contained) continue;
            std::vector<VertexId> global;
            global.reserve(core.size());
            for (VertexId v : core) global.push_back(inst.to_global[v]);
            std::sort(global.begin(), global.end());
            collected.insert(std::move(global));
        }
    }
    for (const auto& vertices : collected) out.cores.push_back(KrCore{vertices});
    std::sort(out.cores.begin(), out.cores.end(), [](const KrCore& a, const KrCore& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.vertices < b.vertices;
    });
    return out;
}

}  // namespace krcore
