#include "krcore/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace krcore {

SearchStats& SearchStats::operator+=(const SearchStats& o) {
    nodes_visited += o.nodes_visited;
    leaves_visited += o.leaves_visited;
    refine_failures += o.refine_failures;
    structure_prunes += o.structure_prunes;
    similarity_prunes += o.similarity_prunes;
    early_terminations += o.early_terminations;
    maximal_checks += o.maximal_checks;
    maximal_check_nodes += o.maximal_check_nodes;
    bound_cutoffs += o.bound_cutoffs;
    promotions += o.promotions;
    return *this;
}

Preprocessed preprocess(const AttributedGraph& g, int k, const Threshold& t, SimilarityMetric m) {
    if (k < 1) throw std::invalid_argument("preprocess: k must be positive");
    Preprocessed out;

    // Drop edges between dissimilar endpoints; they can never sit inside a core.
    std::vector<std::pair<VertexId, VertexId>> kept;
    for (VertexId u = 0; u < g.size(); ++u) {
        for (VertexId v : g.neighbors(u)) {
            if (u >= v) continue;
            if (is_similar(g, u, v, t, m))
                kept.emplace_back(u, v);
            else
                ++out.report.dissimilar_edges_deleted;
        }
    }

    std::vector<VertexAttribute> attrs;
    std::vector<std::string> externals;
    attrs.reserve(g.size());
    externals.reserve(g.size());
    for (VertexId u = 0; u < g.size(); ++u) {
        attrs.push_back(g.attribute(u));
        externals.push_back(g.external_id(u));
    }
    AttributedGraph filtered(g.size(), kept, std::move(attrs), std::move(externals));

    VertexSubset core = k_core(filtered, filtered.full_set(), k);
    out.report.vertices_peeled = g.size() - core.size();

    for (const VertexSubset& comp : connected_components(filtered, core)) {
        std::vector<VertexId> members = comp.to_vector();
        std::vector<VertexId> local(filtered.size(), 0);
        for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<VertexId>(i);

        std::vector<std::pair<VertexId, VertexId>> edges;
        std::vector<VertexAttribute> cattrs;
        std::vector<std::string> cext;
        cattrs.reserve(members.size());
        cext.reserve(members.size());
        for (VertexId u : members) {
            cattrs.push_back(filtered.attribute(u));
            cext.push_back(filtered.external_id(u));
            for (VertexId v : filtered.neighbors(u))
                if (u < v && comp.contains(v)) edges.emplace_back(local[u], local[v]);
        }
        ComponentInstance inst;
        inst.graph = AttributedGraph(members.size(), edges, std::move(cattrs), std::move(cext));
        inst.index = SimilarityIndex::build(inst.graph, inst.graph.full_set(), t, m);
        inst.to_global = std::move(members);
        out.components.push_back(std::move(inst));
    }
    return out;
}

SearchState SearchState::initial(const ComponentInstance& inst, int k) {
    SearchState s;
    s.inst = &inst;
    s.k = k;
    std::size_t n = inst.graph.size();
    s.m = VertexSubset(n);
    s.c = inst.graph.full_set();
    s.e = VertexSubset(n);
    s.deg_mc.assign(n, 0);
    s.dp_c.assign(n, 0);
    s.dp_m.assign(n, 0);
    for (VertexId u = 0; u < n; ++u) {
        s.deg_mc[u] = static_cast<std::int32_t>(inst.graph.degree(u));
        s.dp_c[u] = static_cast<std::int32_t>(inst.index.dissimilar(u).size());
        s.dp_c_total += s.dp_c[u];
    }
    s.dp_c_total /= 2;
    return s;
}

SearchState SearchState::make(const ComponentInstance& inst, int k,
                              const VertexSubset& m, const VertexSubset& c, const VertexSubset& e) {
    SearchState s;
    s.inst = &inst;
    s.k = k;
    s.m = m;
    s.c = c;
    s.e = e;
    std::size_t n = inst.graph.size();
    s.deg_mc.assign(n, 0);
    s.dp_c.assign(n, 0);
    s.dp_m.assign(n, 0);
    VertexSubset mc = m | c;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId w : inst.graph.neighbors(u))
            if (mc.contains(w)) ++s.deg_mc[u];
        for (VertexId w : inst.index.dissimilar(u)) {
            if (c.contains(w)) ++s.dp_c[u];
            if (m.contains(w)) ++s.dp_m[u];
        }
        if (c.contains(u)) s.dp_c_total += s.dp_c[u];
    }
    s.dp_c_total /= 2;
    return s;
}

namespace {

// Detach v from C and keep the dissimilarity counters in step.
void leave_c(SearchState& s, VertexId v) {
    s.c.remove(v);
    s.dp_c_total -= s.dp_c[v];
    for (VertexId w : s.inst->index.dissimilar(v)) --s.dp_c[w];
}

// The pruning cascade shared by refine and settle. queue holds candidate
// removals already decided (the first sim_marked of them similarity-driven);
// the rest of the peeling follows from degrees.
std::optional<SearchState> cascade(SearchState s, std::vector<VertexId> queue,
                                   std::size_t sim_marked, bool first_is_shrink,
                                   SearchStats* stats, RefinePolicy policy) {
    const AttributedGraph& g = s.inst->graph;

    std::vector<VertexId> removed;  // everything that left C this round
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        VertexId v = queue[qi];
        if (!s.c.contains(v)) continue;
        leave_c(s, v);
        removed.push_back(v);
        if (stats && qi >= sim_marked && !(first_is_shrink && qi == 0))
            ++stats->structure_prunes;
        for (VertexId w : g.neighbors(v)) {
            if (s.m.contains(w)) {
                // A vertex of M falling below k kills the whole branch.
                if (--s.deg_mc[w] < s.k) {
                    if (stats) ++stats->refine_failures;
                    return std::nullopt;
                }
            } else if (s.c.contains(w)) {
                if (--s.deg_mc[w] == s.k - 1) queue.push_back(w);
            }
        }
    }

    if (policy.track_excluded) {
        for (VertexId v : removed)
            if (s.dp_m[v] == 0) s.e.add(v);
    }

    if (policy.connectivity && !s.m.empty()) {
        // Flood the component of M inside M ∪ C. M split across components
        // can never form a connected core again; candidates out of reach are
        // retired into E (they are all similar to M by the invariant).
        VertexSubset mc = s.mc();
        VertexSubset seen(mc.universe());
        std::vector<VertexId> stack;
        VertexId start = *s.m.begin();
        stack.push_back(start);
        seen.add(start);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(v)) {
                if (mc.contains(w) && !seen.contains(w)) {
                    seen.add(w);
                    stack.push_back(w);
                }
            }
        }
        if (!s.m.is_subset_of(seen)) {
            if (stats) ++stats->refine_failures;
            return std::nullopt;
        }
        if (!s.c.is_subset_of(seen)) {
            std::vector<VertexId> out;
            for (VertexId v : s.c)
                if (!seen.contains(v)) out.push_back(v);
            for (VertexId v : out) {
                leave_c(s, v);
                if (policy.track_excluded) s.e.add(v);
            }
        }
    }
    return s;
}

}  // namespace

std::optional<SearchState> refine(const SearchState& parent, VertexId moved, Branch branch,
                                  SearchStats* stats, RefinePolicy policy) {
    if (!parent.c.contains(moved))
        throw std::invalid_argument("refine: vertex " + std::to_string(moved) +
                                    " is not a candidate");
    SearchState s = parent;
    const SimilarityIndex& idx = s.inst->index;

    std::vector<VertexId> queue;
    std::size_t sim_marked = 0;

    if (branch == Branch::Expand) {
        leave_c(s, moved);
        s.m.add(moved);
        for (VertexId w : idx.dissimilar(moved)) {
            ++s.dp_m[w];
            if (s.e.contains(w)) s.e.remove(w);  // no longer similar to M
            if (s.c.contains(w)) queue.push_back(w);
        }
        sim_marked = queue.size();
        if (stats) stats->similarity_prunes += static_cast<long long>(sim_marked);
    } else {
        queue.push_back(moved);
    }
    return cascade(std::move(s), std::move(queue), sim_marked, branch == Branch::Shrink, stats,
                   policy);
}

std::optional<SearchState> settle(SearchState s, SearchStats* stats, RefinePolicy policy) {
    std::vector<VertexId> queue;
    for (VertexId v : s.c)
        if (s.dp_m[v] > 0) queue.push_back(v);
    std::size_t sim_marked = queue.size();
    if (stats) stats->similarity_prunes += static_cast<long long>(sim_marked);
    for (VertexId v : s.m)
        if (s.deg_mc[v] < s.k) {
            if (stats) ++stats->refine_failures;
            return std::nullopt;
        }
    for (VertexId v : s.c)
        if (s.deg_mc[v] < s.k) queue.push_back(v);
    return cascade(std::move(s), std::move(queue), sim_marked, false, stats, policy);
}

VertexSubset sf_set(const SearchState& s) {
    VertexSubset sf(s.c.universe());
    for (VertexId u : s.c)
        if (s.dp_c[u] == 0) sf.add(u);
    return sf;
}

SearchState promote_validated(SearchState s) {
    const AttributedGraph& g = s.inst->graph;
    const SimilarityIndex& idx = s.inst->index;
    bool moved_any = true;
    while (moved_any) {
        moved_any = false;
        for (VertexId u : s.c) {
            if (s.dp_c[u] != 0) continue;
            int deg_m = 0;
            for (VertexId w : g.neighbors(u))
                if (s.m.contains(w)) ++deg_m;
            if (deg_m < s.k) continue;
            leave_c(s, u);
            s.m.add(u);
            for (VertexId w : idx.dissimilar(u)) {
                ++s.dp_m[w];
                if (s.e.contains(w)) s.e.remove(w);
            }
            moved_any = true;
            break;  // subset iteration invalidated by the removal
        }
    }
    return s;
}

void verify_state(const SearchState& s) {
    const ComponentInstance& inst = *s.inst;
    std::size_t n = inst.graph.size();
    auto fail = [](const std::string& msg) { throw std::logic_error("state invariant: " + msg); };

    for (VertexId v = 0; v < n; ++v) {
        int members = (s.m.contains(v) ? 1 : 0) + (s.c.contains(v) ? 1 : 0) + (s.e.contains(v) ? 1 : 0);
        if (members > 1) fail("M, C, E overlap at vertex " + std::to_string(v));
    }

    SearchState fresh = SearchState::make(inst, s.k, s.m, s.c, s.e);
    VertexSubset mc = s.mc();
    for (VertexId v : mc) {
        if (s.deg_mc[v] != fresh.deg_mc[v]) fail("deg_mc drift at vertex " + std::to_string(v));
        if (fresh.deg_mc[v] < s.k) fail("degree invariant broken at vertex " + std::to_string(v));
    }
    for (VertexId v = 0; v < n; ++v) {
        if (mc.contains(v) || s.e.contains(v)) {
            if (s.dp_c[v] != fresh.dp_c[v]) fail("dp_c drift at vertex " + std::to_string(v));
            if (s.dp_m[v] != fresh.dp_m[v]) fail("dp_m drift at vertex " + std::to_string(v));
        }
    }
    if (s.dp_c_total != fresh.dp_c_total) fail("dissimilar pair count drift");
    for (VertexId v : s.m)
        if (fresh.dp_c[v] != 0 || fresh.dp_m[v] != 0)
            fail("similarity invariant broken at vertex " + std::to_string(v));
    for (VertexId v : s.e)
        if (fresh.dp_m[v] != 0) fail("excluded vertex dissimilar to M: " + std::to_string(v));
}

}  // namespace krcore
