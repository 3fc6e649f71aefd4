#include "krcore/enumeration.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "krcore/errors.hpp"

namespace krcore {

void BudgetGuard::tick() {
    if (used_.fetch_add(1, std::memory_order_relaxed) + 1 > limit_)
        throw BudgetExceeded("search node budget of " + std::to_string(limit_) + " exhausted");
}

bool is_valid_core(const ComponentInstance& inst, const VertexSubset& vertices, int k) {
    if (vertices.empty()) return false;
    for (VertexId v : vertices)
        if (degree_in(inst.graph, v, vertices) < static_cast<std::size_t>(k)) return false;
    if (inst.index.dp_total(vertices) != 0) return false;
    return connected_components(inst.graph, vertices).size() == 1;
}

bool early_termination(const SearchState& s) {
    if (s.e.empty()) return false;
    const AttributedGraph& g = s.inst->graph;

    // A retained vertex similar to every candidate and already supported by
    // M extends every core this subtree can produce.
    for (VertexId u : s.e) {
        if (s.dp_c[u] != 0) continue;
        int d = 0;
        for (VertexId w : g.neighbors(u))
            if (s.m.contains(w)) ++d;
        if (d >= s.k) return true;
    }
    if (s.m.empty()) return false;

    // Retained vertices similar to everything in C and E.
    VertexSubset sf(s.e.universe());
    for (VertexId u : s.e) {
        if (s.dp_c[u] != 0) continue;
        bool clean = true;
        for (VertexId w : s.inst->index.dissimilar(u))
            if (s.e.contains(w)) { clean = false; break; }
        if (clean) sf.add(u);
    }
    if (sf.empty()) return false;

    // Peel M ∪ SF anchored at M: only SF-side vertices below degree k leave.
    VertexSubset alive = s.m | sf;
    std::vector<int> deg(g.size(), 0);
    std::vector<VertexId> stack;
    for (VertexId v : alive) {
        int d = 0;
        for (VertexId w : g.neighbors(v))
            if (alive.contains(w)) ++d;
        deg[v] = d;
        if (d < s.k && sf.contains(v)) stack.push_back(v);
    }
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        if (!alive.contains(v)) continue;
        alive.remove(v);
        for (VertexId w : g.neighbors(v))
            if (alive.contains(w) && --deg[w] == s.k - 1 && sf.contains(w)) stack.push_back(w);
    }
    bool any_survivor = false;
    for (VertexId v : sf)
        if (alive.contains(v)) { any_survivor = true; break; }
    if (!any_survivor) return false;

    // Only survivors reachable from M actually attach to the cores below;
    // a surviving blob disconnected from M proves nothing.
    VertexSubset seen(alive.universe());
    std::vector<VertexId> queue;
    for (VertexId v : s.m) { seen.add(v); queue.push_back(v); }
    while (!queue.empty()) {
        VertexId v = queue.back();
        queue.pop_back();
        for (VertexId w : g.neighbors(v)) {
            if (alive.contains(w) && !seen.contains(w)) {
                if (sf.contains(w)) return true;
                seen.add(w);
                queue.push_back(w);
            }
        }
    }
    return false;
}

bool check_maximal(const ComponentInstance& inst, int k, const VertexSubset& core,
                   const VertexSubset& available, SearchStats* stats, BudgetGuard* budget) {
    if (stats) ++stats->maximal_checks;
    if (available.empty()) return true;

    SearchState seed =
        SearchState::make(inst, k, core, available, VertexSubset(inst.graph.size()));
    auto settled = settle(std::move(seed));
    if (!settled) return true;

    const std::size_t core_size = core.size();
    std::vector<SearchState> stack;
    stack.push_back(std::move(*settled));
    while (!stack.empty()) {
        SearchState s = std::move(stack.back());
        stack.pop_back();
        if (budget) budget->tick();
        if (stats) ++stats->maximal_check_nodes;
        s = promote_validated(std::move(s));

        if (s.m.size() > core_size) {
            // M itself already a strictly larger core?
            bool deg_ok = true;
            for (VertexId v : s.m) {
                int d = 0;
                for (VertexId w : inst.graph.neighbors(v))
                    if (s.m.contains(w)) ++d;
                if (d < k) { deg_ok = false; break; }
            }
            if (deg_ok && connected_components(inst.graph, s.m).size() == 1) return false;
        }
        if (s.c.empty()) continue;
        if (s.dp_c_total == 0) {
            // Everything left is mutually similar: M ∪ C is a core, and the
            // component holding the original core decides maximality.
            VertexSubset t = s.mc();
            for (const VertexSubset& comp : connected_components(inst.graph, t)) {
                if (core.is_subset_of(comp) && comp.size() > core_size) return false;
            }
            continue;
        }
        auto [u, br] = choose_vertex_checkmax(s);
        if (auto child = refine(s, u, Branch::Shrink)) stack.push_back(std::move(*child));
        if (auto child = refine(s, u, Branch::Expand)) stack.push_back(std::move(*child));
    }
    return true;
}

namespace {

std::vector<VertexId> to_global_sorted(const ComponentInstance& inst, const VertexSubset& s) {
    std::vector<VertexId> out;
    out.reserve(s.size());
    for (VertexId v : s) out.push_back(inst.to_global[v]);
    std::sort(out.begin(), out.end());
    return out;
}

std::mt19937_64 component_rng(std::uint64_t seed, std::size_t component) {
    return std::mt19937_64(seed * 0x9E3779B97F4A7C15ull + component + 1);
}

using LocalCores = std::set<std::vector<VertexId>>;  // sorted local id lists

void advanced_component(const ComponentInstance& inst, int k, const SearchOptions& opts,
                        std::size_t comp_idx, BudgetGuard& budget, SearchStats& stats,
                        LocalCores& sink) {
    std::mt19937_64 rng = component_rng(opts.order.seed, comp_idx);
    std::vector<SearchState> stack;
    stack.push_back(SearchState::initial(inst, k));
    while (!stack.empty()) {
        SearchState s = std::move(stack.back());
        stack.pop_back();
        budget.tick();
        ++stats.nodes_visited;
        if (opts.verify_invariants) verify_state(s);
        if (opts.observer) opts.observer(s);

        std::size_t m_before = s.m.size();
        s = promote_validated(std::move(s));
        stats.promotions += static_cast<long long>(s.m.size() - m_before);

        if (early_termination(s)) {
            ++stats.early_terminations;
            continue;
        }
        if (s.dp_c_total == 0) {
            // C = SF(C): all of M ∪ C joins the solution.
            VertexSubset t = s.mc();
            if (t.empty()) continue;
            for (const VertexSubset& comp : connected_components(inst.graph, t)) {
                VertexSubset avail = s.e;
                for (VertexId v : t)
                    if (!comp.contains(v)) avail.add(v);
                if (check_maximal(inst, k, comp, avail, &stats, &budget)) {
                    if (!is_valid_core(inst, comp, k))
                        throw std::logic_error("enumeration produced an invalid core");
                    std::vector<VertexId> key = comp.to_vector();
                    sink.insert(std::move(key));
                }
            }
            continue;
        }
        auto [u, br] = choose_vertex(s, opts.order, rng);
        if (auto child = refine(s, u, Branch::Shrink, &stats)) stack.push_back(std::move(*child));
        if (auto child = refine(s, u, Branch::Expand, &stats)) stack.push_back(std::move(*child));
    }
}

// Full binary tree, validation only at the leaves.
void exhaustive_component(const ComponentInstance& inst, int k, BudgetGuard& budget,
                          SearchStats& stats, long long& leaves, LocalCores& sink) {
    struct Node {
        VertexSubset m, c;
    };
    const AttributedGraph& g = inst.graph;
    std::vector<Node> stack;
    stack.push_back({VertexSubset(g.size()), g.full_set()});
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        budget.tick();
        ++stats.nodes_visited;
        if (node.c.empty()) {
            ++stats.leaves_visited;
            ++leaves;
            if (node.m.empty()) continue;
            bool ok = true;
            for (VertexId v : node.m)
                if (degree_in(g, v, node.m) < static_cast<std::size_t>(k)) { ok = false; break; }
            if (ok && inst.index.dp_total(node.m) == 0) {
                for (const VertexSubset& comp : connected_components(g, node.m))
                    sink.insert(comp.to_vector());
            }
            continue;
        }
        VertexId u = *node.c.begin();
        Node expand{node.m, node.c};
        expand.m.add(u);
        expand.c.remove(u);
        Node shrink{std::move(node.m), std::move(node.c)};
        shrink.c.remove(u);
        stack.push_back(std::move(shrink));
        stack.push_back(std::move(expand));
    }
}

// Structure/similarity pruning only; branches over the full candidate set
// and validates when C runs out.
void basic_component(const ComponentInstance& inst, int k, const SearchOptions& opts,
                     std::size_t comp_idx, BudgetGuard& budget, SearchStats& stats,
                     long long& leaves, LocalCores& sink) {
    std::mt19937_64 rng = component_rng(opts.order.seed, comp_idx);
    std::vector<SearchState> stack;
    stack.push_back(SearchState::initial(inst, k));
    while (!stack.empty()) {
        SearchState s = std::move(stack.back());
        stack.pop_back();
        budget.tick();
        ++stats.nodes_visited;
        if (opts.verify_invariants) verify_state(s);
        if (s.c.empty()) {
            ++stats.leaves_visited;
            ++leaves;
            if (s.m.empty()) continue;
            for (const VertexSubset& comp : connected_components(inst.graph, s.m)) {
                if (!is_valid_core(inst, comp, k))
                    throw std::logic_error("basic enumeration produced an invalid core");
                sink.insert(comp.to_vector());
            }
            continue;
        }
        VertexId u = s.dp_c_total > 0 ? choose_vertex(s, opts.order, rng).first : *s.c.begin();
        RefinePolicy basic = RefinePolicy::basic();
        if (auto child = refine(s, u, Branch::Shrink, &stats, basic))
            stack.push_back(std::move(*child));
        if (auto child = refine(s, u, Branch::Expand, &stats, basic))
            stack.push_back(std::move(*child));
    }
}

void drop_contained(LocalCores& cores) {
    std::vector<std::vector<VertexId>> kept;
    for (const auto& c : cores) {
        bool contained = false;
        for (const auto& other : cores) {
            if (other.size() > c.size() &&
                std::includes(other.begin(), other.end(), c.begin(), c.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) kept.push_back(c);
    }
    cores.clear();
    cores.insert(kept.begin(), kept.end());
}

EnumResult assemble(const Preprocessed& pre, std::vector<LocalCores>& per_component,
                    SearchStats stats) {
    EnumResult out;
    out.stats = stats;
    for (std::size_t i = 0; i < per_component.size(); ++i) {
        const ComponentInstance& inst = pre.components[i];
        for (const auto& local : per_component[i]) {
            KrCore core;
            core.vertices.reserve(local.size());
            for (VertexId v : local) core.vertices.push_back(inst.to_global[v]);
            std::sort(core.vertices.begin(), core.vertices.end());
            out.cores.push_back(std::move(core));
        }
    }
    std::sort(out.cores.begin(), out.cores.end(), [](const KrCore& a, const KrCore& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.vertices < b.vertices;
    });
    return out;
}

unsigned effective_threads(const SearchOptions& opts, std::size_t components) {
    unsigned t = opts.threads == 0 ? 1 : opts.threads;
    if (opts.observer) t = 1;  // observers see states from one thread only
    return static_cast<unsigned>(std::min<std::size_t>(t, components == 0 ? 1 : components));
}

}  // namespace

EnumResult naive_enum(const AttributedGraph& g, int k, const Threshold& t,
                      SimilarityMetric metric, bool pruning_enabled, const SearchOptions& opts) {
    if (k < 1) throw std::invalid_argument("naive_enum: k must be positive");
    Preprocessed pre = preprocess(g, k, t, metric);
    for (const auto& inst : pre.components) {
        if (inst.graph.size() > static_cast<std::size_t>(opts.naive_cap))
            throw CapExceeded("component of size " + std::to_string(inst.graph.size()) +
                              " exceeds the exhaustive enumeration cap of " +
                              std::to_string(opts.naive_cap));
    }
    BudgetGuard budget(opts.node_budget);
    SearchStats stats;
    EnumResult out;
    std::vector<LocalCores> per_component(pre.components.size());
    std::vector<std::pair<std::size_t, long long>> leaves;
    for (std::size_t i = 0; i < pre.components.size(); ++i) {
        long long comp_leaves = 0;
        if (pruning_enabled)
            basic_component(pre.components[i], k, opts, i, budget, stats, comp_leaves,
                            per_component[i]);
        else
            exhaustive_component(pre.components[i], k, budget, stats, comp_leaves,
                                 per_component[i]);
        drop_contained(per_component[i]);
        leaves.emplace_back(pre.components[i].graph.size(), comp_leaves);
    }
    out = assemble(pre, per_component, stats);
    out.component_leaves = std::move(leaves);
    return out;
}

EnumResult advanced_enum(const AttributedGraph& g, int k, const Threshold& t,
                         SimilarityMetric metric, const SearchOptions& opts) {
    if (k < 1) throw std::invalid_argument("advanced_enum: k must be positive");
    Preprocessed pre = preprocess(g, k, t, metric);
    BudgetGuard budget(opts.node_budget);
    std::size_t n_comp = pre.components.size();
    std::vector<LocalCores> per_component(n_comp);
    std::vector<SearchStats> comp_stats(n_comp);

    unsigned threads = effective_threads(opts, n_comp);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n_comp; ++i)
            advanced_component(pre.components[i], k, opts, i, budget, comp_stats[i],
                               per_component[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(n_comp);
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n_comp) return;
                try {
                    advanced_component(pre.components[i], k, opts, i, budget, comp_stats[i],
                                       per_component[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    SearchStats stats;
    for (const auto& cs : comp_stats) stats += cs;
    return assemble(pre, per_component, stats);
}

}  // namespace krcore
