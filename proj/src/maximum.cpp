#include "krcore/maximum.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "krcore/errors.hpp"

namespace krcore {

namespace {

// Similarity-graph adjacency over T as per-vertex bitsets.
std::vector<VertexSubset> sim_adjacency(const SearchState& s, const VertexSubset& t) {
    std::vector<VertexSubset> sim(t.universe(), VertexSubset(t.universe()));
    for (VertexId u : t) {
        VertexSubset row = t;
        row.remove(u);
        for (VertexId w : s.inst->index.dissimilar(u)) row.remove(w);
        sim[u] = std::move(row);
    }
    return sim;
}

// Bucket structure for peeling by current degree, as in linear core
// decomposition: vert sorted ascending by degree, pos/bin give positions and
// block starts. Arbitrary deaths are tolerated by skipping dead slots.
struct BucketPeel {
    std::vector<VertexId> vert;
    std::vector<std::size_t> pos;
    std::vector<std::size_t> bin;
    std::vector<int> deg;

    BucketPeel(const VertexSubset& t, const std::vector<int>& degrees, std::size_t universe) {
        deg = degrees;
        std::size_t n = t.size();
        std::size_t max_deg = 0;
        for (VertexId v : t) max_deg = std::max(max_deg, static_cast<std::size_t>(deg[v]));
        bin.assign(max_deg + 2, 0);
        for (VertexId v : t) ++bin[deg[v]];
        std::size_t start = 0;
        for (std::size_t d = 0; d < bin.size(); ++d) {
            std::size_t width = bin[d];
            bin[d] = start;
            start += width;
        }
        vert.resize(n);
        pos.assign(universe, 0);
        std::vector<std::size_t> cursor(bin.begin(), bin.end() - 1);
        for (VertexId v : t) {
            pos[v] = cursor[deg[v]];
            vert[pos[v]] = v;
            ++cursor[deg[v]];
        }
    }

    // Degree decrement keeping vert sorted; only valid while deg[v] exceeds
    // the degree currently being processed.
    void decrement(VertexId v) {
        std::size_t d = deg[v];
        std::size_t pv = pos[v];
        std::size_t pw = bin[d];
        VertexId w = vert[pw];
        if (v != w) {
            std::swap(vert[pv], vert[pw]);
            pos[v] = pw;
            pos[w] = pv;
        }
        ++bin[d];
        --deg[v];
    }
};

}  // namespace

int ub_naive(const SearchState& s) {
    return static_cast<int>(s.m.size() + s.c.size());
}

int ub_color(const SearchState& s) {
    VertexSubset t = s.mc();
    if (t.empty()) return 0;
    std::vector<VertexSubset> sim = sim_adjacency(s, t);

    std::vector<VertexId> order = t.to_vector();
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        if (sim[a].size() != sim[b].size()) return sim[a].size() > sim[b].size();
        return a < b;
    });
    std::vector<int> color(t.universe(), -1);
    int colors_used = 0;
    std::vector<char> taken;
    for (VertexId v : order) {
        taken.assign(colors_used + 1, 0);
        for (VertexId w : sim[v])
            if (color[w] >= 0) taken[color[w]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        color[v] = c;
        colors_used = std::max(colors_used, c + 1);
    }
    return colors_used;
}

int ub_kcore(const SearchState& s) {
    VertexSubset t = s.mc();
    if (t.empty()) return 0;
    std::vector<VertexSubset> sim = sim_adjacency(s, t);
    std::vector<int> sdeg(t.universe(), 0);
    for (VertexId v : t) sdeg[v] = static_cast<int>(sim[v].size());

    BucketPeel peel(t, sdeg, t.universe());
    VertexSubset alive = t;
    int k_max = 0;
    for (std::size_t i = 0; i < peel.vert.size(); ++i) {
        VertexId v = peel.vert[i];
        k_max = std::max(k_max, peel.deg[v]);
        alive.remove(v);
        for (VertexId w : sim[v])
            if (alive.contains(w) && peel.deg[w] > peel.deg[v]) peel.decrement(w);
    }
    return k_max + 1;
}

int ub_kkcore(const SearchState& s) {
    VertexSubset t = s.mc();
    if (t.empty()) return 0;
    const AttributedGraph& g = s.inst->graph;
    std::vector<VertexSubset> sim = sim_adjacency(s, t);
    std::vector<int> sdeg(t.universe(), 0);
    for (VertexId v : t) sdeg[v] = static_cast<int>(sim[v].size());

    BucketPeel peel(t, sdeg, t.universe());
    std::vector<int> deg(t.universe(), 0);
    for (VertexId v : t) deg[v] = s.deg_mc[v];

    VertexSubset alive = t;
    int k_prime = 0;
    std::vector<VertexId> cascade;
    for (std::size_t i = 0; i < peel.vert.size(); ++i) {
        VertexId u = peel.vert[i];
        if (!alive.contains(u)) continue;  // removed by an earlier cascade
        k_prime = peel.deg[u];
        // Remove u; any vertex whose structural degree drops below k follows
        // it out at the same k' level.
        cascade.assign(1, u);
        while (!cascade.empty()) {
            VertexId v = cascade.back();
            cascade.pop_back();
            if (!alive.contains(v)) continue;
            alive.remove(v);
            for (VertexId w : sim[v])
                if (alive.contains(w) && peel.deg[w] > k_prime) peel.decrement(w);
            for (VertexId w : g.neighbors(v))
                if (alive.contains(w) && --deg[w] < s.k) cascade.push_back(w);
        }
    }
    return k_prime + 1;
}

int upper_bound(const SearchState& s, BoundKind kind) {
    switch (kind) {
        case BoundKind::Naive: return ub_naive(s);
        case BoundKind::Color: return ub_color(s);
        case BoundKind::KCore: return ub_kcore(s);
        case BoundKind::KKCore: return ub_kkcore(s);
    }
    throw std::logic_error("upper_bound: unknown bound kind");
}

namespace {

struct BestCore {
    std::vector<VertexId> global;  // sorted; empty = none yet
    bool improves(std::size_t size, const std::vector<VertexId>& candidate) const {
        if (size > global.size()) return true;
        return size == global.size() && !global.empty() && candidate < global;
    }
};

void maximum_component(const ComponentInstance& inst, int k, const SearchOptions& opts,
                       BoundKind bound, std::size_t comp_idx, BudgetGuard& budget,
                       SearchStats& stats, BestCore& best) {
    std::mt19937_64 rng(opts.order.seed * 0x9E3779B97F4A7C15ull + comp_idx + 1);
    std::vector<SearchState> frames;
    frames.push_back(SearchState::initial(inst, k));
    while (!frames.empty()) {
        SearchState s = std::move(frames.back());
        frames.pop_back();
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
        if (upper_bound(s, bound) <= static_cast<int>(best.global.size())) {
            ++stats.bound_cutoffs;
            continue;
        }
        if (s.dp_c_total == 0) {
            VertexSubset t = s.mc();
            if (t.empty()) continue;
            for (const VertexSubset& comp : connected_components(inst.graph, t)) {
                if (!is_valid_core(inst, comp, k))
                    throw std::logic_error("maximum search produced an invalid core");
                std::vector<VertexId> global;
                global.reserve(comp.size());
                for (VertexId v : comp) global.push_back(inst.to_global[v]);
                std::sort(global.begin(), global.end());
                if (best.improves(comp.size(), global)) best.global = std::move(global);
            }
            continue;
        }
        auto [u, preferred] = choose_vertex(s, opts.order, rng);
        Branch second = preferred == Branch::Expand ? Branch::Shrink : Branch::Expand;
        if (auto child = refine(s, u, second, &stats)) frames.push_back(std::move(*child));
        if (auto child = refine(s, u, preferred, &stats)) frames.push_back(std::move(*child));
    }
}

}  // namespace

MaxResult find_maximum(const AttributedGraph& g, int k, const Threshold& t,
                       SimilarityMetric metric, BoundKind bound, double lambda,
                       SearchOptions opts) {
    if (k < 1) throw std::invalid_argument("find_maximum: k must be positive");
    if (lambda < 0) throw std::invalid_argument("find_maximum: lambda must be non-negative");
    if (opts.order.kind == OrderStrategy::Kind::LambdaScore) opts.order.lambda = lambda;

    Preprocessed pre = preprocess(g, k, t, metric);

    // Work on the component with the highest-degree vertex first so an early
    // large core tightens the bound for everything after it.
    std::vector<std::size_t> order(pre.components.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto max_degree = [&](std::size_t i) {
        const AttributedGraph& cg = pre.components[i].graph;
        std::size_t d = 0;
        for (VertexId v = 0; v < cg.size(); ++v) d = std::max(d, cg.degree(v));
        return d;
    };
    std::vector<std::size_t> comp_deg(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) comp_deg[i] = max_degree(i);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (comp_deg[a] != comp_deg[b]) return comp_deg[a] > comp_deg[b];
        return pre.components[a].to_global[0] < pre.components[b].to_global[0];
    });

    BudgetGuard budget(opts.node_budget);
    SearchStats stats;
    BestCore best;
    for (std::size_t i : order)
        maximum_component(pre.components[i], k, opts, bound, i, budget, stats, best);

    MaxResult out;
    out.stats = stats;
    if (!best.global.empty()) out.best = KrCore{std::move(best.global)};
    return out;
}

}  // namespace krcore
