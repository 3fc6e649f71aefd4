#include "krcore/ordering.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace krcore {

namespace {

// Two-hop structural window around u inside M ∪ C.
VertexSubset two_hop_window(const SearchState& s, VertexId u, const VertexSubset& mc) {
    VertexSubset win(mc.universe());
    win.add(u);
    for (VertexId w : s.inst->graph.neighbors(u)) {
        if (!mc.contains(w)) continue;
        win.add(w);
        for (VertexId x : s.inst->graph.neighbors(w))
            if (mc.contains(x)) win.add(x);
    }
    return win;
}

BranchScore simulate(const SearchState& s, VertexId u, Branch branch,
                     const VertexSubset& mc, const VertexSubset& window,
                     long long edges_mc) {
    const AttributedGraph& g = s.inst->graph;
    const SimilarityIndex& idx = s.inst->index;

    // Vertices that leave C under this branch. Expand also moves u out of C
    // (into M), which removes its dissimilar pairs from C without removing
    // its edges.
    VertexSubset gone(mc.universe());
    std::vector<VertexId> queue;
    std::vector<std::pair<VertexId, std::int32_t>> touched;  // scratch degree deltas

    auto drop_degree = [&](VertexId v) {
        for (auto& [w, d] : touched)
            if (w == v) { ++d; return s.deg_mc[v] - d; }
        touched.emplace_back(v, 1);
        return s.deg_mc[v] - 1;
    };

    if (branch == Branch::Expand) {
        for (VertexId w : idx.dissimilar(u))
            if (s.c.contains(w)) { gone.add(w); queue.push_back(w); }
    } else {
        gone.add(u);
        queue.push_back(u);
    }

    // Structure cascade confined to the window.
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        VertexId v = queue[qi];
        for (VertexId w : g.neighbors(v)) {
            if (!s.c.contains(w) || gone.contains(w) || !window.contains(w)) continue;
            if (drop_degree(w) < s.k) { gone.add(w); queue.push_back(w); }
        }
    }

    // Dissimilar pairs leaving C: any pair with an endpoint that left
    // (including u moving to M on expand), internal pairs counted once.
    long long dp_lost = 0;
    VertexSubset left_c = gone;
    if (branch == Branch::Expand) left_c.add(u);
    for (VertexId v : left_c) {
        for (VertexId w : idx.dissimilar(v))
            if (s.c.contains(w) && (!left_c.contains(w) || w > v)) ++dp_lost;
    }

    // Edges leaving the induced graph on M ∪ C: the removed vertices' edges,
    // internal ones counted once.
    long long edges_lost = 0;
    for (VertexId v : gone) {
        for (VertexId w : g.neighbors(v))
            if (mc.contains(w) && (!gone.contains(w) || w > v)) ++edges_lost;
    }

    BranchScore score;
    score.delta1 = static_cast<double>(dp_lost) / static_cast<double>(s.dp_c_total);
    score.delta2 = edges_mc == 0 ? 0.0 : static_cast<double>(edges_lost) / static_cast<double>(edges_mc);
    return score;
}

long long induced_edges_mc(const SearchState& s) {
    long long twice = 0;
    VertexSubset mc = s.mc();
    for (VertexId v : mc) twice += s.deg_mc[v];
    return twice / 2;
}

}  // namespace

std::pair<BranchScore, BranchScore> branch_scores(const SearchState& s, VertexId u) {
    if (!s.c.contains(u) || s.dp_c[u] == 0)
        throw std::invalid_argument("branch_scores: vertex must be a candidate outside SF(C)");
    if (s.dp_c_total <= 0)
        throw std::logic_error("branch_scores: no dissimilar pairs left in C");
    VertexSubset mc = s.mc();
    VertexSubset window = two_hop_window(s, u, mc);
    long long edges = induced_edges_mc(s);
    return {simulate(s, u, Branch::Expand, mc, window, edges),
            simulate(s, u, Branch::Shrink, mc, window, edges)};
}

double lambda_branch_score(const BranchScore& b, double lambda) {
    return lambda * b.delta1 - b.delta2;
}

VertexId choose_vertex_enum(const SearchState& s) {
    bool found = false;
    VertexId best = 0;
    double best_d1 = 0.0, best_d2 = 0.0;
    for (VertexId u : s.c) {
        if (s.dp_c[u] == 0) continue;
        auto [e, sh] = branch_scores(s, u);
        double d1 = e.delta1 + sh.delta1;
        double d2 = e.delta2 + sh.delta2;
        if (!found || d1 > best_d1 || (d1 == best_d1 && d2 < best_d2)) {
            found = true;
            best = u;
            best_d1 = d1;
            best_d2 = d2;
        }
    }
    if (!found) throw std::logic_error("choose_vertex_enum: no choice point");
    return best;
}

std::pair<VertexId, Branch> choose_vertex_max(const SearchState& s, double lambda) {
    bool found = false;
    VertexId best = 0;
    Branch best_branch = Branch::Expand;
    double best_score = 0.0;
    for (VertexId u : s.c) {
        if (s.dp_c[u] == 0) continue;
        auto [e, sh] = branch_scores(s, u);
        double se = lambda_branch_score(e, lambda);
        double ss = lambda_branch_score(sh, lambda);
        double score = std::max(se, ss);
        if (!found || score > best_score) {
            found = true;
            best = u;
            best_score = score;
            best_branch = se >= ss ? Branch::Expand : Branch::Shrink;
        }
    }
    if (!found) throw std::logic_error("choose_vertex_max: no choice point");
    return {best, best_branch};
}

std::pair<VertexId, Branch> choose_vertex_checkmax(const SearchState& s) {
    bool found = false;
    VertexId best = 0;
    std::int32_t best_deg = -1;
    for (VertexId u : s.c) {
        if (s.deg_mc[u] > best_deg) {
            found = true;
            best = u;
            best_deg = s.deg_mc[u];
        }
    }
    if (!found) throw std::logic_error("choose_vertex_checkmax: empty candidate set");
    return {best, Branch::Expand};
}

std::pair<VertexId, Branch> choose_vertex(const SearchState& s, const OrderStrategy& order,
                                          std::mt19937_64& rng) {
    switch (order.kind) {
        case OrderStrategy::Kind::D1ThenD2:
            return {choose_vertex_enum(s), Branch::Expand};
        case OrderStrategy::Kind::LambdaScore:
            return choose_vertex_max(s, order.lambda);
        case OrderStrategy::Kind::DegreeGreedy: {
            bool found = false;
            VertexId best = 0;
            std::int32_t best_deg = -1;
            for (VertexId u : s.c) {
                if (s.dp_c[u] == 0) continue;
                if (s.deg_mc[u] > best_deg) {
                    found = true;
                    best = u;
                    best_deg = s.deg_mc[u];
                }
            }
            if (!found) throw std::logic_error("choose_vertex: no choice point");
            return {best, Branch::Expand};
        }
        case OrderStrategy::Kind::Random: {
            std::vector<VertexId> pool;
            for (VertexId u : s.c)
                if (s.dp_c[u] != 0) pool.push_back(u);
            if (pool.empty()) throw std::logic_error("choose_vertex: no choice point");
            VertexId u = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            Branch b = std::uniform_int_distribution<int>(0, 1)(rng) ? Branch::Expand : Branch::Shrink;
            return {u, b};
        }
    }
    throw std::logic_error("choose_vertex: unknown strategy");
}

}  // namespace krcore
