#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "krcore/graph.hpp"
#include "krcore/search.hpp"
#include "krcore/similarity.hpp"

namespace krcore::testing {

// All fixtures use planar points so the similarity pattern is realized by an
// actual metric; r = 1.0 throughout.
inline Threshold fixture_threshold() { return threshold_for(SimilarityMetric::Euclidean, 1.0); }
constexpr SimilarityMetric kFixtureMetric = SimilarityMetric::Euclidean;

inline std::vector<std::pair<VertexId, VertexId>> complete_edges(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return edges;
}

inline std::vector<VertexAttribute> clustered_points(std::size_t n) {
    std::vector<VertexAttribute> attrs;
    for (std::size_t i = 0; i < n; ++i)
        attrs.push_back(Point2D{0.01 * static_cast<double>(i), 0.0});
    return attrs;
}

// Complete graph on {0..4}, all pairs similar.
inline AttributedGraph fix_k5() {
    return AttributedGraph(5, complete_edges(5), clustered_points(5));
}

// Path 0-1-2, all pairs similar.
inline AttributedGraph fix_path3() {
    return AttributedGraph(3, {{0, 1}, {1, 2}}, clustered_points(3));
}

// Complete graph on {0..5}; the single dissimilar pair is (0,5).
inline AttributedGraph fix_k6d() {
    std::vector<VertexAttribute> attrs{Point2D{0.0, 0.0},  Point2D{0.5, 0.0}, Point2D{0.55, 0.0},
                                       Point2D{0.6, 0.0},  Point2D{0.65, 0.0},
                                       Point2D{1.2, 0.0}};
    return AttributedGraph(6, complete_edges(6), std::move(attrs));
}

// 6-cycle, all pairs similar.
inline AttributedGraph fix_c6() {
    return AttributedGraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}},
                           clustered_points(6));
}

// A single-component instance straight from a graph, bypassing preprocess;
// lets tests assemble states the pipeline would not normally reach.
inline ComponentInstance make_instance(AttributedGraph g, const Threshold& t,
                                       SimilarityMetric m) {
    ComponentInstance inst;
    inst.index = SimilarityIndex::build(g, g.full_set(), t, m);
    inst.to_global.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) inst.to_global[i] = static_cast<VertexId>(i);
    inst.graph = std::move(g);
    return inst;
}

// Seeded random instance: G(n, edge_prob) with uniform points in the unit
// square; r set to the (1 - dissim_density) quantile of the pairwise
// distances so roughly that share of pairs is dissimilar.
struct RandomInstance {
    AttributedGraph graph;
    Threshold threshold;
};

inline RandomInstance random_instance(std::uint64_t seed, std::size_t n, double edge_prob,
                                      double dissim_density) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (unit(rng) < edge_prob) edges.emplace_back(u, v);
    std::vector<Point2D> pts(n);
    for (auto& p : pts) p = Point2D{unit(rng), unit(rng)};

    std::vector<double> dists;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            dists.push_back(std::hypot(pts[u].x - pts[v].x, pts[u].y - pts[v].y));
    std::sort(dists.begin(), dists.end());
    double r = 1.0;
    if (!dists.empty()) {
        std::size_t similar = static_cast<std::size_t>(
            (1.0 - dissim_density) * static_cast<double>(dists.size()) + 0.5);
        if (similar == 0) similar = 1;
        r = dists[std::min(similar, dists.size()) - 1];
    }
    std::vector<VertexAttribute> attrs(pts.begin(), pts.end());
    return {AttributedGraph(n, edges, std::move(attrs)),
            threshold_for(SimilarityMetric::Euclidean, r)};
}

}  // namespace krcore::testing
