#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "krcore/graph.hpp"

namespace krcore {

enum class SimilarityMetric { WeightedJaccard, Euclidean, Haversine };

// Whether a score qualifies as similar from above (similarity metrics) or
// from below (distance metrics). A score exactly equal to r counts as
// similar under both polarities.
enum class ThresholdKind { MinSimilarity, MaxDistance };

struct Threshold {
    double r = 0.0;
    ThresholdKind kind = ThresholdKind::MinSimilarity;
};

// Threshold with the polarity implied by the metric.
Threshold threshold_for(SimilarityMetric m, double r);

bool metric_is_distance(SimilarityMetric m);

// Jaccard: sum of min weights over sum of max weights.
// Euclidean: planar L2 distance. Haversine: great-circle km, x=lat, y=lon.
double similarity_score(const VertexAttribute& a, const VertexAttribute& b, SimilarityMetric m);

bool score_is_similar(double score, const Threshold& t);

// Similar/dissimilar predicate between two distinct vertices.
bool is_similar(const AttributedGraph& g, VertexId u, VertexId v,
                const Threshold& t, SimilarityMetric m);

// Precomputed pairwise similar/dissimilar structure for one component.
// Construction is all-pairs within the component; queries are linear in the
// stored dissimilar pairs. When dissimilar pairs exceed a quarter of all
// pairs, per-vertex bitsets back the membership test instead of binary
// search over the sorted lists.
class SimilarityIndex {
public:
    SimilarityIndex() = default;

    static SimilarityIndex build(const AttributedGraph& g, const VertexSubset& component,
                                 const Threshold& t, SimilarityMetric m);
    // Direct construction from explicit pairs; used by tests and tools that
    // already know the dissimilarity structure.
    static SimilarityIndex from_dissimilar_pairs(std::size_t universe, const VertexSubset& component,
                                                 const std::vector<std::pair<VertexId, VertexId>>& pairs);

    const VertexSubset& component() const { return component_; }
    std::span<const VertexId> dissimilar(VertexId u) const {
        return {dissim_[u].data(), dissim_[u].size()};
    }
    bool is_dissimilar(VertexId u, VertexId v) const;

    // DP(u, S): dissimilar vertices of u within S.
    int dp(VertexId u, const VertexSubset& s) const;
    // SP(u, S): similar others of u within S (requires u ∈ S).
    int sp(VertexId u, const VertexSubset& s) const;
    // DP(S): dissimilar pairs within S.
    long long dp_total(const VertexSubset& s) const;

    std::size_t dissimilar_pair_count() const { return pair_count_; }

    // Adjacency of the similarity graph J' induced on S: edge (u,v) iff the
    // two are similar. Lists sorted; indexed over the full universe.
    std::vector<std::vector<VertexId>> similarity_graph(const VertexSubset& s) const;

private:
    void finalize();

    VertexSubset component_;
    std::vector<std::vector<VertexId>> dissim_;
    std::vector<VertexSubset> dense_;  // populated only in dense mode
    bool dense_mode_ = false;
    std::size_t pair_count_ = 0;
};

}  // namespace krcore
