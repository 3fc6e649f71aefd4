#include "krcore/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "krcore/errors.hpp"

namespace krcore {

namespace {

constexpr double kEarthRadiusKm = 6371.0;

double weighted_jaccard(const KeywordMultiset& a, const KeywordMultiset& b) {
    if (a.tokens.empty() && b.tokens.empty())
        throw ConfigError("weighted jaccard: both keyword multisets are empty");
    double min_sum = 0.0, max_sum = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.tokens.size() || j < b.tokens.size()) {
        if (j == b.tokens.size() || (i < a.tokens.size() && a.tokens[i].first < b.tokens[j].first)) {
            max_sum += a.tokens[i].second;
            ++i;
        } else if (i == a.tokens.size() || b.tokens[j].first < a.tokens[i].first) {
            max_sum += b.tokens[j].second;
            ++j;
        } else {
            min_sum += std::min(a.tokens[i].second, b.tokens[j].second);
            max_sum += std::max(a.tokens[i].second, b.tokens[j].second);
            ++i;
            ++j;
        }
    }
    return max_sum == 0.0 ? 0.0 : min_sum / max_sum;
}

double haversine_km(const Point2D& a, const Point2D& b) {
    const double rad = std::numbers::pi / 180.0;
    double lat1 = a.x * rad, lat2 = b.x * rad;
    double dlat = (b.x - a.x) * rad, dlon = (b.y - a.y) * rad;
    double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
               std::cos(lat1) * std::cos(lat2) * std::sin(dlon / 2) * std::sin(dlon / 2);
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

}  // namespace

Threshold threshold_for(SimilarityMetric m, double r) {
    return {r, metric_is_distance(m) ? ThresholdKind::MaxDistance : ThresholdKind::MinSimilarity};
}

bool metric_is_distance(SimilarityMetric m) {
    return m == SimilarityMetric::Euclidean || m == SimilarityMetric::Haversine;
}

double similarity_score(const VertexAttribute& a, const VertexAttribute& b, SimilarityMetric m) {
    if (m == SimilarityMetric::WeightedJaccard) {
        const auto* ka = std::get_if<KeywordMultiset>(&a);
        const auto* kb = std::get_if<KeywordMultiset>(&b);
        if (!ka || !kb)
            throw ConfigError("weighted jaccard needs keyword attributes on both vertices");
        return weighted_jaccard(*ka, *kb);
    }
    const auto* pa = std::get_if<Point2D>(&a);
    const auto* pb = std::get_if<Point2D>(&b);
    if (!pa || !pb) throw ConfigError("distance metrics need point attributes on both vertices");
    if (m == SimilarityMetric::Euclidean) return std::hypot(pa->x - pb->x, pa->y - pb->y);
    return haversine_km(*pa, *pb);
}

bool score_is_similar(double score, const Threshold& t) {
    return t.kind == ThresholdKind::MinSimilarity ? score >= t.r : score <= t.r;
}

bool is_similar(const AttributedGraph& g, VertexId u, VertexId v,
                const Threshold& t, SimilarityMetric m) {
    if (u == v) throw std::invalid_argument("is_similar: pairs are between distinct vertices");
    return score_is_similar(similarity_score(g.attribute(u), g.attribute(v), m), t);
}

SimilarityIndex SimilarityIndex::build(const AttributedGraph& g, const VertexSubset& component,
                                       const Threshold& t, SimilarityMetric m) {
    SimilarityIndex idx;
    idx.component_ = component;
    idx.dissim_.assign(component.universe(), {});
    std::vector<VertexId> members = component.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            VertexId u = members[i], v = members[j];
            if (!is_similar(g, u, v, t, m)) {
                idx.dissim_[u].push_back(v);
                idx.dissim_[v].push_back(u);
                ++idx.pair_count_;
            }
        }
    }
    idx.finalize();
    return idx;
}

SimilarityIndex SimilarityIndex::from_dissimilar_pairs(
    std::size_t universe, const VertexSubset& component,
    const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    SimilarityIndex idx;
    idx.component_ = component;
    idx.dissim_.assign(universe, {});
    for (auto [u, v] : pairs) {
        if (u == v || !component.contains(u) || !component.contains(v))
            throw std::invalid_argument("similarity index: bad dissimilar pair");
        idx.dissim_[u].push_back(v);
        idx.dissim_[v].push_back(u);
        ++idx.pair_count_;
    }
    idx.finalize();
    return idx;
}

void SimilarityIndex::finalize() {
    for (auto& lst : dissim_) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    std::size_t n = component_.size();
    std::size_t all_pairs = n < 2 ? 0 : n * (n - 1) / 2;
    dense_mode_ = all_pairs > 0 && pair_count_ * 4 > all_pairs;
    if (dense_mode_) {
        dense_.assign(dissim_.size(), VertexSubset(dissim_.size()));
        for (VertexId u = 0; u < dissim_.size(); ++u)
            for (VertexId v : dissim_[u]) dense_[u].add(v);
    }
}

bool SimilarityIndex::is_dissimilar(VertexId u, VertexId v) const {
    if (u == v) return false;
    if (dense_mode_) return dense_[u].contains(v);
    return std::binary_search(dissim_[u].begin(), dissim_[u].end(), v);
}

int SimilarityIndex::dp(VertexId u, const VertexSubset& s) const {
    int d = 0;
    for (VertexId v : dissim_[u])
        if (s.contains(v)) ++d;
    return d;
}

int SimilarityIndex::sp(VertexId u, const VertexSubset& s) const {
    return static_cast<int>(s.size()) - 1 - dp(u, s);
}

long long SimilarityIndex::dp_total(const VertexSubset& s) const {
    long long twice = 0;
    for (VertexId u : s) twice += dp(u, s);
    return twice / 2;
}

std::vector<std::vector<VertexId>> SimilarityIndex::similarity_graph(const VertexSubset& s) const {
    std::vector<std::vector<VertexId>> adj(s.universe());
    std::vector<VertexId> members = s.to_vector();
    for (VertexId u : members) {
        for (VertexId v : members)
            if (u != v && !is_dissimilar(u, v)) adj[u].push_back(v);
    }
    return adj;
}

}  // namespace krcore
