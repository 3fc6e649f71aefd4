#pragma once

#include <optional>

#include "krcore/enumeration.hpp"

namespace krcore {

// Upper bound strategies for the size of the largest core inside M ∪ C.
enum class BoundKind { Naive, Color, KCore, KKCore };

struct MaxResult {
    std::optional<KrCore> best;
    SearchStats stats;
};

// |M| + |C|; ignores the similarity constraint entirely.
int ub_naive(const SearchState& s);

// Colors of a greedy proper coloring of the similarity graph on M ∪ C
// (largest degree first); at least the clique number, hence a bound.
int ub_color(const SearchState& s);

// k_max + 1 where k_max is the largest k'' with a non-empty k''-core in the
// similarity graph on M ∪ C.
int ub_kcore(const SearchState& s);

// k'_max + 1 from the largest k' admitting a set whose structural degrees
// stay at least k while its similarity degrees reach k'. Peels by similarity
// degree with a structural cascade; never exceeds ub_kcore.
int ub_kkcore(const SearchState& s);

int upper_bound(const SearchState& s, BoundKind kind);

// Branch and bound over the same search space as the enumeration, cutting
// subtrees whose bound cannot beat the best core seen. Components are
// processed starting with the one holding the highest-degree vertex.
MaxResult find_maximum(const AttributedGraph& g, int k, const Threshold& t,
                       SimilarityMetric metric, BoundKind bound, double lambda = 5.0,
                       SearchOptions opts = SearchOptions{.order = OrderStrategy::lambda_score()});

}  // namespace krcore
