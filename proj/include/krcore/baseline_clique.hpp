#pragma once

#include <vector>

#include "krcore/enumeration.hpp"

namespace krcore {

// All maximal cliques of the given adjacency (pivoted recursive expansion),
// in canonical order: size descending, then lexicographic. The budget caps
// recursion steps; exceeding it aborts the run.
std::vector<std::vector<VertexId>> maximal_cliques(
    const std::vector<std::vector<VertexId>>& adjacency, long long budget = 100'000'000);

// Comparison method: per preprocessed component, enumerate the maximal
// cliques of the similarity graph, peel each clique back to a structural
// k-core, split into connected components and keep the containment-maximal
// survivors. Matches the advanced enumeration exactly.
EnumResult clique_based_enum(const AttributedGraph& g, int k, const Threshold& t,
                             SimilarityMetric metric, const SearchOptions& opts = {});

}  // namespace krcore
