#pragma once

#include <optional>

#include "krcore/enumeration.hpp"

namespace krcore {

// Ground truth by exhaustive subset enumeration, written against the raw
// graph and attribute data only: no search state, no pruning, no shared
// engine logic beyond the similarity metric itself. Components larger
// than cap are refused.
EnumResult brute_force_mkrc(const AttributedGraph& g, int k, const Threshold& t,
                            SimilarityMetric metric, int cap = 20);

std::optional<KrCore> brute_force_maximum(const AttributedGraph& g, int k, const Threshold& t,
                                          SimilarityMetric metric, int cap = 20);

}  // namespace krcore
