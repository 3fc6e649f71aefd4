#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "krcore/graph.hpp"
#include "krcore/similarity.hpp"

namespace krcore {

// One connected component of the preprocessed graph, compacted to local
// dense ids with its own all-pairs similarity index. to_global maps local
// ids back to the ids of the loaded graph.
struct ComponentInstance {
    AttributedGraph graph;
    SimilarityIndex index;
    std::vector<VertexId> to_global;
};

struct PreprocessReport {
    std::size_t dissimilar_edges_deleted = 0;
    std::size_t vertices_peeled = 0;
};

struct Preprocessed {
    std::vector<ComponentInstance> components;
    PreprocessReport report;
};

// Deletes dissimilar edges, peels the graph back to its k-core and splits it
// into connected components, each carrying a freshly built similarity index.
// The similarity index is only ever built per component, after the pruning.
Preprocessed preprocess(const AttributedGraph& g, int k, const Threshold& t, SimilarityMetric m);

enum class Branch { Expand, Shrink };

struct SearchStats {
    long long nodes_visited = 0;
    long long leaves_visited = 0;
    long long refine_failures = 0;
    long long structure_prunes = 0;
    long long similarity_prunes = 0;
    long long early_terminations = 0;
    long long maximal_checks = 0;
    long long maximal_check_nodes = 0;
    long long bound_cutoffs = 0;
    long long promotions = 0;

    SearchStats& operator+=(const SearchStats& o);
};

// Which refinement rules apply. The basic configuration keeps only the
// structure/similarity pruning cascade; the full one additionally maintains
// the excluded set and the connectivity rules.
struct RefinePolicy {
    bool track_excluded = true;
    bool connectivity = true;
    static RefinePolicy full() { return {true, true}; }
    static RefinePolicy basic() { return {false, false}; }
};

// The unit of backtracking: chosen set M, candidate set C, relevant
// excluded set E (pairwise disjoint) plus maintained counters.
//   deg_mc[u]  degree of u within M ∪ C (valid for members of M ∪ C)
//   dp_c[u]    dissimilar vertices of u within C (valid for M ∪ C ∪ E)
//   dp_m[u]    dissimilar vertices of u within M (valid for C ∪ E)
//   dp_c_total dissimilar pairs within C
// After every successful refine the similarity invariant (no dissimilar
// pair touching M inside M ∪ C) and the degree invariant
// (deg_min(M ∪ C) >= k) both hold.
struct SearchState {
    const ComponentInstance* inst = nullptr;
    int k = 0;
    VertexSubset m, c, e;
    std::vector<std::int32_t> deg_mc, dp_c, dp_m;
    long long dp_c_total = 0;

    static SearchState initial(const ComponentInstance& inst, int k);

    // State with arbitrary M/C/E sets and counters recomputed from scratch;
    // test and tooling entry point.
    static SearchState make(const ComponentInstance& inst, int k,
                            const VertexSubset& m, const VertexSubset& c, const VertexSubset& e);

    VertexSubset mc() const { return m | c; }
};

// Applies one branch for the chosen vertex followed by the pruning cascade:
// expand moves the vertex into M and drops candidates dissimilar to it,
// shrink drops the vertex; then M ∪ C is peeled back to a k-core. Discarded
// vertices still similar to M are retained in E; E entries that became
// dissimilar to M are dropped for good. Returns nothing when a vertex of M
// would be peeled or when M can no longer be connected through C; candidates
// unreachable from M are moved to E rather than branched on.
std::optional<SearchState> refine(const SearchState& parent, VertexId moved, Branch branch,
                                  SearchStats* stats = nullptr,
                                  RefinePolicy policy = RefinePolicy::full());

// Restores the invariants on a freshly assembled state (candidates
// dissimilar to M or short of degree are pruned with the usual cascade).
// Same failure conditions as refine.
std::optional<SearchState> settle(SearchState s, SearchStats* stats = nullptr,
                                  RefinePolicy policy = RefinePolicy::full());

// SF(C): candidates with no dissimilar partner inside C.
VertexSubset sf_set(const SearchState& s);

// Moves every similarity-free candidate with at least k neighbors in M
// directly into M, repeated to fixpoint. Keeps both invariants.
SearchState promote_validated(SearchState s);

// Recomputes every counter from the sets and checks the state invariants;
// throws std::logic_error with a description on the first violation.
void verify_state(const SearchState& s);

}  // namespace krcore
