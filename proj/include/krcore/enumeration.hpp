#pragma once

#include <atomic>
#include <functional>
#include <optional>
#include <vector>

#include "krcore/ordering.hpp"
#include "krcore/search.hpp"

namespace krcore {

// A result core: canonically sorted vertex ids of the loaded graph.
struct KrCore {
    std::vector<VertexId> vertices;
    std::size_t size() const { return vertices.size(); }
    bool operator==(const KrCore&) const = default;
};

struct EnumResult {
    std::vector<KrCore> cores;  // size descending, then lexicographic
    SearchStats stats;
    // (component size, leaves visited) per component; filled by naive_enum.
    std::vector<std::pair<std::size_t, long long>> component_leaves;
};

using NodeObserver = std::function<void(const SearchState&)>;

struct SearchOptions {
    OrderStrategy order = OrderStrategy::d1_then_d2();
    long long node_budget = 100'000'000;
    int naive_cap = 20;
    unsigned threads = 1;
    bool verify_invariants = false;
    NodeObserver observer;
};

// Shared node counter; throws BudgetExceeded past the limit.
class BudgetGuard {
public:
    explicit BudgetGuard(long long limit) : limit_(limit) {}
    void tick();
    long long used() const { return used_.load(std::memory_order_relaxed); }
private:
    std::atomic<long long> used_{0};
    long long limit_;
};

// Direct re-validation of a candidate core against the component data,
// independent of any counters the search maintains.
bool is_valid_core(const ComponentInstance& inst, const VertexSubset& vertices, int k);

// Reference search: explores the full binary tree per component and
// validates at the leaves. With pruning enabled this is the basic
// configuration (structure + similarity pruning only, containment filter at
// the end); without it every one of the 2^|S| subsets becomes a leaf.
// Components larger than naive_cap are refused.
EnumResult naive_enum(const AttributedGraph& g, int k, const Threshold& t, SimilarityMetric metric,
                      bool pruning_enabled, const SearchOptions& opts = {});

// Production search: candidate pruning, retention, early termination and
// maximal checking. Produces exactly the maximal cores.
EnumResult advanced_enum(const AttributedGraph& g, int k, const Threshold& t,
                         SimilarityMetric metric, const SearchOptions& opts = {});

// True when no subtree of s can contain a maximal core: either a retained
// excluded vertex similar to all of C already has k neighbors in M, or a set
// of retained vertices (similarity-free w.r.t. C and E) survives a peeling
// anchored at M and reaches M — every core below then extends by it.
bool early_termination(const SearchState& s);

// True iff no non-empty subset of the available vertices extends the core
// to a larger one: a secondary expand/shrink search seeded with the core as
// M and the available set as C, short-circuiting as soon as a strictly
// larger core forms. Highest degree first, expand branch first.
bool check_maximal(const ComponentInstance& inst, int k, const VertexSubset& core,
                   const VertexSubset& available, SearchStats* stats = nullptr,
                   BudgetGuard* budget = nullptr);

}  // namespace krcore
