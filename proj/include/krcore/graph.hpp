#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace krcore {

using VertexId = std::uint32_t;

// Weighted keyword bag; tokens sorted, weights strictly positive.
struct KeywordMultiset {
    std::vector<std::pair<std::string, double>> tokens;
};

// Planar point, or (latitude, longitude) in degrees under the haversine metric.
struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

using VertexAttribute = std::variant<KeywordMultiset, Point2D>;

// Subset of the vertices of a fixed parent graph, stored as a bitset.
// Values are cheap to copy for graphs at the scale the search operates on,
// which matters because the search copies subsets at every node.
class VertexSubset {
public:
    VertexSubset() = default;
    explicit VertexSubset(std::size_t universe)
        : words_((universe + 63) / 64, 0), universe_(universe) {}

    static VertexSubset all(std::size_t universe);

    std::size_t universe() const { return universe_; }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(VertexId v) const {
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void add(VertexId v) {
        std::uint64_t& w = words_[v >> 6];
        std::uint64_t bit = 1ull << (v & 63);
        if (!(w & bit)) { w |= bit; ++count_; }
    }
    void remove(VertexId v) {
        std::uint64_t& w = words_[v >> 6];
        std::uint64_t bit = 1ull << (v & 63);
        if (w & bit) { w &= ~bit; --count_; }
    }

    bool operator==(const VertexSubset& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }

    VertexSubset& operator|=(const VertexSubset& o);
    VertexSubset& operator&=(const VertexSubset& o);
    friend VertexSubset operator|(VertexSubset a, const VertexSubset& b) { a |= b; return a; }
    friend VertexSubset operator&(VertexSubset a, const VertexSubset& b) { a &= b; return a; }

    bool is_subset_of(const VertexSubset& o) const;

    std::vector<VertexId> to_vector() const;

    class iterator {
    public:
        iterator(const VertexSubset* s, std::size_t pos) : set_(s), pos_(pos) {}
        VertexId operator*() const { return static_cast<VertexId>(pos_); }
        iterator& operator++() { pos_ = set_->next_from(pos_ + 1); return *this; }
        bool operator!=(const iterator& o) const { return pos_ != o.pos_; }
    private:
        const VertexSubset* set_;
        std::size_t pos_;
    };
    iterator begin() const { return iterator(this, next_from(0)); }
    iterator end() const { return iterator(this, universe_); }

private:
    std::size_t next_from(std::size_t pos) const;

    std::vector<std::uint64_t> words_;
    std::size_t universe_ = 0;
    std::size_t count_ = 0;
};

// Undirected simple attributed graph over dense vertex ids 0..n-1.
// Immutable after construction; adjacency kept in CSR form with sorted
// neighbor lists. Self-loops and duplicate edges in the input are dropped
// and counted.
class AttributedGraph {
public:
    AttributedGraph() = default;
    AttributedGraph(std::size_t n,
                    const std::vector<std::pair<VertexId, VertexId>>& edges,
                    std::vector<VertexAttribute> attributes,
                    std::vector<std::string> external_ids = {});

    std::size_t size() const { return n_; }
    std::size_t edge_count() const { return adj_.size() / 2; }
    std::span<const VertexId> neighbors(VertexId u) const {
        return {adj_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
    }
    std::size_t degree(VertexId u) const { return offsets_[u + 1] - offsets_[u]; }
    const VertexAttribute& attribute(VertexId u) const { return attributes_[u]; }
    const std::string& external_id(VertexId u) const { return external_ids_[u]; }

    std::size_t self_loops_dropped() const { return self_loops_dropped_; }
    std::size_t duplicate_edges_dropped() const { return duplicates_dropped_; }

    VertexSubset full_set() const { return VertexSubset::all(n_); }

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> adj_;
    std::vector<VertexAttribute> attributes_;
    std::vector<std::string> external_ids_;
    std::size_t self_loops_dropped_ = 0;
    std::size_t duplicates_dropped_ = 0;
};

// |adj(u) ∩ S|; u itself never counts. Throws if u is not a member of S.
std::size_t degree_in(const AttributedGraph& g, VertexId u, const VertexSubset& s);

// Largest T ⊆ S with degree_in(u, T) >= k for all members; possibly empty.
// Linear in the induced edges (cascade deletion, no repeated scans).
VertexSubset k_core(const AttributedGraph& g, const VertexSubset& s, int k);

// Partition of S by edge-connectivity, ordered by ascending minimum vertex id.
std::vector<VertexSubset> connected_components(const AttributedGraph& g, const VertexSubset& s);

// Number of edges with both endpoints in S.
std::size_t induced_edge_count(const AttributedGraph& g, const VertexSubset& s);

}  // namespace krcore
