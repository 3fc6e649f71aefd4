#include "krcore/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace krcore {

VertexSubset VertexSubset::all(std::size_t universe) {
    VertexSubset s(universe);
    for (std::size_t i = 0; i < universe; ++i)
        s.words_[i >> 6] |= 1ull << (i & 63);
    s.count_ = universe;
    return s;
}

VertexSubset& VertexSubset::operator|=(const VertexSubset& o) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= o.words_[i];
        count += std::popcount(words_[i]);
    }
    count_ = count;
    return *this;
}

VertexSubset& VertexSubset::operator&=(const VertexSubset& o) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= o.words_[i];
        count += std::popcount(words_[i]);
    }
    count_ = count;
    return *this;
}

bool VertexSubset::is_subset_of(const VertexSubset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

std::vector<VertexId> VertexSubset::to_vector() const {
    std::vector<VertexId> out;
    out.reserve(count_);
    for (VertexId v : *this) out.push_back(v);
    return out;
}

std::size_t VertexSubset::next_from(std::size_t pos) const {
    if (pos >= universe_) return universe_;
    std::size_t wi = pos >> 6;
    std::uint64_t w = words_[wi] >> (pos & 63);
    if (w) return pos + std::countr_zero(w);
    for (++wi; wi < words_.size(); ++wi)
        if (words_[wi]) return (wi << 6) + std::countr_zero(words_[wi]);
    return universe_;
}

AttributedGraph::AttributedGraph(std::size_t n,
                                 const std::vector<std::pair<VertexId, VertexId>>& edges,
                                 std::vector<VertexAttribute> attributes,
                                 std::vector<std::string> external_ids)
    : n_(n), attributes_(std::move(attributes)), external_ids_(std::move(external_ids)) {
    if (attributes_.size() != n_)
        throw std::invalid_argument("graph: every vertex needs exactly one attribute");
    if (external_ids_.empty()) {
        external_ids_.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i) external_ids_.push_back(std::to_string(i));
    }
    if (external_ids_.size() != n_)
        throw std::invalid_argument("graph: external id list size mismatch");

    std::vector<std::pair<VertexId, VertexId>> norm;
    norm.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n_ || v >= n_) throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) { ++self_loops_dropped_; continue; }
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    auto last = std::unique(norm.begin(), norm.end());
    duplicates_dropped_ = static_cast<std::size_t>(norm.end() - last);
    norm.erase(last, norm.end());

    std::vector<std::size_t> deg(n_, 0);
    for (auto [u, v] : norm) { ++deg[u]; ++deg[v]; }
    offsets_.assign(n_ + 1, 0);
    for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
    adj_.resize(norm.size() * 2);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : norm) {
        adj_[cursor[u]++] = v;
        adj_[cursor[v]++] = u;
    }
    for (std::size_t i = 0; i < n_; ++i)
        std::sort(adj_.begin() + offsets_[i], adj_.begin() + offsets_[i + 1]);
}

std::size_t degree_in(const AttributedGraph& g, VertexId u, const VertexSubset& s) {
    if (!s.contains(u))
        throw std::invalid_argument("degree_in: vertex " + std::to_string(u) + " not in subset");
    std::size_t d = 0;
    for (VertexId w : g.neighbors(u))
        if (s.contains(w)) ++d;
    return d;
}

VertexSubset k_core(const AttributedGraph& g, const VertexSubset& s, int k) {
    VertexSubset alive = s;
    std::vector<int> deg(g.size(), 0);
    std::vector<VertexId> stack;
    for (VertexId v : s) {
        int d = 0;
        for (VertexId w : g.neighbors(v))
            if (s.contains(w)) ++d;
        deg[v] = d;
        if (d < k) stack.push_back(v);
    }
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        if (!alive.contains(v)) continue;
        alive.remove(v);
        for (VertexId w : g.neighbors(v)) {
            if (alive.contains(w) && --deg[w] == k - 1) stack.push_back(w);
        }
    }
    return alive;
}

std::vector<VertexSubset> connected_components(const AttributedGraph& g, const VertexSubset& s) {
    std::vector<VertexSubset> out;
    VertexSubset seen(s.universe());
    std::vector<VertexId> queue;
    for (VertexId start : s) {
        if (seen.contains(start)) continue;
        VertexSubset comp(s.universe());
        queue.assign(1, start);
        seen.add(start);
        comp.add(start);
        while (!queue.empty()) {
            VertexId v = queue.back();
            queue.pop_back();
            for (VertexId w : g.neighbors(v)) {
                if (s.contains(w) && !seen.contains(w)) {
                    seen.add(w);
                    comp.add(w);
                    queue.push_back(w);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::size_t induced_edge_count(const AttributedGraph& g, const VertexSubset& s) {
    std::size_t twice = 0;
    for (VertexId v : s)
        for (VertexId w : g.neighbors(v))
            if (s.contains(w)) ++twice;
    return twice / 2;
}

}  // namespace krcore
