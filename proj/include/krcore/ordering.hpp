#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "krcore/search.hpp"

namespace krcore {

// Vertex and branch selection strategies for the three searches.
struct OrderStrategy {
    enum class Kind { D1ThenD2, LambdaScore, DegreeGreedy, Random };
    Kind kind = Kind::D1ThenD2;
    double lambda = 5.0;
    std::uint64_t seed = 0;

    static OrderStrategy d1_then_d2() { return {Kind::D1ThenD2, 5.0, 0}; }
    static OrderStrategy lambda_score(double lambda = 5.0) { return {Kind::LambdaScore, lambda, 0}; }
    static OrderStrategy degree_greedy() { return {Kind::DegreeGreedy, 5.0, 0}; }
    static OrderStrategy random(std::uint64_t seed) { return {Kind::Random, 5.0, seed}; }
};

// Fractional drop in dissimilar pairs (delta1) and induced edges (delta2)
// caused by one simulated branch.
struct BranchScore {
    double delta1 = 0.0;
    double delta2 = 0.0;
};

// Simulates both branches of the chosen vertex without touching the state.
// The pruning cascade is replayed on a scratch window limited to two hops of
// the vertex; effects beyond the window are ignored.
std::pair<BranchScore, BranchScore> branch_scores(const SearchState& s, VertexId u);

double lambda_branch_score(const BranchScore& b, double lambda);

// Largest delta1 sum over the two branches, ties by smaller delta2 sum, then
// lowest id. Requires a choice point (some candidate outside SF(C)).
VertexId choose_vertex_enum(const SearchState& s);

// Per candidate the two branch scores lambda*delta1 - delta2; picks the
// vertex whose better branch scores highest and that branch (expand on
// ties). Lowest id breaks ties across vertices.
std::pair<VertexId, Branch> choose_vertex_max(const SearchState& s, double lambda);

// Highest degree in M ∪ C, lowest id on ties; expand always preferred.
std::pair<VertexId, Branch> choose_vertex_checkmax(const SearchState& s);

// Strategy dispatch used by the search drivers. branch is meaningful for
// searches that order their branches; callers that explore both in a fixed
// order ignore it.
std::pair<VertexId, Branch> choose_vertex(const SearchState& s, const OrderStrategy& order,
                                          std::mt19937_64& rng);

}  // namespace krcore
