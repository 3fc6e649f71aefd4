#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "krcore/ordering.hpp"

using namespace krcore;
using namespace krcore::testing;

namespace {

SearchState root_of(const Preprocessed& pre, int k) {
    REQUIRE(pre.components.size() == 1);
    return SearchState::initial(pre.components[0], k);
}

bool states_equal(const SearchState& a, const SearchState& b) {
    return a.m == b.m && a.c == b.c && a.e == b.e && a.deg_mc == b.deg_mc && a.dp_c == b.dp_c &&
           a.dp_m == b.dp_m && a.dp_c_total == b.dp_c_total;
}

}  // namespace

TEST_CASE("branch scores on the dissimilar pair fixture") {
    Preprocessed pre = preprocess(fix_k6d(), 2, fixture_threshold(), kFixtureMetric);
    SearchState root = root_of(pre, 2);
    SearchState before = root;

    auto [expand, shrink] = branch_scores(root, 0);
    CHECK(states_equal(root, before));  // scoring never mutates the state

    // expanding 0 prunes 5, taking the only dissimilar pair with it
    CHECK(expand.delta1 == doctest::Approx(1.0));
    CHECK(expand.delta2 == doctest::Approx(4.0 / 14.0));
    // shrinking 0 also removes the pair, at the same edge cost
    CHECK(shrink.delta1 == doctest::Approx(1.0));
    CHECK(shrink.delta2 == doctest::Approx(4.0 / 14.0));

    CHECK_THROWS_AS(branch_scores(root, 1), std::invalid_argument);  // 1 is similarity free
}

TEST_CASE("delta1 arithmetic: three of four pairs leave") {
    // complete graph on 7; dissimilar pairs (0,1) (0,2) (0,3) and (5,6)
    std::vector<VertexAttribute> attrs{Point2D{0.0, 0.0},   Point2D{1.2, 0.0},
                                       Point2D{1.25, 0.0},  Point2D{1.3, 0.0},
                                       Point2D{0.65, 0.0},  Point2D{0.6, -0.55},
                                       Point2D{0.6, 0.55}};
    AttributedGraph g(7, complete_edges(7), std::move(attrs));
    Threshold t = fixture_threshold();
    Preprocessed pre = preprocess(g, 2, t, kFixtureMetric);
    SearchState root = root_of(pre, 2);
    REQUIRE(root.dp_c_total == 4);

    // component ids may be remapped; find vertex 0 locally
    const ComponentInstance& inst = pre.components[0];
    VertexId local0 = 0;
    for (VertexId v = 0; v < inst.graph.size(); ++v)
        if (inst.to_global[v] == 0) local0 = v;

    auto [expand, shrink] = branch_scores(root, local0);
    // either branch takes vertex 0 out of C, dropping its three pairs
    CHECK(expand.delta1 == doctest::Approx(0.75));
    CHECK(shrink.delta1 == doctest::Approx(0.75));
}

TEST_CASE("delta2 arithmetic: two of ten edges leave") {
    // K4 on {0,1,2,3} plus 4 adj {0,1} and 5 adj {2,3}: ten edges, and
    // shrinking the degree-two vertex 4 costs exactly two of them.
    std::vector<std::pair<VertexId, VertexId>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                                                        {2, 3}, {4, 0}, {4, 1}, {5, 2}, {5, 3}};
    std::vector<VertexAttribute> attrs{Point2D{0.0, 0.0}, Point2D{0.1, 0.0}, Point2D{0.2, 0.0},
                                       Point2D{0.3, 0.0}, Point2D{0.6, 0.7}, Point2D{0.6, -0.7}};
    AttributedGraph g(6, edges, std::move(attrs));  // (4,5) is the dissimilar pair
    Threshold t = fixture_threshold();
    Preprocessed pre = preprocess(g, 2, t, kFixtureMetric);
    SearchState root = root_of(pre, 2);
    REQUIRE(root.dp_c_total == 1);
    REQUIRE(induced_edge_count(pre.components[0].graph,
                               pre.components[0].graph.full_set()) == 10);

    const ComponentInstance& inst = pre.components[0];
    VertexId local4 = 0;
    for (VertexId v = 0; v < inst.graph.size(); ++v)
        if (inst.to_global[v] == 4) local4 = v;

    auto [expand, shrink] = branch_scores(root, local4);
    CHECK(shrink.delta2 == doctest::Approx(0.2));
    CHECK(shrink.delta1 == doctest::Approx(1.0));
}

TEST_CASE("lambda score arithmetic") {
    CHECK(lambda_branch_score(BranchScore{0.75, 0.2}, 5.0) == doctest::Approx(3.55));
    CHECK(lambda_branch_score(BranchScore{0.0, 0.5}, 5.0) == doctest::Approx(-0.5));
}

TEST_CASE("vertex choice rules") {
    Preprocessed pre = preprocess(fix_k6d(), 2, fixture_threshold(), kFixtureMetric);
    SearchState root = root_of(pre, 2);

    // only 0 and 5 are outside SF(C); symmetric scores, lowest id wins
    CHECK(choose_vertex_enum(root) == 0);

    auto [v, b] = choose_vertex_max(root, 5.0);
    CHECK(v == 0);
    CHECK(b == Branch::Expand);

    auto [cv, cb] = choose_vertex_checkmax(root);
    CHECK(cb == Branch::Expand);
    CHECK(cv == 1);  // 0 and 5 have degree 4, the rest 5; lowest id among those

    // determinism: identical states give identical choices
    SearchState again = SearchState::initial(pre.components[0], 2);
    CHECK(choose_vertex_enum(again) == choose_vertex_enum(root));
}

TEST_CASE("random strategy is seed deterministic") {
    Preprocessed pre = preprocess(fix_k6d(), 2, fixture_threshold(), kFixtureMetric);
    SearchState root = root_of(pre, 2);
    OrderStrategy order = OrderStrategy::random(42);
    std::mt19937_64 rng1(7), rng2(7);
    auto a = choose_vertex(root, order, rng1);
    auto b = choose_vertex(root, order, rng2);
    CHECK(a == b);
}
