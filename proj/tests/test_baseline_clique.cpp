#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "krcore/baseline_clique.hpp"
#include "krcore/oracle.hpp"

using namespace krcore;
using namespace krcore::testing;

namespace {

std::set<std::vector<VertexId>> core_set(const EnumResult& r) {
    std::set<std::vector<VertexId>> out;
    for (const KrCore& c : r.cores) out.insert(c.vertices);
    return out;
}

std::vector<std::vector<VertexId>> complete_adj(std::size_t n) {
    std::vector<std::vector<VertexId>> adj(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (u != v) adj[u].push_back(v);
    return adj;
}

}  // namespace

TEST_CASE("maximal cliques") {
    auto k5 = maximal_cliques(complete_adj(5));
    REQUIRE(k5.size() == 1);
    CHECK(k5[0] == std::vector<VertexId>{0, 1, 2, 3, 4});

    // K6 minus the edge (0,5): two overlapping K5s
    auto adj = complete_adj(6);
    std::erase(adj[0], VertexId{5});
    std::erase(adj[5], VertexId{0});
    auto two = maximal_cliques(adj);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == std::vector<VertexId>{0, 1, 2, 3, 4});
    CHECK(two[1] == std::vector<VertexId>{1, 2, 3, 4, 5});

    // path: two edges
    std::vector<std::vector<VertexId>> path{{1}, {0, 2}, {1}};
    auto cliques = maximal_cliques(path);
    REQUIRE(cliques.size() == 2);
    CHECK(cliques[0] == std::vector<VertexId>{0, 1});
    CHECK(cliques[1] == std::vector<VertexId>{1, 2});
}

TEST_CASE("clique based enumeration on the fixtures") {
    Threshold t = fixture_threshold();

    EnumResult k6d = clique_based_enum(fix_k6d(), 2, t, kFixtureMetric);
    CHECK(core_set(k6d) ==
          std::set<std::vector<VertexId>>{{0, 1, 2, 3, 4}, {1, 2, 3, 4, 5}});

    EnumResult k5 = clique_based_enum(fix_k5(), 4, t, kFixtureMetric);
    CHECK(core_set(k5) == std::set<std::vector<VertexId>>{{0, 1, 2, 3, 4}});

    CHECK(clique_based_enum(fix_c6(), 3, t, kFixtureMetric).cores.empty());
}

TEST_CASE("clique based enumeration equals the oracle") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto [g, t] = random_instance(seed, 12, 0.35, 0.12);
        for (int k : {2, 3}) {
            EnumResult clique = clique_based_enum(g, k, t, SimilarityMetric::Euclidean);
            EnumResult oracle = brute_force_mkrc(g, k, t, SimilarityMetric::Euclidean);
            CHECK(core_set(clique) == core_set(oracle));
        }
    }
}
