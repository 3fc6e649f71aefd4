#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "krcore/errors.hpp"
#include "krcore/oracle.hpp"

using namespace krcore;
using namespace krcore::testing;

namespace {

std::set<std::vector<VertexId>> core_set(const EnumResult& r) {
    std::set<std::vector<VertexId>> out;
    for (const KrCore& c : r.cores) out.insert(c.vertices);
    return out;
}

}  // namespace

TEST_CASE("brute force enumeration on the fixtures") {
    Threshold t = fixture_threshold();

    EnumResult k6d = brute_force_mkrc(fix_k6d(), 2, t, kFixtureMetric);
    REQUIRE(core_set(k6d) ==
            std::set<std::vector<VertexId>>{{0, 1, 2, 3, 4}, {1, 2, 3, 4, 5}});
    // cross-check both answers against the constraints directly
    AttributedGraph g = fix_k6d();
    for (const KrCore& core : k6d.cores) {
        VertexSubset s(g.size());
        for (VertexId v : core.vertices) s.add(v);
        for (VertexId v : core.vertices) CHECK(degree_in(g, v, s) >= 2);
        for (VertexId u : core.vertices)
            for (VertexId v : core.vertices)
                if (u < v) CHECK(is_similar(g, u, v, t, kFixtureMetric));
    }

    CHECK(brute_force_mkrc(fix_k5(), 5, t, kFixtureMetric).cores.empty());
    CHECK(core_set(brute_force_mkrc(fix_c6(), 2, t, kFixtureMetric)) ==
          std::set<std::vector<VertexId>>{{0, 1, 2, 3, 4, 5}});
}

TEST_CASE("brute force maximum") {
    Threshold t = fixture_threshold();

    auto k6d = brute_force_maximum(fix_k6d(), 2, t, kFixtureMetric);
    REQUIRE(k6d.has_value());
    CHECK(k6d->size() == 5);
    CHECK(k6d->vertices == std::vector<VertexId>{0, 1, 2, 3, 4});  // canonical tie break

    CHECK(!brute_force_maximum(fix_path3(), 2, t, kFixtureMetric).has_value());

    auto k5 = brute_force_maximum(fix_k5(), 2, t, kFixtureMetric);
    REQUIRE(k5.has_value());
    CHECK(k5->size() == 5);
}

TEST_CASE("oracle refuses oversized components") {
    auto [g, t] = random_instance(17, 14, 0.8, 0.0);
    CHECK_THROWS_AS(brute_force_mkrc(g, 2, t, SimilarityMetric::Euclidean, 8), CapExceeded);
}
