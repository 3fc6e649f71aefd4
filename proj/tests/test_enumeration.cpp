#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "krcore/enumeration.hpp"
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

VertexSubset subset_of(std::size_t universe, std::initializer_list<VertexId> vs) {
    VertexSubset s(universe);
    for (VertexId v : vs) s.add(v);
    return s;
}

}  // namespace

TEST_CASE("naive enumeration on the fixtures") {
    Threshold t = fixture_threshold();

    EnumResult k5 = naive_enum(fix_k5(), 2, t, kFixtureMetric, false);
    CHECK(core_set(k5) == std::set<std::vector<VertexId>>{{0, 1, 2, 3, 4}});
    REQUIRE(k5.component_leaves.size() == 1);
    CHECK(k5.component_leaves[0].second == 32);  // 2^5 leaves, all visited

    EnumResult k6d = naive_enum(fix_k6d(), 2, t, kFixtureMetric, false);
    CHECK(core_set(k6d) ==
          std::set<std::vector<VertexId>>{{0, 1, 2, 3, 4}, {1, 2, 3, 4, 5}});

    CHECK(naive_enum(fix_path3(), 2, t, kFixtureMetric, false).cores.empty());
}

TEST_CASE("naive cap refusal") {
    auto [g, t] = random_instance(5, 12, 0.6, 0.0);
    SearchOptions opts;
    opts.naive_cap = 8;
    CHECK_THROWS_AS(naive_enum(g, 2, t, SimilarityMetric::Euclidean, false, opts), CapExceeded);
}

TEST_CASE("advanced enumeration on the fixtures") {
    Threshold t = fixture_threshold();

    EnumResult k6d = advanced_enum(fix_k6d(), 2, t, kFixtureMetric);
    CHECK(core_set(k6d) ==
          std::set<std::vector<VertexId>>{{0, 1, 2, 3, 4}, {1, 2, 3, 4, 5}});

    EnumResult c6 = advanced_enum(fix_c6(), 2, t, kFixtureMetric);
    CHECK(core_set(c6) == std::set<std::vector<VertexId>>{{0, 1, 2, 3, 4, 5}});
}

TEST_CASE("advanced equals brute force on random instances") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto [g, t] = random_instance(seed, 12, 0.3, 0.1);
        for (int k : {2, 3}) {
            EnumResult adv = advanced_enum(g, k, t, SimilarityMetric::Euclidean);
            EnumResult oracle = brute_force_mkrc(g, k, t, SimilarityMetric::Euclidean);
            CHECK(core_set(adv) == core_set(oracle));
        }
    }
}

TEST_CASE("reported cores are valid and pairwise incomparable") {
    for (std::uint64_t seed = 40; seed < 55; ++seed) {
        auto [g, t] = random_instance(seed, 13, 0.35, 0.15);
        EnumResult adv = advanced_enum(g, 2, t, SimilarityMetric::Euclidean);
        auto cores = core_set(adv);
        for (const auto& a : cores) {
            // direct validation against the raw graph
            VertexSubset s(g.size());
            for (VertexId v : a) s.add(v);
            for (VertexId v : a) CHECK(degree_in(g, v, s) >= 2);
            for (VertexId u : a)
                for (VertexId v : a)
                    if (u < v) CHECK(is_similar(g, u, v, t, SimilarityMetric::Euclidean));
            CHECK(connected_components(g, s).size() == 1);
            for (const auto& b : cores) {
                if (a == b) continue;
                CHECK(!std::includes(b.begin(), b.end(), a.begin(), a.end()));
            }
        }
    }
}

TEST_CASE("node counts shrink as machinery is added") {
    for (std::uint64_t seed = 60; seed < 70; ++seed) {
        auto [g, t] = random_instance(seed, 11, 0.35, 0.1);
        EnumResult plain = naive_enum(g, 2, t, SimilarityMetric::Euclidean, false);
        EnumResult basic = naive_enum(g, 2, t, SimilarityMetric::Euclidean, true);
        EnumResult adv = advanced_enum(g, 2, t, SimilarityMetric::Euclidean);
        CHECK(core_set(plain) == core_set(basic));
        CHECK(core_set(basic) == core_set(adv));
        CHECK(basic.stats.nodes_visited <= plain.stats.nodes_visited);
        CHECK(adv.stats.nodes_visited <= basic.stats.nodes_visited);
    }
}

TEST_CASE("early termination examples") {
    Threshold t = fixture_threshold();

    // a retained vertex with enough neighbors in M ends the search
    Preprocessed k5 = preprocess(fix_k5(), 2, t, kFixtureMetric);
    const ComponentInstance& inst = k5.components[0];
    SearchState s = SearchState::make(inst, 2, subset_of(5, {0, 1, 2}), subset_of(5, {3}),
                                      subset_of(5, {4}));
    CHECK(early_termination(s));

    SearchState no_e = SearchState::make(inst, 2, subset_of(5, {0, 1, 2}), subset_of(5, {3, 4}),
                                         VertexSubset(5));
    CHECK(!early_termination(no_e));

    Preprocessed k6d = preprocess(fix_k6d(), 2, t, kFixtureMetric);
    const ComponentInstance& inst6 = k6d.components[0];
    SearchState s6 = SearchState::make(inst6, 2, subset_of(6, {1, 2}), subset_of(6, {3, 4}),
                                       subset_of(6, {0, 5}));
    CHECK(early_termination(s6));
}

TEST_CASE("check_maximal examples") {
    Threshold t = fixture_threshold();
    Preprocessed k5 = preprocess(fix_k5(), 2, t, kFixtureMetric);
    const ComponentInstance& inst = k5.components[0];

    CHECK(check_maximal(inst, 2, VertexSubset::all(5), VertexSubset(5)));
    CHECK(!check_maximal(inst, 2, subset_of(5, {0, 1, 2}), subset_of(5, {3, 4})));

    Preprocessed k6d = preprocess(fix_k6d(), 2, t, kFixtureMetric);
    const ComponentInstance& inst6 = k6d.components[0];
    CHECK(!check_maximal(inst6, 2, subset_of(6, {1, 2, 3, 4}), subset_of(6, {0, 5})));
}

TEST_CASE("early terminated subtrees never hide a maximal core") {
    // instrumented spot check: collect states where the rule fires, then
    // enumerate each frozen subtree exhaustively and confirm every core in
    // it extends to a strictly larger one in the final answer
    for (std::uint64_t seed = 80; seed < 86; ++seed) {
        auto [g, t] = random_instance(seed, 11, 0.35, 0.12);
        int k = 2;
        struct Fired {
            std::vector<VertexId> m, mc;  // global ids
        };
        std::vector<Fired> fired;
        SearchOptions opts;
        opts.observer = [&](const SearchState& s) {
            SearchState copy = s;
            copy = promote_validated(std::move(copy));
            if (!early_termination(copy)) return;
            Fired f;
            for (VertexId v : copy.m) f.m.push_back(copy.inst->to_global[v]);
            VertexSubset mc = copy.mc();
            for (VertexId v : mc) f.mc.push_back(copy.inst->to_global[v]);
            std::sort(f.m.begin(), f.m.end());
            std::sort(f.mc.begin(), f.mc.end());
            fired.push_back(std::move(f));
        };
        EnumResult adv = advanced_enum(g, k, t, SimilarityMetric::Euclidean, opts);
        EnumResult oracle = brute_force_mkrc(g, k, t, SimilarityMetric::Euclidean);
        auto final_cores = core_set(oracle);

        for (const Fired& f : fired) {
            // all cores R with M ⊆ R ⊆ M∪C, by brute force over the gap
            std::vector<VertexId> gap;
            for (VertexId v : f.mc)
                if (!std::binary_search(f.m.begin(), f.m.end(), v)) gap.push_back(v);
            REQUIRE(gap.size() <= 16);
            for (std::uint32_t mask = 0; mask < (1u << gap.size()); ++mask) {
                std::vector<VertexId> r = f.m;
                for (std::size_t i = 0; i < gap.size(); ++i)
                    if (mask & (1u << i)) r.push_back(gap[i]);
                if (r.empty()) continue;
                std::sort(r.begin(), r.end());
                VertexSubset s(g.size());
                for (VertexId v : r) s.add(v);
                bool core = true;
                for (VertexId v : r)
                    if (degree_in(g, v, s) < 2) { core = false; break; }
                if (core)
                    for (VertexId u : r)
                        for (VertexId v : r)
                            if (u < v && !is_similar(g, u, v, t, SimilarityMetric::Euclidean)) {
                                core = false;
                            }
                if (core && connected_components(g, s).size() != 1) core = false;
                if (!core) continue;
                // must be strictly inside some maximal core of the answer
                bool extendable = false;
                for (const auto& big : final_cores) {
                    if (big.size() > r.size() &&
                        std::includes(big.begin(), big.end(), r.begin(), r.end())) {
                        extendable = true;
                        break;
                    }
                }
                CHECK(extendable);
            }
        }
    }
}

TEST_CASE("budget aborts the search") {
    SearchOptions opts;
    opts.node_budget = 1;
    CHECK_THROWS_AS(advanced_enum(fix_k6d(), 2, fixture_threshold(), kFixtureMetric, opts),
                    BudgetExceeded);
}
