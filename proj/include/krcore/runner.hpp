#pragma once

#include <cstdint>
#include <string>

#include "krcore/io.hpp"
#include "krcore/maximum.hpp"

namespace krcore {

// One resolved invocation: inputs, parameters, command and output target.
struct RunConfig {
    std::string command;  // enumerate | maximum | oracle | bench | stats
    std::string graph_path;
    std::string attr_path;
    AttrMode attr_mode = AttrMode::Keywords;
    SimilarityMetric metric = SimilarityMetric::WeightedJaccard;
    double r = 0.0;
    int k = 1;
    std::string engine = "advanced";  // enumerate only: advanced|basic|naive|clique
    OrderStrategy::Kind order = OrderStrategy::Kind::D1ThenD2;
    bool order_set = false;  // default order depends on the command
    BoundKind bound = BoundKind::KKCore;
    double lambda = 5.0;
    std::uint64_t seed = 0;
    long long node_budget = 100'000'000;
    int naive_cap = 20;
    std::string out_path;  // empty = stdout
};

// Exit codes: 0 success, 2 configuration or parse error, 3 node budget
// exceeded, 4 exhaustive-enumeration cap refused. Results go to the output
// target; a one-line JSON stats report goes to stderr.
int run(const RunConfig& cfg);

}  // namespace krcore
