#include <string>

#include <CLI11.hpp>

#include "krcore/runner.hpp"

namespace {

void add_common(CLI::App* cmd, krcore::RunConfig& cfg, std::string& attr_mode,
                std::string& metric) {
    cmd->add_option("--graph", cfg.graph_path, "edge list file")->required();
    cmd->add_option("--attrs", cfg.attr_path, "vertex attribute file")->required();
    cmd->add_option("--attr-mode", attr_mode, "keywords|geo (default keywords)");
    cmd->add_option("--metric", metric, "jaccard|euclidean|haversine");
    cmd->add_option("--r", cfg.r, "similarity threshold")->required();
    cmd->add_option("--k", cfg.k, "degree threshold")->required();
    cmd->add_option("--node-budget", cfg.node_budget, "search node budget");
    cmd->add_option("--naive-cap", cfg.naive_cap, "exhaustive enumeration component cap");
    cmd->add_option("--seed", cfg.seed, "seed for the random order");
    cmd->add_option("--out", cfg.out_path, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal and maximum (k,r)-core mining on attributed graphs"};
    app.require_subcommand(1);

    krcore::RunConfig cfg;
    std::string attr_mode = "keywords";
    std::string metric;
    std::string order;
    std::string bound = "kkcore";

    auto* enumerate = app.add_subcommand("enumerate", "enumerate all maximal (k,r)-cores");
    add_common(enumerate, cfg, attr_mode, metric);
    enumerate->add_option("--engine", cfg.engine, "advanced|basic|naive|clique");
    enumerate->add_option("--order", order, "d1d2|lambda|degree|random");

    auto* maximum = app.add_subcommand("maximum", "find the maximum (k,r)-core");
    add_common(maximum, cfg, attr_mode, metric);
    maximum->add_option("--bound", bound, "naive|color|kcore|kkcore");
    maximum->add_option("--order", order, "d1d2|lambda|degree|random");
    maximum->add_option("--lambda", cfg.lambda, "trade-off for the lambda order");

    auto* oracle = app.add_subcommand("oracle", "brute-force reference enumeration");
    add_common(oracle, cfg, attr_mode, metric);

    auto* bench = app.add_subcommand("bench", "compare bound strategies on one instance");
    add_common(bench, cfg, attr_mode, metric);
    bench->add_option("--order", order, "d1d2|lambda|degree|random");
    bench->add_option("--lambda", cfg.lambda, "trade-off for the lambda order");

    auto* stats = app.add_subcommand("stats", "input and preprocessing statistics");
    add_common(stats, cfg, attr_mode, metric);

    CLI11_PARSE(app, argc, argv);

    cfg.command = app.get_subcommands().front()->get_name();

    if (attr_mode == "keywords") {
        cfg.attr_mode = krcore::AttrMode::Keywords;
    } else if (attr_mode == "geo") {
        cfg.attr_mode = krcore::AttrMode::Geo;
    } else {
        std::fprintf(stderr, "error: unknown attr-mode '%s'\n", attr_mode.c_str());
        return 2;
    }
    if (metric.empty())
        metric = cfg.attr_mode == krcore::AttrMode::Keywords ? "jaccard" : "euclidean";
    if (metric == "jaccard") {
        cfg.metric = krcore::SimilarityMetric::WeightedJaccard;
    } else if (metric == "euclidean") {
        cfg.metric = krcore::SimilarityMetric::Euclidean;
    } else if (metric == "haversine") {
        cfg.metric = krcore::SimilarityMetric::Haversine;
    } else {
        std::fprintf(stderr, "error: unknown metric '%s'\n", metric.c_str());
        return 2;
    }
    if (!order.empty()) {
        cfg.order_set = true;
        if (order == "d1d2") cfg.order = krcore::OrderStrategy::Kind::D1ThenD2;
        else if (order == "lambda") cfg.order = krcore::OrderStrategy::Kind::LambdaScore;
        else if (order == "degree") cfg.order = krcore::OrderStrategy::Kind::DegreeGreedy;
        else if (order == "random") cfg.order = krcore::OrderStrategy::Kind::Random;
        else {
            std::fprintf(stderr, "error: unknown order '%s'\n", order.c_str());
            return 2;
        }
    }
    if (bound == "naive") cfg.bound = krcore::BoundKind::Naive;
    else if (bound == "color") cfg.bound = krcore::BoundKind::Color;
    else if (bound == "kcore") cfg.bound = krcore::BoundKind::KCore;
    else if (bound == "kkcore") cfg.bound = krcore::BoundKind::KKCore;
    else {
        std::fprintf(stderr, "error: unknown bound '%s'\n", bound.c_str());
        return 2;
    }

    return krcore::run(cfg);
}
