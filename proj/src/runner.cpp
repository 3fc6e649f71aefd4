#include "krcore/runner.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "krcore/baseline_clique.hpp"
#include "krcore/errors.hpp"
#include "krcore/oracle.hpp"

namespace krcore {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

unsigned threads_from_env() {
    const char* env = std::getenv("KRCORE_THREADS");
    if (!env) return 1;
    long v = std::strtol(env, nullptr, 10);
    return v < 1 ? 1 : static_cast<unsigned>(v);
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + out_path);
    out << payload;
}

json core_stats(const std::vector<KrCore>& cores) {
    std::size_t max_size = 0, total = 0;
    for (const KrCore& c : cores) {
        max_size = std::max(max_size, c.size());
        total += c.size();
    }
    return {{"core_count", cores.size()},
            {"max_size", max_size},
            {"avg_size", cores.empty() ? 0.0 : static_cast<double>(total) / cores.size()}};
}

json search_stats(const SearchStats& s) {
    return {{"nodes_visited", s.nodes_visited},
            {"leaves_visited", s.leaves_visited},
            {"refine_failures", s.refine_failures},
            {"prunes", {{"structure", s.structure_prunes}, {"similarity", s.similarity_prunes}}},
            {"early_terminations", s.early_terminations},
            {"maximal_checks", s.maximal_checks},
            {"maximal_check_nodes", s.maximal_check_nodes},
            {"bound_cutoffs", s.bound_cutoffs},
            {"promotions", s.promotions}};
}

OrderStrategy resolve_order(const RunConfig& cfg, bool maximum_command) {
    OrderStrategy order;
    order.kind = cfg.order_set
                     ? cfg.order
                     : (maximum_command ? OrderStrategy::Kind::LambdaScore
                                        : OrderStrategy::Kind::D1ThenD2);
    order.lambda = cfg.lambda;
    order.seed = cfg.seed;
    return order;
}

void validate(const RunConfig& cfg) {
    if (cfg.k < 1) throw ConfigError("k must be a positive integer");
    if (!std::isfinite(cfg.r)) throw ConfigError("r must be finite");
    bool keywords = cfg.attr_mode == AttrMode::Keywords;
    if (keywords && cfg.metric != SimilarityMetric::WeightedJaccard)
        throw ConfigError("keyword attributes require the jaccard metric");
    if (!keywords && cfg.metric == SimilarityMetric::WeightedJaccard)
        throw ConfigError("geo attributes require a distance metric");
    if (cfg.lambda < 0) throw ConfigError("lambda must be non-negative");
    if (cfg.node_budget < 1) throw ConfigError("node budget must be positive");
    if (cfg.naive_cap < 1) throw ConfigError("naive cap must be positive");
}

int dispatch(const RunConfig& cfg) {
    validate(cfg);
    AttributedGraph g = load_graph(cfg.graph_path, cfg.attr_path, cfg.attr_mode);
    Threshold t = threshold_for(cfg.metric, cfg.r);
    auto start = Clock::now();

    json report;
    report["command"] = cfg.command;
    report["k"] = cfg.k;
    report["r"] = cfg.r;
    report["n"] = g.size();
    report["edges"] = g.edge_count();
    report["self_loops_dropped"] = g.self_loops_dropped();
    report["duplicate_edges_dropped"] = g.duplicate_edges_dropped();

    if (cfg.command == "enumerate" || cfg.command == "oracle") {
        SearchOptions opts;
        opts.order = resolve_order(cfg, false);
        opts.node_budget = cfg.node_budget;
        opts.naive_cap = cfg.naive_cap;
        opts.threads = threads_from_env();
        EnumResult result;
        if (cfg.command == "oracle") {
            result = brute_force_mkrc(g, cfg.k, t, cfg.metric, cfg.naive_cap);
        } else if (cfg.engine == "advanced") {
            result = advanced_enum(g, cfg.k, t, cfg.metric, opts);
        } else if (cfg.engine == "basic") {
            result = naive_enum(g, cfg.k, t, cfg.metric, true, opts);
        } else if (cfg.engine == "naive") {
            result = naive_enum(g, cfg.k, t, cfg.metric, false, opts);
        } else if (cfg.engine == "clique") {
            result = clique_based_enum(g, cfg.k, t, cfg.metric, opts);
        } else {
            throw ConfigError("unknown engine: " + cfg.engine);
        }
        write_output(cfg.out_path, format_cores(result.cores, g));
        report["engine"] = cfg.command == "oracle" ? "oracle" : cfg.engine;
        report["stats"] = search_stats(result.stats);
        report.update(core_stats(result.cores));
    } else if (cfg.command == "maximum") {
        SearchOptions opts;
        opts.order = resolve_order(cfg, true);
        opts.node_budget = cfg.node_budget;
        MaxResult result = find_maximum(g, cfg.k, t, cfg.metric, cfg.bound, cfg.lambda, opts);
        std::vector<KrCore> cores;
        if (result.best) cores.push_back(*result.best);
        write_output(cfg.out_path, format_cores(cores, g));
        report["bound"] = static_cast<int>(cfg.bound);
        report["stats"] = search_stats(result.stats);
        report.update(core_stats(cores));
    } else if (cfg.command == "bench") {
        std::ostringstream csv;
        csv << "bound,best_size,nodes_visited,bound_cutoffs,early_terminations,wall_ms\n";
        const std::pair<BoundKind, const char*> kinds[] = {{BoundKind::Naive, "naive"},
                                                           {BoundKind::Color, "color"},
                                                           {BoundKind::KCore, "kcore"},
                                                           {BoundKind::KKCore, "kkcore"}};
        for (auto [kind, name] : kinds) {
            SearchOptions opts;
            opts.order = resolve_order(cfg, true);
            opts.node_budget = cfg.node_budget;
            auto t0 = Clock::now();
            MaxResult result = find_maximum(g, cfg.k, t, cfg.metric, kind, cfg.lambda, opts);
            csv << name << ',' << (result.best ? result.best->size() : 0) << ','
                << result.stats.nodes_visited << ',' << result.stats.bound_cutoffs << ','
                << result.stats.early_terminations << ',' << ms_since(t0) << '\n';
        }
        write_output(cfg.out_path, csv.str());
    } else if (cfg.command == "stats") {
        Preprocessed pre = preprocess(g, cfg.k, t, cfg.metric);
        report["dissimilar_edges_deleted"] = pre.report.dissimilar_edges_deleted;
        report["vertices_peeled"] = pre.report.vertices_peeled;
        json comps = json::array();
        for (const auto& inst : pre.components) {
            comps.push_back({{"size", inst.graph.size()},
                             {"edges", inst.graph.edge_count()},
                             {"dissimilar_pairs", inst.index.dissimilar_pair_count()}});
        }
        report["components"] = comps;
        write_output(cfg.out_path, report.dump(2) + "\n");
    } else {
        throw ConfigError("unknown command: " + cfg.command);
    }

    report["wall_ms"] = ms_since(start);
    std::cerr << report.dump() << "\n";
    return 0;
}

}  // namespace

int run(const RunConfig& cfg) {
    try {
        return dispatch(cfg);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace krcore
