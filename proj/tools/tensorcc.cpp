// Command-line front door: clustering coefficients of graphs and of
// tensor products, implicit closed forms vs materialized products, a
// verification battery, and an implicit-vs-explicit benchmark.

#include <cstdint>
#include <iostream>
#include <new>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tcc/bench.hpp"
#include "tcc/closed_forms.hpp"
#include "tcc/errors.hpp"
#include "tcc/generators.hpp"
#include "tcc/graph_io.hpp"
#include "tcc/parallel.hpp"
#include "tcc/report_json.hpp"
#include "tcc/triangles.hpp"
#include "tcc/verify.hpp"

namespace {

// A source is a file path or a generator spec; --gen entries are always
// treated as generator specs.
std::vector<tcc::GraphSource> resolve_sources(const std::vector<std::string>& positional,
                                              const std::vector<std::string>& gens,
                                              std::size_t need) {
    std::vector<tcc::GraphSource> sources;
    for (const auto& s : positional) sources.push_back(tcc::load_source(s, false));
    for (const auto& s : gens) sources.push_back(tcc::load_source(s, true));
    if (sources.size() != need)
        throw tcc::InputError("expected " + std::to_string(need) +
                              " graph source(s), got " + std::to_string(sources.size()));
    return sources;
}

tcc::ProductMode parse_mode(const std::string& mode) {
    if (mode == "implicit") return tcc::ProductMode::Implicit;
    if (mode == "explicit") return tcc::ProductMode::Explicit;
    return tcc::ProductMode::Both;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clustering coefficients of tensor products of graphs"};
    app.require_subcommand(1);

    std::vector<std::string> positional;
    std::vector<std::string> gens;
    int workers = tcc::default_workers();
    std::int64_t budget = tcc::kDefaultEdgeBudget;
    bool exact = false;
    bool per_vertex = false;
    bool json = false;
    std::string mode = "implicit";
    std::uint64_t seed = 7;
    std::vector<tcc::Vertex> sizes = tcc::kDefaultBenchSizes;
    int repetitions = 5;

    auto add_source_options = [&](CLI::App* cmd, std::size_t max_positional) {
        cmd->add_option("sources", positional,
                        "graph sources: edge-list files or generator specs")
            ->expected(0, static_cast<int>(max_positional));
        cmd->add_option("--gen", gens, "generator spec, e.g. complete:4 or er:10,0.5,42");
    };
    auto add_workers = [&](CLI::App* cmd) {
        cmd->add_option("--workers", workers, "worker threads (results are identical for any count)");
    };
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget", budget, "edge budget for materialized products");
    };

    CLI::App* cc = app.add_subcommand("cc", "clustering coefficients of one graph (JSON report)");
    add_source_options(cc, 1);
    add_workers(cc);
    cc->add_flag("--exact", exact, "add exact num/den strings");
    cc->add_flag("--per-vertex", per_vertex, "add per-vertex triangle and local cc arrays");

    CLI::App* product =
        app.add_subcommand("product-cc", "clustering coefficient of a tensor product (JSON report)");
    add_source_options(product, 2);
    add_workers(product);
    add_budget(product);
    product->add_option("--mode", mode, "implicit | explicit | both")
        ->check(CLI::IsMember({"implicit", "explicit", "both"}));
    product->add_flag("--exact", exact, "add exact num/den strings");

    CLI::App* verify =
        app.add_subcommand("verify", "check the closed forms and bounds against the materialized product");
    add_source_options(verify, 2);
    add_workers(verify);
    add_budget(verify);
    verify->add_flag("--json", json, "JSON report instead of text");

    CLI::App* bench =
        app.add_subcommand("bench", "time implicit vs explicit evaluation on random factor pairs");
    bench->add_option("--sizes", sizes, "factor sizes");
    bench->add_option("--reps", repetitions, "repetitions per measurement");
    bench->add_option("--seed", seed, "random corpus seed");
    add_workers(bench);
    add_budget(bench);
    bench->add_flag("--json", json, "JSON output instead of the text table");

    CLI::App* generate = app.add_subcommand("generate", "emit a generated graph as edge-list text");
    std::string family_spec;
    generate->add_option("spec", family_spec, "family spec, e.g. complete:3 or paley:13")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(cc)) {
            const auto sources = resolve_sources(positional, gens, 1);
            const tcc::CcReport rep = tcc::cc_report(sources[0].graph, workers);
            std::cout << tcc::write_report(
                tcc::cc_report_json(sources[0], rep, exact, per_vertex));
        } else if (app.got_subcommand(product)) {
            const auto sources = resolve_sources(positional, gens, 2);
            const auto product_mode = parse_mode(mode);
            const tcc::ProductCcReport rep = tcc::product_cc_report(
                sources[0].graph, sources[1].graph, product_mode, exact, budget, workers);
            std::cout << tcc::write_report(tcc::product_report_json(
                sources[0].origin, sources[1].origin, product_mode, rep));
        } else if (app.got_subcommand(verify)) {
            const auto sources = resolve_sources(positional, gens, 2);
            tcc::VerifyOptions options;
            options.edge_budget = budget;
            options.workers = workers;
            const tcc::VerifyResult result =
                tcc::run_verify(sources[0].graph, sources[1].graph, options);
            if (json) {
                std::cout << tcc::write_report(tcc::verify_report_json(
                    sources[0].origin, sources[1].origin, result));
            } else {
                std::cout << "verify G=" << sources[0].origin
                          << " H=" << sources[1].origin << "\n"
                          << tcc::render_verify_text(result);
            }
            return result.all_passed() ? 0 : 1;
        } else if (app.got_subcommand(bench)) {
            const tcc::BenchResult result =
                tcc::run_bench(sizes, repetitions, seed, workers, budget);
            std::cout << (json ? tcc::render_bench_json(result)
                               : tcc::render_bench_text(result));
        } else if (app.got_subcommand(generate)) {
            std::cout << tcc::write_edge_list(tcc::from_family_spec(family_spec));
        }
    } catch (const tcc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
