#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gdsa/bench.hpp"
#include "gdsa/error.hpp"
#include "gdsa/mcp_server.hpp"
#include "gdsa/property_graph.hpp"
#include "gdsa/subprocess.hpp"

namespace {

int run_serve(const std::string& nodes, const std::string& rels, const std::string& manifest,
              std::int64_t max_rows, int threads) {
    gdsa::LoadOptions options;
    options.manifest_path = manifest;
    gdsa::PropertyGraph graph = gdsa::load_graph(nodes, rels, options);
    gdsa::ToolServer::Options server_options;
    server_options.max_rows = max_rows;
    server_options.threads = threads;
    gdsa::ToolServer server(std::move(graph), server_options);
    server.serve(std::cin, std::cout);
    return 0;
}

int run_bench(const std::string& benchmark, const std::string& mode,
              const std::string& server_cmd, const std::string& traces_path,
              const std::string& report_format, const std::string& out_path,
              double answer_tol) {
    const auto cases = gdsa::load_benchmark(benchmark);
    gdsa::MetricsReport report;
    if (cases.empty()) {
        std::cerr << "benchmark file has no cases\n";
    } else if (mode == "scripted") {
        if (server_cmd.empty()) throw gdsa::Error("--server-cmd is required in scripted mode");
        auto run = gdsa::run_scripted(cases, gdsa::split_command(server_cmd), answer_tol);
        report = std::move(run.report);
    } else if (mode == "adapter") {
        if (traces_path.empty()) throw gdsa::Error("--traces is required in adapter mode");
        const auto traces = gdsa::load_traces(traces_path);
        if (traces.size() != cases.size()) {
            throw gdsa::Error("trace count (" + std::to_string(traces.size()) +
                              ") does not match case count (" + std::to_string(cases.size()) +
                              ")");
        }
        std::vector<gdsa::CaseMetrics> metrics;
        for (std::size_t i = 0; i < cases.size(); ++i) {
            metrics.push_back(gdsa::score_case(cases[i], traces[i], answer_tol));
        }
        report = gdsa::aggregate(metrics);
    } else {
        throw gdsa::Error("--mode must be scripted or adapter");
    }

    std::string text;
    if (report_format == "json") {
        text = cases.empty() ? "{}" : gdsa::report_to_json(report).dump(2);
    } else {
        text = cases.empty() ? "(no cases)" : gdsa::report_to_table(report);
    }
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw gdsa::Error("cannot write " + out_path);
        out << text << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph analytics tool server and benchmark harness"};
    app.require_subcommand(1);

    // serve
    std::string nodes, rels, manifest;
    std::int64_t max_rows = 500;
    int threads = 1;
    auto* serve = app.add_subcommand("serve", "Serve the tool registry over MCP stdio");
    serve->add_option("--nodes", nodes, "Nodes CSV file")->envname("GDS_AGENT_NODES");
    serve->add_option("--rels", rels, "Relationships CSV file")->envname("GDS_AGENT_RELS");
    serve->add_option("--manifest", manifest, "Property type manifest JSON");
    serve->add_option("--max-rows", max_rows, "Default row cap for rendered tables");
    serve->add_option("--threads", threads, "Worker threads for parallelizable algorithms");

    // bench run
    std::string benchmark, mode = "scripted", server_cmd, traces_path;
    std::string report_format = "table", out_path;
    double answer_tol = 1e-3;
    auto* bench = app.add_subcommand("bench", "Benchmark tooling");
    auto* bench_run = bench->add_subcommand("run", "Run a benchmark and report metrics");
    bench_run->add_option("--benchmark", benchmark, "Benchmark JSONL file")->required();
    bench_run->add_option("--mode", mode, "scripted | adapter");
    bench_run->add_option("--server-cmd", server_cmd,
                          "Server command line for scripted mode");
    bench_run->add_option("--traces", traces_path, "Trace JSONL file for adapter mode");
    bench_run->add_option("--report", report_format, "json | table");
    bench_run->add_option("--out", out_path, "Write the report here instead of stdout");
    bench_run->add_option("--answer-tol", answer_tol,
                          "Relative tolerance for numeric answer matching");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*serve) {
            if (nodes.empty() || rels.empty()) {
                std::cerr << "serve: --nodes and --rels are required (or set GDS_AGENT_NODES / "
                             "GDS_AGENT_RELS)\n";
                return 2;
            }
            return run_serve(nodes, rels, manifest, max_rows, threads);
        }
        if (*bench_run) {
            return run_bench(benchmark, mode, server_cmd, traces_path, report_format, out_path,
                             answer_tol);
        }
        std::cerr << "nothing to do\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
