#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gdsa/table.hpp"

namespace gdsa {

/// One benchmark question plus expectations. Tool names are stored with the
/// mcp__<server>__ prefix stripped; the original spellings are kept around.
struct BenchmarkCase {
    std::string question;
    std::vector<std::string> expected_tool_calls;      // stripped
    std::vector<std::string> raw_expected_tool_calls;  // as loaded
    std::map<std::string, nlohmann::json> expected_tool_params;
    std::vector<std::string> expected_answers;
};

/// Loads a JSONL benchmark file (fields: question, expected_tool_calls,
/// expected_tool_params, expected_answers). Validates that every params key
/// names an expected call.
std::vector<BenchmarkCase> load_benchmark(const std::string& path);

/// "mcp__<server>__name" -> "name"; other names pass through.
std::string strip_tool_prefix(const std::string& name);

struct TraceEvent {
    std::int64_t turn_index = 0;
    std::string tool_name;
    nlohmann::json arguments;
    std::string result_digest;  // stable FNV-1a hex of the result text
    bool is_error = false;
};

struct TokenCounts {
    std::int64_t input = 0;
    std::int64_t output = 0;
    std::int64_t cache = 0;
};

/// Ordered record of one question's tool usage. Each tool call counts one
/// turn, each tool response one, and the final answer one.
struct ToolCallTrace {
    std::vector<TraceEvent> events;
    std::string final_answer;
    std::int64_t total_turns = 0;
    std::optional<TokenCounts> tokens;
};

// Per-case metrics.
double tool_precision(const std::vector<std::string>& actual,
                      const std::vector<std::string>& expected);
double tool_recall(const std::vector<std::string>& actual,
                   const std::vector<std::string>& expected);
double tool_f1(double precision, double recall);
double call_efficiency(const std::vector<std::string>& actual_all_calls,
                       const std::vector<std::string>& expected);
/// Items match when their non-numeric tokens appear in the normalized answer
/// and every numeric token matches some answer number within rel_tolerance.
double answer_match(const std::string& final_answer,
                    const std::vector<std::string>& expected_answers,
                    double rel_tolerance = 1e-3);
/// Fraction of expected (tool, key, value) triples satisfied by some call.
double param_match(const ToolCallTrace& trace,
                   const std::map<std::string, nlohmann::json>& expected_tool_params);

struct CaseMetrics {
    double tool_precision = 0.0;
    double tool_recall = 0.0;
    double tool_f1 = 0.0;
    double call_efficiency = 0.0;
    double answer_match = 0.0;
    double param_match = 0.0;
    std::int64_t turns = 0;
    std::optional<TokenCounts> tokens;
};

CaseMetrics score_case(const BenchmarkCase& c, const ToolCallTrace& trace,
                       double answer_tolerance = 1e-3);

struct Aggregate {
    double mean = 0.0;
    double std_dev = 0.0;  // population
    double median = 0.0;
    double min = 0.0;
    double max = 0.0;
};

Aggregate aggregate_metric(const std::vector<double>& values);

struct MetricsReport {
    std::vector<CaseMetrics> per_case;
    std::map<std::string, Aggregate> aggregates;  // metric name -> stats
};

MetricsReport aggregate(const std::vector<CaseMetrics>& per_case);

nlohmann::json report_to_json(const MetricsReport& report);
std::string report_to_table(const MetricsReport& report);

/// Drives a live server subprocess through each case's expected calls with
/// the expected parameters, in order. The final answer is the concatenation
/// of the result texts, so a correct server scores 1.0 on the tool metrics
/// by construction.
struct ScriptedRun {
    std::vector<ToolCallTrace> traces;
    MetricsReport report;
};

ScriptedRun run_scripted(const std::vector<BenchmarkCase>& cases,
                         const std::vector<std::string>& server_argv,
                         double answer_tolerance = 1e-3);

/// Scores externally recorded traces (adapter mode). The JSONL file carries
/// one object per case: {"events": [{"tool_name", "arguments", "result",
/// "is_error"}...], "final_answer": "...", "tokens": {...}?}.
std::vector<ToolCallTrace> load_traces(const std::string& path);

std::string fnv1a_hex(const std::string& data);

}  // namespace gdsa
