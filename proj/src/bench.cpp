#include "gdsa/bench.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "gdsa/error.hpp"
#include "gdsa/property_graph.hpp"
#include "gdsa/subprocess.hpp"

namespace gdsa {

using nlohmann::json;

std::string strip_tool_prefix(const std::string& name) {
    if (name.rfind("mcp__", 0) != 0) return name;
    const std::size_t sep = name.find("__", 5);
    if (sep == std::string::npos) return name;
    return name.substr(sep + 2);
}

std::vector<BenchmarkCase> load_benchmark(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open benchmark file: " + path);
    std::vector<BenchmarkCase> cases;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty()) continue;
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw Error(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
        BenchmarkCase c;
        c.question = j.value("question", std::string());
        if (!j.contains("expected_tool_calls") || !j.at("expected_tool_calls").is_array() ||
            j.at("expected_tool_calls").empty()) {
            throw Error(path + ":" + std::to_string(line_no) +
                        ": expected_tool_calls must be a non-empty array");
        }
        for (const auto& name : j.at("expected_tool_calls")) {
            c.raw_expected_tool_calls.push_back(name.get<std::string>());
            c.expected_tool_calls.push_back(strip_tool_prefix(name.get<std::string>()));
        }
        if (j.contains("expected_tool_params")) {
            for (auto it = j.at("expected_tool_params").begin();
                 it != j.at("expected_tool_params").end(); ++it) {
                const std::string tool = strip_tool_prefix(it.key());
                if (std::find(c.expected_tool_calls.begin(), c.expected_tool_calls.end(), tool) ==
                    c.expected_tool_calls.end()) {
                    throw Error(path + ":" + std::to_string(line_no) + ": params key '" + tool +
                                "' is not an expected call");
                }
                c.expected_tool_params[tool] = it.value();
            }
        }
        if (j.contains("expected_answers")) {
            if (j.at("expected_answers").is_string()) {
                c.expected_answers.push_back(j.at("expected_answers").get<std::string>());
            } else {
                for (const auto& item : j.at("expected_answers")) {
                    c.expected_answers.push_back(item.get<std::string>());
                }
            }
        }
        cases.push_back(std::move(c));
    }
    return cases;
}

namespace {

std::set<std::string> unique_stripped(const std::vector<std::string>& names) {
    std::set<std::string> out;
    for (const auto& n : names) out.insert(strip_tool_prefix(n));
    return out;
}

}  // namespace

double tool_precision(const std::vector<std::string>& actual,
                      const std::vector<std::string>& expected) {
    const auto ua = unique_stripped(actual);
    if (ua.empty()) return 0.0;  // nothing called scores worst
    const auto ue = unique_stripped(expected);
    std::int64_t unexpected = 0;
    for (const auto& name : ua) {
        if (!ue.count(name)) ++unexpected;
    }
    return 1.0 - static_cast<double>(unexpected) / static_cast<double>(ua.size());
}

double tool_recall(const std::vector<std::string>& actual,
                   const std::vector<std::string>& expected) {
    const auto ua = unique_stripped(actual);
    const auto ue = unique_stripped(expected);
    if (ue.empty()) return 0.0;
    std::int64_t correct = 0;
    for (const auto& name : ue) {
        if (ua.count(name)) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(ue.size());
}

double tool_f1(double precision, double recall) {
    if (precision + recall == 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

double call_efficiency(const std::vector<std::string>& actual_all_calls,
                       const std::vector<std::string>& expected) {
    if (actual_all_calls.empty()) return 0.0;
    const auto ua = unique_stripped(actual_all_calls);
    const auto ue = unique_stripped(expected);
    std::int64_t correct = 0;
    for (const auto& name : ua) {
        if (ue.count(name)) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(actual_all_calls.size());
}

namespace {

std::string normalize_text(const std::string& s) {
    std::string out;
    bool last_space = true;
    for (char c : s) {
        const unsigned char uc = static_cast<unsigned char>(c);
        if (std::isspace(uc)) {
            if (!last_space) out += ' ';
            last_space = true;
        } else {
            out += static_cast<char>(std::tolower(uc));
            last_space = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

bool is_number_char(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' ||
           c == 'e' || c == 'E';
}

/// Splits text into numeric tokens (parsed) and word tokens (lowercased).
void tokenize(const std::string& text, std::vector<double>& numbers,
              std::vector<std::string>& words) {
    std::size_t i = 0;
    while (i < text.size()) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isdigit(c) ||
            ((text[i] == '-' || text[i] == '+') && i + 1 < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            std::size_t j = i;
            while (j < text.size() && is_number_char(text[j])) ++j;
            // trim trailing punctuation that is not part of a number
            std::string tok = text.substr(i, j - i);
            while (!tok.empty() && (tok.back() == '.' || tok.back() == 'e' || tok.back() == 'E' ||
                                    tok.back() == '+' || tok.back() == '-')) {
                tok.pop_back();
                --j;
            }
            try {
                numbers.push_back(std::stod(tok));
            } catch (...) {
            }
            i = j;
        } else if (std::isalpha(c)) {
            std::size_t j = i;
            std::string word;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '\'' || text[j] == '&')) {
                word += static_cast<char>(std::tolower(static_cast<unsigned char>(text[j])));
                ++j;
            }
            words.push_back(word);
            i = j;
        } else {
            ++i;
        }
    }
}

bool numbers_match(double expected, double actual, double rel_tolerance) {
    if (expected == 0.0) return std::abs(actual) <= rel_tolerance;
    return std::abs(actual - expected) <= rel_tolerance * std::abs(expected);
}

}  // namespace

double answer_match(const std::string& final_answer,
                    const std::vector<std::string>& expected_answers, double rel_tolerance) {
    if (expected_answers.empty()) return 0.0;
    const std::string answer_norm = normalize_text(final_answer);
    std::vector<double> answer_numbers;
    std::vector<std::string> answer_words;
    tokenize(final_answer, answer_numbers, answer_words);

    std::int64_t matched = 0;
    for (const auto& item : expected_answers) {
        std::vector<double> numbers;
        std::vector<std::string> words;
        tokenize(item, numbers, words);
        bool ok = true;
        for (const auto& word : words) {
            if (answer_norm.find(word) == std::string::npos) {
                ok = false;
                break;
            }
        }
        if (ok) {
            for (double x : numbers) {
                bool found = false;
                for (double y : answer_numbers) {
                    if (numbers_match(x, y, rel_tolerance)) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) ++matched;
    }
    return static_cast<double>(matched) / static_cast<double>(expected_answers.size());
}

namespace {

bool value_matches(const json& expected, const json& actual) {
    if (expected.is_number() && actual.is_number()) {
        const double e = expected.get<double>();
        const double a = actual.get<double>();
        if (e == 0.0) return std::abs(a) <= 1e-9;
        return std::abs(a - e) <= 1e-9 * std::abs(e);
    }
    if (expected.is_array() && actual.is_array()) {
        if (expected.size() != actual.size()) return false;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (!value_matches(expected[i], actual[i])) return false;
        }
        return true;
    }
    if (expected.is_object() && actual.is_object()) {
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            if (!actual.contains(it.key()) || !value_matches(it.value(), actual.at(it.key()))) {
                return false;
            }
        }
        return true;
    }
    return expected == actual;
}

}  // namespace

double param_match(const ToolCallTrace& trace,
                   const std::map<std::string, nlohmann::json>& expected_tool_params) {
    std::int64_t total = 0, satisfied = 0;
    for (const auto& [tool, params] : expected_tool_params) {
        if (!params.is_object()) continue;
        for (auto it = params.begin(); it != params.end(); ++it) {
            ++total;
            for (const auto& event : trace.events) {
                if (strip_tool_prefix(event.tool_name) != tool) continue;
                if (event.arguments.is_object() && event.arguments.contains(it.key()) &&
                    value_matches(it.value(), event.arguments.at(it.key()))) {
                    ++satisfied;
                    break;
                }
            }
        }
    }
    if (total == 0) return 1.0;
    return static_cast<double>(satisfied) / static_cast<double>(total);
}

CaseMetrics score_case(const BenchmarkCase& c, const ToolCallTrace& trace,
                       double answer_tolerance) {
    std::vector<std::string> actual;
    for (const auto& event : trace.events) actual.push_back(event.tool_name);
    CaseMetrics m;
    m.tool_precision = tool_precision(actual, c.expected_tool_calls);
    m.tool_recall = tool_recall(actual, c.expected_tool_calls);
    m.tool_f1 = tool_f1(m.tool_precision, m.tool_recall);
    m.call_efficiency = call_efficiency(actual, c.expected_tool_calls);
    m.answer_match = answer_match(trace.final_answer, c.expected_answers, answer_tolerance);
    m.param_match = param_match(trace, c.expected_tool_params);
    m.turns = trace.total_turns;
    m.tokens = trace.tokens;
    return m;
}

Aggregate aggregate_metric(const std::vector<double>& values) {
    if (values.empty()) throw Error("cannot aggregate zero cases");
    Aggregate a;
    a.min = values[0];
    a.max = values[0];
    double sum = 0.0;
    for (double v : values) {
        sum += v;
        a.min = std::min(a.min, v);
        a.max = std::max(a.max, v);
    }
    a.mean = sum / static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - a.mean) * (v - a.mean);
    a.std_dev = std::sqrt(var / static_cast<double>(values.size()));
    std::vector<double> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    a.median = n % 2 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
    return a;
}

MetricsReport aggregate(const std::vector<CaseMetrics>& per_case) {
    if (per_case.empty()) throw Error("cannot aggregate an empty metrics list");
    MetricsReport report;
    report.per_case = per_case;
    auto collect = [&](const char* name, auto getter) {
        std::vector<double> values;
        values.reserve(per_case.size());
        for (const auto& m : per_case) values.push_back(getter(m));
        report.aggregates[name] = aggregate_metric(values);
    };
    collect("tool_precision", [](const CaseMetrics& m) { return m.tool_precision; });
    collect("tool_recall", [](const CaseMetrics& m) { return m.tool_recall; });
    collect("tool_f1", [](const CaseMetrics& m) { return m.tool_f1; });
    collect("call_efficiency", [](const CaseMetrics& m) { return m.call_efficiency; });
    collect("answer_match", [](const CaseMetrics& m) { return m.answer_match; });
    collect("param_match", [](const CaseMetrics& m) { return m.param_match; });
    collect("turns", [](const CaseMetrics& m) { return static_cast<double>(m.turns); });
    return report;
}

json report_to_json(const MetricsReport& report) {
    json cases = json::array();
    for (const auto& m : report.per_case) {
        json c{{"tool_precision", m.tool_precision},
               {"tool_recall", m.tool_recall},
               {"tool_f1", m.tool_f1},
               {"call_efficiency", m.call_efficiency},
               {"answer_match", m.answer_match},
               {"param_match", m.param_match},
               {"turns", m.turns}};
        if (m.tokens) {
            c["tokens"] = {{"input", m.tokens->input},
                           {"output", m.tokens->output},
                           {"cache", m.tokens->cache}};
        }
        cases.push_back(std::move(c));
    }
    json aggregates = json::object();
    for (const auto& [name, a] : report.aggregates) {
        aggregates[name] = {{"mean", a.mean},
                            {"std", a.std_dev},
                            {"median", a.median},
                            {"min", a.min},
                            {"max", a.max}};
    }
    return json{{"cases", std::move(cases)}, {"aggregates", std::move(aggregates)}};
}

std::string report_to_table(const MetricsReport& report) {
    Table t;
    t.columns = {"Metric", "Mean ± Std", "Median", "Min", "Max"};
    const std::vector<std::pair<std::string, std::string>> rows = {
        {"tool_precision", "Tool Precision"}, {"tool_recall", "Tool Recall"},
        {"tool_f1", "Tool F1"},               {"call_efficiency", "Call Efficiency"},
        {"answer_match", "Answer Match"},     {"param_match", "Param Match"},
        {"turns", "Turns"}};
    for (const auto& [key, label] : rows) {
        auto it = report.aggregates.find(key);
        if (it == report.aggregates.end()) continue;
        const Aggregate& a = it->second;
        char mean_std[64];
        std::snprintf(mean_std, sizeof(mean_std), "%.3f ± %.3f", a.mean, a.std_dev);
        char median[32], mn[32], mx[32];
        std::snprintf(median, sizeof(median), "%.3f", a.median);
        std::snprintf(mn, sizeof(mn), "%.3f", a.min);
        std::snprintf(mx, sizeof(mx), "%.3f", a.max);
        t.rows.push_back({label, std::string(mean_std), std::string(median), std::string(mn),
                          std::string(mx)});
    }
    return render_table(t, std::nullopt);
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

ScriptedRun run_scripted(const std::vector<BenchmarkCase>& cases,
                         const std::vector<std::string>& server_argv, double answer_tolerance) {
    ScriptedRun run;
    if (cases.empty()) {
        return run;  // empty report, no subprocess
    }
    Subprocess server(server_argv);
    std::int64_t next_id = 1;

    auto request = [&](const std::string& method, json params) -> json {
        json req{{"jsonrpc", "2.0"}, {"id", next_id++}, {"method", method}};
        if (!params.is_null()) req["params"] = std::move(params);
        server.write_line(req.dump());
        auto line = server.read_line();
        if (!line) throw Error("server closed the stream mid-run");
        return json::parse(*line);
    };

    const json init = request("initialize", json{{"protocolVersion", "2024-11-05"},
                                                 {"capabilities", json::object()},
                                                 {"clientInfo",
                                                  {{"name", "bench"}, {"version", "0"}}}});
    if (!init.contains("result")) throw Error("initialize failed: " + init.dump());
    server.write_line(json{{"jsonrpc", "2.0"}, {"method", "notifications/initialized"}}.dump());

    std::vector<CaseMetrics> metrics;
    for (const auto& c : cases) {
        ToolCallTrace trace;
        std::string answer;
        std::int64_t turn = 0;
        for (const auto& tool : c.expected_tool_calls) {
            json arguments = json::object();
            auto it = c.expected_tool_params.find(tool);
            if (it != c.expected_tool_params.end()) arguments = it->second;
            const json response =
                request("tools/call", json{{"name", tool}, {"arguments", arguments}});
            std::string text;
            bool is_error = true;
            if (response.contains("result")) {
                const json& result = response.at("result");
                is_error = result.value("isError", false);
                if (result.contains("content")) {
                    for (const auto& block : result.at("content")) {
                        if (block.value("type", "") == "text") {
                            if (!text.empty()) text += "\n";
                            text += block.value("text", "");
                        }
                    }
                }
            }
            TraceEvent event;
            event.turn_index = turn;
            event.tool_name = tool;
            event.arguments = arguments;
            event.result_digest = fnv1a_hex(text);
            event.is_error = is_error;
            trace.events.push_back(std::move(event));
            turn += 2;  // the call and its response are one turn each
            if (!answer.empty()) answer += "\n";
            answer += text;
        }
        trace.final_answer = std::move(answer);
        trace.total_turns = turn + 1;  // final user-facing answer
        metrics.push_back(score_case(c, trace, answer_tolerance));
        run.traces.push_back(std::move(trace));
    }
    server.close_stdin();
    run.report = aggregate(metrics);
    return run;
}

std::vector<ToolCallTrace> load_traces(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open trace file: " + path);
    std::vector<ToolCallTrace> traces;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty()) continue;
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw Error(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
        ToolCallTrace trace;
        std::int64_t turn = 0;
        if (j.contains("events")) {
            for (const auto& e : j.at("events")) {
                TraceEvent event;
                event.turn_index = e.value("turn_index", turn);
                event.tool_name = e.value("tool_name", std::string());
                event.arguments = e.value("arguments", json::object());
                event.result_digest = fnv1a_hex(e.value("result", std::string()));
                event.is_error = e.value("is_error", false);
                trace.events.push_back(std::move(event));
                turn += 2;
            }
        }
        trace.final_answer = j.value("final_answer", std::string());
        trace.total_turns = j.value("turns", turn + 1);
        if (j.contains("tokens") && j.at("tokens").is_object()) {
            TokenCounts tokens;
            tokens.input = j.at("tokens").value("input", std::int64_t{0});
            tokens.output = j.at("tokens").value("output", std::int64_t{0});
            tokens.cache = j.at("tokens").value("cache", std::int64_t{0});
            trace.tokens = tokens;
        }
        traces.push_back(std::move(trace));
    }
    return traces;
}

}  // namespace gdsa
