#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gdsa/projection.hpp"
#include "gdsa/property_graph.hpp"
#include "gdsa/table.hpp"

namespace gdsa {

/// MCP tool description: name, long-form description, JSON-Schema object
/// with `properties` and `required`.
struct ToolSpec {
    std::string name;
    std::string description;
    nlohmann::json input_schema;
};

/// The full registry (43 tools) in listing order.
std::vector<ToolSpec> build_tool_specs();

/// Validates `args` against a tool's inputSchema. Returns an error message
/// naming the offending key, or "" when valid.
std::string validate_arguments(const nlohmann::json& schema, const nlohmann::json& args);

struct ToolResult {
    std::vector<std::string> content;
    bool is_error = false;
    std::int64_t row_count_total = 0;
    bool truncated = false;
};

/// Serves the tool registry over newline-delimited JSON-RPC 2.0 (the MCP
/// stdio transport). Requests are handled strictly in arrival order; the
/// graph and its default projections are shared read-only.
class ToolServer {
public:
    struct Options {
        std::int64_t max_rows = 500;
        int threads = 1;
        std::string server_name = "graph-tools";
        std::string server_version = "0.1.0";
    };

    ToolServer(PropertyGraph graph, Options options);
    ToolServer(const ToolServer&) = delete;
    ToolServer& operator=(const ToolServer&) = delete;

    const std::vector<ToolSpec>& specs() const { return specs_; }
    const ToolSpec* find_spec(const std::string& name) const;

    ToolResult call_tool(const std::string& name, const nlohmann::json& arguments);

    /// One JSON-RPC message in, at most one response out (notifications
    /// produce none). Never throws.
    std::optional<std::string> handle_line(const std::string& line);

    /// Reads newline-delimited requests until EOF.
    void serve(std::istream& in, std::ostream& out);

    const PropertyGraph& graph() const { return graph_; }

private:
    using Handler = std::function<ToolResult(const nlohmann::json&)>;

    std::shared_ptr<const ProjectedGraph> default_projection(Orientation orientation);
    std::shared_ptr<const ProjectedGraph> projection_for(const nlohmann::json& args,
                                                         Orientation default_orientation);
    nlohmann::json dispatch(const nlohmann::json& request);

    PropertyGraph graph_;
    Options options_;
    std::vector<ToolSpec> specs_;
    std::map<std::string, Handler> handlers_;
    std::shared_ptr<const ProjectedGraph> directed_;
    std::shared_ptr<const ProjectedGraph> undirected_;
};

}  // namespace gdsa
