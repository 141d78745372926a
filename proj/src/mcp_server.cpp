#include "gdsa/mcp_server.hpp"

#include <cmath>
#include <iostream>
#include <numeric>
#include <set>

#include "gdsa/centrality.hpp"
#include "gdsa/community.hpp"
#include "gdsa/error.hpp"
#include "gdsa/paths.hpp"
#include "gdsa/similarity.hpp"

namespace gdsa {

using nlohmann::json;

namespace {

bool integral_number(const json& v) {
    if (v.is_number_integer() || v.is_number_unsigned()) return true;
    if (v.is_number_float()) {
        const double d = v.get<double>();
        return std::floor(d) == d;
    }
    return false;
}

bool matches_type(const json& value, const std::string& type) {
    if (type == "string") return value.is_string();
    if (type == "integer") return integral_number(value);
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "array") return value.is_array();
    if (type == "object") return value.is_object();
    return true;
}

}  // namespace

std::string validate_arguments(const json& schema, const json& args) {
    if (!args.is_object()) return "arguments must be a JSON object";
    if (schema.contains("required")) {
        for (const auto& req : schema.at("required")) {
            const std::string key = req.get<std::string>();
            if (!args.contains(key)) return "missing required argument: " + key;
        }
    }
    if (!schema.contains("properties")) return "";
    const json& props = schema.at("properties");
    for (auto it = args.begin(); it != args.end(); ++it) {
        if (!props.contains(it.key())) continue;  // extra keys pass through
        const json& decl = props.at(it.key());
        if (!decl.contains("type")) continue;
        const std::string type = decl.at("type").get<std::string>();
        // sourceNodes and similar accept a bare string where an array is declared
        if (type == "array" && it.value().is_string() &&
            (it.key() == "sourceNodes" || it.key() == "targetNodes" || it.key() == "nodes")) {
            continue;
        }
        if (!matches_type(it.value(), type)) {
            return "argument '" + it.key() + "' must be a " + type;
        }
    }
    return "";
}

namespace {

/// Typed argument access with contract-style error messages.
class Args {
public:
    explicit Args(const json& j) : j_(j) {}

    std::string str(const std::string& key) const {
        return j_.at(key).get<std::string>();
    }
    std::optional<std::string> opt_str(const std::string& key) const {
        if (!j_.contains(key) || j_.at(key).is_null()) return std::nullopt;
        return j_.at(key).get<std::string>();
    }
    std::int64_t opt_int(const std::string& key, std::int64_t fallback) const {
        if (!j_.contains(key) || j_.at(key).is_null()) return fallback;
        return to_int(j_.at(key));
    }
    std::optional<std::int64_t> opt_int(const std::string& key) const {
        if (!j_.contains(key) || j_.at(key).is_null()) return std::nullopt;
        return to_int(j_.at(key));
    }
    double opt_num(const std::string& key, double fallback) const {
        if (!j_.contains(key) || j_.at(key).is_null()) return fallback;
        return j_.at(key).get<double>();
    }
    /// Accepts a bare string or an array of strings.
    std::vector<std::string> str_list(const std::string& key) const {
        std::vector<std::string> out;
        const json& v = j_.at(key);
        if (v.is_string()) {
            out.push_back(v.get<std::string>());
            return out;
        }
        for (const auto& item : v) {
            if (!item.is_string()) throw Error("argument '" + key + "' must contain strings");
            out.push_back(item.get<std::string>());
        }
        return out;
    }
    std::optional<std::vector<std::string>> opt_str_list(const std::string& key) const {
        if (!j_.contains(key) || j_.at(key).is_null()) return std::nullopt;
        return str_list(key);
    }
    bool has(const std::string& key) const {
        return j_.contains(key) && !j_.at(key).is_null();
    }
    const json& raw() const { return j_; }

private:
    static std::int64_t to_int(const json& v) {
        if (v.is_number_float()) return static_cast<std::int64_t>(v.get<double>());
        return v.get<std::int64_t>();
    }
    const json& j_;
};

std::string render_key_list(const std::vector<std::pair<std::string, ValueType>>& keys) {
    json arr = json::array();
    for (const auto& [key, type] : keys) arr.push_back(key + " (" + type_name(type) + ")");
    return arr.dump(2);
}

}  // namespace

ToolServer::ToolServer(PropertyGraph graph, Options options)
    : graph_(std::move(graph)), options_(std::move(options)), specs_(build_tool_specs()) {
    // --- shared helpers ----------------------------------------------------

    auto display_name = [this](const ProjectedGraph& pg, std::int64_t v,
                               const std::string& identifier) -> std::string {
        const Node& node = graph_.node(pg.original_id(v));
        auto it = node.properties.find(identifier);
        return it == node.properties.end() ? std::string() : value_to_string(it->second);
    };

    auto resolve_projected = [this](const ProjectedGraph& pg, const std::string& identifier,
                                    const std::vector<std::string>& values) {
        const auto originals = graph_.resolve_nodes(identifier, values);
        std::vector<std::int64_t> out;
        out.reserve(originals.size());
        for (std::size_t i = 0; i < originals.size(); ++i) {
            const std::int64_t p = pg.projected_id(originals[i]);
            if (p < 0) throw Error("node '" + values[i] + "' is not part of the projection");
            out.push_back(p);
        }
        return out;
    };

    auto max_rows_for = [this](const Args& args) -> std::optional<std::int64_t> {
        const std::int64_t cap = args.opt_int("maxResults", options_.max_rows);
        if (cap < 0) return std::nullopt;  // negative lifts the cap
        return cap;
    };

    auto table_result = [](const Table& table, std::optional<std::int64_t> max_rows) {
        ToolResult result;
        result.row_count_total = static_cast<std::int64_t>(table.rows.size());
        result.truncated = max_rows && result.row_count_total > *max_rows;
        result.content.push_back(render_table(table, max_rows));
        return result;
    };

    auto weight_config = [](const Args& args) {
        WeightConfig weight;
        weight.relationship_weight_property = args.opt_str("relationshipWeightProperty");
        return weight;
    };

    // Score/community-style tables with the optional `nodes` output filter.
    auto filtered_rows = [resolve_projected](const ProjectedGraph& pg, const Args& args,
                                             const std::string& identifier, Table& table) {
        auto filter = args.opt_str_list("nodes");
        if (!filter) return;
        std::set<std::int64_t> keep;
        for (std::int64_t v : resolve_projected(pg, identifier, *filter)) keep.insert(v);
        Table out;
        out.columns = table.columns;
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            // column 0 is always the original node id for filterable tables
            const std::int64_t orig = std::get<std::int64_t>(table.rows[i][0]);
            const std::int64_t proj = pg.projected_id(orig);
            if (proj >= 0 && keep.count(proj)) {
                out.rows.push_back(table.rows[i]);
                out.index.push_back(table.index.empty() ? static_cast<std::int64_t>(i)
                                                        : table.index[i]);
            }
        }
        table = std::move(out);
    };

    auto score_table = [display_name](const ProjectedGraph& pg,
                                      const std::vector<ScoreRow>& rows,
                                      const std::string& identifier,
                                      const char* score_column = "score") {
        Table t;
        t.columns = {"nodeId", score_column, "nodeName"};
        for (const auto& row : rows) {
            t.rows.push_back({pg.original_id(row.node_id), row.score,
                              display_name(pg, row.node_id, identifier)});
        }
        return t;
    };

    auto community_table = [display_name](const ProjectedGraph& pg,
                                          const std::vector<CommunityRow>& rows,
                                          const std::string& identifier,
                                          const char* id_column = "communityId") {
        Table t;
        t.columns = {"nodeId", id_column, "nodeName"};
        for (const auto& row : rows) {
            t.rows.push_back({pg.original_id(row.node_id), row.community_id,
                              display_name(pg, row.node_id, identifier)});
        }
        return t;
    };

    auto path_table = [display_name](const ProjectedGraph& pg,
                                     const std::vector<PathResult>& paths,
                                     const std::string& identifier) {
        Table t;
        t.columns = {"costs", "nodeIds", "path"};
        for (const auto& p : paths) {
            std::vector<std::int64_t> originals;
            std::vector<std::string> names;
            for (std::int64_t v : p.node_ids) {
                originals.push_back(pg.original_id(v));
                names.push_back(display_name(pg, v, identifier));
            }
            t.index.push_back(p.index);
            t.rows.push_back({format_float_list(p.costs), format_int_list(originals),
                              format_string_list(names)});
        }
        return t;
    };

    auto edges_table = [display_name](const ProjectedGraph& pg,
                                      const std::vector<TreeEdge>& edges,
                                      const std::string& identifier) {
        Table t;
        t.columns = {"sourceNodeId", "targetNodeId", "weight", "sourceName", "targetName"};
        for (const auto& e : edges) {
            t.rows.push_back({pg.original_id(e.source), pg.original_id(e.target), e.weight,
                              display_name(pg, e.source, identifier),
                              display_name(pg, e.target, identifier)});
        }
        return t;
    };

    auto assignment_from = [](const ProjectedGraph& pg, const std::string& key) {
        const auto& column = pg.node_scalar_column(key);
        std::vector<std::int64_t> assignment(column.size());
        for (std::size_t v = 0; v < column.size(); ++v) {
            if (is_absent(column[v])) {
                throw Error("community property '" + key + "' is absent on node " +
                            std::to_string(v));
            }
            const double rounded = std::nearbyint(column[v]);
            if (std::abs(column[v] - rounded) > 1e-9) {
                throw Error("community property '" + key + "' must hold integer ids");
            }
            assignment[v] = static_cast<std::int64_t>(rounded);
        }
        return assignment;
    };

    auto rank_config = [resolve_projected](const ProjectedGraph& pg, const Args& args,
                                           const std::string& identifier) {
        PageRankConfig config;
        config.damping_factor = args.opt_num("dampingFactor", 0.85);
        config.max_iterations = args.opt_int("maxIterations", 20);
        config.tolerance = args.opt_num("tolerance", 1e-7);
        if (auto sources = args.opt_str_list("sourceNodes")) {
            if (sources->empty()) throw Error("sourceNodes must not be empty when given");
            config.source_nodes = resolve_projected(pg, identifier, *sources);
        }
        return config;
    };

    // --- handlers ----------------------------------------------------------

    handlers_["count_node"] = [this](const json&) {
        ToolResult r;
        r.content.push_back(std::to_string(graph_.node_count()));
        r.row_count_total = 1;
        return r;
    };
    handlers_["get_node_properties_keys"] = [this](const json&) {
        ToolResult r;
        const auto keys = graph_.node_property_keys();
        r.content.push_back(render_key_list(keys));
        r.row_count_total = static_cast<std::int64_t>(keys.size());
        return r;
    };
    handlers_["get_relationship_properties_keys"] = [this](const json&) {
        ToolResult r;
        const auto keys = graph_.relationship_property_keys();
        r.content.push_back(render_key_list(keys));
        r.row_count_total = static_cast<std::int64_t>(keys.size());
        return r;
    };

    auto register_score_tool =
        [this, table_result, filtered_rows, score_table, max_rows_for](
            const std::string& name, Orientation orientation,
            std::function<std::vector<ScoreRow>(const ProjectedGraph&, const Args&)> compute,
            const char* score_column = "score") {
            handlers_[name] = [=, this](const json& raw) {
                Args args(raw);
                auto pg = projection_for(raw, orientation);
                const std::string identifier = args.str("nodeIdentifierProperty");
                auto rows = compute(*pg, args);
                Table t = score_table(*pg, rows, identifier, score_column);
                filtered_rows(*pg, args, identifier, t);
                return table_result(t, max_rows_for(args));
            };
        };

    register_score_tool("degree_centrality", Orientation::Directed,
                        [](const ProjectedGraph& pg, const Args& args) {
                            const std::string o = args.opt_str("orientation").value_or("UNDIRECTED");
                            DegreeOrientation orientation;
                            if (o == "NATURAL") orientation = DegreeOrientation::Natural;
                            else if (o == "REVERSE") orientation = DegreeOrientation::Reverse;
                            else if (o == "UNDIRECTED") orientation = DegreeOrientation::Undirected;
                            else throw Error("orientation must be NATURAL, REVERSE or UNDIRECTED");
                            return degree_centrality(pg, orientation);
                        });
    register_score_tool("closeness_centrality", Orientation::Undirected,
                        [](const ProjectedGraph& pg, const Args&) {
                            return closeness_centrality(pg);
                        });
    register_score_tool("harmonic_centrality", Orientation::Undirected,
                        [](const ProjectedGraph& pg, const Args&) {
                            return harmonic_centrality(pg);
                        });
    register_score_tool("betweenness_centrality", Orientation::Undirected,
                        [this, weight_config](const ProjectedGraph& pg, const Args& args) {
                            return betweenness_centrality(pg, weight_config(args),
                                                          args.opt_int("samplingSize"),
                                                          options_.threads);
                        });
    register_score_tool("pagerank", Orientation::Undirected,
                        [weight_config, rank_config](const ProjectedGraph& pg, const Args& args) {
                            return pagerank(pg,
                                            rank_config(pg, args,
                                                        args.str("nodeIdentifierProperty")),
                                            weight_config(args));
                        });
    register_score_tool("article_rank", Orientation::Undirected,
                        [weight_config, rank_config](const ProjectedGraph& pg, const Args& args) {
                            return article_rank(pg,
                                                rank_config(pg, args,
                                                            args.str("nodeIdentifierProperty")),
                                                weight_config(args));
                        });
    register_score_tool("eigenvector_centrality", Orientation::Undirected,
                        [](const ProjectedGraph& pg, const Args& args) {
                            return eigenvector_centrality(pg, args.opt_int("maxIterations", 20),
                                                          args.opt_num("tolerance", 1e-7));
                        });
    register_score_tool("local_clustering_coefficient", Orientation::Undirected,
                        [](const ProjectedGraph& pg, const Args&) {
                            return local_clustering_coefficient(pg);
                        });

    handlers_["HITS"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Directed);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto rows = hits(*pg, args.opt_int("maxIterations", 20),
                               args.opt_num("tolerance", 1e-7));
        Table t;
        t.columns = {"nodeId", "hub", "authority", "nodeName"};
        for (const auto& row : rows) {
            t.rows.push_back({pg->original_id(row.node_id), row.hub, row.authority,
                              display_name(*pg, row.node_id, identifier)});
        }
        filtered_rows(*pg, args, identifier, t);
        return table_result(t, max_rows_for(args));
    };

    handlers_["articulation_points"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Undirected);
        const std::string identifier = args.str("nodeIdentifierProperty");
        Table t;
        t.columns = {"nodeId", "nodeName"};
        for (std::int64_t v : articulation_points(*pg)) {
            t.rows.push_back({pg->original_id(v), display_name(*pg, v, identifier)});
        }
        filtered_rows(*pg, args, identifier, t);
        return table_result(t, max_rows_for(args));
    };

    handlers_["bridges"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Undirected);
        const std::string identifier = args.str("nodeIdentifierProperty");
        Table t;
        t.columns = {"sourceNodeId", "targetNodeId", "sourceName", "targetName"};
        for (const auto& b : bridges(*pg)) {
            t.rows.push_back({pg->original_id(b.source), pg->original_id(b.target),
                              display_name(*pg, b.source, identifier),
                              display_name(*pg, b.target, identifier)});
        }
        return table_result(t, max_rows_for(args));
    };

    handlers_["CELF"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Undirected);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto seeds = celf_influence_maximization(
            *pg, args.opt_int("seedSetSize", 1), args.opt_int("monteCarloSimulations", 1000),
            args.opt_num("propagationProbability", 0.1),
            static_cast<std::uint64_t>(args.opt_int("randomSeed", 42)), options_.threads);
        Table t;
        t.columns = {"nodeId", "spread", "nodeName"};
        for (const auto& s : seeds) {
            t.rows.push_back({pg->original_id(s.node_id), s.spread,
                              display_name(*pg, s.node_id, identifier)});
        }
        ToolResult r = table_result(t, max_rows_for(args));
        r.content.push_back("totalSpread: " +
                            format_float(seeds.empty() ? 0.0 : seeds.back().spread));
        return r;
    };

    auto register_community_tool =
        [this, table_result, filtered_rows, community_table, max_rows_for](
            const std::string& name, Orientation orientation, const char* id_column,
            std::function<std::vector<CommunityRow>(const ProjectedGraph&, const Args&)>
                compute) {
            handlers_[name] = [=, this](const json& raw) {
                Args args(raw);
                auto pg = projection_for(raw, orientation);
                const std::string identifier = args.str("nodeIdentifierProperty");
                Table t = community_table(*pg, compute(*pg, args), identifier, id_column);
                filtered_rows(*pg, args, identifier, t);
                return table_result(t, max_rows_for(args));
            };
        };

    register_community_tool("weakly_connected_components", Orientation::Undirected,
                            "componentId", [](const ProjectedGraph& pg, const Args&) {
                                return weakly_connected_components(pg);
                            });
    register_community_tool("strongly_connected_components", Orientation::Directed,
                            "componentId", [](const ProjectedGraph& pg, const Args&) {
                                return strongly_connected_components(pg);
                            });
    register_community_tool("label_propagation", Orientation::Undirected, "communityId",
                            [](const ProjectedGraph& pg, const Args& args) {
                                return label_propagation(
                                    pg, args.opt_int("maxIterations", 10),
                                    static_cast<std::uint64_t>(args.opt_int("randomSeed", 42)));
                            });

    handlers_["triangle_count"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Undirected);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto counts = triangle_count(*pg);
        Table t;
        t.columns = {"nodeId", "triangleCount", "nodeName"};
        for (std::int64_t v = 0; v < pg->node_count(); ++v) {
            t.rows.push_back({pg->original_id(v), counts.per_node[static_cast<std::size_t>(v)],
                              display_name(*pg, v, identifier)});
        }
        filtered_rows(*pg, args, identifier, t);
        ToolResult r = table_result(t, max_rows_for(args));
        r.content.push_back("globalTriangleCount: " + std::to_string(counts.global));
        return r;
    };

    handlers_["k_core_decomposition"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Undirected);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto cores = k_core_decomposition(*pg);
        Table t;
        t.columns = {"nodeId", "coreValue", "nodeName"};
        for (std::int64_t v = 0; v < pg->node_count(); ++v) {
            t.rows.push_back({pg->original_id(v), cores[static_cast<std::size_t>(v)],
                              display_name(*pg, v, identifier)});
        }
        filtered_rows(*pg, args, identifier, t);
        return table_result(t, max_rows_for(args));
    };

    handlers_["k_1_coloring"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Undirected);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto coloring = k1_coloring(*pg, args.opt_int("maxIterations", 10));
        Table t;
        t.columns = {"nodeId", "color", "nodeName"};
        for (std::int64_t v = 0; v < pg->node_count(); ++v) {
            t.rows.push_back({pg->original_id(v), coloring.colors[static_cast<std::size_t>(v)],
                              display_name(*pg, v, identifier)});
        }
        filtered_rows(*pg, args, identifier, t);
        ToolResult r = table_result(t, max_rows_for(args));
        r.content.push_back("conflictingEdges: " + std::to_string(coloring.conflicting_edges));
        return r;
    };

    auto register_partition_tool =
        [this, table_result, filtered_rows, community_table, max_rows_for](
            const std::string& name,
            std::function<PartitionResult(const ProjectedGraph&, const Args&)> compute) {
            handlers_[name] = [=, this](const json& raw) {
                Args args(raw);
                auto pg = projection_for(raw, Orientation::Undirected);
                const std::string identifier = args.str("nodeIdentifierProperty");
                const PartitionResult partition = compute(*pg, args);
                Table t = community_table(*pg, partition.rows, identifier, "communityId");
                filtered_rows(*pg, args, identifier, t);
                ToolResult r = table_result(t, max_rows_for(args));
                r.content.push_back("modularity: " + format_float(partition.modularity));
                return r;
            };
        };

    register_partition_tool("louvain", [weight_config](const ProjectedGraph& pg,
                                                       const Args& args) {
        return louvain(pg, args.opt_int("maxLevels", 10), args.opt_num("tolerance", 1e-4),
                       static_cast<std::uint64_t>(args.opt_int("randomSeed", 42)),
                       weight_config(args));
    });
    register_partition_tool("leiden", [weight_config](const ProjectedGraph& pg,
                                                      const Args& args) {
        return leiden(pg, args.opt_num("gamma", 1.0), args.opt_int("maxLevels", 10),
                      static_cast<std::uint64_t>(args.opt_int("randomSeed", 42)),
                      weight_config(args));
    });
    register_partition_tool(
        "modularity_optimization", [weight_config](const ProjectedGraph& pg, const Args& args) {
            return modularity_optimization(
                pg, args.opt_int("maxIterations", 10), args.opt_num("tolerance", 1e-4),
                static_cast<std::uint64_t>(args.opt_int("randomSeed", 42)), weight_config(args));
        });

    handlers_["modularity_metric"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Undirected);
        const auto report = modularity_metric(*pg, assignment_from(*pg, args.str("communityProperty")),
                                              weight_config(args));
        Table t;
        t.columns = {"communityId", "modularity"};
        for (const auto& row : report.per_community) {
            t.rows.push_back({row.community, row.modularity});
        }
        ToolResult r = table_result(t, max_rows_for(args));
        r.content.push_back("totalModularity: " + format_float(report.total));
        return r;
    };

    handlers_["conductance"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Undirected);
        const auto rows = conductance(*pg, assignment_from(*pg, args.str("communityProperty")),
                                      weight_config(args));
        Table t;
        t.columns = {"communityId", "conductance"};
        for (const auto& row : rows) {
            t.rows.push_back({row.community, row.defined ? Cell(row.conductance)
                                                         : Cell(std::string("undefined"))});
        }
        return table_result(t, max_rows_for(args));
    };

    handlers_["k_means_clustering"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Undirected);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto result = kmeans(*pg, args.str_list("nodeProperties"), args.opt_int("k", 10),
                                   args.opt_int("maxIterations", 10),
                                   static_cast<std::uint64_t>(args.opt_int("randomSeed", 42)));
        Table t = community_table(*pg, result.rows, identifier, "communityId");
        filtered_rows(*pg, args, identifier, t);
        ToolResult r = table_result(t, max_rows_for(args));
        Table centroids;
        centroids.columns = {"centroidId", "coordinates"};
        for (std::size_t c = 0; c < result.centroids.size(); ++c) {
            centroids.rows.push_back(
                {static_cast<std::int64_t>(c), format_float_list(result.centroids[c])});
        }
        r.content.push_back(render_table(centroids, std::nullopt));
        return r;
    };

    handlers_["node_similarity"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Undirected);
        const std::string identifier = args.str("nodeIdentifierProperty");
        NodeSimilarityConfig config;
        const std::string metric = args.opt_str("similarityMetric").value_or("JACCARD");
        if (metric == "JACCARD") config.metric = SimilarityMetric::Jaccard;
        else if (metric == "OVERLAP") config.metric = SimilarityMetric::Overlap;
        else if (metric == "COSINE") config.metric = SimilarityMetric::Cosine;
        else throw Error("similarityMetric must be JACCARD, OVERLAP or COSINE");
        config.top_n = args.opt_int("topN");
        config.top_k = args.opt_int("topK", 10);
        config.similarity_cutoff = args.opt_num("similarityCutoff", 1e-42);
        config.weight = weight_config(args);
        Table t;
        t.columns = {"node1", "node2", "similarity", "node1Name", "node2Name"};
        for (const auto& row : node_similarity(*pg, config, options_.threads)) {
            t.rows.push_back({pg->original_id(row.node1), pg->original_id(row.node2),
                              row.similarity, display_name(*pg, row.node1, identifier),
                              display_name(*pg, row.node2, identifier)});
        }
        return table_result(t, max_rows_for(args));
    };

    handlers_["k_nearest_neighbours"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Undirected);
        const std::string identifier = args.str("nodeIdentifierProperty");
        KnnConfig config;
        config.node_properties = args.str_list("nodeProperties");
        config.k = args.opt_int("k", 10);
        const std::string metric = args.opt_str("similarityMetric").value_or("EUCLIDEAN");
        if (metric == "EUCLIDEAN") config.metric = KnnMetric::Euclidean;
        else if (metric == "COSINE") config.metric = KnnMetric::Cosine;
        else throw Error("similarityMetric must be EUCLIDEAN or COSINE");
        config.sampling_seed = static_cast<std::uint64_t>(args.opt_int("randomSeed", 42));
        config.delta_threshold = args.opt_num("deltaThreshold", 0.001);
        Table t;
        t.columns = {"node1", "node2", "similarity", "node1Name", "node2Name"};
        for (const auto& row : knn(*pg, config, options_.threads)) {
            t.rows.push_back({pg->original_id(row.node1), pg->original_id(row.node2),
                              row.similarity, display_name(*pg, row.node1, identifier),
                              display_name(*pg, row.node2, identifier)});
        }
        return table_result(t, max_rows_for(args));
    };

    // --- path finding ------------------------------------------------------

    auto single_path_result = [path_table, table_result, max_rows_for](
                                  const ProjectedGraph& pg, const Args& args,
                                  const std::string& identifier,
                                  const std::optional<PathResult>& path,
                                  const std::string& source_name,
                                  const std::string& target_name) {
        if (!path) {
            ToolResult r;
            r.content.push_back("No path found from '" + source_name + "' to '" + target_name +
                                "'");
            return r;
        }
        return table_result(path_table(pg, {*path}, identifier), max_rows_for(args));
    };

    handlers_["find_shortest_path"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Directed);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto ids = resolve_projected(*pg, identifier,
                                           {args.str("sourceNode"), args.str("targetNode")});
        const auto path = find_shortest_path(*pg, ids[0], ids[1], weight_config(args));
        return single_path_result(*pg, args, identifier, path, args.str("sourceNode"),
                                  args.str("targetNode"));
    };

    handlers_["a_star_shortest_path"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Directed);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto ids = resolve_projected(*pg, identifier,
                                           {args.str("sourceNode"), args.str("targetNode")});
        const auto path = a_star(*pg, ids[0], ids[1], weight_config(args),
                                 args.str("latitudeProperty"), args.str("longitudeProperty"));
        return single_path_result(*pg, args, identifier, path, args.str("sourceNode"),
                                  args.str("targetNode"));
    };

    handlers_["yens_shortest_paths"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Directed);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto ids = resolve_projected(*pg, identifier,
                                           {args.str("sourceNode"), args.str("targetNode")});
        const auto paths =
            yens_k_shortest_paths(*pg, ids[0], ids[1], args.opt_int("k", 1), weight_config(args));
        if (paths.empty()) {
            ToolResult r;
            r.content.push_back("No path found from '" + args.str("sourceNode") + "' to '" +
                                args.str("targetNode") + "'");
            return r;
        }
        return table_result(path_table(*pg, paths, identifier), max_rows_for(args));
    };

    handlers_["dijkstra_single_source_shortest_path"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Directed);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto ids = resolve_projected(*pg, identifier, {args.str("sourceNode")});
        const auto paths = dijkstra_single_source(*pg, ids[0], weight_config(args));
        return table_result(path_table(*pg, paths, identifier), max_rows_for(args));
    };

    handlers_["delta_stepping_shortest_path"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Directed);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto ids = resolve_projected(*pg, identifier, {args.str("sourceNode")});
        const auto paths =
            delta_stepping(*pg, ids[0], weight_config(args), args.opt_num("delta", 2.0));
        return table_result(path_table(*pg, paths, identifier), max_rows_for(args));
    };

    handlers_["bellman_ford_single_source_shortest_path"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Directed);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto ids = resolve_projected(*pg, identifier, {args.str("sourceNode")});
        const auto result = bellman_ford(*pg, ids[0], weight_config(args));
        if (std::holds_alternative<NegativeCycleReport>(result)) {
            const auto& cycle = std::get<NegativeCycleReport>(result);
            std::vector<std::int64_t> originals;
            std::vector<std::string> names;
            for (std::int64_t v : cycle.node_ids) {
                originals.push_back(pg->original_id(v));
                names.push_back(display_name(*pg, v, identifier));
            }
            ToolResult r;
            r.content.push_back("negative cycle detected: nodes " + format_int_list(originals) +
                                " " + format_string_list(names));
            return r;
        }
        return table_result(path_table(*pg, std::get<std::vector<PathResult>>(result), identifier),
                            max_rows_for(args));
    };

    handlers_["longest_path"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Directed);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto paths = longest_path(*pg, weight_config(args));
        return table_result(path_table(*pg, paths, identifier), max_rows_for(args));
    };

    handlers_["breadth_first_search"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Directed);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto ids = resolve_projected(*pg, identifier, {args.str("sourceNode")});
        std::vector<std::int64_t> targets;
        if (auto names = args.opt_str_list("targetNodes")) {
            targets = resolve_projected(*pg, identifier, *names);
        }
        const auto visits = bfs(*pg, ids[0], args.opt_int("maxDepth"), targets);
        Table t;
        t.columns = {"nodeId", "depth", "parentId", "nodeName"};
        for (const auto& v : visits) {
            t.rows.push_back({pg->original_id(v.node), v.depth,
                              v.parent < 0 ? std::int64_t{-1} : pg->original_id(v.parent),
                              display_name(*pg, v.node, identifier)});
        }
        return table_result(t, max_rows_for(args));
    };

    handlers_["depth_first_search"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Directed);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto ids = resolve_projected(*pg, identifier, {args.str("sourceNode")});
        const auto visits = dfs(*pg, ids[0], args.opt_int("maxDepth"));
        Table t;
        t.columns = {"nodeId", "depth", "nodeName"};
        for (const auto& v : visits) {
            t.rows.push_back(
                {pg->original_id(v.node), v.depth, display_name(*pg, v.node, identifier)});
        }
        return table_result(t, max_rows_for(args));
    };

    handlers_["minimum_weight_spanning_tree"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Undirected);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto ids = resolve_projected(*pg, identifier, {args.str("sourceNode")});
        const auto tree = minimum_spanning_tree(*pg, ids[0], weight_config(args));
        ToolResult r = table_result(edges_table(*pg, tree.edges, identifier), max_rows_for(args));
        r.content.push_back("totalWeight: " + format_float(tree.total_weight));
        return r;
    };

    handlers_["minimum_directed_steiner_tree"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Directed);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto source = resolve_projected(*pg, identifier, {args.str("sourceNode")});
        const auto targets = resolve_projected(*pg, identifier, args.str_list("targetNodes"));
        const auto tree = minimum_directed_steiner_tree(*pg, source[0], targets,
                                                        weight_config(args));
        ToolResult r = table_result(edges_table(*pg, tree.edges, identifier), max_rows_for(args));
        r.content.push_back("totalWeight: " + format_float(tree.total_weight));
        return r;
    };

    handlers_["prize_collecting_steiner_tree"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Undirected);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto result =
            prize_collecting_steiner_tree(*pg, args.str("prizeProperty"), weight_config(args));
        const auto& prizes = pg->node_scalar_column(args.str("prizeProperty"));
        Table nodes;
        nodes.columns = {"nodeId", "prize", "nodeName"};
        for (std::int64_t v : result.node_ids) {
            nodes.rows.push_back({pg->original_id(v), prizes[static_cast<std::size_t>(v)],
                                  display_name(*pg, v, identifier)});
        }
        ToolResult r = table_result(nodes, max_rows_for(args));
        r.content.push_back(render_table(edges_table(*pg, result.edges, identifier),
                                         std::nullopt));
        r.content.push_back("objective: " + format_float(result.objective));
        return r;
    };

    handlers_["all_pairs_shortest_paths"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Directed);
        const std::string identifier = args.str("nodeIdentifierProperty");
        const auto pairs = all_pairs_shortest_paths(*pg, weight_config(args), options_.threads);
        Table t;
        t.columns = {"sourceNodeId", "targetNodeId", "distance", "sourceName", "targetName"};
        for (const auto& p : pairs) {
            t.rows.push_back({pg->original_id(p.source), pg->original_id(p.target), p.distance,
                              display_name(*pg, p.source, identifier),
                              display_name(*pg, p.target, identifier)});
        }
        return table_result(t, max_rows_for(args));
    };

    handlers_["random_walk"] = [=, this](const json& raw) {
        Args args(raw);
        auto pg = projection_for(raw, Orientation::Directed);
        const std::string identifier = args.str("nodeIdentifierProperty");
        std::vector<std::int64_t> sources;
        if (auto names = args.opt_str_list("sourceNodes")) {
            sources = resolve_projected(*pg, identifier, *names);
        } else {
            sources.resize(static_cast<std::size_t>(pg->node_count()));
            std::iota(sources.begin(), sources.end(), 0);
        }
        const auto walks = random_walk(*pg, sources, args.opt_int("walksPerNode", 10),
                                       args.opt_int("walkLength", 80),
                                       static_cast<std::uint64_t>(args.opt_int("randomSeed", 42)));
        Table t;
        t.columns = {"sourceNodeId", "nodeIds", "path"};
        for (const auto& walk : walks) {
            std::vector<std::int64_t> originals;
            std::vector<std::string> names;
            for (std::int64_t v : walk.node_ids) {
                originals.push_back(pg->original_id(v));
                names.push_back(display_name(*pg, v, identifier));
            }
            t.rows.push_back({pg->original_id(walk.source), format_int_list(originals),
                              format_string_list(names)});
        }
        return table_result(t, max_rows_for(args));
    };

    // Every registered spec must have a handler and vice versa.
    for (const auto& spec : specs_) {
        if (!handlers_.count(spec.name)) {
            throw Error("internal: no handler for tool " + spec.name);
        }
    }
    if (handlers_.size() != specs_.size()) {
        throw Error("internal: handler/spec registry mismatch");
    }
}

const ToolSpec* ToolServer::find_spec(const std::string& name) const {
    for (const auto& spec : specs_) {
        if (spec.name == name) return &spec;
    }
    return nullptr;
}

std::shared_ptr<const ProjectedGraph> ToolServer::default_projection(Orientation orientation) {
    auto& slot = orientation == Orientation::Directed ? directed_ : undirected_;
    if (!slot) {
        slot = std::make_shared<const ProjectedGraph>(
            project(graph_, ProjectionSpec::default_spec(graph_, orientation)));
    }
    return slot;
}

std::shared_ptr<const ProjectedGraph> ToolServer::projection_for(
    const nlohmann::json& args, Orientation default_orientation) {
    if (args.is_object() && args.contains("projection") && !args.at("projection").is_null()) {
        ProjectionSpec spec = ProjectionSpec::from_json(args.at("projection"));
        if (!args.at("projection").contains("orientation")) {
            spec.orientation = default_orientation;
        }
        return std::make_shared<const ProjectedGraph>(project(graph_, spec));
    }
    return default_projection(default_orientation);
}

ToolResult ToolServer::call_tool(const std::string& name, const json& arguments) {
    const ToolSpec* spec = find_spec(name);
    if (!spec) {
        ToolResult r;
        r.is_error = true;
        r.content.push_back("unknown tool: " + name);
        return r;
    }
    const json args = arguments.is_null() ? json::object() : arguments;
    const std::string validation = validate_arguments(spec->input_schema, args);
    if (!validation.empty()) {
        ToolResult r;
        r.is_error = true;
        r.content.push_back(validation);
        return r;
    }
    try {
        return handlers_.at(name)(args);
    } catch (const std::exception& e) {
        ToolResult r;
        r.is_error = true;
        r.content.push_back(e.what());
        return r;
    }
}

namespace {

json make_response(const json& id, json result) {
    return json{{"jsonrpc", "2.0"}, {"id", id}, {"result", std::move(result)}};
}

json make_error(const json& id, int code, const std::string& message) {
    return json{{"jsonrpc", "2.0"},
                {"id", id},
                {"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

json ToolServer::dispatch(const json& request) {
    const json id = request.contains("id") ? request.at("id") : json();
    if (!request.contains("method") || !request.at("method").is_string()) {
        return make_error(id, -32600, "Invalid Request");
    }
    const std::string method = request.at("method").get<std::string>();
    const bool is_notification = !request.contains("id");

    if (method == "initialize") {
        std::string protocol = "2024-11-05";
        if (request.contains("params") && request.at("params").is_object() &&
            request.at("params").contains("protocolVersion") &&
            request.at("params").at("protocolVersion").is_string()) {
            protocol = request.at("params").at("protocolVersion").get<std::string>();
        }
        return make_response(id, json{{"protocolVersion", protocol},
                                      {"capabilities", {{"tools", json::object()}}},
                                      {"serverInfo",
                                       {{"name", options_.server_name},
                                        {"version", options_.server_version}}}});
    }
    if (method == "notifications/initialized" || method.rfind("notifications/", 0) == 0) {
        return json();  // notifications never get a response
    }
    if (method == "tools/list") {
        json tools = json::array();
        for (const auto& spec : specs_) {
            tools.push_back({{"name", spec.name},
                             {"description", spec.description},
                             {"inputSchema", spec.input_schema}});
        }
        return make_response(id, json{{"tools", std::move(tools)}});
    }
    if (method == "tools/call") {
        if (!request.contains("params") || !request.at("params").is_object() ||
            !request.at("params").contains("name") ||
            !request.at("params").at("name").is_string()) {
            return make_error(id, -32602, "Invalid params: missing tool name");
        }
        const std::string name = request.at("params").at("name").get<std::string>();
        const json arguments = request.at("params").value("arguments", json::object());
        const ToolResult result = call_tool(name, arguments);
        json content = json::array();
        for (const auto& block : result.content) {
            content.push_back({{"type", "text"}, {"text", block}});
        }
        return make_response(id, json{{"content", std::move(content)},
                                      {"isError", result.is_error},
                                      {"rowCountTotal", result.row_count_total},
                                      {"truncated", result.truncated}});
    }
    if (is_notification) return json();
    return make_error(id, -32601, "Method not found: " + method);
}

std::optional<std::string> ToolServer::handle_line(const std::string& line) {
    const std::string text = trim(line);
    if (text.empty()) return std::nullopt;
    json request;
    try {
        request = json::parse(text);
    } catch (const json::exception&) {
        return make_error(json(), -32700, "Parse error").dump();
    }
    if (!request.is_object()) {
        return make_error(json(), -32600, "Invalid Request").dump();
    }
    json response;
    try {
        response = dispatch(request);
    } catch (const std::exception& e) {
        return make_error(request.value("id", json()), -32603,
                          std::string("Internal error: ") + e.what())
            .dump();
    }
    if (response.is_null()) return std::nullopt;
    // Notifications (no id) produce no response even on errors.
    if (!request.contains("id")) return std::nullopt;
    return response.dump();
}

void ToolServer::serve(std::istream& in, std::ostream& out) {
    std::cerr << options_.server_name << " " << options_.server_version << ": serving "
              << graph_.node_count() << " nodes, " << graph_.relationship_count()
              << " relationships over stdio\n";
    std::string line;
    while (std::getline(in, line)) {
        if (auto response = handle_line(line)) {
            out << *response << "\n";
            out.flush();
        }
    }
}

}  // namespace gdsa
