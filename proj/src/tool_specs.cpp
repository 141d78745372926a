#include "gdsa/mcp_server.hpp"

namespace gdsa {

namespace {

using nlohmann::json;

json prop(const char* type, const std::string& description) {
    return json{{"type", type}, {"description", description}};
}

const char* kIdentifierDesc =
    "Property name to use for identifying nodes (e.g., 'name', 'Name', 'title'). "
    "Use get_node_properties_keys to find available properties.";

const char* kWeightDesc =
    "Name of the relationship property to use as weights. If unspecified, the "
    "algorithm runs unweighted.";

const char* kNodesFilterDesc =
    "Optional list of node identifiers; only rows for these nodes are returned. "
    "The computation itself always runs on the whole projected graph.";

const char* kProjectionDesc =
    "Optional projection spec overriding the default full projection. Object with "
    "fields: name, node_labels, relationship_types, node_properties, "
    "relationship_properties, orientation (directed|undirected).";

const char* kMaxResultsDesc =
    "Maximum number of result rows to return. Rows beyond the limit are truncated "
    "and the omitted count is reported.";

struct SpecBuilder {
    json properties = json::object();
    std::vector<std::string> required;

    SpecBuilder& add(const std::string& name, const char* type, const std::string& description,
                     bool is_required = false) {
        properties[name] = prop(type, description);
        if (is_required) required.push_back(name);
        return *this;
    }

    /// Shared surface of every algorithm tool: name resolution is mandatory,
    /// projection override and row cap are not.
    SpecBuilder& algorithm_common() {
        add("nodeIdentifierProperty", "string", kIdentifierDesc, true);
        add("projection", "object", kProjectionDesc);
        add("maxResults", "integer", kMaxResultsDesc);
        return *this;
    }

    SpecBuilder& nodes_filter() {
        add("nodes", "array", kNodesFilterDesc);
        return *this;
    }

    SpecBuilder& weight() {
        add("relationshipWeightProperty", "string", kWeightDesc);
        return *this;
    }

    ToolSpec build(const std::string& name, const std::string& description) {
        ToolSpec spec;
        spec.name = name;
        spec.description = description;
        spec.input_schema =
            json{{"type", "object"}, {"properties", properties}, {"required", required}};
        return spec;
    }
};

}  // namespace

std::vector<ToolSpec> build_tool_specs() {
    std::vector<ToolSpec> specs;

    // --- auxiliary -------------------------------------------------------
    specs.push_back(SpecBuilder{}.build(
        "count_node", "Counts the nodes in the graph and returns the total as text."));
    specs.push_back(SpecBuilder{}.build(
        "get_node_properties_keys",
        "Lists every node property key present in the graph together with its value type. "
        "Call this before any algorithm tool to pick a nodeIdentifierProperty."));
    specs.push_back(SpecBuilder{}.build(
        "get_relationship_properties_keys",
        "Lists every relationship property key present in the graph together with its value "
        "type. Numeric keys can be used as relationshipWeightProperty."));

    // --- centrality ------------------------------------------------------
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("orientation", "string",
                 "NATURAL counts outgoing relationships, REVERSE incoming, UNDIRECTED both. "
                 "Defaults to UNDIRECTED.")
            .nodes_filter()
            .build("degree_centrality",
                   "Degree centrality counts the relationships incident to each node under the "
                   "chosen orientation. Parallel relationships all count."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .nodes_filter()
            .build("closeness_centrality",
                   "Closeness centrality scores each node by the inverse average hop distance "
                   "to the nodes it can reach, with Wasserman-Faust scaling so scores stay "
                   "comparable across components. Unreachable nodes contribute nothing; an "
                   "isolated node scores 0."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .nodes_filter()
            .build("harmonic_centrality",
                   "Harmonic centrality averages the reciprocal hop distances from each node "
                   "to every other node, so unreachable pairs simply contribute zero."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .weight()
            .add("samplingSize", "integer",
                 "Number of source nodes to sample for approximate scores. When unset the "
                 "exact algorithm runs over every source.")
            .nodes_filter()
            .build("betweenness_centrality",
                   "Betweenness centrality counts, for every node, the fraction of all-pairs "
                   "shortest paths passing through it (Brandes' algorithm). Supports weighted "
                   "graphs with non-negative weights; unordered pairs count once on "
                   "undirected projections."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("dampingFactor", "number",
                 "Probability of following a relationship rather than teleporting. Must be in "
                 "(0, 1); defaults to 0.85.")
            .add("maxIterations", "integer", "Iteration cap. Defaults to 20.")
            .add("tolerance", "number",
                 "Stop once the L1 change between iterations drops below this. Defaults to "
                 "1e-7.")
            .add("sourceNodes", "array",
                 "Personalization: restart only from these node identifiers (a single string "
                 "is also accepted). When unset the global variant runs.")
            .weight()
            .nodes_filter()
            .build("pagerank",
                   "PageRank scores nodes by the stationary distribution of a random surfer "
                   "that follows relationships with probability dampingFactor and otherwise "
                   "teleports to the base set. Dangling-node mass is redistributed over the "
                   "base set."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("dampingFactor", "number",
                 "Damping factor in (0, 1); defaults to 0.85.")
            .add("maxIterations", "integer", "Iteration cap. Defaults to 20.")
            .add("tolerance", "number",
                 "Stop once the L1 change between iterations drops below this. Defaults to "
                 "1e-7.")
            .add("sourceNodes", "array",
                 "Personalization: restart only from these node identifiers (a single string "
                 "is also accepted).")
            .weight()
            .nodes_filter()
            .build("article_rank",
                   "ArticleRank is a PageRank variant that dampens the influence of "
                   "high-degree neighbours by adding the average out-degree to every "
                   "contribution denominator."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("maxIterations", "integer", "Power-iteration cap. Defaults to 20.")
            .add("tolerance", "number",
                 "Stop once the max entry change drops below this. Defaults to 1e-7.")
            .nodes_filter()
            .build("eigenvector_centrality",
                   "Eigenvector centrality is the dominant eigenvector of the adjacency "
                   "matrix, computed by power iteration and L2-normalized; scores are "
                   "non-negative."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("maxIterations", "integer", "Iteration cap. Defaults to 20.")
            .add("tolerance", "number",
                 "Stop once hub and authority changes drop below this. Defaults to 1e-7.")
            .nodes_filter()
            .build("HITS",
                   "HITS computes hub and authority scores by alternating power iteration: "
                   "good hubs point at good authorities and vice versa. Both vectors are "
                   "L2-normalized every round. Runs on the directed projection."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .nodes_filter()
            .build("articulation_points",
                   "Finds the nodes whose removal would split a connected component, treating "
                   "relationships as undirected."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .build("bridges",
                   "Finds the relationships whose removal would split a connected component, "
                   "treating the graph as undirected. Parallel relationships between the same "
                   "pair are never bridges."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("seedSetSize", "integer", "Number of seed nodes to select.", true)
            .add("monteCarloSimulations", "integer",
                 "Monte Carlo simulations per spread estimate. Defaults to 1000.")
            .add("propagationProbability", "number",
                 "Independent-cascade activation probability per relationship. Defaults to "
                 "0.1.")
            .add("randomSeed", "integer", "Seed for the simulation RNG. Defaults to 42.")
            .build("CELF",
                   "CELF selects an influence-maximizing seed set under the Independent "
                   "Cascade model using lazy greedy evaluation. Expected spread is estimated "
                   "over pre-sampled cascade worlds, so repeated runs with the same seed are "
                   "identical."));

    // --- community -------------------------------------------------------
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .build("conductance",
                   "Computes the conductance of every community of a stored assignment: cut "
                   "weight divided by the smaller of the community volume and its complement. "
                   "Communities with zero volume (or covering the whole graph) are undefined.")
            );
    specs.back().input_schema["properties"]["communityProperty"] = prop(
        "string",
        "Node property holding the community id of each node (projected or mutated).");
    specs.back().input_schema["properties"]["relationshipWeightProperty"] =
        prop("string", kWeightDesc);
    specs.back().input_schema["required"].push_back("communityProperty");

    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .nodes_filter()
            .build("k_core_decomposition",
                   "Assigns every node its core value: the largest k such that the node "
                   "survives when nodes of degree below k are repeatedly peeled away."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("maxIterations", "integer", "Sweep cap. Defaults to 10.")
            .nodes_filter()
            .build("k_1_coloring",
                   "Greedy iterative graph coloring: every node takes the smallest color not "
                   "used by its neighbours until no conflicting relationship remains. Reports "
                   "the remaining conflict count."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("nodeProperties", "array",
                 "Numeric node properties forming each node's feature vector.", true)
            .add("k", "integer", "Number of clusters. Defaults to 10 (capped at node count).")
            .add("maxIterations", "integer", "Lloyd iteration cap. Defaults to 10.")
            .add("randomSeed", "integer", "Seed for k-means++ initialization. Defaults to 42.")
            .nodes_filter()
            .build("k_means_clustering",
                   "Lloyd's k-means over per-node feature vectors built from numeric node "
                   "properties. Reports cluster assignments and centroids; within-cluster sum "
                   "of squares never increases between iterations."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("maxIterations", "integer", "Synchronous round cap. Defaults to 10.")
            .add("randomSeed", "integer", "Accepted for parity; the sweep is deterministic.")
            .nodes_filter()
            .build("label_propagation",
                   "Synchronous label propagation: every node repeatedly adopts the most "
                   "frequent label among its neighbours, lowest label winning ties, until "
                   "labels stabilize or the iteration cap is hit."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("gamma", "number",
                 "Resolution parameter; larger values yield more, smaller communities. "
                 "Defaults to 1.0.")
            .add("maxLevels", "integer", "Aggregation level cap. Defaults to 10.")
            .add("randomSeed", "integer", "Controls node visit order only. Defaults to 42.")
            .weight()
            .nodes_filter()
            .build("leiden",
                   "Leiden community detection: local moving plus a refinement phase that "
                   "keeps every community internally connected, then aggregation. Reports the "
                   "final assignment and its modularity."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .nodes_filter()
            .build("local_clustering_coefficient",
                   "Local clustering coefficient: the fraction of a node's neighbour pairs "
                   "that are themselves connected. Nodes with fewer than two distinct "
                   "neighbours score 0."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("maxLevels", "integer", "Aggregation level cap. Defaults to 10.")
            .add("tolerance", "number",
                 "Minimum modularity gain to keep iterating a level. Defaults to 1e-4.")
            .add("randomSeed", "integer", "Controls node visit order only. Defaults to 42.")
            .weight()
            .nodes_filter()
            .build("louvain",
                   "Louvain community detection: greedy modularity local moving followed by "
                   "graph aggregation, repeated level by level. Reports the final assignment "
                   "and its modularity."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .build("modularity_metric",
                   "Evaluates the modularity of a stored community assignment, per community "
                   "and in total, directly from Q = sum_c [e_c/m - (d_c/2m)^2]."));
    specs.back().input_schema["properties"]["communityProperty"] = prop(
        "string",
        "Node property holding the community id of each node (projected or mutated).");
    specs.back().input_schema["properties"]["relationshipWeightProperty"] =
        prop("string", kWeightDesc);
    specs.back().input_schema["required"].push_back("communityProperty");

    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("maxIterations", "integer", "Local-moving sweep cap. Defaults to 10.")
            .add("tolerance", "number",
                 "Minimum modularity gain to keep sweeping. Defaults to 1e-4.")
            .add("randomSeed", "integer", "Controls node visit order only. Defaults to 42.")
            .weight()
            .nodes_filter()
            .build("modularity_optimization",
                   "Single-level modularity optimization: greedy local moving without "
                   "aggregation. Modularity never decreases between sweeps."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .nodes_filter()
            .build("strongly_connected_components",
                   "Finds strongly connected components of the directed graph: maximal node "
                   "sets where every node reaches every other along directed relationships."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .nodes_filter()
            .build("triangle_count",
                   "Counts triangles per node over distinct undirected neighbour sets and "
                   "reports the global total (each triangle counted once)."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .nodes_filter()
            .build("weakly_connected_components",
                   "Finds weakly connected components: maximal node sets connected when "
                   "relationship direction is ignored."));

    // --- similarity ------------------------------------------------------
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("similarityMetric", "string",
                 "JACCARD (intersection over union), OVERLAP (intersection over smaller "
                 "set), or COSINE. Defaults to JACCARD.")
            .add("topN", "integer",
                 "Global cap on returned pairs, keeping the highest similarities. Unset "
                 "returns everything above the cutoff.")
            .add("topK", "integer", "Per-node cap on similar neighbours. Defaults to 10.")
            .add("similarityCutoff", "number",
                 "Pairs below this similarity are dropped. Defaults to 1e-42.")
            .weight()
            .build("node_similarity",
                   "Scores node pairs by the similarity of their neighbour sets. Symmetric "
                   "pairs are reported in both directions, matching the underlying "
                   "computation; no deduplication is applied."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("nodeProperties", "array",
                 "Numeric node properties forming each node's feature vector.", true)
            .add("k", "integer", "Neighbours to keep per node. Defaults to 10.")
            .add("similarityMetric", "string",
                 "EUCLIDEAN (1/(1+distance)) or COSINE ((1+cos)/2). Defaults to EUCLIDEAN.")
            .add("randomSeed", "integer",
                 "Seed for the approximate search on large graphs. Defaults to 42.")
            .add("deltaThreshold", "number",
                 "Convergence threshold for the approximate search. Defaults to 0.001.")
            .build("k_nearest_neighbours",
                   "Finds the k most similar nodes for every node by comparing property "
                   "vectors. Small graphs are scored exactly by brute force; larger graphs "
                   "use deterministic NN-descent."));

    // --- path finding ----------------------------------------------------
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("sourceNode", "string", "Name of the source node to find the path from.", true)
            .add("targetNode", "string", "Name of the target node to find the path to.", true)
            .weight()
            .build("find_shortest_path",
                   "Dijkstra source-target shortest path. Supports weighted graphs with "
                   "non-negative relationship weights; unweighted runs cost 1.0 per hop. "
                   "Returns the path with its cumulative costs, or an explicit unreachable "
                   "notice."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("sourceNode", "string", "Name of the source node.", true)
            .add("delta", "number",
                 "Bucket width of the delta-stepping algorithm; must be > 0. Defaults to "
                 "2.0.")
            .weight()
            .build("delta_stepping_shortest_path",
                   "Delta-stepping single-source shortest paths: bucket-based relaxation that "
                   "produces exactly the same distances and paths as Dijkstra. One path per "
                   "reachable node."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("sourceNode", "string", "Name of the source node.", true)
            .weight()
            .build("dijkstra_single_source_shortest_path",
                   "Dijkstra single-source shortest paths to every reachable node. Supports "
                   "weighted graphs with non-negative relationship weights."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("sourceNode", "string", "Name of the source node.", true)
            .add("targetNode", "string", "Name of the target node.", true)
            .add("latitudeProperty", "string",
                 "Node property holding latitudes in degrees.", true)
            .add("longitudeProperty", "string",
                 "Node property holding longitudes in degrees.", true)
            .weight()
            .build("a_star_shortest_path",
                   "A* source-target shortest path guided by an admissible great-circle "
                   "heuristic over the given coordinate properties; the returned cost equals "
                   "Dijkstra's."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("sourceNode", "string", "Name of the source node to find shortest paths from.",
                 true)
            .add("targetNode", "string", "Name of the target node to find shortest paths to.",
                 true)
            .add("k", "integer",
                 "The number of shortest paths to compute between source and target node.")
            .weight()
            .build("yens_shortest_paths",
                   "Yen's k shortest loopless paths between a source and a target node. "
                   "Parallel relationships between the same two nodes are respected, and "
                   "spur searches reuse Dijkstra. For k = 1 the result is exactly Dijkstra's "
                   "shortest path; paths arrive in order of increasing total cost."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("sourceNode", "string", "Name of the node to start spanning from.", true)
            .weight()
            .build("minimum_weight_spanning_tree",
                   "Prim's minimum spanning tree of the source node's component, treating "
                   "relationships as undirected. Reports tree edges and the total weight."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("sourceNode", "string", "Name of the root node.", true)
            .add("targetNodes", "array", "Names of the targets the tree must reach.", true)
            .weight()
            .build("minimum_directed_steiner_tree",
                   "Heuristic directed Steiner tree: grows an arborescence from the root by "
                   "repeatedly attaching the nearest unreached target along its cheapest "
                   "path. Total weight never exceeds the sum of independent shortest paths."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("prizeProperty", "string",
                 "Numeric node property holding each node's prize.", true)
            .weight()
            .build("prize_collecting_steiner_tree",
                   "Heuristic prize-collecting Steiner tree: connects positive-prize nodes "
                   "via shortest paths, spans them, then prunes leaves whose prize does not "
                   "pay for their attachment edge. Objective = kept prizes minus edge "
                   "weights, never below the best single node."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .weight()
            .build("all_pairs_shortest_paths",
                   "Shortest-path distance for every ordered reachable pair of nodes. "
                   "Unreachable pairs are omitted."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("sourceNodes", "array",
                 "Walk start nodes (a single string is also accepted). Defaults to every "
                 "node.")
            .add("walksPerNode", "integer", "Walks per start node. Defaults to 10.")
            .add("walkLength", "integer",
                 "Maximum number of nodes per walk (walks stop early at dead ends). Defaults "
                 "to 80.")
            .add("randomSeed", "integer", "Seed: identical seeds give identical walks. "
                 "Defaults to 42.")
            .build("random_walk",
                   "Uniform random walks over outgoing relationships from the given start "
                   "nodes."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("sourceNode", "string", "Name of the node to start from.", true)
            .add("maxDepth", "integer", "Do not expand nodes beyond this depth.")
            .add("targetNodes", "array",
                 "Stop as soon as all of these nodes have been discovered.")
            .build("breadth_first_search",
                   "Breadth-first search from a source node. Every visited node is reported "
                   "with its discovery depth and parent, so hop distances and the traversal "
                   "tree can be read directly from the output."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("sourceNode", "string", "Name of the node to start from.", true)
            .add("maxDepth", "integer", "Do not expand nodes beyond this depth.")
            .build("depth_first_search",
                   "Depth-first preorder traversal from a source node, lowest-id neighbour "
                   "first."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .add("sourceNode", "string", "Name of the source node.", true)
            .weight()
            .build("bellman_ford_single_source_shortest_path",
                   "Bellman-Ford single-source shortest paths. Negative weights are allowed; "
                   "when a reachable negative cycle exists its node set is reported instead "
                   "of paths."));
    specs.push_back(
        SpecBuilder{}
            .algorithm_common()
            .weight()
            .build("longest_path",
                   "Longest (maximum-cost) path ending at every node of a directed acyclic "
                   "graph, highest total first. Errors if the graph contains a cycle."));

    return specs;
}

}  // namespace gdsa
