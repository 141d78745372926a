#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gdsa/projection.hpp"

namespace gdsa {

/// One path: cumulative costs starting at 0.0, matching node sequence,
/// and the arcs taken (rel indices; one fewer than nodes).
struct PathResult {
    std::int64_t index = 0;
    double total_cost = 0.0;
    std::vector<double> costs;
    std::vector<std::int64_t> node_ids;
    std::vector<std::int64_t> rel_indices;
};

struct WeightConfig {
    std::optional<std::string> relationship_weight_property;
};

/// Per-relationship weights: the named column, or 1.0 per hop when
/// unspecified. Errors when the property is missing on some relationship,
/// and on negative weights when require_non_negative is set.
std::vector<double> resolve_weights(const ProjectedGraph& pg, const WeightConfig& weight,
                                    bool require_non_negative);

std::optional<PathResult> find_shortest_path(const ProjectedGraph& pg, std::int64_t source,
                                             std::int64_t target, const WeightConfig& weight);

/// One PathResult per reachable node (source included), ascending target id.
std::vector<PathResult> dijkstra_single_source(const ProjectedGraph& pg, std::int64_t source,
                                               const WeightConfig& weight);

std::vector<PathResult> delta_stepping(const ProjectedGraph& pg, std::int64_t source,
                                       const WeightConfig& weight, double delta);

struct NegativeCycleReport {
    std::vector<std::int64_t> node_ids;  // sorted ascending
};
using BellmanFordResult = std::variant<std::vector<PathResult>, NegativeCycleReport>;

BellmanFordResult bellman_ford(const ProjectedGraph& pg, std::int64_t source,
                               const WeightConfig& weight);

std::optional<PathResult> a_star(const ProjectedGraph& pg, std::int64_t source,
                                 std::int64_t target, const WeightConfig& weight,
                                 const std::string& latitude_property,
                                 const std::string& longitude_property);

/// Loopless paths sorted by (total cost, node sequence, rel sequence);
/// at most k of them, the first identical to Dijkstra's.
std::vector<PathResult> yens_k_shortest_paths(const ProjectedGraph& pg, std::int64_t source,
                                              std::int64_t target, std::int64_t k,
                                              const WeightConfig& weight);

struct BfsVisit {
    std::int64_t node = 0;
    std::int64_t depth = 0;
    std::int64_t parent = -1;  // -1 for the source
};

/// Discovery-order BFS with per-node depth and parent. Stops expanding past
/// max_depth; terminates as soon as every requested target has been found.
std::vector<BfsVisit> bfs(const ProjectedGraph& pg, std::int64_t source,
                          std::optional<std::int64_t> max_depth,
                          const std::vector<std::int64_t>& target_nodes);

struct DfsVisit {
    std::int64_t node = 0;
    std::int64_t depth = 0;
};

/// Preorder DFS, lowest-id neighbor first.
std::vector<DfsVisit> dfs(const ProjectedGraph& pg, std::int64_t source,
                          std::optional<std::int64_t> max_depth);

struct TreeEdge {
    std::int64_t source = 0;
    std::int64_t target = 0;
    std::int64_t rel_index = 0;
    double weight = 0.0;
};

struct SpanningTree {
    std::vector<TreeEdge> edges;
    double total_weight = 0.0;
};

/// Prim from source over the undirected view; spans source's component only.
SpanningTree minimum_spanning_tree(const ProjectedGraph& pg, std::int64_t source,
                                   const WeightConfig& weight);

struct PairDistance {
    std::int64_t source = 0;
    std::int64_t target = 0;
    double distance = 0.0;
};

/// All ordered reachable pairs (u != v), sorted by (source, target).
std::vector<PairDistance> all_pairs_shortest_paths(const ProjectedGraph& pg,
                                                   const WeightConfig& weight, int threads);

struct RandomWalk {
    std::int64_t source = 0;
    std::vector<std::int64_t> node_ids;
};

std::vector<RandomWalk> random_walk(const ProjectedGraph& pg,
                                    const std::vector<std::int64_t>& source_nodes,
                                    std::int64_t walks_per_node, std::int64_t walk_length,
                                    std::uint64_t seed);

/// Maximum-cost path ending at each node of a DAG, highest total first.
/// Errors on cycles, naming one cycle node.
std::vector<PathResult> longest_path(const ProjectedGraph& pg, const WeightConfig& weight);

/// Shortest-path-merge heuristic: attaches the nearest unreached target to
/// the growing arborescence until all targets are covered.
SpanningTree minimum_directed_steiner_tree(const ProjectedGraph& pg, std::int64_t source,
                                           const std::vector<std::int64_t>& targets,
                                           const WeightConfig& weight);

struct PrizeSteinerResult {
    std::vector<std::int64_t> node_ids;  // sorted ascending
    std::vector<TreeEdge> edges;
    double objective = 0.0;  // sum of kept prizes minus sum of edge weights
};

/// Grow-and-prune heuristic over the shortest-path closure of the
/// positive-prize terminals. Never worse than the best single node.
PrizeSteinerResult prize_collecting_steiner_tree(const ProjectedGraph& pg,
                                                 const std::string& prize_property,
                                                 const WeightConfig& weight);

}  // namespace gdsa
