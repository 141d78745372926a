#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdsa/paths.hpp"
#include "gdsa/projection.hpp"

namespace gdsa {

struct ScoreRow {
    std::int64_t node_id = 0;
    double score = 0.0;
};

enum class DegreeOrientation { Natural, Reverse, Undirected };

/// Relationship count per node under the given orientation. Parallel
/// relationships each count.
std::vector<ScoreRow> degree_centrality(const ProjectedGraph& pg, DegreeOrientation orientation);

/// Wasserman-Faust closeness over unweighted hop distances:
/// ((r-1)/(n-1)) * ((r-1)/sum of distances), r = size of the reachable set.
/// Nodes that reach nothing score 0.
std::vector<ScoreRow> closeness_centrality(const ProjectedGraph& pg);

/// sum of 1/d(v,u) over u != v, normalized by (n-1).
std::vector<ScoreRow> harmonic_centrality(const ProjectedGraph& pg);

/// Brandes. Exact when sampling_size is unset; otherwise plain source
/// sampling over the sampling_size lowest node ids, scaled by n/s.
/// Unordered pairs count once on undirected graphs.
std::vector<ScoreRow> betweenness_centrality(const ProjectedGraph& pg,
                                             const WeightConfig& weight,
                                             std::optional<std::int64_t> sampling_size,
                                             int threads);

struct PageRankConfig {
    double damping_factor = 0.85;
    std::int64_t max_iterations = 20;
    double tolerance = 1e-7;
    std::vector<std::int64_t> source_nodes;  // empty: global
};

std::vector<ScoreRow> pagerank(const ProjectedGraph& pg, const PageRankConfig& config,
                               const WeightConfig& weight);

/// PageRank variant damping contributions by (out-degree + mean out-degree).
std::vector<ScoreRow> article_rank(const ProjectedGraph& pg, const PageRankConfig& config,
                                   const WeightConfig& weight);

/// Power iteration on the adjacency; L2-normalized, entries >= 0.
std::vector<ScoreRow> eigenvector_centrality(const ProjectedGraph& pg,
                                             std::int64_t max_iterations, double tolerance);

struct HitsRow {
    std::int64_t node_id = 0;
    double hub = 0.0;
    double authority = 0.0;
};

std::vector<HitsRow> hits(const ProjectedGraph& pg, std::int64_t max_iterations,
                          double tolerance);

/// Nodes whose removal increases the undirected component count. Sorted.
std::vector<std::int64_t> articulation_points(const ProjectedGraph& pg);

struct BridgeEdge {
    std::int64_t source = 0;
    std::int64_t target = 0;
    std::int64_t rel_index = 0;
};

/// Relationships whose removal increases the undirected component count,
/// ordered by relationship index.
std::vector<BridgeEdge> bridges(const ProjectedGraph& pg);

struct CelfSeed {
    std::int64_t node_id = 0;
    double spread = 0.0;  // cumulative expected spread once this seed is added
};

/// Lazy-greedy influence maximization under Independent Cascade. Spread is
/// estimated on pre-sampled live-edge worlds keyed by (seed, simulation,
/// relationship), so results are reproducible and identical to plain greedy.
std::vector<CelfSeed> celf_influence_maximization(const ProjectedGraph& pg,
                                                  std::int64_t seed_set_size,
                                                  std::int64_t monte_carlo_simulations,
                                                  double propagation_probability,
                                                  std::uint64_t seed, int threads);

}  // namespace gdsa
