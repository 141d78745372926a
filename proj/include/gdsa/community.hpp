#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdsa/centrality.hpp"
#include "gdsa/paths.hpp"
#include "gdsa/projection.hpp"

namespace gdsa {

struct CommunityRow {
    std::int64_t node_id = 0;
    std::int64_t community_id = 0;
};

/// Canonical relabeling shared by every community output: communities are
/// numbered 0..k-1 in order of their smallest member id.
std::vector<CommunityRow> canonical_communities(const std::vector<std::int64_t>& raw_labels);

std::vector<CommunityRow> weakly_connected_components(const ProjectedGraph& pg);

/// Tarjan semantics over directed arcs.
std::vector<CommunityRow> strongly_connected_components(const ProjectedGraph& pg);

struct TriangleCounts {
    std::vector<std::int64_t> per_node;
    std::int64_t global = 0;
};

/// Triangles over distinct undirected neighbor sets (parallel edges and
/// self-loops do not create extra triangles).
TriangleCounts triangle_count(const ProjectedGraph& pg);

std::vector<ScoreRow> local_clustering_coefficient(const ProjectedGraph& pg);

/// Largest k such that the node survives in the k-core (distinct neighbors).
std::vector<std::int64_t> k_core_decomposition(const ProjectedGraph& pg);

struct ColoringResult {
    std::vector<std::int64_t> colors;
    std::int64_t conflicting_edges = 0;
    std::int64_t iterations = 0;
};

ColoringResult k1_coloring(const ProjectedGraph& pg, std::int64_t max_iterations);

/// Synchronous label propagation, lowest-label tie-break.
std::vector<CommunityRow> label_propagation(const ProjectedGraph& pg,
                                            std::int64_t max_iterations, std::uint64_t seed);

struct PartitionResult {
    std::vector<CommunityRow> rows;
    double modularity = 0.0;
    std::int64_t levels = 0;  // levels (louvain/leiden) or sweeps (local moving)
};

PartitionResult louvain(const ProjectedGraph& pg, std::int64_t max_levels, double tolerance,
                        std::uint64_t seed, const WeightConfig& weight);

/// Louvain plus a refinement phase; every returned community induces a
/// connected subgraph.
PartitionResult leiden(const ProjectedGraph& pg, double gamma, std::int64_t max_levels,
                       std::uint64_t seed, const WeightConfig& weight);

/// Single-level local moving.
PartitionResult modularity_optimization(const ProjectedGraph& pg, std::int64_t max_iterations,
                                        double tolerance, std::uint64_t seed,
                                        const WeightConfig& weight);

struct CommunityModularity {
    std::int64_t community = 0;
    double modularity = 0.0;
};

struct ModularityReport {
    std::vector<CommunityModularity> per_community;
    double total = 0.0;
};

/// Direct evaluation of Q = sum_c [ e_c/m - (d_c/2m)^2 ] for a stored
/// assignment (community ids need not be contiguous).
ModularityReport modularity_metric(const ProjectedGraph& pg,
                                   const std::vector<std::int64_t>& assignment,
                                   const WeightConfig& weight);

struct ConductanceRow {
    std::int64_t community = 0;
    double conductance = 0.0;
    bool defined = false;
};

std::vector<ConductanceRow> conductance(const ProjectedGraph& pg,
                                        const std::vector<std::int64_t>& assignment,
                                        const WeightConfig& weight);

struct KmeansResult {
    std::vector<CommunityRow> rows;
    std::vector<std::vector<double>> centroids;  // indexed by community id
    double wcss = 0.0;
    std::int64_t iterations = 0;
};

/// Lloyd iterations over per-node feature vectors built from the given
/// scalar/array property columns. k-means++ seeding from `seed`.
KmeansResult kmeans(const ProjectedGraph& pg, const std::vector<std::string>& property_keys,
                    std::int64_t k, std::int64_t max_iterations, std::uint64_t seed);

/// Feature matrix used by kmeans and knn: concatenation of the named
/// columns, errors on absent values or ragged array lengths.
std::vector<std::vector<double>> node_feature_matrix(const ProjectedGraph& pg,
                                                     const std::vector<std::string>& keys);

}  // namespace gdsa
