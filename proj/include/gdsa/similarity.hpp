#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdsa/paths.hpp"
#include "gdsa/projection.hpp"

namespace gdsa {

struct SimilarityPairRow {
    std::int64_t node1 = 0;
    std::int64_t node2 = 0;
    double similarity = 0.0;
};

enum class SimilarityMetric { Jaccard, Overlap, Cosine };

struct NodeSimilarityConfig {
    SimilarityMetric metric = SimilarityMetric::Jaccard;
    std::optional<std::int64_t> top_n;  // global cap; unset = all
    std::int64_t top_k = 10;            // per-source cap
    double similarity_cutoff = 1e-42;
    WeightConfig weight;                // weighted cosine when set
};

/// Pairwise similarity over out-neighbor sets. Both directions of a
/// symmetric pair are computed independently (no deduplication). Rows are
/// sorted by (similarity desc, node1, node2); per-node topK and global topN
/// truncate under the same ordering.
std::vector<SimilarityPairRow> node_similarity(const ProjectedGraph& pg,
                                               const NodeSimilarityConfig& config, int threads);

enum class KnnMetric { Euclidean, Cosine };

struct KnnConfig {
    std::vector<std::string> node_properties;
    std::int64_t k = 10;
    KnnMetric metric = KnnMetric::Euclidean;
    std::uint64_t sampling_seed = 42;
    double delta_threshold = 0.001;
};

/// k nearest neighbours over node property vectors. Graphs with up to 200
/// nodes are scored by exact brute force; larger graphs use deterministic
/// NN-descent seeded from sampling_seed. Euclidean similarity is
/// 1/(1+distance); cosine maps to (1+cos)/2 so scores stay in [0, 1].
std::vector<SimilarityPairRow> knn(const ProjectedGraph& pg, const KnnConfig& config,
                                   int threads);

}  // namespace gdsa
