#include "gdsa/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "gdsa/community.hpp"
#include "gdsa/error.hpp"
#include "gdsa/rng.hpp"
#include "parallel.hpp"

namespace gdsa {

namespace {

struct NeighborVector {
    std::vector<std::int64_t> ids;     // distinct out-neighbors, ascending
    std::vector<double> weights;       // parallel arcs summed; 1s when unweighted
    double norm = 0.0;                 // L2 norm of weights
};

std::vector<NeighborVector> neighbor_vectors(const ProjectedGraph& pg,
                                             const WeightConfig& weight) {
    std::optional<std::vector<double>> w;
    if (weight.relationship_weight_property) w = resolve_weights(pg, weight, true);
    const std::int64_t n = pg.node_count();
    std::vector<NeighborVector> out(static_cast<std::size_t>(n));
    for (std::int64_t v = 0; v < n; ++v) {
        std::map<std::int64_t, double> acc;
        for (std::int64_t arc : pg.out_arc_range(v)) {
            const double wt = w ? (*w)[static_cast<std::size_t>(pg.arc_rel(arc))] : 1.0;
            acc[pg.arc_target(arc)] += wt;
        }
        auto& nv = out[static_cast<std::size_t>(v)];
        for (const auto& [u, wt] : acc) {
            nv.ids.push_back(u);
            nv.weights.push_back(wt);
            nv.norm += wt * wt;
        }
        nv.norm = std::sqrt(nv.norm);
    }
    return out;
}

double pair_similarity(const NeighborVector& a, const NeighborVector& b,
                       SimilarityMetric metric, bool weighted) {
    std::size_t i = 0, j = 0;
    std::int64_t common = 0;
    double dot = 0.0;
    while (i < a.ids.size() && j < b.ids.size()) {
        if (a.ids[i] < b.ids[j]) ++i;
        else if (b.ids[j] < a.ids[i]) ++j;
        else {
            ++common;
            dot += a.weights[i] * b.weights[j];
            ++i;
            ++j;
        }
    }
    const double na = static_cast<double>(a.ids.size());
    const double nb = static_cast<double>(b.ids.size());
    switch (metric) {
        case SimilarityMetric::Jaccard:
            return static_cast<double>(common) / (na + nb - static_cast<double>(common));
        case SimilarityMetric::Overlap:
            return static_cast<double>(common) / std::min(na, nb);
        case SimilarityMetric::Cosine:
            if (weighted) {
                return a.norm > 0.0 && b.norm > 0.0 ? dot / (a.norm * b.norm) : 0.0;
            }
            return static_cast<double>(common) / std::sqrt(na * nb);
    }
    return 0.0;
}

void sort_pairs(std::vector<SimilarityPairRow>& rows) {
    std::sort(rows.begin(), rows.end(),
              [](const SimilarityPairRow& a, const SimilarityPairRow& b) {
                  if (a.similarity != b.similarity) return a.similarity > b.similarity;
                  if (a.node1 != b.node1) return a.node1 < b.node1;
                  return a.node2 < b.node2;
              });
}

}  // namespace

std::vector<SimilarityPairRow> node_similarity(const ProjectedGraph& pg,
                                               const NodeSimilarityConfig& config,
                                               int threads) {
    if (config.top_k < 1) throw Error("topK must be >= 1");
    if (config.top_n && *config.top_n < 0) throw Error("topN must be >= 0");
    const bool weighted = config.weight.relationship_weight_property.has_value();
    const auto vectors = neighbor_vectors(pg, config.weight);
    const std::int64_t n = pg.node_count();

    std::vector<std::vector<SimilarityPairRow>> per_source(static_cast<std::size_t>(n));
    parallel_for(n, threads, [&](std::int64_t a) {
        const auto& va = vectors[static_cast<std::size_t>(a)];
        if (va.ids.empty()) return;
        auto& rows = per_source[static_cast<std::size_t>(a)];
        for (std::int64_t b = 0; b < n; ++b) {
            if (a == b) continue;
            const auto& vb = vectors[static_cast<std::size_t>(b)];
            if (vb.ids.empty()) continue;
            const double s = pair_similarity(va, vb, config.metric, weighted);
            if (s >= config.similarity_cutoff) rows.push_back({a, b, s});
        }
        sort_pairs(rows);
        if (static_cast<std::int64_t>(rows.size()) > config.top_k) {
            rows.resize(static_cast<std::size_t>(config.top_k));
        }
    });

    std::vector<SimilarityPairRow> out;
    for (const auto& rows : per_source) out.insert(out.end(), rows.begin(), rows.end());
    sort_pairs(out);
    if (config.top_n && static_cast<std::int64_t>(out.size()) > *config.top_n) {
        out.resize(static_cast<std::size_t>(*config.top_n));
    }
    return out;
}

namespace {

double vector_similarity(const std::vector<double>& a, const std::vector<double>& b,
                         KnnMetric metric) {
    if (metric == KnnMetric::Euclidean) {
        double d = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double diff = a[i] - b[i];
            d += diff * diff;
        }
        return 1.0 / (1.0 + std::sqrt(d));
    }
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) return 0.0;
    return (1.0 + dot / std::sqrt(na * nb)) / 2.0;
}

struct ScoredNeighbor {
    double similarity;
    std::int64_t node;
    bool operator<(const ScoredNeighbor& other) const {
        if (similarity != other.similarity) return similarity > other.similarity;
        return node < other.node;
    }
    bool operator==(const ScoredNeighbor& other) const {
        return similarity == other.similarity && node == other.node;
    }
};

}  // namespace

std::vector<SimilarityPairRow> knn(const ProjectedGraph& pg, const KnnConfig& config,
                                   int threads) {
    if (config.k < 1) throw Error("k must be >= 1");
    const auto features = node_feature_matrix(pg, config.node_properties);
    const std::int64_t n = pg.node_count();
    if (n <= 1) return {};
    const std::size_t k = static_cast<std::size_t>(std::min<std::int64_t>(config.k, n - 1));

    std::vector<std::vector<ScoredNeighbor>> lists(static_cast<std::size_t>(n));

    if (n <= 200) {
        // Exact brute force.
        parallel_for(n, threads, [&](std::int64_t a) {
            auto& list = lists[static_cast<std::size_t>(a)];
            for (std::int64_t b = 0; b < n; ++b) {
                if (a == b) continue;
                list.push_back({vector_similarity(features[static_cast<std::size_t>(a)],
                                                  features[static_cast<std::size_t>(b)],
                                                  config.metric),
                                b});
            }
            std::sort(list.begin(), list.end());
            list.resize(k);
        });
    } else {
        // Deterministic NN-descent: keyed random initialization, then
        // neighbor-of-neighbor refinement until the update rate drops
        // below delta_threshold.
        for (std::int64_t v = 0; v < n; ++v) {
            std::set<std::int64_t> init;
            KeyedRng rng(KeyedRng::key_of({config.sampling_seed,
                                           static_cast<std::uint64_t>(v)}));
            while (init.size() < k) {
                const std::int64_t u =
                    static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(n)));
                if (u != v) init.insert(u);
            }
            auto& list = lists[static_cast<std::size_t>(v)];
            for (std::int64_t u : init) {
                list.push_back({vector_similarity(features[static_cast<std::size_t>(v)],
                                                  features[static_cast<std::size_t>(u)],
                                                  config.metric),
                                u});
            }
            std::sort(list.begin(), list.end());
        }
        for (int round = 0; round < 100; ++round) {
            std::int64_t updates = 0;
            std::vector<std::vector<ScoredNeighbor>> next(lists);
            for (std::int64_t v = 0; v < n; ++v) {
                std::set<std::int64_t> candidates;
                for (const auto& nb : lists[static_cast<std::size_t>(v)]) {
                    candidates.insert(nb.node);
                    for (const auto& nb2 : lists[static_cast<std::size_t>(nb.node)]) {
                        if (nb2.node != v) candidates.insert(nb2.node);
                    }
                }
                auto& list = next[static_cast<std::size_t>(v)];
                std::set<std::int64_t> present;
                for (const auto& nb : list) present.insert(nb.node);
                for (std::int64_t c : candidates) {
                    if (present.count(c)) continue;
                    list.push_back({vector_similarity(features[static_cast<std::size_t>(v)],
                                                      features[static_cast<std::size_t>(c)],
                                                      config.metric),
                                    c});
                }
                std::sort(list.begin(), list.end());
                if (list.size() > k) list.resize(k);
                if (list != lists[static_cast<std::size_t>(v)]) ++updates;
            }
            lists.swap(next);
            if (static_cast<double>(updates) <
                config.delta_threshold * static_cast<double>(n)) {
                break;
            }
        }
    }

    std::vector<SimilarityPairRow> out;
    for (std::int64_t v = 0; v < n; ++v) {
        for (const auto& nb : lists[static_cast<std::size_t>(v)]) {
            out.push_back({v, nb.node, nb.similarity});
        }
    }
    sort_pairs(out);
    return out;
}

}  // namespace gdsa
