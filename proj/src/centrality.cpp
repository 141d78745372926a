#include "gdsa/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "gdsa/error.hpp"
#include "gdsa/rng.hpp"
#include "parallel.hpp"

namespace gdsa {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<ScoreRow> rows_from(const std::vector<double>& scores) {
    std::vector<ScoreRow> rows(scores.size());
    for (std::size_t v = 0; v < scores.size(); ++v) {
        rows[v] = {static_cast<std::int64_t>(v), scores[v]};
    }
    return rows;
}

/// Hop distances from s following out-arcs.
std::vector<std::int64_t> bfs_distances(const ProjectedGraph& pg, std::int64_t s) {
    std::vector<std::int64_t> dist(static_cast<std::size_t>(pg.node_count()), -1);
    std::queue<std::int64_t> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
        const std::int64_t u = q.front();
        q.pop();
        for (std::int64_t arc : pg.out_arc_range(u)) {
            const std::int64_t v = pg.arc_target(arc);
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

}  // namespace

std::vector<ScoreRow> degree_centrality(const ProjectedGraph& pg,
                                        DegreeOrientation orientation) {
    const std::int64_t n = pg.node_count();
    std::vector<double> scores(static_cast<std::size_t>(n), 0.0);
    for (std::int64_t v = 0; v < n; ++v) {
        switch (orientation) {
            case DegreeOrientation::Natural:
                scores[static_cast<std::size_t>(v)] = static_cast<double>(pg.out_degree(v));
                break;
            case DegreeOrientation::Reverse:
                scores[static_cast<std::size_t>(v)] = static_cast<double>(pg.in_degree(v));
                break;
            case DegreeOrientation::Undirected:
                // On an undirected projection out-arcs already cover both
                // directions; on a directed one both sides are summed.
                scores[static_cast<std::size_t>(v)] = static_cast<double>(
                    pg.orientation() == Orientation::Undirected ? pg.out_degree(v)
                                                                : pg.out_degree(v) + pg.in_degree(v));
                break;
        }
    }
    return rows_from(scores);
}

std::vector<ScoreRow> closeness_centrality(const ProjectedGraph& pg) {
    const std::int64_t n = pg.node_count();
    std::vector<double> scores(static_cast<std::size_t>(n), 0.0);
    for (std::int64_t v = 0; v < n; ++v) {
        const auto dist = bfs_distances(pg, v);
        double sum = 0.0;
        std::int64_t reachable = 0;
        for (std::int64_t u = 0; u < n; ++u) {
            const std::int64_t d = dist[static_cast<std::size_t>(u)];
            if (d > 0) {
                sum += static_cast<double>(d);
                ++reachable;
            }
        }
        if (reachable > 0 && n > 1) {
            const double r = static_cast<double>(reachable);
            scores[static_cast<std::size_t>(v)] =
                (r / static_cast<double>(n - 1)) * (r / sum);
        }
    }
    return rows_from(scores);
}

std::vector<ScoreRow> harmonic_centrality(const ProjectedGraph& pg) {
    const std::int64_t n = pg.node_count();
    std::vector<double> scores(static_cast<std::size_t>(n), 0.0);
    if (n <= 1) return rows_from(scores);
    for (std::int64_t v = 0; v < n; ++v) {
        const auto dist = bfs_distances(pg, v);
        double sum = 0.0;
        for (std::int64_t u = 0; u < n; ++u) {
            const std::int64_t d = dist[static_cast<std::size_t>(u)];
            if (d > 0) sum += 1.0 / static_cast<double>(d);
        }
        scores[static_cast<std::size_t>(v)] = sum / static_cast<double>(n - 1);
    }
    return rows_from(scores);
}

namespace {

/// One Brandes source: dependency vector added into the caller's slot.
void brandes_from(const ProjectedGraph& pg, std::int64_t s,
                  const std::vector<double>* rel_weight, std::vector<double>& delta_out) {
    const std::int64_t n = pg.node_count();
    std::vector<double> sigma(static_cast<std::size_t>(n), 0.0);
    std::vector<double> dist(static_cast<std::size_t>(n), kInf);
    std::vector<std::vector<std::int64_t>> preds(static_cast<std::size_t>(n));
    std::vector<std::int64_t> order;
    order.reserve(static_cast<std::size_t>(n));
    sigma[static_cast<std::size_t>(s)] = 1.0;
    dist[static_cast<std::size_t>(s)] = 0.0;

    if (!rel_weight) {
        std::queue<std::int64_t> q;
        q.push(s);
        while (!q.empty()) {
            const std::int64_t u = q.front();
            q.pop();
            order.push_back(u);
            for (std::int64_t arc : pg.out_arc_range(u)) {
                const std::int64_t v = pg.arc_target(arc);
                const double nd = dist[static_cast<std::size_t>(u)] + 1.0;
                if (dist[static_cast<std::size_t>(v)] == kInf) {
                    dist[static_cast<std::size_t>(v)] = nd;
                    q.push(v);
                }
                if (dist[static_cast<std::size_t>(v)] == nd) {
                    sigma[static_cast<std::size_t>(v)] += sigma[static_cast<std::size_t>(u)];
                    preds[static_cast<std::size_t>(v)].push_back(u);
                }
            }
        }
    } else {
        using Item = std::pair<double, std::int64_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
        std::vector<char> settled(static_cast<std::size_t>(n), 0);
        heap.emplace(0.0, s);
        while (!heap.empty()) {
            auto [d, u] = heap.top();
            heap.pop();
            if (settled[static_cast<std::size_t>(u)]) continue;
            settled[static_cast<std::size_t>(u)] = 1;
            order.push_back(u);
            for (std::int64_t arc : pg.out_arc_range(u)) {
                const std::int64_t v = pg.arc_target(arc);
                if (settled[static_cast<std::size_t>(v)]) continue;
                const double nd =
                    d + (*rel_weight)[static_cast<std::size_t>(pg.arc_rel(arc))];
                if (nd < dist[static_cast<std::size_t>(v)]) {
                    dist[static_cast<std::size_t>(v)] = nd;
                    sigma[static_cast<std::size_t>(v)] = sigma[static_cast<std::size_t>(u)];
                    preds[static_cast<std::size_t>(v)].assign(1, u);
                    heap.emplace(nd, v);
                } else if (nd == dist[static_cast<std::size_t>(v)]) {
                    sigma[static_cast<std::size_t>(v)] += sigma[static_cast<std::size_t>(u)];
                    preds[static_cast<std::size_t>(v)].push_back(u);
                }
            }
        }
    }

    std::vector<double> dep(static_cast<std::size_t>(n), 0.0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const std::int64_t v = *it;
        for (std::int64_t u : preds[static_cast<std::size_t>(v)]) {
            dep[static_cast<std::size_t>(u)] +=
                sigma[static_cast<std::size_t>(u)] / sigma[static_cast<std::size_t>(v)] *
                (1.0 + dep[static_cast<std::size_t>(v)]);
        }
        if (v != s) delta_out[static_cast<std::size_t>(v)] += dep[static_cast<std::size_t>(v)];
    }
}

}  // namespace

std::vector<ScoreRow> betweenness_centrality(const ProjectedGraph& pg,
                                             const WeightConfig& weight,
                                             std::optional<std::int64_t> sampling_size,
                                             int threads) {
    const std::int64_t n = pg.node_count();
    std::optional<std::vector<double>> w;
    if (weight.relationship_weight_property) w = resolve_weights(pg, weight, true);

    std::int64_t source_count = n;
    if (sampling_size) {
        if (*sampling_size < 0) throw Error("samplingSize must be >= 0");
        source_count = std::min(*sampling_size, n);
    }

    // Per-source dependency vectors merged in source order: the sum is
    // independent of the thread count.
    std::vector<std::vector<double>> partial(static_cast<std::size_t>(source_count));
    parallel_for(source_count, threads, [&](std::int64_t s) {
        auto& slot = partial[static_cast<std::size_t>(s)];
        slot.assign(static_cast<std::size_t>(n), 0.0);
        brandes_from(pg, s, w ? &*w : nullptr, slot);
    });
    std::vector<double> scores(static_cast<std::size_t>(n), 0.0);
    for (const auto& slot : partial) {
        for (std::size_t v = 0; v < slot.size(); ++v) scores[v] += slot[v];
    }

    if (sampling_size && source_count > 0 && source_count < n) {
        const double scale = static_cast<double>(n) / static_cast<double>(source_count);
        for (double& s : scores) s *= scale;
    }
    if (pg.orientation() == Orientation::Undirected) {
        for (double& s : scores) s /= 2.0;
    }
    return rows_from(scores);
}

namespace {

struct RankWorkspace {
    std::vector<double> base;        // teleport vector, sums to source count
    std::vector<double> base_norm;   // base / sum(base)
    std::vector<double> out_strength;
};

RankWorkspace rank_workspace(const ProjectedGraph& pg, const PageRankConfig& config,
                             const std::vector<double>& w) {
    const std::int64_t n = pg.node_count();
    RankWorkspace ws;
    ws.base.assign(static_cast<std::size_t>(n), 0.0);
    if (config.source_nodes.empty()) {
        ws.base.assign(static_cast<std::size_t>(n), 1.0);
    } else {
        for (std::int64_t s : config.source_nodes) {
            if (s < 0 || s >= n) throw Error("source node id out of range");
            ws.base[static_cast<std::size_t>(s)] = 1.0;
        }
    }
    double base_sum = 0.0;
    for (double b : ws.base) base_sum += b;
    ws.base_norm.assign(static_cast<std::size_t>(n), 0.0);
    if (base_sum > 0.0) {
        for (std::size_t v = 0; v < ws.base.size(); ++v) ws.base_norm[v] = ws.base[v] / base_sum;
    }
    ws.out_strength.assign(static_cast<std::size_t>(n), 0.0);
    for (std::int64_t v = 0; v < n; ++v) {
        for (std::int64_t arc : pg.out_arc_range(v)) {
            ws.out_strength[static_cast<std::size_t>(v)] +=
                w[static_cast<std::size_t>(pg.arc_rel(arc))];
        }
    }
    return ws;
}

void check_rank_config(const PageRankConfig& config) {
    if (!(config.damping_factor > 0.0) || !(config.damping_factor < 1.0)) {
        throw Error("dampingFactor must be in (0, 1)");
    }
    if (config.max_iterations < 1) throw Error("maxIterations must be >= 1");
    if (!(config.tolerance >= 0.0)) throw Error("tolerance must be >= 0");
}

}  // namespace

std::vector<ScoreRow> pagerank(const ProjectedGraph& pg, const PageRankConfig& config,
                               const WeightConfig& weight) {
    check_rank_config(config);
    const auto w = resolve_weights(pg, weight, true);
    const std::int64_t n = pg.node_count();
    if (n == 0) return {};
    const RankWorkspace ws = rank_workspace(pg, config, w);
    const double d = config.damping_factor;

    std::vector<double> score(ws.base);
    std::vector<double> acc(static_cast<std::size_t>(n));
    for (std::int64_t iter = 0; iter < config.max_iterations; ++iter) {
        std::fill(acc.begin(), acc.end(), 0.0);
        double dangling = 0.0;
        for (std::int64_t u = 0; u < n; ++u) {
            const double strength = ws.out_strength[static_cast<std::size_t>(u)];
            if (strength == 0.0) {
                dangling += score[static_cast<std::size_t>(u)];
                continue;
            }
            const double share = score[static_cast<std::size_t>(u)] / strength;
            for (std::int64_t arc : pg.out_arc_range(u)) {
                acc[static_cast<std::size_t>(pg.arc_target(arc))] +=
                    share * w[static_cast<std::size_t>(pg.arc_rel(arc))];
            }
        }
        double diff = 0.0;
        for (std::int64_t v = 0; v < n; ++v) {
            const double next = (1.0 - d) * ws.base[static_cast<std::size_t>(v)] +
                                d * (acc[static_cast<std::size_t>(v)] +
                                     dangling * ws.base_norm[static_cast<std::size_t>(v)]);
            diff += std::abs(next - score[static_cast<std::size_t>(v)]);
            score[static_cast<std::size_t>(v)] = next;
        }
        if (diff < config.tolerance) break;
    }
    return rows_from(score);
}

std::vector<ScoreRow> article_rank(const ProjectedGraph& pg, const PageRankConfig& config,
                                   const WeightConfig& weight) {
    check_rank_config(config);
    const auto w = resolve_weights(pg, weight, true);
    const std::int64_t n = pg.node_count();
    if (n == 0) return {};
    const RankWorkspace ws = rank_workspace(pg, config, w);
    const double d = config.damping_factor;
    double avg_strength = 0.0;
    for (double s : ws.out_strength) avg_strength += s;
    avg_strength /= static_cast<double>(n);

    std::vector<double> score(ws.base);
    std::vector<double> acc(static_cast<std::size_t>(n));
    for (std::int64_t iter = 0; iter < config.max_iterations; ++iter) {
        std::fill(acc.begin(), acc.end(), 0.0);
        for (std::int64_t u = 0; u < n; ++u) {
            const double denom = ws.out_strength[static_cast<std::size_t>(u)] + avg_strength;
            if (denom == 0.0) continue;
            const double share = score[static_cast<std::size_t>(u)] / denom;
            for (std::int64_t arc : pg.out_arc_range(u)) {
                acc[static_cast<std::size_t>(pg.arc_target(arc))] +=
                    share * w[static_cast<std::size_t>(pg.arc_rel(arc))];
            }
        }
        double diff = 0.0;
        for (std::int64_t v = 0; v < n; ++v) {
            const double next =
                (1.0 - d) * ws.base[static_cast<std::size_t>(v)] + d * acc[static_cast<std::size_t>(v)];
            diff += std::abs(next - score[static_cast<std::size_t>(v)]);
            score[static_cast<std::size_t>(v)] = next;
        }
        if (diff < config.tolerance) break;
    }
    return rows_from(score);
}

std::vector<ScoreRow> eigenvector_centrality(const ProjectedGraph& pg,
                                             std::int64_t max_iterations, double tolerance) {
    if (max_iterations < 1) throw Error("maxIterations must be >= 1");
    const std::int64_t n = pg.node_count();
    if (n == 0) return {};
    std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(static_cast<std::size_t>(n));
    for (std::int64_t iter = 0; iter < max_iterations; ++iter) {
        std::fill(y.begin(), y.end(), 0.0);
        for (std::int64_t u = 0; u < n; ++u) {
            for (std::int64_t arc : pg.out_arc_range(u)) {
                y[static_cast<std::size_t>(pg.arc_target(arc))] += x[static_cast<std::size_t>(u)];
            }
        }
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0) break;  // no arcs: keep the uniform vector
        double diff = 0.0;
        for (std::size_t v = 0; v < y.size(); ++v) {
            y[v] /= norm;
            diff = std::max(diff, std::abs(y[v] - x[v]));
        }
        x.swap(y);
        if (diff < tolerance) break;
    }
    return rows_from(x);
}

std::vector<HitsRow> hits(const ProjectedGraph& pg, std::int64_t max_iterations,
                          double tolerance) {
    if (max_iterations < 1) throw Error("maxIterations must be >= 1");
    const std::int64_t n = pg.node_count();
    std::vector<double> hub(static_cast<std::size_t>(n),
                            n ? 1.0 / std::sqrt(static_cast<double>(n)) : 0.0);
    std::vector<double> auth(hub);
    auto normalize = [](std::vector<double>& v) {
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm > 0.0) {
            for (double& x : v) x /= norm;
        }
    };
    for (std::int64_t iter = 0; iter < max_iterations; ++iter) {
        std::vector<double> next_auth(static_cast<std::size_t>(n), 0.0);
        for (std::int64_t u = 0; u < n; ++u) {
            for (std::int64_t arc : pg.out_arc_range(u)) {
                next_auth[static_cast<std::size_t>(pg.arc_target(arc))] +=
                    hub[static_cast<std::size_t>(u)];
            }
        }
        normalize(next_auth);
        std::vector<double> next_hub(static_cast<std::size_t>(n), 0.0);
        for (std::int64_t u = 0; u < n; ++u) {
            for (std::int64_t arc : pg.out_arc_range(u)) {
                next_hub[static_cast<std::size_t>(u)] +=
                    next_auth[static_cast<std::size_t>(pg.arc_target(arc))];
            }
        }
        normalize(next_hub);
        double diff = 0.0;
        for (std::int64_t v = 0; v < n; ++v) {
            diff = std::max(diff, std::abs(next_hub[static_cast<std::size_t>(v)] -
                                           hub[static_cast<std::size_t>(v)]));
            diff = std::max(diff, std::abs(next_auth[static_cast<std::size_t>(v)] -
                                           auth[static_cast<std::size_t>(v)]));
        }
        hub.swap(next_hub);
        auth.swap(next_auth);
        if (diff < tolerance) break;
    }
    std::vector<HitsRow> rows(static_cast<std::size_t>(n));
    for (std::int64_t v = 0; v < n; ++v) {
        rows[static_cast<std::size_t>(v)] = {v, hub[static_cast<std::size_t>(v)],
                                             auth[static_cast<std::size_t>(v)]};
    }
    return rows;
}

namespace {

/// Iterative lowpoint DFS over the undirected view; reports articulation
/// points and bridges in one pass. The arc used to enter a node is skipped
/// (by relationship), so parallel edges register as back edges.
struct LowpointResult {
    std::vector<std::int64_t> articulation;  // sorted
    std::vector<BridgeEdge> bridges;         // by relationship index
};

LowpointResult lowpoint_scan(const ProjectedGraph& pg) {
    const std::int64_t n = pg.node_count();
    // Undirected adjacency: (neighbor, rel) both ways.
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> adj(
        static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < pg.rels().size(); ++i) {
        const auto& r = pg.rels()[i];
        adj[static_cast<std::size_t>(r.source)].emplace_back(r.target,
                                                             static_cast<std::int64_t>(i));
        if (r.source != r.target) {
            adj[static_cast<std::size_t>(r.target)].emplace_back(r.source,
                                                                 static_cast<std::int64_t>(i));
        }
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    std::vector<std::int64_t> disc(static_cast<std::size_t>(n), -1);
    std::vector<std::int64_t> low(static_cast<std::size_t>(n), 0);
    std::vector<char> is_articulation(static_cast<std::size_t>(n), 0);
    std::vector<char> is_bridge(pg.rels().size(), 0);
    std::int64_t timer = 0;

    struct Frame {
        std::int64_t node;
        std::int64_t parent;
        std::int64_t entry_rel;
        std::size_t next = 0;
        std::int64_t children = 0;
    };
    for (std::int64_t root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0) continue;
        std::vector<Frame> stack{{root, -1, -1}};
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nbrs = adj[static_cast<std::size_t>(f.node)];
            if (f.next < nbrs.size()) {
                const auto [v, rel] = nbrs[f.next++];
                if (rel == f.entry_rel) continue;
                if (disc[static_cast<std::size_t>(v)] >= 0) {
                    low[static_cast<std::size_t>(f.node)] =
                        std::min(low[static_cast<std::size_t>(f.node)],
                                 disc[static_cast<std::size_t>(v)]);
                } else {
                    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
                    ++f.children;
                    stack.push_back({v, f.node, rel});
                }
            } else {
                const Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& parent = stack.back();
                    low[static_cast<std::size_t>(parent.node)] =
                        std::min(low[static_cast<std::size_t>(parent.node)],
                                 low[static_cast<std::size_t>(done.node)]);
                    if (low[static_cast<std::size_t>(done.node)] >
                        disc[static_cast<std::size_t>(parent.node)]) {
                        is_bridge[static_cast<std::size_t>(done.entry_rel)] = 1;
                    }
                    if (parent.parent != -1 &&
                        low[static_cast<std::size_t>(done.node)] >=
                            disc[static_cast<std::size_t>(parent.node)]) {
                        is_articulation[static_cast<std::size_t>(parent.node)] = 1;
                    }
                } else if (done.children > 1) {
                    is_articulation[static_cast<std::size_t>(done.node)] = 1;
                }
            }
        }
    }

    LowpointResult out;
    for (std::int64_t v = 0; v < n; ++v) {
        if (is_articulation[static_cast<std::size_t>(v)]) out.articulation.push_back(v);
    }
    for (std::size_t i = 0; i < pg.rels().size(); ++i) {
        if (is_bridge[i]) {
            out.bridges.push_back(
                {pg.rels()[i].source, pg.rels()[i].target, static_cast<std::int64_t>(i)});
        }
    }
    return out;
}

}  // namespace

std::vector<std::int64_t> articulation_points(const ProjectedGraph& pg) {
    return lowpoint_scan(pg).articulation;
}

std::vector<BridgeEdge> bridges(const ProjectedGraph& pg) {
    return lowpoint_scan(pg).bridges;
}

namespace {

/// Marginal spread of adding `extra` to the already-activated set in one
/// live-edge world.
std::int64_t live_edge_gain(const ProjectedGraph& pg, const std::vector<char>& live,
                            const std::vector<char>& active, std::int64_t extra) {
    if (active[static_cast<std::size_t>(extra)]) return 0;
    std::int64_t gained = 0;
    std::vector<std::int64_t> stack{extra};
    std::vector<char> mark(active.size(), 0);
    mark[static_cast<std::size_t>(extra)] = 1;
    while (!stack.empty()) {
        const std::int64_t u = stack.back();
        stack.pop_back();
        ++gained;
        for (std::int64_t arc : pg.out_arc_range(u)) {
            if (!live[static_cast<std::size_t>(pg.arc_rel(arc))]) continue;
            const std::int64_t v = pg.arc_target(arc);
            if (mark[static_cast<std::size_t>(v)] || active[static_cast<std::size_t>(v)]) continue;
            mark[static_cast<std::size_t>(v)] = 1;
            stack.push_back(v);
        }
    }
    return gained;
}

void activate(const ProjectedGraph& pg, const std::vector<char>& live, std::vector<char>& active,
              std::int64_t seed_node) {
    if (active[static_cast<std::size_t>(seed_node)]) return;
    std::vector<std::int64_t> stack{seed_node};
    active[static_cast<std::size_t>(seed_node)] = 1;
    while (!stack.empty()) {
        const std::int64_t u = stack.back();
        stack.pop_back();
        for (std::int64_t arc : pg.out_arc_range(u)) {
            if (!live[static_cast<std::size_t>(pg.arc_rel(arc))]) continue;
            const std::int64_t v = pg.arc_target(arc);
            if (active[static_cast<std::size_t>(v)]) continue;
            active[static_cast<std::size_t>(v)] = 1;
            stack.push_back(v);
        }
    }
}

}  // namespace

std::vector<CelfSeed> celf_influence_maximization(const ProjectedGraph& pg,
                                                  std::int64_t seed_set_size,
                                                  std::int64_t monte_carlo_simulations,
                                                  double propagation_probability,
                                                  std::uint64_t seed, int threads) {
    const std::int64_t n = pg.node_count();
    if (seed_set_size < 1) throw Error("seedSetSize must be >= 1");
    if (monte_carlo_simulations < 1) throw Error("monteCarloSimulations must be >= 1");
    if (propagation_probability < 0.0 || propagation_probability > 1.0) {
        throw Error("propagationProbability must be in [0, 1]");
    }
    const std::int64_t k = std::min(seed_set_size, n);
    const std::size_t sims = static_cast<std::size_t>(monte_carlo_simulations);

    // Pre-sampled live-edge worlds make the spread a fixed submodular
    // function: CELF then matches plain greedy exactly.
    std::vector<std::vector<char>> live(sims);
    const std::size_t m = static_cast<std::size_t>(pg.relationship_count());
    for (std::size_t sim = 0; sim < sims; ++sim) {
        live[sim].assign(m, 0);
        for (std::size_t rel = 0; rel < m; ++rel) {
            KeyedRng rng(KeyedRng::key_of({seed, sim, rel}));
            live[sim][rel] = rng.next_unit() < propagation_probability ? 1 : 0;
        }
    }
    std::vector<std::vector<char>> active(sims,
                                          std::vector<char>(static_cast<std::size_t>(n), 0));

    auto marginal_gain = [&](std::int64_t v) {
        std::vector<double> per_sim(sims, 0.0);
        parallel_for(static_cast<std::int64_t>(sims), threads, [&](std::int64_t sim) {
            per_sim[static_cast<std::size_t>(sim)] = static_cast<double>(
                live_edge_gain(pg, live[static_cast<std::size_t>(sim)],
                               active[static_cast<std::size_t>(sim)], v));
        });
        double total = 0.0;
        for (double g : per_sim) total += g;  // fixed order, thread-count independent
        return total / static_cast<double>(sims);
    };

    // Lazy greedy: (gain, node, round the gain was computed in).
    struct Entry {
        double gain;
        std::int64_t node;
        std::int64_t round;
    };
    auto cmp = [](const Entry& a, const Entry& b) {
        if (a.gain != b.gain) return a.gain < b.gain;
        return a.node > b.node;  // lowest id wins ties
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> queue(cmp);
    for (std::int64_t v = 0; v < n; ++v) queue.push({marginal_gain(v), v, 0});

    std::vector<CelfSeed> seeds;
    double cumulative = 0.0;
    for (std::int64_t round = 1; round <= k; ++round) {
        while (true) {
            Entry top = queue.top();
            queue.pop();
            if (top.round == round - 1) {  // gain is fresh for this round
                cumulative += top.gain;
                for (std::size_t sim = 0; sim < sims; ++sim) {
                    activate(pg, live[sim], active[sim], top.node);
                }
                seeds.push_back({top.node, cumulative});
                break;
            }
            top.gain = marginal_gain(top.node);
            top.round = round - 1;
            queue.push(top);
        }
    }
    return seeds;
}

}  // namespace gdsa
