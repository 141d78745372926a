#include "gdsa/community.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "gdsa/error.hpp"
#include "gdsa/rng.hpp"

namespace gdsa {

std::vector<CommunityRow> canonical_communities(const std::vector<std::int64_t>& raw_labels) {
    std::map<std::int64_t, std::int64_t> relabel;
    std::vector<CommunityRow> rows(raw_labels.size());
    for (std::size_t v = 0; v < raw_labels.size(); ++v) {
        auto [it, inserted] =
            relabel.emplace(raw_labels[v], static_cast<std::int64_t>(relabel.size()));
        rows[v] = {static_cast<std::int64_t>(v), it->second};
    }
    return rows;
}

namespace {

/// Distinct undirected neighbors, self excluded, ascending.
std::vector<std::vector<std::int64_t>> distinct_neighbors(const ProjectedGraph& pg) {
    const std::int64_t n = pg.node_count();
    std::vector<std::set<std::int64_t>> sets(static_cast<std::size_t>(n));
    for (const auto& r : pg.rels()) {
        if (r.source == r.target) continue;
        sets[static_cast<std::size_t>(r.source)].insert(r.target);
        sets[static_cast<std::size_t>(r.target)].insert(r.source);
    }
    std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(n));
    for (std::size_t v = 0; v < sets.size(); ++v) out[v].assign(sets[v].begin(), sets[v].end());
    return out;
}

struct UnionFind {
    std::vector<std::int64_t> parent;
    explicit UnionFind(std::int64_t n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::int64_t find(std::int64_t x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(std::int64_t a, std::int64_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace

std::vector<CommunityRow> weakly_connected_components(const ProjectedGraph& pg) {
    UnionFind uf(pg.node_count());
    for (const auto& r : pg.rels()) uf.unite(r.source, r.target);
    std::vector<std::int64_t> labels(static_cast<std::size_t>(pg.node_count()));
    for (std::int64_t v = 0; v < pg.node_count(); ++v) {
        labels[static_cast<std::size_t>(v)] = uf.find(v);
    }
    return canonical_communities(labels);
}

std::vector<CommunityRow> strongly_connected_components(const ProjectedGraph& pg) {
    const std::int64_t n = pg.node_count();
    // Iterative Tarjan.
    std::vector<std::int64_t> disc(static_cast<std::size_t>(n), -1);
    std::vector<std::int64_t> low(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> labels(static_cast<std::size_t>(n), -1);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> tarjan_stack;
    std::int64_t timer = 0;

    struct Frame {
        std::int64_t node;
        std::size_t next_arc = 0;
    };
    for (std::int64_t root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0) continue;
        std::vector<Frame> frames{{root}};
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        tarjan_stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto arcs = pg.out_arc_range(f.node);
            if (f.next_arc < arcs.size()) {
                const std::int64_t v = pg.arc_target(arcs[f.next_arc++]);
                if (disc[static_cast<std::size_t>(v)] < 0) {
                    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
                    tarjan_stack.push_back(v);
                    on_stack[static_cast<std::size_t>(v)] = 1;
                    frames.push_back({v});
                } else if (on_stack[static_cast<std::size_t>(v)]) {
                    low[static_cast<std::size_t>(f.node)] = std::min(
                        low[static_cast<std::size_t>(f.node)], disc[static_cast<std::size_t>(v)]);
                }
            } else {
                const std::int64_t u = f.node;
                frames.pop_back();
                if (!frames.empty()) {
                    low[static_cast<std::size_t>(frames.back().node)] =
                        std::min(low[static_cast<std::size_t>(frames.back().node)],
                                 low[static_cast<std::size_t>(u)]);
                }
                if (low[static_cast<std::size_t>(u)] == disc[static_cast<std::size_t>(u)]) {
                    while (true) {
                        const std::int64_t w = tarjan_stack.back();
                        tarjan_stack.pop_back();
                        on_stack[static_cast<std::size_t>(w)] = 0;
                        labels[static_cast<std::size_t>(w)] = u;
                        if (w == u) break;
                    }
                }
            }
        }
    }
    return canonical_communities(labels);
}

TriangleCounts triangle_count(const ProjectedGraph& pg) {
    const auto nbrs = distinct_neighbors(pg);
    const std::int64_t n = pg.node_count();
    TriangleCounts out;
    out.per_node.assign(static_cast<std::size_t>(n), 0);
    for (std::int64_t u = 0; u < n; ++u) {
        for (std::int64_t v : nbrs[static_cast<std::size_t>(u)]) {
            if (v <= u) continue;
            // w > v adjacent to both u and v
            const auto& nu = nbrs[static_cast<std::size_t>(u)];
            const auto& nv = nbrs[static_cast<std::size_t>(v)];
            auto iu = std::upper_bound(nu.begin(), nu.end(), v);
            auto iv = std::upper_bound(nv.begin(), nv.end(), v);
            while (iu != nu.end() && iv != nv.end()) {
                if (*iu < *iv) ++iu;
                else if (*iv < *iu) ++iv;
                else {
                    ++out.per_node[static_cast<std::size_t>(u)];
                    ++out.per_node[static_cast<std::size_t>(v)];
                    ++out.per_node[static_cast<std::size_t>(*iu)];
                    ++out.global;
                    ++iu;
                    ++iv;
                }
            }
        }
    }
    return out;
}

std::vector<ScoreRow> local_clustering_coefficient(const ProjectedGraph& pg) {
    const auto nbrs = distinct_neighbors(pg);
    const auto tri = triangle_count(pg);
    std::vector<ScoreRow> rows(static_cast<std::size_t>(pg.node_count()));
    for (std::int64_t v = 0; v < pg.node_count(); ++v) {
        const double deg = static_cast<double>(nbrs[static_cast<std::size_t>(v)].size());
        double score = 0.0;
        if (deg >= 2.0) {
            score = 2.0 * static_cast<double>(tri.per_node[static_cast<std::size_t>(v)]) /
                    (deg * (deg - 1.0));
        }
        rows[static_cast<std::size_t>(v)] = {v, score};
    }
    return rows;
}

std::vector<std::int64_t> k_core_decomposition(const ProjectedGraph& pg) {
    const auto nbrs = distinct_neighbors(pg);
    const std::int64_t n = pg.node_count();
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n));
    std::set<std::pair<std::int64_t, std::int64_t>> queue;  // (degree, node)
    for (std::int64_t v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = static_cast<std::int64_t>(
            nbrs[static_cast<std::size_t>(v)].size());
        queue.emplace(deg[static_cast<std::size_t>(v)], v);
    }
    std::vector<std::int64_t> core(static_cast<std::size_t>(n), 0);
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::int64_t k = 0;
    while (!queue.empty()) {
        const auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        k = std::max(k, d);
        core[static_cast<std::size_t>(v)] = k;
        removed[static_cast<std::size_t>(v)] = 1;
        for (std::int64_t u : nbrs[static_cast<std::size_t>(v)]) {
            if (removed[static_cast<std::size_t>(u)]) continue;
            queue.erase({deg[static_cast<std::size_t>(u)], u});
            --deg[static_cast<std::size_t>(u)];
            queue.emplace(deg[static_cast<std::size_t>(u)], u);
        }
    }
    return core;
}

ColoringResult k1_coloring(const ProjectedGraph& pg, std::int64_t max_iterations) {
    if (max_iterations < 1) throw Error("maxIterations must be >= 1");
    const auto nbrs = distinct_neighbors(pg);
    const std::int64_t n = pg.node_count();
    ColoringResult result;
    result.colors.assign(static_cast<std::size_t>(n), 0);

    auto conflicts = [&]() {
        std::int64_t count = 0;
        for (const auto& r : pg.rels()) {
            if (r.source != r.target &&
                result.colors[static_cast<std::size_t>(r.source)] ==
                    result.colors[static_cast<std::size_t>(r.target)]) {
                ++count;
            }
        }
        return count;
    };

    for (std::int64_t iter = 0; iter < max_iterations; ++iter) {
        ++result.iterations;
        for (std::int64_t v = 0; v < n; ++v) {
            std::set<std::int64_t> used;
            for (std::int64_t u : nbrs[static_cast<std::size_t>(v)]) {
                used.insert(result.colors[static_cast<std::size_t>(u)]);
            }
            if (!used.count(result.colors[static_cast<std::size_t>(v)])) continue;
            std::int64_t c = 0;
            while (used.count(c)) ++c;
            result.colors[static_cast<std::size_t>(v)] = c;
        }
        result.conflicting_edges = conflicts();
        if (result.conflicting_edges == 0) break;
    }
    return result;
}

std::vector<CommunityRow> label_propagation(const ProjectedGraph& pg,
                                            std::int64_t max_iterations, std::uint64_t seed) {
    if (max_iterations < 1) throw Error("maxIterations must be >= 1");
    (void)seed;  // synchronous sweeps with lowest-label ties need no randomness
    const std::int64_t n = pg.node_count();
    std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 0);
    std::vector<std::int64_t> next(labels);
    for (std::int64_t iter = 0; iter < max_iterations; ++iter) {
        bool changed = false;
        for (std::int64_t v = 0; v < n; ++v) {
            std::map<std::int64_t, std::int64_t> votes;
            for (std::int64_t arc : pg.out_arc_range(v)) {
                const std::int64_t u = pg.arc_target(arc);
                if (u != v) ++votes[labels[static_cast<std::size_t>(u)]];
            }
            if (votes.empty()) {
                next[static_cast<std::size_t>(v)] = labels[static_cast<std::size_t>(v)];
                continue;
            }
            std::int64_t best_label = -1, best_count = 0;
            for (const auto& [label, count] : votes) {
                if (count > best_count) {  // ties keep the lowest label (map order)
                    best_count = count;
                    best_label = label;
                }
            }
            if (best_label != labels[static_cast<std::size_t>(v)]) changed = true;
            next[static_cast<std::size_t>(v)] = best_label;
        }
        labels.swap(next);
        if (!changed) break;
    }
    return canonical_communities(labels);
}

// ---------------------------------------------------------------------------
// Modularity family

namespace {

/// Weighted undirected multigraph view used by the level algorithms.
struct LevelGraph {
    std::int64_t n = 0;
    std::vector<std::vector<std::pair<std::int64_t, double>>> adj;  // parallel edges merged
    std::vector<double> self_loop;  // weight of v-v edges (counted once)
    std::vector<double> strength;   // weighted degree; self loops count twice
    double m2 = 0.0;                // total strength
};

LevelGraph level_graph_from(const ProjectedGraph& pg, const std::vector<double>& w) {
    LevelGraph g;
    g.n = pg.node_count();
    g.adj.assign(static_cast<std::size_t>(g.n), {});
    g.self_loop.assign(static_cast<std::size_t>(g.n), 0.0);
    g.strength.assign(static_cast<std::size_t>(g.n), 0.0);
    std::vector<std::map<std::int64_t, double>> merged(static_cast<std::size_t>(g.n));
    for (std::size_t i = 0; i < pg.rels().size(); ++i) {
        const auto& r = pg.rels()[i];
        const double wt = w[i];
        if (r.source == r.target) {
            g.self_loop[static_cast<std::size_t>(r.source)] += wt;
            g.strength[static_cast<std::size_t>(r.source)] += 2.0 * wt;
        } else {
            merged[static_cast<std::size_t>(r.source)][r.target] += wt;
            merged[static_cast<std::size_t>(r.target)][r.source] += wt;
            g.strength[static_cast<std::size_t>(r.source)] += wt;
            g.strength[static_cast<std::size_t>(r.target)] += wt;
        }
    }
    for (std::size_t v = 0; v < merged.size(); ++v) {
        g.adj[v].assign(merged[v].begin(), merged[v].end());
    }
    for (double s : g.strength) g.m2 += s;
    return g;
}

double level_modularity(const LevelGraph& g, const std::vector<std::int64_t>& labels,
                        double gamma) {
    if (g.m2 == 0.0) return 0.0;
    std::map<std::int64_t, double> intra, total;
    for (std::int64_t v = 0; v < g.n; ++v) {
        const std::int64_t c = labels[static_cast<std::size_t>(v)];
        total[c] += g.strength[static_cast<std::size_t>(v)];
        intra[c] += g.self_loop[static_cast<std::size_t>(v)];
        for (const auto& [u, wt] : g.adj[static_cast<std::size_t>(v)]) {
            if (labels[static_cast<std::size_t>(u)] == c && u > v) intra[c] += wt;
        }
    }
    const double m = g.m2 / 2.0;
    double q = 0.0;
    for (const auto& [c, tot] : total) {
        q += intra[c] / m - gamma * (tot / g.m2) * (tot / g.m2);
    }
    return q;
}

/// One local-moving phase. Returns the number of sweeps run; labels are
/// updated in place. Stops when a sweep moves nothing or improves Q by less
/// than `tolerance`.
std::int64_t local_moving(const LevelGraph& g, std::vector<std::int64_t>& labels, double gamma,
                          double tolerance, std::int64_t max_sweeps, std::uint64_t seed,
                          std::uint64_t salt) {
    if (g.m2 == 0.0) return 0;
    std::vector<double> comm_tot(static_cast<std::size_t>(g.n), 0.0);
    for (std::int64_t v = 0; v < g.n; ++v) {
        comm_tot[static_cast<std::size_t>(labels[static_cast<std::size_t>(v)])] +=
            g.strength[static_cast<std::size_t>(v)];
    }
    std::vector<std::int64_t> order(static_cast<std::size_t>(g.n));
    std::iota(order.begin(), order.end(), 0);
    KeyedRng rng(KeyedRng::key_of({seed, salt}));
    rng.shuffle(order);

    double prev_q = level_modularity(g, labels, gamma);
    std::int64_t sweeps = 0;
    for (; sweeps < max_sweeps; ++sweeps) {
        bool moved = false;
        for (std::int64_t v : order) {
            const std::int64_t cur = labels[static_cast<std::size_t>(v)];
            comm_tot[static_cast<std::size_t>(cur)] -= g.strength[static_cast<std::size_t>(v)];
            std::map<std::int64_t, double> w_to;
            w_to[cur];  // staying is always a candidate
            for (const auto& [u, wt] : g.adj[static_cast<std::size_t>(v)]) {
                w_to[labels[static_cast<std::size_t>(u)]] += wt;
            }
            std::int64_t best = cur;
            double best_gain = w_to[cur] - gamma * g.strength[static_cast<std::size_t>(v)] *
                                               comm_tot[static_cast<std::size_t>(cur)] / g.m2;
            for (const auto& [c, wc] : w_to) {
                if (c == cur) continue;
                const double gain = wc - gamma * g.strength[static_cast<std::size_t>(v)] *
                                             comm_tot[static_cast<std::size_t>(c)] / g.m2;
                if (gain > best_gain || (gain == best_gain && best != cur && c < best)) {
                    best_gain = gain;
                    best = c;
                }
            }
            comm_tot[static_cast<std::size_t>(best)] += g.strength[static_cast<std::size_t>(v)];
            if (best != cur) {
                labels[static_cast<std::size_t>(v)] = best;
                moved = true;
            }
        }
        if (!moved) break;
        const double q = level_modularity(g, labels, gamma);
        if (q - prev_q < tolerance) {
            prev_q = q;
            ++sweeps;
            break;
        }
        prev_q = q;
    }
    return sweeps;
}

/// Aggregates g by `groups` (arbitrary ids); returns the coarse graph plus
/// the dense group id of every original node, ordered by smallest member.
std::pair<LevelGraph, std::vector<std::int64_t>> aggregate(
    const LevelGraph& g, const std::vector<std::int64_t>& groups) {
    std::map<std::int64_t, std::int64_t> dense;
    std::vector<std::int64_t> node_group(static_cast<std::size_t>(g.n));
    for (std::int64_t v = 0; v < g.n; ++v) {
        auto [it, ignored] = dense.emplace(groups[static_cast<std::size_t>(v)],
                                           static_cast<std::int64_t>(dense.size()));
        node_group[static_cast<std::size_t>(v)] = it->second;
    }
    LevelGraph coarse;
    coarse.n = static_cast<std::int64_t>(dense.size());
    coarse.adj.assign(static_cast<std::size_t>(coarse.n), {});
    coarse.self_loop.assign(static_cast<std::size_t>(coarse.n), 0.0);
    coarse.strength.assign(static_cast<std::size_t>(coarse.n), 0.0);
    std::vector<std::map<std::int64_t, double>> merged(static_cast<std::size_t>(coarse.n));
    for (std::int64_t v = 0; v < g.n; ++v) {
        const std::int64_t cv = node_group[static_cast<std::size_t>(v)];
        coarse.self_loop[static_cast<std::size_t>(cv)] += g.self_loop[static_cast<std::size_t>(v)];
        for (const auto& [u, wt] : g.adj[static_cast<std::size_t>(v)]) {
            if (u < v) continue;  // each merged edge once
            const std::int64_t cu = node_group[static_cast<std::size_t>(u)];
            if (cu == cv) {
                coarse.self_loop[static_cast<std::size_t>(cv)] += wt;
            } else {
                merged[static_cast<std::size_t>(cv)][cu] += wt;
                merged[static_cast<std::size_t>(cu)][cv] += wt;
            }
        }
    }
    for (std::size_t v = 0; v < merged.size(); ++v) {
        coarse.adj[v].assign(merged[v].begin(), merged[v].end());
        for (const auto& [u, wt] : coarse.adj[v]) coarse.strength[v] += wt;
        coarse.strength[v] += 2.0 * coarse.self_loop[v];
        coarse.m2 += coarse.strength[v];
    }
    return {std::move(coarse), std::move(node_group)};
}

/// Splits every community into its connected components; never lowers Q.
void split_disconnected(const LevelGraph& g, std::vector<std::int64_t>& labels) {
    UnionFind uf(g.n);
    for (std::int64_t v = 0; v < g.n; ++v) {
        for (const auto& [u, wt] : g.adj[static_cast<std::size_t>(v)]) {
            (void)wt;
            if (labels[static_cast<std::size_t>(u)] == labels[static_cast<std::size_t>(v)]) {
                uf.unite(u, v);
            }
        }
    }
    for (std::int64_t v = 0; v < g.n; ++v) labels[static_cast<std::size_t>(v)] = uf.find(v);
}

}  // namespace

PartitionResult louvain(const ProjectedGraph& pg, std::int64_t max_levels, double tolerance,
                        std::uint64_t seed, const WeightConfig& weight) {
    if (max_levels < 1) throw Error("maxLevels must be >= 1");
    const auto w = resolve_weights(pg, weight, true);
    const LevelGraph base = level_graph_from(pg, w);

    std::vector<std::int64_t> flat(static_cast<std::size_t>(base.n));
    std::iota(flat.begin(), flat.end(), 0);
    PartitionResult result;
    if (base.m2 == 0.0) {
        result.rows = canonical_communities(flat);
        result.modularity = 0.0;
        return result;
    }

    LevelGraph g = base;
    for (std::int64_t level = 0; level < max_levels; ++level) {
        std::vector<std::int64_t> labels(static_cast<std::size_t>(g.n));
        std::iota(labels.begin(), labels.end(), 0);
        local_moving(g, labels, 1.0, tolerance, 100, seed, static_cast<std::uint64_t>(level));
        auto [coarse, node_group] = aggregate(g, labels);
        if (coarse.n == g.n) break;  // no merge happened; converged
        for (auto& f : flat) {
            f = node_group[static_cast<std::size_t>(f)];
        }
        ++result.levels;
        g = std::move(coarse);
    }
    result.modularity = level_modularity(base, flat, 1.0);
    result.rows = canonical_communities(flat);
    return result;
}

PartitionResult leiden(const ProjectedGraph& pg, double gamma, std::int64_t max_levels,
                       std::uint64_t seed, const WeightConfig& weight) {
    if (max_levels < 1) throw Error("maxLevels must be >= 1");
    if (!(gamma > 0.0)) throw Error("gamma must be > 0");
    const auto w = resolve_weights(pg, weight, true);
    const LevelGraph base = level_graph_from(pg, w);

    std::vector<std::int64_t> flat(static_cast<std::size_t>(base.n));
    std::iota(flat.begin(), flat.end(), 0);
    PartitionResult result;
    if (base.m2 == 0.0) {
        result.rows = canonical_communities(flat);
        return result;
    }

    LevelGraph g = base;
    std::vector<std::int64_t> init(static_cast<std::size_t>(g.n));
    std::iota(init.begin(), init.end(), 0);
    for (std::int64_t level = 0; level < max_levels; ++level) {
        std::vector<std::int64_t> labels = init;
        local_moving(g, labels, gamma, 1e-7, 100, seed, static_cast<std::uint64_t>(level));

        // Refinement: rebuild each community from singletons, merging only
        // along internal edges. The aggregate graph is built from the
        // refined partition; communities stay internally connected.
        std::vector<std::int64_t> refined(static_cast<std::size_t>(g.n));
        std::iota(refined.begin(), refined.end(), 0);
        std::vector<double> sub_tot(g.strength);
        std::vector<std::int64_t> sub_size(static_cast<std::size_t>(g.n), 1);
        for (std::int64_t v = 0; v < g.n; ++v) {
            if (sub_size[static_cast<std::size_t>(refined[static_cast<std::size_t>(v)])] > 1) {
                continue;  // only singletons merge
            }
            std::map<std::int64_t, double> w_to;
            for (const auto& [u, wt] : g.adj[static_cast<std::size_t>(v)]) {
                if (labels[static_cast<std::size_t>(u)] != labels[static_cast<std::size_t>(v)]) {
                    continue;
                }
                w_to[refined[static_cast<std::size_t>(u)]] += wt;
            }
            std::int64_t best = refined[static_cast<std::size_t>(v)];
            double best_gain = 0.0;
            for (const auto& [s, ws] : w_to) {
                if (s == refined[static_cast<std::size_t>(v)]) continue;
                const double gain = ws - gamma * g.strength[static_cast<std::size_t>(v)] *
                                             sub_tot[static_cast<std::size_t>(s)] / g.m2;
                if (gain > best_gain || (gain == best_gain && gain > 0.0 && s < best)) {
                    best_gain = gain;
                    best = s;
                }
            }
            if (best != refined[static_cast<std::size_t>(v)]) {
                sub_tot[static_cast<std::size_t>(best)] += g.strength[static_cast<std::size_t>(v)];
                sub_tot[static_cast<std::size_t>(refined[static_cast<std::size_t>(v)])] -=
                    g.strength[static_cast<std::size_t>(v)];
                refined[static_cast<std::size_t>(v)] = best;
                ++sub_size[static_cast<std::size_t>(best)];
            }
        }

        auto [coarse, node_group] = aggregate(g, refined);
        if (coarse.n == g.n) {
            // Nothing merged: the level partition is final.
            std::vector<std::int64_t> final_labels(static_cast<std::size_t>(base.n));
            for (std::int64_t v = 0; v < base.n; ++v) {
                final_labels[static_cast<std::size_t>(v)] =
                    labels[static_cast<std::size_t>(flat[static_cast<std::size_t>(v)])];
            }
            flat = std::move(final_labels);
            ++result.levels;
            break;
        }
        // Aggregated nodes start in the community of their refined group,
        // densified so labels index into the coarse graph's range.
        std::map<std::int64_t, std::int64_t> group_comm;
        for (std::int64_t v = 0; v < g.n; ++v) {
            group_comm[node_group[static_cast<std::size_t>(v)]] =
                labels[static_cast<std::size_t>(v)];
        }
        init.assign(static_cast<std::size_t>(coarse.n), 0);
        std::map<std::int64_t, std::int64_t> densify;
        for (const auto& [group, comm] : group_comm) {
            auto [it, ignored] = densify.emplace(comm, static_cast<std::int64_t>(densify.size()));
            init[static_cast<std::size_t>(group)] = it->second;
        }
        for (auto& f : flat) f = node_group[static_cast<std::size_t>(f)];
        ++result.levels;
        g = std::move(coarse);
        if (level + 1 >= max_levels) {
            // Ran out of levels: adopt the current initial communities.
            for (auto& f : flat) f = init[static_cast<std::size_t>(f)];
        }
    }

    split_disconnected(base, flat);
    result.modularity = level_modularity(base, flat, 1.0);
    result.rows = canonical_communities(flat);
    return result;
}

PartitionResult modularity_optimization(const ProjectedGraph& pg, std::int64_t max_iterations,
                                        double tolerance, std::uint64_t seed,
                                        const WeightConfig& weight) {
    if (max_iterations < 1) throw Error("maxIterations must be >= 1");
    const auto w = resolve_weights(pg, weight, true);
    const LevelGraph g = level_graph_from(pg, w);
    std::vector<std::int64_t> labels(static_cast<std::size_t>(g.n));
    std::iota(labels.begin(), labels.end(), 0);
    PartitionResult result;
    result.levels = local_moving(g, labels, 1.0, tolerance, max_iterations, seed, 0);
    result.modularity = level_modularity(g, labels, 1.0);
    result.rows = canonical_communities(labels);
    return result;
}

ModularityReport modularity_metric(const ProjectedGraph& pg,
                                   const std::vector<std::int64_t>& assignment,
                                   const WeightConfig& weight) {
    const auto w = resolve_weights(pg, weight, true);
    const LevelGraph g = level_graph_from(pg, w);
    ModularityReport report;
    if (g.m2 == 0.0) {
        std::set<std::int64_t> communities(assignment.begin(), assignment.end());
        for (std::int64_t c : communities) report.per_community.push_back({c, 0.0});
        return report;
    }
    std::map<std::int64_t, double> intra, total;
    for (std::int64_t v = 0; v < g.n; ++v) {
        const std::int64_t c = assignment[static_cast<std::size_t>(v)];
        total[c] += g.strength[static_cast<std::size_t>(v)];
        intra[c] += g.self_loop[static_cast<std::size_t>(v)];
        for (const auto& [u, wt] : g.adj[static_cast<std::size_t>(v)]) {
            if (assignment[static_cast<std::size_t>(u)] == c && u > v) intra[c] += wt;
        }
    }
    const double m = g.m2 / 2.0;
    for (const auto& [c, tot] : total) {
        const double q = intra[c] / m - (tot / g.m2) * (tot / g.m2);
        report.per_community.push_back({c, q});
        report.total += q;
    }
    return report;
}

std::vector<ConductanceRow> conductance(const ProjectedGraph& pg,
                                        const std::vector<std::int64_t>& assignment,
                                        const WeightConfig& weight) {
    const auto w = resolve_weights(pg, weight, true);
    std::map<std::int64_t, double> cut, volume;
    for (const std::int64_t c : assignment) {
        cut.emplace(c, 0.0);
        volume.emplace(c, 0.0);
    }
    double total_volume = 0.0;
    for (std::size_t i = 0; i < pg.rels().size(); ++i) {
        const auto& r = pg.rels()[i];
        const double wt = w[i];
        const std::int64_t cs = assignment[static_cast<std::size_t>(r.source)];
        const std::int64_t ct = assignment[static_cast<std::size_t>(r.target)];
        volume[cs] += wt;
        volume[ct] += wt;
        total_volume += 2.0 * wt;
        if (cs != ct) {
            cut[cs] += wt;
            cut[ct] += wt;
        }
    }
    std::vector<ConductanceRow> rows;
    for (const auto& [c, vol] : volume) {
        ConductanceRow row;
        row.community = c;
        const double denom = std::min(vol, total_volume - vol);
        if (denom > 0.0) {
            row.defined = true;
            row.conductance = cut[c] / denom;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<std::vector<double>> node_feature_matrix(const ProjectedGraph& pg,
                                                     const std::vector<std::string>& keys) {
    if (keys.empty()) throw Error("nodeProperties must name at least one property");
    const std::int64_t n = pg.node_count();
    std::vector<std::vector<double>> features(static_cast<std::size_t>(n));
    for (const auto& key : keys) {
        const auto& col = pg.node_column(key);
        if (col.is_array()) {
            std::size_t dim = 0;
            bool first = true;
            for (std::int64_t v = 0; v < n; ++v) {
                const auto& xs = (*col.array)[static_cast<std::size_t>(v)];
                if (xs.empty()) {
                    throw Error("property '" + key + "' is absent on node " + std::to_string(v));
                }
                if (first) {
                    dim = xs.size();
                    first = false;
                } else if (xs.size() != dim) {
                    throw Error("property '" + key + "' has inconsistent lengths");
                }
                auto& f = features[static_cast<std::size_t>(v)];
                f.insert(f.end(), xs.begin(), xs.end());
            }
        } else {
            for (std::int64_t v = 0; v < n; ++v) {
                const double x = (*col.scalar)[static_cast<std::size_t>(v)];
                if (is_absent(x)) {
                    throw Error("property '" + key + "' is absent on node " + std::to_string(v));
                }
                features[static_cast<std::size_t>(v)].push_back(x);
            }
        }
    }
    return features;
}

namespace {

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        d += diff * diff;
    }
    return d;
}

}  // namespace

KmeansResult kmeans(const ProjectedGraph& pg, const std::vector<std::string>& property_keys,
                    std::int64_t k, std::int64_t max_iterations, std::uint64_t seed) {
    if (k < 1) throw Error("k must be >= 1");
    if (max_iterations < 1) throw Error("maxIterations must be >= 1");
    const auto features = node_feature_matrix(pg, property_keys);
    const std::int64_t n = pg.node_count();
    if (n == 0) return {};
    const std::int64_t kk = std::min(k, n);

    // k-means++ seeding.
    KeyedRng rng(KeyedRng::key_of({seed}));
    std::vector<std::vector<double>> centroids;
    std::vector<char> chosen(static_cast<std::size_t>(n), 0);
    const std::int64_t first = static_cast<std::int64_t>(rng.next_below(
        static_cast<std::uint64_t>(n)));
    centroids.push_back(features[static_cast<std::size_t>(first)]);
    chosen[static_cast<std::size_t>(first)] = 1;
    while (static_cast<std::int64_t>(centroids.size()) < kk) {
        std::vector<double> d2(static_cast<std::size_t>(n), 0.0);
        double total = 0.0;
        for (std::int64_t v = 0; v < n; ++v) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& c : centroids) {
                best = std::min(best, squared_distance(features[static_cast<std::size_t>(v)], c));
            }
            d2[static_cast<std::size_t>(v)] = best;
            total += best;
        }
        std::int64_t pick = -1;
        if (total > 0.0) {
            const double r = rng.next_unit() * total;
            double acc = 0.0;
            for (std::int64_t v = 0; v < n; ++v) {
                acc += d2[static_cast<std::size_t>(v)];
                if (acc >= r) {
                    pick = v;
                    break;
                }
            }
            if (pick < 0) pick = n - 1;
        } else {
            for (std::int64_t v = 0; v < n; ++v) {
                if (!chosen[static_cast<std::size_t>(v)]) {
                    pick = v;
                    break;
                }
            }
            if (pick < 0) pick = 0;
        }
        chosen[static_cast<std::size_t>(pick)] = 1;
        centroids.push_back(features[static_cast<std::size_t>(pick)]);
    }

    std::vector<std::int64_t> assign(static_cast<std::size_t>(n), 0);
    KmeansResult result;
    for (std::int64_t iter = 0; iter < max_iterations; ++iter) {
        ++result.iterations;
        bool changed = false;
        for (std::int64_t v = 0; v < n; ++v) {
            std::int64_t best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t c = 0; c < centroids.size(); ++c) {
                const double d = squared_distance(features[static_cast<std::size_t>(v)],
                                                  centroids[c]);
                if (d < best_d) {
                    best_d = d;
                    best = static_cast<std::int64_t>(c);
                }
            }
            if (assign[static_cast<std::size_t>(v)] != best) changed = true;
            assign[static_cast<std::size_t>(v)] = best;
        }
        // Reseed empty clusters to the point farthest from its centroid.
        bool reseeded = false;
        std::vector<std::int64_t> count(centroids.size(), 0);
        for (std::int64_t v = 0; v < n; ++v) ++count[static_cast<std::size_t>(assign[static_cast<std::size_t>(v)])];
        for (std::size_t c = 0; c < centroids.size(); ++c) {
            if (count[c] > 0) continue;
            std::int64_t far = 0;
            double far_d = -1.0;
            for (std::int64_t v = 0; v < n; ++v) {
                const double d = squared_distance(
                    features[static_cast<std::size_t>(v)],
                    centroids[static_cast<std::size_t>(assign[static_cast<std::size_t>(v)])]);
                if (d > far_d) {
                    far_d = d;
                    far = v;
                }
            }
            centroids[c] = features[static_cast<std::size_t>(far)];
            reseeded = true;
        }
        if (reseeded) continue;
        // Update step.
        for (std::size_t c = 0; c < centroids.size(); ++c) {
            if (count[c] == 0) continue;
            std::vector<double> mean(centroids[c].size(), 0.0);
            for (std::int64_t v = 0; v < n; ++v) {
                if (assign[static_cast<std::size_t>(v)] != static_cast<std::int64_t>(c)) continue;
                const auto& f = features[static_cast<std::size_t>(v)];
                for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += f[i];
            }
            for (double& x : mean) x /= static_cast<double>(count[c]);
            centroids[c] = std::move(mean);
        }
        if (!changed && iter > 0) break;
    }

    result.wcss = 0.0;
    for (std::int64_t v = 0; v < n; ++v) {
        result.wcss += squared_distance(
            features[static_cast<std::size_t>(v)],
            centroids[static_cast<std::size_t>(assign[static_cast<std::size_t>(v)])]);
    }
    // Canonical relabeling, centroids reordered alongside.
    std::map<std::int64_t, std::int64_t> relabel;
    result.rows.resize(static_cast<std::size_t>(n));
    for (std::int64_t v = 0; v < n; ++v) {
        auto [it, ignored] = relabel.emplace(assign[static_cast<std::size_t>(v)],
                                             static_cast<std::int64_t>(relabel.size()));
        result.rows[static_cast<std::size_t>(v)] = {v, it->second};
    }
    result.centroids.resize(relabel.size());
    for (const auto& [raw, canon] : relabel) {
        result.centroids[static_cast<std::size_t>(canon)] =
            centroids[static_cast<std::size_t>(raw)];
    }
    return result;
}

}  // namespace gdsa
