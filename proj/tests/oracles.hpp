#pragma once

// Independent reference implementations used to freeze expected values.
// Everything here works on plain edge lists (test_util::Fixture); nothing
// touches the library's graph types, so these stay independent of the code
// under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "test_util.hpp"

namespace oracle {

using testutil::Fixture;
using testutil::TestEdge;

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Arcs under an orientation: directed keeps stored direction, undirected
/// adds the reverse of every stored edge.
inline std::vector<TestEdge> arcs_of(const Fixture& f, bool undirected) {
    std::vector<TestEdge> arcs = f.edges;
    if (undirected) {
        for (const auto& e : f.edges) arcs.push_back({e.v, e.u, e.w});
    }
    return arcs;
}

// --- O-ENUM: exhaustive simple-path enumeration (n <= 8) -------------------

struct EnumPath {
    double cost = 0.0;
    std::vector<std::int64_t> nodes;
};

inline void enumerate_paths_rec(const std::vector<std::vector<std::pair<std::int64_t, double>>>& adj,
                                std::int64_t current, std::int64_t target,
                                std::vector<std::int64_t>& stack, std::vector<char>& used,
                                double cost, std::vector<EnumPath>& out) {
    if (current == target) {
        out.push_back({cost, stack});
        return;
    }
    for (const auto& [next, w] : adj[static_cast<std::size_t>(current)]) {
        if (used[static_cast<std::size_t>(next)]) continue;
        used[static_cast<std::size_t>(next)] = 1;
        stack.push_back(next);
        enumerate_paths_rec(adj, next, target, stack, used, cost + w, out);
        stack.pop_back();
        used[static_cast<std::size_t>(next)] = 0;
    }
}

/// Every simple path source -> target with its cost.
inline std::vector<EnumPath> enumerate_simple_paths(const Fixture& f, bool undirected,
                                                    std::int64_t source, std::int64_t target) {
    std::vector<std::vector<std::pair<std::int64_t, double>>> adj(
        static_cast<std::size_t>(f.n));
    for (const auto& a : arcs_of(f, undirected)) {
        adj[static_cast<std::size_t>(a.u)].emplace_back(a.v, a.w);
    }
    std::vector<EnumPath> out;
    std::vector<std::int64_t> stack{source};
    std::vector<char> used(static_cast<std::size_t>(f.n), 0);
    used[static_cast<std::size_t>(source)] = 1;
    enumerate_paths_rec(adj, source, target, stack, used, 0.0, out);
    return out;
}

/// Minimum simple-path cost, or +inf when unreachable. Valid for any weights
/// on small graphs (negative allowed; enumeration is loopless).
inline double min_path_cost(const Fixture& f, bool undirected, std::int64_t source,
                            std::int64_t target) {
    if (source == target) return 0.0;
    double best = kInf;
    for (const auto& p : enumerate_simple_paths(f, undirected, source, target)) {
        best = std::min(best, p.cost);
    }
    return best;
}

/// Cheapest path, ties broken by lexicographic node sequence.
inline EnumPath min_path(const Fixture& f, bool undirected, std::int64_t source,
                         std::int64_t target) {
    EnumPath best;
    best.cost = kInf;
    for (const auto& p : enumerate_simple_paths(f, undirected, source, target)) {
        if (p.cost < best.cost || (p.cost == best.cost && p.nodes < best.nodes)) best = p;
    }
    return best;
}

/// K cheapest distinct node sequences sorted by (cost, sequence).
inline std::vector<EnumPath> k_min_paths(const Fixture& f, bool undirected,
                                         std::int64_t source, std::int64_t target,
                                         std::size_t k) {
    auto all = enumerate_simple_paths(f, undirected, source, target);
    std::sort(all.begin(), all.end(), [](const EnumPath& a, const EnumPath& b) {
        if (a.cost != b.cost) return a.cost < b.cost;
        return a.nodes < b.nodes;
    });
    if (all.size() > k) all.resize(k);
    return all;
}

// --- distances (independent BFS / Bellman-Ford) ----------------------------

inline std::vector<std::int64_t> bfs_hops(const Fixture& f, bool undirected,
                                          std::int64_t source) {
    std::vector<std::vector<std::int64_t>> adj(static_cast<std::size_t>(f.n));
    for (const auto& a : arcs_of(f, undirected)) {
        adj[static_cast<std::size_t>(a.u)].push_back(a.v);
    }
    std::vector<std::int64_t> dist(static_cast<std::size_t>(f.n), -1);
    std::queue<std::int64_t> q;
    dist[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        const std::int64_t u = q.front();
        q.pop();
        for (std::int64_t v : adj[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

/// Plain relaxation to fixpoint (no negative cycles assumed).
inline std::vector<double> relax_distances(const Fixture& f, bool undirected,
                                           std::int64_t source) {
    const auto arcs = arcs_of(f, undirected);
    std::vector<double> dist(static_cast<std::size_t>(f.n), kInf);
    dist[static_cast<std::size_t>(source)] = 0.0;
    for (std::int64_t pass = 0; pass < f.n; ++pass) {
        bool changed = false;
        for (const auto& a : arcs) {
            if (dist[static_cast<std::size_t>(a.u)] == kInf) continue;
            const double nd = dist[static_cast<std::size_t>(a.u)] + a.w;
            if (nd < dist[static_cast<std::size_t>(a.v)]) {
                dist[static_cast<std::size_t>(a.v)] = nd;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return dist;
}

// --- O-BC: brute-force betweenness by path enumeration (n <= 8) ------------

inline std::vector<double> brute_betweenness(const Fixture& f, bool undirected) {
    std::vector<double> score(static_cast<std::size_t>(f.n), 0.0);
    for (std::int64_t s = 0; s < f.n; ++s) {
        for (std::int64_t t = 0; t < f.n; ++t) {
            if (s == t) continue;
            auto paths = enumerate_simple_paths(f, undirected, s, t);
            if (paths.empty()) continue;
            double best = kInf;
            for (const auto& p : paths) best = std::min(best, p.cost);
            std::int64_t sigma = 0;
            std::map<std::int64_t, std::int64_t> through;
            for (const auto& p : paths) {
                if (p.cost != best) continue;
                ++sigma;
                for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i) ++through[p.nodes[i]];
            }
            for (const auto& [v, count] : through) {
                score[static_cast<std::size_t>(v)] +=
                    static_cast<double>(count) / static_cast<double>(sigma);
            }
        }
    }
    if (undirected) {
        for (double& s : score) s /= 2.0;  // each unordered pair counted once
    }
    return score;
}

// --- O-PR: dense power iterations -------------------------------------------

/// PageRank on the dense transition structure. base: empty = global.
inline std::vector<double> dense_pagerank(const Fixture& f, bool undirected, double d,
                                          std::int64_t iterations, double tolerance,
                                          const std::vector<std::int64_t>& sources,
                                          const std::vector<double>* weights_override = nullptr) {
    const auto arcs = arcs_of(f, undirected);
    const std::size_t n = static_cast<std::size_t>(f.n);
    std::vector<double> base(n, 0.0);
    if (sources.empty()) {
        base.assign(n, 1.0);
    } else {
        for (std::int64_t s : sources) base[static_cast<std::size_t>(s)] = 1.0;
    }
    double base_sum = 0.0;
    for (double b : base) base_sum += b;
    std::vector<double> out_strength(n, 0.0);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const double w = weights_override ? (*weights_override)[i % f.edges.size()] : arcs[i].w;
        out_strength[static_cast<std::size_t>(arcs[i].u)] += w;
    }
    std::vector<double> score(base);
    for (std::int64_t iter = 0; iter < iterations; ++iter) {
        std::vector<double> acc(n, 0.0);
        double dangling = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            if (out_strength[v] == 0.0) dangling += score[v];
        }
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            const double w = weights_override ? (*weights_override)[i % f.edges.size()] : arcs[i].w;
            acc[static_cast<std::size_t>(arcs[i].v)] +=
                score[static_cast<std::size_t>(arcs[i].u)] * w /
                out_strength[static_cast<std::size_t>(arcs[i].u)];
        }
        double diff = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            const double next = (1.0 - d) * base[v] +
                                d * (acc[v] + (base_sum > 0 ? dangling * base[v] / base_sum : 0));
            diff += std::abs(next - score[v]);
            score[v] = next;
        }
        if (diff < tolerance) break;
    }
    return score;
}

/// ArticleRank variant: contribution denominators get +avg out-degree.
inline std::vector<double> dense_article_rank(const Fixture& f, bool undirected, double d,
                                              std::int64_t iterations, double tolerance,
                                              const std::vector<std::int64_t>& sources) {
    const auto arcs = arcs_of(f, undirected);
    const std::size_t n = static_cast<std::size_t>(f.n);
    std::vector<double> base(n, 0.0);
    if (sources.empty()) {
        base.assign(n, 1.0);
    } else {
        for (std::int64_t s : sources) base[static_cast<std::size_t>(s)] = 1.0;
    }
    std::vector<double> out_strength(n, 0.0);
    for (const auto& a : arcs) out_strength[static_cast<std::size_t>(a.u)] += a.w;
    double avg = 0.0;
    for (double s : out_strength) avg += s;
    avg /= static_cast<double>(n);
    std::vector<double> score(base);
    for (std::int64_t iter = 0; iter < iterations; ++iter) {
        std::vector<double> acc(n, 0.0);
        for (const auto& a : arcs) {
            acc[static_cast<std::size_t>(a.v)] +=
                score[static_cast<std::size_t>(a.u)] * a.w /
                (out_strength[static_cast<std::size_t>(a.u)] + avg);
        }
        double diff = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            const double next = (1.0 - d) * base[v] + d * acc[v];
            diff += std::abs(next - score[v]);
            score[v] = next;
        }
        if (diff < tolerance) break;
    }
    return score;
}

inline std::vector<double> dense_eigenvector(const Fixture& f, bool undirected,
                                             std::int64_t iterations, double tolerance) {
    const auto arcs = arcs_of(f, undirected);
    const std::size_t n = static_cast<std::size_t>(f.n);
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (const auto& arc : arcs) {
        a[static_cast<std::size_t>(arc.u)][static_cast<std::size_t>(arc.v)] += 1.0;
    }
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (std::int64_t iter = 0; iter < iterations; ++iter) {
        std::vector<double> y(n, 0.0);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = 0; v < n; ++v) y[v] += a[u][v] * x[u];
        }
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0) break;
        double diff = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            y[v] /= norm;
            diff = std::max(diff, std::abs(y[v] - x[v]));
        }
        x = y;
        if (diff < tolerance) break;
    }
    return x;
}

struct DenseHits {
    std::vector<double> hub, authority;
};

inline DenseHits dense_hits(const Fixture& f, std::int64_t iterations, double tolerance) {
    const std::size_t n = static_cast<std::size_t>(f.n);
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (const auto& e : f.edges) {
        a[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] += 1.0;
    }
    auto normalize = [](std::vector<double>& v) {
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm > 0) {
            for (double& x : v) x /= norm;
        }
    };
    DenseHits r;
    r.hub.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
    r.authority = r.hub;
    for (std::int64_t iter = 0; iter < iterations; ++iter) {
        std::vector<double> auth(n, 0.0), hub(n, 0.0);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = 0; v < n; ++v) auth[v] += a[u][v] * r.hub[u];
        }
        normalize(auth);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = 0; v < n; ++v) hub[u] += a[u][v] * auth[v];
        }
        normalize(hub);
        double diff = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            diff = std::max(diff, std::abs(hub[v] - r.hub[v]));
            diff = std::max(diff, std::abs(auth[v] - r.authority[v]));
        }
        r.hub = hub;
        r.authority = auth;
        if (diff < tolerance) break;
    }
    return r;
}

// --- O-COMP / O-MOD and friends ---------------------------------------------

inline std::vector<std::int64_t> components_oracle(const Fixture& f) {
    std::vector<std::vector<std::int64_t>> adj(static_cast<std::size_t>(f.n));
    for (const auto& e : f.edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<std::int64_t> label(static_cast<std::size_t>(f.n), -1);
    std::int64_t next = 0;
    for (std::int64_t s = 0; s < f.n; ++s) {
        if (label[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<std::int64_t> stack{s};
        label[static_cast<std::size_t>(s)] = next;
        while (!stack.empty()) {
            const std::int64_t u = stack.back();
            stack.pop_back();
            for (std::int64_t v : adj[static_cast<std::size_t>(u)]) {
                if (label[static_cast<std::size_t>(v)] < 0) {
                    label[static_cast<std::size_t>(v)] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    return label;
}

/// SCC labels via O(n^3) boolean reachability closure.
inline std::vector<std::int64_t> scc_oracle(const Fixture& f) {
    const std::size_t n = static_cast<std::size_t>(f.n);
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (std::size_t v = 0; v < n; ++v) reach[v][v] = 1;
    for (const auto& e : f.edges) {
        reach[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!reach[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (reach[k][j]) reach[i][j] = 1;
            }
        }
    }
    std::vector<std::int64_t> label(n, -1);
    std::int64_t next = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (label[v] >= 0) continue;
        for (std::size_t u = v; u < n; ++u) {
            if (reach[v][u] && reach[u][v]) label[u] = next;
        }
        ++next;
    }
    return label;
}

/// Distinct triangles by O(n^3) adjacency-matrix scan.
inline std::pair<std::vector<std::int64_t>, std::int64_t> triangles_oracle(const Fixture& f) {
    const std::size_t n = static_cast<std::size_t>(f.n);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& e : f.edges) {
        if (e.u == e.v) continue;
        adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
        adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
    }
    std::vector<std::int64_t> per_node(n, 0);
    std::int64_t global = 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!adj[a][b]) continue;
            for (std::size_t c = b + 1; c < n; ++c) {
                if (adj[a][c] && adj[b][c]) {
                    ++per_node[a];
                    ++per_node[b];
                    ++per_node[c];
                    ++global;
                }
            }
        }
    }
    return {per_node, global};
}

/// Direct modularity evaluation Q = sum_c [ e_c/m - (d_c/2m)^2 ].
inline double modularity_oracle(const Fixture& f, const std::vector<std::int64_t>& assignment,
                                bool use_weights = true) {
    double m = 0.0;
    for (const auto& e : f.edges) m += use_weights ? e.w : 1.0;
    if (m == 0.0) return 0.0;
    std::map<std::int64_t, double> intra, degree;
    for (const auto& e : f.edges) {
        const double w = use_weights ? e.w : 1.0;
        degree[assignment[static_cast<std::size_t>(e.u)]] += w;
        degree[assignment[static_cast<std::size_t>(e.v)]] += w;
        if (assignment[static_cast<std::size_t>(e.u)] ==
            assignment[static_cast<std::size_t>(e.v)]) {
            intra[assignment[static_cast<std::size_t>(e.u)]] += w;
        }
    }
    double q = 0.0;
    std::set<std::int64_t> communities(assignment.begin(), assignment.end());
    for (std::int64_t c : communities) {
        q += intra[c] / m - (degree[c] / (2.0 * m)) * (degree[c] / (2.0 * m));
    }
    return q;
}

/// Removal-and-recount articulation points.
inline std::vector<std::int64_t> articulation_oracle(const Fixture& f) {
    auto count_components = [&](std::int64_t skip_node) {
        std::vector<std::vector<std::int64_t>> adj(static_cast<std::size_t>(f.n));
        for (const auto& e : f.edges) {
            if (e.u == skip_node || e.v == skip_node) continue;
            adj[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        std::vector<char> seen(static_cast<std::size_t>(f.n), 0);
        std::int64_t components = 0;
        for (std::int64_t s = 0; s < f.n; ++s) {
            if (s == skip_node || seen[static_cast<std::size_t>(s)]) continue;
            ++components;
            std::vector<std::int64_t> stack{s};
            seen[static_cast<std::size_t>(s)] = 1;
            while (!stack.empty()) {
                const std::int64_t u = stack.back();
                stack.pop_back();
                for (std::int64_t v : adj[static_cast<std::size_t>(u)]) {
                    if (!seen[static_cast<std::size_t>(v)]) {
                        seen[static_cast<std::size_t>(v)] = 1;
                        stack.push_back(v);
                    }
                }
            }
        }
        return components;
    };
    // Removing a non-cut node keeps the component count (its component stays
    // whole); removing a cut node raises it; removing an isolated node
    // lowers it. So: articulation iff the count grows.
    const std::int64_t baseline = count_components(-1);
    std::vector<std::int64_t> points;
    for (std::int64_t v = 0; v < f.n; ++v) {
        if (count_components(v) > baseline) points.push_back(v);
    }
    return points;
}

/// Removal-and-recount bridges, by stored-edge index.
inline std::vector<std::size_t> bridges_oracle(const Fixture& f) {
    auto component_count = [&](std::size_t skip_edge) {
        std::vector<std::vector<std::int64_t>> adj(static_cast<std::size_t>(f.n));
        for (std::size_t i = 0; i < f.edges.size(); ++i) {
            if (i == skip_edge) continue;
            adj[static_cast<std::size_t>(f.edges[i].u)].push_back(f.edges[i].v);
            adj[static_cast<std::size_t>(f.edges[i].v)].push_back(f.edges[i].u);
        }
        std::vector<char> seen(static_cast<std::size_t>(f.n), 0);
        std::int64_t components = 0;
        for (std::int64_t s = 0; s < f.n; ++s) {
            if (seen[static_cast<std::size_t>(s)]) continue;
            ++components;
            std::vector<std::int64_t> stack{s};
            seen[static_cast<std::size_t>(s)] = 1;
            while (!stack.empty()) {
                const std::int64_t u = stack.back();
                stack.pop_back();
                for (std::int64_t v : adj[static_cast<std::size_t>(u)]) {
                    if (!seen[static_cast<std::size_t>(v)]) {
                        seen[static_cast<std::size_t>(v)] = 1;
                        stack.push_back(v);
                    }
                }
            }
        }
        return components;
    };
    const std::int64_t baseline = component_count(f.edges.size());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.edges.size(); ++i) {
        if (component_count(i) > baseline) out.push_back(i);
    }
    return out;
}

/// Brute-force neighbor-set similarity (double loop), cutoff applied.
struct SimPair {
    std::int64_t a, b;
    double s;
};

inline std::vector<SimPair> similarity_oracle(const Fixture& f, int metric /*0=J,1=O,2=C*/,
                                              double cutoff) {
    std::vector<std::set<std::int64_t>> nbr(static_cast<std::size_t>(f.n));
    for (const auto& e : f.edges) {
        nbr[static_cast<std::size_t>(e.u)].insert(e.v);
        nbr[static_cast<std::size_t>(e.v)].insert(e.u);
    }
    std::vector<SimPair> out;
    for (std::int64_t a = 0; a < f.n; ++a) {
        for (std::int64_t b = 0; b < f.n; ++b) {
            if (a == b) continue;
            const auto& na = nbr[static_cast<std::size_t>(a)];
            const auto& nb = nbr[static_cast<std::size_t>(b)];
            if (na.empty() || nb.empty()) continue;
            std::int64_t common = 0;
            for (std::int64_t x : na) {
                if (nb.count(x)) ++common;
            }
            double s = 0.0;
            const double sa = static_cast<double>(na.size());
            const double sb = static_cast<double>(nb.size());
            if (metric == 0) s = static_cast<double>(common) / (sa + sb - common);
            else if (metric == 1) s = static_cast<double>(common) / std::min(sa, sb);
            else s = static_cast<double>(common) / std::sqrt(sa * sb);
            if (s >= cutoff) out.push_back({a, b, s});
        }
    }
    return out;
}

// --- random graphs -----------------------------------------------------------

/// Random directed graph with dyadic-rational weights (exactly representable
/// sums), deterministic per seed.
inline Fixture random_graph(std::uint64_t seed, std::int64_t n, double arc_probability,
                            bool quarter_weights = true) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> quarters(1, 40);  // weights 0.25 .. 10.0
    Fixture f;
    f.n = n;
    for (std::int64_t u = 0; u < n; ++u) {
        for (std::int64_t v = 0; v < n; ++v) {
            if (u == v) continue;
            if (unit(rng) < arc_probability) {
                const double w = quarter_weights ? quarters(rng) * 0.25 : 1.0;
                f.edges.push_back({u, v, w});
            }
        }
    }
    return f;
}

/// Connected undirected graph: random tree plus extra edges.
inline Fixture random_connected(std::uint64_t seed, std::int64_t n, double extra_probability) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Fixture f;
    f.n = n;
    for (std::int64_t v = 1; v < n; ++v) {
        std::uniform_int_distribution<std::int64_t> pick(0, v - 1);
        f.edges.push_back({pick(rng), v, 1.0});
    }
    for (std::int64_t u = 0; u < n; ++u) {
        for (std::int64_t v = u + 1; v < n; ++v) {
            bool exists = false;
            for (const auto& e : f.edges) {
                if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) exists = true;
            }
            if (!exists && unit(rng) < extra_probability) f.edges.push_back({u, v, 1.0});
        }
    }
    return f;
}

/// All connected undirected graphs on n nodes (edge subsets of K_n),
/// canonical edge order. Exponential: use n <= 6.
inline std::vector<Fixture> all_connected_graphs(std::int64_t n) {
    std::vector<std::pair<std::int64_t, std::int64_t>> slots;
    for (std::int64_t u = 0; u < n; ++u) {
        for (std::int64_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    std::vector<Fixture> out;
    const std::size_t total = std::size_t{1} << slots.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        Fixture f;
        f.n = n;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (mask & (std::size_t{1} << i)) {
                f.edges.push_back({slots[i].first, slots[i].second, 1.0});
            }
        }
        if (components_oracle(f) == std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)) {
            out.push_back(std::move(f));
        }
    }
    return out;
}

}  // namespace oracle
