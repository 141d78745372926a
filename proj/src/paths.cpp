#include "gdsa/paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>

#include "gdsa/error.hpp"
#include "gdsa/rng.hpp"
#include "gdsa/table.hpp"
#include "parallel.hpp"

namespace gdsa {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SearchState {
    std::vector<double> dist;
    std::vector<std::int64_t> parent_arc;  // set on strict improvement
};

/// Dijkstra over out-arcs. Masks hide relationships / nodes (Yen's spur
/// searches). Stops early once `stop_at` is settled (-1: settle everything).
SearchState dijkstra_core(const ProjectedGraph& pg, const std::vector<std::int64_t>& sources,
                          const std::vector<double>& rel_weight,
                          const std::vector<char>* rel_mask, const std::vector<char>* node_mask,
                          std::int64_t stop_at = -1) {
    const std::int64_t n = pg.node_count();
    SearchState st;
    st.dist.assign(static_cast<std::size_t>(n), kInf);
    st.parent_arc.assign(static_cast<std::size_t>(n), -1);

    using Item = std::pair<double, std::int64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    for (std::int64_t s : sources) {
        st.dist[static_cast<std::size_t>(s)] = 0.0;
        heap.emplace(0.0, s);
    }
    std::vector<char> settled(static_cast<std::size_t>(n), 0);
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (settled[static_cast<std::size_t>(u)]) continue;
        settled[static_cast<std::size_t>(u)] = 1;
        if (u == stop_at) break;
        for (std::int64_t arc : pg.out_arc_range(u)) {
            const std::int64_t rel = pg.arc_rel(arc);
            if (rel_mask && (*rel_mask)[static_cast<std::size_t>(rel)]) continue;
            const std::int64_t v = pg.arc_target(arc);
            if (node_mask && (*node_mask)[static_cast<std::size_t>(v)]) continue;
            const double nd = d + rel_weight[static_cast<std::size_t>(rel)];
            if (nd < st.dist[static_cast<std::size_t>(v)]) {
                st.dist[static_cast<std::size_t>(v)] = nd;
                st.parent_arc[static_cast<std::size_t>(v)] = arc;
                heap.emplace(nd, v);
            }
        }
    }
    return st;
}

/// Rewrites parents into the canonical shortest-path tree: for every
/// reached node, the in-arc (u, rel) minimal under (u, rel) among arcs with
/// dist[u] + w == dist[v] and (dist[u], u) lexicographically before
/// (dist[v], v). Zero-weight ties that cannot be ordered this way keep the
/// relaxation-time parent. Any algorithm producing the same distance map
/// therefore reports identical paths.
void canonicalize_parents(const ProjectedGraph& pg, const std::vector<double>& rel_weight,
                          const std::vector<char>* rel_mask, const std::vector<char>* node_mask,
                          SearchState& st) {
    const std::int64_t n = pg.node_count();
    for (std::int64_t v = 0; v < n; ++v) {
        const double dv = st.dist[static_cast<std::size_t>(v)];
        if (!std::isfinite(dv) || st.parent_arc[static_cast<std::size_t>(v)] < 0) continue;
        if (node_mask && (*node_mask)[static_cast<std::size_t>(v)]) continue;
        std::int64_t best = -1;
        std::int64_t best_u = -1, best_rel = -1;
        for (std::int64_t arc : pg.in_arc_range(v)) {
            const std::int64_t rel = pg.arc_rel(arc);
            if (rel_mask && (*rel_mask)[static_cast<std::size_t>(rel)]) continue;
            const std::int64_t u = pg.arc_source(arc);
            if (node_mask && (*node_mask)[static_cast<std::size_t>(u)]) continue;
            const double du = st.dist[static_cast<std::size_t>(u)];
            if (!std::isfinite(du)) continue;
            if (du + rel_weight[static_cast<std::size_t>(rel)] != dv) continue;
            if (du > dv || (du == dv && u >= v)) continue;  // must come strictly earlier
            if (best < 0 || u < best_u || (u == best_u && rel < best_rel)) {
                best = arc;
                best_u = u;
                best_rel = rel;
            }
        }
        if (best >= 0) st.parent_arc[static_cast<std::size_t>(v)] = best;
    }
}

PathResult build_path(const ProjectedGraph& pg, const std::vector<double>& rel_weight,
                      const SearchState& st, std::int64_t target) {
    std::vector<std::int64_t> nodes{target};
    std::vector<std::int64_t> rels;
    std::int64_t v = target;
    while (st.parent_arc[static_cast<std::size_t>(v)] >= 0) {
        const std::int64_t arc = st.parent_arc[static_cast<std::size_t>(v)];
        rels.push_back(pg.arc_rel(arc));
        v = pg.arc_source(arc);
        nodes.push_back(v);
    }
    std::reverse(nodes.begin(), nodes.end());
    std::reverse(rels.begin(), rels.end());

    PathResult p;
    p.node_ids = std::move(nodes);
    p.rel_indices = std::move(rels);
    p.costs.resize(p.node_ids.size());
    p.costs[0] = 0.0;
    for (std::size_t i = 0; i < p.rel_indices.size(); ++i) {
        p.costs[i + 1] = p.costs[i] + rel_weight[static_cast<std::size_t>(p.rel_indices[i])];
    }
    p.total_cost = p.costs.back();
    return p;
}

void check_node(const ProjectedGraph& pg, std::int64_t v, const char* what) {
    if (v < 0 || v >= pg.node_count()) {
        throw Error(std::string(what) + " node id out of range: " + std::to_string(v));
    }
}

}  // namespace

std::vector<double> resolve_weights(const ProjectedGraph& pg, const WeightConfig& weight,
                                    bool require_non_negative) {
    const std::size_t m = static_cast<std::size_t>(pg.relationship_count());
    if (!weight.relationship_weight_property) {
        return std::vector<double>(m, 1.0);
    }
    const auto& column = pg.relationship_column(*weight.relationship_weight_property);
    for (std::size_t i = 0; i < column.size(); ++i) {
        if (is_absent(column[i])) {
            throw Error("relationship weight property '" +
                        *weight.relationship_weight_property +
                        "' is absent on relationship " + std::to_string(i));
        }
        if (require_non_negative && column[i] < 0.0) {
            throw Error("negative weight " + format_float(column[i]) + " on relationship " +
                        std::to_string(i) + "; this algorithm requires non-negative weights");
        }
    }
    return column;
}

std::optional<PathResult> find_shortest_path(const ProjectedGraph& pg, std::int64_t source,
                                             std::int64_t target, const WeightConfig& weight) {
    check_node(pg, source, "source");
    check_node(pg, target, "target");
    const auto w = resolve_weights(pg, weight, true);
    SearchState st = dijkstra_core(pg, {source}, w, nullptr, nullptr, target);
    if (!std::isfinite(st.dist[static_cast<std::size_t>(target)])) return std::nullopt;
    canonicalize_parents(pg, w, nullptr, nullptr, st);
    return build_path(pg, w, st, target);
}

namespace {

std::vector<PathResult> paths_from_state(const ProjectedGraph& pg,
                                         const std::vector<double>& w, const SearchState& st,
                                         std::int64_t source) {
    std::vector<PathResult> out;
    for (std::int64_t v = 0; v < pg.node_count(); ++v) {
        if (!std::isfinite(st.dist[static_cast<std::size_t>(v)])) continue;
        if (v != source && st.parent_arc[static_cast<std::size_t>(v)] < 0) continue;
        PathResult p = build_path(pg, w, st, v);
        p.index = static_cast<std::int64_t>(out.size());
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

std::vector<PathResult> dijkstra_single_source(const ProjectedGraph& pg, std::int64_t source,
                                               const WeightConfig& weight) {
    check_node(pg, source, "source");
    const auto w = resolve_weights(pg, weight, true);
    SearchState st = dijkstra_core(pg, {source}, w, nullptr, nullptr);
    canonicalize_parents(pg, w, nullptr, nullptr, st);
    return paths_from_state(pg, w, st, source);
}

std::vector<PathResult> delta_stepping(const ProjectedGraph& pg, std::int64_t source,
                                       const WeightConfig& weight, double delta) {
    check_node(pg, source, "source");
    if (!(delta > 0.0)) throw Error("delta must be > 0");
    const auto w = resolve_weights(pg, weight, true);

    const std::int64_t n = pg.node_count();
    SearchState st;
    st.dist.assign(static_cast<std::size_t>(n), kInf);
    st.parent_arc.assign(static_cast<std::size_t>(n), -1);
    std::map<std::int64_t, std::set<std::int64_t>> buckets;

    auto relax = [&](std::int64_t v, double d, std::int64_t arc) {
        if (d < st.dist[static_cast<std::size_t>(v)]) {
            st.dist[static_cast<std::size_t>(v)] = d;
            st.parent_arc[static_cast<std::size_t>(v)] = arc;
            buckets[static_cast<std::int64_t>(std::floor(d / delta))].insert(v);
        }
    };
    relax(source, 0.0, -1);

    while (!buckets.empty()) {
        const std::int64_t i = buckets.begin()->first;
        std::vector<std::int64_t> settled_here;
        while (true) {
            auto it = buckets.find(i);
            if (it == buckets.end() || it->second.empty()) break;
            std::vector<std::int64_t> batch(it->second.begin(), it->second.end());
            buckets.erase(it);
            for (std::int64_t u : batch) {
                const double du = st.dist[static_cast<std::size_t>(u)];
                if (static_cast<std::int64_t>(std::floor(du / delta)) != i) continue;  // moved on
                settled_here.push_back(u);
                for (std::int64_t arc : pg.out_arc_range(u)) {
                    const double wa = w[static_cast<std::size_t>(pg.arc_rel(arc))];
                    if (wa <= delta) relax(pg.arc_target(arc), du + wa, arc);
                }
            }
        }
        std::sort(settled_here.begin(), settled_here.end());
        settled_here.erase(std::unique(settled_here.begin(), settled_here.end()),
                           settled_here.end());
        for (std::int64_t u : settled_here) {
            const double du = st.dist[static_cast<std::size_t>(u)];
            for (std::int64_t arc : pg.out_arc_range(u)) {
                const double wa = w[static_cast<std::size_t>(pg.arc_rel(arc))];
                if (wa > delta) relax(pg.arc_target(arc), du + wa, arc);
            }
        }
    }

    canonicalize_parents(pg, w, nullptr, nullptr, st);
    return paths_from_state(pg, w, st, source);
}

BellmanFordResult bellman_ford(const ProjectedGraph& pg, std::int64_t source,
                               const WeightConfig& weight) {
    check_node(pg, source, "source");
    const auto w = resolve_weights(pg, weight, false);
    const std::int64_t n = pg.node_count();
    SearchState st;
    st.dist.assign(static_cast<std::size_t>(n), kInf);
    st.parent_arc.assign(static_cast<std::size_t>(n), -1);
    st.dist[static_cast<std::size_t>(source)] = 0.0;

    auto sweep = [&](bool record) {
        bool changed = false;
        for (std::int64_t u = 0; u < n; ++u) {
            const double du = st.dist[static_cast<std::size_t>(u)];
            if (!std::isfinite(du)) continue;
            for (std::int64_t arc : pg.out_arc_range(u)) {
                const std::int64_t v = pg.arc_target(arc);
                const double nd = du + w[static_cast<std::size_t>(pg.arc_rel(arc))];
                if (nd < st.dist[static_cast<std::size_t>(v)]) {
                    changed = true;
                    if (record) {
                        st.dist[static_cast<std::size_t>(v)] = nd;
                        st.parent_arc[static_cast<std::size_t>(v)] = arc;
                    } else {
                        // detection pass: remember the offending arc, stop
                        st.parent_arc[static_cast<std::size_t>(v)] = arc;
                        return std::make_pair(true, v);
                    }
                }
            }
        }
        return std::make_pair(changed, static_cast<std::int64_t>(-1));
    };

    for (std::int64_t pass = 1; pass < n; ++pass) {
        if (!sweep(true).first) break;
    }
    auto [improved, witness] = sweep(false);
    if (improved && witness >= 0) {
        // The predecessor chain of the improved node must revisit a node;
        // that revisit closes a reachable negative cycle.
        std::vector<char> on_walk(static_cast<std::size_t>(n), 0);
        std::int64_t v = witness;
        while (st.parent_arc[static_cast<std::size_t>(v)] >= 0 &&
               !on_walk[static_cast<std::size_t>(v)]) {
            on_walk[static_cast<std::size_t>(v)] = 1;
            v = pg.arc_source(st.parent_arc[static_cast<std::size_t>(v)]);
        }
        if (st.parent_arc[static_cast<std::size_t>(v)] < 0) {
            throw Error("internal: negative cycle witness chain ended at the source");
        }
        NegativeCycleReport report;
        std::set<std::int64_t> cycle;
        std::int64_t u = v;
        do {
            cycle.insert(u);
            u = pg.arc_source(st.parent_arc[static_cast<std::size_t>(u)]);
        } while (u != v);
        report.node_ids.assign(cycle.begin(), cycle.end());
        return report;
    }
    return paths_from_state(pg, w, st, source);
}

namespace {

double haversine(double lat1, double lon1, double lat2, double lon2) {
    constexpr double kEarthRadiusKm = 6371.0;
    constexpr double kDegToRad = 0.017453292519943295;
    const double phi1 = lat1 * kDegToRad, phi2 = lat2 * kDegToRad;
    const double dphi = (lat2 - lat1) * kDegToRad;
    const double dlambda = (lon2 - lon1) * kDegToRad;
    const double a = std::sin(dphi / 2) * std::sin(dphi / 2) +
                     std::cos(phi1) * std::cos(phi2) * std::sin(dlambda / 2) * std::sin(dlambda / 2);
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(a)));
}

}  // namespace

std::optional<PathResult> a_star(const ProjectedGraph& pg, std::int64_t source,
                                 std::int64_t target, const WeightConfig& weight,
                                 const std::string& latitude_property,
                                 const std::string& longitude_property) {
    check_node(pg, source, "source");
    check_node(pg, target, "target");
    const auto w = resolve_weights(pg, weight, true);
    const auto& lat = pg.node_scalar_column(latitude_property);
    const auto& lon = pg.node_scalar_column(longitude_property);
    const std::int64_t n = pg.node_count();
    for (std::int64_t v = 0; v < n; ++v) {
        if (is_absent(lat[static_cast<std::size_t>(v)]) ||
            is_absent(lon[static_cast<std::size_t>(v)])) {
            throw Error("node " + std::to_string(v) + " is missing " + latitude_property + "/" +
                        longitude_property);
        }
    }

    // Admissible, consistent heuristic: great-circle distance to the target
    // scaled so that no edge is underestimated relative to its weight.
    double min_w = kInf, max_hop = 0.0;
    for (std::size_t i = 0; i < pg.rels().size(); ++i) {
        const auto& rel = pg.rels()[i];
        min_w = std::min(min_w, w[i]);
        max_hop = std::max(max_hop, haversine(lat[static_cast<std::size_t>(rel.source)],
                                              lon[static_cast<std::size_t>(rel.source)],
                                              lat[static_cast<std::size_t>(rel.target)],
                                              lon[static_cast<std::size_t>(rel.target)]));
    }
    const double scale = (max_hop > 0.0 && std::isfinite(min_w)) ? min_w / max_hop : 0.0;
    auto heuristic = [&](std::int64_t v) {
        return scale * haversine(lat[static_cast<std::size_t>(v)], lon[static_cast<std::size_t>(v)],
                                 lat[static_cast<std::size_t>(target)],
                                 lon[static_cast<std::size_t>(target)]);
    };

    SearchState st;
    st.dist.assign(static_cast<std::size_t>(n), kInf);
    st.parent_arc.assign(static_cast<std::size_t>(n), -1);
    st.dist[static_cast<std::size_t>(source)] = 0.0;
    using Item = std::pair<double, std::int64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    heap.emplace(heuristic(source), source);
    std::vector<char> settled(static_cast<std::size_t>(n), 0);
    while (!heap.empty()) {
        auto [f, u] = heap.top();
        heap.pop();
        if (settled[static_cast<std::size_t>(u)]) continue;
        settled[static_cast<std::size_t>(u)] = 1;
        if (u == target) break;
        const double du = st.dist[static_cast<std::size_t>(u)];
        for (std::int64_t arc : pg.out_arc_range(u)) {
            const std::int64_t v = pg.arc_target(arc);
            const double nd = du + w[static_cast<std::size_t>(pg.arc_rel(arc))];
            if (nd < st.dist[static_cast<std::size_t>(v)]) {
                st.dist[static_cast<std::size_t>(v)] = nd;
                st.parent_arc[static_cast<std::size_t>(v)] = arc;
                heap.emplace(nd + heuristic(v), v);
            }
        }
    }
    if (!std::isfinite(st.dist[static_cast<std::size_t>(target)])) return std::nullopt;
    return build_path(pg, w, st, target);
}

namespace {

struct CandidateLess {
    bool operator()(const PathResult& a, const PathResult& b) const {
        if (a.total_cost != b.total_cost) return a.total_cost < b.total_cost;
        if (a.node_ids != b.node_ids) return a.node_ids < b.node_ids;
        return a.rel_indices < b.rel_indices;
    }
};

}  // namespace

std::vector<PathResult> yens_k_shortest_paths(const ProjectedGraph& pg, std::int64_t source,
                                              std::int64_t target, std::int64_t k,
                                              const WeightConfig& weight) {
    check_node(pg, source, "source");
    check_node(pg, target, "target");
    if (k < 1) throw Error("k must be >= 1");
    const auto w = resolve_weights(pg, weight, true);

    std::vector<PathResult> accepted;
    auto first = find_shortest_path(pg, source, target, weight);
    if (!first) return accepted;
    accepted.push_back(std::move(*first));

    std::set<PathResult, CandidateLess> candidates;
    std::set<std::vector<std::int64_t>> known_rel_seqs;
    known_rel_seqs.insert(accepted[0].rel_indices);

    const std::size_t m = static_cast<std::size_t>(pg.relationship_count());
    const std::size_t n = static_cast<std::size_t>(pg.node_count());

    while (static_cast<std::int64_t>(accepted.size()) < k) {
        const PathResult& prev = accepted.back();
        for (std::size_t i = 0; i + 1 < prev.node_ids.size(); ++i) {
            const std::int64_t spur_node = prev.node_ids[i];
            std::vector<char> rel_mask(m, 0);
            std::vector<char> node_mask(n, 0);
            // Remove the next edge of every accepted path sharing this root.
            for (const PathResult& p : accepted) {
                if (p.node_ids.size() <= i) continue;
                if (!std::equal(prev.node_ids.begin(), prev.node_ids.begin() + i + 1,
                                p.node_ids.begin())) {
                    continue;
                }
                if (p.rel_indices.size() > i) {
                    rel_mask[static_cast<std::size_t>(p.rel_indices[i])] = 1;
                }
            }
            // Root nodes other than the spur node are off limits (looplessness).
            for (std::size_t j = 0; j < i; ++j) {
                node_mask[static_cast<std::size_t>(prev.node_ids[j])] = 1;
            }

            SearchState st = dijkstra_core(pg, {spur_node}, w, &rel_mask, &node_mask, target);
            if (!std::isfinite(st.dist[static_cast<std::size_t>(target)])) continue;
            canonicalize_parents(pg, w, &rel_mask, &node_mask, st);
            PathResult spur = build_path(pg, w, st, target);

            PathResult total;
            total.node_ids.assign(prev.node_ids.begin(), prev.node_ids.begin() + i);
            total.node_ids.insert(total.node_ids.end(), spur.node_ids.begin(),
                                  spur.node_ids.end());
            total.rel_indices.assign(prev.rel_indices.begin(), prev.rel_indices.begin() + i);
            total.rel_indices.insert(total.rel_indices.end(), spur.rel_indices.begin(),
                                     spur.rel_indices.end());
            total.costs.resize(total.node_ids.size());
            total.costs[0] = 0.0;
            for (std::size_t j = 0; j < total.rel_indices.size(); ++j) {
                total.costs[j + 1] =
                    total.costs[j] + w[static_cast<std::size_t>(total.rel_indices[j])];
            }
            total.total_cost = total.costs.back();
            if (!known_rel_seqs.count(total.rel_indices)) candidates.insert(std::move(total));
        }
        if (candidates.empty()) break;
        PathResult next = *candidates.begin();
        candidates.erase(candidates.begin());
        known_rel_seqs.insert(next.rel_indices);
        next.index = static_cast<std::int64_t>(accepted.size());
        accepted.push_back(std::move(next));
    }
    for (std::size_t i = 0; i < accepted.size(); ++i) {
        accepted[i].index = static_cast<std::int64_t>(i);
    }
    return accepted;
}

std::vector<BfsVisit> bfs(const ProjectedGraph& pg, std::int64_t source,
                          std::optional<std::int64_t> max_depth,
                          const std::vector<std::int64_t>& target_nodes) {
    check_node(pg, source, "source");
    if (max_depth && *max_depth < 0) throw Error("maxDepth must be >= 0");
    std::set<std::int64_t> targets(target_nodes.begin(), target_nodes.end());

    std::vector<BfsVisit> visits;
    std::vector<char> seen(static_cast<std::size_t>(pg.node_count()), 0);
    std::queue<std::size_t> frontier;  // indices into visits

    auto discover = [&](std::int64_t node, std::int64_t depth, std::int64_t parent) {
        seen[static_cast<std::size_t>(node)] = 1;
        visits.push_back({node, depth, parent});
        frontier.push(visits.size() - 1);
        targets.erase(node);
        return targets.empty() && !target_nodes.empty();
    };

    if (discover(source, 0, -1)) return visits;
    while (!frontier.empty()) {
        const BfsVisit cur = visits[frontier.front()];
        frontier.pop();
        if (max_depth && cur.depth >= *max_depth) continue;
        for (std::int64_t arc : pg.out_arc_range(cur.node)) {
            const std::int64_t v = pg.arc_target(arc);
            if (seen[static_cast<std::size_t>(v)]) continue;
            if (discover(v, cur.depth + 1, cur.node)) return visits;
        }
    }
    return visits;
}

std::vector<DfsVisit> dfs(const ProjectedGraph& pg, std::int64_t source,
                          std::optional<std::int64_t> max_depth) {
    check_node(pg, source, "source");
    if (max_depth && *max_depth < 0) throw Error("maxDepth must be >= 0");
    std::vector<DfsVisit> visits;
    std::vector<char> seen(static_cast<std::size_t>(pg.node_count()), 0);
    std::vector<DfsVisit> stack{{source, 0}};
    while (!stack.empty()) {
        const DfsVisit cur = stack.back();
        stack.pop_back();
        if (seen[static_cast<std::size_t>(cur.node)]) continue;
        seen[static_cast<std::size_t>(cur.node)] = 1;
        visits.push_back(cur);
        if (max_depth && cur.depth >= *max_depth) continue;
        const auto arcs = pg.out_arc_range(cur.node);
        for (auto it = arcs.rbegin(); it != arcs.rend(); ++it) {
            const std::int64_t v = pg.arc_target(*it);
            if (!seen[static_cast<std::size_t>(v)]) stack.push_back({v, cur.depth + 1});
        }
    }
    return visits;
}

SpanningTree minimum_spanning_tree(const ProjectedGraph& pg, std::int64_t source,
                                   const WeightConfig& weight) {
    check_node(pg, source, "source");
    const auto w = resolve_weights(pg, weight, true);
    const std::int64_t n = pg.node_count();
    const bool undirected = pg.orientation() == Orientation::Undirected;

    // (weight, new node, rel, tree-side node); treats arcs as undirected.
    using Item = std::tuple<double, std::int64_t, std::int64_t, std::int64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    std::vector<char> in_tree(static_cast<std::size_t>(n), 0);

    auto push_frontier = [&](std::int64_t u) {
        for (std::int64_t arc : pg.out_arc_range(u)) {
            const std::int64_t rel = pg.arc_rel(arc);
            heap.emplace(w[static_cast<std::size_t>(rel)], pg.arc_target(arc), rel, u);
        }
        if (!undirected) {
            for (std::int64_t arc : pg.in_arc_range(u)) {
                const std::int64_t rel = pg.arc_rel(arc);
                heap.emplace(w[static_cast<std::size_t>(rel)], pg.arc_source(arc), rel, u);
            }
        }
    };

    SpanningTree tree;
    in_tree[static_cast<std::size_t>(source)] = 1;
    push_frontier(source);
    while (!heap.empty()) {
        auto [wt, v, rel, u] = heap.top();
        heap.pop();
        if (in_tree[static_cast<std::size_t>(v)]) continue;
        in_tree[static_cast<std::size_t>(v)] = 1;
        tree.edges.push_back({u, v, rel, wt});
        tree.total_weight += wt;
        push_frontier(v);
    }
    return tree;
}

std::vector<PairDistance> all_pairs_shortest_paths(const ProjectedGraph& pg,
                                                   const WeightConfig& weight, int threads) {
    const auto w = resolve_weights(pg, weight, true);
    const std::int64_t n = pg.node_count();
    std::vector<std::vector<PairDistance>> per_source(static_cast<std::size_t>(n));
    parallel_for(n, threads, [&](std::int64_t s) {
        SearchState st = dijkstra_core(pg, {s}, w, nullptr, nullptr);
        auto& rows = per_source[static_cast<std::size_t>(s)];
        for (std::int64_t t = 0; t < n; ++t) {
            if (t == s || !std::isfinite(st.dist[static_cast<std::size_t>(t)])) continue;
            rows.push_back({s, t, st.dist[static_cast<std::size_t>(t)]});
        }
    });
    std::vector<PairDistance> out;
    for (auto& rows : per_source) {
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

std::vector<RandomWalk> random_walk(const ProjectedGraph& pg,
                                    const std::vector<std::int64_t>& source_nodes,
                                    std::int64_t walks_per_node, std::int64_t walk_length,
                                    std::uint64_t seed) {
    if (walk_length < 1) throw Error("walkLength must be >= 1");
    if (walks_per_node < 0) throw Error("walksPerNode must be >= 0");
    for (std::int64_t s : source_nodes) check_node(pg, s, "source");
    std::vector<RandomWalk> walks;
    for (std::int64_t s : source_nodes) {
        for (std::int64_t i = 0; i < walks_per_node; ++i) {
            KeyedRng rng(KeyedRng::key_of({seed, static_cast<std::uint64_t>(s),
                                           static_cast<std::uint64_t>(i)}));
            RandomWalk walk;
            walk.source = s;
            walk.node_ids.push_back(s);
            std::int64_t cur = s;
            for (std::int64_t step = 1; step < walk_length; ++step) {
                const auto arcs = pg.out_arc_range(cur);
                if (arcs.empty()) break;
                const std::int64_t arc =
                    arcs[static_cast<std::size_t>(rng.next_below(arcs.size()))];
                cur = pg.arc_target(arc);
                walk.node_ids.push_back(cur);
            }
            walks.push_back(std::move(walk));
        }
    }
    return walks;
}

std::vector<PathResult> longest_path(const ProjectedGraph& pg, const WeightConfig& weight) {
    const auto w = resolve_weights(pg, weight, false);
    const std::int64_t n = pg.node_count();

    std::vector<std::int64_t> in_deg(static_cast<std::size_t>(n), 0);
    for (const auto& rel : pg.rels()) ++in_deg[static_cast<std::size_t>(rel.target)];
    if (pg.orientation() == Orientation::Undirected) {
        for (const auto& rel : pg.rels()) ++in_deg[static_cast<std::size_t>(rel.source)];
    }
    std::priority_queue<std::int64_t, std::vector<std::int64_t>, std::greater<>> ready;
    for (std::int64_t v = 0; v < n; ++v) {
        if (in_deg[static_cast<std::size_t>(v)] == 0) ready.push(v);
    }
    std::vector<std::int64_t> topo;
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    while (!ready.empty()) {
        const std::int64_t u = ready.top();
        ready.pop();
        topo.push_back(u);
        done[static_cast<std::size_t>(u)] = 1;
        for (std::int64_t arc : pg.out_arc_range(u)) {
            const std::int64_t v = pg.arc_target(arc);
            if (--in_deg[static_cast<std::size_t>(v)] == 0) ready.push(v);
        }
    }
    if (static_cast<std::int64_t>(topo.size()) != n) {
        std::int64_t witness = -1;
        for (std::int64_t v = 0; v < n; ++v) {
            if (!done[static_cast<std::size_t>(v)]) {
                witness = v;
                break;
            }
        }
        throw Error("graph contains a cycle (through node " + std::to_string(witness) + ")");
    }

    std::vector<double> best(static_cast<std::size_t>(n), 0.0);
    std::vector<std::int64_t> parent(static_cast<std::size_t>(n), -1);
    for (std::int64_t u : topo) {
        for (std::int64_t arc : pg.out_arc_range(u)) {
            const std::int64_t v = pg.arc_target(arc);
            const std::int64_t rel = pg.arc_rel(arc);
            const double cand = best[static_cast<std::size_t>(u)] + w[static_cast<std::size_t>(rel)];
            const std::int64_t cur = parent[static_cast<std::size_t>(v)];
            bool take = cand > best[static_cast<std::size_t>(v)];
            if (!take && cand == best[static_cast<std::size_t>(v)] && cur >= 0) {
                const std::int64_t cu = pg.arc_source(cur);
                take = u < cu || (u == cu && rel < pg.arc_rel(cur));
            }
            if (take) {
                best[static_cast<std::size_t>(v)] = cand;
                parent[static_cast<std::size_t>(v)] = arc;
            }
        }
    }

    std::vector<PathResult> results;
    for (std::int64_t v = 0; v < n; ++v) {
        PathResult p;
        std::int64_t cur = v;
        p.node_ids.push_back(cur);
        while (parent[static_cast<std::size_t>(cur)] >= 0) {
            const std::int64_t arc = parent[static_cast<std::size_t>(cur)];
            p.rel_indices.push_back(pg.arc_rel(arc));
            cur = pg.arc_source(arc);
            p.node_ids.push_back(cur);
        }
        std::reverse(p.node_ids.begin(), p.node_ids.end());
        std::reverse(p.rel_indices.begin(), p.rel_indices.end());
        p.costs.resize(p.node_ids.size());
        p.costs[0] = 0.0;
        for (std::size_t j = 0; j < p.rel_indices.size(); ++j) {
            p.costs[j + 1] = p.costs[j] + w[static_cast<std::size_t>(p.rel_indices[j])];
        }
        p.total_cost = p.costs.back();
        results.push_back(std::move(p));
    }
    std::sort(results.begin(), results.end(), [](const PathResult& a, const PathResult& b) {
        if (a.total_cost != b.total_cost) return a.total_cost > b.total_cost;
        return a.node_ids.back() < b.node_ids.back();
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
        results[i].index = static_cast<std::int64_t>(i);
    }
    return results;
}

SpanningTree minimum_directed_steiner_tree(const ProjectedGraph& pg, std::int64_t source,
                                           const std::vector<std::int64_t>& targets,
                                           const WeightConfig& weight) {
    check_node(pg, source, "source");
    for (std::int64_t t : targets) check_node(pg, t, "target");
    const auto w = resolve_weights(pg, weight, true);
    const std::int64_t n = pg.node_count();

    std::vector<char> in_tree(static_cast<std::size_t>(n), 0);
    in_tree[static_cast<std::size_t>(source)] = 1;
    std::set<std::int64_t> remaining(targets.begin(), targets.end());
    remaining.erase(source);

    SpanningTree tree;
    while (!remaining.empty()) {
        std::vector<std::int64_t> roots;
        for (std::int64_t v = 0; v < n; ++v) {
            if (in_tree[static_cast<std::size_t>(v)]) roots.push_back(v);
        }
        SearchState st = dijkstra_core(pg, roots, w, nullptr, nullptr);
        canonicalize_parents(pg, w, nullptr, nullptr, st);

        std::int64_t pick = -1;
        double pick_dist = kInf;
        for (std::int64_t t : remaining) {
            const double d = st.dist[static_cast<std::size_t>(t)];
            if (d < pick_dist) {
                pick_dist = d;
                pick = t;
            }
        }
        if (pick < 0) {
            throw Error("steiner target " + std::to_string(*remaining.begin()) +
                        " is unreachable");
        }

        std::vector<TreeEdge> segment;
        std::int64_t v = pick;
        while (!in_tree[static_cast<std::size_t>(v)]) {
            const std::int64_t arc = st.parent_arc[static_cast<std::size_t>(v)];
            const std::int64_t rel = pg.arc_rel(arc);
            segment.push_back({pg.arc_source(arc), v, rel, w[static_cast<std::size_t>(rel)]});
            v = pg.arc_source(arc);
        }
        for (auto it = segment.rbegin(); it != segment.rend(); ++it) {
            in_tree[static_cast<std::size_t>(it->target)] = 1;
            tree.total_weight += it->weight;
            tree.edges.push_back(*it);
        }
        remaining.erase(pick);
    }
    return tree;
}

PrizeSteinerResult prize_collecting_steiner_tree(const ProjectedGraph& pg,
                                                 const std::string& prize_property,
                                                 const WeightConfig& weight) {
    const auto w = resolve_weights(pg, weight, true);
    const auto& prize = pg.node_scalar_column(prize_property);
    const std::int64_t n = pg.node_count();
    if (n == 0) throw Error("graph has no nodes");
    for (std::int64_t v = 0; v < n; ++v) {
        if (is_absent(prize[static_cast<std::size_t>(v)])) {
            throw Error("prize property '" + prize_property + "' is absent on node " +
                        std::to_string(v));
        }
    }

    // Baseline: the single best node always beats an empty answer.
    std::int64_t best_node = 0;
    for (std::int64_t v = 1; v < n; ++v) {
        if (prize[static_cast<std::size_t>(v)] > prize[static_cast<std::size_t>(best_node)]) {
            best_node = v;
        }
    }
    PrizeSteinerResult best;
    best.node_ids = {best_node};
    best.objective = prize[static_cast<std::size_t>(best_node)];

    std::vector<std::int64_t> terminals;
    for (std::int64_t v = 0; v < n; ++v) {
        if (prize[static_cast<std::size_t>(v)] > 0.0) terminals.push_back(v);
    }
    if (terminals.size() < 2) return best;

    // Group terminals by connected component (undirected reach).
    std::vector<std::int64_t> component(static_cast<std::size_t>(n), -1);
    std::int64_t comp_count = 0;
    for (std::int64_t s = 0; s < n; ++s) {
        if (component[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<std::int64_t> stack{s};
        component[static_cast<std::size_t>(s)] = comp_count;
        while (!stack.empty()) {
            const std::int64_t u = stack.back();
            stack.pop_back();
            auto visit = [&](std::int64_t v) {
                if (component[static_cast<std::size_t>(v)] < 0) {
                    component[static_cast<std::size_t>(v)] = comp_count;
                    stack.push_back(v);
                }
            };
            for (std::int64_t arc : pg.out_arc_range(u)) visit(pg.arc_target(arc));
            for (std::int64_t arc : pg.in_arc_range(u)) visit(pg.arc_source(arc));
        }
        ++comp_count;
    }
    std::map<std::int64_t, std::vector<std::int64_t>> groups;
    for (std::int64_t t : terminals) groups[component[static_cast<std::size_t>(t)]].push_back(t);

    for (const auto& [comp, group] : groups) {
        if (group.size() < 2) {
            PrizeSteinerResult single;
            single.node_ids = {group[0]};
            single.objective = prize[static_cast<std::size_t>(group[0])];
            if (single.objective > best.objective) best = std::move(single);
            continue;
        }
        // Shortest paths from every terminal in the group.
        std::map<std::int64_t, SearchState> states;
        for (std::int64_t t : group) {
            SearchState st = dijkstra_core(pg, {t}, w, nullptr, nullptr);
            canonicalize_parents(pg, w, nullptr, nullptr, st);
            states.emplace(t, std::move(st));
        }
        // Prim over the metric closure of the group.
        std::set<std::int64_t> in_closure{group[0]};
        std::set<std::pair<std::int64_t, std::int64_t>> closure_edges;  // (from, to)
        while (in_closure.size() < group.size()) {
            double bd = kInf;
            std::int64_t bf = -1, bt = -1;
            for (std::int64_t f : in_closure) {
                const auto& st = states.at(f);
                for (std::int64_t t : group) {
                    if (in_closure.count(t)) continue;
                    const double d = st.dist[static_cast<std::size_t>(t)];
                    if (d < bd || (d == bd && (f < bf || (f == bf && t < bt)))) {
                        bd = d;
                        bf = f;
                        bt = t;
                    }
                }
            }
            in_closure.insert(bt);
            closure_edges.emplace(bf, bt);
        }
        // Expand closure edges into real relationships.
        std::set<std::int64_t> used_rels;
        std::set<std::int64_t> used_nodes;
        for (const auto& [f, t] : closure_edges) {
            const auto& st = states.at(f);
            std::int64_t v = t;
            used_nodes.insert(v);
            while (st.parent_arc[static_cast<std::size_t>(v)] >= 0) {
                const std::int64_t arc = st.parent_arc[static_cast<std::size_t>(v)];
                used_rels.insert(pg.arc_rel(arc));
                v = pg.arc_source(arc);
                used_nodes.insert(v);
            }
        }
        // Spanning tree of the union subgraph (it may contain cycles).
        std::map<std::int64_t, std::vector<TreeEdge>> adjacency;
        for (std::int64_t rel : used_rels) {
            const auto& r = pg.rels()[static_cast<std::size_t>(rel)];
            const double wt = w[static_cast<std::size_t>(rel)];
            adjacency[r.source].push_back({r.source, r.target, rel, wt});
            adjacency[r.target].push_back({r.target, r.source, rel, wt});
        }
        using Item = std::tuple<double, std::int64_t, std::int64_t, std::int64_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
        std::set<std::int64_t> tree_nodes{*used_nodes.begin()};
        std::vector<TreeEdge> tree_edges;
        auto push_node = [&](std::int64_t u) {
            for (const TreeEdge& e : adjacency[u]) {
                heap.emplace(e.weight, e.target, e.rel_index, u);
            }
        };
        push_node(*used_nodes.begin());
        while (!heap.empty()) {
            auto [wt, v, rel, u] = heap.top();
            heap.pop();
            if (tree_nodes.count(v)) continue;
            tree_nodes.insert(v);
            tree_edges.push_back({u, v, rel, wt});
            push_node(v);
        }
        // Prune leaves whose prize does not pay for their attachment edge.
        std::map<std::int64_t, std::vector<std::size_t>> incident;
        std::vector<char> removed(tree_edges.size(), 0);
        auto degree = [&](std::int64_t v) {
            std::int64_t d = 0;
            for (std::size_t e : incident[v]) {
                if (!removed[e]) ++d;
            }
            return d;
        };
        for (std::size_t e = 0; e < tree_edges.size(); ++e) {
            incident[tree_edges[e].source].push_back(e);
            incident[tree_edges[e].target].push_back(e);
        }
        std::set<std::int64_t> kept(tree_nodes);
        bool changed = true;
        while (changed && kept.size() > 1) {
            changed = false;
            for (std::int64_t v : kept) {
                if (degree(v) != 1) continue;
                std::size_t leaf_edge = 0;
                for (std::size_t e : incident[v]) {
                    if (!removed[e]) leaf_edge = e;
                }
                if (prize[static_cast<std::size_t>(v)] < tree_edges[leaf_edge].weight) {
                    removed[leaf_edge] = 1;
                    kept.erase(v);
                    changed = true;
                    break;
                }
            }
        }
        PrizeSteinerResult result;
        result.node_ids.assign(kept.begin(), kept.end());
        for (std::size_t e = 0; e < tree_edges.size(); ++e) {
            if (!removed[e]) result.edges.push_back(tree_edges[e]);
        }
        double obj = 0.0;
        for (std::int64_t v : result.node_ids) obj += prize[static_cast<std::size_t>(v)];
        for (const TreeEdge& e : result.edges) obj -= e.weight;
        result.objective = obj;
        if (result.objective > best.objective) best = std::move(result);
    }
    return best;
}

}  // namespace gdsa
