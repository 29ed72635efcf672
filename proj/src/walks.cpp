#include "kgap/walks.hpp"

#include <algorithm>
#include <limits>

#include "kgap/bounds.hpp"
#include "kgap/colorizer.hpp"
#include "kgap/errors.hpp"

namespace kgap {

AugmentedGraph augment(const Graph& g, int k, int delta, long long max_aux_vertices) {
    if (delta < 3) throw PreconditionError("augment: delta must be >= 3");
    if (k < 1) throw PreconditionError("augment: k must be >= 1");
    if (g.max_degree() > delta)
        throw PreconditionError("augment: graph has maximum degree above delta");

    // nodes of one pendant tree: sum_{h=0}^{k} (delta-1)^h
    BigInt tree_size = 0;
    BigInt pw = 1;
    for (int h = 0; h <= k; ++h) {
        tree_size += pw;
        pw *= delta - 1;
    }
    BigInt deficiency = 0;
    for (int v = 0; v < g.n; ++v) deficiency += delta - g.degree(v);
    BigInt aux_total = deficiency * tree_size;
    BigInt cap = std::min<BigInt>(max_aux_vertices,
                                  BigInt(std::numeric_limits<int>::max()) - g.n);
    if (aux_total > cap)
        throw LimitError("augment: auxiliary vertex count exceeds limit");

    AugmentedGraph ag;
    ag.original_count = g.n;
    ag.k = k;
    ag.delta = delta;
    ag.graph.n = g.n + aux_total.convert_to<int>();
    ag.graph.adj = g.adj;
    ag.graph.adj.resize(ag.graph.n);

    int next = g.n;
    for (int v = 0; v < g.n; ++v) {
        for (int t = g.degree(v); t < delta; ++t) {
            int root = next++;
            ag.graph.adj[v].push_back(root);
            ag.graph.adj[root].push_back(v);
            std::vector<int> level{root};
            for (int h = 0; h < k; ++h) {
                std::vector<int> below;
                for (int node : level) {
                    for (int c = 0; c < delta - 1; ++c) {
                        int child = next++;
                        ag.graph.adj[node].push_back(child);
                        ag.graph.adj[child].push_back(node);
                        below.push_back(child);
                    }
                }
                level = std::move(below);
            }
        }
    }
    // original lists stay sorted: appended roots carry indices above g.n,
    // and tree nodes are created in increasing order
    return ag;
}

void validate_augmentation(const Graph& g, const AugmentedGraph& ag) {
    const Graph& h = ag.graph;
    if (ag.original_count != g.n) throw InternalError("augmentation: original count mismatch");
    for (int v = 0; v < g.n; ++v)
        if (h.degree(v) != ag.delta)
            throw InternalError("augmentation: original vertex misses target degree");
    for (int v = 0; v < g.n; ++v) {
        if (h.adj[v].size() < g.adj[v].size() ||
            !std::equal(g.adj[v].begin(), g.adj[v].end(), h.adj[v].begin()))
            throw InternalError("augmentation: original adjacency altered");
    }
    // auxiliary vertices within distance k of V(G) must have full degree
    std::vector<int> dist(h.n, -1);
    std::vector<int> queue;
    for (int v = 0; v < g.n; ++v) {
        dist[v] = 0;
        queue.push_back(v);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : h.adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    for (int v = g.n; v < h.n; ++v) {
        if (dist[v] < 0) throw InternalError("augmentation: unreachable auxiliary vertex");
        if (dist[v] <= ag.k && h.degree(v) != ag.delta)
            throw InternalError("augmentation: near auxiliary vertex misses target degree");
    }
    // pendant trees must not shorten distances between original vertices
    for (int v = 0; v < g.n; ++v) {
        auto dg = bfs(g, v);
        auto dh = bfs(h, v);
        for (int u = 0; u < g.n; ++u)
            if (dg.dist[u] != dh.dist[u])
                throw InternalError("augmentation: distance between original vertices changed");
    }
}

int WalkOrder::endpoint_at(std::size_t i) const {
    if (includes_empty) {
        if (i == 0) return origin;
        --i;
    }
    return endpoint[i];
}

int WalkOrder::length_at(std::size_t i) const {
    if (includes_empty) {
        if (i == 0) return 0;
        --i;
    }
    auto it = std::upper_bound(length_offset.begin(), length_offset.end(), i);
    return static_cast<int>(it - length_offset.begin());
}

Walk WalkOrder::walk_at(std::size_t i) const {
    Walk w;
    if (includes_empty) {
        if (i == 0) {
            w.vertices.push_back(origin);
            return w;
        }
        --i;
    }
    int idx = static_cast<int>(i);
    while (idx >= 0) {
        w.vertices.push_back(endpoint[idx]);
        idx = parent[idx];
    }
    w.vertices.push_back(origin);
    std::reverse(w.vertices.begin(), w.vertices.end());
    return w;
}

WalkOrder enumerate_walks(const AugmentedGraph& ag, int origin, int max_len,
                          bool include_empty, long long max_walks) {
    if (origin < 0 || origin >= ag.original_count)
        throw PreconditionError("enumerate_walks: origin must be an original vertex");
    if (max_len < 0 || max_len > ag.k)
        throw PreconditionError("enumerate_walks: max_len exceeds augmentation height");

    if (max_len >= 1) {
        BigInt expect = power_degree_bound(max_len, ag.delta);
        if (expect > max_walks) throw LimitError("enumerate_walks: walk count exceeds limit");
    }

    WalkOrder order;
    order.origin = origin;
    order.vertex_count = ag.graph.n;
    order.includes_empty = include_empty;
    order.length_offset.assign(1, 0);

    const Graph& h = ag.graph;
    std::size_t prev_begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t prev_end = order.endpoint.size();
        if (len == 1) {
            for (int w : h.adj[origin]) {
                order.endpoint.push_back(w);
                order.parent.push_back(-1);
            }
        } else {
            for (std::size_t i = prev_begin; i < prev_end; ++i) {
                int pred = order.parent[i] < 0 ? origin : order.endpoint[order.parent[i]];
                for (int w : h.adj[order.endpoint[i]]) {
                    if (w == pred) continue;
                    order.endpoint.push_back(w);
                    order.parent.push_back(static_cast<int>(i));
                }
            }
        }
        prev_begin = prev_end;
        order.length_offset.push_back(order.endpoint.size());
    }

    if (max_len >= 1) {
        BigInt expect = power_degree_bound(max_len, ag.delta);
        if (BigInt(order.endpoint.size()) != expect)
            throw InternalError("enumerate_walks: walk count law violated");
    }
    return order;
}

NiceCount count_nice(const WalkOrder& order, const PartialColoring& coloring,
                     int original_count) {
    NiceCount result;
    result.flags.assign(order.size(), 0);
    std::vector<std::uint8_t> seen_vertex(order.vertex_count, 0);
    std::vector<std::uint8_t> seen_color;
    if (coloring.palette_size > 0) seen_color.assign(coloring.palette_size, 0);

    for (std::size_t i = 0; i < order.size(); ++i) {
        int e = order.endpoint_at(i);
        int color = e < static_cast<int>(coloring.color.size()) ? coloring.color[e] : -1;
        if (color >= static_cast<int>(seen_color.size()))
            throw PreconditionError("count_nice: color outside the declared palette");
        bool colored = color >= 0;
        bool repeat_vertex = seen_vertex[e];
        bool repeat_color = colored && seen_color[color];

        if (!colored || repeat_vertex || repeat_color) {
            result.flags[i] = 1;
            ++result.count;
        }
        if (e >= original_count || !colored || repeat_vertex) ++result.count_literal;

        seen_vertex[e] = 1;
        if (colored) seen_color[color] = 1;
    }
    return result;
}

long long analytic_bound_main(long long d, long long dprime, long long k, RootCase root_case) {
    if (d < 0 || dprime < 0) throw PreconditionError("analytic_bound_main: negative distance");
    if (root_case == RootCase::at_center) {
        if (d >= k) return 2 * k - 3;
        if (2 * d >= k) return 2 * d - 2;
        return k - 2;
    }
    long long along_path = std::max(0LL, std::min(d - 1, k));
    long long branching = d >= 2 ? std::max(0LL, std::min(d, k) - 2) : 0;
    long long beyond_root = std::max(0LL, std::min(d + dprime, k) - d - 1);
    long long into_center = std::max(0LL, k - d - dprime + 1);
    return along_path + branching + beyond_root + into_center;
}

} // namespace kgap
