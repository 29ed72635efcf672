#ifndef KGAP_TESTS_TESTUTIL_HPP
#define KGAP_TESTS_TESTUTIL_HPP

#include <limits>
#include <vector>

#include "kgap/graph.hpp"

namespace kgap::testsupport {

inline constexpr int kUnreached = std::numeric_limits<int>::max() / 4;

/// Floyd-Warshall all-pairs distances; an oracle independent of the BFS
/// implementation under test. kUnreached marks disconnected pairs.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, kUnreached));
    for (int v = 0; v < g.n; ++v) {
        d[v][v] = 0;
        for (int w : g.adj[v]) d[v][w] = 1;
    }
    for (int m = 0; m < g.n; ++m)
        for (int u = 0; u < g.n; ++u)
            for (int v = 0; v < g.n; ++v)
                if (d[u][m] + d[m][v] < d[u][v]) d[u][v] = d[u][m] + d[m][v];
    return d;
}

/// Shortest cycle length through exhaustive BFS per start vertex;
/// kUnreached when the graph is a forest.
inline int girth(const Graph& g) {
    int best = kUnreached;
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> dist(g.n, -1), parent(g.n, -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.adj[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

inline bool is_complete(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != g.n - 1) return false;
    return true;
}

/// Subdivides every edge of g with `times` intermediate vertices.
inline Graph subdivide(const Graph& g, int times) {
    std::vector<std::pair<int, int>> edges;
    int next = g.n;
    for (int u = 0; u < g.n; ++u) {
        for (int v : g.adj[u]) {
            if (v < u) continue;
            int prev = u;
            for (int i = 0; i < times; ++i) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
            edges.emplace_back(prev, v);
        }
    }
    return build_graph(next, edges);
}

} // namespace kgap::testsupport

#endif
