#ifndef KGAP_GRAPH_HPP
#define KGAP_GRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kgap {

/// Simple undirected graph over dense 0-based vertex indices.
/// Neighbor lists are kept sorted so that every iteration order is
/// deterministic and repeated runs produce identical output.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int max_degree() const;
    long long edge_count() const;
    bool has_edge(int u, int v) const;
};

/// BFS distances from a single source; -1 marks unreachable vertices.
struct DistanceTable {
    int source = 0;
    std::vector<int> dist;
};

/// Builds a canonical Graph from an edge list. Duplicate pairs collapse,
/// (u,u) pairs and out-of-range indices are rejected.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

DistanceTable bfs(const Graph& g, int source);

bool is_connected(const Graph& g);

struct DiameterResult {
    int value = 0;
    int a = 0;
    int b = 0; // witness pair with d(a,b) == value
};

/// Exact diameter by all-sources BFS. Throws PreconditionError on
/// disconnected input.
DiameterResult diameter(const Graph& g);

/// Shortest path from a to b as a vertex sequence (BFS tree with
/// smallest-index parents, so the result is deterministic).
std::vector<int> shortest_path(const Graph& g, int a, int b);

/// k-th power: edge uv present iff 1 <= d_g(u,v) <= k.
Graph power(const Graph& g, int k);

Graph generate_path(int n);
Graph generate_cycle(int n);
Graph generate_complete(int n);
/// Prism over C_n: the cycle times K_2, a cubic graph on 2n vertices.
Graph generate_prism(int n);
Graph generate_petersen();
/// Rooted tree where the root has `arity` children and every deeper
/// internal node has arity-1 children; `height` levels below the root.
Graph generate_dary_tree(int arity, int height);
/// Pairing-model random d-regular graph; deterministic for a fixed seed.
/// Rejects pairings with loops or parallel edges, up to 1000 retries.
Graph generate_random_regular(int n, int d, std::uint64_t seed);

/// graph6 codec (the standard ASCII format, one graph per line).
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

} // namespace kgap

#endif
