#include "kgap/graph.hpp"
#include "kgap/errors.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace kgap {

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adj) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (const auto& nbrs : adj) twice += static_cast<long long>(nbrs.size());
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw PreconditionError("build_graph: negative vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw PreconditionError("build_graph: vertex index out of range");
        if (u == v) throw PreconditionError("build_graph: self-loop rejected");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nbrs : g.adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
}

DistanceTable bfs(const Graph& g, int source) {
    if (source < 0 || source >= g.n) throw PreconditionError("bfs: source out of range");
    DistanceTable t;
    t.source = source;
    t.dist.assign(g.n, -1);
    t.dist[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.adj[u]) {
            if (t.dist[w] < 0) {
                t.dist[w] = t.dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return t;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    auto t = bfs(g, 0);
    return std::find(t.dist.begin(), t.dist.end(), -1) == t.dist.end();
}

DiameterResult diameter(const Graph& g) {
    if (g.n == 0) throw PreconditionError("diameter: empty graph");
    if (!is_connected(g)) throw PreconditionError("diameter: graph is disconnected");
    DiameterResult r;
    for (int s = 0; s < g.n; ++s) {
        auto t = bfs(g, s);
        for (int v = 0; v < g.n; ++v) {
            if (t.dist[v] > r.value) {
                r.value = t.dist[v];
                r.a = s;
                r.b = v;
            }
        }
    }
    return r;
}

std::vector<int> shortest_path(const Graph& g, int a, int b) {
    auto t = bfs(g, a);
    if (b < 0 || b >= g.n || t.dist[b] < 0)
        throw PreconditionError("shortest_path: endpoints not connected");
    std::vector<int> path;
    int cur = b;
    path.push_back(cur);
    while (cur != a) {
        // smallest-index neighbor one step closer to a
        int next = -1;
        for (int w : g.adj[cur]) {
            if (t.dist[w] == t.dist[cur] - 1) {
                next = w;
                break;
            }
        }
        cur = next;
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

Graph power(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("power: k must be >= 1");
    Graph p;
    p.n = g.n;
    p.adj.assign(g.n, {});
    for (int s = 0; s < g.n; ++s) {
        auto t = bfs(g, s);
        for (int v = 0; v < g.n; ++v)
            if (v != s && t.dist[v] >= 1 && t.dist[v] <= k) p.adj[s].push_back(v);
    }
    // neighbor lists emerge sorted from the index loop above
    return p;
}

Graph generate_path(int n) {
    if (n < 1) throw PreconditionError("path: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_graph(n, edges);
}

Graph generate_cycle(int n) {
    if (n < 3) throw PreconditionError("cycle: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return build_graph(n, edges);
}

Graph generate_complete(int n) {
    if (n < 1) throw PreconditionError("complete: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return build_graph(n, edges);
}

Graph generate_prism(int n) {
    if (n < 3) throw PreconditionError("prism: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(n + i, n + (i + 1) % n);
        edges.emplace_back(i, n + i);
    }
    return build_graph(2 * n, edges);
}

Graph generate_petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);         // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        edges.emplace_back(i, 5 + i);               // spokes
    }
    return build_graph(10, edges);
}

Graph generate_dary_tree(int arity, int height) {
    if (arity < 2 || height < 0) throw PreconditionError("dary_tree: arity >= 2 and height >= 0 required");
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    std::vector<int> level{0};
    for (int h = 0; h < height; ++h) {
        std::vector<int> below;
        for (int v : level) {
            int children = (h == 0) ? arity : arity - 1;
            for (int c = 0; c < children; ++c) {
                edges.emplace_back(v, next);
                below.push_back(next);
                ++next;
            }
        }
        level = std::move(below);
    }
    return build_graph(next, edges);
}

namespace {

// Uniform draw in [0, bound) with rejection; hand-rolled so output does
// not depend on the standard library's distribution implementation.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

} // namespace

Graph generate_random_regular(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 0 || d >= n || (static_cast<long long>(n) * d) % 2 != 0)
        throw PreconditionError("random_regular: infeasible parameters (need d < n and n*d even)");
    std::mt19937_64 rng(seed);
    std::vector<int> points(static_cast<std::size_t>(n) * d);
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<int>(i) / d;

    for (int attempt = 0; attempt < 1000; ++attempt) {
        // Fisher-Yates shuffle of the half-edge points
        for (std::size_t i = points.size(); i > 1; --i)
            std::swap(points[i - 1], points[draw(rng, i)]);

        std::vector<std::pair<int, int>> edges;
        edges.reserve(points.size() / 2);
        bool simple = true;
        std::vector<std::vector<int>> seen(n);
        for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
            int u = points[i], v = points[i + 1];
            if (u == v) {
                simple = false;
                break;
            }
            auto& su = seen[std::min(u, v)];
            if (std::find(su.begin(), su.end(), std::max(u, v)) != su.end()) {
                simple = false;
                break;
            }
            su.push_back(std::max(u, v));
            edges.emplace_back(u, v);
        }
        if (simple) return build_graph(n, edges);
    }
    throw LimitError("random_regular: no simple pairing found within 1000 retries");
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr int kG6Offset = 63;

void append_bits(std::string& out, const std::vector<bool>& bits) {
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int b = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            b <<= 1;
            if (i + j < bits.size() && bits[i + j]) b |= 1;
        }
        out.push_back(static_cast<char>(b + kG6Offset));
    }
}

} // namespace

std::string to_graph6(const Graph& g) {
    long long n = g.n;
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kG6Offset));
    } else if (n <= 68719476735LL) {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kG6Offset));
    } else {
        throw PreconditionError("to_graph6: vertex count too large");
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
    append_bits(out, bits);
    return out;
}

Graph from_graph6(std::string_view text) {
    // tolerate a trailing newline from line-oriented streams
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input");
    for (char c : text)
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
            throw ParseError("graph6: byte out of range");

    std::size_t pos = 0;
    long long n = 0;
    if (text[0] != 126) {
        n = text[0] - kG6Offset;
        pos = 1;
    } else if (text.size() >= 2 && text[1] != 126) {
        if (text.size() < 4) throw ParseError("graph6: truncated header");
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - kG6Offset);
        pos = 4;
    } else {
        if (text.size() < 8) throw ParseError("graph6: truncated header");
        for (int i = 2; i <= 7; ++i) n = (n << 6) | (text[i] - kG6Offset);
        pos = 8;
    }
    if (n < 0 || n > 1000000) throw ParseError("graph6: unsupported vertex count");

    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(text.size()) - static_cast<long long>(pos) != nbytes)
        throw ParseError("graph6: body length mismatch");

    Graph g;
    g.n = static_cast<int>(n);
    g.adj.assign(g.n, {});
    long long bit = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = text[pos + bit / 6] - kG6Offset;
            if ((byte >> (5 - bit % 6)) & 1) {
                g.adj[i].push_back(j);
                g.adj[j].push_back(i);
            }
        }
    }
    // canonical strings zero-pad the final group
    for (long long b = bit; b < nbytes * 6; ++b) {
        int byte = text[pos + b / 6] - kG6Offset;
        if ((byte >> (5 - b % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

} // namespace kgap
