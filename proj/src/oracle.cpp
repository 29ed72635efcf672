#include "kgap/oracle.hpp"

#include <algorithm>

#include "kgap/errors.hpp"

namespace kgap {

namespace {

// Greedy clique from degree-ranked seeds plus one augmentation pass.
// Any clique is a valid lower bound; quality only affects pruning speed.
std::vector<int> greedy_clique(const Graph& g) {
    std::vector<int> by_degree(g.n);
    for (int v = 0; v < g.n; ++v) by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> best;
    int seeds = std::min(g.n, 8);
    for (int i = 0; i < seeds; ++i) {
        std::vector<int> clique{by_degree[i]};
        for (int v : by_degree) {
            if (v == by_degree[i]) continue;
            bool fits = true;
            for (int u : clique)
                if (!g.has_edge(u, v)) {
                    fits = false;
                    break;
                }
            if (fits) clique.push_back(v);
        }
        if (clique.size() > best.size()) best = clique;
    }
    return best;
}

struct Solver {
    const Graph& g;
    const OracleLimits& limits;
    std::chrono::steady_clock::time_point start;
    long long nodes = 0;

    int best;                     // best palette size found so far
    std::vector<int> best_colors; // coloring achieving it
    std::vector<int> colors;      // work array, -1 = uncolored
    int lower;                    // clique lower bound

    Solver(const Graph& graph, const OracleLimits& lim, int upper_bound,
           std::vector<int> upper_coloring, int lower_bound)
        : g(graph),
          limits(lim),
          start(std::chrono::steady_clock::now()),
          best(upper_bound),
          best_colors(std::move(upper_coloring)),
          colors(graph.n, -1),
          lower(lower_bound) {}

    void check_budget() {
        if (++nodes > limits.branch_limit)
            throw LimitError("exact_chromatic: branch limit exceeded");
        if ((nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() - start > limits.time_budget)
            throw LimitError("exact_chromatic: time budget exceeded");
    }

    // Uncolored vertex with the most distinct neighbor colors; ties by
    // degree, then index, so runs are reproducible.
    int select(int used) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        std::vector<char> seen(used + 1);
        for (int v = 0; v < g.n; ++v) {
            if (colors[v] >= 0) continue;
            std::fill(seen.begin(), seen.end(), 0);
            int sat = 0;
            for (int u : g.adj[v])
                if (colors[u] >= 0 && !seen[colors[u]]) {
                    seen[colors[u]] = 1;
                    ++sat;
                }
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        return pick;
    }

    void recurse(int colored, int used) {
        check_budget();
        if (best == lower) return; // optimum already certified
        if (colored == g.n) {
            if (used < best) {
                best = used;
                best_colors = colors;
            }
            return;
        }
        if (used >= best) return;

        int v = select(used);
        std::vector<char> banned(used + 1, 0);
        for (int u : g.adj[v])
            if (colors[u] >= 0) banned[colors[u]] = 1;

        for (int c = 0; c < used && c + 1 < best; ++c) {
            if (banned[c]) continue;
            colors[v] = c;
            recurse(colored + 1, used);
            colors[v] = -1;
            if (best == lower) return;
        }
        if (used + 1 < best) {
            colors[v] = used;
            recurse(colored + 1, used + 1);
            colors[v] = -1;
        }
    }
};

} // namespace

int greedy_upper(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.n)
        throw PreconditionError("greedy_upper: order is not a permutation");
    std::vector<char> present(g.n, 0);
    for (int v : order) {
        if (v < 0 || v >= g.n || present[v])
            throw PreconditionError("greedy_upper: order is not a permutation");
        present[v] = 1;
    }
    std::vector<int> colors(g.n, -1);
    int used = 0;
    std::vector<char> banned;
    for (int v : order) {
        banned.assign(used + 1, 0);
        for (int u : g.adj[v])
            if (colors[u] >= 0) banned[colors[u]] = 1;
        int c = 0;
        while (banned[c]) ++c;
        colors[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

int exact_chromatic(const Graph& g, const OracleLimits& limits,
                    std::vector<int>* coloring_out) {
    if (limits.max_vertices <= 0 || limits.branch_limit <= 0 ||
        limits.time_budget.count() <= 0)
        throw PreconditionError("exact_chromatic: limits must be positive");
    if (g.n > limits.max_vertices)
        throw LimitError("exact_chromatic: graph exceeds max_vertices");
    if (g.n == 0) {
        if (coloring_out) coloring_out->clear();
        return 0;
    }

    // DSATUR-style greedy as the initial upper bound
    std::vector<int> natural(g.n);
    for (int v = 0; v < g.n; ++v) natural[v] = v;
    std::vector<int> greedy_colors(g.n, -1);
    {
        std::vector<char> banned;
        int used = 0;
        std::vector<char> done(g.n, 0);
        for (int step = 0; step < g.n; ++step) {
            int pick = -1, pick_sat = -1, pick_deg = -1;
            for (int v = 0; v < g.n; ++v) {
                if (done[v]) continue;
                std::vector<char> seen(used + 1, 0);
                int sat = 0;
                for (int u : g.adj[v])
                    if (greedy_colors[u] >= 0 && !seen[greedy_colors[u]]) {
                        seen[greedy_colors[u]] = 1;
                        ++sat;
                    }
                if (sat > pick_sat || (sat == pick_sat && g.degree(v) > pick_deg)) {
                    pick = v;
                    pick_sat = sat;
                    pick_deg = g.degree(v);
                }
            }
            banned.assign(used + 1, 0);
            for (int u : g.adj[pick])
                if (greedy_colors[u] >= 0) banned[greedy_colors[u]] = 1;
            int c = 0;
            while (banned[c]) ++c;
            greedy_colors[pick] = c;
            used = std::max(used, c + 1);
            done[pick] = 1;
        }
    }
    int upper = *std::max_element(greedy_colors.begin(), greedy_colors.end()) + 1;
    int lower = static_cast<int>(greedy_clique(g).size());

    Solver solver(g, limits, upper, greedy_colors, lower);
    if (upper > lower) solver.recurse(0, 0);
    if (coloring_out) *coloring_out = solver.best_colors;
    return solver.best;
}

GapRecord exact_gap(const Graph& g, int k, const OracleLimits& limits) {
    if (g.max_degree() < 2) throw PreconditionError("exact_gap: max degree must be >= 2");
    Graph p = power(g, k);
    int chi = exact_chromatic(p, limits);
    return gap(g, k, chi);
}

} // namespace kgap
