#include "kgap/colorizer.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "kgap/bounds.hpp"

namespace kgap {

namespace {

// Distances from source capped at max_dist; -1 beyond the horizon.
std::vector<int> bounded_bfs(const Graph& g, int source, int max_dist) {
    std::vector<int> dist(g.n, -1);
    dist[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[u] == max_dist) continue;
        for (int w : g.adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

} // namespace

void validate_witness(const Graph& g, const PathWitness& w) {
    if (w.vertices.empty()) throw InternalError("path witness: empty");
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
        if (!g.has_edge(w.vertices[i], w.vertices[i + 1]))
            throw InternalError("path witness: consecutive vertices not adjacent");
    auto t = bfs(g, w.vertices.front());
    if (t.dist[w.vertices.back()] != w.length())
        throw InternalError("path witness: not a shortest path");
}

std::optional<PathWitness> find_far_pair(const Graph& g, int target_distance) {
    if (!is_connected(g)) throw PreconditionError("find_far_pair: graph is disconnected");
    if (target_distance < 0) throw PreconditionError("find_far_pair: negative target");
    auto d = diameter(g);
    if (d.value < target_distance) return std::nullopt;
    auto full = shortest_path(g, d.a, d.b);
    PathWitness w;
    w.vertices.assign(full.begin(), full.begin() + target_distance + 1);
    validate_witness(g, w);
    return w;
}

RootInfo assign_roots(const Graph& g, const PathWitness& w, int center_pos) {
    validate_witness(g, w);
    const auto& path = w.vertices;
    const int plen = static_cast<int>(path.size());
    if (center_pos < 0 || center_pos >= plen)
        throw PreconditionError("assign_roots: center position outside the path");

    std::vector<std::vector<int>> from_path(plen);
    for (int p = 0; p < plen; ++p) from_path[p] = bfs(g, path[p]).dist;
    for (int v = 0; v < g.n; ++v)
        if (from_path[center_pos][v] < 0)
            throw PreconditionError("assign_roots: graph is disconnected");

    // path positions by decreasing distance to the center, lower-position side first
    std::vector<int> by_rank(plen);
    for (int p = 0; p < plen; ++p) by_rank[p] = p;
    std::sort(by_rank.begin(), by_rank.end(), [&](int a, int b) {
        int da = std::abs(a - center_pos), db = std::abs(b - center_pos);
        if (da != db) return da > db;
        return a < b;
    });

    RootInfo info;
    info.center = path[center_pos];
    info.center_pos = center_pos;
    info.root.assign(g.n, -1);
    info.root_pos.assign(g.n, -1);
    info.dist_root.assign(g.n, -1);
    info.dist_center = from_path[center_pos];
    info.root_dist_center.assign(g.n, -1);

    for (int v = 0; v < g.n; ++v) {
        for (int p : by_rank) {
            int through = from_path[p][v] + std::abs(p - center_pos);
            if (through == info.dist_center[v]) {
                info.root[v] = path[p];
                info.root_pos[v] = p;
                info.dist_root[v] = from_path[p][v];
                info.root_dist_center[v] = std::abs(p - center_pos);
                break;
            }
        }
        if (info.root[v] < 0) throw InternalError("assign_roots: no root found");
    }
    return info;
}

RootInfo compute_roots(const Graph& g, const PathWitness& w) {
    if (w.length() < 2 || w.length() % 2 != 0)
        throw PreconditionError("compute_roots: witness must have even positive length");
    int k = w.length() / 2 + 1;
    RootInfo info = assign_roots(g, w, w.length() / 2);
    info.in_center_set.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        if (info.root[v] == info.center && info.dist_center[v] <= k)
            info.in_center_set[v] = 1;
    return info;
}

PartialColoring precolor_main(const Graph& g, const PathWitness& w, int k,
                              long long palette_size) {
    if (k < 3) throw PreconditionError("precolor_main: k must be >= 3");
    if (w.length() != 2 * k - 2)
        throw PreconditionError("precolor_main: witness length must be 2k-2");
    validate_witness(g, w);

    PartialColoring coloring;
    coloring.palette_size = palette_size;
    coloring.color.assign(g.n, -1);
    const auto& path = w.vertices;
    const int center = k - 1;
    // positions 0..k-2 carry colors 1..k-1, positions k..2k-2 carry colors
    // 0..k-2; matching colors sit k+1 apart along the path
    for (int pos = 0; pos < center; ++pos) coloring.color[path[pos]] = pos + 1;
    for (int pos = center + 1; pos <= 2 * k - 2; ++pos) coloring.color[path[pos]] = pos - center - 1;

    // matching colors may only sit at distance > k, otherwise the witness
    // was not shortest and something upstream broke
    for (int pos = 0; pos < center; ++pos) {
        auto dist = bounded_bfs(g, path[pos], k);
        for (int other = center + 1; other <= 2 * k - 2; ++other) {
            int u = path[pos], v = path[other];
            if (coloring.color[u] == coloring.color[v] && dist[v] >= 0)
                throw InternalError("precolor_main: precoloring is not proper on g^k");
        }
    }
    return coloring;
}

PartialColoring precolor_improved(const AugmentedGraph& ag, int u1, int v1,
                                  int s, long long palette_size) {
    if (s < 1) throw PreconditionError("precolor_improved: s must be >= 1");
    if (u1 < 0 || u1 >= ag.original_count || v1 < 0 || v1 >= ag.original_count)
        throw PreconditionError("precolor_improved: endpoints must be original vertices");
    if (s > ag.k) throw PreconditionError("precolor_improved: s exceeds augmentation height");
    {
        auto dist = bfs(ag.graph, u1);
        if (dist.dist[v1] != ag.k + 2 * s + 1)
            throw PreconditionError("precolor_improved: endpoint distance must be k+2s+1");
    }

    PartialColoring coloring;
    coloring.palette_size = palette_size;
    coloring.color.assign(ag.graph.n, -1);

    for (int origin : {u1, v1}) {
        WalkOrder order = enumerate_walks(ag, origin, s, /*include_empty=*/true);
        for (std::size_t i = 0; i < order.size(); ++i) {
            int e = order.endpoint_at(i);
            if (coloring.color[e] < 0) coloring.color[e] = static_cast<int>(i);
        }
    }

    // same color across the two balls must mean distance > k in the
    // augmented graph
    std::vector<int> colored;
    for (int v = 0; v < ag.graph.n; ++v)
        if (coloring.color[v] >= 0) colored.push_back(v);
    for (int v : colored) {
        auto dist = bounded_bfs(ag.graph, v, ag.k);
        for (int u : colored)
            if (u != v && coloring.color[u] == coloring.color[v] && dist[u] >= 0)
                throw InternalError("precolor_improved: precoloring is not proper on the k-th power");
    }
    return coloring;
}

const char* to_string(StepPhase phase) {
    switch (phase) {
        case StepPhase::precolor: return "precolor";
        case StepPhase::sweep: return "sweep";
        case StepPhase::center: return "center";
        case StepPhase::last: return "last";
    }
    return "?";
}

namespace {

struct GreedyStep {
    long long available = 0;
    int color = -1;
    long long forbidden = 0;
};

// Smallest color absent from the colored part of the distance-k ball of v
// in the augmented graph; -1 when the palette is used up.
GreedyStep greedy_pick(const AugmentedGraph& ag, const PartialColoring& coloring,
                       int v, long long palette) {
    auto dist = bounded_bfs(ag.graph, v, ag.k);
    std::unordered_set<int> forbidden;
    for (int u = 0; u < ag.graph.n; ++u)
        if (dist[u] > 0 && coloring.color[u] >= 0) forbidden.insert(coloring.color[u]);
    GreedyStep step;
    step.forbidden = static_cast<long long>(forbidden.size());
    step.available = palette - step.forbidden;
    int c = 0;
    while (c < palette && forbidden.count(c)) ++c;
    step.color = c < palette ? c : -1;
    return step;
}

void require(bool condition, const char* what) {
    if (!condition) throw PreconditionError(what);
}

} // namespace

ProcedureResult run_main_procedure(const Graph& g, int k, const ProcedureOptions& options) {
    require(g.n > 0 && is_connected(g), "run_main_procedure: graph must be connected");
    require(g.max_degree() >= 3, "run_main_procedure: maximum degree must be >= 3");
    require(k >= 3, "run_main_procedure: k must be >= 3");
    auto witness = find_far_pair(g, 2 * k - 2);
    if (!witness)
        throw PreconditionError("run_main_procedure: diameter below 2k-2");

    const int delta = g.max_degree();
    const long long palette =
        to_machine_int(palette_main(k, delta), options.max_walks, "run_main_procedure palette");

    AugmentedGraph ag = augment(g, k, delta, options.max_aux_vertices);

    ProcedureResult result;
    ProcedureReport& report = result.report;
    report.procedure = "main";
    report.k = k;
    report.delta = delta;
    report.palette = palette;
    report.path = witness->vertices;
    report.center_pos = k - 1;

    PartialColoring precolored = precolor_main(g, *witness, k, palette);
    result.coloring.palette_size = palette;
    result.coloring.color.assign(ag.graph.n, -1);
    std::copy(precolored.color.begin(), precolored.color.end(), result.coloring.color.begin());

    RootInfo roots = compute_roots(g, *witness);

    for (int v = 0; v < g.n; ++v)
        if (roots.in_center_set[v]) ++report.center_set_original;
    // auxiliary members of the center set hang below original members:
    // a tree node at height h attached at v sits at distance
    // dist_center(v)+1+h and shares v's root
    report.center_set_augmented = report.center_set_original;
    for (int v = 0; v < g.n; ++v) {
        if (!roots.in_center_set[v]) continue;
        long long nodes = 0, pw = 1;
        for (int h = 0; h <= k - roots.dist_center[v] - 1; ++h) {
            nodes += pw;
            pw *= delta - 1;
        }
        report.center_set_augmented += (delta - g.degree(v)) * nodes;
    }

    for (int pos = 0; pos <= 2 * k - 2; ++pos) {
        if (pos == k - 1) continue;
        int v = witness->vertices[pos];
        StepRecord rec;
        rec.vertex = v;
        rec.phase = StepPhase::precolor;
        rec.root = roots.root[v];
        rec.dist_root = roots.dist_root[v];
        rec.root_dist_center = roots.root_dist_center[v];
        rec.color = result.coloring.color[v];
        report.steps.push_back(rec);
    }

    std::vector<int> schedule;
    for (char phase = 0; phase < 2; ++phase) {
        std::vector<int> part;
        for (int v = 0; v < g.n; ++v)
            if (result.coloring.color[v] < 0 && roots.in_center_set[v] == phase) part.push_back(v);
        std::sort(part.begin(), part.end(), [&](int a, int b) {
            if (roots.dist_center[a] != roots.dist_center[b])
                return roots.dist_center[a] > roots.dist_center[b];
            return a < b;
        });
        schedule.insert(schedule.end(), part.begin(), part.end());
    }

    for (int v : schedule) {
        WalkOrder order = enumerate_walks(ag, v, k, /*include_empty=*/false, options.max_walks);
        NiceCount nice = count_nice(order, result.coloring, g.n);
        bool at_center = roots.root[v] == roots.center;
        GreedyStep pick = greedy_pick(ag, result.coloring, v, palette);

        StepRecord rec;
        rec.vertex = v;
        rec.phase = at_center ? StepPhase::center : StepPhase::sweep;
        rec.root = roots.root[v];
        rec.dist_root = roots.dist_root[v];
        rec.root_dist_center = roots.root_dist_center[v];
        rec.nice = nice.count;
        rec.nice_literal = nice.count_literal;
        rec.analytic_bound = analytic_bound_main(
            roots.dist_root[v], roots.root_dist_center[v], k,
            at_center ? RootCase::at_center : RootCase::off_center);
        rec.available = pick.available;
        rec.color = pick.color;
        report.steps.push_back(rec);

        if (pick.color < 0) {
            report.success = false;
            throw PaletteExhaustedError("run_main_procedure: palette exhausted", report);
        }
        result.coloring.color[v] = pick.color;
    }

    if (!verify_coloring(g, k, result.coloring).empty())
        throw InternalError("run_main_procedure: produced coloring fails verification");
    report.success = true;
    return result;
}

ProcedureResult run_improved_procedure(const Graph& g, int k, int s,
                                       const ProcedureOptions& options) {
    require(g.n > 0 && is_connected(g), "run_improved_procedure: graph must be connected");
    require(g.max_degree() >= 3, "run_improved_procedure: maximum degree must be >= 3");
    require(s >= 1 && 12LL * s <= static_cast<long long>(k) - 5,
            "run_improved_procedure: s must satisfy 1 <= s <= (k-5)/12");
    const int path_len = k + 2 * s + 1;
    auto witness = find_far_pair(g, path_len);
    if (!witness)
        throw PreconditionError("run_improved_procedure: diameter below k+2s+1");

    const int delta = g.max_degree();
    const long long palette = to_machine_int(palette_improved(k, delta, s), options.max_walks,
                                             "run_improved_procedure palette");
    const long long saving =
        to_machine_int(power_degree_bound(s, delta) + 1, options.max_walks, "ball size");

    AugmentedGraph ag = augment(g, k, delta, options.max_aux_vertices);

    const int t = (k + 2 * s + 1) / 2;
    const int u1 = witness->vertices.front();
    const int v1 = witness->vertices.back();

    ProcedureResult result;
    ProcedureReport& report = result.report;
    report.procedure = "improved";
    report.k = k;
    report.s = s;
    report.delta = delta;
    report.palette = palette;
    report.path = witness->vertices;
    report.center_pos = t - 1;
    report.second_center_pos = path_len - t + 1;

    result.coloring = precolor_improved(ag, u1, v1, s, palette);

    RootInfo roots = assign_roots(g, *witness, t - 1);
    auto dist_ut = bfs(g, witness->vertices[t - 1]).dist;
    auto dist_vt = bfs(g, witness->vertices[path_len - t + 1]).dist;

    // every vertex of the two center balls must reach all precolored
    // vertices within k steps, else coloring them last would be unsound
    {
        std::vector<int> colored;
        for (int v = 0; v < ag.graph.n; ++v)
            if (result.coloring.color[v] >= 0) colored.push_back(v);
        const int reach = 2 * s + t + 2;
        if (reach > k)
            throw InternalError("run_improved_procedure: center balls too far from endpoint balls");
        for (int c : colored) {
            auto dist = bounded_bfs(ag.graph, c, reach);
            for (int v = 0; v < g.n; ++v)
                if ((dist_ut[v] <= s || dist_vt[v] <= s) && dist[v] < 0)
                    throw InternalError(
                        "run_improved_procedure: center ball vertex misses a precolored vertex");
        }
    }

    for (int v = 0; v < g.n; ++v) {
        if (result.coloring.color[v] < 0) continue;
        StepRecord rec;
        rec.vertex = v;
        rec.phase = StepPhase::precolor;
        rec.root = roots.root[v];
        rec.dist_root = roots.dist_root[v];
        rec.root_dist_center = roots.root_dist_center[v];
        rec.color = result.coloring.color[v];
        report.steps.push_back(rec);
    }

    std::vector<int> schedule;
    for (char last = 0; last < 2; ++last) {
        std::vector<int> part;
        for (int v = 0; v < g.n; ++v) {
            if (result.coloring.color[v] >= 0) continue;
            bool in_last = dist_ut[v] <= s || dist_vt[v] <= s;
            if (in_last == static_cast<bool>(last)) part.push_back(v);
        }
        std::sort(part.begin(), part.end(), [&](int a, int b) {
            if (dist_ut[a] != dist_ut[b]) return dist_ut[a] > dist_ut[b];
            return a < b;
        });
        schedule.insert(schedule.end(), part.begin(), part.end());
    }

    for (int v : schedule) {
        WalkOrder order = enumerate_walks(ag, v, k, /*include_empty=*/false, options.max_walks);
        NiceCount nice = count_nice(order, result.coloring, g.n);
        GreedyStep pick = greedy_pick(ag, result.coloring, v, palette);
        bool in_last = dist_ut[v] <= s || dist_vt[v] <= s;

        StepRecord rec;
        rec.vertex = v;
        rec.phase = in_last ? StepPhase::last : StepPhase::sweep;
        rec.root = roots.root[v];
        rec.dist_root = roots.dist_root[v];
        rec.root_dist_center = roots.root_dist_center[v];
        rec.nice = nice.count;
        rec.nice_literal = nice.count_literal;
        rec.analytic_bound = saving;
        rec.available = pick.available;
        rec.color = pick.color;
        report.steps.push_back(rec);

        if (pick.color < 0) {
            report.success = false;
            throw PaletteExhaustedError("run_improved_procedure: palette exhausted", report);
        }
        result.coloring.color[v] = pick.color;
    }

    if (!verify_coloring(g, k, result.coloring).empty())
        throw InternalError("run_improved_procedure: produced coloring fails verification");
    report.success = true;
    return result;
}

std::vector<ColoringViolation> verify_coloring(const Graph& g, int k,
                                               const PartialColoring& coloring) {
    if (k < 1) throw PreconditionError("verify_coloring: k must be >= 1");
    if (static_cast<int>(coloring.color.size()) < g.n)
        throw PreconditionError("verify_coloring: coloring smaller than the graph");
    for (int v = 0; v < g.n; ++v)
        if (coloring.color[v] < 0)
            throw PreconditionError("verify_coloring: original vertex uncolored");

    std::vector<ColoringViolation> violations;
    for (int u = 0; u < g.n; ++u) {
        auto dist = bounded_bfs(g, u, k);
        for (int v = u + 1; v < g.n; ++v) {
            if (dist[v] >= 1 && coloring.color[u] == coloring.color[v])
                violations.push_back({u, v, dist[v], coloring.color[u]});
        }
    }
    return violations;
}

std::string report_to_text(const ProcedureReport& report) {
    std::ostringstream out;
    out << "procedure " << report.procedure << "\n";
    out << "k " << report.k << "\n";
    out << "s " << report.s << "\n";
    out << "delta " << report.delta << "\n";
    out << "palette " << report.palette << "\n";
    out << "path";
    for (int v : report.path) out << ' ' << v;
    out << "\n";
    out << "center_pos " << report.center_pos << "\n";
    out << "second_center_pos " << report.second_center_pos << "\n";
    out << "center_set " << report.center_set_original << ' ' << report.center_set_augmented
        << "\n";
    out << "success " << (report.success ? "true" : "false") << "\n";
    for (const auto& s : report.steps) {
        out << "step vertex=" << s.vertex << " phase=" << to_string(s.phase)
            << " root=" << s.root << " d=" << s.dist_root << " dprime=" << s.root_dist_center
            << " nice=" << s.nice << " nice_literal=" << s.nice_literal
            << " bound=" << s.analytic_bound << " available=" << s.available
            << " color=" << s.color << "\n";
    }
    return out.str();
}

std::string report_to_json(const ProcedureReport& report) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : report.steps) {
        steps.push_back({{"vertex", s.vertex},
                         {"phase", to_string(s.phase)},
                         {"root", s.root},
                         {"d", s.dist_root},
                         {"dprime", s.root_dist_center},
                         {"nice", s.nice},
                         {"nice_literal", s.nice_literal},
                         {"analytic_bound", s.analytic_bound},
                         {"available", s.available},
                         {"color", s.color}});
    }
    nlohmann::json j{{"schema", 1},
                     {"procedure", report.procedure},
                     {"k", report.k},
                     {"s", report.s},
                     {"delta", report.delta},
                     {"palette", report.palette},
                     {"path", report.path},
                     {"center_pos", report.center_pos},
                     {"second_center_pos", report.second_center_pos},
                     {"center_set_original", report.center_set_original},
                     {"center_set_augmented", report.center_set_augmented},
                     {"success", report.success},
                     {"steps", steps}};
    return j.dump();
}

} // namespace kgap
