#ifndef KGAP_COLORIZER_HPP
#define KGAP_COLORIZER_HPP

#include <optional>
#include <string>
#include <vector>

#include "kgap/errors.hpp"
#include "kgap/graph.hpp"
#include "kgap/walks.hpp"

namespace kgap {

/// Color per vertex (-1 = uncolored) with the palette it draws from.
/// Colors are 0-based; properness is established by verify_coloring,
/// never assumed.
struct PartialColoring {
    std::vector<int> color;
    long long palette_size = 0;

    bool is_colored(int v) const { return color[v] >= 0; }
};

/// A shortest path held as its vertex sequence. Consecutive vertices are
/// adjacent and the endpoint distance equals the edge count.
struct PathWitness {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Throws InternalError unless w is a shortest path in g.
void validate_witness(const Graph& g, const PathWitness& w);

/// A shortest path with exactly target_distance edges, extracted from a
/// diameter witness; absent when the diameter is too small. Throws
/// PreconditionError on disconnected input.
std::optional<PathWitness> find_far_pair(const Graph& g, int target_distance);

/// Root assignments relative to a path and a designated center position:
/// the root of v is the path vertex lying on a shortest path from v to the
/// center that maximizes the distance to the center; ties prefer the lower
/// path position (the side of the path's first endpoint, then lower index).
struct RootInfo {
    int center = -1;     // vertex id at center_pos
    int center_pos = -1;
    std::vector<int> root;             // per original vertex
    std::vector<int> root_pos;         // path position of the root
    std::vector<int> dist_root;        // d(v, r_v)
    std::vector<int> dist_center;      // d(v, center)
    std::vector<int> root_dist_center; // d(r_v, center)
    std::vector<char> in_center_set;   // root == center and d(v,center) <= k
};

/// General root assignment against an arbitrary center (the center-set
/// flags are left empty).
RootInfo assign_roots(const Graph& g, const PathWitness& w, int center_pos);

/// Root assignment for the midpoint of a length-(2k-2) witness, including
/// the center set {v : r_v = center, d(center,v) <= k} over V(G).
RootInfo compute_roots(const Graph& g, const PathWitness& w);

/// Precoloring of a length-(2k-2) witness: position i left of the center
/// and position i right of it receive matching colors so that exactly the
/// center stays uncolored. Asserts the result is proper on g^k.
PartialColoring precolor_main(const Graph& g, const PathWitness& w, int k,
                              long long palette_size);

/// Walk-indexed precoloring of the two radius-s balls around u1 and v1 in
/// the augmented graph (auxiliary vertices included): each ball vertex
/// receives the index of the first walk of length <= s reaching it, with
/// the empty walk first. Asserts properness on the k-th power of ag.
PartialColoring precolor_improved(const AugmentedGraph& ag, int u1, int v1,
                                  int s, long long palette_size);

enum class StepPhase { precolor, sweep, center, last };

const char* to_string(StepPhase phase);

/// One row of the per-vertex audit trail emitted by the procedures.
struct StepRecord {
    int vertex = -1;
    StepPhase phase = StepPhase::sweep;
    int root = -1;
    int dist_root = -1;           // d(v, r_v)
    int root_dist_center = -1;    // d(r_v, center)
    long long nice = -1;          // color-saving walks observed (-1 for precolor rows)
    long long nice_literal = -1;  // diagnostic variant ignoring color repeats
    long long analytic_bound = -1;
    long long available = -1;     // palette minus distinct forbidden colors
    int color = -1;
};

struct ProcedureReport {
    std::string procedure; // "main" or "improved"
    int k = 0;
    int s = 0; // 0 for the main procedure
    int delta = 0;
    long long palette = 0;
    std::vector<int> path;
    int center_pos = -1;        // center of the ordering (midpoint / u_t)
    int second_center_pos = -1; // v_t for the improved procedure
    long long center_set_original = 0;  // |N| over V(G) (main procedure)
    long long center_set_augmented = 0; // |N| over V(Ĝ)
    bool success = false;
    std::vector<StepRecord> steps;
};

std::string report_to_text(const ProcedureReport& report);
std::string report_to_json(const ProcedureReport& report);

/// Raised when a greedy step finds no free color. The walk-counting
/// guarantees rule this out, so it always signals a defect; the full
/// trace is attached for the post-mortem.
struct PaletteExhaustedError : InternalError {
    ProcedureReport report;
    PaletteExhaustedError(const std::string& what, ProcedureReport r)
        : InternalError(what), report(std::move(r)) {}
};

struct ProcedureOptions {
    long long max_walks = 10'000'000;
    long long max_aux_vertices = 10'000'000;
};

struct ProcedureResult {
    PartialColoring coloring; // over V(Ĝ); the first n entries color V(G)
    ProcedureReport report;
};

/// Greedy coloring of g^k within palette_main(k, delta) colors, driven by
/// decreasing distance to the midpoint of a length-(2k-2) shortest path;
/// vertices rooted at the midpoint are colored in a second sweep.
/// Requires a connected graph with max degree >= 3, k >= 3 and diameter
/// >= 2k-2.
ProcedureResult run_main_procedure(const Graph& g, int k,
                                   const ProcedureOptions& options = {});

/// Greedy coloring of g^k within palette_improved(k, delta, s) colors from
/// a walk-indexed precoloring of the two balls around the endpoints of a
/// length-(k+2s+1) shortest path; the balls around the two path centers
/// are colored last. Requires a connected graph with max degree >= 3,
/// 1 <= s <= (k-5)/12 and diameter >= k+2s+1.
ProcedureResult run_improved_procedure(const Graph& g, int k, int s,
                                       const ProcedureOptions& options = {});

struct ColoringViolation {
    int u = -1;
    int v = -1;
    int distance = 0;
    int color = -1;
};

/// Checks properness of a full coloring of g^k: every pair of original
/// vertices at distance 1..k must differ. Requires all original vertices
/// colored.
std::vector<ColoringViolation> verify_coloring(const Graph& g, int k,
                                               const PartialColoring& coloring);

} // namespace kgap

#endif
