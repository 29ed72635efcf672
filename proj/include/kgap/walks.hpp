#ifndef KGAP_WALKS_HPP
#define KGAP_WALKS_HPP

#include <cstdint>
#include <vector>

#include "kgap/graph.hpp"

namespace kgap {

struct PartialColoring; // colorizer.hpp

/// G extended so that every original vertex sees a full degree-`delta`
/// neighborhood out to distance k: each vertex v of G is joined to the
/// roots of delta - deg(v) pendant trees of height k whose internal
/// nodes have delta-1 children. Vertices 0..original_count-1 are V(G);
/// the rest are auxiliary tree nodes. Pendant trees never shorten
/// distances, so d restricted to V(G) is unchanged.
struct AugmentedGraph {
    Graph graph;
    int original_count = 0;
    int k = 0;
    int delta = 0;
};

/// Builds the augmented graph. Throws PreconditionError when the maximum
/// degree of g exceeds delta, LimitError when the auxiliary trees would
/// exceed `max_aux_vertices`.
AugmentedGraph augment(const Graph& g, int k, int delta,
                       long long max_aux_vertices = 10'000'000);

/// Checks the structural promises of an augmentation (degrees, distance
/// preservation). Throws InternalError on violation.
void validate_augmentation(const Graph& g, const AugmentedGraph& ag);

/// One non-backtracking walk, materialized; vertices[0] is the origin.
struct Walk {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
    int endpoint() const { return vertices.back(); }
};

/// The fixed enumeration of non-backtracking walks from one origin:
/// length-major, then lexicographic by neighbor position within the sorted
/// adjacency lists. Walks are stored as a prefix tree (parent index plus
/// final endpoint), which keeps the order compact even when the count
/// reaches the full delta * sum (delta-1)^i bound.
struct WalkOrder {
    int origin = 0;
    int vertex_count = 0;   // |V(Ĝ)|, the endpoint universe
    bool includes_empty = false;
    std::vector<int> endpoint;              // per non-empty walk
    std::vector<int> parent;                // index of the walk one step shorter; -1 = origin
    std::vector<std::size_t> length_offset; // walks of length <= L are the first length_offset[L]

    /// Number of walks in the enumeration (counting the empty walk when present).
    std::size_t size() const { return endpoint.size() + (includes_empty ? 1 : 0); }
    int endpoint_at(std::size_t i) const;
    int length_at(std::size_t i) const;
    Walk walk_at(std::size_t i) const;
};

/// Enumerates all non-backtracking walks of length 1..max_len from an
/// original vertex of ag (plus the empty walk when include_empty is set).
/// The count of non-empty walks is exactly power_degree_bound(max_len, delta).
WalkOrder enumerate_walks(const AugmentedGraph& ag, int origin, int max_len,
                          bool include_empty, long long max_walks = 10'000'000);

/// Result of scanning a walk enumeration against a partial coloring.
/// A walk saves a color ("nice") when its endpoint is uncolored, repeats
/// the endpoint vertex of an earlier walk, or carries a color already seen
/// on an earlier walk's endpoint. count_literal additionally treats every
/// auxiliary endpoint as saving and ignores color repetition; it is kept
/// for diagnostics only.
struct NiceCount {
    long long count = 0;
    long long count_literal = 0;
    std::vector<std::uint8_t> flags; // per logical walk, 1 = saves a color
};

NiceCount count_nice(const WalkOrder& order, const PartialColoring& coloring,
                     int original_count);

/// Which closed-form lower bound applies to a greedy step: the root of the
/// vertex is the path center, or some other path vertex.
enum class RootCase { off_center, at_center };

/// Closed-form lower bound on the number of color-saving walks available
/// to a vertex at distance d from its root, with the root at distance
/// dprime from the path center.
long long analytic_bound_main(long long d, long long dprime, long long k, RootCase root_case);

} // namespace kgap

#endif
