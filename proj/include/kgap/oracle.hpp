#ifndef KGAP_ORACLE_HPP
#define KGAP_ORACLE_HPP

#include <chrono>
#include <vector>

#include "kgap/bounds.hpp"
#include "kgap/graph.hpp"

namespace kgap {

/// Budgets for the exact solver. Exceeding any of them raises LimitError
/// rather than returning an inexact answer.
struct OracleLimits {
    int max_vertices = 40;
    std::chrono::milliseconds time_budget{30000};
    long long branch_limit = 200'000'000;
};

/// Exact chromatic number by branch and bound: greedy clique lower bound,
/// saturation-ordered branching, and a new color is only ever introduced
/// as the single next index. Deterministic. Optionally writes one optimal
/// coloring to *coloring_out.
int exact_chromatic(const Graph& g, const OracleLimits& limits = {},
                    std::vector<int>* coloring_out = nullptr);

/// Colors used by the smallest-available greedy in the given vertex order;
/// always at most max_degree + 1. The order must be a permutation of V(g).
int greedy_upper(const Graph& g, const std::vector<int>& order);

/// Gap record with the chromatic number of g^k measured exactly.
GapRecord exact_gap(const Graph& g, int k, const OracleLimits& limits = {});

} // namespace kgap

#endif
