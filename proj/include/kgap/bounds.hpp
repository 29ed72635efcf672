#ifndef KGAP_BOUNDS_HPP
#define KGAP_BOUNDS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "kgap/graph.hpp"

namespace kgap {

using BigInt = boost::multiprecision::cpp_int;

/// Number of non-root nodes of a tree of height k whose root has `delta`
/// children and whose deeper internal nodes have delta-1 children:
/// delta * sum_{i=0}^{k-1} (delta-1)^i. This is also the largest degree a
/// k-th power of a graph with maximum degree delta can reach. Computed in
/// the summation form, which stays valid at delta = 2.
BigInt power_degree_bound(int k, int delta);

/// chi of the k-th power of the path on n vertices: min(n, k+1).
int chi_path_power(int n, int k);

/// chi of the k-th power of the cycle on n vertices:
/// n if n <= k+1, otherwise k+1+ceil(r/q) with n = q(k+1)+r, 0 <= r <= k.
int chi_cycle_power(int n, int k);

/// Palette sizes guaranteed by the two greedy procedures.
BigInt palette_main(int k, int delta);                  // f(k,delta)+3-k
BigInt palette_improved(int k, int delta, int s);       // f(k,delta)-f(s,delta)

/// Distance how far chi(g^k) sits below the naive degree bound plus one.
struct GapRecord {
    int k = 0;
    int delta = 0;
    int chi = 0;
    BigInt gap; // power_degree_bound(k, delta) + 1 - chi
};

/// Builds the record for a graph whose k-th power is known to have
/// chromatic number chi. Requires max degree >= 2.
GapRecord gap(const Graph& g, int k, int chi);

/// Narrowing helper for palettes handed to the greedy procedures.
/// Throws LimitError when the value does not fit the given cap.
long long to_machine_int(const BigInt& value, long long cap, const char* what);

} // namespace kgap

#endif
