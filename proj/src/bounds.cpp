#include "kgap/bounds.hpp"
#include "kgap/errors.hpp"

namespace kgap {

BigInt power_degree_bound(int k, int delta) {
    if (k < 1) throw PreconditionError("power_degree_bound: k must be >= 1");
    if (delta < 2) throw PreconditionError("power_degree_bound: delta must be >= 2");
    BigInt total = 0;
    BigInt term = 1; // (delta-1)^i
    for (int i = 0; i < k; ++i) {
        total += term;
        term *= delta - 1;
    }
    return delta * total;
}

int chi_path_power(int n, int k) {
    if (n < 1 || k < 1) throw PreconditionError("chi_path_power: n >= 1 and k >= 1 required");
    return std::min(n, k + 1);
}

int chi_cycle_power(int n, int k) {
    if (n < 3 || k < 1) throw PreconditionError("chi_cycle_power: n >= 3 and k >= 1 required");
    if (n <= k + 1) return n;
    int q = n / (k + 1);
    int r = n % (k + 1);
    return k + 1 + (r + q - 1) / q;
}

BigInt palette_main(int k, int delta) {
    if (k < 3) throw PreconditionError("palette_main: k must be >= 3");
    if (delta < 3) throw PreconditionError("palette_main: delta must be >= 3");
    return power_degree_bound(k, delta) + 3 - k;
}

BigInt palette_improved(int k, int delta, int s) {
    if (k < 3) throw PreconditionError("palette_improved: k must be >= 3");
    if (delta < 3) throw PreconditionError("palette_improved: delta must be >= 3");
    if (s < 1 || 12LL * s > static_cast<long long>(k) - 5)
        throw PreconditionError("palette_improved: s must satisfy 1 <= s <= (k-5)/12");
    return power_degree_bound(k, delta) - power_degree_bound(s, delta);
}

GapRecord gap(const Graph& g, int k, int chi) {
    int delta = g.max_degree();
    if (delta < 2) throw PreconditionError("gap: max degree must be >= 2");
    GapRecord r;
    r.k = k;
    r.delta = delta;
    r.chi = chi;
    r.gap = power_degree_bound(k, delta) + 1 - chi;
    return r;
}

long long to_machine_int(const BigInt& value, long long cap, const char* what) {
    if (value > cap)
        throw LimitError(std::string(what) + ": value exceeds configured limit");
    return value.convert_to<long long>();
}

} // namespace kgap
