#pragma once

// Test-only oracles, independent of the code paths they check: brute-force
// isomorphism for tiny graphs and textbook closed-form adjacency spectra.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "graph.hpp"

namespace testutil {

// Brute force over all vertex permutations; fine for n <= 8.
inline bool isomorphic(const lalpha::Graph& a, const lalpha::Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    const int n = a.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto da = a.degrees(), db = b.degrees();
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    do {
        bool match = true;
        for (auto [u, v] : a.edges()) {
            if (!b.has_edge(perm[u], perm[v])) {
                match = false;
                break;
            }
        }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// A(P_n) eigenvalues: 2 cos(k pi / (n+1)), k = 1..n.
inline std::vector<double> path_adjacency_eigenvalues(int n) {
    std::vector<double> v;
    const double pi = std::acos(-1.0);
    for (int k = 1; k <= n; ++k) v.push_back(2.0 * std::cos(k * pi / (n + 1)));
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

// A(C_n) eigenvalues: 2 cos(2 pi k / n), k = 0..n-1.
inline std::vector<double> cycle_adjacency_eigenvalues(int n) {
    std::vector<double> v;
    const double pi = std::acos(-1.0);
    for (int k = 0; k < n; ++k) v.push_back(2.0 * std::cos(2.0 * pi * k / n));
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

} // namespace testutil
