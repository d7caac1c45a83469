#pragma once

// Test-only oracles, written against the raw definitions so they share no
// code path with the implementations they check.

#include <algorithm>
#include <vector>

#include "mdim/graph.hpp"

namespace oracle {

constexpr int kInf = 1 << 28;

inline std::vector<std::vector<int>> floyd_warshall(const mdim::Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

// Smallest subset of vertices whose distance codes separate all vertices
// (or all edges), found by plain enumeration in increasing size order.
inline int min_resolving_bruteforce(const mdim::Graph& g, mdim::PairMode mode) {
    const int n = g.vertex_count();
    auto d = floyd_warshall(g);

    auto separates = [&](const std::vector<int>& s) {
        if (mode == mdim::PairMode::vertex) {
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y) {
                    bool split = false;
                    for (int u : s)
                        if (d[x][u] != d[y][u]) { split = true; break; }
                    if (!split) return false;
                }
            return true;
        }
        const auto& edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                bool split = false;
                for (int u : s) {
                    int di = std::min(d[edges[i].u][u], d[edges[i].v][u]);
                    int dj = std::min(d[edges[j].u][u], d[edges[j].v][u]);
                    if (di != dj) { split = true; break; }
                }
                if (!split) return false;
            }
        return true;
    };

    if (separates({})) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        while (true) {
            if (separates(comb)) return k;
            int i = k - 1;
            while (i >= 0 && comb[i] == n - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return n;
}

}  // namespace oracle
