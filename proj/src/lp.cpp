#include "mdim/lp.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "mdim/resolving.hpp"

namespace mdim {

std::vector<VertexSet> reduce_constraints(std::vector<VertexSet> rows) {
    for (const auto& r : rows)
        if (r.empty()) throw EmptyRowError("constraint row is empty");

    // Sorting by cardinality first guarantees a subset is scanned before any
    // of its supersets, so one pass builds the minimal antichain.
    std::sort(rows.begin(), rows.end(), [](const VertexSet& a, const VertexSet& b) {
        int ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : a < b;
    });
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    std::vector<VertexSet> keep;
    for (const VertexSet& row : rows) {
        bool dominated = false;
        for (const VertexSet& k : keep) {
            if (k.is_subset_of(row)) { dominated = true; break; }
        }
        if (!dominated) keep.push_back(row);
    }
    return keep;
}

namespace {

// Full-tableau simplex state for min c'x, Ax - s = 1, x,s >= 0. Columns
// 0..n-1 are the x's, n..n+R-1 the surpluses; artificial variables exist only
// as basis markers (index >= n+R) and have no stored column, so they can
// never re-enter. The z-row stores reduced costs with -objective in the rhs
// slot, kept consistent by the same row operations as the body.
struct Tableau {
    int n, rows;
    int rhs;  // column index of the right-hand side
    std::vector<std::vector<Rational>> t;
    std::vector<Rational> z;
    std::vector<int> basis;

    Tableau(const CoveringLP& lp)
        : n(lp.var_count), rows(static_cast<int>(lp.rows.size())), rhs(n + rows) {
        t.assign(rows, std::vector<Rational>(rhs + 1, Rational(0)));
        basis.resize(rows);
        for (int i = 0; i < rows; ++i) {
            lp.rows[i].for_each([&](int v) { t[i][v] = Rational(1); });
            t[i][n + i] = Rational(-1);
            t[i][rhs] = Rational(1);
            basis[i] = rhs + 1 + i;  // artificial marker
        }
    }

    bool artificial(int var) const { return var > rhs; }

    void pivot(int pi, int pj) {
        Rational p = t[pi][pj];
        for (auto& cell : t[pi]) cell /= p;
        for (int r = 0; r < rows; ++r) {
            if (r == pi || t[r][pj].sign() == 0) continue;
            Rational f = t[r][pj];
            for (int j = 0; j <= rhs; ++j)
                if (t[pi][j].sign() != 0) t[r][j] -= f * t[pi][j];
        }
        if (z[pj].sign() != 0) {
            Rational f = z[pj];
            for (int j = 0; j <= rhs; ++j)
                if (t[pi][j].sign() != 0) z[j] -= f * t[pi][j];
        }
        basis[pi] = pj;
    }

    // Bland: entering = lowest-index column with negative reduced cost;
    // leaving = lexicographically smallest basic variable among the minimum
    // ratios. Returns false at optimality.
    bool bland_step() {
        int enter = -1;
        for (int j = 0; j < rhs; ++j) {
            if (z[j].sign() < 0) { enter = j; break; }
        }
        if (enter < 0) return false;

        int leave = -1;
        Rational best;
        for (int i = 0; i < rows; ++i) {
            if (t[i][enter].sign() <= 0) continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave < 0) throw std::logic_error("covering LP claims to be unbounded");
        pivot(leave, enter);
        return true;
    }

    void run_phase() {
        long guard = 1'000'000;
        while (bland_step())
            if (--guard < 0) throw std::logic_error("simplex failed to terminate");
    }
};

}  // namespace

LpSolution solve_covering_lp(const CoveringLP& lp) {
    const int n = lp.var_count;
    for (const auto& r : lp.rows)
        if (r.empty()) throw EmptyRowError("covering LP has an empty row");
    if (lp.rows.empty()) return {Rational(0), Weighting::zero(n)};

    Tableau tab(lp);

    // Phase 1: minimize the artificial total. With the artificial basis the
    // reduced cost of column j is -sum of its column, and -objective is
    // -sum of the right-hand sides.
    tab.z.assign(tab.rhs + 1, Rational(0));
    for (int i = 0; i < tab.rows; ++i)
        for (int j = 0; j <= tab.rhs; ++j)
            if (tab.t[i][j].sign() != 0) tab.z[j] -= tab.t[i][j];
    tab.run_phase();
    if ((-tab.z[tab.rhs]).sign() != 0)
        throw std::logic_error("covering LP reported infeasible");

    // Drive leftover (degenerate) artificials out of the basis; an all-zero
    // row is a redundant constraint and is dropped.
    for (int i = tab.rows - 1; i >= 0; --i) {
        if (!tab.artificial(tab.basis[i])) continue;
        int pj = -1;
        for (int j = 0; j < tab.rhs; ++j)
            if (tab.t[i][j].sign() != 0) { pj = j; break; }
        if (pj >= 0) {
            tab.pivot(i, pj);
        } else {
            tab.t.erase(tab.t.begin() + i);
            tab.basis.erase(tab.basis.begin() + i);
            --tab.rows;
        }
    }

    // Phase 2: real costs (1 on each x, 0 on surpluses).
    tab.z.assign(tab.rhs + 1, Rational(0));
    for (int j = 0; j < n; ++j) tab.z[j] = Rational(1);
    for (int i = 0; i < tab.rows; ++i) {
        if (tab.basis[i] >= n) continue;  // basic surplus has zero cost
        for (int j = 0; j <= tab.rhs; ++j)
            if (tab.t[i][j].sign() != 0) tab.z[j] -= tab.t[i][j];
    }
    tab.run_phase();

    Rational optimum = -tab.z[tab.rhs];
    std::vector<Rational> x(n, Rational(0));
    for (int i = 0; i < tab.rows; ++i)
        if (tab.basis[i] < n) x[tab.basis[i]] = tab.t[i][tab.rhs];

    Weighting w(std::move(x));  // range check: optimal entries lie in [0,1]

    // exactness certificates
    Rational total(0);
    for (int v = 0; v < n; ++v) total += w.at(v);
    if (total != optimum)
        throw std::logic_error("simplex objective does not match its solution");
    for (const auto& row : lp.rows) {
        Rational sum(0);
        row.for_each([&](int v) { sum += w.at(v); });
        if (sum < Rational(1))
            throw std::logic_error("simplex solution violates a constraint");
    }
    return {optimum, w};
}

std::vector<VertexSet> vertex_pair_rsets(const Graph& g, const DistMatrix& d) {
    const int n = g.vertex_count();
    std::vector<VertexSet> rows;
    rows.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) rows.push_back(r_vertex(d, x, y));
    return rows;
}

std::vector<VertexSet> edge_pair_rsets(const Graph& g, const DistMatrix& d) {
    const int m = g.edge_count();
    std::vector<VertexSet> rows;
    rows.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
    for (EdgeId e1 = 0; e1 < m; ++e1)
        for (EdgeId e2 = e1 + 1; e2 < m; ++e2) rows.push_back(r_edge(g, d, e1, e2));
    return rows;
}

CoveringLP build_covering_lp(const Graph& g, const DistMatrix& d, PairMode mode) {
    auto rows = mode == PairMode::vertex ? vertex_pair_rsets(g, d) : edge_pair_rsets(g, d);
    return {g.vertex_count(), reduce_constraints(std::move(rows))};
}

FracResult dim_f(const Graph& g) {
    if (g.vertex_count() < 2) throw TooSmallError("dim_f requires at least 2 vertices");
    DistMatrix d = all_pairs_distances(g);
    LpSolution sol = solve_covering_lp(build_covering_lp(g, d, PairMode::vertex));
    if (!is_resolving_function(g, d, sol.weights).ok)
        throw std::logic_error("dim_f produced an infeasible weighting");
    return {sol.optimum, sol.weights};
}

FracResult edim_f(const Graph& g) {
    if (g.vertex_count() < 3) throw TooSmallError("edim_f requires at least 3 vertices");
    DistMatrix d = all_pairs_distances(g);
    LpSolution sol = solve_covering_lp(build_covering_lp(g, d, PairMode::edge));
    if (!is_edge_resolving_function(g, d, sol.weights).ok)
        throw std::logic_error("edim_f produced an infeasible weighting");
    return {sol.optimum, sol.weights};
}

void dump_lp(std::ostream& out, const CoveringLP& lp) {
    for (const auto& row : lp.rows) {
        bool first = true;
        row.for_each([&](int v) {
            if (!first) out << " ";
            out << v;
            first = false;
        });
        out << "\n";
    }
}

}  // namespace mdim
