#include "mdim/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "mdim/resolving.hpp"
#include "mdim/structure.hpp"

namespace mdim {

CoverInstance build_cover_instance(const Graph& g, const DistMatrix& d, PairMode mode) {
    CoverInstance inst;
    inst.mode = mode;
    inst.graph = g;
    inst.dist = d;

    const int n = g.vertex_count();
    if (mode == PairMode::vertex) {
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) inst.pairs.emplace_back(x, y);
    } else {
        const int m = g.edge_count();
        for (int e1 = 0; e1 < m; ++e1)
            for (int e2 = e1 + 1; e2 < m; ++e2) inst.pairs.emplace_back(e1, e2);
    }

    const int p = static_cast<int>(inst.pairs.size());
    inst.columns.assign(n, VertexSet(p));
    for (int id = 0; id < p; ++id) {
        auto [a, b] = inst.pairs[id];
        VertexSet r = mode == PairMode::vertex ? r_vertex(d, a, b) : r_edge(g, d, a, b);
        r.for_each([&](int v) { inst.columns[v].insert(id); });
    }
    return inst;
}

namespace {

struct Searcher {
    const CoverInstance& inst;
    long budget;
    bool budget_exhausted = false;

    int best_size;        // size of best witness found
    VertexSet best;       // an actual cover of that size
    int prune_bound;      // prune nodes whose bound reaches this

    Searcher(const CoverInstance& i, long nodes) : inst(i), budget(nodes) {}

    // column with the largest uncovered coverage; ties to the lowest index
    int pick_column(const VertexSet& uncovered, const VertexSet& unavailable,
                    int* coverage) const {
        int best_v = -1, best_c = 0;
        const int n = static_cast<int>(inst.columns.size());
        for (int v = 0; v < n; ++v) {
            if (unavailable.contains(v)) continue;
            int c = inst.columns[v].intersection_count(uncovered);
            if (c > best_c) { best_c = c; best_v = v; }
        }
        *coverage = best_c;
        return best_v;
    }

    void record(const VertexSet& chosen) {
        int sz = chosen.count();
        if (sz < best_size) {
            best_size = sz;
            best = chosen;
        }
        prune_bound = std::min(prune_bound, sz);
    }

    void run(VertexSet chosen, VertexSet unavailable, VertexSet uncovered) {
        if (budget_exhausted) return;
        if (--budget < 0) { budget_exhausted = true; return; }

        int left = uncovered.count();
        if (left == 0) { record(chosen); return; }

        int cov = 0;
        int v = pick_column(uncovered, unavailable, &cov);
        if (v < 0) return;  // nothing can cover the rest

        int bound = chosen.count() + (left + cov - 1) / cov;
        if (bound >= prune_bound) return;

        // include v
        {
            VertexSet c2 = chosen, u2 = uncovered, a2 = unavailable;
            c2.insert(v);
            a2.insert(v);
            u2 -= inst.columns[v];
            run(std::move(c2), std::move(a2), std::move(u2));
        }
        // exclude v
        {
            VertexSet a2 = unavailable;
            a2.insert(v);
            run(std::move(chosen), std::move(a2), std::move(uncovered));
        }
    }
};

}  // namespace

CoverResult minimum_cover(const CoverInstance& inst, const CoverOptions& opts) {
    const int n = static_cast<int>(inst.columns.size());
    const int p = static_cast<int>(inst.pairs.size());

    VertexSet all_pairs(p);
    for (int i = 0; i < p; ++i) all_pairs.insert(i);
    {
        VertexSet covered(p);
        for (const auto& col : inst.columns) covered |= col;
        if (covered != all_pairs)
            throw std::logic_error("infeasible cover instance");
    }

    // Twin preprocessing: any resolving set misses at most one vertex of each
    // twin class, and twins are interchangeable, so fixing all but the last
    // member of each class keeps an optimum reachable. Skipped when the
    // universe is empty (the empty cover is then optimal).
    VertexSet forced(n);
    if (p > 0)
        for (const TwinClass& cls : twin_partition(inst.graph).classes)
            for (std::size_t i = 0; i + 1 < cls.members.size(); ++i)
                forced.insert(cls.members[i]);

    VertexSet uncovered = all_pairs;
    forced.for_each([&](int v) { uncovered -= inst.columns[v]; });

    // greedy incumbent on top of the forced set
    VertexSet greedy = forced;
    {
        VertexSet left = uncovered;
        VertexSet used = forced;
        while (!left.empty()) {
            int cov = 0, v = -1;
            for (int w = 0; w < n; ++w) {
                if (used.contains(w)) continue;
                int c = inst.columns[w].intersection_count(left);
                if (c > cov) { cov = c; v = w; }
            }
            if (v < 0) throw std::logic_error("greedy cover stalled");
            greedy.insert(v);
            used.insert(v);
            left -= inst.columns[v];
        }
    }

    Searcher s(inst, opts.node_budget);
    s.best = greedy;
    s.best_size = greedy.count();
    s.prune_bound = s.best_size;
    if (opts.upper_bound_hint)
        s.prune_bound = std::min(s.prune_bound, *opts.upper_bound_hint + 1);
    s.run(forced, forced, uncovered);

    CoverResult result;
    result.size = s.best_size;
    result.witness = s.best;
    result.proven_optimal = !s.budget_exhausted;
    if (opts.upper_bound_hint && result.size > *opts.upper_bound_hint)
        result.proven_optimal = false;  // the hint truncated the search unmatched

    Verdict check = inst.mode == PairMode::vertex
                        ? is_resolving_set(inst.graph, inst.dist, result.witness)
                        : is_edge_resolving_set(inst.graph, inst.dist, result.witness);
    if (!check.ok) throw std::logic_error("minimum_cover produced a non-resolving witness");
    return result;
}

namespace {

DimResult run_dim(const Graph& g, PairMode mode, const CoverOptions& opts) {
    DistMatrix d = all_pairs_distances(g);  // throws DisconnectedError
    CoverResult r = minimum_cover(build_cover_instance(g, d, mode), opts);
    return {r.size, r.witness, r.proven_optimal};
}

}  // namespace

DimResult dim(const Graph& g, const CoverOptions& opts) {
    if (g.vertex_count() < 2) throw TooSmallError("dim requires at least 2 vertices");
    return run_dim(g, PairMode::vertex, opts);
}

DimResult edim(const Graph& g, const CoverOptions& opts) {
    if (g.vertex_count() < 3) throw TooSmallError("edim requires at least 3 vertices");
    return run_dim(g, PairMode::edge, opts);
}

}  // namespace mdim
