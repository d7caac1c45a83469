#include "mdim/structure.hpp"

#include <functional>
#include <stdexcept>

#include "mdim/resolving.hpp"

namespace mdim {

namespace {

std::vector<VertexSet> neighbor_sets(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> nb(n, VertexSet(n));
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) nb[v].insert(w);
    return nb;
}

}  // namespace

TwinPartition twin_partition(const Graph& g) {
    const int n = g.vertex_count();
    auto nb = neighbor_sets(g);
    auto twins = [&](int u, int w) {
        VertexSet a = nb[u], b = nb[w];
        a.erase(w);
        b.erase(u);
        return a == b;
    };

    TwinPartition part;
    part.class_of.assign(n, -1);
    for (int u = 0; u < n; ++u) {
        if (part.class_of[u] >= 0) continue;
        TwinClass cls;
        cls.members.push_back(u);
        part.class_of[u] = static_cast<int>(part.classes.size());
        for (int w = u + 1; w < n; ++w) {
            if (part.class_of[w] >= 0) continue;
            if (twins(u, w)) {
                cls.members.push_back(w);
                part.class_of[w] = part.class_of[u];
            }
        }
        if (cls.members.size() == 1) {
            cls.kind = TwinKind::singleton;
        } else {
            cls.kind = g.has_edge(cls.members[0], cls.members[1]) ? TwinKind::clique
                                                                  : TwinKind::independent;
        }
        part.classes.push_back(std::move(cls));
    }
    return part;
}

bool is_twin_expansion_family(const Graph& g) {
    if (!is_connected(g))
        throw DisconnectedError("twin expansion test requires a connected graph");
    if (g.vertex_count() < 2) return false;
    for (const TwinClass& cls : twin_partition(g).classes)
        if (cls.members.size() < 2) return false;
    return true;
}

BijectionCheck has_half_dim_bijection(const Graph& g, const DistMatrix& d) {
    if (!is_connected(g))
        throw DisconnectedError("bijection test requires a connected graph");
    const int n = g.vertex_count();
    if (n < 2) return {false, {}};

    // v -> w allowed iff w != v and |R_v{v, w}| = 2
    std::vector<std::vector<int>> ok(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (w != v && r_vertex(d, v, w).count() == 2) ok[v].push_back(w);

    // bipartite matching between two copies of V (Kuhn's augmenting paths)
    std::vector<int> match_right(n, -1);
    std::vector<char> seen;
    std::function<bool(int)> augment = [&](int v) -> bool {
        for (int w : ok[v]) {
            if (seen[w]) continue;
            seen[w] = 1;
            if (match_right[w] < 0 || augment(match_right[w])) {
                match_right[w] = v;
                return true;
            }
        }
        return false;
    };
    int matched = 0;
    for (int v = 0; v < n; ++v) {
        seen.assign(n, 0);
        if (augment(v)) ++matched;
    }
    if (matched < n) return {false, {}};

    std::vector<int> pairing(n, -1);
    for (int w = 0; w < n; ++w) pairing[match_right[w]] = w;
    return {true, pairing};
}

TreeAnatomy tree_anatomy(const Graph& g) {
    const int n = g.vertex_count();
    if (g.edge_count() != n - 1 || !is_connected(g))
        throw NotATreeError("tree anatomy requires a connected graph with n-1 edges");

    TreeAnatomy a;
    a.n = n;
    a.terminal_degree.assign(n, 0);
    a.terminal_vertices.assign(n, {});
    a.subtree.assign(n, VertexSet(n));

    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 1) a.leaves.push_back(v);
        if (g.degree(v) >= 3) a.major_vertices.push_back(v);
    }

    // Walk from each leaf through its degree-2 chain; the first major vertex
    // reached is the unique nearest one and owns the leaf.
    for (int leaf : a.leaves) {
        if (a.major_vertices.empty()) break;
        std::vector<int> path{leaf};
        int prev = leaf, cur = g.neighbors(leaf)[0];
        while (g.degree(cur) == 2) {
            path.push_back(cur);
            int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                                   : g.neighbors(cur)[0];
            prev = cur;
            cur = next;
        }
        if (g.degree(cur) < 3) continue;  // hit the opposite leaf: no major vertex on the way
        path.push_back(cur);
        a.terminal_degree[cur] += 1;
        a.terminal_vertices[cur].push_back(leaf);
        for (int v : path) a.subtree[cur].insert(v);
    }

    for (int v : a.major_vertices) {
        if (a.terminal_degree[v] == 1) a.m1.push_back(v);
        if (a.terminal_degree[v] >= 2) a.m2.push_back(v);
    }
    return a;
}

Rational edimf_tree_formula(const TreeAnatomy& a) {
    return Rational(a.sigma() - a.ex1(), 2);
}

SubgraphWitness contains_k5_subgraph(const Graph& g) {
    const int n = g.vertex_count();
    auto nb = neighbor_sets(g);

    // Grow cliques over ascending vertex indices; candidates stay adjacent to
    // everything chosen so far.
    std::vector<int> clique;
    std::function<bool(const VertexSet&)> extend = [&](const VertexSet& cands) -> bool {
        if (clique.size() == 5) return true;
        if (cands.count() < 5 - static_cast<int>(clique.size())) return false;
        for (int v : cands.to_vector()) {
            clique.push_back(v);
            VertexSet next(n);
            (cands & nb[v]).for_each([&](int w) {
                if (w > v) next.insert(w);
            });
            if (extend(next)) return true;
            clique.pop_back();
        }
        return false;
    };

    VertexSet start(n);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 4) start.insert(v);
    if (extend(start)) return {true, clique};
    return {false, {}};
}

SubgraphWitness contains_k33_subgraph(const Graph& g) {
    const int n = g.vertex_count();
    auto nb = neighbor_sets(g);

    std::vector<int> hubs;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) hubs.push_back(v);

    const int h = static_cast<int>(hubs.size());
    for (int i = 0; i < h; ++i) {
        for (int j = i + 1; j < h; ++j) {
            VertexSet common2 = nb[hubs[i]] & nb[hubs[j]];
            if (common2.count() < 3) continue;
            for (int k = j + 1; k < h; ++k) {
                VertexSet common = common2 & nb[hubs[k]];
                // the triple itself can never appear in its common neighborhood
                if (common.count() >= 3) {
                    std::vector<int> w{hubs[i], hubs[j], hubs[k]};
                    common.for_each([&](int v) {
                        if (w.size() < 6) w.push_back(v);
                    });
                    return {true, w};
                }
            }
        }
    }
    return {false, {}};
}

}  // namespace mdim
