#include "mdim/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <string>

namespace mdim {

int LabeledGraph::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    throw OutOfRangeError("unknown vertex name: " + name);
}

namespace {

// Accumulates named vertices (indexed in insertion order) and edges.
struct Builder {
    std::vector<std::string> names;
    std::map<std::string, int> index;
    std::vector<std::pair<int, int>> edges;

    int vertex(const std::string& name) {
        auto [it, fresh] = index.emplace(name, static_cast<int>(names.size()));
        if (fresh) names.push_back(name);
        return it->second;
    }
    void edge(const std::string& a, const std::string& b) {
        edges.emplace_back(vertex(a), vertex(b));
    }
    LabeledGraph finish(const std::vector<std::string>& landmark_names = {}) {
        LabeledGraph lg;
        lg.graph = build_graph(static_cast<int>(names.size()), edges);
        lg.names = names;
        for (const auto& nm : landmark_names) lg.landmarks.push_back(index.at(nm));
        return lg;
    }
};

std::string u(int i) { return "u" + std::to_string(i); }

void need(bool ok, const std::string& msg) {
    if (!ok) throw BadParameterError(msg);
}

std::vector<int> sorted_parts(const FamilySpec& spec) {
    need(spec.params.size() >= 2, "multipartite needs at least 2 parts");
    for (int p : spec.params) need(p >= 1, "multipartite part sizes must be >= 1");
    auto parts = spec.params;
    std::sort(parts.begin(), parts.end());
    return parts;
}

}  // namespace

LabeledGraph generate(const FamilySpec& spec) {
    Builder b;
    switch (spec.tag) {
        case FamilySpec::Tag::path: {
            need(spec.params.size() == 1 && spec.params[0] >= 2, "path needs n >= 2");
            int n = spec.params[0];
            for (int i = 0; i < n; ++i) b.vertex(u(i));
            for (int i = 0; i + 1 < n; ++i) b.edge(u(i), u(i + 1));
            return b.finish();
        }
        case FamilySpec::Tag::cycle: {
            need(spec.params.size() == 1 && spec.params[0] >= 3, "cycle needs n >= 3");
            int n = spec.params[0];
            for (int i = 0; i < n; ++i) b.vertex(u(i));
            for (int i = 0; i < n; ++i) b.edge(u(i), u((i + 1) % n));
            return b.finish();
        }
        case FamilySpec::Tag::complete: {
            need(spec.params.size() == 1 && spec.params[0] >= 1, "complete needs n >= 1");
            int n = spec.params[0];
            for (int i = 0; i < n; ++i) b.vertex(u(i));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) b.edge(u(i), u(j));
            return b.finish();
        }
        case FamilySpec::Tag::multipartite: {
            auto parts = sorted_parts(spec);
            int k = static_cast<int>(parts.size());
            std::vector<std::vector<std::string>> part_names(k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < parts[i]; ++j) {
                    auto nm = "v" + std::to_string(i + 1) + "," + std::to_string(j + 1);
                    part_names[i].push_back(nm);
                    b.vertex(nm);
                }
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    for (const auto& x : part_names[i])
                        for (const auto& y : part_names[j]) b.edge(x, y);
            return b.finish();
        }
        case FamilySpec::Tag::wheel: {
            need(spec.params.size() == 1 && spec.params[0] >= 4, "wheel needs n >= 4");
            int n = spec.params[0];  // order, rim has n-1 vertices
            for (int i = 0; i < n - 1; ++i) b.vertex(u(i));
            b.vertex("v");
            for (int i = 0; i < n - 1; ++i) {
                b.edge(u(i), u((i + 1) % (n - 1)));
                b.edge("v", u(i));
            }
            return b.finish();
        }
        case FamilySpec::Tag::grid: {
            need(spec.params.size() == 2 && spec.params[0] >= 2 && spec.params[1] >= 2,
                 "grid needs s, t >= 2");
            int s = spec.params[0], t = spec.params[1];
            auto nm = [](int i, int j) {
                return "u" + std::to_string(i) + "," + std::to_string(j);
            };
            for (int i = 1; i <= s; ++i)
                for (int j = 1; j <= t; ++j) b.vertex(nm(i, j));
            for (int i = 1; i <= s; ++i)
                for (int j = 1; j <= t; ++j) {
                    if (j < t) b.edge(nm(i, j), nm(i, j + 1));
                    if (i < s) b.edge(nm(i, j), nm(i + 1, j));
                }
            return b.finish();
        }
        case FamilySpec::Tag::petersen: {
            need(spec.params.empty(), "petersen takes no parameters");
            for (int i = 0; i < 5; ++i) b.vertex(u(i));
            for (int i = 0; i < 5; ++i) b.vertex("w" + std::to_string(i));
            for (int i = 0; i < 5; ++i) {
                auto w = [](int j) { return "w" + std::to_string(j % 5); };
                b.edge(u(i), u((i + 1) % 5));
                b.edge(w(i), w(i + 2));
                b.edge(u(i), w(i));
            }
            return b.finish();
        }
    }
    throw BadParameterError("unknown family tag");
}

std::pair<LabeledGraph, LabeledGraph> same_codes_pair() {
    auto cycle_with_chord = [](const std::string& chord_end) {
        Builder b;
        for (int i = 1; i <= 6; ++i) b.vertex("v" + std::to_string(i));
        for (int i = 1; i <= 6; ++i)
            b.edge("v" + std::to_string(i), "v" + std::to_string(i % 6 + 1));
        b.edge("v2", chord_end);
        return b.finish({"v1", "v3"});
    };
    return {cycle_with_chord("v6"), cycle_with_chord("v5")};
}

LabeledGraph nonplanar_edim2() {
    Builder b;
    for (const char* nm : {"u1", "u2", "u3", "v1", "v2", "v3", "x1", "x2",
                           "y1", "y2", "y3", "y4", "z1", "z2", "z3"})
        b.vertex(nm);
    b.edge("u1", "x1"); b.edge("x1", "x2"); b.edge("x2", "v1");
    b.edge("v1", "u2"); b.edge("u2", "v3");
    b.edge("v2", "u1"); b.edge("u1", "v3"); b.edge("v3", "u3"); b.edge("u3", "v2");
    b.edge("u2", "y1"); b.edge("y1", "y2"); b.edge("y2", "y3");
    b.edge("y3", "y4"); b.edge("y4", "v2");
    b.edge("u3", "z1"); b.edge("z1", "z2"); b.edge("z2", "z3"); b.edge("z3", "v1");
    return b.finish({"x1", "y4"});
}

SpannedGraph subgraph_edim_pair() {
    Builder bld;
    for (const char* nm : {"p1", "p2", "p3", "p4", "q1", "q2", "a", "b", "c", "t", "w"})
        bld.vertex(nm);
    for (int i = 1; i <= 4; ++i) {
        bld.edge("q1", "p" + std::to_string(i));
        bld.edge("q2", "p" + std::to_string(i));
    }
    bld.edge("b", "p3"); bld.edge("b", "p4");
    bld.edge("t", "p2"); bld.edge("t", "a");
    bld.edge("a", "w");
    bld.edge("w", "c"); bld.edge("w", "p4");
    bld.edge("c", "q2");
    LabeledGraph lg = bld.finish({"a", "b", "c"});

    VertexSet span(lg.graph.vertex_count());
    for (const char* nm : {"p1", "p2", "p3", "p4", "q1", "q2"})
        span.insert(lg.index_of(nm));
    return {std::move(lg), span};
}

SpannedGraph broadcast_pair(int m) {
    need(m >= 3, "broadcast pair needs m >= 3");
    Builder b;
    std::vector<std::string> ws;
    auto w = [](int i, int j) {
        return "w" + std::to_string(i) + "," + std::to_string(j);
    };
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= i; ++j) ws.push_back(w(i, j)), b.vertex(ws.back());
    for (int i = 1; i <= m; ++i) b.vertex(u(i));

    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j) b.edge(ws[i], ws[j]);
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= i; ++j) b.edge(u(i), w(i, j));
        for (int j = i + 1; j <= m; ++j) b.edge(u(i), w(j, i));
    }

    std::vector<std::string> landmarks;
    for (int i = 1; i <= m; ++i) landmarks.push_back(u(i));
    LabeledGraph lg = b.finish(landmarks);

    VertexSet span(lg.graph.vertex_count());
    for (const auto& nm : ws) span.insert(lg.index_of(nm));
    return {std::move(lg), span};
}

SpannedGraph twin_ladder_pair(int k) {
    need(k >= 2, "twin ladder needs k >= 2");
    Builder b;
    auto x = [](int i) { return "x" + std::to_string(i); };
    auto y = [](int i) { return "y" + std::to_string(i); };
    for (int i = 1; i <= 3 * k; ++i) b.vertex(x(i));
    for (int i = 1; i <= 3 * k; ++i) b.vertex(y(i));
    b.vertex("z");
    for (int j = 1; j <= k; ++j)
        for (const char* p : {"a", "b", "c", "d"}) b.vertex(p + std::to_string(j));

    for (int i = 1; i < 3 * k; ++i) {
        b.edge(x(i), x(i + 1));
        b.edge(y(i), y(i + 1));
        b.edge(x(i), y(i + 1));
        b.edge(y(i), x(i + 1));
    }
    b.edge("z", x(1));
    b.edge("z", y(1));
    for (int j = 1; j <= k; ++j) {
        auto s = std::to_string(j);
        b.edge("a" + s, "b" + s);
        b.edge("b" + s, "c" + s);
        b.edge("c" + s, "d" + s);
        b.edge(y(3 * j - 2), "b" + s);
        b.edge(y(3 * j - 1), "a" + s);
        b.edge(y(3 * j), "d" + s);
    }

    std::vector<std::string> landmarks{"z"};
    for (int j = 1; j <= k; ++j) {
        landmarks.push_back("a" + std::to_string(j));
        landmarks.push_back("c" + std::to_string(j));
    }
    LabeledGraph lg = b.finish(landmarks);

    VertexSet span(lg.graph.vertex_count());
    for (int i = 1; i <= 3 * k; ++i) {
        span.insert(lg.index_of(x(i)));
        span.insert(lg.index_of(y(i)));
    }
    return {std::move(lg), span};
}

LabeledGraph clique_subsets_graph(int k) {
    need(k >= 3 && k <= 4, "clique-of-subsets graph needs 3 <= k <= 4 (desk scale)");
    Builder b;
    std::vector<std::string> a_names, b_names;
    for (int i = 0; i < k; ++i) a_names.push_back("a" + std::to_string(i)), b.vertex(a_names.back());
    for (int mask = 0; mask < (1 << k); ++mask) {
        std::string nm = "b{";
        bool first = true;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) {
                if (!first) nm += ",";
                nm += std::to_string(i);
                first = false;
            }
        nm += "}";
        b_names.push_back(nm);
        b.vertex(nm);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) b.edge(a_names[i], a_names[j]);
    for (int i = 0; i < (1 << k); ++i)
        for (int j = i + 1; j < (1 << k); ++j) b.edge(b_names[i], b_names[j]);
    for (int mask = 0; mask < (1 << k); ++mask)
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) b.edge(b_names[mask], a_names[i]);
    return b.finish();
}

namespace {

Rational n_over_2(int n) { return Rational(n, 2); }

}  // namespace

Rational closed_form_edimf(const FamilySpec& spec) {
    switch (spec.tag) {
        case FamilySpec::Tag::path: {
            need(spec.params.size() == 1 && spec.params[0] >= 2, "path needs n >= 2");
            if (spec.params[0] < 3) throw UnknownFormError("no edge form for P_2");
            return Rational(1);
        }
        case FamilySpec::Tag::cycle: {
            need(spec.params.size() == 1 && spec.params[0] >= 3, "cycle needs n >= 3");
            int n = spec.params[0];
            return n % 2 ? Rational(n, n - 1) : Rational(n, n - 2);
        }
        case FamilySpec::Tag::complete: {
            need(spec.params.size() == 1 && spec.params[0] >= 1, "complete needs n >= 1");
            if (spec.params[0] < 3) throw UnknownFormError("no edge form below K_3");
            return n_over_2(spec.params[0]);
        }
        case FamilySpec::Tag::multipartite: {
            auto parts = sorted_parts(spec);
            int n = 0;
            for (int p : parts) n += p;
            if (n < 3) throw UnknownFormError("no edge form below order 3");
            bool star = parts.size() == 2 && parts[0] == 1;
            return star ? Rational(n - 1, 2) : n_over_2(n);
        }
        case FamilySpec::Tag::wheel: {
            need(spec.params.size() == 1 && spec.params[0] >= 4, "wheel needs n >= 4");
            int n = spec.params[0];
            return n <= 5 ? n_over_2(n) : Rational(n - 1, 2);
        }
        case FamilySpec::Tag::grid: {
            need(spec.params.size() == 2 && spec.params[0] >= 2 && spec.params[1] >= 2,
                 "grid needs s, t >= 2");
            return Rational(2);
        }
        case FamilySpec::Tag::petersen:
            return Rational(5, 2);
    }
    throw UnknownFormError("no stated closed form");
}

Rational closed_form_dimf(const FamilySpec& spec) {
    switch (spec.tag) {
        case FamilySpec::Tag::path:
            need(spec.params.size() == 1 && spec.params[0] >= 2, "path needs n >= 2");
            return Rational(1);
        case FamilySpec::Tag::cycle: {
            need(spec.params.size() == 1 && spec.params[0] >= 3, "cycle needs n >= 3");
            int n = spec.params[0];
            return n % 2 ? Rational(n, n - 1) : Rational(n, n - 2);
        }
        case FamilySpec::Tag::complete:
            need(spec.params.size() == 1 && spec.params[0] >= 2, "complete needs n >= 2");
            return n_over_2(spec.params[0]);
        case FamilySpec::Tag::multipartite: {
            auto parts = sorted_parts(spec);
            int n = 0, singletons = 0;
            for (int p : parts) {
                n += p;
                singletons += p == 1;
            }
            if (n < 2) throw UnknownFormError("no form below order 2");
            return singletons == 1 ? Rational(n - 1, 2) : n_over_2(n);
        }
        case FamilySpec::Tag::wheel: {
            need(spec.params.size() == 1 && spec.params[0] >= 4, "wheel needs n >= 4");
            int n = spec.params[0];
            if (n <= 5) return Rational(2);
            if (n == 6) return Rational(3, 2);
            return Rational(n - 1, 4);
        }
        case FamilySpec::Tag::grid:
            need(spec.params.size() == 2 && spec.params[0] >= 2 && spec.params[1] >= 2,
                 "grid needs s, t >= 2");
            return Rational(2);
        case FamilySpec::Tag::petersen:
            return Rational(5, 3);
    }
    throw UnknownFormError("no stated closed form");
}

LabeledGraph random_tree(int n, std::uint64_t seed) {
    need(n >= 2, "random tree needs n >= 2");
    Builder b;
    for (int i = 0; i < n; ++i) b.vertex(u(i));
    if (n == 2) {
        b.edge(u(0), u(1));
        return b.finish();
    }

    // decode a seeded random sequence the way a tree code decodes: uniform
    // sequences over [0, n)^(n-2) correspond bijectively to labeled trees
    SplitMix64 rng(seed);
    std::vector<int> seq(n - 2);
    for (int& s : seq) s = rng.below(n);

    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    for (int s : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        b.edge(u(leaf), u(s));
        --deg[leaf];
        if (--deg[s] == 1) leaves.insert(s);
    }
    int v1 = *leaves.begin(), v2 = *std::next(leaves.begin());
    b.edge(u(v1), u(v2));
    return b.finish();
}

LabeledGraph induced_subgraph(const LabeledGraph& lg, const VertexSet& keep) {
    std::vector<int> old_ids = keep.to_vector();
    std::vector<int> remap(lg.graph.vertex_count(), -1);
    LabeledGraph out;
    for (std::size_t i = 0; i < old_ids.size(); ++i) {
        remap[old_ids[i]] = static_cast<int>(i);
        out.names.push_back(lg.names[old_ids[i]]);
    }
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : lg.graph.edges())
        if (remap[e.u] >= 0 && remap[e.v] >= 0)
            edges.emplace_back(remap[e.u], remap[e.v]);
    out.graph = build_graph(static_cast<int>(old_ids.size()), edges);
    for (int lm : lg.landmarks)
        if (remap[lm] >= 0) out.landmarks.push_back(remap[lm]);
    return out;
}

bool isomorphic_small(const Graph& a, const Graph& b) {
    const int n = a.vertex_count();
    if (n > 12 || b.vertex_count() > 12)
        throw BadParameterError("isomorphic_small handles n <= 12 only");
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;

    std::vector<int> da, db;
    for (int v = 0; v < n; ++v) da.push_back(a.degree(v)), db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> place = [&](int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || b.degree(w) != a.degree(v)) continue;
            bool ok = true;
            for (int p = 0; p < v && ok; ++p)
                if (a.has_edge(p, v) != b.has_edge(map[p], w)) ok = false;
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (place(v + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    return place(0);
}

void write_name_map(std::ostream& out, const LabeledGraph& lg) {
    for (std::size_t v = 0; v < lg.names.size(); ++v)
        out << lg.names[v] << " " << v << "\n";
}

}  // namespace mdim
