#include "mdim/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include "mdim/families.hpp"
#include "mdim/lp.hpp"
#include "mdim/resolving.hpp"
#include "mdim/structure.hpp"

namespace mdim {

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

int exhaustive_min_resolving(const Graph& g, const DistMatrix& d, PairMode mode) {
    const int n = g.vertex_count();

    // Distance codes computed straight from the matrix; no reuse of the
    // resolving or search modules.
    auto separates = [&](const std::vector<int>& subset) {
        if (mode == PairMode::vertex) {
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y) {
                    bool split = false;
                    for (int s : subset)
                        if (d.at(x, s) != d.at(y, s)) { split = true; break; }
                    if (!split) return false;
                }
        } else {
            const auto& edges = g.edges();
            for (std::size_t i = 0; i < edges.size(); ++i)
                for (std::size_t j = i + 1; j < edges.size(); ++j) {
                    bool split = false;
                    for (int s : subset) {
                        int di = std::min(d.at(edges[i].u, s), d.at(edges[i].v, s));
                        int dj = std::min(d.at(edges[j].u, s), d.at(edges[j].v, s));
                        if (di != dj) { split = true; break; }
                    }
                    if (!split) return false;
                }
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

namespace {

bool looks_like_path(const Graph& g) {
    if (!is_connected(g) || g.edge_count() != g.vertex_count() - 1) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

Graph random_connected_nonpath(std::uint64_t seed) {
    SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x5bd1e995);
    while (true) {
        int n = 4 + rng.below(7);            // 4..10
        int threshold = 30 + rng.below(41);  // edge probability in percent
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.below(100) < threshold) edges.emplace_back(i, j);
        Graph g = build_graph(n, edges);
        if (is_connected(g) && !looks_like_path(g)) return g;
    }
}

int tree_size_for_seed(int s) { return 4 + (s * 7) % 11; }  // 4..14

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> v;
        auto add = [&](const std::string& name, Graph g) {
            v.push_back({name, std::move(g)});
        };
        auto gen = [](const FamilySpec& s) { return generate(s).graph; };

        for (int n = 2; n <= 8; ++n) add("path-" + std::to_string(n), gen(FamilySpec::path(n)));
        for (int n = 3; n <= 12; ++n) add("cycle-" + std::to_string(n), gen(FamilySpec::cycle(n)));
        for (int n = 2; n <= 7; ++n) add("complete-" + std::to_string(n), gen(FamilySpec::complete(n)));
        for (int k = 3; k <= 7; ++k)
            add("star-1." + std::to_string(k), gen(FamilySpec::multipartite({1, k})));
        add("kpart-2.2", gen(FamilySpec::multipartite({2, 2})));
        add("kpart-2.3", gen(FamilySpec::multipartite({2, 3})));
        add("kpart-2.4", gen(FamilySpec::multipartite({2, 4})));
        add("kpart-3.3", gen(FamilySpec::multipartite({3, 3})));
        add("kpart-1.1.2", gen(FamilySpec::multipartite({1, 1, 2})));
        add("kpart-1.2.2", gen(FamilySpec::multipartite({1, 2, 2})));
        add("kpart-2.2.3", gen(FamilySpec::multipartite({2, 2, 3})));
        for (int n = 4; n <= 10; ++n) add("wheel-" + std::to_string(n), gen(FamilySpec::wheel(n)));
        for (auto [s, t] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}, {4, 4}})
            add("grid-" + std::to_string(s) + "x" + std::to_string(t), gen(FamilySpec::grid(s, t)));
        add("petersen", gen(FamilySpec::petersen()));

        auto [h1, h2] = same_codes_pair();
        add("samecodes-h1", h1.graph);
        add("samecodes-h2", h2.graph);
        add("nonplanar", nonplanar_edim2().graph);
        auto sub = subgraph_edim_pair();
        add("subpair-g", sub.g.graph);
        auto ladder = twin_ladder_pair(2);
        add("twinladder-g2", ladder.g.graph);
        add("twinladder-h2", induced_subgraph(ladder.g, ladder.span).graph);
        add("cliquesubsets-3", clique_subsets_graph(3).graph);
        auto bc = broadcast_pair(3);
        add("broadcast-g3", bc.g.graph);

        for (int s = 1; s <= 10; ++s)
            add("tree-" + std::to_string(s), random_tree(tree_size_for_seed(s), 1000 + s).graph);
        for (int s = 1; s <= 30; ++s)
            add("rand-" + std::to_string(s), random_connected_nonpath(s));
        return v;
    }();
    return entries;
}

namespace {

struct NamedCode {
    const char* a;
    const char* b;
    std::vector<int> code;
};

// the 18 edge codes of the non-planar construction over (x1, y4)
const std::vector<NamedCode> nonplanar_codes = {
    {"u1", "x1", {0, 2}}, {"x1", "x2", {0, 3}}, {"x2", "v1", {1, 4}},
    {"u1", "v2", {1, 1}}, {"u1", "v3", {1, 2}}, {"u2", "v1", {2, 4}},
    {"u2", "y1", {3, 3}}, {"y1", "y2", {4, 2}}, {"y2", "y3", {4, 1}},
    {"y3", "y4", {3, 0}}, {"y4", "v2", {2, 0}}, {"u2", "v3", {2, 3}},
    {"u3", "z1", {3, 2}}, {"z1", "z2", {4, 3}}, {"z2", "z3", {3, 4}},
    {"z3", "v1", {2, 5}}, {"u3", "v2", {2, 1}}, {"u3", "v3", {2, 2}},
};

// the 16 edge codes of the K_{4,2} supergraph over (a, b, c)
const std::vector<NamedCode> subpair_codes = {
    {"q1", "p1", {3, 2, 2}}, {"p1", "q2", {3, 2, 1}}, {"q1", "p2", {2, 2, 2}},
    {"p2", "q2", {2, 2, 1}}, {"q1", "p3", {3, 1, 2}}, {"p3", "q2", {3, 1, 1}},
    {"q1", "p4", {2, 1, 2}}, {"p4", "q2", {2, 1, 1}}, {"p3", "b", {3, 0, 2}},
    {"p4", "b", {2, 0, 2}},  {"p2", "t", {1, 3, 2}},  {"t", "a", {0, 3, 2}},
    {"a", "w", {0, 2, 1}},   {"w", "c", {1, 2, 0}},   {"w", "p4", {1, 1, 1}},
    {"c", "q2", {2, 2, 0}},
};

// the 7 shared edge codes of the same-codes pair over (v1, v3)
const std::set<std::vector<int>> samecodes_table = {
    {0, 1}, {0, 2}, {1, 1}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};

int count_matching_codes(const LabeledGraph& lg, const std::vector<NamedCode>& table) {
    DistMatrix d = all_pairs_distances(lg.graph);
    int matched = 0;
    for (const NamedCode& nc : table) {
        EdgeId e = lg.graph.edge_id(lg.index_of(nc.a), lg.index_of(nc.b));
        if (code_edge(lg.graph, d, lg.landmarks, e) == nc.code) ++matched;
    }
    return matched;
}

struct Registry {
    std::string filter;
    std::vector<CheckResult> results;

    void add(const std::string& name, const std::string& source,
             const std::string& expected,
             const std::function<std::pair<std::string, bool>()>& body) {
        if (!filter.empty() && name.find(filter) == std::string::npos) return;
        CheckResult r;
        r.name = name;
        r.source = source;
        r.expected = expected;
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto [got, pass] = body();
            r.got = got;
            r.pass = pass;
        } catch (const std::exception& e) {
            r.got = std::string("exception(") + e.what() + ")";
            r.pass = false;
        }
        r.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
        results.push_back(std::move(r));
    }

    // exact-value check: pass iff got == expected textually
    void eq(const std::string& name, const std::string& source,
            const std::string& expected, const std::function<std::string()>& got) {
        add(name, source, expected, [&]() -> std::pair<std::string, bool> {
            std::string g = got();
            return {g, g == expected};
        });
    }
};

std::string fmt_over(int num, int count) {
    return std::to_string(num) + "/" + std::to_string(count);
}

void register_checks(Registry& reg) {
    using Tag = FamilySpec;

    // 1. cycles
    for (int n : {3, 5, 7, 9, 11, 4, 6, 8, 10, 12}) {
        auto spec = Tag::cycle(n);
        reg.eq("c01.cycle.edimf.n" + std::to_string(n), "closed-form",
               closed_form_edimf(spec).str(),
               [spec] { return edim_f(generate(spec).graph).value.str(); });
    }

    // 2. Petersen
    reg.eq("c02.petersen.edimf", "closed-form", "5/2",
           [] { return edim_f(generate(Tag::petersen()).graph).value.str(); });
    reg.eq("c02.petersen.dimf", "closed-form", "5/3",
           [] { return dim_f(generate(Tag::petersen()).graph).value.str(); });

    // 3. wheels
    for (int n = 4; n <= 10; ++n) {
        auto spec = Tag::wheel(n);
        reg.eq("c03.wheel.edimf.n" + std::to_string(n), "closed-form",
               closed_form_edimf(spec).str(),
               [spec] { return edim_f(generate(spec).graph).value.str(); });
    }
    reg.eq("c03.wheel.dimf.n6", "closed-form", "3/2",
           [] { return dim_f(generate(Tag::wheel(6)).graph).value.str(); });

    // 4. complete multipartite
    for (int n = 4; n <= 8; ++n) {
        reg.eq("c04.star.edimf.n" + std::to_string(n), "closed-form",
               Rational(n - 1, 2).str(), [n] {
                   return edim_f(generate(Tag::multipartite({1, n - 1})).graph).value.str();
               });
    }
    const std::vector<std::pair<std::string, std::vector<int>>> halves = {
        {"k3", {1, 1, 1}}, {"k4", {1, 1, 1, 1}}, {"k23", {2, 3}},
        {"k122", {1, 2, 2}}, {"k223", {2, 2, 3}}};
    for (const auto& [label, parts] : halves) {
        int n = 0;
        for (int p : parts) n += p;
        reg.eq("c04.npart.edimf." + label, "closed-form", Rational(n, 2).str(),
               [parts] { return edim_f(generate(Tag::multipartite(parts)).graph).value.str(); });
    }
    reg.eq("c04.gap.k122", "closed-form", "5/2>2", [] {
        Graph g = generate(Tag::multipartite({1, 2, 2})).graph;
        Rational ef = edim_f(g).value, df = dim_f(g).value;
        return ef.str() + (ef > df ? ">" : "<=") + df.str();
    });

    // 5. grids
    for (auto [s, t] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}, {4, 4}}) {
        std::string st = std::to_string(s) + "x" + std::to_string(t);
        reg.eq("c05.grid.edimf." + st, "closed-form", "2", [s = s, t = t] {
            return edim_f(generate(Tag::grid(s, t)).graph).value.str();
        });
        reg.eq("c05.grid.edim." + st, "closed-form", "2", [s = s, t = t] {
            return std::to_string(edim(generate(Tag::grid(s, t)).graph).value);
        });
    }

    // 6. trees: LP value matches the leaf/major-vertex formula and dim_f
    reg.add("c06.trees.formula", "closed-form", fmt_over(50, 50), [] {
        int agree = 0;
        std::string first_bad;
        for (int s = 1; s <= 50; ++s) {
            Graph t = random_tree(tree_size_for_seed(s), 2000 + s).graph;
            Rational want = edimf_tree_formula(tree_anatomy(t));
            Rational ef = edim_f(t).value, df = dim_f(t).value;
            if (ef == want && df == ef) ++agree;
            else if (first_bad.empty()) first_bad = "seed" + std::to_string(s);
        }
        std::string got = fmt_over(agree, 50) + (first_bad.empty() ? "" : ";" + first_bad);
        return std::pair{got, agree == 50};
    });

    // 7. paths and only paths hit the lower bound
    for (int n = 3; n <= 8; ++n) {
        reg.eq("c07.path.edimf.n" + std::to_string(n), "closed-form", "1",
               [n] { return edim_f(generate(Tag::path(n)).graph).value.str(); });
    }
    reg.add("c07.nonpath.edimf", "bound", fmt_over(30, 30), [] {
        int above = 0;
        for (int s = 1; s <= 30; ++s)
            if (edim_f(random_connected_nonpath(s)).value > Rational(1)) ++above;
        return std::pair{fmt_over(above, 30), above == 30};
    });

    // 8. figure constructions
    reg.eq("c08.nonplanar.codes", "fixed-table", "18/18", [] {
        return fmt_over(count_matching_codes(nonplanar_edim2(), nonplanar_codes), 18);
    });
    reg.eq("c08.nonplanar.edim", "fixed-table", "2",
           [] { return std::to_string(edim(nonplanar_edim2().graph).value); });
    reg.add("c08.samecodes.multiset", "fixed-table", "identical-7", [] {
        auto [h1, h2] = same_codes_pair();
        auto codes = [](const LabeledGraph& lg) {
            DistMatrix d = all_pairs_distances(lg.graph);
            auto groups = edge_code_multiset(lg.graph, d, lg.landmarks);
            std::set<std::vector<int>> keys;
            bool all_single = true;
            for (const auto& [code, ids] : groups) {
                keys.insert(code);
                all_single = all_single && ids.size() == 1;
            }
            return std::pair{keys, all_single};
        };
        auto [k1, s1] = codes(h1);
        auto [k2, s2] = codes(h2);
        bool ok = s1 && s2 && k1 == k2 && k1 == samecodes_table;
        return std::pair{std::string(ok ? "identical-7" : "mismatch"), ok};
    });
    reg.eq("c08.samecodes.noniso", "enumeration", "nonisomorphic", [] {
        auto [h1, h2] = same_codes_pair();
        return isomorphic_small(h1.graph, h2.graph) ? "isomorphic" : "nonisomorphic";
    });
    reg.eq("c08.subpair.codes", "fixed-table", "16/16", [] {
        auto sub = subgraph_edim_pair();
        return fmt_over(count_matching_codes(sub.g, subpair_codes), 16);
    });
    reg.eq("c08.subpair.witness", "fixed-table", "resolves", [] {
        auto sub = subgraph_edim_pair();
        DistMatrix d = all_pairs_distances(sub.g.graph);
        VertexSet s(sub.g.graph.vertex_count());
        for (int v : sub.g.landmarks) s.insert(v);
        return is_edge_resolving_set(sub.g.graph, d, s).ok ? "resolves" : "fails";
    });
    reg.add("c08.subpair.edim", "enumeration", "4>g", [] {
        auto sub = subgraph_edim_pair();
        int k42 = edim(generate(Tag::multipartite({2, 4})).graph).value;
        int sup = edim(sub.g.graph).value;
        bool ok = k42 == 4 && sup < 4;
        return std::pair{std::to_string(k42) + ">" + std::to_string(sup), ok};
    });

    // 9. clique-of-subsets, k = 3
    reg.eq("c09.cliquesubsets.dimf", "closed-form", "3",
           [] { return dim_f(clique_subsets_graph(3).graph).value.str(); });
    reg.eq("c09.cliquesubsets.edimf", "closed-form", "11/2",
           [] { return edim_f(clique_subsets_graph(3).graph).value.str(); });

    // 10. twin ladder, k = 2
    reg.eq("c10.twinladder.edim.h2", "closed-form", "6", [] {
        auto ladder = twin_ladder_pair(2);
        return std::to_string(edim(induced_subgraph(ladder.g, ladder.span).graph).value);
    });
    reg.eq("c10.twinladder.edimf.h2", "closed-form", "6", [] {
        auto ladder = twin_ladder_pair(2);
        return edim_f(induced_subgraph(ladder.g, ladder.span).graph).value.str();
    });
    reg.eq("c10.twinladder.witness.g2", "fixed-table", "resolves", [] {
        auto ladder = twin_ladder_pair(2);
        DistMatrix d = all_pairs_distances(ladder.g.graph);
        VertexSet s(ladder.g.graph.vertex_count());
        for (int v : ladder.g.landmarks) s.insert(v);  // {z, a1, c1, a2, c2}
        return is_edge_resolving_set(ladder.g.graph, d, s).ok ? "resolves" : "fails";
    });
    reg.add("c10.twinladder.edimf.g2", "bound", "<=5", [] {
        auto ladder = twin_ladder_pair(2);
        Rational v = edim_f(ladder.g.graph).value;
        return std::pair{v.str(), v <= Rational(5)};
    });

    // 11. the n/2 characterizations agree with the LP on the corpus
    reg.add("c11.characterization", "enumeration", "all-agree", [] {
        int eligible = 0, agree = 0;
        std::string first_bad;
        for (const CorpusEntry& entry : corpus()) {
            int n = entry.graph.vertex_count();
            if (n < 2 || n > 12) continue;
            ++eligible;
            DistMatrix d = all_pairs_distances(entry.graph);
            Rational df = dim_f(entry.graph).value;
            bool half = df == Rational(n, 2);
            bool twins = is_twin_expansion_family(entry.graph);
            bool bij = has_half_dim_bijection(entry.graph, d).ok;
            bool edge_half = !half || n < 3 || edim_f(entry.graph).value == Rational(n, 2);
            if (half == twins && twins == bij && edge_half) ++agree;
            else if (first_bad.empty()) first_bad = entry.name;
        }
        bool ok = agree == eligible;
        std::string got = ok ? "all-agree" : fmt_over(agree, eligible) + ";" + first_bad;
        return std::pair{got, ok};
    });

    // 12. global sandwich and exhaustive agreement
    reg.add("c12.sandwich", "bound", "all-hold", [] {
        int eligible = 0, hold = 0;
        std::string first_bad;
        for (const CorpusEntry& entry : corpus()) {
            int n = entry.graph.vertex_count();
            if (n < 3) continue;
            ++eligible;
            Rational ef = edim_f(entry.graph).value;
            Rational df = dim_f(entry.graph).value;
            int e_int = edim(entry.graph).value;
            int d_int = dim(entry.graph).value;
            bool ok = Rational(1) <= ef && ef <= Rational(n, 2) &&
                      ef <= Rational(e_int) && df <= Rational(d_int);
            if (ok) ++hold;
            else if (first_bad.empty()) first_bad = entry.name;
        }
        bool ok = hold == eligible;
        std::string got = ok ? "all-hold" : fmt_over(hold, eligible) + ";" + first_bad;
        return std::pair{got, ok};
    });
    reg.add("c12.exhaustive", "enumeration", "all-agree", [] {
        int eligible = 0, agree = 0;
        std::string first_bad;
        for (const CorpusEntry& entry : corpus()) {
            int n = entry.graph.vertex_count();
            if (n < 3 || n > 10) continue;
            ++eligible;
            DistMatrix d = all_pairs_distances(entry.graph);
            bool ok = edim(entry.graph).value ==
                          exhaustive_min_resolving(entry.graph, d, PairMode::edge) &&
                      dim(entry.graph).value ==
                          exhaustive_min_resolving(entry.graph, d, PairMode::vertex);
            if (ok) ++agree;
            else if (first_bad.empty()) first_bad = entry.name;
        }
        bool ok = agree == eligible;
        std::string got = ok ? "all-agree" : fmt_over(agree, eligible) + ";" + first_bad;
        return std::pair{got, ok};
    });
    for (int n : {6, 7}) {
        reg.eq("c12.gap.k" + std::to_string(n), "closed-form", Rational(n - 2, 2).str(), [n] {
            Graph g = generate(Tag::complete(n)).graph;
            return (Rational(edim(g).value) - edim_f(g).value).str();
        });
    }
}

}  // namespace

VerifyReport run_verify(const std::string& filter) {
    Registry reg;
    reg.filter = filter;
    register_checks(reg);
    std::sort(reg.results.begin(), reg.results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return {std::move(reg.results)};
}

void print_report(std::ostream& out, const VerifyReport& report) {
    int passed = 0;
    for (const CheckResult& c : report.checks) {
        out << (c.pass ? "PASS" : "FAIL") << " " << c.name << " expected=" << c.expected
            << " got=" << c.got << " source=" << c.source << " elapsed_ms=";
        std::ostringstream ms;
        ms.setf(std::ios::fixed);
        ms.precision(1);
        ms << c.elapsed_ms;
        out << ms.str() << "\n";
        passed += c.pass;
    }
    out << (report.all_pass() ? "OK" : "FAILED") << " " << passed << "/"
        << report.checks.size() << " checks passed\n";
}

}  // namespace mdim
