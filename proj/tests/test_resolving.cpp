#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mdim/families.hpp"
#include "mdim/lp.hpp"
#include "mdim/resolving.hpp"
#include "mdim/verify.hpp"

using namespace mdim;

namespace {

VertexSet landmarks_of(const LabeledGraph& lg) {
    VertexSet s(lg.graph.vertex_count());
    for (int v : lg.landmarks) s.insert(v);
    return s;
}

}  // namespace

TEST_CASE("r_vertex basics") {
    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    DistMatrix d = all_pairs_distances(p3);
    CHECK(r_vertex(d, 0, 2) == VertexSet::of(3, {0, 2}));
    CHECK_THROWS_AS(r_vertex(d, 1, 1), EqualVerticesError);

    Graph k4 = generate(FamilySpec::complete(4)).graph;
    DistMatrix dk = all_pairs_distances(k4);
    for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y)
            CHECK(r_vertex(dk, x, y) == VertexSet::of(4, {x, y}));

    Graph c5 = generate(FamilySpec::cycle(5)).graph;
    DistMatrix dc = all_pairs_distances(c5);
    CHECK(r_vertex(dc, 0, 1) == VertexSet::of(5, {0, 1, 2, 4}));
    CHECK(r_vertex(dc, 0, 1).count() == 4);
}

TEST_CASE("r_edge: twins, Petersen, even cycle") {
    // adjacent twins x=0, y=1 with common neighbor z=2 in K4
    Graph k4 = generate(FamilySpec::complete(4)).graph;
    DistMatrix dk = all_pairs_distances(k4);
    CHECK(r_edge(k4, dk, k4.edge_id(2, 0), k4.edge_id(2, 1)) == VertexSet::of(4, {0, 1}));
    CHECK_THROWS_AS(r_edge(k4, dk, 0, 0), EqualEdgesError);

    LabeledGraph pet = generate(FamilySpec::petersen());
    DistMatrix dp = all_pairs_distances(pet.graph);
    EdgeId u0u1 = pet.graph.edge_id(pet.index_of("u0"), pet.index_of("u1"));
    EdgeId u1u2 = pet.graph.edge_id(pet.index_of("u1"), pet.index_of("u2"));
    CHECK(r_edge(pet.graph, dp, u0u1, u1u2).count() == 6);

    Graph c6 = generate(FamilySpec::cycle(6)).graph;
    DistMatrix dc = all_pairs_distances(c6);
    VertexSet r = r_edge(c6, dc, c6.edge_id(0, 1), c6.edge_id(1, 2));
    CHECK(r == VertexSet::of(6, {0, 2, 3, 5}));  // everything but u1 and u4
}

TEST_CASE("code_edge reproduces figure entries") {
    LabeledGraph fig = nonplanar_edim2();
    DistMatrix d = all_pairs_distances(fig.graph);
    EdgeId y3y4 = fig.graph.edge_id(fig.index_of("y3"), fig.index_of("y4"));
    CHECK(code_edge(fig.graph, d, fig.landmarks, y3y4) == CodeVector{3, 0});

    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    DistMatrix dp = all_pairs_distances(p3);
    CHECK(code_edge(p3, dp, {0}, p3.edge_id(0, 1)) == CodeVector{0});
    CHECK_THROWS_AS(code_edge(p3, dp, {}, 0), BadParameterError);
    CHECK_THROWS_AS(code_edge(p3, dp, {0, 0}, 0), BadParameterError);

    auto sub = subgraph_edim_pair();
    DistMatrix ds = all_pairs_distances(sub.g.graph);
    EdgeId wp4 = sub.g.graph.edge_id(sub.g.index_of("w"), sub.g.index_of("p4"));
    CHECK(code_edge(sub.g.graph, ds, sub.g.landmarks, wp4) == CodeVector{1, 1, 1});
}

TEST_CASE("edge resolving set checks with deterministic witnesses") {
    LabeledGraph fig = nonplanar_edim2();
    DistMatrix d = all_pairs_distances(fig.graph);
    CHECK(is_edge_resolving_set(fig.graph, d, landmarks_of(fig)).ok);

    for (int n = 3; n <= 10; ++n) {
        Graph p = generate(FamilySpec::path(n)).graph;
        DistMatrix dp = all_pairs_distances(p);
        CHECK(is_edge_resolving_set(p, dp, VertexSet::of(n, {0})).ok);
    }

    Graph k4 = generate(FamilySpec::complete(4)).graph;
    DistMatrix dk = all_pairs_distances(k4);
    Verdict v = is_edge_resolving_set(k4, dk, VertexSet::of(4, {0}));
    CHECK(!v.ok);
    CHECK(v.counterexample == std::pair<int, int>{0, 1});  // first tying edge pair
}

TEST_CASE("vertex resolving set checks") {
    for (int m : {3, 4}) {
        auto bc = broadcast_pair(m);
        DistMatrix d = all_pairs_distances(bc.g.graph);
        CHECK(is_resolving_set(bc.g.graph, d, landmarks_of(bc.g)).ok);
    }
    Graph p5 = generate(FamilySpec::path(5)).graph;
    DistMatrix dp = all_pairs_distances(p5);
    CHECK(is_resolving_set(p5, dp, VertexSet::of(5, {0})).ok);

    Graph c4 = generate(FamilySpec::cycle(4)).graph;
    DistMatrix dc = all_pairs_distances(c4);
    Verdict v = is_resolving_set(c4, dc, VertexSet::of(4, {0}));
    CHECK(!v.ok);
    CHECK(v.counterexample == std::pair<int, int>{1, 3});  // antipodal tie
}

TEST_CASE("edge resolving functions") {
    Graph p6 = generate(FamilySpec::path(6)).graph;
    DistMatrix d = all_pairs_distances(p6);
    Weighting tips = Weighting::zero(6);
    tips.set(0, Rational(1, 2));
    tips.set(5, Rational(1, 2));
    CHECK(is_edge_resolving_function(p6, d, tips).ok);

    for (const auto& entry : corpus()) {
        if (entry.graph.vertex_count() < 3 || entry.graph.vertex_count() > 9) continue;
        DistMatrix dd = all_pairs_distances(entry.graph);
        Weighting half = Weighting::uniform(entry.graph.vertex_count(), Rational(1, 2));
        INFO(entry.name);
        CHECK(is_edge_resolving_function(entry.graph, dd, half).ok);
    }

    Graph c4 = generate(FamilySpec::cycle(4)).graph;
    DistMatrix dc = all_pairs_distances(c4);
    Verdict v = is_edge_resolving_function(c4, dc, Weighting::zero(4));
    CHECK(!v.ok);
    CHECK(v.counterexample == std::pair<int, int>{0, 1});
}

TEST_CASE("edge code multiset groups") {
    auto [h1, h2] = same_codes_pair();
    DistMatrix d1 = all_pairs_distances(h1.graph);
    DistMatrix d2 = all_pairs_distances(h2.graph);
    auto g1 = edge_code_multiset(h1.graph, d1, h1.landmarks);
    auto g2 = edge_code_multiset(h2.graph, d2, h2.landmarks);
    CHECK(g1.size() == 7);
    CHECK(g2.size() == 7);
    for (const auto& [code, ids] : g1) {
        CHECK(ids.size() == 1);
        CHECK(g2.count(code) == 1);
    }

    Graph k3 = generate(FamilySpec::complete(3)).graph;
    DistMatrix dk = all_pairs_distances(k3);
    auto gk = edge_code_multiset(k3, dk, {0});
    bool has_big_group = false;
    for (const auto& [code, ids] : gk) has_big_group |= ids.size() >= 2;
    CHECK(has_big_group);

    LabeledGraph fig = nonplanar_edim2();
    DistMatrix df = all_pairs_distances(fig.graph);
    auto gf = edge_code_multiset(fig.graph, df, fig.landmarks);
    CHECK(gf.size() == 18);
    for (const auto& [code, ids] : gf) CHECK(ids.size() == 1);
}

TEST_CASE("R-set properties across the corpus") {
    for (const auto& entry : corpus()) {
        const Graph& g = entry.graph;
        if (g.vertex_count() > 10 || g.edge_count() > 25) continue;
        DistMatrix d = all_pairs_distances(g);
        INFO(entry.name);

        for (int x = 0; x < g.vertex_count(); ++x)
            for (int y = x + 1; y < g.vertex_count(); ++y) {
                VertexSet r = r_vertex(d, x, y);
                CHECK(r.contains(x));
                CHECK(r.contains(y));
            }

        for (EdgeId e1 = 0; e1 < g.edge_count(); ++e1)
            for (EdgeId e2 = e1 + 1; e2 < g.edge_count(); ++e2) {
                VertexSet r = r_edge(g, d, e1, e2);
                CHECK(r.count() >= 2);
                // r contains the symmetric difference of the endpoint sets
                Edge a = g.edge(e1), b = g.edge(e2);
                for (int v : {a.u, a.v, b.u, b.v}) {
                    bool in_a = v == a.u || v == a.v;
                    bool in_b = v == b.u || v == b.v;
                    if (in_a != in_b) CHECK(r.contains(v));
                }
            }
    }
}

TEST_CASE("set check and code multiset agree definitionally") {
    for (const auto& entry : corpus()) {
        const Graph& g = entry.graph;
        if (g.vertex_count() < 3 || g.vertex_count() > 9) continue;
        DistMatrix d = all_pairs_distances(g);
        std::vector<std::vector<int>> candidates = {{0}, {0, 1}};
        std::vector<int> all(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
        candidates.push_back(all);
        for (const auto& lm : candidates) {
            VertexSet s(g.vertex_count());
            for (int v : lm) s.insert(v);
            bool by_set = is_edge_resolving_set(g, d, s).ok;
            bool by_codes = true;
            for (const auto& [code, ids] : edge_code_multiset(g, d, lm))
                by_codes &= ids.size() == 1;
            INFO(entry.name);
            CHECK(by_set == by_codes);
        }
    }
}

TEST_CASE("indicator weighting of a verified set is a resolving function") {
    LabeledGraph fig = nonplanar_edim2();
    DistMatrix d = all_pairs_distances(fig.graph);
    Weighting w = Weighting::zero(fig.graph.vertex_count());
    for (int v : fig.landmarks) w.set(v, Rational(1));
    CHECK(is_edge_resolving_function(fig.graph, d, w).ok);

    auto sub = subgraph_edim_pair();
    DistMatrix ds = all_pairs_distances(sub.g.graph);
    Weighting ws = Weighting::zero(sub.g.graph.vertex_count());
    for (int v : sub.g.landmarks) ws.set(v, Rational(1));
    CHECK(is_edge_resolving_function(sub.g.graph, ds, ws).ok);
}
