#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "mdim/families.hpp"
#include "mdim/lp.hpp"
#include "mdim/resolving.hpp"
#include "mdim/search.hpp"
#include "mdim/verify.hpp"

using namespace mdim;

TEST_CASE("reduce_constraints keeps the minimal antichain") {
    VertexSet a = VertexSet::of(4, {0, 1});
    VertexSet ab = VertexSet::of(4, {0, 1, 2});
    auto reduced = reduce_constraints({ab, a});
    REQUIRE(reduced.size() == 1);
    CHECK(reduced[0] == a);

    CHECK_THROWS_AS(reduce_constraints({VertexSet(3)}), EmptyRowError);

    // C5 vertex pairs: five distinct rows, each of size 4
    Graph c5 = generate(FamilySpec::cycle(5)).graph;
    DistMatrix d = all_pairs_distances(c5);
    auto rows = reduce_constraints(vertex_pair_rsets(c5, d));
    CHECK(rows.size() == 5);
    for (const auto& r : rows) CHECK(r.count() == 4);

    // Petersen edge pairs: all retained rows have size 4 or 6
    Graph pet = generate(FamilySpec::petersen()).graph;
    DistMatrix dp = all_pairs_distances(pet);
    auto prows = reduce_constraints(edge_pair_rsets(pet, d = all_pairs_distances(pet)));
    CHECK(!prows.empty());
    for (const auto& r : prows) CHECK((r.count() == 4 || r.count() == 6));
}

TEST_CASE("solve_covering_lp on tiny instances") {
    CoveringLP single{2, {VertexSet::of(2, {0, 1})}};
    LpSolution s = solve_covering_lp(single);
    CHECK(s.optimum == Rational(1));
    CHECK(s.weights.total() == Rational(1));

    CoveringLP empty{3, {}};
    CHECK(solve_covering_lp(empty).optimum == Rational(0));

    CHECK_THROWS_AS(solve_covering_lp(CoveringLP{2, {VertexSet(2)}}), EmptyRowError);
}

TEST_CASE("cycle fractional edge dimension") {
    CHECK(edim_f(generate(FamilySpec::cycle(5)).graph).value == Rational(5, 4));
    CHECK(edim_f(generate(FamilySpec::cycle(6)).graph).value == Rational(3, 2));
}

TEST_CASE("dim_f values") {
    CHECK(dim_f(generate(FamilySpec::petersen()).graph).value == Rational(5, 3));
    CHECK(dim_f(generate(FamilySpec::wheel(6)).graph).value == Rational(3, 2));
    CHECK(dim_f(clique_subsets_graph(3).graph).value == Rational(3));
}

TEST_CASE("edim_f values") {
    CHECK(edim_f(generate(FamilySpec::petersen()).graph).value == Rational(5, 2));
    CHECK(edim_f(generate(FamilySpec::wheel(5)).graph).value == Rational(5, 2));
    for (int n = 3; n <= 8; ++n)
        CHECK(edim_f(generate(FamilySpec::path(n)).graph).value == Rational(1));
    CHECK(edim_f(clique_subsets_graph(3).graph).value == Rational(11, 2));
}

TEST_CASE("returned weightings are feasible certificates") {
    for (const auto& entry : corpus()) {
        const Graph& g = entry.graph;
        if (g.vertex_count() < 3 || g.vertex_count() > 12) continue;
        DistMatrix d = all_pairs_distances(g);
        INFO(entry.name);
        FracResult fe = edim_f(g);
        CHECK(is_edge_resolving_function(g, d, fe.weights).ok);
        CHECK(fe.weights.total() == fe.value);
        FracResult fv = dim_f(g);
        CHECK(is_resolving_function(g, d, fv.weights).ok);
        CHECK(fv.weights.total() == fv.value);
    }
}

TEST_CASE("bounds 1 <= edim_f <= n/2 across the corpus") {
    for (const auto& entry : corpus()) {
        const Graph& g = entry.graph;
        if (g.vertex_count() < 3) continue;
        INFO(entry.name);
        Rational ef = edim_f(g).value;
        CHECK(Rational(1) <= ef);
        CHECK(ef <= Rational(g.vertex_count(), 2));
    }
}

TEST_CASE("reduction does not change the optimum") {
    // feeding the raw pair rows (duplicates and supersets included) through
    // the simplex must land on the same value as the reduced antichain
    for (const auto& name : {"wheel-5", "cycle-7", "kpart-1.2.2", "grid-2x3",
                             "samecodes-h1", "tree-3"}) {
        auto it = std::find_if(corpus().begin(), corpus().end(),
                               [&](const CorpusEntry& e) { return e.name == name; });
        REQUIRE(it != corpus().end());
        DistMatrix d = all_pairs_distances(it->graph);
        auto raw = edge_pair_rsets(it->graph, d);
        CoveringLP raw_lp{it->graph.vertex_count(), raw};
        CoveringLP red_lp{it->graph.vertex_count(), reduce_constraints(raw)};
        INFO(name);
        CHECK(solve_covering_lp(raw_lp).optimum == solve_covering_lp(red_lp).optimum);
    }
}

TEST_CASE("row order does not change the optimum") {
    for (const auto& name : {"petersen", "grid-3x4", "wheel-7", "cliquesubsets-3"}) {
        auto it = std::find_if(corpus().begin(), corpus().end(),
                               [&](const CorpusEntry& e) { return e.name == name; });
        REQUIRE(it != corpus().end());
        DistMatrix d = all_pairs_distances(it->graph);
        CoveringLP lp = build_covering_lp(it->graph, d, PairMode::edge);
        Rational base = solve_covering_lp(lp).optimum;

        // deterministic shuffles: rotate and reverse
        CoveringLP rotated = lp;
        std::rotate(rotated.rows.begin(), rotated.rows.begin() + rotated.rows.size() / 2,
                    rotated.rows.end());
        CoveringLP reversed = lp;
        std::reverse(reversed.rows.begin(), reversed.rows.end());
        CHECK(solve_covering_lp(rotated).optimum == base);
        CHECK(solve_covering_lp(reversed).optimum == base);
    }
}

TEST_CASE("dim_f = n/2 forces edim_f = n/2") {
    for (const auto& entry : corpus()) {
        const Graph& g = entry.graph;
        if (g.vertex_count() < 3 || g.vertex_count() > 12) continue;
        if (dim_f(g).value == Rational(g.vertex_count(), 2)) {
            INFO(entry.name);
            CHECK(edim_f(g).value == Rational(g.vertex_count(), 2));
        }
    }
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(dim_f(build_graph(1, {})), TooSmallError);
    CHECK_THROWS_AS(edim_f(build_graph(2, {{0, 1}})), TooSmallError);
    CHECK_THROWS_AS(edim_f(build_graph(4, {{0, 1}, {2, 3}})), DisconnectedError);
}

TEST_CASE("desk-scale instances stay exact") {
    CHECK(edim_f(generate(FamilySpec::grid(5, 5)).graph).value == Rational(2));
    CHECK(edim_f(generate(FamilySpec::cycle(20)).graph).value == Rational(10, 9));
    CHECK(edim_f(generate(FamilySpec::cycle(15)).graph).value == Rational(15, 14));
    CHECK(edim_f(generate(FamilySpec::wheel(16)).graph).value == Rational(15, 2));
}

TEST_CASE("values are invariant under relabeling") {
    // push each graph through a fixed permutation and re-solve
    for (const auto& name : {"petersen", "wheel-7", "kpart-2.2.3", "tree-4"}) {
        auto it = std::find_if(corpus().begin(), corpus().end(),
                               [&](const CorpusEntry& e) { return e.name == name; });
        REQUIRE(it != corpus().end());
        const Graph& g = it->graph;
        const int n = g.vertex_count();
        std::vector<int> perm(n);
        for (int v = 0; v < n; ++v) perm[v] = (n - 1 - v + 3) % n;  // reversal then rotation
        std::vector<std::pair<int, int>> edges;
        for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
        Graph h = build_graph(n, edges);
        INFO(name);
        CHECK(edim_f(h).value == edim_f(g).value);
        CHECK(dim_f(h).value == dim_f(g).value);
        CHECK(edim(h).value == edim(g).value);
    }
}

TEST_CASE("lp dump lists one row per line") {
    CoveringLP lp{4, {VertexSet::of(4, {0, 2}), VertexSet::of(4, {1, 2, 3})}};
    std::ostringstream out;
    dump_lp(out, lp);
    CHECK(out.str() == "0 2\n1 2 3\n");
}
