#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/rational.hpp"
#include "mdim/vertex_set.hpp"

namespace mdim {

// Parameterized graph family. Fixed constructions (the figure graphs) have
// their own builders below and take no FamilySpec.
struct FamilySpec {
    enum class Tag { path, cycle, complete, multipartite, wheel, grid, petersen };

    Tag tag = Tag::path;
    std::vector<int> params;

    static FamilySpec path(int n) { return {Tag::path, {n}}; }
    static FamilySpec cycle(int n) { return {Tag::cycle, {n}}; }
    static FamilySpec complete(int n) { return {Tag::complete, {n}}; }
    static FamilySpec multipartite(std::vector<int> parts) {
        return {Tag::multipartite, std::move(parts)};
    }
    static FamilySpec wheel(int n) { return {Tag::wheel, {n}}; }
    static FamilySpec grid(int s, int t) { return {Tag::grid, {s, t}}; }
    static FamilySpec petersen() { return {Tag::petersen, {}}; }
};

// Graph plus a published name -> index map, and optionally the distinguished
// (ordered) landmark set that comes with a figure construction.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> names;  // by vertex index, unique
    std::vector<int> landmarks;      // ordered, possibly empty

    int index_of(const std::string& name) const;
    const std::string& name_of(int v) const { return names.at(v); }
};

// A construction together with the vertex subset spanning its distinguished
// substructure (H_m inside G_m, H_k inside G_k, K_{4,2} inside G).
struct SpannedGraph {
    LabeledGraph g;
    VertexSet span;
};

LabeledGraph generate(const FamilySpec& spec);

// Two non-isomorphic order-6 graphs sharing every edge code over the common
// landmark pair (v1, v3): a 6-cycle with chord v2v6 vs chord v2v5.
std::pair<LabeledGraph, LabeledGraph> same_codes_pair();

// 15-vertex non-planar graph whose edge dimension is 2, with landmark pair
// (x1, y4) separating all 18 edges.
LabeledGraph nonplanar_edim2();

// K_{4,2} (parts p1..p4 / q1,q2) wired to five outer vertices so that
// (a, b, c) edge-resolves the supergraph while K_{4,2} itself needs 4.
SpannedGraph subgraph_edim_pair();

// Clique H_m = K_{m(m+1)/2} on vertices w_{i,j}, plus m outer vertices u_i
// wired so {u_1..u_m} resolves G_m. Landmarks are the u's; the span is H_m.
SpannedGraph broadcast_pair(int m);

// Twin ladder: H_k on x_i/y_i (every {x_i, y_i} a twin class) extended by a
// cone vertex z and k pendant paths a_j-b_j-c_j-d_j. Landmarks are the edge
// resolving set {z, a_1, c_1, ..., a_k, c_k}; the span is H_k.
SpannedGraph twin_ladder_pair(int k);

// Cliques A (size k) and B (size 2^k, indexed by subsets of {0..k-1}) with
// b_S adjacent to a_i iff i is in S.
LabeledGraph clique_subsets_graph(int k);

// Closed-form fractional (edge) dimension where one is known for the family;
// throws UnknownFormError otherwise.
Rational closed_form_edimf(const FamilySpec& spec);
Rational closed_form_dimf(const FamilySpec& spec);

// Uniform random labeled tree decoded from a seeded random sequence; the
// same seed always yields the same tree.
LabeledGraph random_tree(int n, std::uint64_t seed);

// Subgraph induced by `keep`, re-indexed densely with names preserved.
LabeledGraph induced_subgraph(const LabeledGraph& lg, const VertexSet& keep);

// Exhaustive isomorphism test for small graphs (n <= 12).
bool isomorphic_small(const Graph& a, const Graph& b);

// Sidecar name-map format: one "<name> <index>" line per vertex.
void write_name_map(std::ostream& out, const LabeledGraph& lg);

// Deterministic splittable RNG used by the seeded generators.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform-enough draw from [0, bound); bound must be positive
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
};

}  // namespace mdim
