#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/vertex_set.hpp"
#include "mdim/weighting.hpp"

namespace mdim {

// Distance vector of an edge (or vertex) to an ordered landmark set.
using CodeVector = std::vector<int>;

// Vertices distinguishing the vertex pair {x, y}; always contains x and y.
VertexSet r_vertex(const DistMatrix& d, int x, int y);

// Vertices distinguishing the edge pair {e1, e2}; always has size >= 2.
VertexSet r_edge(const Graph& g, const DistMatrix& d, EdgeId e1, EdgeId e2);

CodeVector code_edge(const Graph& g, const DistMatrix& d,
                     const std::vector<int>& landmarks, EdgeId e);

// Outcome of a resolving-set / resolving-function check. On failure,
// `counterexample` is the lexicographically first violating pair (vertex ids
// for the vertex variants, edge ids for the edge variants).
struct Verdict {
    bool ok = false;
    std::pair<int, int> counterexample{-1, -1};
    explicit operator bool() const { return ok; }
};

Verdict is_resolving_set(const Graph& g, const DistMatrix& d, const VertexSet& s);
Verdict is_edge_resolving_set(const Graph& g, const DistMatrix& d, const VertexSet& s);

Verdict is_resolving_function(const Graph& g, const DistMatrix& d, const Weighting& w);
Verdict is_edge_resolving_function(const Graph& g, const DistMatrix& d, const Weighting& w);

// Groups edges by their code vector; the landmark set is edge resolving iff
// every group is a singleton.
std::map<CodeVector, std::vector<EdgeId>> edge_code_multiset(
    const Graph& g, const DistMatrix& d, const std::vector<int>& landmarks);

}  // namespace mdim
