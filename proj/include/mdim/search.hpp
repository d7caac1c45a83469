#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/vertex_set.hpp"

namespace mdim {

// Set-cover view of the resolving-set problem: the universe is the list of
// vertex (or edge) pairs, and the column of vertex v is the set of pair ids
// whose R-set contains v. Pair ids follow lexicographic (i, j), i < j, order.
struct CoverInstance {
    PairMode mode = PairMode::vertex;
    std::vector<std::pair<int, int>> pairs;
    std::vector<VertexSet> columns;  // one per vertex, bitset over pair ids

    // retained so minimum_cover can verify its witness
    Graph graph;
    DistMatrix dist;
};

CoverInstance build_cover_instance(const Graph& g, const DistMatrix& d, PairMode mode);

struct CoverOptions {
    std::optional<int> upper_bound_hint;  // trusted bound from the caller
    long node_budget = 10'000'000;
};

struct CoverResult {
    int size = 0;
    VertexSet witness;
    // false when the node budget ran out (size is then only a best-known
    // upper bound) or when an upper_bound_hint truncated the search without
    // being matched.
    bool proven_optimal = true;
};

// Branch-and-bound minimum set cover. Branches on the highest-coverage
// column (ties to the lowest vertex index), seeds the incumbent greedily,
// prunes with ceil(uncovered / max column coverage), and forces q-1 vertices
// from every twin class of size q into the solution, which is sound because
// twins are interchangeable under an automorphism. The returned witness is
// re-verified as a resolving set before returning.
CoverResult minimum_cover(const CoverInstance& inst, const CoverOptions& opts = {});

struct DimResult {
    int value = 0;
    VertexSet witness;
    bool proven_optimal = true;
};

DimResult dim(const Graph& g, const CoverOptions& opts = {});
DimResult edim(const Graph& g, const CoverOptions& opts = {});

}  // namespace mdim
