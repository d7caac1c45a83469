#pragma once

#include <vector>

#include "mdim/graph.hpp"
#include "mdim/rational.hpp"
#include "mdim/vertex_set.hpp"

namespace mdim {

enum class TwinKind { singleton, clique, independent };

struct TwinClass {
    std::vector<int> members;  // ascending
    TwinKind kind = TwinKind::singleton;
};

// Partition of V into twin equivalence classes: u, w are twins iff
// N(u) - {w} = N(w) - {u}. Each class induces a clique or an independent set.
struct TwinPartition {
    std::vector<TwinClass> classes;  // ordered by smallest member
    std::vector<int> class_of;       // vertex -> index into classes
};

TwinPartition twin_partition(const Graph& g);

// True iff the graph is a blow-up of some connected graph by cliques and
// independent sets of size >= 2 — equivalently, no twin class is a singleton.
// These are exactly the graphs whose fractional metric dimension is n/2.
bool is_twin_expansion_family(const Graph& g);

struct BijectionCheck {
    bool ok = false;
    std::vector<int> pairing;  // pairing[v] = phi(v) when ok
};

// Tests for a fixed-point-free bijection phi with |R_v{v, phi(v)}| = 2 for
// every v, via bipartite matching between two copies of V. Existence is the
// matching characterization of dim_f = n/2.
BijectionCheck has_half_dim_bijection(const Graph& g, const DistMatrix& d);

// Leaf/major-vertex anatomy of a tree. A leaf is a terminal vertex of the
// major vertex strictly nearest to it (unique in a tree); ter(v) counts the
// terminal vertices of v; exterior major vertices have ter(v) > 0 and split
// into M1 (ter = 1) and M2 (ter >= 2). T_v is the subtree induced by v and
// its paths to its terminal vertices.
struct TreeAnatomy {
    int n = 0;
    std::vector<int> leaves;            // ascending; sigma(T) = leaves.size()
    std::vector<int> major_vertices;    // degree >= 3, ascending
    std::vector<int> terminal_degree;   // per vertex; 0 for non-majors
    std::vector<int> m1, m2;            // exterior majors with ter==1 / ter>=2
    std::vector<std::vector<int>> terminal_vertices;  // per vertex: L(v)
    std::vector<VertexSet> subtree;     // per vertex: V(T_v), empty unless exterior major

    int sigma() const { return static_cast<int>(leaves.size()); }
    int ex() const { return static_cast<int>(m1.size() + m2.size()); }
    int ex1() const { return static_cast<int>(m1.size()); }
};

TreeAnatomy tree_anatomy(const Graph& g);

// (sigma(T) - ex1(T)) / 2; equals 1 for paths.
Rational edimf_tree_formula(const TreeAnatomy& a);

struct SubgraphWitness {
    bool found = false;
    std::vector<int> vertices;  // 5 clique vertices, or two triples (left then right)
    explicit operator bool() const { return found; }
};

SubgraphWitness contains_k5_subgraph(const Graph& g);
SubgraphWitness contains_k33_subgraph(const Graph& g);

}  // namespace mdim
