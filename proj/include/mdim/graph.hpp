#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mdim/errors.hpp"

namespace mdim {

// Index into Graph::edges().
using EdgeId = int;

// Which kind of pair a distinguishing computation ranges over.
enum class PairMode { vertex, edge };

struct Edge {
    int u, v;  // u < v
    friend bool operator==(const Edge& a, const Edge& b) {
        return a.u == b.u && a.v == b.v;
    }
};

// Immutable simple undirected graph on vertices 0..n-1. Edges are stored in
// canonical lexicographic order of (min, max), so edge ids are reproducible
// across runs; all code vectors and LP columns refer to this order.
class Graph {
  public:
    Graph() : n_(0) {}

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    Edge edge(EdgeId e) const {
        if (e < 0 || e >= edge_count())
            throw OutOfRangeError("edge id " + std::to_string(e) + " out of range");
        return edges_[e];
    }

    bool has_edge(int u, int v) const;
    // id of the edge {u, v}; throws OutOfRangeError if absent
    EdgeId edge_id(int u, int v) const;

    friend Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_pairs);

  private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw OutOfRangeError("vertex " + std::to_string(v) + " out of range");
    }

    int n_;
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
    std::vector<Edge> edges_;            // lexicographic (u, v), u < v
};

// Validating constructor: rejects out-of-range endpoints, loops and duplicate
// pairs (in either orientation).
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_pairs);

bool is_connected(const Graph& g);

// All-pairs shortest path distances of a connected graph.
class DistMatrix {
  public:
    DistMatrix() : n_(0) {}
    DistMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {}

    int n() const { return n_; }
    int at(int u, int w) const { return d_[static_cast<std::size_t>(u) * n_ + w]; }

  private:
    int n_;
    std::vector<int> d_;
};

// BFS from every vertex; throws DisconnectedError naming two vertices in
// different components when g is not connected.
DistMatrix all_pairs_distances(const Graph& g);

// d(e, v) = min over e's endpoints of their distance to v.
int edge_vertex_distance(const DistMatrix& d, EdgeId e, int v, const Graph& g);

// Edge-list text format: first line "p <n> <m>", then m lines "<u> <v>"
// (0-indexed); lines starting with '#' are comments. The writer emits
// canonical edge order.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace mdim
