#include "mdim/resolving.hpp"

#include <algorithm>
#include <stdexcept>

namespace mdim {

VertexSet r_vertex(const DistMatrix& d, int x, int y) {
    const int n = d.n();
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw OutOfRangeError("vertex out of range in r_vertex");
    if (x == y) throw EqualVerticesError("r_vertex requires distinct vertices");
    VertexSet r(n);
    for (int z = 0; z < n; ++z)
        if (d.at(x, z) != d.at(y, z)) r.insert(z);
    return r;
}

VertexSet r_edge(const Graph& g, const DistMatrix& d, EdgeId e1, EdgeId e2) {
    if (e1 == e2) throw EqualEdgesError("r_edge requires distinct edges");
    Edge a = g.edge(e1), b = g.edge(e2);
    const int n = d.n();
    VertexSet r(n);
    for (int v = 0; v < n; ++v) {
        int d1 = std::min(d.at(a.u, v), d.at(a.v, v));
        int d2 = std::min(d.at(b.u, v), d.at(b.v, v));
        if (d1 != d2) r.insert(v);
    }
    return r;
}

CodeVector code_edge(const Graph& g, const DistMatrix& d,
                     const std::vector<int>& landmarks, EdgeId e) {
    if (landmarks.empty()) throw BadParameterError("empty landmark set");
    for (std::size_t i = 0; i < landmarks.size(); ++i)
        for (std::size_t j = i + 1; j < landmarks.size(); ++j)
            if (landmarks[i] == landmarks[j])
                throw BadParameterError("repeated landmark " + std::to_string(landmarks[i]));
    CodeVector code;
    code.reserve(landmarks.size());
    for (int u : landmarks) code.push_back(edge_vertex_distance(d, e, u, g));
    return code;
}

Verdict is_resolving_set(const Graph& g, const DistMatrix& d, const VertexSet& s) {
    const int n = g.vertex_count();
    auto members = s.to_vector();
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            bool separated = false;
            for (int u : members)
                if (d.at(x, u) != d.at(y, u)) { separated = true; break; }
            if (!separated) return {false, {x, y}};
        }
    }
    return {true, {-1, -1}};
}

Verdict is_edge_resolving_set(const Graph& g, const DistMatrix& d, const VertexSet& s) {
    const int m = g.edge_count();
    auto members = s.to_vector();
    for (EdgeId e1 = 0; e1 < m; ++e1) {
        Edge a = g.edge(e1);
        for (EdgeId e2 = e1 + 1; e2 < m; ++e2) {
            Edge b = g.edge(e2);
            bool separated = false;
            for (int u : members) {
                int d1 = std::min(d.at(a.u, u), d.at(a.v, u));
                int d2 = std::min(d.at(b.u, u), d.at(b.v, u));
                if (d1 != d2) { separated = true; break; }
            }
            if (!separated) return {false, {e1, e2}};
        }
    }
    return {true, {-1, -1}};
}

namespace {

Rational rset_weight(const VertexSet& r, const Weighting& w) {
    Rational sum(0);
    r.for_each([&](int v) { sum += w.at(v); });
    return sum;
}

}  // namespace

Verdict is_resolving_function(const Graph& g, const DistMatrix& d, const Weighting& w) {
    const int n = g.vertex_count();
    if (w.size() != n) throw BadParameterError("weighting size does not match graph");
    const Rational one(1);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (rset_weight(r_vertex(d, x, y), w) < one) return {false, {x, y}};
    return {true, {-1, -1}};
}

Verdict is_edge_resolving_function(const Graph& g, const DistMatrix& d, const Weighting& w) {
    if (w.size() != g.vertex_count())
        throw BadParameterError("weighting size does not match graph");
    const int m = g.edge_count();
    const Rational one(1);
    for (EdgeId e1 = 0; e1 < m; ++e1)
        for (EdgeId e2 = e1 + 1; e2 < m; ++e2)
            if (rset_weight(r_edge(g, d, e1, e2), w) < one) return {false, {e1, e2}};
    return {true, {-1, -1}};
}

std::map<CodeVector, std::vector<EdgeId>> edge_code_multiset(
    const Graph& g, const DistMatrix& d, const std::vector<int>& landmarks) {
    std::map<CodeVector, std::vector<EdgeId>> groups;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        groups[code_edge(g, d, landmarks, e)].push_back(e);
    return groups;
}

}  // namespace mdim
