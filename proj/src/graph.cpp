#include "mdim/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace mdim {

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_pairs) {
    if (n < 0) throw BadParameterError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.edges_.reserve(edge_pairs.size());
    for (auto [u, v] : edge_pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw OutOfRangeError("edge endpoint out of range: (" + std::to_string(u) +
                                  ", " + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw LoopError("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        g.edges_.push_back({u, v});
    }
    std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < g.edges_.size(); ++i)
        if (g.edges_[i] == g.edges_[i - 1])
            throw DuplicateEdgeError("duplicate edge (" + std::to_string(g.edges_[i].u) +
                                     ", " + std::to_string(g.edges_[i].v) + ")");
    for (const Edge& e : g.edges_) {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

EdgeId Graph::edge_id(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v},
                               [](const Edge& a, const Edge& b) {
                                   return a.u != b.u ? a.u < b.u : a.v < b.v;
                               });
    if (it == edges_.end() || !(*it == Edge{u, v}))
        throw OutOfRangeError("no edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    return static_cast<EdgeId>(it - edges_.begin());
}

namespace {

// single-source BFS; unreached vertices stay at -1
std::vector<int> bfs(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto dist = bfs(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

DistMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> d(static_cast<std::size_t>(n) * n, 0);
    for (int s = 0; s < n; ++s) {
        auto row = bfs(g, s);
        for (int v = 0; v < n; ++v) {
            if (row[v] < 0)
                throw DisconnectedError("vertices " + std::to_string(s) + " and " +
                                        std::to_string(v) + " are in different components");
            d[static_cast<std::size_t>(s) * n + v] = row[v];
        }
    }
    return DistMatrix(n, std::move(d));
}

int edge_vertex_distance(const DistMatrix& d, EdgeId e, int v, const Graph& g) {
    Edge ed = g.edge(e);
    if (v < 0 || v >= d.n())
        throw OutOfRangeError("vertex " + std::to_string(v) + " out of range");
    return std::min(d.at(ed.u, v), d.at(ed.v, v));
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> pairs;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            char p = 0;
            if (!(ls >> p >> n >> m) || p != 'p' || n < 0 || m < 0)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected header 'p <n> <m>'");
            pairs.reserve(m);
        } else {
            int u = 0, v = 0;
            if (!(ls >> u >> v))
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected '<u> <v>'");
            pairs.emplace_back(u, v);
        }
    }
    if (n < 0) throw ParseError("missing 'p <n> <m>' header");
    if (static_cast<int>(pairs.size()) != m)
        throw ParseError("expected " + std::to_string(m) + " edges, found " +
                         std::to_string(pairs.size()));
    try {
        return build_graph(n, pairs);
    } catch (const Error& e) {
        throw ParseError(std::string("invalid edge list: ") + e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

}  // namespace mdim
