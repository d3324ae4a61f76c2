#include "satgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace satgraph {

std::vector<int> to_vertex_list(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(s)));
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("Graph: order must be in [0, " +
                                    std::to_string(kMaxVertices) + "]");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] & bit(v)) != 0;
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return popcount(adj_[v]);
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : kMaxVertices;
    for (int v = 0; v < n_; ++v) d = std::min(d, popcount(adj_[v]));
    return n_ == 0 ? 0 : d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for_each_vertex(adj_[u] & ~full_set(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
}

VertexSet vertices_of_degree(const Graph& g, int i) {
    VertexSet out = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == i) out |= bit(v);
    return out;
}

VertexSet component_of(const Graph& g, int v) {
    VertexSet comp = bit(v);
    VertexSet frontier = comp;
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int u) { next |= g.neighbors(u); });
        frontier = next & ~comp;
        comp |= frontier;
    }
    return comp;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (seen & bit(v)) continue;
        VertexSet comp = component_of(g, v);
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return component_of(g, 0) == g.vertex_mask();
}

bool is_acyclic(const Graph& g) {
    // A graph is a forest iff every component has |V| - 1 edges.
    int comp_count = static_cast<int>(components(g).size());
    return g.edge_count() == g.order() - comp_count;
}

std::optional<int> dist_edges(const Graph& g, int u, int v) {
    if (u == v) return 0;
    VertexSet seen = bit(u);
    VertexSet frontier = seen;
    int d = 0;
    while (frontier) {
        ++d;
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int w) { next |= g.neighbors(w); });
        frontier = next & ~seen;
        if (frontier & bit(v)) return d;
        seen |= frontier;
    }
    return std::nullopt;
}

std::optional<int> dist_vertices(const Graph& g, int u, int v) {
    auto d = dist_edges(g, u, v);
    if (!d) return std::nullopt;
    return *d + 1;
}

std::vector<std::pair<int, int>> complement_nonedges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<int>* old_ids) {
    std::vector<int> ids = to_vertex_list(keep & g.vertex_mask());
    Graph sub(static_cast<int>(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (g.has_edge(ids[i], ids[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (old_ids) *old_ids = std::move(ids);
    return sub;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
    return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("relabel: permutation size mismatch");
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

Graph make_clique(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_empty(int n) { return Graph(n); }

Graph make_path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("make_cycle: need at least 3 vertices");
    Graph g = make_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

}  // namespace satgraph
