#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace satgraph {

// Reference profile: one machine word per neighbour set. Everything in this
// library assumes simple undirected graphs with at most kMaxVertices vertices;
// raising the cap means widening VertexSet to multiple words.
inline constexpr int kMaxVertices = 64;

using VertexSet = std::uint64_t;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

inline VertexSet full_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int popcount(VertexSet s) { return std::popcount(s); }

inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        f(v);
    }
}

std::vector<int> to_vertex_list(VertexSet s);

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
/// Treat values as immutable once built; all queries are const and pure.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const;

    VertexSet neighbors(int v) const;
    VertexSet vertex_mask() const { return full_set(n_); }

    int degree(int v) const;
    int min_degree() const;  // 0 for the empty graph

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

// --- structural queries -----------------------------------------------------

VertexSet vertices_of_degree(const Graph& g, int i);

/// Connected components as vertex sets, ordered by least contained vertex.
std::vector<VertexSet> components(const Graph& g);

VertexSet component_of(const Graph& g, int v);

bool is_connected(const Graph& g);

bool is_acyclic(const Graph& g);

/// Distance in the vertex-count convention: dist(u,u) = 1, adjacent vertices
/// have distance 2, nullopt when u and v lie in different components.
std::optional<int> dist_vertices(const Graph& g, int u, int v);

/// Conventional edge-count distance, for internal algorithm use.
std::optional<int> dist_edges(const Graph& g, int u, int v);

/// All unordered non-adjacent pairs {u,v}, u < v, in lexicographic order.
std::vector<std::pair<int, int>> complement_nonedges(const Graph& g);

// --- construction helpers ---------------------------------------------------

Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<int>* old_ids = nullptr);

Graph disjoint_union(const Graph& a, const Graph& b);

/// perm maps old vertex id -> new vertex id.
Graph relabel(const Graph& g, const std::vector<int>& perm);

Graph make_clique(int n);
Graph make_empty(int n);
Graph make_path(int n);
Graph make_cycle(int n);

}  // namespace satgraph
