#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "satgraph/graph.hpp"

namespace satgraph {

/// The target pattern H = P_k + t P_2.
struct LinearForestSpec {
    int path_order = 2;  // k >= 2
    int pair_count = 0;  // t >= 0

    int vertex_demand() const { return path_order + 2 * pair_count; }
    bool operator==(const LinearForestSpec&) const = default;
};

/// An explicit copy of P_k + t P_2 inside a host graph.
struct ForestEmbedding {
    std::vector<int> path;                     // k vertices, consecutive ones adjacent
    std::vector<std::pair<int, int>> pairs;    // t disjoint host edges

    bool operator==(const ForestEmbedding&) const = default;
};

/// Structural validity of an embedding against a host graph: all vertices
/// distinct and in range, path edges and pair edges present.
bool embedding_valid(const Graph& g, const LinearForestSpec& spec, const ForestEmbedding& e);

bool embedding_uses_pair(const ForestEmbedding& e, int u, int v);

/// First P_k in deterministic order (start vertices ascending, neighbours
/// ascending, each path emitted once with first endpoint < last endpoint).
std::optional<std::vector<int>> contains_path(const Graph& g, int k);

/// Largest k with a P_k present; 0 for the empty graph.
int longest_path_order(const Graph& g);

/// Exact decision with witness: enumerate P_k embeddings, then ask the
/// matching module for t disjoint edges among the untouched vertices.
std::optional<ForestEmbedding> contains_linear_forest(const Graph& g, const LinearForestSpec& spec);

/// max m with P_k + m P_2 contained in g; nullopt when g has no P_k at all.
std::optional<int> alpha_k(const Graph& g, int k);

/// Independent oracle by direct enumeration of pattern injections.
/// Refuses hosts with more than 12 vertices.
bool brute_force_contains(const Graph& g, const LinearForestSpec& spec);

/// Visits every copy of P_k + t P_2 (path fixed up to reversal, pair set
/// unordered); the visitor returns true to stop. Returns true if stopped.
bool for_each_forest_embedding(const Graph& g, const LinearForestSpec& spec,
                               const std::function<bool(const ForestEmbedding&)>& visit);

}  // namespace satgraph
