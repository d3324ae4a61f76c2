#pragma once

#include <utility>
#include <vector>

#include "satgraph/graph.hpp"

namespace satgraph {

struct MatchingResult {
    int size = 0;
    std::vector<std::pair<int, int>> edges;  // pairwise disjoint, (u < v), sorted
};

/// Maximum matching via Edmonds' blossom-contraction augmenting search.
/// Exact for every graph in the vertex-cap profile.
MatchingResult max_matching(const Graph& g);

int matching_number(const Graph& g);

/// Independent exhaustive oracle; refuses graphs with more than 16 vertices.
MatchingResult max_matching_bruteforce(const Graph& g);

struct TutteBergeCertificate {
    VertexSet witness_set = 0;  // S
    int odd_components = 0;     // o(G - S)
    int alpha_prime = 0;        // (|G| + |S| - o(G - S)) / 2
};

/// A witness set attaining the Tutte-Berge minimum. Below 21 vertices the
/// search is exhaustive over subsets in increasing size then lexicographic
/// order and returns the first minimizer; above that the set of inessential
/// vertices' neighbourhood is used, and the identity is re-verified either
/// way.
TutteBergeCertificate tutte_berge_certificate(const Graph& g);

/// Number of odd-order components of g - s.
int odd_components_after_removal(const Graph& g, VertexSet s);

/// True iff adding the non-edge uv strictly increases the matching number.
/// Calling it on an existing edge is a usage error.
bool alpha_prime_monotone_check(const Graph& g, int u, int v);

}  // namespace satgraph
