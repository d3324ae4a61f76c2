#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "satgraph/containment.hpp"
#include "satgraph/graph.hpp"

namespace satgraph {

/// Exact saturation-number search outcome. Extremal graphs are stored as
/// graph6 strings of their canonically relabeled representatives.
struct SearchResult {
    int n = 0;
    LinearForestSpec spec;
    std::optional<int> sat_value;
    std::vector<std::string> extremal_graph6;
    long graphs_examined = 0;
    double elapsed_seconds = 0.0;
    bool budget_exhausted = false;
};

/// One representative per isomorphism class with at most max_edges edges,
/// generated edge level by edge level via canonical augmentation (a child is
/// accepted only when the added edge lies in the child's canonical edge
/// orbit). Refuses n > 10.
std::vector<Graph> enumerate_graphs(int n, int max_edges);

/// Streaming variant with a monotone subtree prune: when prune(g) is true, g
/// and every graph above it are skipped (sound for edge-monotone predicates
/// such as containment of a fixed subgraph).
void enumerate_graphs_pruned(int n, int max_edges,
                             const std::function<bool(const Graph&)>& prune,
                             const std::function<void(const Graph&)>& visit);

/// Exact sat(n, H) with the complete extremal set: ascends by edge count and
/// stops after the first level containing a saturated graph. The optional
/// budget caps the edge level; when exhausted the result carries no value.
SearchResult sat_exact(int n, const LinearForestSpec& spec,
                       std::optional<int> edge_budget = std::nullopt);

/// Independent oracle: every labeled graph on n <= 7 vertices, no isomorphism
/// pruning, duplicates removed afterwards.
SearchResult sat_bruteforce_oracle(int n, const LinearForestSpec& spec);

/// Every H-saturated graph on n vertices (all edge counts), one per
/// isomorphism class; the universe for the lemma sweeps.
std::vector<Graph> all_saturated_graphs(int n, const LinearForestSpec& spec);

/// Level checkpoint for resumable searches: the completed edge level and its
/// representatives.
struct SearchCheckpoint {
    int n = 0;
    LinearForestSpec spec;
    int completed_level = -1;
    std::vector<std::string> level_graph6;
    long graphs_examined = 0;
};

SearchResult sat_exact_resumable(int n, const LinearForestSpec& spec,
                                 std::optional<int> edge_budget,
                                 const SearchCheckpoint* resume_from,
                                 const std::function<void(const SearchCheckpoint&)>& on_level);

}  // namespace satgraph
