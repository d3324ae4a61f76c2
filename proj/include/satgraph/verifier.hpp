#pragma once

#include <string>
#include <vector>

#include "satgraph/containment.hpp"
#include "satgraph/graph.hpp"

namespace satgraph {

struct LemmaReport {
    std::string lemma;
    std::string universe;
    long instances_checked = 0;
    std::vector<std::string> counterexamples;  // graph6, possibly annotated
    bool vacuous = false;                      // instances_checked == 0
    std::vector<std::string> notes;

    bool passed() const { return counterexamples.empty(); }
    void finish() { vacuous = instances_checked == 0; }
};

/// Saturated-graph universes for the sweep-style checks: one graph per
/// isomorphism class, every edge count, for each spec in the stated range.
struct SweepRange {
    int max_n = 7;
    int min_k = 2, max_k = 5;
    int min_t = 1, max_t = 2;
};

struct SweepInstance {
    Graph graph;
    LinearForestSpec spec;
};

std::vector<SweepInstance> saturated_sweep(const SweepRange& range);

/// Every connected P_7-free graph with 7 <= n <= max_n, minimum degree >= 2
/// and a P_5 is book-structural or one of the fan families.
LemmaReport verify_lemma5(int max_n);

/// In a saturated graph, a degree-2 vertex has adjacent neighbours.
LemmaReport verify_lemma2(const SweepRange& range);

/// Isolated vertices force no degree-1 vertices, and every copy of H in
/// g + xw (w isolated) covers N[x] and w.
LemmaReport verify_lemma4(const SweepRange& range);

/// Saturated graphs with k >= 6 and an isolated vertex are never
/// book-structural.
LemmaReport verify_lemma10(int max_n);

/// Without isolated vertices, two or more tree components force every tree
/// component to have at least 14 vertices; vacuous below 28 vertices unless
/// a counterexample exists.
LemmaReport verify_lemma8(int max_n);

/// With at least two isolated vertices, small components are odd cliques
/// (or complete of order k-1 with k odd).
LemmaReport verify_lemma15(const SweepRange& range);

/// Per-component growth alternative for every internal non-edge.
LemmaReport verify_observation(const SweepRange& range);

/// Construction checks: the clique-plus-fans graphs and the saturated
/// forests certify with the stated edge counts.
struct TheoremCheckOptions {
    int min_t = 1, max_t = 3;
    std::vector<int> forest_orders = {28, 41};
    bool mutate = false;  // deliberately corrupt one construction (self-test)
};

LemmaReport verify_theorem_constructions(const TheoremCheckOptions& options);

std::vector<LemmaReport> verify_all(int max_n_lemma5, const SweepRange& range,
                                    const TheoremCheckOptions& theorem_options);

std::string render_report_text(const LemmaReport& report);

}  // namespace satgraph
