#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "satgraph/graph.hpp"

namespace satgraph {

// --- named families ----------------------------------------------------------

/// i triangles sharing one center vertex; 2i+1 vertices, 3i edges.
Graph make_fan(int i);

/// Two disjoint fans with adjacent centers; 2i+2j+2 vertices, 3i+3j+1 edges.
Graph make_ffan(int i, int j);

/// i-1 triangles and a K_4 sharing one center; 2i+2 vertices, 3i+3 edges.
Graph make_delta_plus_fan(int i);

/// make_delta_plus_fan(i) minus one center-incident K_4 edge; 3i+2 edges.
Graph make_delta_fan(int i);

/// Two degree-2 vertices with identical neighbourhoods, if any (u < v, least
/// pair first).
std::optional<std::pair<int, int>> book_structural_witness(const Graph& g);
bool is_book_structural(const Graph& g);

struct Fan {
    int i;
    bool operator==(const Fan&) const = default;
};
struct FFan {
    int i, j;  // i <= j
    bool operator==(const FFan&) const = default;
};
struct DeltaFan {
    int i;
    bool operator==(const DeltaFan&) const = default;
};
struct DeltaPlusFan {
    int i;
    bool operator==(const DeltaPlusFan&) const = default;
};
struct Clique {
    int n;
    bool operator==(const Clique&) const = default;
};
struct BookStructural {
    int u, v;  // witness pair
    bool operator==(const BookStructural&) const = default;
};
struct ExtremalP7 {
    int n = 0;
    int c = 0;                     // number of triangle components
    std::vector<int> fan_orders;   // triangle counts of fan components, ascending
    int t = 0;                     // c + sum(fan_orders) + 1
    bool operator==(const ExtremalP7&) const = default;
};
struct SaturationForest {
    int n = 0;
    bool operator==(const SaturationForest&) const = default;
};

using FamilyDescriptor =
    std::variant<Fan, FFan, DeltaFan, DeltaPlusFan, Clique, ExtremalP7, SaturationForest,
                 BookStructural>;

/// Whole-graph recognition by canonical-form comparison against constructed
/// candidates of matching order and size. Exact families take precedence over
/// BookStructural; Fan(1) wins over Clique(3) for the triangle.
std::optional<FamilyDescriptor> recognize(const Graph& g);

// --- extremal construction ----------------------------------------------------

/// K_8 + c K_3 + fans + isolated-vertex padding. Requires every fan order
/// >= 3, c + sum(fan_orders) = t - 1 and room for the padding; the edge count
/// is always 3t + 25.
Graph make_extremal_p7(int n, int c, const std::vector<int>& fan_orders, int t);

// --- saturated forest construction ---------------------------------------------

/// Plan for the n-vertex forest made of q = floor(n/14) trees: q-1 copies of
/// a 14-vertex tree plus one tree on 14 + (n mod 14) vertices. Both trees are
/// P_7-free with no degree-2 vertex; the realized forest has n - q edges and
/// is machine-verified to be (P_7 + t P_2)-saturated for t = 5q - 5, with a
/// designated pair (x in the first tree, y in the last) witnessing
/// alpha_7(forest + xy) = 5q - 5 exactly.
struct SaturationForestPlan {
    int n = 0, q = 0, r = 0;
    Graph tree_t;       // 14 vertices
    Graph tree_tstar;   // 14 + r vertices
    int x = -1;         // designated vertex, local index in tree_t
    int y = -1;         // designated vertex, local index in tree_tstar
    int candidate = 0;  // which construction the verifier accepted

    int global_x() const { return x; }
    int global_y() const { return 14 * (q - 1) + y; }
};

SaturationForestPlan plan_saturation_forest(int n);

Graph realize(const SaturationForestPlan& plan);

/// The 14-vertex tree used by the plan: two 7-vertex complete binary trees
/// with their roots joined.
Graph double_binary_tree_14();

/// The fallback search space for plan_saturation_forest: every tree of the
/// given order with no degree-2 vertex and no P_7 (bicentral of height 2),
/// one per isomorphism class, deterministic order.
std::vector<Graph> admissible_plan_trees(int order);

}  // namespace satgraph
