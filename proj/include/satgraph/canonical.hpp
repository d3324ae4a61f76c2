#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "satgraph/graph.hpp"

namespace satgraph {

/// Isomorphism-invariant key: two graphs get equal keys iff they are
/// isomorphic (colored variant: iff color-preserving isomorphic).
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    auto operator<=>(const CanonicalForm&) const = default;
    bool operator==(const CanonicalForm&) const = default;

    std::string hex() const;
};

CanonicalForm canonical_form(const Graph& g);

/// colors[v] is an arbitrary integer label; vertices may only map to vertices
/// of the same color.
CanonicalForm canonical_form_colored(const Graph& g, const std::vector<int>& colors);

/// A copy of g relabeled into its canonical labeling (canonical_form of the
/// result equals canonical_form(g), and equal inputs-up-to-iso give identical
/// outputs).
Graph canonical_relabel(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

/// Orbit of an unordered vertex pair under Aut(g), as a grouping key:
/// pairs get equal keys iff some automorphism maps one pair onto the other.
CanonicalForm pair_orbit_key(const Graph& g, int u, int v);

struct PairOrbit {
    std::pair<int, int> rep;                      // lexicographically least member
    std::vector<std::pair<int, int>> members;     // sorted
};

/// Groups the given unordered pairs into Aut(g)-orbits, ordered by rep.
std::vector<PairOrbit> pair_orbits(const Graph& g,
                                   const std::vector<std::pair<int, int>>& pairs);

}  // namespace satgraph
