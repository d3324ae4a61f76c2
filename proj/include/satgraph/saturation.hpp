#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satgraph/containment.hpp"
#include "satgraph/graph.hpp"

namespace satgraph {

/// Witness that a graph is H-free but H appears after adding any non-edge.
/// Non-edges are grouped into automorphism orbits; one replayable witness
/// embedding is stored per orbit representative.
struct SaturationCertificate {
    struct Orbit {
        std::pair<int, int> rep;   // lexicographically least non-edge of the orbit
        int size = 0;              // number of non-edges in the orbit
        ForestEmbedding witness;   // valid in g + rep
    };

    enum class FailureKind { kContainsH, kUncoverableNonedge };

    struct Failure {
        FailureKind kind;
        ForestEmbedding embedding;       // for kContainsH
        std::pair<int, int> nonedge{};   // for kUncoverableNonedge
    };

    LinearForestSpec spec;
    bool h_free = false;
    std::vector<Orbit> orbits;           // ordered by rep
    std::optional<Failure> failure;
};

struct SaturationVerdict {
    bool saturated = false;
    SaturationCertificate certificate;
    int edge_count = 0;
};

bool is_h_free(const Graph& g, const LinearForestSpec& spec);

/// Full saturation decision with certificate. On failure the witness is the
/// lexicographically least failing non-edge (or an embedding of H in g).
SaturationVerdict check_saturated(const Graph& g, const LinearForestSpec& spec);

struct ValidationResult {
    bool ok = true;
    std::string violation;  // first violated clause, empty when ok
};

/// Independent re-check of a certificate against g: no containment search is
/// rerun; orbits are recomputed, coverage compared, and every witness
/// embedding re-verified edge by edge.
ValidationResult validate_certificate(const Graph& g, const SaturationCertificate& cert);

/// Witness embedding for g + xw that contains N[x] and w, searching all
/// copies if the default witness does not conform; nullopt when no copy of H
/// in g + xw contains N[x] and w.
std::optional<ForestEmbedding> closed_neighborhood_witness(const Graph& g,
                                                           const LinearForestSpec& spec, int x,
                                                           int w);

}  // namespace satgraph
