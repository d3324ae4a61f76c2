#include "satgraph/saturation.hpp"

#include <algorithm>
#include <stdexcept>

#include "satgraph/canonical.hpp"
#include "satgraph/runtime.hpp"

namespace satgraph {

bool is_h_free(const Graph& g, const LinearForestSpec& spec) {
    return !contains_linear_forest(g, spec).has_value();
}

SaturationVerdict check_saturated(const Graph& g, const LinearForestSpec& spec) {
    SaturationVerdict verdict;
    verdict.edge_count = g.edge_count();
    verdict.certificate.spec = spec;

    if (auto emb = contains_linear_forest(g, spec)) {
        verdict.saturated = false;
        verdict.certificate.h_free = false;
        verdict.certificate.failure = SaturationCertificate::Failure{
            SaturationCertificate::FailureKind::kContainsH, *emb, {}};
        return verdict;
    }
    verdict.certificate.h_free = true;

    auto nonedges = complement_nonedges(g);
    auto orbits = pair_orbits(g, nonedges);

    // Per-orbit witness searches are independent; results are assembled in
    // orbit order, so the certificate matches the sequential one exactly.
    std::vector<std::optional<ForestEmbedding>> witnesses(orbits.size());
    parallel_index_for(static_cast<int>(orbits.size()), [&](int i) {
        const PairOrbit& orbit = orbits[static_cast<std::size_t>(i)];
        Graph h = g;
        h.add_edge(orbit.rep.first, orbit.rep.second);
        witnesses[static_cast<std::size_t>(i)] = contains_linear_forest(h, spec);
    });

    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const PairOrbit& orbit = orbits[i];
        if (!witnesses[i]) {
            verdict.saturated = false;
            verdict.certificate.failure = SaturationCertificate::Failure{
                SaturationCertificate::FailureKind::kUncoverableNonedge, {}, orbit.rep};
            verdict.certificate.orbits.clear();
            return verdict;
        }
        if (!embedding_uses_pair(*witnesses[i], orbit.rep.first, orbit.rep.second))
            throw std::logic_error(
                "check_saturated: witness in an H-free graph must use the added edge");
        verdict.certificate.orbits.push_back(
            {orbit.rep, static_cast<int>(orbit.members.size()), *witnesses[i]});
    }
    verdict.saturated = true;
    return verdict;
}

ValidationResult validate_certificate(const Graph& g, const SaturationCertificate& cert) {
    auto fail = [](std::string why) { return ValidationResult{false, std::move(why)}; };

    if (cert.spec.path_order < 2 || cert.spec.pair_count < 0)
        return fail("malformed spec");

    if (cert.failure) {
        if (cert.failure->kind == SaturationCertificate::FailureKind::kContainsH) {
            if (cert.h_free) return fail("h_free set alongside a contains-H failure");
            if (!embedding_valid(g, cert.spec, cert.failure->embedding))
                return fail("failure embedding invalid");
            return {};
        }
        auto [u, v] = cert.failure->nonedge;
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v || g.has_edge(u, v))
            return fail("failure witness is not a non-edge");
        return {};
    }

    if (!cert.h_free) return fail("certificate without failure must claim h_free");

    auto nonedges = complement_nonedges(g);
    auto orbits = pair_orbits(g, nonedges);
    if (orbits.size() != cert.orbits.size()) return fail("non-edge uncovered");
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const auto& expect = orbits[i];
        const auto& got = cert.orbits[i];
        if (expect.rep != got.rep || static_cast<int>(expect.members.size()) != got.size)
            return fail("non-edge uncovered");
        Graph h = g;
        h.add_edge(got.rep.first, got.rep.second);
        if (!embedding_valid(h, cert.spec, got.witness)) return fail("embedding invalid");
        if (!embedding_uses_pair(got.witness, got.rep.first, got.rep.second))
            return fail("witness ignores the added edge");
    }
    return {};
}

std::optional<ForestEmbedding> closed_neighborhood_witness(const Graph& g,
                                                           const LinearForestSpec& spec, int x,
                                                           int w) {
    if (g.has_edge(x, w))
        throw std::invalid_argument("closed_neighborhood_witness: xw is already an edge");
    Graph h = g;
    h.add_edge(x, w);
    VertexSet required = g.neighbors(x) | bit(x) | bit(w);
    std::optional<ForestEmbedding> found;
    for_each_forest_embedding(h, spec, [&](const ForestEmbedding& e) {
        VertexSet used = 0;
        for (int v : e.path) used |= bit(v);
        for (auto [a, b] : e.pairs) used |= bit(a) | bit(b);
        if ((required & ~used) == 0) {
            found = e;
            return true;
        }
        return false;
    });
    return found;
}

}  // namespace satgraph
