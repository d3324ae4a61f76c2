#include "satgraph/json_io.hpp"

#include <stdexcept>

namespace satgraph {

namespace {

ordered_json pair_json(std::pair<int, int> p) { return ordered_json::array({p.first, p.second}); }

std::pair<int, int> pair_from_json(const ordered_json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected a vertex pair");
    return {j[0].get<int>(), j[1].get<int>()};
}

ordered_json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
    ordered_json arr = ordered_json::array();
    for (auto p : pairs) arr.push_back(pair_json(p));
    return arr;
}

}  // namespace

ordered_json to_json(const LinearForestSpec& spec) {
    return ordered_json{{"k", spec.path_order}, {"t", spec.pair_count}};
}

LinearForestSpec spec_from_json(const ordered_json& j) {
    return {j.at("k").get<int>(), j.at("t").get<int>()};
}

ordered_json to_json(const ForestEmbedding& e) {
    return ordered_json{{"path", e.path}, {"pairs", pairs_json(e.pairs)}};
}

ForestEmbedding embedding_from_json(const ordered_json& j) {
    ForestEmbedding e;
    e.path = j.at("path").get<std::vector<int>>();
    for (const auto& p : j.at("pairs")) e.pairs.push_back(pair_from_json(p));
    return e;
}

ordered_json tutte_berge_json(const Graph& g) {
    TutteBergeCertificate cert = tutte_berge_certificate(g);
    MatchingResult m = max_matching(g);
    return ordered_json{{"alpha_prime", cert.alpha_prime},
                        {"witness_set", to_vertex_list(cert.witness_set)},
                        {"odd_components", cert.odd_components},
                        {"matching", pairs_json(m.edges)}};
}

ordered_json to_json(const SaturationCertificate& cert) {
    ordered_json j{{"spec", to_json(cert.spec)}, {"h_free", cert.h_free}};
    ordered_json orbits = ordered_json::array();
    for (const auto& orbit : cert.orbits)
        orbits.push_back(ordered_json{{"rep", pair_json(orbit.rep)},
                                      {"size", orbit.size},
                                      {"witness", to_json(orbit.witness)}});
    j["orbits"] = std::move(orbits);
    if (cert.failure) {
        if (cert.failure->kind == SaturationCertificate::FailureKind::kContainsH)
            j["failure"] = ordered_json{{"kind", "contains_h"},
                                        {"embedding", to_json(cert.failure->embedding)}};
        else
            j["failure"] = ordered_json{{"kind", "uncoverable_nonedge"},
                                        {"nonedge", pair_json(cert.failure->nonedge)}};
    }
    return j;
}

SaturationCertificate certificate_from_json(const ordered_json& j) {
    SaturationCertificate cert;
    cert.spec = spec_from_json(j.at("spec"));
    cert.h_free = j.at("h_free").get<bool>();
    for (const auto& orbit : j.at("orbits")) {
        SaturationCertificate::Orbit o;
        o.rep = pair_from_json(orbit.at("rep"));
        o.size = orbit.at("size").get<int>();
        o.witness = embedding_from_json(orbit.at("witness"));
        cert.orbits.push_back(std::move(o));
    }
    if (j.contains("failure")) {
        SaturationCertificate::Failure f{};
        std::string kind = j["failure"].at("kind").get<std::string>();
        if (kind == "contains_h") {
            f.kind = SaturationCertificate::FailureKind::kContainsH;
            f.embedding = embedding_from_json(j["failure"].at("embedding"));
        } else if (kind == "uncoverable_nonedge") {
            f.kind = SaturationCertificate::FailureKind::kUncoverableNonedge;
            f.nonedge = pair_from_json(j["failure"].at("nonedge"));
        } else {
            throw std::invalid_argument("certificate_from_json: unknown failure kind");
        }
        cert.failure = std::move(f);
    }
    return cert;
}

ordered_json to_json(const SearchResult& result, bool include_timing) {
    ordered_json j{{"n", result.n}, {"spec", to_json(result.spec)}};
    if (result.sat_value)
        j["sat_value"] = *result.sat_value;
    else
        j["sat_value"] = nullptr;
    j["extremal"] = result.extremal_graph6;
    j["graphs_examined"] = result.graphs_examined;
    j["budget_exhausted"] = result.budget_exhausted;
    if (include_timing) j["elapsed_seconds"] = result.elapsed_seconds;
    return j;
}

ordered_json to_json(const SearchCheckpoint& ckpt) {
    return ordered_json{{"n", ckpt.n},
                        {"spec", to_json(ckpt.spec)},
                        {"completed_level", ckpt.completed_level},
                        {"level", ckpt.level_graph6},
                        {"graphs_examined", ckpt.graphs_examined}};
}

SearchCheckpoint checkpoint_from_json(const ordered_json& j) {
    SearchCheckpoint ckpt;
    ckpt.n = j.at("n").get<int>();
    ckpt.spec = spec_from_json(j.at("spec"));
    ckpt.completed_level = j.at("completed_level").get<int>();
    ckpt.level_graph6 = j.at("level").get<std::vector<std::string>>();
    ckpt.graphs_examined = j.at("graphs_examined").get<long>();
    return ckpt;
}

ordered_json family_descriptor_json(const FamilyDescriptor& d) {
    ordered_json j;
    if (const auto* fan = std::get_if<Fan>(&d)) {
        j = {{"family", "fan"}, {"i", fan->i}};
    } else if (const auto* ffan = std::get_if<FFan>(&d)) {
        j = {{"family", "ffan"}, {"i", ffan->i}, {"j", ffan->j}};
    } else if (const auto* df = std::get_if<DeltaFan>(&d)) {
        j = {{"family", "delta-fan"}, {"i", df->i}};
    } else if (const auto* dpf = std::get_if<DeltaPlusFan>(&d)) {
        j = {{"family", "delta-plus-fan"}, {"i", dpf->i}};
    } else if (const auto* clique = std::get_if<Clique>(&d)) {
        j = {{"family", "clique"}, {"n", clique->n}};
    } else if (const auto* ex = std::get_if<ExtremalP7>(&d)) {
        j = {{"family", "extremal-p7"},
             {"n", ex->n},
             {"c", ex->c},
             {"fan_orders", ex->fan_orders},
             {"t", ex->t}};
    } else if (const auto* sf = std::get_if<SaturationForest>(&d)) {
        j = {{"family", "saturation-forest"}, {"n", sf->n}};
    } else if (const auto* bs = std::get_if<BookStructural>(&d)) {
        j = {{"family", "book-structural"}, {"witness", pair_json({bs->u, bs->v})}};
    }
    return j;
}

}  // namespace satgraph
