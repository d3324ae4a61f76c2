#pragma once

#include <json.hpp>

#include "satgraph/containment.hpp"
#include "satgraph/families.hpp"
#include "satgraph/matching.hpp"
#include "satgraph/saturation.hpp"
#include "satgraph/search.hpp"

// Stable JSON shapes for every artifact the CLI can emit; field order is
// fixed so identical runs produce byte-identical files.

namespace satgraph {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const LinearForestSpec& spec);
LinearForestSpec spec_from_json(const ordered_json& j);

ordered_json to_json(const ForestEmbedding& e);
ForestEmbedding embedding_from_json(const ordered_json& j);

/// {alpha_prime, witness_set, odd_components, matching}
ordered_json tutte_berge_json(const Graph& g);

ordered_json to_json(const SaturationCertificate& cert);
SaturationCertificate certificate_from_json(const ordered_json& j);

ordered_json to_json(const SearchResult& result, bool include_timing = false);

ordered_json to_json(const SearchCheckpoint& ckpt);
SearchCheckpoint checkpoint_from_json(const ordered_json& j);

ordered_json family_descriptor_json(const FamilyDescriptor& d);

}  // namespace satgraph
