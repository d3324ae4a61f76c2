#include "satgraph/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "satgraph/canonical.hpp"
#include "satgraph/graph6.hpp"
#include "satgraph/runtime.hpp"
#include "satgraph/saturation.hpp"

namespace satgraph {

namespace {

constexpr int kEnumerationBound = 10;

// Cheap isomorphism-invariant edge key; the exact colored canonical key
// breaks ties. The canonical edge of a graph is the (invariant, key)-least
// edge, so most accept tests are decided without any canonical labeling.
std::int64_t edge_invariant(const Graph& g, int u, int v) {
    int du = g.degree(u), dv = g.degree(v);
    if (du > dv) std::swap(du, dv);
    int common = popcount(g.neighbors(u) & g.neighbors(v));
    return (static_cast<std::int64_t>(du) << 32) | (static_cast<std::int64_t>(dv) << 16) | common;
}

// Is the edge (u, v) in the canonical edge orbit of g?
bool added_edge_is_canonical(const Graph& g, int u, int v) {
    auto edges = g.edges();
    std::int64_t best_inv = edge_invariant(g, u, v);
    for (auto [a, b] : edges) best_inv = std::min(best_inv, edge_invariant(g, a, b));
    if (edge_invariant(g, u, v) != best_inv) return false;
    CanonicalForm added_key = pair_orbit_key(g, u, v);
    for (auto [a, b] : edges) {
        if (edge_invariant(g, a, b) != best_inv) continue;
        if ((a == u && b == v) || (a == v && b == u)) continue;
        if (pair_orbit_key(g, a, b) < added_key) return false;
    }
    return true;
}

struct LevelEntry {
    CanonicalForm key;
    Graph graph;
};

// Children of one level under canonical augmentation: per parent, one
// non-edge per Aut(parent)-orbit, child kept iff the new edge is canonical
// for it. Children of distinct parents are never isomorphic, so the merge is
// a plain sort by canonical key.
std::vector<LevelEntry> next_level(const std::vector<LevelEntry>& level,
                                   const std::function<bool(const Graph&)>& prune,
                                   long* examined) {
    std::vector<std::vector<LevelEntry>> buckets(level.size());
    parallel_index_for(static_cast<int>(level.size()), [&](int idx) {
        const Graph& parent = level[static_cast<std::size_t>(idx)].graph;
        auto nonedges = complement_nonedges(parent);
        if (nonedges.empty()) return;
        for (const PairOrbit& orbit : pair_orbits(parent, nonedges)) {
            auto [u, v] = orbit.rep;
            Graph child = parent;
            child.add_edge(u, v);
            if (prune && prune(child)) continue;
            if (!added_edge_is_canonical(child, u, v)) continue;
            buckets[static_cast<std::size_t>(idx)].push_back(
                {canonical_form(child), std::move(child)});
        }
    });
    std::vector<LevelEntry> out;
    for (auto& bucket : buckets) {
        if (examined) *examined += static_cast<long>(bucket.size());
        out.insert(out.end(), std::make_move_iterator(bucket.begin()),
                   std::make_move_iterator(bucket.end()));
    }
    std::sort(out.begin(), out.end(),
              [](const LevelEntry& a, const LevelEntry& b) { return a.key < b.key; });
    return out;
}

void check_enum_bound(int n) {
    if (n < 0 || n > kEnumerationBound)
        throw std::invalid_argument("enumerate_graphs: exhaustive bound is n <= " +
                                    std::to_string(kEnumerationBound));
}

}  // namespace

void enumerate_graphs_pruned(int n, int max_edges,
                             const std::function<bool(const Graph&)>& prune,
                             const std::function<void(const Graph&)>& visit) {
    check_enum_bound(n);
    Graph empty(n);
    if (prune && prune(empty)) return;
    std::vector<LevelEntry> level{{canonical_form(empty), empty}};
    visit(empty);
    int cap = std::min(max_edges, n * (n - 1) / 2);
    for (int m = 1; m <= cap && !level.empty(); ++m) {
        level = next_level(level, prune, nullptr);
        for (const LevelEntry& e : level) visit(e.graph);
    }
}

std::vector<Graph> enumerate_graphs(int n, int max_edges) {
    std::vector<Graph> out;
    enumerate_graphs_pruned(n, max_edges, nullptr, [&](const Graph& g) { out.push_back(g); });
    return out;
}

namespace {

std::vector<std::string> saturated_of_level(const std::vector<LevelEntry>& level,
                                            const LinearForestSpec& spec) {
    std::vector<std::string> saturated;
    for (const LevelEntry& e : level)
        if (check_saturated(e.graph, spec).saturated)
            saturated.push_back(graph6_encode(canonical_relabel(e.graph)));
    std::sort(saturated.begin(), saturated.end());
    return saturated;
}

SearchResult run_sat_search(int n, const LinearForestSpec& spec, std::optional<int> edge_budget,
                            const SearchCheckpoint* resume_from,
                            const std::function<void(const SearchCheckpoint&)>& on_level) {
    check_enum_bound(n);
    auto start = std::chrono::steady_clock::now();
    SearchResult result;
    result.n = n;
    result.spec = spec;

    auto finish = [&](std::optional<int> value, std::vector<std::string> extremal) {
        result.sat_value = value;
        result.extremal_graph6 = std::move(extremal);
        result.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    };

    // Degenerate regime: with fewer than k + 2t vertices every graph is
    // H-free and only the complete graph has no addable edge.
    if (n < spec.vertex_demand()) {
        result.graphs_examined = 1;
        return finish(n * (n - 1) / 2, {graph6_encode(canonical_relabel(make_clique(n)))});
    }

    auto prune = [&](const Graph& g) { return !is_h_free(g, spec); };

    // `level` holds the representatives of edge level `m`, already checked to
    // contain no saturated graph when arriving from a checkpoint.
    std::vector<LevelEntry> level;
    int m = 0;
    if (resume_from && resume_from->completed_level >= 0) {
        m = resume_from->completed_level;
        result.graphs_examined = resume_from->graphs_examined;
        for (const std::string& s : resume_from->level_graph6) {
            Graph g = graph6_decode(s);
            level.push_back({canonical_form(g), g});
        }
    } else {
        Graph empty(n);
        level.push_back({canonical_form(empty), empty});
        result.graphs_examined = 1;
        std::vector<std::string> saturated = saturated_of_level(level, spec);
        if (!saturated.empty()) return finish(0, std::move(saturated));
    }

    const int max_level = n * (n - 1) / 2;
    for (;;) {
        if (on_level) {
            SearchCheckpoint ckpt;
            ckpt.n = n;
            ckpt.spec = spec;
            ckpt.completed_level = m;
            ckpt.graphs_examined = result.graphs_examined;
            for (const LevelEntry& e : level) ckpt.level_graph6.push_back(graph6_encode(e.graph));
            on_level(ckpt);
        }
        if (edge_budget && m >= *edge_budget) {
            result.budget_exhausted = true;
            return finish(std::nullopt, {});
        }
        if (m >= max_level || level.empty()) return finish(std::nullopt, {});
        level = next_level(level, prune, &result.graphs_examined);
        ++m;
        std::vector<std::string> saturated = saturated_of_level(level, spec);
        if (!saturated.empty()) return finish(m, std::move(saturated));
    }
}

}  // namespace

SearchResult sat_exact(int n, const LinearForestSpec& spec, std::optional<int> edge_budget) {
    return run_sat_search(n, spec, edge_budget, nullptr, nullptr);
}

SearchResult sat_exact_resumable(int n, const LinearForestSpec& spec,
                                 std::optional<int> edge_budget,
                                 const SearchCheckpoint* resume_from,
                                 const std::function<void(const SearchCheckpoint&)>& on_level) {
    return run_sat_search(n, spec, edge_budget, resume_from, on_level);
}

SearchResult sat_bruteforce_oracle(int n, const LinearForestSpec& spec) {
    if (n < 0 || n > 7)
        throw std::invalid_argument("sat_bruteforce_oracle: bound is n <= 7");
    auto start = std::chrono::steady_clock::now();
    SearchResult result;
    result.n = n;
    result.spec = spec;

    std::vector<std::pair<int, int>> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    const int np = static_cast<int>(all_pairs.size());

    for (int m = 0; m <= np; ++m) {
        std::set<std::string> saturated;
        // All labeled graphs with exactly m edges.
        std::vector<int> idx(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) idx[i] = i;
        bool more = m <= np;
        while (more) {
            Graph g(n);
            for (int i : idx) g.add_edge(all_pairs[static_cast<std::size_t>(i)].first,
                                         all_pairs[static_cast<std::size_t>(i)].second);
            ++result.graphs_examined;
            if (check_saturated(g, spec).saturated)
                saturated.insert(graph6_encode(canonical_relabel(g)));
            int pos = m - 1;
            while (pos >= 0 && idx[pos] == np - m + pos) --pos;
            if (pos < 0) {
                more = false;
            } else {
                ++idx[pos];
                for (int i = pos + 1; i < m; ++i) idx[i] = idx[i - 1] + 1;
            }
            if (m == 0) more = false;
        }
        if (!saturated.empty()) {
            result.sat_value = m;
            result.extremal_graph6.assign(saturated.begin(), saturated.end());
            break;
        }
    }
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<Graph> all_saturated_graphs(int n, const LinearForestSpec& spec) {
    check_enum_bound(n);
    std::vector<Graph> out;
    if (n < spec.vertex_demand()) {
        out.push_back(make_clique(n));
        return out;
    }
    auto prune = [&](const Graph& g) { return !is_h_free(g, spec); };
    enumerate_graphs_pruned(n, n * (n - 1) / 2, prune, [&](const Graph& g) {
        if (check_saturated(g, spec).saturated) out.push_back(g);
    });
    return out;
}

}  // namespace satgraph
