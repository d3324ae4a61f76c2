#include "satgraph/containment.hpp"

#include <algorithm>
#include <stdexcept>

#include "satgraph/matching.hpp"

namespace satgraph {

namespace {

VertexSet reachable_within(const Graph& g, int start, VertexSet allowed) {
    VertexSet comp = bit(start);
    VertexSet frontier = comp;
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int u) { next |= g.neighbors(u); });
        frontier = next & allowed & ~comp;
        comp |= frontier;
    }
    return comp;
}

// DFS over simple paths, neighbours ascending. Visits each k-path once
// (first endpoint < last endpoint for k >= 2). visit() -> true stops.
class PathEnumerator {
public:
    PathEnumerator(const Graph& g, int k, const std::function<bool(const std::vector<int>&)>& visit)
        : g_(g), k_(k), visit_(visit) {}

    bool run() {
        if (k_ < 1 || k_ > g_.order()) return false;
        if (k_ == 1) {
            std::vector<int> path(1);
            for (int v = 0; v < g_.order(); ++v) {
                path[0] = v;
                if (visit_(path)) return true;
            }
            return false;
        }
        path_.reserve(static_cast<std::size_t>(k_));
        for (int v = 0; v < g_.order(); ++v) {
            path_.assign(1, v);
            used_ = bit(v);
            if (extend()) return true;
        }
        return false;
    }

private:
    bool extend() {
        if (static_cast<int>(path_.size()) == k_) {
            if (path_.front() < path_.back()) return visit_(path_);
            return false;
        }
        int last = path_.back();
        int remaining = k_ - static_cast<int>(path_.size());
        // A path needs `remaining` fresh vertices reachable from its tip.
        VertexSet reach = reachable_within(g_, last, ~used_ & g_.vertex_mask());
        if (popcount(reach & ~used_) < remaining) return false;
        VertexSet nbrs = g_.neighbors(last) & ~used_;
        bool stop = false;
        for_each_vertex(nbrs, [&](int v) {
            if (stop) return;
            path_.push_back(v);
            used_ |= bit(v);
            if (extend()) stop = true;
            used_ &= ~bit(v);
            path_.pop_back();
        });
        return stop;
    }

    const Graph& g_;
    int k_;
    const std::function<bool(const std::vector<int>&)>& visit_;
    std::vector<int> path_;
    VertexSet used_ = 0;
};

bool for_each_path(const Graph& g, int k, const std::function<bool(const std::vector<int>&)>& visit) {
    PathEnumerator e(g, k, visit);
    return e.run();
}

std::vector<std::pair<int, int>> map_matching_edges(const MatchingResult& m,
                                                    const std::vector<int>& ids, int take) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(take));
    for (int i = 0; i < take; ++i) {
        auto [u, v] = m.edges[static_cast<std::size_t>(i)];
        int a = ids[static_cast<std::size_t>(u)], b = ids[static_cast<std::size_t>(v)];
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Exhaustive search for t disjoint edges inside `avail`, independent of the
// blossom module; used by the brute-force oracle only.
bool has_t_disjoint_edges(const Graph& g, VertexSet avail, int t) {
    if (t == 0) return true;
    if (popcount(avail) < 2 * t) return false;
    int v = lowest_vertex(avail);
    VertexSet rest = avail & ~bit(v);
    if (has_t_disjoint_edges(g, rest, t)) return true;  // skip v
    bool found = false;
    for_each_vertex(g.neighbors(v) & rest, [&](int u) {
        if (!found && has_t_disjoint_edges(g, rest & ~bit(u), t - 1)) found = true;
    });
    return found;
}

// All ordered k-tuples forming a path, no pruning beyond adjacency; direct
// pattern injection for the oracle.
bool brute_path_then_pairs(const Graph& g, std::vector<int>& path, VertexSet used, int k, int t) {
    if (static_cast<int>(path.size()) == k)
        return has_t_disjoint_edges(g, g.vertex_mask() & ~used, t);
    for (int v = 0; v < g.order(); ++v) {
        if (used & bit(v)) continue;
        if (!path.empty() && !g.has_edge(path.back(), v)) continue;
        path.push_back(v);
        if (brute_path_then_pairs(g, path, used | bit(v), k, t)) {
            path.pop_back();
            return true;
        }
        path.pop_back();
    }
    return false;
}

}  // namespace

bool embedding_valid(const Graph& g, const LinearForestSpec& spec, const ForestEmbedding& e) {
    if (static_cast<int>(e.path.size()) != spec.path_order) return false;
    if (static_cast<int>(e.pairs.size()) != spec.pair_count) return false;
    VertexSet seen = 0;
    auto claim = [&](int v) {
        if (v < 0 || v >= g.order() || (seen & bit(v))) return false;
        seen |= bit(v);
        return true;
    };
    for (int v : e.path)
        if (!claim(v)) return false;
    for (std::size_t i = 0; i + 1 < e.path.size(); ++i)
        if (!g.has_edge(e.path[i], e.path[i + 1])) return false;
    for (auto [u, v] : e.pairs) {
        if (!claim(u) || !claim(v)) return false;
        if (!g.has_edge(u, v)) return false;
    }
    return true;
}

bool embedding_uses_pair(const ForestEmbedding& e, int u, int v) {
    for (std::size_t i = 0; i + 1 < e.path.size(); ++i) {
        int a = e.path[i], b = e.path[i + 1];
        if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    for (auto [a, b] : e.pairs)
        if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
}

std::optional<std::vector<int>> contains_path(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("contains_path: k must be positive");
    std::optional<std::vector<int>> found;
    for_each_path(g, k, [&](const std::vector<int>& p) {
        found = p;
        return true;
    });
    return found;
}

int longest_path_order(const Graph& g) {
    if (g.order() == 0) return 0;
    int best = 1;
    while (best < g.order() && contains_path(g, best + 1)) ++best;
    return best;
}

std::optional<ForestEmbedding> contains_linear_forest(const Graph& g, const LinearForestSpec& spec) {
    const int k = spec.path_order, t = spec.pair_count;
    if (k < 2 || t < 0) throw std::invalid_argument("contains_linear_forest: need k >= 2, t >= 0");
    if (spec.vertex_demand() > g.order()) return std::nullopt;

    if (k == 2) {
        // H = (t+1) P_2: answered purely by the matching number.
        MatchingResult m = max_matching(g);
        if (m.size < t + 1) return std::nullopt;
        ForestEmbedding e;
        e.path = {m.edges[0].first, m.edges[0].second};
        for (int i = 1; i <= t; ++i) e.pairs.push_back(m.edges[static_cast<std::size_t>(i)]);
        return e;
    }

    std::optional<ForestEmbedding> found;
    for_each_path(g, k, [&](const std::vector<int>& p) {
        if (t == 0) {
            found = ForestEmbedding{p, {}};
            return true;
        }
        VertexSet used = 0;
        for (int v : p) used |= bit(v);
        VertexSet rest = g.vertex_mask() & ~used;
        if (popcount(rest) < 2 * t) return false;
        std::vector<int> ids;
        Graph sub = induced_subgraph(g, rest, &ids);
        if (sub.edge_count() < t) return false;
        MatchingResult m = max_matching(sub);
        if (m.size < t) return false;
        found = ForestEmbedding{p, map_matching_edges(m, ids, t)};
        return true;
    });
    return found;
}

std::optional<int> alpha_k(const Graph& g, int k) {
    if (!contains_path(g, k)) return std::nullopt;
    const int cap = (g.order() - k) / 2;
    int best = 0;
    for_each_path(g, k, [&](const std::vector<int>& p) {
        VertexSet used = 0;
        for (int v : p) used |= bit(v);
        Graph sub = induced_subgraph(g, g.vertex_mask() & ~used);
        best = std::max(best, max_matching(sub).size);
        return best >= cap;  // cannot improve further
    });
    return best;
}

bool brute_force_contains(const Graph& g, const LinearForestSpec& spec) {
    if (g.order() > 12)
        throw std::invalid_argument("brute_force_contains: oracle bound is 12 vertices");
    if (spec.vertex_demand() > g.order()) return false;
    if (spec.path_order < 2) throw std::invalid_argument("brute_force_contains: need k >= 2");
    std::vector<int> path;
    return brute_path_then_pairs(g, path, 0, spec.path_order, spec.pair_count);
}

namespace {

bool enumerate_pair_sets(const Graph& g, VertexSet avail, int t, int min_first_vertex,
                         std::vector<std::pair<int, int>>& pairs,
                         const ForestEmbedding& base,
                         const std::function<bool(const ForestEmbedding&)>& visit) {
    if (t == 0) {
        ForestEmbedding e = base;
        e.pairs = pairs;
        return visit(e);
    }
    // Choose disjoint edges with ascending least endpoints: each unordered
    // pair set enumerated exactly once.
    bool stop = false;
    for_each_vertex(avail, [&](int u) {
        if (stop || u < min_first_vertex) return;
        for_each_vertex(g.neighbors(u) & avail & ~full_set(u + 1), [&](int v) {
            if (stop) return;
            pairs.emplace_back(u, v);
            if (enumerate_pair_sets(g, avail & ~bit(u) & ~bit(v), t - 1, u + 1, pairs, base, visit))
                stop = true;
            pairs.pop_back();
        });
    });
    return stop;
}

}  // namespace

bool for_each_forest_embedding(const Graph& g, const LinearForestSpec& spec,
                               const std::function<bool(const ForestEmbedding&)>& visit) {
    if (spec.vertex_demand() > g.order()) return false;
    return for_each_path(g, spec.path_order, [&](const std::vector<int>& p) {
        VertexSet used = 0;
        for (int v : p) used |= bit(v);
        std::vector<std::pair<int, int>> pairs;
        ForestEmbedding base{p, {}};
        return enumerate_pair_sets(g, g.vertex_mask() & ~used, spec.pair_count, 0, pairs, base,
                                   visit);
    });
}

}  // namespace satgraph
