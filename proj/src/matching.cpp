#include "satgraph/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace satgraph {

namespace {

// Edmonds' blossom algorithm, array flavour: repeated BFS from each exposed
// vertex, contracting odd cycles via base[] until an augmenting path appears.
class Blossom {
public:
    explicit Blossom(const Graph& g) : g_(g), n_(g.order()) {
        match_.assign(static_cast<std::size_t>(n_), -1);
    }

    std::vector<int> solve() {
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1) augment_from(v);
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<bool> used(static_cast<std::size_t>(n_), false);
        for (;;) {
            a = base_[a];
            used[a] = true;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (used[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = true;
            blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        in_queue_.assign(static_cast<std::size_t>(n_), false);
        parent_.assign(static_cast<std::size_t>(n_), -1);
        base_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) base_[v] = v;

        std::vector<int> queue;
        queue.push_back(root);
        in_queue_[root] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            auto nbrs = to_vertex_list(g_.neighbors(v));
            for (int to : nbrs) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    // Odd cycle: contract the blossom.
                    int cur_base = lca(v, to);
                    blossom_.assign(static_cast<std::size_t>(n_), false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i)
                        if (blossom_[base_[i]]) {
                            base_[i] = cur_base;
                            if (!in_queue_[i]) {
                                in_queue_[i] = true;
                                queue.push_back(i);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    in_queue_[match_[to]] = true;
                    queue.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    void augment_from(int root) {
        int v = find_path(root);
        if (v == -1) return;
        while (v != -1) {
            int pv = parent_[v], ppv = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = ppv;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> in_queue_;
    std::vector<bool> blossom_;
};

void brute_recurse(const Graph& g, VertexSet avail, int current, int& best) {
    if (avail == 0) {
        best = std::max(best, current);
        return;
    }
    if (current + popcount(avail) / 2 <= best) return;  // bound
    int v = lowest_vertex(avail);
    avail &= ~bit(v);
    brute_recurse(g, avail, current, best);  // v stays unmatched
    for_each_vertex(g.neighbors(v) & avail, [&](int u) {
        brute_recurse(g, avail & ~bit(u), current + 1, best);
    });
}

std::vector<std::pair<int, int>> brute_witness(const Graph& g, VertexSet avail, int need) {
    // Recover one maximum matching deterministically, smallest vertex first.
    if (need == 0) return {};
    int v = lowest_vertex(avail);
    VertexSet rest = avail & ~bit(v);
    int best = 0;
    brute_recurse(g, rest, 0, best);
    if (best >= need) return brute_witness(g, rest, need);
    std::vector<int> nbrs = to_vertex_list(g.neighbors(v) & rest);
    for (int u : nbrs) {
        int sub_best = 0;
        brute_recurse(g, rest & ~bit(u), 0, sub_best);
        if (sub_best >= need - 1) {
            auto tail = brute_witness(g, rest & ~bit(u), need - 1);
            tail.insert(tail.begin(), {v, u});
            return tail;
        }
    }
    throw std::logic_error("max_matching_bruteforce: witness recovery failed");
}

}  // namespace

MatchingResult max_matching(const Graph& g) {
    Blossom blossom(g);
    std::vector<int> match = blossom.solve();
    MatchingResult result;
    for (int v = 0; v < g.order(); ++v)
        if (match[v] > v) result.edges.emplace_back(v, match[v]);
    result.size = static_cast<int>(result.edges.size());
    return result;
}

int matching_number(const Graph& g) { return max_matching(g).size; }

MatchingResult max_matching_bruteforce(const Graph& g) {
    if (g.order() > 16)
        throw std::invalid_argument("max_matching_bruteforce: oracle bound is 16 vertices");
    int best = 0;
    brute_recurse(g, g.vertex_mask(), 0, best);
    MatchingResult result;
    result.size = best;
    result.edges = brute_witness(g, g.vertex_mask(), best);
    std::sort(result.edges.begin(), result.edges.end());
    return result;
}

int odd_components_after_removal(const Graph& g, VertexSet s) {
    VertexSet remaining = g.vertex_mask() & ~s;
    int odd = 0;
    VertexSet seen = 0;
    for_each_vertex(remaining, [&](int v) {
        if (seen & bit(v)) return;
        VertexSet comp = bit(v);
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](int u) { next |= g.neighbors(u); });
            frontier = next & remaining & ~comp;
            comp |= frontier;
        }
        seen |= comp;
        if (popcount(comp) % 2 == 1) ++odd;
    });
    return odd;
}

namespace {

// Enumerate size-k subsets of the first n vertices in lexicographic order.
template <typename F>
bool for_each_subset_of_size(int n, int k, F&& f) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return false;
    for (;;) {
        VertexSet s = 0;
        for (int i : idx) s |= bit(i);
        if (f(s)) return true;
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) return false;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

}  // namespace

TutteBergeCertificate tutte_berge_certificate(const Graph& g) {
    const int n = g.order();
    const int alpha = matching_number(g);
    const int target = n - 2 * alpha;  // o(G - S) - |S| at a minimizer

    TutteBergeCertificate cert;
    cert.alpha_prime = alpha;

    if (n <= 20) {
        for (int k = 0; k <= n; ++k) {
            bool found = for_each_subset_of_size(n, k, [&](VertexSet s) {
                int o = odd_components_after_removal(g, s);
                if (o - k == target) {
                    cert.witness_set = s;
                    cert.odd_components = o;
                    return true;
                }
                return false;
            });
            if (found) return cert;
        }
        throw std::logic_error("tutte_berge_certificate: no witness found");
    }

    // Gallai-Edmonds: D = vertices missed by some maximum matching,
    // S = N(D) \ D attains the minimum.
    VertexSet d = 0;
    for (int v = 0; v < n; ++v) {
        Graph h = induced_subgraph(g, g.vertex_mask() & ~bit(v));
        if (matching_number(h) == alpha) d |= bit(v);
    }
    VertexSet s = 0;
    for_each_vertex(d, [&](int v) { s |= g.neighbors(v); });
    s &= ~d;
    int o = odd_components_after_removal(g, s);
    if (o - popcount(s) != target)
        throw std::logic_error("tutte_berge_certificate: derived witness failed verification");
    cert.witness_set = s;
    cert.odd_components = o;
    return cert;
}

bool alpha_prime_monotone_check(const Graph& g, int u, int v) {
    if (g.has_edge(u, v))
        throw std::invalid_argument("alpha_prime_monotone_check: uv is already an edge");
    Graph h = g;
    h.add_edge(u, v);
    return matching_number(h) > matching_number(g);
}

}  // namespace satgraph
