#include "satgraph/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace satgraph {

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

namespace {

// McKay-style individualization-refinement search over ordered partitions.
// Cells are kept as sorted vertex lists; the partition is a list of cells.
// Refinement is the standard count-based equitable refinement; branching
// individualizes each vertex of the first non-singleton cell, with two
// prunings: cells whose vertices are pairwise interchangeable spawn a single
// branch, and discovered automorphisms prune candidates inside the orbit of
// an already-expanded sibling (only generators fixing the current prefix
// pointwise are used, which keeps the pruning sound).
class CanonSearch {
public:
    CanonSearch(const Graph& g, const std::vector<int>& colors) : g_(g), n_(g.order()) {
        // Initial cells ordered by color value.
        std::map<int, std::vector<int>> by_color;
        for (int v = 0; v < n_; ++v) by_color[colors.empty() ? 0 : colors[v]].push_back(v);
        for (auto& [c, verts] : by_color) {
            header_.push_back(static_cast<int>(verts.size()));
            initial_cells_.push_back(std::move(verts));
        }
    }

    CanonicalForm run(std::vector<int>* best_labeling_out) {
        if (n_ == 0) return pack({});
        std::vector<std::vector<int>> part = initial_cells_;
        refine(part);
        recurse(part, {});
        if (best_labeling_out) *best_labeling_out = best_labeling_;
        return pack(best_key_);
    }

private:
    using Partition = std::vector<std::vector<int>>;

    // Equitable refinement; deterministic cell order (splits ordered by
    // neighbour count ascending, worklist processed FIFO).
    void refine(Partition& part) const {
        std::vector<std::size_t> work;
        for (std::size_t i = 0; i < part.size(); ++i) work.push_back(i);
        for (std::size_t wi = 0; wi < work.size(); ++wi) {
            if (work[wi] >= part.size()) continue;
            VertexSet splitter = 0;
            for (int v : part[work[wi]]) splitter |= bit(v);
            for (std::size_t ci = 0; ci < part.size(); ++ci) {
                auto& cell = part[ci];
                if (cell.size() <= 1) continue;
                int first_count = popcount(g_.neighbors(cell[0]) & splitter);
                bool uniform = true;
                for (int v : cell)
                    if (popcount(g_.neighbors(v) & splitter) != first_count) {
                        uniform = false;
                        break;
                    }
                if (uniform) continue;
                std::map<int, std::vector<int>> groups;
                for (int v : cell) groups[popcount(g_.neighbors(v) & splitter)].push_back(v);
                Partition replacement;
                for (auto& [cnt, verts] : groups) replacement.push_back(std::move(verts));
                part.erase(part.begin() + static_cast<std::ptrdiff_t>(ci));
                for (std::size_t k = 0; k < replacement.size(); ++k) {
                    part.insert(part.begin() + static_cast<std::ptrdiff_t>(ci + k),
                                std::move(replacement[k]));
                    work.push_back(ci + k);
                }
                // Cell indices after ci shifted; restart worklist scan over
                // fresh indices is avoided by pushing indices, stale ones are
                // re-derived via bounds check above. Re-push all indices to
                // stay conservative after a structural change.
                for (std::size_t i = 0; i < part.size(); ++i) work.push_back(i);
                break;  // part changed under us; reprocess from the worklist
            }
        }
    }

    // All vertices of the cell pairwise swappable by an automorphism fixing
    // everything else: same neighbourhood outside the cell, and the cell
    // induces a clique or an independent set.
    bool interchangeable(const std::vector<int>& cell) const {
        VertexSet mask = 0;
        for (int v : cell) mask |= bit(v);
        VertexSet outside0 = g_.neighbors(cell[0]) & ~mask;
        int inside0 = popcount(g_.neighbors(cell[0]) & mask);
        if (inside0 != 0 && inside0 != static_cast<int>(cell.size()) - 1) return false;
        for (int v : cell) {
            if ((g_.neighbors(v) & ~mask) != outside0) return false;
            if (popcount(g_.neighbors(v) & mask) != inside0) return false;
        }
        return true;
    }

    void recurse(Partition& part, const std::vector<int>& prefix) {
        std::size_t target = part.size();
        for (std::size_t i = 0; i < part.size(); ++i)
            if (part[i].size() > 1) {
                target = i;
                break;
            }
        if (target == part.size()) {
            process_leaf(part);
            return;
        }

        std::vector<int> candidates = part[target];
        bool single_branch = interchangeable(part[target]);

        std::vector<int> tried;
        for (int v : candidates) {
            if (!tried.empty()) {
                if (single_branch) break;
                if (in_orbit_of_tried(v, tried, prefix)) continue;
            }
            Partition child;
            child.reserve(part.size() + 1);
            for (std::size_t i = 0; i < part.size(); ++i) {
                if (i == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int u : part[i])
                        if (u != v) rest.push_back(u);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(part[i]);
                }
            }
            refine(child);
            std::vector<int> child_prefix = prefix;
            child_prefix.push_back(v);
            recurse(child, child_prefix);
            tried.push_back(v);
        }
    }

    bool in_orbit_of_tried(int v, const std::vector<int>& tried,
                           const std::vector<int>& prefix) {
        // Orbit of v under the subgroup generated by recorded automorphisms
        // that fix the prefix pointwise.
        std::vector<const std::vector<int>*> gens;
        for (const auto& gen : generators_) {
            bool fixes = true;
            for (int p : prefix)
                if (gen[p] != p) {
                    fixes = false;
                    break;
                }
            if (fixes) gens.push_back(&gen);
        }
        if (gens.empty()) return false;
        VertexSet orbit = bit(v);
        VertexSet frontier = orbit;
        while (frontier) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](int u) {
                for (const auto* gen : gens) next |= bit((*gen)[u]);
            });
            frontier = next & ~orbit;
            orbit |= frontier;
        }
        for (int t : tried)
            if (orbit & bit(t)) return true;
        return false;
    }

    // labeling[v] = position of v in the discrete partition.
    std::vector<std::uint8_t> leaf_key(const Partition& part, std::vector<int>& labeling) const {
        labeling.assign(static_cast<std::size_t>(n_), 0);
        std::vector<int> at_pos(static_cast<std::size_t>(n_));
        for (std::size_t i = 0; i < part.size(); ++i) {
            labeling[static_cast<std::size_t>(part[i][0])] = static_cast<int>(i);
            at_pos[i] = part[i][0];
        }
        std::vector<std::uint8_t> key((static_cast<std::size_t>(n_) * (n_ - 1) / 2 + 7) / 8, 0);
        std::size_t idx = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j, ++idx)
                if (g_.has_edge(at_pos[i], at_pos[j]))
                    key[idx / 8] |= static_cast<std::uint8_t>(1u << (idx % 8));
        return key;
    }

    void process_leaf(const Partition& part) {
        std::vector<int> labeling;
        std::vector<std::uint8_t> key = leaf_key(part, labeling);
        if (first_labeling_.empty()) {
            first_labeling_ = labeling;
            first_key_ = key;
        } else if (key == first_key_) {
            record_automorphism(first_labeling_, labeling);
        }
        if (best_key_.empty() || key < best_key_) {
            best_key_ = key;
            best_labeling_ = labeling;
        } else if (key == best_key_ && labeling != best_labeling_) {
            record_automorphism(best_labeling_, labeling);
        }
    }

    void record_automorphism(const std::vector<int>& a, const std::vector<int>& b) {
        if (generators_.size() >= 128) return;  // plenty for pruning purposes
        // a and b are labelings with identical keys: x -> b^{-1}(a(x)).
        std::vector<int> inv_b(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) inv_b[static_cast<std::size_t>(b[v])] = v;
        std::vector<int> gamma(static_cast<std::size_t>(n_));
        bool identity = true;
        for (int v = 0; v < n_; ++v) {
            gamma[v] = inv_b[static_cast<std::size_t>(a[v])];
            if (gamma[v] != v) identity = false;
        }
        if (!identity) generators_.push_back(std::move(gamma));
    }

    CanonicalForm pack(const std::vector<std::uint8_t>& key) const {
        CanonicalForm form;
        form.bytes.push_back(static_cast<std::uint8_t>(n_));
        form.bytes.push_back(static_cast<std::uint8_t>(header_.size()));
        for (int sz : header_) form.bytes.push_back(static_cast<std::uint8_t>(sz));
        form.bytes.insert(form.bytes.end(), key.begin(), key.end());
        return form;
    }

    const Graph& g_;
    int n_;
    std::vector<int> header_;  // initial color class sizes, in color order
    std::vector<std::vector<int>> initial_cells_;
    std::vector<std::vector<int>> generators_;
    std::vector<std::uint8_t> best_key_, first_key_;
    std::vector<int> best_labeling_, first_labeling_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    CanonSearch search(g, {});
    return search.run(nullptr);
}

CanonicalForm canonical_form_colored(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.order())
        throw std::invalid_argument("canonical_form_colored: color vector size mismatch");
    CanonSearch search(g, colors);
    return search.run(nullptr);
}

Graph canonical_relabel(const Graph& g) {
    CanonSearch search(g, {});
    std::vector<int> labeling;
    search.run(&labeling);
    if (g.order() == 0) return g;
    return relabel(g, labeling);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

CanonicalForm pair_orbit_key(const Graph& g, int u, int v) {
    std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
    colors[static_cast<std::size_t>(u)] = 1;
    colors[static_cast<std::size_t>(v)] = 1;
    return canonical_form_colored(g, colors);
}

std::vector<PairOrbit> pair_orbits(const Graph& g,
                                   const std::vector<std::pair<int, int>>& pairs) {
    // Cheap isomorphism-invariant pre-grouping; the exact colored canonical
    // key is only computed inside ambiguous groups.
    auto cheap = [&](std::pair<int, int> p) {
        int du = g.degree(p.first), dv = g.degree(p.second);
        if (du > dv) std::swap(du, dv);
        int common = popcount(g.neighbors(p.first) & g.neighbors(p.second));
        int adjacent = g.has_edge(p.first, p.second) ? 1 : 0;
        return (static_cast<std::int64_t>(du) << 32) | (static_cast<std::int64_t>(dv) << 16) |
               (common << 1) | adjacent;
    };
    std::map<std::int64_t, std::vector<std::pair<int, int>>> rough;
    for (auto p : pairs) {
        auto q = p.first < p.second ? p : std::pair<int, int>{p.second, p.first};
        rough[cheap(q)].push_back(q);
    }
    std::vector<PairOrbit> orbits;
    for (auto& [inv, group] : rough) {
        if (group.size() == 1) {
            orbits.push_back({group[0], {group[0]}});
            continue;
        }
        std::map<CanonicalForm, std::vector<std::pair<int, int>>> exact;
        for (auto p : group) exact[pair_orbit_key(g, p.first, p.second)].push_back(p);
        for (auto& [key, members] : exact) {
            std::sort(members.begin(), members.end());
            orbits.push_back({members.front(), members});
        }
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const PairOrbit& a, const PairOrbit& b) { return a.rep < b.rep; });
    return orbits;
}

}  // namespace satgraph
