// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria run the stated universes at the stated
// tolerances; every threshold is pinned here, not deferred.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "satgraph/canonical.hpp"
#include "satgraph/containment.hpp"
#include "satgraph/families.hpp"
#include "satgraph/graph6.hpp"
#include "satgraph/json_io.hpp"
#include "satgraph/matching.hpp"
#include "satgraph/runtime.hpp"
#include "satgraph/saturation.hpp"
#include "satgraph/search.hpp"
#include "satgraph/verifier.hpp"
#include "testutil.hpp"

using namespace satgraph;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int number, std::string title, double limit_seconds)
        : number_(number), title_(std::move(title)), limit_seconds_(limit_seconds) {
        start_ = std::chrono::steady_clock::now();
    }

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            problems_.push_back(what);
            ok_ = false;
        }
    }

    void note(const std::string& text) { notes_.push_back(text); }

    ~Criterion() {
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (secs > limit_seconds_) {
            problems_.push_back("runtime " + std::to_string(secs) + "s exceeds the " +
                                std::to_string(limit_seconds_) + "s budget");
            ok_ = false;
        }
        std::printf("[%s] criterion %d: %s (%.1fs, budget %.0fs)\n", ok_ ? "PASS" : "FAIL",
                    number_, title_.c_str(), secs, limit_seconds_);
        for (const auto& n : notes_) std::printf("       note: %s\n", n.c_str());
        for (const auto& p : problems_) std::printf("       failed: %s\n", p.c_str());
        if (!ok_) ++failures;
        std::fflush(stdout);
    }

private:
    int number_;
    std::string title_;
    double limit_seconds_;
    bool ok_ = true;
    std::vector<std::string> problems_;
    std::vector<std::string> notes_;
    std::chrono::steady_clock::time_point start_;
};

template <typename F>
void for_each_labeled_graph(int n, F&& f) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
        f(g);
    }
}

// One representative per isomorphism class, n <= 7.
std::vector<Graph> canonical_representatives(int n) {
    return enumerate_graphs(n, n * (n - 1) / 2);
}

int exhaustive_tutte_berge_min(const Graph& g) {
    int n = g.order();
    int best = kMaxVertices * 2;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        int value = n + popcount(s) - odd_components_after_removal(g, s);
        best = std::min(best, value);
    }
    return best / 2;
}

// --- criteria -----------------------------------------------------------------

void criterion1() {
    Criterion crit(1, "matching number equals the exhaustive subset minimum", 120);
    long checked = 0;
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : canonical_representatives(n)) {
            ++checked;
            if (max_matching(g).size != exhaustive_tutte_berge_min(g)) {
                crit.expect(false, "canonical graph " + graph6_encode(g));
                return;
            }
        }
    std::mt19937_64 rng(20260809);
    for (int trial = 0; trial < 2000; ++trial) {
        int n = 1 + static_cast<int>(test::rng_below(rng, 14));
        Graph g = test::random_graph(rng, n, 1 + static_cast<int>(test::rng_below(rng, 3)), 4);
        ++checked;
        if (max_matching(g).size != exhaustive_tutte_berge_min(g)) {
            crit.expect(false, "random graph " + graph6_encode(g));
            return;
        }
    }
    crit.note("checked " + std::to_string(checked) + " graphs");
}

void criterion2() {
    Criterion crit(2, "containment agrees with the injection oracle on all n <= 7 classes", 300);
    long checked = 0;
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : canonical_representatives(n))
            for (int k = 2; k <= 7; ++k)
                for (int t = 0; k + 2 * t <= n; ++t) {
                    LinearForestSpec spec{k, t};
                    ++checked;
                    bool fast = contains_linear_forest(g, spec).has_value();
                    bool slow = brute_force_contains(g, spec);
                    if (fast != slow) {
                        std::ostringstream what;
                        what << graph6_encode(g) << " spec " << k << "," << t << " fast=" << fast;
                        crit.expect(false, what.str());
                        return;
                    }
                }
    crit.note("checked " + std::to_string(checked) + " (graph, spec) pairs");
}

void criterion3() {
    Criterion crit(3, "exact saturation numbers for doubled-edge patterns", 600);

    SearchResult r4 = sat_exact(4, {2, 1});
    crit.expect(r4.sat_value == 3, "sat(4, 2P_2) = 3");
    std::set<CanonicalForm> got;
    for (const auto& s : r4.extremal_graph6) got.insert(canonical_form(graph6_decode(s)));
    std::set<CanonicalForm> want{
        canonical_form(disjoint_union(make_clique(3), make_empty(1))),
        canonical_form(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}))};
    crit.expect(got == want, "extremal set at n=4 is {K_3+K_1, K_{1,3}}");

    SearchResult r6 = sat_exact(6, {2, 1});
    crit.expect(r6.sat_value == 3, "sat(6, 2P_2) = 3");
    bool k3_pad = false;
    for (const auto& s : r6.extremal_graph6)
        if (is_isomorphic(graph6_decode(s), disjoint_union(make_clique(3), make_empty(3))))
            k3_pad = true;
    crit.expect(k3_pad, "K_3 + empty among the n=6 extremal graphs");

    SearchResult r9 = sat_exact(9, {2, 2});
    crit.expect(r9.sat_value == 6, "sat(9, 3P_2) = 6");
    bool two_k3_pad = false;
    Graph two_k3 =
        disjoint_union(disjoint_union(make_clique(3), make_clique(3)), make_empty(3));
    for (const auto& s : r9.extremal_graph6)
        if (is_isomorphic(graph6_decode(s), two_k3)) two_k3_pad = true;
    crit.expect(two_k3_pad, "2K_3 + empty among the n=9 extremal graphs");
}

void criterion4() {
    Criterion crit(4, "clique-plus-fans constructions certify at 3t+25 edges", 600);
    struct Case {
        int t, n, c;
        std::vector<int> fans;
    };
    for (const Case& item : {Case{1, 30, 0, {}}, Case{2, 33, 1, {}}, Case{3, 36, 2, {}}}) {
        Graph g = make_extremal_p7(item.n, item.c, item.fans, item.t);
        std::string label = "t=" + std::to_string(item.t) + ", n=" + std::to_string(item.n);
        crit.expect(g.edge_count() == 3 * item.t + 25, label + ": edge count");
        SaturationVerdict verdict = check_saturated(g, {7, item.t});
        crit.expect(verdict.saturated, label + ": certified saturated");
        if (verdict.saturated) {
            ValidationResult validation = validate_certificate(g, verdict.certificate);
            crit.expect(validation.ok, label + ": revalidation (" + validation.violation + ")");
            // Round-trip the certificate through its JSON form as well.
            SaturationCertificate back =
                certificate_from_json(to_json(verdict.certificate));
            crit.expect(validate_certificate(g, back).ok, label + ": JSON round trip");
        }
    }
}

void criterion5() {
    Criterion crit(5, "saturated forest at n = 41", 1800);
    SaturationForestPlan plan = plan_saturation_forest(41);
    Graph h = realize(plan);
    crit.note("plan candidate " + std::to_string(plan.candidate) + ", designated pair (" +
              std::to_string(plan.global_x()) + "," + std::to_string(plan.global_y()) + ")");

    crit.expect(h.order() == 41, "41 vertices");
    crit.expect(is_acyclic(h), "forest");
    crit.expect(h.edge_count() == 39, "39 = 41 - floor(41/14) edges");
    crit.expect(!contains_path(h, 7).has_value(), "P_7-free");

    SaturationVerdict verdict = check_saturated(h, {7, 5});
    crit.expect(verdict.saturated, "certified (P_7+5P_2)-saturated");
    if (verdict.saturated)
        crit.expect(validate_certificate(h, verdict.certificate).ok, "certificate revalidates");

    // alpha_7 after adding a non-edge: the criterion pins the exact value
    // 5q-5 = 5 on a 50-edge sample plus every orbit representative.
    auto nonedges = complement_nonedges(h);
    auto orbits = pair_orbits(h, nonedges);
    std::vector<std::pair<int, int>> sample;
    for (const auto& orbit : orbits) sample.push_back(orbit.rep);
    std::size_t orbit_count = sample.size();
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i)
        sample.push_back(nonedges[test::rng_below(rng, nonedges.size())]);

    int min_alpha = 1 << 20, max_alpha = -1;
    long violations = 0;
    std::pair<int, int> first_violation{-1, -1};
    for (auto [u, v] : sample) {
        Graph he = h;
        he.add_edge(u, v);
        auto a7 = alpha_k(he, 7);
        int value = a7.value_or(-1);
        min_alpha = std::min(min_alpha, value);
        max_alpha = std::max(max_alpha, value);
        if (value != 5) {
            if (violations == 0) first_violation = {u, v};
            ++violations;
        }
    }
    {
        Graph he = h;
        he.add_edge(plan.global_x(), plan.global_y());
        auto a7 = alpha_k(he, 7);
        crit.note("alpha_7 at the designated pair = " + std::to_string(a7.value_or(-1)));
    }
    crit.note("alpha_7 over " + std::to_string(orbit_count) + " orbit reps + 50 samples: min " +
              std::to_string(min_alpha) + ", max " + std::to_string(max_alpha));
    crit.expect(min_alpha >= 5, "alpha_7 >= 5 for every sampled non-edge (saturation)");
    std::ostringstream exact;
    exact << "alpha_7 == 5 for every sampled non-edge (violations: " << violations;
    if (violations) exact << ", first at " << first_violation.first << "-"
                          << first_violation.second;
    exact << ")";
    crit.expect(violations == 0, exact.str());
}

void criterion6() {
    Criterion crit(6, "P_7-free classification is exhaustive for 7 <= n <= 9", 1800);
    LemmaReport report = verify_lemma5(9);
    crit.expect(report.passed(), "zero counterexamples");
    crit.expect(!report.vacuous, "universe nonempty");
    crit.note("instances checked: " + std::to_string(report.instances_checked));
    for (const auto& cx : report.counterexamples) {
        crit.note("counterexample: " + cx);
        break;
    }
}

void criterion7() {
    Criterion crit(7, "degree-2 / small-component / growth sweeps at n <= 7", 900);
    SweepRange range;  // k <= 5, t <= 2, n <= 7
    LemmaReport l2 = verify_lemma2(range);
    crit.expect(l2.passed(), "degree-2 neighbours adjacent: " +
                                 std::to_string(l2.counterexamples.size()) + " counterexamples");
    crit.expect(!l2.vacuous, "degree-2 sweep nonempty");

    LemmaReport l15 = verify_lemma15(range);
    crit.expect(l15.passed(), "small components are odd cliques");
    crit.note(std::string("small-component sweep ") +
              (l15.vacuous ? "vacuous" : ("checked " + std::to_string(l15.instances_checked))));

    LemmaReport obs = verify_observation(range);
    crit.expect(obs.passed(), "per-component growth alternative");
    crit.expect(!obs.vacuous, "growth sweep nonempty");
}

void criterion8() {
    Criterion crit(8, "full-scale minimality is out of reach; substitutes ran", 60);
    // Verifying the minimum at n >= 30 needs exhaustive search far beyond
    // n <= 10; criteria 3-7 stand in. This records the substitution and
    // sanity-checks the formula arithmetic used by the constructions.
    for (int t = 1; t <= 5; ++t) {
        int formula = std::min(3 * t + 25, 41 - 41 / 14);
        crit.expect(formula == (t <= 4 ? 3 * t + 25 : 39),
                    "min{3t+25, n - floor(n/14)} arithmetic at n=41, t=" + std::to_string(t));
    }
    crit.note("minimum-edge verification at n >= 30 is explicitly not reproducible here");
}

void criterion9() {
    Criterion crit(9, "byte-identical artifacts across thread counts", 300);
    std::vector<std::string> artifacts;
    for (int threads : {1, 4}) {
        set_worker_count(threads);
        std::ostringstream blob;
        SearchResult r = sat_exact(7, {3, 1});
        blob << to_json(r, false).dump(2) << '\n';
        Graph g = disjoint_union(make_clique(8), make_empty(22));
        SaturationVerdict verdict = check_saturated(g, {7, 1});
        blob << to_json(verdict.certificate).dump(2) << '\n';
        LemmaReport report = verify_lemma5(8);
        blob << render_report_text(report) << '\n';
        for (const Graph& rep : enumerate_graphs(6, 15)) blob << graph6_encode(rep) << '\n';
        artifacts.push_back(blob.str());
    }
    set_worker_count(1);
    crit.expect(artifacts[0] == artifacts[1], "thread count changes no output byte");
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
