// Command-line front end: construct the library's graph families, decide
// containment/saturation with certificates, run exact saturation-number
// searches, and run the verification harness.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "satgraph/canonical.hpp"
#include "satgraph/families.hpp"
#include "satgraph/graph6.hpp"
#include "satgraph/json_io.hpp"
#include "satgraph/runtime.hpp"
#include "satgraph/saturation.hpp"
#include "satgraph/search.hpp"
#include "satgraph/verifier.hpp"

namespace {

using namespace satgraph;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

LinearForestSpec parse_spec(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--spec", "expected \"k,t\" (e.g. 7,1)");
    int k = std::stoi(s.substr(0, comma));
    int t = std::stoi(s.substr(comma + 1));
    if (k < 2 || t < 0) throw CLI::ValidationError("--spec", "need k >= 2 and t >= 0");
    return {k, t};
}

Graph read_graph(const std::string& path) {
    if (path == "-") {
        std::string line;
        if (!std::getline(std::cin, line)) throw std::invalid_argument("empty stdin");
        return graph6_decode(line);
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        return graph6_decode(line);
    }
    throw std::invalid_argument("no graph in " + path);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path);
    out << text;
}

void emit_graph(const Graph& g, const std::string& out_path, const std::string& format) {
    std::string payload;
    if (format == "graph6")
        payload = graph6_encode(g) + "\n";
    else if (format == "dot")
        payload = dot_export(g);
    else
        throw CLI::ValidationError("--format", "expected graph6 or dot");
    write_text(out_path, payload);
}

int cmd_construct(const std::string& family, int n, int i, int j, int t, int c,
                  const std::string& fans_csv, const std::string& out_path,
                  const std::string& format) {
    Graph g;
    if (family == "fan") {
        g = make_fan(i);
    } else if (family == "ffan") {
        g = make_ffan(i, j);
    } else if (family == "delta") {
        g = make_delta_fan(i);
    } else if (family == "delta-plus") {
        g = make_delta_plus_fan(i);
    } else if (family == "extremal") {
        std::vector<int> fans;
        std::stringstream ss(fans_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) fans.push_back(std::stoi(item));
        int fan_sum = 0;
        for (int f : fans) fan_sum += f;
        if (c < 0) c = t - 1 - fan_sum;  // default: triangles absorb the slack
        g = make_extremal_p7(n, c, fans, t);
    } else if (family == "forest") {
        SaturationForestPlan plan = plan_saturation_forest(n);
        g = realize(plan);
        std::cerr << "plan: q=" << plan.q << " r=" << plan.r << " candidate=" << plan.candidate
                  << " x=" << plan.global_x() << " y=" << plan.global_y() << "\n";
    } else {
        throw CLI::ValidationError("--family",
                                   "expected fan|ffan|delta|delta-plus|extremal|forest");
    }
    emit_graph(g, out_path, format);
    std::cerr << g.order() << " vertices, " << g.edge_count() << " edges\n";
    return kExitOk;
}

int cmd_check(const std::string& input, const LinearForestSpec& spec,
              const std::string& certify_path) {
    Graph g = read_graph(input);
    SaturationVerdict verdict = check_saturated(g, spec);
    if (!certify_path.empty()) {
        ordered_json j = to_json(verdict.certificate);
        write_text(certify_path, j.dump(2) + "\n");
    }
    if (verdict.saturated) {
        std::cout << "saturated (" << verdict.edge_count << " edges, "
                  << verdict.certificate.orbits.size() << " non-edge orbits)\n";
        return kExitOk;
    }
    const auto& failure = *verdict.certificate.failure;
    if (failure.kind == SaturationCertificate::FailureKind::kContainsH) {
        std::cout << "contains H: " << to_json(failure.embedding).dump() << "\n";
    } else {
        std::cout << "H-free, not saturated: adding " << failure.nonedge.first << "-"
                  << failure.nonedge.second << " creates no copy of H\n";
    }
    return kExitViolation;
}

int cmd_validate(const std::string& input, const std::string& cert_path) {
    Graph g = read_graph(input);
    std::ifstream in(cert_path);
    if (!in) throw std::invalid_argument("cannot open " + cert_path);
    ordered_json j = ordered_json::parse(in);
    SaturationCertificate cert = certificate_from_json(j);
    ValidationResult result = validate_certificate(g, cert);
    if (result.ok) {
        std::cout << "certificate valid\n";
        return kExitOk;
    }
    std::cout << "certificate invalid: " << result.violation << "\n";
    return kExitViolation;
}

int cmd_sat_search(int n, const LinearForestSpec& spec, bool oracle, std::optional<int> budget,
                   const std::string& out_path, const std::string& sidecar,
                   const std::string& resume_path, bool timing) {
    SearchResult result;
    if (oracle) {
        result = sat_bruteforce_oracle(n, spec);
        SearchResult main = sat_exact(n, spec);
        if (main.sat_value != result.sat_value || main.extremal_graph6 != result.extremal_graph6) {
            std::cout << "oracle disagreement\n";
            return kExitViolation;
        }
        std::cout << "oracle and main agree\n";
    } else if (!resume_path.empty()) {
        SearchCheckpoint ckpt;
        const SearchCheckpoint* from = nullptr;
        {
            std::ifstream in(resume_path);
            if (in) {
                ckpt = checkpoint_from_json(ordered_json::parse(in));
                if (ckpt.n != n || !(ckpt.spec == spec))
                    throw std::invalid_argument("checkpoint does not match this search");
                from = &ckpt;
            }
        }
        result = sat_exact_resumable(n, spec, budget, from, [&](const SearchCheckpoint& c) {
            std::ofstream out(resume_path);
            out << to_json(c).dump(2) << "\n";
        });
    } else {
        result = sat_exact(n, spec, budget);
    }
    write_text(out_path, to_json(result, timing).dump(2) + "\n");
    if (!sidecar.empty()) {
        std::ofstream out(sidecar);
        for (const std::string& s : result.extremal_graph6) out << s << "\n";
    }
    if (result.budget_exhausted) {
        std::cerr << "edge budget exhausted before a saturated level\n";
        return kExitBound;
    }
    return kExitOk;
}

int cmd_verify(const std::string& lemma, int max_n, int t_max, bool mutate,
               const std::string& json_path) {
    SweepRange range;
    range.max_n = std::min(max_n, 7);
    TheoremCheckOptions theorem;
    theorem.max_t = t_max;
    theorem.mutate = mutate;

    std::vector<LemmaReport> reports;
    if (lemma == "all") {
        reports = verify_all(max_n, range, theorem);
    } else if (lemma == "2") {
        reports.push_back(verify_lemma2(range));
    } else if (lemma == "4") {
        reports.push_back(verify_lemma4(range));
    } else if (lemma == "5") {
        reports.push_back(verify_lemma5(max_n));
    } else if (lemma == "8") {
        reports.push_back(verify_lemma8(std::min(max_n + 3, 10)));
    } else if (lemma == "10") {
        reports.push_back(verify_lemma10(std::min(max_n + 3, 10)));
    } else if (lemma == "15") {
        reports.push_back(verify_lemma15(range));
    } else if (lemma == "obs") {
        reports.push_back(verify_observation(range));
    } else if (lemma == "theorem") {
        reports.push_back(verify_theorem_constructions(theorem));
    } else {
        throw CLI::ValidationError("--lemma", "expected 2|4|5|8|10|15|obs|theorem|all");
    }

    bool failed = false;
    ordered_json out = ordered_json::array();
    for (const LemmaReport& report : reports) {
        std::cout << render_report_text(report);
        out.push_back(ordered_json{{"lemma", report.lemma},
                                   {"universe", report.universe},
                                   {"instances_checked", report.instances_checked},
                                   {"counterexamples", report.counterexamples},
                                   {"vacuous", report.vacuous},
                                   {"notes", report.notes}});
        if (!report.vacuous && !report.passed()) failed = true;
    }
    if (!json_path.empty()) write_text(json_path, out.dump(2) + "\n");
    return failed ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"satgraph: saturation workbench for linear forests P_k + t P_2"};
    app.require_subcommand(1);
    app.fallthrough();

    int threads = 1;
    if (const char* env = std::getenv("SATGRAPH_THREADS")) threads = std::atoi(env);
    app.add_option("--threads", threads, "worker threads (results are independent of this)");

    // construct
    auto* construct = app.add_subcommand("construct", "build a named family graph");
    std::string family, fans_csv, out_path = "-", format = "graph6";
    int n = 0, i = 0, j = 0, t = 0, c = -1;
    construct->add_option("--family", family)->required();
    construct->add_option("--n", n);
    construct->add_option("--i", i);
    construct->add_option("--j", j);
    construct->add_option("--t", t);
    construct->add_option("--c", c);
    construct->add_option("--fans", fans_csv, "comma-separated fan orders");
    construct->add_option("--out", out_path);
    construct->add_option("--format", format, "graph6|dot");

    // check
    auto* check = app.add_subcommand("check", "saturation verdict for a graph");
    std::string check_input = "-", spec_str = "7,1", certify_path;
    check->add_option("--input", check_input);
    check->add_option("--spec", spec_str)->required();
    check->add_option("--certify", certify_path, "write the certificate JSON here");

    // validate
    auto* validate = app.add_subcommand("validate", "re-check a certificate against a graph");
    std::string validate_input = "-", validate_cert;
    validate->add_option("--input", validate_input);
    validate->add_option("--certificate", validate_cert)->required();

    // sat-search
    auto* search = app.add_subcommand("sat-search", "exact sat(n, H) with extremal graphs");
    int search_n = 0;
    std::string search_spec = "2,1", search_out = "-", sidecar, resume_path;
    bool oracle = false, timing = false;
    int budget = -1;
    search->add_option("--n", search_n)->required();
    search->add_option("--spec", search_spec)->required();
    search->add_flag("--oracle", oracle, "cross-check against the labeled-graph oracle");
    search->add_option("--budget", budget, "edge-level budget");
    search->add_option("--out", search_out);
    search->add_option("--sidecar", sidecar, "newline-delimited graph6 of extremal graphs");
    search->add_option("--resume", resume_path, "checkpoint file to write/continue");
    search->add_flag("--timing", timing, "include elapsed time in the JSON artifact");

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper", "run the verification harness");
    std::string lemma = "all", verify_json;
    int max_n = 7, t_max = 3;
    bool mutate = false;
    verify->add_option("--lemma", lemma, "2|4|5|8|10|15|obs|theorem|all");
    verify->add_option("--max-n", max_n);
    verify->add_option("--t-max", t_max);
    verify->add_flag("--mutate", mutate, "self-test: corrupt a construction on purpose");
    verify->add_option("--json", verify_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        set_worker_count(std::max(1, threads));
        if (construct->parsed())
            return cmd_construct(family, n, i, j, t, c, fans_csv, out_path, format);
        if (check->parsed()) return cmd_check(check_input, parse_spec(spec_str), certify_path);
        if (validate->parsed()) return cmd_validate(validate_input, validate_cert);
        if (search->parsed())
            return cmd_sat_search(search_n, parse_spec(search_spec), oracle,
                                  budget >= 0 ? std::optional<int>(budget) : std::nullopt,
                                  search_out, sidecar, resume_path, timing);
        if (verify->parsed()) return cmd_verify(lemma, max_n, t_max, mutate, verify_json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBound;
    }
    return kExitUsage;
}
