// Command-line front end: constructors, matching solvers, covering
// oracles, and the claim-verification harness. All machine output is
// JSON with sorted keys; byte-stable for fixed inputs and seeds.
//
// Exit codes: 0 success / verified / found; 1 counterexample or
// not-found (informative outcomes); 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rc/canonical.hpp"
#include "rc/coloring.hpp"
#include "rc/covers.hpp"
#include "rc/graph.hpp"
#include "rc/matching.hpp"
#include "rc/ramsey.hpp"
#include "rc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitError = 2;

uint64_t node_budget_from_env() {
    const char* env = std::getenv("RC_NODE_BUDGET");
    if (!env) return rc::kDefaultNodeBudget;
    return std::strtoull(env, nullptr, 10);
}

rc::Shard parse_shard(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("--shard expects i/m");
    rc::Shard s;
    s.index = std::stoi(text.substr(0, slash));
    s.total = std::stoi(text.substr(slash + 1));
    if (s.total < 1 || s.index < 0 || s.index >= s.total)
        throw std::invalid_argument("--shard expects 0 <= i < m");
    return s;
}

rc::Graph parse_h(const std::string& spec) {
    if (spec == "triangle") return rc::Graph::complete(3);
    if (spec == "c5") {
        rc::Graph h(5);
        for (int i = 1; i <= 5; ++i) h.add_edge(i, i % 5 + 1);
        return h;
    }
    if (!spec.empty() && spec.front() == '{') return rc::graph_from_json_text(spec);
    return rc::read_graph(spec);
}

void emit(const std::string& json_text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << json_text << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
        out << json_text << "\n";
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json cover_json(const rc::CoverCertificate& cert) {
    return nlohmann::json::parse(rc::cover_to_json_text(cert));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-colored complete graphs: constructions, matchings, covers, claim verification"};
    app.require_subcommand(1);

    std::string shard_text = "0/1";
    uint64_t seed = 0;
    app.add_option("--shard", shard_text, "shard index/total for sharded runs");
    app.add_option("--seed", seed, "RNG seed for sampled runs");

    // construct
    auto* construct = app.add_subcommand("construct", "build a coloring");
    construct->require_subcommand(1);
    std::string out_path;
    std::vector<int> parts;
    int opt_t = 0, opt_k = 0, opt_p = 0, part_size = 0;
    auto* c_partition = construct->add_subcommand("partition", "partition-vector coloring");
    c_partition->add_option("--parts", parts, "part sizes p_1..p_t")->required();
    c_partition->add_option("-o,--output", out_path);
    auto* c_main = construct->add_subcommand("extremal-main", "sharpness coloring of the (t-1)-colored matching threshold");
    c_main->add_option("--t", opt_t)->required();
    c_main->add_option("--k", opt_k)->required();
    c_main->add_option("-o,--output", out_path);
    auto* c_cl = construct->add_subcommand("cockayne-lorimer", "[p,...,p,2p+1] coloring");
    c_cl->add_option("--t", opt_t)->required();
    c_cl->add_option("--p", opt_p)->required();
    c_cl->add_option("-o,--output", out_path);
    auto* c_nb = construct->add_subcommand("nb", "t equal parts with bipartite crossing classes");
    c_nb->add_option("--t", opt_t)->required();
    c_nb->add_option("--part-size", part_size)->required();
    c_nb->add_option("-o,--output", out_path);

    // matching
    auto* matching = app.add_subcommand("matching", "matchings in a colored K_n");
    matching->require_subcommand(1);
    std::string input_path, cert_path;
    int opt_s = 1;
    auto* m_max = matching->add_subcommand("max", "largest s-colored matching");
    m_max->add_option("--input", input_path)->required();
    m_max->add_option("--s", opt_s)->required();
    m_max->add_option("-o,--output", out_path);
    auto* m_find = matching->add_subcommand("find-guaranteed", "size-k matching missing a color");
    m_find->add_option("--input", input_path)->required();
    m_find->add_option("--k", opt_k)->required();
    m_find->add_option("-o,--output", out_path);
    auto* m_miss = matching->add_subcommand("missing-color", "perfect matching missing a color");
    m_miss->add_option("--input", input_path)->required();
    m_miss->add_option("-o,--output", out_path);
    auto* m_conn = matching->add_subcommand("connected", "largest connected monochromatic matching");
    m_conn->add_option("--input", input_path)->required();
    m_conn->add_option("-o,--output", out_path);

    // cover
    auto* cover = app.add_subcommand("cover", "covering and partition procedures");
    cover->require_subcommand(1);
    std::string h_spec = "triangle";
    int ramsey_bound = 6;
    bool partition_mode = false;
    auto* v_paths2 = cover->add_subcommand("paths2", "two-path partition of a 2-coloring");
    v_paths2->add_option("--input", input_path)->required();
    v_paths2->add_option("-o,--output", out_path);
    auto* v_comp = cover->add_subcommand("components", "best cover by s monochromatic components");
    v_comp->add_option("--input", input_path)->required();
    v_comp->add_option("--s", opt_s)->required();
    v_comp->add_flag("--partition", partition_mode, "require disjoint components (exploratory)");
    v_comp->add_option("-o,--output", out_path);
    auto* v_ryser = cover->add_subcommand("ryser", "cover by t-1 monochromatic components");
    v_ryser->add_option("--input", input_path)->required();
    v_ryser->add_option("-o,--output", out_path);
    auto* v_bpaths = cover->add_subcommand("brute-paths", "exact s-path cover, tiny n");
    v_bpaths->add_option("--input", input_path)->required();
    v_bpaths->add_option("--s", opt_s)->required();
    v_bpaths->add_option("-o,--output", out_path);
    auto* v_cyc2 = cover->add_subcommand("cycles2", "two-cycle partition of a 2-coloring, tiny n");
    v_cyc2->add_option("--input", input_path)->required();
    v_cyc2->add_option("-o,--output", out_path);
    auto* v_hg = cover->add_subcommand("h-greedy", "greedy cover by monochromatic H-copies");
    v_hg->add_option("--input", input_path)->required();
    v_hg->add_option("--h-graph", h_spec, "triangle | c5 | graph JSON (inline or path)");
    v_hg->add_option("--ramsey-bound", ramsey_bound, "R_t(H), supplied externally");
    v_hg->add_option("--s", opt_s)->required();
    v_hg->add_option("-o,--output", out_path);
    auto* v_hb = cover->add_subcommand("h-brute", "exact H-tiling cover, tiny n");
    v_hb->add_option("--input", input_path)->required();
    v_hb->add_option("--h-graph", h_spec, "triangle | c5 | graph JSON (inline or path)");
    v_hb->add_option("--s", opt_s)->required();
    v_hb->add_option("-o,--output", out_path);

    // deficiency
    auto* defic = app.add_subcommand("deficiency", "Tutte-Berge witness for a graph");
    defic->add_option("--input", input_path)->required();
    defic->add_option("-o,--output", out_path);

    // verify
    auto* verify = app.add_subcommand("verify", "verification sweeps and certificate audits");
    verify->require_subcommand(1);
    int t_max = 5, k_max = 20;
    std::string format = "json";
    auto* v_sharp = verify->add_subcommand("sharpness-main", "sharpness grid of the matching threshold");
    v_sharp->add_option("--t-max", t_max);
    v_sharp->add_option("--k-max", k_max);
    v_sharp->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
    auto* v_cert = verify->add_subcommand("certificate", "revalidate a certificate against its coloring");
    v_cert->add_option("--input", input_path)->required();
    v_cert->add_option("--cert", cert_path)->required();

    // search
    auto* search = app.add_subcommand("search", "claim verification");
    search->require_subcommand(1);
    std::string claim_name, mode_name = "raw";
    int claim_param = 0, opt_n = 0;
    uint64_t samples = 0;
    bool exhaustive = false, near_extremal = false;
    auto* s_claim = search->add_subcommand("claim", "check a named claim over colorings of K_n");
    s_claim->add_option("--name", claim_name)->required();
    s_claim->add_option("--param", claim_param, "k / p / s, as the claim requires");
    s_claim->add_option("--n", opt_n)->required();
    s_claim->add_option("--t", opt_t)->required();
    s_claim->add_flag("--exhaustive", exhaustive);
    s_claim->add_option("--mode", mode_name)->check(CLI::IsMember({"raw", "vertex", "vertex-color"}));
    s_claim->add_option("--samples", samples);
    s_claim->add_flag("--near-extremal", near_extremal, "sample perturbed partition-vector colorings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        rc::Shard shard = parse_shard(shard_text);

        if (c_partition->parsed() || c_main->parsed() || c_cl->parsed() || c_nb->parsed()) {
            rc::EdgeColoring c;
            if (c_partition->parsed())
                c = rc::partition_coloring(rc::PartitionVector{parts});
            else if (c_main->parsed())
                c = rc::extremal_main_coloring(opt_t, opt_k);
            else if (c_cl->parsed())
                c = rc::cockayne_lorimer_coloring(opt_t, opt_p);
            else
                c = rc::nb_coloring(opt_t, part_size);
            emit(rc::coloring_to_json_text(c), out_path);
            return kExitOk;
        }

        if (m_max->parsed()) {
            auto c = rc::read_coloring(input_path);
            emit(rc::certificate_to_json_text(rc::max_s_colored_matching(c, opt_s)), out_path);
            return kExitOk;
        }
        if (m_find->parsed()) {
            auto c = rc::read_coloring(input_path);
            auto cert = rc::find_missing_color_matching(c, opt_k);
            if (!cert) {
                emit("{\"status\":\"not-found\"}", out_path);
                return kExitFinding;
            }
            emit(rc::certificate_to_json_text(*cert), out_path);
            return kExitOk;
        }
        if (m_miss->parsed()) {
            auto c = rc::read_coloring(input_path);
            auto cert = rc::perfect_matching_missing_color(c);
            if (!cert) {
                emit("{\"status\":\"not-found\"}", out_path);
                return kExitFinding;
            }
            emit(rc::certificate_to_json_text(*cert), out_path);
            return kExitOk;
        }
        if (m_conn->parsed()) {
            auto c = rc::read_coloring(input_path);
            auto conn = rc::max_connected_mono_matching(c);
            nlohmann::json j = nlohmann::json::parse(rc::certificate_to_json_text(conn.cert));
            j["component"] = conn.component;
            j["component_color"] = conn.color;
            emit(j.dump(), out_path);
            return kExitOk;
        }

        if (v_paths2->parsed()) {
            auto c = rc::read_coloring(input_path);
            auto pp = rc::two_color_path_partition(c);
            rc::CoverCertificate cert;
            for (const auto& path : pp.paths) {
                auto vs = path.vertices;
                std::sort(vs.begin(), vs.end());
                cert.pieces.push_back({"path", path.color, vs});
                cert.covered += static_cast<int>(vs.size());
            }
            nlohmann::json j = cover_json(cert);
            j["probes"] = pp.probes;
            emit(j.dump(), out_path);
            return kExitOk;
        }
        if (v_comp->parsed()) {
            auto c = rc::read_coloring(input_path);
            emit(rc::cover_to_json_text(rc::component_cover(c, opt_s, partition_mode)), out_path);
            return kExitOk;
        }
        if (v_ryser->parsed()) {
            auto c = rc::read_coloring(input_path);
            auto cert = rc::ryser_cover_check(c);
            if (!cert) {
                emit("{\"status\":\"counterexample\"}", out_path);
                return kExitFinding;
            }
            emit(rc::cover_to_json_text(*cert), out_path);
            return kExitOk;
        }
        if (v_bpaths->parsed()) {
            auto c = rc::read_coloring(input_path);
            emit(rc::cover_to_json_text(rc::brute_path_cover(c, opt_s)), out_path);
            return kExitOk;
        }
        if (v_cyc2->parsed()) {
            auto c = rc::read_coloring(input_path);
            auto cert = rc::brute_cycle_partition2(c);
            if (!cert) {
                emit("{\"status\":\"counterexample\"}", out_path);
                return kExitFinding;
            }
            emit(rc::cover_to_json_text(*cert), out_path);
            return kExitOk;
        }
        if (v_hg->parsed()) {
            auto c = rc::read_coloring(input_path);
            emit(rc::cover_to_json_text(
                     rc::greedy_h_cover(c, parse_h(h_spec), ramsey_bound, opt_s)),
                 out_path);
            return kExitOk;
        }
        if (v_hb->parsed()) {
            auto c = rc::read_coloring(input_path);
            emit(rc::cover_to_json_text(rc::brute_h_tiling(c, parse_h(h_spec), opt_s)),
                 out_path);
            return kExitOk;
        }

        if (defic->parsed()) {
            auto g = rc::read_graph(input_path);
            auto w = rc::berge_witness(g);
            nlohmann::json j;
            j["x_set"] = w.x_set;
            j["odd_components"] = w.odd_components;
            j["deficiency"] = w.deficiency;
            j["max_matching"] = rc::max_matching_size(g);
            emit(j.dump(), out_path);
            return kExitOk;
        }

        if (v_sharp->parsed()) {
            bool all_sharp = true;
            nlohmann::json rows = nlohmann::json::array();
            std::ostringstream table;
            table << "t\tk\tp\tn\tmax\tsharp\n";
            for (int t = 2; t <= t_max; ++t)
                for (int k = 1; k <= k_max; ++k) {
                    auto r = rc::sharpness_check_main(t, k);
                    all_sharp = all_sharp && r.sharp;
                    nlohmann::json row;
                    row["t"] = r.t;
                    row["k"] = r.k;
                    row["p"] = r.p;
                    row["n"] = r.n;
                    row["max_matching"] = r.max_matching;
                    row["sharp"] = r.sharp;
                    rows.push_back(row);
                    table << r.t << "\t" << r.k << "\t" << r.p << "\t" << r.n << "\t"
                          << r.max_matching << "\t" << (r.sharp ? "yes" : "NO") << "\n";
                }
            if (format == "table")
                std::cout << table.str();
            else
                std::cout << rows.dump() << "\n";
            return all_sharp ? kExitOk : kExitFinding;
        }
        if (v_cert->parsed()) {
            auto c = rc::read_coloring(input_path);
            std::string text = read_file(cert_path);
            auto j = nlohmann::json::parse(text);
            std::vector<std::string> problems;
            if (j.contains("edges"))
                problems = rc::revalidate_certificate(c, rc::certificate_from_json_text(text));
            else if (j.contains("pieces"))
                problems = rc::revalidate_cover(c, rc::cover_from_json_text(text));
            else
                throw std::runtime_error("certificate json: unrecognized shape");
            if (problems.empty()) {
                std::cout << "{\"status\":\"valid\"}\n";
                return kExitOk;
            }
            nlohmann::json out;
            out["status"] = "invalid";
            out["problems"] = problems;
            std::cout << out.dump() << "\n";
            return kExitFinding;
        }

        if (s_claim->parsed()) {
            rc::Claim claim = rc::Claim::parse(claim_name, claim_param);
            rc::ClaimReport report;
            if (exhaustive) {
                rc::EnumMode mode = mode_name == "raw"            ? rc::EnumMode::Raw
                                    : mode_name == "vertex"       ? rc::EnumMode::VertexOnly
                                                                  : rc::EnumMode::VertexAndColor;
                report = rc::exhaustive_verify(opt_n, opt_t, claim, mode, shard,
                                               node_budget_from_env());
            } else {
                if (samples == 0)
                    throw std::invalid_argument("search claim: need --exhaustive or --samples");
                report = rc::random_verify(opt_n, opt_t, claim, samples, seed,
                                           near_extremal
                                               ? rc::SampleGenerator::NearExtremal
                                               : rc::SampleGenerator::Uniform);
            }
            std::cout << rc::report_to_json_text(report) << "\n";
            return report.status == rc::ClaimStatus::Counterexample ? kExitFinding
                                                                    : kExitOk;
        }

        std::cerr << "no subcommand\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
