#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nbcolor/certificates.hpp"
#include "nbcolor/deformed_laplacian.hpp"
#include "nbcolor/eligibility.hpp"
#include "nbcolor/errors.hpp"
#include "nbcolor/experiment.hpp"
#include "nbcolor/graph.hpp"
#include "nbcolor/nb_operator.hpp"
#include "nbcolor/rng.hpp"
#include "nbcolor/rounding.hpp"
#include "nbcolor/sdp_oracle.hpp"
#include "nbcolor/vector_coloring.hpp"

namespace {

using nlohmann::json;
using namespace nbcolor;

struct GlobalOpts {
    std::uint64_t seed = 1;
    double tol = 1e-8;
    int threads = 1;
    std::string format = "text";
};

void write_out(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

json eligibility_json(const EligibilityReport& rep) {
    json j;
    j["connected"] = rep.connected;
    j["two_core_size"] = rep.two_core_size;
    j["is_cycle"] = rep.is_cycle;
    j["is_bipartite"] = rep.is_bipartite;
    j["period"] = rep.period;
    j["min_core_degree"] = rep.min_core_degree;
    if (rep.girth_value) j["girth"] = *rep.girth_value;
    else j["girth"] = nullptr;
    j["m_max"] = rep.m_max;
    j["eligible"] = rep.eligible;
    j["reason"] = rep.reason;
    return j;
}

int cmd_analyze(const GlobalOpts& go, const std::string& graph_file) {
    Graph g = parse_edge_list_file(graph_file);
    auto rep = classify(g);
    json j = eligibility_json(rep);
    j["n"] = g.vertex_count();
    j["edges"] = g.edge_count();
    if (rep.eligible) {
        auto core = two_core(g).core;
        auto idx = edge_index(core);
        auto pd = perron(core, idx);
        auto loc = smallest_real_eig_B(core, go.tol);
        j["rho"] = pd.rho;
        j["perron_residual"] = pd.residual;
        j["r_star"] = loc.r_star;
        j["r_star_method"] = loc.method == RealEigMethod::baseline_minus_one
                                 ? "baseline_minus_one"
                                 : (loc.method == RealEigMethod::bisection_crossing
                                        ? "bisection_crossing"
                                        : "extended_scan");
    }
    if (go.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n=" << g.vertex_count() << " edges=" << g.edge_count() << "\n";
        std::cout << "two_core_size=" << rep.two_core_size
                  << " girth=" << (rep.girth_value ? std::to_string(*rep.girth_value) : "acyclic")
                  << " m_max=" << rep.m_max << "\n";
        std::cout << "bipartite=" << rep.is_bipartite << " cycle=" << rep.is_cycle
                  << " period=" << rep.period << "\n";
        if (rep.eligible)
            std::cout << "eligible=1 rho=" << j["rho"].get<double>()
                      << " r_star=" << j["r_star"].get<double>() << " ("
                      << j["r_star_method"].get<std::string>() << ")\n";
        else
            std::cout << "eligible=0 reason: " << rep.reason << "\n";
    }
    return 0;
}

int cmd_certify(const GlobalOpts& go, const std::string& graph_file, const std::string& r_flag,
                const std::string& emit_path) {
    Graph g = parse_edge_list_file(graph_file);
    double r;
    if (r_flag == "auto") {
        auto rep = classify(g);
        if (!rep.eligible) throw eligibility_error("certify: " + rep.reason);
        auto core = two_core(g).core;
        double r_star = smallest_real_eig_B(core, go.tol).r_star;
        r = optimal_r(g, r_star);
        for (int k = 0; k < 50 && !is_psd(g, r); ++k) r -= 4.0 * std::max(go.tol, 1e-9);
    } else {
        r = std::stod(r_flag);
    }
    json meta;
    meta["generator"] = "cli_certify";
    meta["graph_file"] = graph_file;
    Weighting w;
    auto cert = emit_certificate(g, r, w, meta.dump());
    std::string text = certificate_to_json(cert);
    if (!emit_path.empty()) write_out(emit_path, text + "\n");
    if (go.format == "json") {
        std::cout << text << "\n";
    } else {
        std::cout << "r=" << cert.r << " lower_bound=" << cert.claimed_bound << "\n";
        if (!emit_path.empty()) std::cout << "certificate written to " << emit_path << "\n";
    }
    return 0;
}

int cmd_verify(const GlobalOpts& go, const std::string& graph_file,
               const std::string& cert_file) {
    Graph g = parse_edge_list_file(graph_file);
    std::ifstream in(cert_file);
    if (!in) throw parse_error("cannot open certificate file: " + cert_file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    LowerBoundCertificate cert;
    try {
        cert = certificate_from_json(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("certificate JSON: ") + e.what());
    }
    auto res = verify_certificate(g, cert);
    if (go.format == "json") {
        json j{{"ok", res.ok}, {"reason", res.reason}, {"evidence", res.evidence}};
        std::cout << j.dump(2) << "\n";
    } else if (res.ok) {
        std::cout << "accept: chi_v >= " << cert.claimed_bound << "\n";
    } else {
        std::cout << "reject: " << res.reason << " (evidence " << res.evidence << ")\n";
    }
    return res.ok ? 0 : 2;
}

int auto_m(const Graph& g) {
    auto rep = classify(g);
    if (!rep.eligible) throw eligibility_error("coloring: " + rep.reason);
    if (rep.m_max < 2)
        throw eligibility_error("coloring: girth " +
                                (rep.girth_value ? std::to_string(*rep.girth_value) : "inf") +
                                " too small (m_max = " + std::to_string(rep.m_max) +
                                ", need m >= 2)");
    return rep.m_max;
}

int cmd_color(const GlobalOpts& go, const std::string& graph_file, const std::string& m_flag,
              int maxcut_trials, const std::string& out_prefix) {
    Graph g = parse_edge_list_file(graph_file);
    int m = m_flag == "auto" ? auto_m(g) : std::stoi(m_flag);
    auto vc = build_vectors(g, m);
    auto check = verify_coloring(g, vc, vc.kappa);
    auto wm = make_walk_model(g);
    double rho = wm.perron.rho;
    double guarantee = 1.0 + (rho + 1.0) / (2.0 * (1.0 - 1.0 / m) * std::sqrt(rho));

    json j;
    j["m"] = m;
    j["rho"] = rho;
    j["kappa"] = vc.kappa;
    j["kappa_guarantee"] = guarantee;
    j["verified"] = check.ok;
    j["worst_edge_entry"] = check.worst_entry;
    if (!out_prefix.empty()) {
        write_out(out_prefix + ".gram.mtx", gram_matrix_market(vc));
        write_out(out_prefix + ".vectors.txt", vectors_text(vc));
        j["gram_file"] = out_prefix + ".gram.mtx";
        j["vectors_file"] = out_prefix + ".vectors.txt";
    }
    if (maxcut_trials > 0) {
        auto cut = gw_round(g, vc, maxcut_trials, go.seed);
        auto lb = expected_cut_lb(g, m, rho);
        j["maxcut"] = json::parse(cut_result_to_json(cut));
        j["expected_cut_bound"] = lb.bound;
    }
    if (go.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "m=" << m << " rho=" << rho << " kappa=" << vc.kappa
                  << " guarantee=" << guarantee << " verified=" << check.ok << "\n";
        if (maxcut_trials > 0)
            std::cout << "mean_cut=" << j["maxcut"]["mean_cut"].get<double>()
                      << " best_cut=" << j["maxcut"]["best_cut"].get<std::int64_t>()
                      << " bound=" << j["expected_cut_bound"].get<double>() << "\n";
    }
    return check.ok ? 0 : 3;
}

int cmd_maxcut(const GlobalOpts& go, const std::string& graph_file, const std::string& m_flag,
               int trials) {
    Graph g = parse_edge_list_file(graph_file);
    int m = m_flag == "auto" ? auto_m(g) : std::stoi(m_flag);
    auto vc = build_vectors(g, m);
    auto wm = make_walk_model(g);
    auto cut = gw_round(g, vc, trials, go.seed);
    auto lb = expected_cut_lb(g, m, wm.perron.rho);
    if (go.format == "json") {
        json j = json::parse(cut_result_to_json(cut));
        j["expected_cut_bound"] = lb.bound;
        j["er_form"] = lb.er_form;
        j["dms_reference"] = lb.dms_reference;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "trials=" << cut.trials << " mean_cut=" << cut.mean_cut
                  << " best_cut=" << cut.best_cut << " bound=" << lb.bound << "\n";
    }
    return 0;
}

int cmd_oracle(const GlobalOpts& go, const std::string& graph_file) {
    Graph g = parse_edge_list_file(graph_file);
    OracleOptions opts;
    opts.seed = go.seed;
    auto res = chi_v_exact(g, 1e-4, opts);
    if (go.format == "json") {
        json j{{"chi_v", res.chi_v},
               {"conclusive", res.conclusive},
               {"bracket", res.bracket},
               {"dual_evidence", res.dual_evidence},
               {"iterations", res.iterations}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "chi_v=" << res.chi_v << " conclusive=" << res.conclusive
                  << " bracket=" << res.bracket << "\n";
    }
    if (!res.conclusive) throw convergence_error("oracle inconclusive", res.dual_evidence);
    return 0;
}

int cmd_ihara_check(const GlobalOpts& go, const std::string& graph_file, int samples) {
    Graph g = parse_edge_list_file(graph_file);
    auto rng = make_rng(go.seed);
    std::uniform_real_distribution<double> unif(-5.0, 5.0);
    std::vector<std::complex<double>> zs;
    while (static_cast<int>(zs.size()) < samples) {
        double z = unif(rng);
        if (std::abs(std::abs(z) - 1.0) < 1e-3) continue;
        zs.emplace_back(z, 0.0);
    }
    double resid = ihara_bass_check(g, zs);
    if (go.format == "json") {
        json j{{"samples", samples}, {"max_relative_residual", resid}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "samples=" << samples << " max_relative_residual=" << resid << "\n";
    }
    return 0;
}

int cmd_er_sweep(const GlobalOpts& go, int n, const std::vector<double>& d_values, int seeds,
                 const std::string& out_csv, const std::string& certs_dir) {
    SweepOptions opts;
    opts.n = n;
    opts.d_values = d_values;
    opts.seeds = seeds;
    opts.base_seed = go.seed;
    opts.threads = go.threads;
    opts.eig_tol = std::max(go.tol, 1e-8);
    auto res = er_sweep(opts);
    std::string csv = rows_to_csv(res.rows);
    if (!out_csv.empty()) write_out(out_csv, csv);
    else std::cout << csv;
    if (!certs_dir.empty()) {
        int k = 0;
        for (const auto& cert : res.certificates)
            write_out(certs_dir + "/cert_" + std::to_string(k++) + ".json",
                      certificate_to_json(cert) + "\n");
    }
    std::cerr << res.summary << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-backtracking spectra: vector chromatic bounds, colorings, cuts"};
    app.require_subcommand(1);

    GlobalOpts go;
    app.add_option("--seed", go.seed, "base RNG seed");
    app.add_option("--tol", go.tol, "numerical tolerance / bisection bracket");
    app.add_option("--threads", go.threads, "worker threads for sweeps");
    app.add_option("--format", go.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    std::string graph_file, cert_file, r_flag = "auto", m_flag = "auto";
    std::string emit_path, out_prefix, out_csv, certs_dir;
    int maxcut_trials = 0, trials = 1000, samples = 20, n = 1000, seeds = 10;
    std::vector<double> d_values;

    auto* analyze = app.add_subcommand("analyze", "structural and spectral report");
    analyze->add_option("graph", graph_file)->required();

    auto* certify = app.add_subcommand("certify", "emit a lower-bound certificate");
    certify->add_option("graph", graph_file)->required();
    certify->add_option("--r", r_flag, "auto or an explicit negative value");
    certify->add_option("--emit", emit_path, "certificate output path");

    auto* verify = app.add_subcommand("verify", "verify a certificate against a graph");
    verify->add_option("graph", graph_file)->required();
    verify->add_option("certificate", cert_file)->required();

    auto* color = app.add_subcommand("color", "build and verify a vector coloring");
    color->add_option("graph", graph_file)->required();
    color->add_option("--m", m_flag, "auto or explicit walk depth");
    color->add_option("--maxcut", maxcut_trials, "also round with this many trials");
    color->add_option("--out", out_prefix, "prefix for gram/vector files");

    auto* maxcut = app.add_subcommand("maxcut", "Goemans-Williamson rounding");
    maxcut->add_option("graph", graph_file)->required();
    maxcut->add_option("--m", m_flag, "auto or explicit walk depth");
    maxcut->add_option("--trials", trials, "hyperplane trials");

    auto* oracle = app.add_subcommand("oracle", "exact vector chromatic number (small n)");
    oracle->add_option("graph", graph_file)->required();

    auto* ihara = app.add_subcommand("ihara-check", "determinant identity residual");
    ihara->add_option("graph", graph_file)->required();
    ihara->add_option("--samples", samples, "number of sample points");

    auto* sweep = app.add_subcommand("er-sweep", "random-graph certification sweep");
    sweep->add_option("--n", n, "vertex count")->required();
    sweep->add_option("--d", d_values, "average degrees")->required();
    sweep->add_option("--seeds", seeds, "seeds per degree");
    sweep->add_option("--out", out_csv, "CSV output path (default stdout)");
    sweep->add_option("--certs", certs_dir, "directory for per-row certificates");

    // allow the global options (--seed, --format, ...) after the subcommand name
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(go, graph_file);
        if (certify->parsed()) return cmd_certify(go, graph_file, r_flag, emit_path);
        if (verify->parsed()) return cmd_verify(go, graph_file, cert_file);
        if (color->parsed()) return cmd_color(go, graph_file, m_flag, maxcut_trials, out_prefix);
        if (maxcut->parsed()) return cmd_maxcut(go, graph_file, m_flag, trials);
        if (oracle->parsed()) return cmd_oracle(go, graph_file);
        if (ihara->parsed()) return cmd_ihara_check(go, graph_file, samples);
        if (sweep->parsed()) return cmd_er_sweep(go, n, d_values, seeds, out_csv, certs_dir);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 4;
    } catch (const eligibility_error& e) {
        std::cerr << "ineligible input: " << e.what() << "\n";
        return 2;
    } catch (const convergence_error& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return 3;
    } catch (const size_error& e) {
        std::cerr << "ineligible input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
