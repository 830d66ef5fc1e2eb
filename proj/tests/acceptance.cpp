// Acceptance gate: one line per criterion, PASS/FAIL, nonzero exit on any
// failure. Heavy randomized parts are seeded and deterministic.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "corpus.hpp"
#include "nbcolor/certificates.hpp"
#include "nbcolor/deformed_laplacian.hpp"
#include "nbcolor/eligibility.hpp"
#include "nbcolor/experiment.hpp"
#include "nbcolor/graph.hpp"
#include "nbcolor/nb_operator.hpp"
#include "nbcolor/rng.hpp"
#include "nbcolor/rounding.hpp"
#include "nbcolor/sdp_oracle.hpp"
#include "nbcolor/vector_coloring.hpp"

using namespace nbcolor;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("criterion %d: %s — %s\n", criterion, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criterion 1: determinant identity -------------------------------------

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    auto rng = make_rng(20260823);
    std::uniform_real_distribution<double> unif(-5.0, 5.0);
    std::vector<std::complex<double>> zs;
    while (zs.size() < 20) {
        double z = unif(rng);
        if (std::abs(std::abs(z) - 1.0) < 1e-2) continue;
        zs.emplace_back(z, 0.0);
    }

    double worst = 0.0;
    std::int64_t graphs = 0;
    for (int n = 2; n <= 7; ++n) {
        for (const auto& g : corpus::connected_graphs(n)) {
            worst = std::max(worst, ihara_bass_check(g, zs));
            ++graphs;
        }
    }
    worst = std::max(worst, ihara_bass_check(corpus::complete_graph(4), zs));
    worst = std::max(worst, ihara_bass_check(corpus::petersen(), zs));

    // integer spot check at (K_4, z = 3)
    Graph k4 = corpus::complete_graph(4);
    auto idx = edge_index(k4);
    Eigen::MatrixXd B = dense_nb_matrix(k4, idx);
    Eigen::MatrixXd lhs_m = 3.0 * Eigen::MatrixXd::Identity(12, 12) - B;
    double lhs = lhs_m.partialPivLu().determinant();
    Eigen::MatrixXd L = dense_deformed_laplacian(k4, 3.0);
    double rhs = std::pow(9.0 - 1.0, 6 - 4) * L.partialPivLu().determinant();
    bool spot = std::llround(lhs) == 351232 && std::llround(rhs) == 351232;

    double secs = elapsed_s(t0);
    std::ostringstream d;
    d << "identity residual " << worst << " over " << graphs
      << " connected graphs (n<=7) + K_4 + Petersen at 20 points; K_4 dets at z=3: "
      << std::llround(lhs) << "/" << std::llround(rhs) << "; " << secs << " s";
    report(1, worst <= 1e-9 && spot && secs < 10.0, d.str());
}

// ---- criterion 2: Petersen end-to-end ---------------------------------------

void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    Graph g = corpus::petersen();
    double r_star = smallest_real_eig_B(g, 1e-8).r_star;
    double r = optimal_r(g, r_star);
    double bound = lower_bound(g, r);
    auto vc = build_vectors(g, 2);

    bool ok = std::abs(r_star + 1.0) <= 1e-6;
    ok = ok && std::abs(bound - (3.0 * std::sqrt(2.0) / 4.0 + 1.0)) <= 1e-6;
    double norm_dev = 0.0, edge_dev = 0.0;
    for (int i = 0; i < 10; ++i)
        norm_dev = std::max(norm_dev, std::abs(std::sqrt(vc.gram(i, i)) - 1.0));
    for (auto [u, v] : g.edges())
        edge_dev = std::max(edge_dev, std::abs(vc.gram(u, v) + std::sqrt(2.0) / 3.0));
    ok = ok && norm_dev <= 1e-9 && edge_dev <= 1e-9;
    double kappa_expect = 1.0 + 3.0 / std::sqrt(2.0);
    ok = ok && std::abs(vc.kappa - kappa_expect) <= 1e-6;
    // regular-graph equality with the guaranteed value 1 + (rho+1)/(2(1-1/m)sqrt(rho))
    double rho = make_walk_model(g).perron.rho;
    double guarantee = 1.0 + (rho + 1.0) / (2.0 * 0.5 * std::sqrt(rho));
    ok = ok && std::abs(vc.kappa - guarantee) <= 1e-6;

    double secs = elapsed_s(t0);
    std::ostringstream d;
    d << "r_star=" << r_star << " bound=" << bound << " kappa=" << vc.kappa
      << " norm_dev=" << norm_dev << " edge_dev=" << edge_dev << "; " << secs << " s";
    report(2, ok && secs < 1.0, d.str());
}

// ---- criterion 3: oracle sandwich -------------------------------------------

void criterion_3() {
    bool ok = true;
    std::ostringstream d;

    // anchors first
    for (int k = 3; k <= 6; ++k) {
        double chi = chi_v_exact(corpus::complete_graph(k)).chi_v;
        if (std::abs(chi - k) > 1e-3) {
            ok = false;
            d << "K_" << k << " oracle " << chi << "; ";
        }
    }
    double c5 = chi_v_exact(corpus::cycle_graph(5)).chi_v;
    if (std::abs(c5 - 2.2361) > 1e-3) {
        ok = false;
        d << "C_5 oracle " << c5 << "; ";
    }

    // sandwich on eligible girth >= 5 corpus graphs with n <= 30
    struct Named {
        const char* name;
        Graph g;
    };
    std::vector<Named> corpus_graphs;
    corpus_graphs.push_back({"petersen", corpus::petersen()});
    corpus_graphs.push_back({"petersen_subdivided", corpus::subdivide_edge(corpus::petersen(), 0, 1, 1)});
    corpus_graphs.push_back({"dodecahedron", corpus::dodecahedron()});
    corpus_graphs.push_back({"mcgee", corpus::mcgee()});
    for (const auto& [name, g] : corpus_graphs) {
        auto rep = classify(g);
        if (!rep.eligible || !rep.girth_value || *rep.girth_value < 5 || g.vertex_count() > 30)
            continue;
        double r_star = smallest_real_eig_B(two_core(g).core, 1e-8).r_star;
        double lb = lower_bound(g, optimal_r(g, r_star));
        auto oracle = chi_v_exact(g);
        double kappa = build_vectors(g, 2).kappa;
        bool here = oracle.conclusive && lb <= oracle.chi_v + 1e-3 &&
                    oracle.chi_v <= kappa + 1e-3;
        if (!here) ok = false;
        d << name << " [" << lb << " <= " << oracle.chi_v << " <= " << kappa << "]"
          << (here ? " " : " VIOLATED ");
    }
    report(3, ok, d.str());
}

// ---- criterion 4: ER desk-scale reproduction ---------------------------------

void criterion_4() {
    auto t0 = std::chrono::steady_clock::now();
    SweepOptions opts;
    opts.n = 4000;
    opts.d_values = {10.0, 15.0};
    opts.seeds = 10;
    opts.base_seed = 424242;
    opts.threads = static_cast<int>(std::max(2u, std::thread::hardware_concurrency()));
    opts.eig_tol = 1e-6;
    auto res = er_sweep(opts);

    bool verified_all = true;
    for (size_t i = 0, c = 0; i < res.rows.size(); ++i) {
        const auto& row = res.rows[i];
        if (row.status != "ok") continue;
        Graph g = sample_er(row.n, row.d, row.seed);
        if (!verify_certificate(g, res.certificates[c++]).ok) verified_all = false;
    }

    std::ostringstream d;
    bool targets_ok = true;
    for (double dv : opts.d_values) {
        int in_range = 0, above_theory = 0, total = 0;
        for (const auto& row : res.rows) {
            if (row.d != dv) continue;
            ++total;
            if (row.status != "ok") continue;
            if (row.r_star >= -std::sqrt(dv) - 0.5 && row.r_star <= -1.0 + 1e-9) ++in_range;
            if (row.lower_bound >= row.theory_lower - 0.2) ++above_theory;
        }
        if (in_range < 8 || above_theory < 8) targets_ok = false;
        d << "d=" << dv << ": r_star in range " << in_range << "/" << total
          << ", bound near theory " << above_theory << "/" << total << "; ";
    }
    double secs = elapsed_s(t0);
    d << "certificates " << (verified_all ? "all verified" : "VERIFICATION FAILED") << "; "
      << secs << " s";
    report(4, verified_all && targets_ok && secs < 600.0, d.str());
}

// ---- criterion 5: max cut ----------------------------------------------------

void criterion_5() {
    Graph g = corpus::petersen();
    auto vc = build_vectors(g, 2);
    const int trials = 10000;
    auto res = gw_round(g, vc, trials, 1234);

    double target = 15.0 * std::acos(-std::sqrt(2.0) / 3.0) / std::numbers::pi;
    // per-trial cut variance, measured against the analytic mean
    double per_edge = std::acos(-std::sqrt(2.0) / 3.0) / std::numbers::pi;
    double var_upper = 15.0 * per_edge * (1.0 - per_edge) + 15.0 * 14.0 * 0.25; // crude cap
    (void)var_upper;
    // empirical standard error from a conservative per-trial sd of sqrt(15)/2
    double se = std::sqrt(15.0) / 2.0 / std::sqrt(static_cast<double>(trials));

    double lb = expected_cut_lb(g, 2, 2.0).bound;
    std::int64_t exact_max = corpus::max_cut_exact(g);

    bool ok = std::abs(res.mean_cut - target) <= 3.0 * se && res.mean_cut >= lb &&
              res.best_cut <= exact_max;
    std::ostringstream d;
    d << "mean_cut=" << res.mean_cut << " target=" << target << " (3se=" << 3.0 * se
      << ") bound=" << lb << " best=" << res.best_cut << " exhaustive_max=" << exact_max;
    report(5, ok, d.str());
}

// ---- criterion 6: witness -----------------------------------------------------

void criterion_6() {
    bool ok = true;
    std::ostringstream d;
    for (const Graph& g : {corpus::petersen(),
                           corpus::subdivide_edge(corpus::petersen(), 0, 1, 1)}) {
        double rho = make_walk_model(g).perron.rho;
        double worst_gap = 0.0, worst_form = 0.0;
        for (int k = 0; k < 10; ++k) {
            double z = -3.0 + k * (2.9 / 9.0);
            auto wit = alon_boppana_witness(g, 2, z);
            double form = z * z + 2.0 * 0.5 * std::sqrt(rho) * z + rho;
            worst_form = std::max(worst_form, std::abs(wit.value - form));
            double lmin = lambda_min(g, z);
            worst_gap = std::max(worst_gap, lmin - wit.value);
        }
        if (worst_form > 1e-9 || worst_gap > 1e-9) ok = false;
        d << "n=" << g.vertex_count() << " max|value-form|=" << worst_form
          << " max(lambda_min-value)=" << worst_gap << "; ";
    }
    report(6, ok, d.str());
}

// ---- criterion 7: patching -----------------------------------------------------

void criterion_7() {
    Graph pet = corpus::petersen();
    auto pet_vc = build_vectors(pet, 2);
    std::vector<std::pair<int, int>> edges = pet.edges();
    edges.emplace_back(10, 0);
    edges.emplace_back(10, 12);
    edges.emplace_back(11, 4);
    edges.emplace_back(11, 14);
    for (int k = 0; k < 5; ++k) edges.emplace_back(12 + k, 12 + (k + 1) % 5);
    Graph g = Graph::from_edges(17, edges);

    std::vector<int> lambda_set = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::vector<int> boundary = {10, 11};
    std::vector<int> upsilon = {12, 13, 14, 15, 16};
    auto sigma3 = greedy_color_2degenerate(induced_subgraph(g, upsilon));
    auto out = patch_colorings(g, lambda_set, pet_vc, upsilon, sigma3, boundary);

    const double kappa = pet_vc.kappa;
    const double target = std::max(kappa + 1.0, 4.0);
    auto check = verify_coloring(g, out, target + 1e-9);
    double lam_dev = 0.0, ups_dev = 0.0;
    for (auto [u, v] : pet.edges())
        lam_dev = std::max(lam_dev, std::abs(out.gram(u, v) + 1.0 / kappa));
    for (int k = 0; k < 5; ++k)
        ups_dev = std::max(ups_dev,
                           std::abs(out.gram(12 + k, 12 + (k + 1) % 5) + 1.0 / 3.0));
    bool ok = check.ok && lam_dev <= 1e-9 && ups_dev <= 1e-9;
    std::ostringstream d;
    d << "verified at " << target << ": " << check.ok << ", lambda-edge dev " << lam_dev
      << ", upsilon-edge dev " << ups_dev;
    report(7, ok, d.str());
}

// ---- criterion 8: invariant suites ---------------------------------------------

void criterion_8() {
    bool ok = true;
    std::ostringstream d;

    // eigen-equation residuals and normalization on the eligible corpus
    for (const Graph& g : {corpus::petersen(), corpus::dodecahedron(), corpus::mcgee(),
                           corpus::complete_graph(5),
                           corpus::subdivide_edge(corpus::petersen(), 0, 1, 1)}) {
        auto idx = edge_index(g);
        auto pd = perron(g, idx);
        auto y = nb_matvec(idx, pd.phi);
        double resid = 0.0;
        for (int e = 0; e < idx.arc_count(); ++e)
            resid = std::max(resid, std::abs(y[e] - pd.rho * pd.phi[e]));
        double total = 0.0;
        for (double p : pd.phi_vertex) total += p;
        if (resid > 1e-8 || std::abs(total - 1.0) > 1e-10) {
            ok = false;
            d << "perron residual/normalization failed at n=" << g.vertex_count() << "; ";
        }
    }

    // layer sums of walk probabilities
    {
        Graph g = corpus::mcgee();
        auto wm = make_walk_model(g);
        for (int i = 0; i < g.vertex_count(); ++i) {
            auto ball = bfs_ball(g, i, 3);
            for (int s = 1; s <= 3; ++s) {
                double sum = 0.0;
                for (int j = 0; j < g.vertex_count(); ++j)
                    if (ball.dist[j] == s) sum += walk_prob(g, wm, i, j);
                if (std::abs(sum - 1.0) > 1e-9) {
                    ok = false;
                    d << "layer sum failed at i=" << i << " s=" << s << "; ";
                }
            }
        }
    }

    // Gram matrices PSD by construction
    for (const Graph& g : {corpus::petersen(), corpus::dodecahedron()}) {
        auto vc = build_vectors(g, 2);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(vc.gram, Eigen::EigenvaluesOnly);
        if (es.eigenvalues()(0) < -1e-9) {
            ok = false;
            d << "gram not PSD at n=" << g.vertex_count() << "; ";
        }
    }

    // two_core idempotence over the n <= 6 enumeration
    for (int n = 2; n <= 6; ++n) {
        for (const auto& g : corpus::connected_graphs(n)) {
            auto once = two_core(g);
            auto twice = two_core(once.core);
            if (serialize_edge_list(once.core) != serialize_edge_list(twice.core)) {
                ok = false;
                d << "two_core not idempotent at n=" << n << "; ";
            }
        }
    }

    // bipartite / period classifications on documented cases
    {
        auto c6 = classify(corpus::cycle_graph(6));
        auto pet = classify(corpus::petersen());
        auto sub = classify(corpus::subdivide_all(corpus::complete_graph(4), 2));
        auto tree = classify(corpus::path_graph(5));
        if (!(c6.is_bipartite && !c6.eligible) || !pet.eligible || pet.period != 1 ||
            sub.period != 3 || sub.eligible || tree.two_core_size != 0 || tree.eligible) {
            ok = false;
            d << "classification mismatch; ";
        }
    }

    if (ok) d << "all invariant suites clean";
    report(8, ok, d.str());
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
