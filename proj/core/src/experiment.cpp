#include "nbcolor/experiment.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "nbcolor/deformed_laplacian.hpp"
#include "nbcolor/eligibility.hpp"
#include "nbcolor/errors.hpp"
#include "nbcolor/nb_operator.hpp"
#include "nbcolor/rng.hpp"

namespace nbcolor {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

ExperimentRow run_er_cell(int n, double d, std::uint64_t seed, double eig_tol,
                          LowerBoundCertificate* cert_out) {
    auto t0 = std::chrono::steady_clock::now();
    ExperimentRow row;
    row.n = n;
    row.d = d;
    row.seed = seed;
    row.theory_lower = std::pow(d, 1.5) / (2.0 * d - 1.0) + 1.0;
    row.theory_upper = std::max((d + 1.0) / (2.0 * std::sqrt(d)) + 2.0, 4.0);

    Graph g = sample_er(n, d, seed);
    try {
        auto rep = classify(g);
        if (!rep.eligible) {
            row.status = "skip: " + rep.reason;
        } else {
            auto core = two_core(g).core;
            auto idx = edge_index(core);
            row.rho_hat = perron(core, idx).rho;
            row.r_star = smallest_real_eig_B(core, eig_tol).r_star;
            double r = optimal_r(g, row.r_star);
            // r_star sits on the PSD boundary; back off past bisection error
            for (int k = 0; k < 50 && !is_psd(g, r); ++k) r -= 4.0 * eig_tol;
            row.lower_bound = lower_bound(g, r);
            row.ks_threshold =
                std::pow(std::ceil(row.lower_bound - 1e-9) - 1.0, 2.0);
            if (cert_out) {
                nlohmann::json meta;
                meta["generator"] = "er_sweep";
                meta["n"] = n;
                meta["d"] = d;
                meta["seed"] = seed;
                Weighting w;
                w.kind = Weighting::Kind::uniform_J_over_n;
                *cert_out = emit_certificate(g, r, w, meta.dump());
            }
        }
    } catch (const eligibility_error& e) {
        row.status = std::string("skip: ") + e.what();
    } catch (const convergence_error& e) {
        row.status = std::string("error: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    row.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return row;
}

SweepResult er_sweep(const SweepOptions& opts) {
    struct Cell {
        double d;
        int d_ix;
        int seed_ix;
    };
    std::vector<Cell> cells;
    for (size_t di = 0; di < opts.d_values.size(); ++di)
        for (int s = 0; s < opts.seeds; ++s)
            cells.push_back({opts.d_values[di], static_cast<int>(di), s});

    SweepResult out;
    out.rows.resize(cells.size());
    std::vector<LowerBoundCertificate> certs(cells.size());
    std::vector<char> has_cert(cells.size(), 0);

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t k = next.fetch_add(1);
            if (k >= cells.size()) return;
            std::uint64_t seed =
                split_seed(opts.base_seed, (static_cast<std::uint64_t>(cells[k].d_ix) << 20) +
                                               static_cast<std::uint64_t>(cells[k].seed_ix));
            LowerBoundCertificate cert;
            out.rows[k] = run_er_cell(opts.n, cells[k].d, seed, opts.eig_tol, &cert);
            if (out.rows[k].status == "ok") {
                certs[k] = std::move(cert);
                has_cert[k] = 1;
            }
        }
    };
    int nthreads = std::max(1, opts.threads);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (size_t k = 0; k < cells.size(); ++k)
        if (has_cert[k]) out.certificates.push_back(std::move(certs[k]));

    int ok = 0, near_opt = 0;
    for (const auto& r : out.rows) {
        if (r.status != "ok") continue;
        ++ok;
        if (r.r_star >= -(std::sqrt(r.d) + 0.5)) ++near_opt;
    }
    std::ostringstream s;
    s << "cells=" << out.rows.size() << " ok=" << ok
      << " frac_r_star_near_opt=" << (ok ? static_cast<double>(near_opt) / ok : 0.0)
      << " (r_star >= -(sqrt(d)+0.5); optimal r uses min(r_star, -sqrt(d_avg-1)))";
    out.summary = s.str();
    return out;
}

std::string rows_to_csv(const std::vector<ExperimentRow>& rows) {
    std::ostringstream out;
    out << "n,d,seed,rho_hat,r_star,lower_bound,theory_lower,theory_upper,"
           "ks_threshold,runtime_ms,status\n";
    for (const auto& r : rows) {
        out << r.n << ',' << format_double(r.d) << ',' << r.seed << ','
            << format_double(r.rho_hat) << ',' << format_double(r.r_star) << ','
            << format_double(r.lower_bound) << ',' << format_double(r.theory_lower) << ','
            << format_double(r.theory_upper) << ',' << format_double(r.ks_threshold) << ','
            << format_double(r.runtime_ms) << ',' << r.status << '\n';
    }
    return out.str();
}

} // namespace nbcolor
