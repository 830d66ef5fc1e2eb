#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nbcolor/certificates.hpp"
#include "nbcolor/graph.hpp"

namespace nbcolor {

// One (n, d, seed) cell of the Erdos-Renyi sweep. Rows regenerate bit-for-bit
// from (n, d, seed) and the library version; ineligible samples become rows
// with a skip reason rather than being dropped.
struct ExperimentRow {
    int n = 0;
    double d = 0.0;
    std::uint64_t seed = 0;
    double rho_hat = 0.0;
    double r_star = 0.0;
    double lower_bound = 0.0;
    double theory_lower = 0.0;  // d^{3/2}/(2d-1) + 1
    double theory_upper = 0.0;  // max{(d+1)/(2 sqrt d) + 2, 4}
    double ks_threshold = 0.0;  // (k-1)^2 for the smallest integer k refuted
    double runtime_ms = 0.0;
    std::string status = "ok";  // or a skip reason
};

struct SweepOptions {
    int n = 1000;
    std::vector<double> d_values;
    int seeds = 10;
    std::uint64_t base_seed = 1;
    int threads = 1;
    double eig_tol = 1e-6; // bracket width for r_star
};

struct SweepResult {
    std::vector<ExperimentRow> rows; // order-stabilized by (d, seed)
    std::vector<LowerBoundCertificate> certificates; // aligned with "ok" rows
    std::string summary;
};

SweepResult er_sweep(const SweepOptions& opts);

// Runs a single cell; used by the sweep workers and directly by tests.
ExperimentRow run_er_cell(int n, double d, std::uint64_t seed, double eig_tol,
                          LowerBoundCertificate* cert_out);

// Frozen column order: n,d,seed,rho_hat,r_star,lower_bound,theory_lower,
// theory_upper,ks_threshold,runtime_ms,status. Floats as shortest
// round-trip decimals.
std::string rows_to_csv(const std::vector<ExperimentRow>& rows);

std::string format_double(double v); // shortest round-trip decimal

} // namespace nbcolor
