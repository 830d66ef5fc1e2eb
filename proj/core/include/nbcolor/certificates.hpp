#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nbcolor/graph.hpp"

namespace nbcolor {

// Vector-chromatic lower bounds of the form
//   chi_v(G) >= -r <W,A> / (r^2 + <W,D-I>) + 1
// valid whenever L(r) is PSD. W = J/n recovers the unweighted bound
//   |r d_avg| / (r^2 + d_avg - 1) + 1.

struct Weighting {
    enum class Kind { uniform_J_over_n, explicit_matrix };
    Kind kind = Kind::uniform_J_over_n;
    Eigen::MatrixXd W; // only for explicit_matrix
};

struct CertificateTolerances {
    double psd_shift = 0.0;
    double arithmetic_tol = 1e-12;
};

// Everything an independent verifier needs: one PSD test plus arithmetic.
struct LowerBoundCertificate {
    int schema_version = 1;
    std::string graph_digest; // SHA-256 of the canonical edge list
    double r = 0.0;
    Weighting weighting;
    double claimed_bound = 0.0;
    CertificateTolerances tolerances;
    std::string generator_metadata_json; // JSON object, free-form provenance
};

// SHA-256 hex digest of serialize_edge_list(g).
std::string graph_digest(const Graph& g);

// Certified bound at the uniform weighting J/n. Requires r < 0 and is_psd(g, r); throws
// eligibility_error on an uncertified r.
double lower_bound(const Graph& g, double r);

// min(r_star, -sqrt(d_avg - 1)): the unconstrained maximizer when feasible,
// else the binding constraint r <= r_star.
double optimal_r(const Graph& g, double r_star);

// Weighted bound with W PSD, Tr W = 1, W_ij >= 0 on edges; r is the certified
// lower bound on the smallest real eigenvalue of B and is optimized
// internally to min(r, -sqrt(<W,D-I>)).
double weighted_lower_bound(const Graph& g, const Eigen::MatrixXd& W, double r);

LowerBoundCertificate emit_certificate(const Graph& g, double r, const Weighting& weighting,
                                       const std::string& generator_metadata_json = "{}");

struct VerifyResult {
    bool ok = false;
    std::string reason;    // on failure: which check failed
    double evidence = 0.0; // e.g. lambda_min on PSD failure, residual on arithmetic failure
};
VerifyResult verify_certificate(const Graph& g, const LowerBoundCertificate& cert);

std::string certificate_to_json(const LowerBoundCertificate& cert);
LowerBoundCertificate certificate_from_json(const std::string& json_text);

struct RamanujanCheck {
    bool holds = false;
    double slack = 0.0; // <A,P> + 2 Tr P sqrt(<D-I,P>)
    bool premise_established = false;
    std::vector<double> extraneous_roots; // real eigenvalues of B besides +-1 and rho
};

// Lemma-style inequality <A,P> >= -2 Tr P sqrt(<D-I,P>) for PSD P, with the
// premise (no real eigenvalues of B other than +-1 and rho) re-checked via
// the real-root scan and flagged rather than assumed.
RamanujanCheck ramanujan_inequality_check(const Graph& g, const Eigen::MatrixXd& P);

} // namespace nbcolor
