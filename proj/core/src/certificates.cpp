#include "nbcolor/certificates.hpp"

#include <cmath>
#include <sstream>

#include <openssl/evp.h>

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include "nbcolor/deformed_laplacian.hpp"
#include "nbcolor/errors.hpp"
#include "nbcolor/nb_operator.hpp"
#include "nbcolor/rng.hpp"

namespace nbcolor {

using nlohmann::json;

std::string graph_digest(const Graph& g) {
    const std::string canon = serialize_edge_list(g);
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int md_len = 0;
    EVP_Digest(canon.data(), canon.size(), md, &md_len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * md_len);
    for (unsigned int i = 0; i < md_len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

namespace {

double uniform_bound_value(double d_avg, double r) {
    return std::abs(r * d_avg) / (r * r + d_avg - 1.0) + 1.0;
}

void require_certified_r(const Graph& g, double r) {
    if (!(r < 0.0)) throw eligibility_error("lower_bound: r must be negative");
    if (!is_psd(g, r)) {
        double lmin = lambda_min(g, r);
        throw eligibility_error("lower_bound: L(r) not PSD (lambda_min = " +
                                std::to_string(lmin) + "); r is not a certified lower bound");
    }
}

} // namespace

double lower_bound(const Graph& g, double r) {
    if (g.average_degree() <= 1.0)
        throw eligibility_error("lower_bound: average degree must exceed 1");
    require_certified_r(g, r);
    return uniform_bound_value(g.average_degree(), r);
}

double optimal_r(const Graph& g, double r_star) {
    const double d_avg = g.average_degree();
    if (d_avg <= 1.0) throw eligibility_error("optimal_r: degenerate average degree");
    return std::min(r_star, -std::sqrt(d_avg - 1.0));
}

double weighted_lower_bound(const Graph& g, const Eigen::MatrixXd& W, double r) {
    const int n = g.vertex_count();
    if (W.rows() != n || W.cols() != n)
        throw std::invalid_argument("weighted_lower_bound: W dimension mismatch");
    double trace_dev = std::abs(W.trace() - 1.0);
    if (trace_dev > 1e-10)
        throw eligibility_error("weighted_lower_bound: Tr W != 1 (residual " +
                                std::to_string(trace_dev) + ")");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(W, Eigen::EigenvaluesOnly);
    if (es.eigenvalues()(0) < -1e-10)
        throw eligibility_error("weighted_lower_bound: W not PSD (lambda_min " +
                                std::to_string(es.eigenvalues()(0)) + ")");
    double wa = 0.0, wd = 0.0;
    for (int u = 0; u < n; ++u) {
        wd += W(u, u) * (g.degree(u) - 1.0);
        for (int v : g.neighbors(u)) {
            if (W(u, v) < -1e-12)
                throw eligibility_error("weighted_lower_bound: negative edge weight W(" +
                                        std::to_string(u) + "," + std::to_string(v) +
                                        ") = " + std::to_string(W(u, v)));
            wa += W(u, v);
        }
    }
    double r_eff = std::min(r, wd > 0 ? -std::sqrt(wd) : r);
    require_certified_r(g, r_eff);
    return -r_eff * wa / (r_eff * r_eff + wd) + 1.0;
}

LowerBoundCertificate emit_certificate(const Graph& g, double r, const Weighting& weighting,
                                       const std::string& generator_metadata_json) {
    LowerBoundCertificate cert;
    cert.graph_digest = graph_digest(g);
    cert.weighting = weighting;
    cert.tolerances.psd_shift = psd_tolerance(g, r);
    cert.tolerances.arithmetic_tol = 1e-12;
    if (weighting.kind == Weighting::Kind::uniform_J_over_n) {
        cert.r = r;
        cert.claimed_bound = lower_bound(g, r);
    } else {
        double wd = 0.0;
        for (int u = 0; u < g.vertex_count(); ++u)
            wd += weighting.W(u, u) * (g.degree(u) - 1.0);
        cert.r = std::min(r, wd > 0 ? -std::sqrt(wd) : r);
        cert.claimed_bound = weighted_lower_bound(g, weighting.W, r);
    }
    json meta = json::parse(generator_metadata_json);
    meta["rng"] = std::string(kRngAlgorithm);
    cert.generator_metadata_json = meta.dump();
    return cert;
}

VerifyResult verify_certificate(const Graph& g, const LowerBoundCertificate& cert) {
    VerifyResult res;
    if (graph_digest(g) != cert.graph_digest) {
        res.reason = "graph digest mismatch (wrong graph)";
        return res;
    }
    double lmin = lambda_min(g, cert.r);
    if (lmin < -cert.tolerances.psd_shift) {
        res.reason = "PSD recheck failed";
        res.evidence = lmin;
        return res;
    }
    double recomputed;
    if (cert.weighting.kind == Weighting::Kind::uniform_J_over_n) {
        recomputed = uniform_bound_value(g.average_degree(), cert.r);
    } else {
        const auto& W = cert.weighting.W;
        const int n = g.vertex_count();
        if (W.rows() != n || W.cols() != n) {
            res.reason = "weighting dimension mismatch";
            return res;
        }
        if (std::abs(W.trace() - 1.0) > 1e-10) {
            res.reason = "weighting trace constraint violated";
            res.evidence = W.trace() - 1.0;
            return res;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(W, Eigen::EigenvaluesOnly);
        if (es.eigenvalues()(0) < -1e-10) {
            res.reason = "weighting not PSD";
            res.evidence = es.eigenvalues()(0);
            return res;
        }
        double wa = 0.0, wd = 0.0;
        for (int u = 0; u < n; ++u) {
            wd += W(u, u) * (g.degree(u) - 1.0);
            for (int v : g.neighbors(u)) {
                if (W(u, v) < -1e-12) {
                    res.reason = "negative edge weight in W";
                    res.evidence = W(u, v);
                    return res;
                }
                wa += W(u, v);
            }
        }
        recomputed = -cert.r * wa / (cert.r * cert.r + wd) + 1.0;
    }
    double rel = std::abs(recomputed - cert.claimed_bound) /
                 std::max(1.0, std::abs(cert.claimed_bound));
    if (rel > std::max(cert.tolerances.arithmetic_tol, 1e-12)) {
        res.reason = "claimed bound does not match recomputation";
        res.evidence = recomputed - cert.claimed_bound;
        return res;
    }
    res.ok = true;
    return res;
}

std::string certificate_to_json(const LowerBoundCertificate& cert) {
    json j;
    j["schema_version"] = cert.schema_version;
    j["graph_digest"] = cert.graph_digest;
    j["r"] = cert.r;
    if (cert.weighting.kind == Weighting::Kind::uniform_J_over_n) {
        j["weighting"] = {{"type", "uniform_J_over_n"}};
    } else {
        std::vector<double> flat(cert.weighting.W.data(),
                                 cert.weighting.W.data() + cert.weighting.W.size());
        j["weighting"] = {{"type", "explicit"},
                          {"n", cert.weighting.W.rows()},
                          {"entries", flat}};
    }
    j["claimed_bound"] = cert.claimed_bound;
    j["tolerances"] = {{"psd_shift", cert.tolerances.psd_shift},
                       {"arithmetic_tol", cert.tolerances.arithmetic_tol}};
    j["generator_metadata"] = json::parse(cert.generator_metadata_json);
    return j.dump(2);
}

LowerBoundCertificate certificate_from_json(const std::string& json_text) {
    json j = json::parse(json_text);
    LowerBoundCertificate cert;
    cert.schema_version = j.at("schema_version").get<int>();
    cert.graph_digest = j.at("graph_digest").get<std::string>();
    cert.r = j.at("r").get<double>();
    const auto& w = j.at("weighting");
    if (w.at("type") == "uniform_J_over_n") {
        cert.weighting.kind = Weighting::Kind::uniform_J_over_n;
    } else {
        cert.weighting.kind = Weighting::Kind::explicit_matrix;
        int n = w.at("n").get<int>();
        auto flat = w.at("entries").get<std::vector<double>>();
        cert.weighting.W = Eigen::Map<const Eigen::MatrixXd>(flat.data(), n, n);
    }
    cert.claimed_bound = j.at("claimed_bound").get<double>();
    cert.tolerances.psd_shift = j.at("tolerances").at("psd_shift").get<double>();
    cert.tolerances.arithmetic_tol = j.at("tolerances").at("arithmetic_tol").get<double>();
    cert.generator_metadata_json = j.at("generator_metadata").dump();
    return cert;
}

RamanujanCheck ramanujan_inequality_check(const Graph& g, const Eigen::MatrixXd& P) {
    const int n = g.vertex_count();
    if (P.rows() != n || P.cols() != n)
        throw std::invalid_argument("ramanujan_inequality_check: P dimension mismatch");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(P, Eigen::EigenvaluesOnly);
    if (es.eigenvalues()(0) < -1e-10)
        throw eligibility_error("ramanujan_inequality_check: P not PSD");

    RamanujanCheck res;
    double ap = 0.0, dp = 0.0;
    for (int u = 0; u < n; ++u) {
        dp += P(u, u) * (g.degree(u) - 1.0);
        for (int v : g.neighbors(u)) ap += P(u, v);
    }
    res.slack = ap + 2.0 * P.trace() * std::sqrt(std::max(0.0, dp));
    res.holds = res.slack >= -1e-9 * (1.0 + std::abs(ap));

    // premise: no real eigenvalues of B besides +-1 and rho
    auto core = two_core(g);
    res.premise_established = true;
    if (core.core.vertex_count() > 0) {
        try {
            auto idx = edge_index(core.core);
            double rho = perron(core.core, idx).rho;
            auto scan = real_root_scan(core.core, -(1.0 + core.core.max_degree()), rho + 0.5);
            for (double root : scan.roots) {
                if (std::abs(root - 1.0) < 1e-6 || std::abs(root + 1.0) < 1e-6 ||
                    std::abs(root - rho) < 1e-6)
                    continue;
                res.extraneous_roots.push_back(root);
            }
            if (!res.extraneous_roots.empty() || !scan.suspected.empty())
                res.premise_established = false;
        } catch (const eligibility_error&) {
            res.premise_established = false;
        }
    }
    return res;
}

} // namespace nbcolor
