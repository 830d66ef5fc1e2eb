#include "nbcolor/rounding.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "nbcolor/rng.hpp"

namespace nbcolor {

CutResult gw_round(const Graph& g, const VectorColoring& vc, int trials, std::uint64_t seed) {
    const int n = g.vertex_count();
    const int dim = static_cast<int>(vc.vectors.cols());
    Eigen::MatrixXd dense(vc.vectors);

    CutResult res;
    res.trials = trials;
    res.seed = seed;
    res.best_cut = -1;
    double total = 0.0;
    std::vector<int> part(n);
    for (int t = 0; t < trials; ++t) {
        auto rng = make_rng(split_seed(seed, static_cast<std::uint64_t>(t)));
        std::normal_distribution<double> gauss;
        Eigen::VectorXd dir(dim);
        Eigen::VectorXd proj;
        bool clean = false;
        while (!clean) {
            for (int k = 0; k < dim; ++k) dir(k) = gauss(rng);
            proj = dense * dir;
            clean = true;
            for (int i = 0; i < n; ++i)
                if (proj(i) == 0.0) {
                    clean = false;
                    ++res.resamples;
                    break;
                }
        }
        for (int i = 0; i < n; ++i) part[i] = proj(i) > 0.0 ? 1 : -1;
        std::int64_t cut = cut_value(g, part);
        total += static_cast<double>(cut);
        if (cut > res.best_cut) {
            res.best_cut = cut;
            res.cut_edges = cut;
            res.partition = part;
        }
    }
    res.mean_cut = trials > 0 ? total / trials : 0.0;
    return res;
}

CutLowerBound expected_cut_lb(const Graph& g, int m, double rho) {
    const double edges = static_cast<double>(g.edge_count());
    const double d = g.average_degree();
    CutLowerBound lb;
    lb.bound = edges * (0.5 + 2.0 * (1.0 - 1.0 / m) * std::sqrt(rho) /
                                  (std::numbers::pi * (rho + 1.0)));
    lb.er_form = edges * (0.5 + (2.0 / std::numbers::pi) * std::sqrt(d) /
                                    ((std::sqrt(d) + 1.0) * (std::sqrt(d) + 1.0)));
    lb.dms_reference = edges * (0.5 + 0.7632 / std::sqrt(d));
    return lb;
}

std::int64_t cut_value(const Graph& g, const std::vector<int>& partition) {
    if (static_cast<int>(partition.size()) != g.vertex_count())
        throw std::invalid_argument("cut_value: partition size mismatch");
    std::int64_t cut = 0;
    for (auto [u, v] : g.edges())
        if (partition[u] != partition[v]) ++cut;
    return cut;
}

std::string cut_result_to_json(const CutResult& r) {
    nlohmann::json j;
    std::string bits;
    bits.reserve(r.partition.size());
    for (int s : r.partition) bits.push_back(s > 0 ? '1' : '0');
    j["partition"] = bits;
    j["cut_edges"] = r.cut_edges;
    j["trials"] = r.trials;
    j["mean_cut"] = r.mean_cut;
    j["best_cut"] = r.best_cut;
    j["seed"] = r.seed;
    j["resamples"] = r.resamples;
    j["rng"] = std::string(kRngAlgorithm);
    return j.dump(2);
}

} // namespace nbcolor
