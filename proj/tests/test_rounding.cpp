#include <doctest.h>

#include <cmath>
#include <numbers>

#include "corpus.hpp"
#include "nbcolor/rounding.hpp"
#include "nbcolor/vector_coloring.hpp"

using namespace nbcolor;

TEST_SUITE("rounding") {

TEST_CASE("cut_value counts crossing edges exactly") {
    Graph g = corpus::cycle_graph(6);
    CHECK(cut_value(g, {1, -1, 1, -1, 1, -1}) == 6);
    CHECK(cut_value(g, {1, 1, 1, 1, 1, 1}) == 0);
    CHECK(cut_value(g, {1, 1, -1, -1, 1, 1}) == 2);
}

TEST_CASE("rounding is reproducible for a fixed seed") {
    Graph g = corpus::petersen();
    auto vc = build_vectors(g, 2);
    auto a = gw_round(g, vc, 50, 99);
    auto b = gw_round(g, vc, 50, 99);
    CHECK(a.partition == b.partition);
    CHECK(a.mean_cut == b.mean_cut);
    CHECK(a.best_cut == b.best_cut);
    auto c = gw_round(g, vc, 50, 100);
    CHECK((a.mean_cut != c.mean_cut || a.partition != c.partition));
}

TEST_CASE("reported cuts are consistent and bounded by the exhaustive optimum") {
    Graph g = corpus::petersen();
    auto vc = build_vectors(g, 2);
    auto res = gw_round(g, vc, 500, 7);
    CHECK(res.cut_edges == cut_value(g, res.partition));
    CHECK(res.best_cut == res.cut_edges);
    CHECK(res.best_cut <= corpus::max_cut_exact(g));
    CHECK(res.mean_cut <= static_cast<double>(res.best_cut));
    CHECK(res.mean_cut > 0.0);
    CHECK(res.trials == 500);
}

TEST_CASE("expected cut bound for petersen matches the closed form") {
    Graph g = corpus::petersen();
    auto lb = expected_cut_lb(g, 2, 2.0);
    double expect = 15.0 * (0.5 + 2.0 * 0.5 * std::sqrt(2.0) / (std::numbers::pi * 3.0));
    CHECK(lb.bound == doctest::Approx(expect).epsilon(1e-12));
    CHECK(lb.bound == doctest::Approx(9.7508).epsilon(1e-4));
    CHECK(lb.dms_reference > 0.0);
    CHECK(lb.er_form > 0.5 * 15.0);
}

TEST_CASE("per-edge cut probability follows arccos of the gram entry") {
    // mean cut over many trials approaches sum of arccos(g_uv)/pi
    Graph g = corpus::petersen();
    auto vc = build_vectors(g, 2);
    double expect = 0.0;
    for (auto [u, v] : g.edges()) expect += std::acos(vc.gram(u, v)) / std::numbers::pi;
    auto res = gw_round(g, vc, 20000, 3);
    // binomial-ish std error well under 0.1 at 2e4 trials
    CHECK(std::abs(res.mean_cut - expect) < 0.1);
}

TEST_CASE("json artifact carries the partition and rng identifier") {
    Graph g = corpus::cycle_graph(5);
    CutResult r;
    r.partition = {1, -1, 1, -1, 1};
    r.cut_edges = 4;
    r.trials = 1;
    r.best_cut = 4;
    r.mean_cut = 4.0;
    r.seed = 123;
    auto s = cut_result_to_json(r);
    CHECK(s.find("10101") != std::string::npos);
    CHECK(s.find("splitmix64+mt19937_64") != std::string::npos);
    CHECK(s.find("123") != std::string::npos);
}

} // TEST_SUITE
