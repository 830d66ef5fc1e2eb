#include <doctest.h>

#include <cmath>

#include "corpus.hpp"
#include "nbcolor/deformed_laplacian.hpp"
#include "nbcolor/errors.hpp"
#include "nbcolor/graph.hpp"

using namespace nbcolor;

TEST_SUITE("deformed_laplacian") {

TEST_CASE("matrix entries follow z^2 I - z A + D - I") {
    Graph g = corpus::cycle_graph(4);
    auto L = dense_deformed_laplacian(g, -1.5);
    CHECK(L(0, 0) == doctest::Approx(2.25 + 2 - 1));
    CHECK(L(0, 1) == doctest::Approx(1.5));
    CHECK(L(0, 2) == doctest::Approx(0.0));
    CHECK((L - L.transpose()).norm() == doctest::Approx(0.0));
}

TEST_CASE("regular-graph eigenvalues reduce to scalar quadratics") {
    // 3-regular Petersen: spec(L(z)) = { z^2 - z lam + 2 : lam in {3, 1, -2} }
    Graph g = corpus::petersen();
    for (double z : {-3.0, -1.2, 0.4, 2.2}) {
        double expect = std::min({z * z - 3 * z + 2, z * z - z + 2, z * z + 2 * z + 2});
        CHECK(lambda_min(g, z) == doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("lanczos path matches the dense solver") {
    Graph g = sample_er(700, 6.0, 11);
    for (double z : {-4.0, -2.0, -1.1}) {
        double sparse = lambda_min(g, z, EigMode::lanczos);
        double dense = lambda_min(g, z, EigMode::dense);
        CHECK(sparse == doctest::Approx(dense).epsilon(1e-6));
    }
}

TEST_CASE("psd check with scale-aware tolerance") {
    Graph g = corpus::petersen();
    CHECK(is_psd(g, -std::sqrt(2.0)));
    CHECK(is_psd(g, -3.0)); // diagonally dominant region
    Graph k5 = corpus::complete_graph(5);
    // K_5: L(z) eigen z^2 - z lam + 3, lam in {4, -1}; at z = -2: 4 - 2 + 3 > 0
    // but smallest real eig of B is -1... at z in (-3, -1) the lam = -1 branch
    // 4 - 2 + 3 = 5 stays positive; pick a point that is genuinely indefinite:
    // z = 1.5 between the roots 1 and 3 of z^2 - 4z + 3.
    CHECK(!is_psd(k5, 1.5));
}

TEST_CASE("smallest real eigenvalue location on knowns") {
    // Petersen: no crossing below -1, the |E|-|V| fold at -1 is analytic
    auto pet = smallest_real_eig_B(corpus::petersen(), 1e-8);
    CHECK(pet.r_star == doctest::Approx(-1.0));
    CHECK(pet.method == RealEigMethod::baseline_minus_one);

    // K_5: B spectrum {4} U {real roots of z^2 + z + 3 (none)} U {+-1};
    // smallest real eigenvalue is -1 again
    auto k5 = smallest_real_eig_B(corpus::complete_graph(5), 1e-8);
    CHECK(k5.r_star == doctest::Approx(-1.0));

    CHECK_THROWS_AS(smallest_real_eig_B(corpus::path_graph(4), 1e-8), eligibility_error);
}

TEST_CASE("real root scan finds the Perron root and the Laplacian kernel") {
    Graph g = corpus::petersen();
    auto scan = real_root_scan(g, -3.5, 2.5);
    bool found_rho = false, found_one = false;
    for (double r : scan.roots) {
        if (std::abs(r - 2.0) < 1e-6) found_rho = true;
        if (std::abs(r - 1.0) < 1e-6) found_one = true;
        CHECK(r > -1.0 - 1e-9); // no real roots of det L below -1 for Petersen
    }
    CHECK(found_rho);
    CHECK(found_one);
}

TEST_CASE("bipartite signless kernel is injected at -1") {
    Graph c6 = corpus::cycle_graph(6);
    auto scan = real_root_scan(c6, -1.5, 0.0);
    bool found = false;
    for (double r : scan.roots)
        if (std::abs(r + 1.0) < 1e-9) found = true;
    CHECK(found);
}

} // TEST_SUITE
