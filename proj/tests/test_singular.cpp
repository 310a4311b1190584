#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "singraph/sim.hpp"
#include "singraph/singular.hpp"

#include <cmath>

using namespace sg;

TEST_CASE("factorization over join-transitive pieces") {
    Rational p = Rational(2) / 7;
    auto gp = Graphon::constant(p);
    for (int k = 2; k <= 6; ++k)
        for (const auto& t : enumerate_trees(k)) {
            auto r = join_transitive_factorization_check(gp, t);
            CHECK(*r.gap.exact == 0);
            CHECK(*r.lhs.exact == pow(p, static_cast<unsigned long>(t.size())));
        }
    Graph sq_tri = join(graphs::square(), graphs::triangle(), 0, 0);
    auto r = join_transitive_factorization_check(gp, sq_tri);
    CHECK(*r.lhs.exact == pow(p, 7));
    CHECK(*r.rhs.exact == pow(p, 7));
    CHECK(r.pieces.size() == 2);
    CHECK_THROWS_AS(join_transitive_factorization_check(gp, graphs::diamond()), ValidationError);
}

TEST_CASE("non-singular witnesses, checked against direct hom counts") {
    // A regular host keeps t(P3) = t(edge)^2; the path P3 as host does not.
    Graph c5 = graphs::cycle(5);
    auto r5 = join_transitive_factorization_check(step_from_graph(c5), graphs::path(3));
    CHECK(*r5.gap.exact == 0);
    Graph host = graphs::path(3);
    auto r = join_transitive_factorization_check(step_from_graph(host), graphs::path(3));
    Rational e = hom_density(graphs::edge(), host);
    CHECK(*r.lhs.exact == hom_density(graphs::path(3), host));
    CHECK(*r.gap.exact == hom_density(graphs::path(3), host) - e * e);
    CHECK(*r.gap.exact == Rational(2) / 81);
}

TEST_CASE("tree equation system") {
    auto rep = tree_equation_system(4, true);
    REQUIRE(rep.levels.size() == 2);
    const auto& lv4 = rep.levels[1];
    CHECK(lv4.trees.size() == 2);
    std::vector<std::string> lines;
    for (const auto& e : rep.equations)
        if (e.size == 4) lines.push_back(e.label + ": " + format_tree_equation(e, lv4));
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "kappa2(edge, P3): p^3 = 2/3*t(P4) + 1/3*t(star3)");
    CHECK(lines[1] == "kappa3(edge, edge, edge): p^3 = 3/4*t(P4) + 1/4*t(star3)");
    CHECK(lv4.rank == 2);
    CHECK(lv4.pinned_to_edge_power);

    // kappa2 alone leaves size 4 underdetermined.
    auto only2 = tree_equation_system(4, false);
    CHECK(only2.levels[1].rank == 1);
    CHECK_FALSE(only2.levels[1].determined);

    auto six = tree_equation_system(6, true);
    CHECK(six.all_satisfied);
    CHECK(six.dropped.empty());
    for (const auto& lv : six.levels) {
        CHECK(lv.trees.size() == enumerate_trees(lv.size).size());
        CHECK(lv.pinned_to_edge_power);
    }
    CHECK_THROWS_AS(tree_equation_system(8, false), ValidationError);
}

TEST_CASE("tree equations match the densities of a constant graphon") {
    // Independent route: evaluate each expansion at Constant(p) directly.
    Rational p = Rational(3) / 5;
    auto gp = Graphon::constant(p);
    for (const auto& e : tree_equation_system(5, true).equations) CHECK(*evaluate(e.expansion, gp).exact == 0);
}

TEST_CASE("Gaussian edge criterion") {
    auto c = gaussian_edge_criterion(Graphon::constant(Rational(1) / 3));
    CHECK(*c.kappa3.exact == 0);
    CHECK(*c.kappa4.exact == 0);
    CHECK(*c.cgw.gap.exact == 0);
    CHECK(c.singular_input);
    CHECK(c.warning.empty());

    Graph host = graphs::cycle(5);
    auto r = gaussian_edge_criterion(step_from_graph(host));
    Rational e = hom_density(graphs::edge(), host);
    CHECK(*r.kappa3.exact == 8 * (hom_density(graphs::triangle(), host) - pow(e, 3)));
    CHECK(*r.kappa4.exact == 48 * (hom_density(graphs::square(), host) - pow(e, 4)));
    CHECK(sgn(*r.kappa4.exact) == sgn(*r.cgw.gap.exact));
    // Vertex-transitive host: singular, yet not Gaussian.
    CHECK(r.singular_input);
    CHECK(*r.kappa4.exact != 0);

    auto w = gaussian_edge_criterion(step_from_graph(graphs::path(3)));
    CHECK_FALSE(w.singular_input);
    CHECK_FALSE(w.warning.empty());
}

TEST_CASE("fourth cumulant of the edge count at p = 1/2") {
    const int n = 64;
    McOptions opt;
    opt.samples = 20000;
    opt.seed = 2024;
    auto res = mc_cumulants(Graphon::constant(Rational(1) / 2), n, {graphs::edge()}, {{0, 0, 0, 0}}, opt);
    REQUIRE(res.used_binomial_fast_path);
    // S_n(edge) = 2 Bin(m, p): kappa4 = 16 m p(1-p)(1 - 6p(1-p)).
    double m = n * (n - 1) / 2.0, q = 0.25;
    double oracle = 16 * m * q * (1 - 6 * q);
    const auto& est = res.estimates.at(0);
    CHECK(std::abs(est.estimate - oracle) < 4 * est.std_error);
    // On the Y_n scale both are 0 to within 4 SE.
    double scale = std::pow(n, 4);
    CHECK(std::abs(est.estimate / scale) < 4 * est.std_error / scale + std::abs(oracle) / scale);
}
