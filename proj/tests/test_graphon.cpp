#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "singraph/graphon.hpp"

#include <random>

using namespace sg;

namespace {

auto random_graph(int n, double p, std::mt19937& rng) -> Graph {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph(n, e);
}

auto random_step(int q, std::mt19937& rng) -> Graphon {
    std::uniform_int_distribution<int> d(1, 9);
    std::vector<Rational> w;
    Rational total = 0;
    for (int i = 0; i < q; ++i) {
        w.emplace_back(d(rng));
        total += w.back();
    }
    for (auto& x : w) x /= total;
    std::vector<std::vector<Rational>> v(static_cast<size_t>(q), std::vector<Rational>(static_cast<size_t>(q)));
    for (int a = 0; a < q; ++a)
        for (int b = a; b < q; ++b) v[static_cast<size_t>(a)][static_cast<size_t>(b)] = v[static_cast<size_t>(b)][static_cast<size_t>(a)] = Rational(d(rng), 10);
    return Graphon::step(w, v);
}

// Oracle: sum over all maps V_f -> blocks.
auto density_bruteforce(const Graph& f, const StepGraphon& s) -> Rational {
    size_t q = s.weights.size();
    int k = f.order();
    std::vector<size_t> x(static_cast<size_t>(k), 0);
    Rational total = 0;
    auto edges = f.edges();
    while (true) {
        Rational term = 1;
        for (size_t v : x) term *= s.weights[v];
        for (auto [a, b] : edges) term *= s.values[x[static_cast<size_t>(a)]][x[static_cast<size_t>(b)]];
        total += term;
        int i = 0;
        while (i < k && ++x[static_cast<size_t>(i)] == q) x[static_cast<size_t>(i++)] = 0;
        if (i == k) break;
    }
    return total;
}

}  // namespace

TEST_CASE("constructors validate") {
    CHECK_THROWS_AS(Graphon::constant(Rational(3, 2)), ValidationError);
    CHECK_THROWS_AS(Graphon::step({Rational(1, 2), Rational(1, 3)}, {{0, 0}, {0, 0}}), ValidationError);
    CHECK_THROWS_AS(Graphon::step({Rational(1, 2), Rational(1, 2)}, {{0, 1}, {0, 0}}), ValidationError);
    CHECK_THROWS_AS(Graphon::rank_one(Rational(1, 2), {Rational(1, 2), Rational(1, 2)}, {1, 2}), ValidationError);
    auto k2 = step_from_graph(graphs::edge()).as_step();
    CHECK(k2.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    CHECK(k2.values == std::vector<std::vector<Rational>>{{0, 1}, {1, 0}});
}

TEST_CASE("densities of constant graphons") {
    for (const auto& f : enumerate_graphs(5, false)) {
        CHECK(density_exact(f, Graphon::constant(Rational(1, 3))) == pow(Rational(1, 3), static_cast<unsigned long>(f.size())));
        if (f.size() > 0) CHECK(density_exact(f, Graphon::constant(0)) == 0);
    }
    CHECK(density_exact(Graph(4), step_from_graph(graphs::cycle(5))) == 1);
    CHECK(density_exact(graphs::edge(), step_from_graph(graphs::cycle(5))) == Rational(2, 5));
}

TEST_CASE("step densities match brute force and hom densities") {
    std::mt19937 rng(4);
    for (int t = 0; t < 40; ++t) {
        Graph f = random_graph(2 + static_cast<int>(rng() % 4), 0.6, rng);
        auto gamma = random_step(1 + static_cast<int>(rng() % 4), rng);
        CHECK(density_exact(f, gamma) == density_bruteforce(f, gamma.as_step()));
        CHECK(density_numeric(f, gamma.as_step()) == doctest::Approx(density_exact(f, gamma).get_d()));
    }
    for (int t = 0; t < 60; ++t) {
        Graph f = random_graph(1 + static_cast<int>(rng() % 6), 0.5, rng);
        Graph g = random_graph(2 + static_cast<int>(rng() % 7), 0.5, rng);
        CHECK(density_exact(f, step_from_graph(g)) == hom_density(f, g));
    }
}

TEST_CASE("densities are multiplicative over disjoint unions") {
    std::mt19937 rng(8);
    for (int t = 0; t < 30; ++t) {
        Graph a = random_graph(1 + static_cast<int>(rng() % 4), 0.6, rng);
        Graph b = random_graph(1 + static_cast<int>(rng() % 4), 0.6, rng);
        auto gamma = random_step(3, rng);
        CHECK(density_exact(disjoint_union(a, b), gamma) == density_exact(a, gamma) * density_exact(b, gamma));
    }
}

TEST_CASE("densities are invariant under block permutations") {
    std::mt19937 rng(12);
    auto gamma = random_step(4, rng).as_step();
    std::vector<size_t> perm = {2, 0, 3, 1};
    StepGraphon moved = gamma;
    for (size_t a = 0; a < 4; ++a) {
        moved.weights[perm[a]] = gamma.weights[a];
        for (size_t b = 0; b < 4; ++b) moved.values[perm[a]][perm[b]] = gamma.values[a][b];
    }
    auto g2 = Graphon::step(moved.weights, moved.values);
    auto g1 = Graphon::step(gamma.weights, gamma.values);
    for (const auto& f : enumerate_graphs(4, true)) CHECK(density_exact(f, g1) == density_exact(f, g2));
}

TEST_CASE("rank-one densities agree with their step representation") {
    // (1/4 + 49/25) / 2 is not 1.
    CHECK_THROWS_AS(Graphon::rank_one(Rational(1, 2), {Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(7, 5)}),
                    ValidationError);
    auto ok = Graphon::rank_one(Rational(1, 2), {Rational(1, 2), Rational(1, 2)}, {Rational(1, 5), Rational(7, 5)});
    auto step = Graphon::step(ok.as_step().weights, ok.as_step().values);
    for (const auto& f : enumerate_graphs(5, false)) CHECK(density_exact(f, ok) == density_exact(f, step));
}

TEST_CASE("marked densities") {
    auto c = marked_density(graphs::edge(), 0, Graphon::constant(Rational(1, 3)));
    CHECK(c == std::vector<Rational>{Rational(1, 3)});
    auto c5 = marked_density(graphs::edge(), 1, step_from_graph(graphs::cycle(5)));
    CHECK(c5 == std::vector<Rational>(5, Rational(2, 5)));
    std::mt19937 rng(2);
    for (int t = 0; t < 30; ++t) {
        Graph f = random_graph(2 + static_cast<int>(rng() % 5), 0.5, rng);
        auto gamma = random_step(3, rng);
        auto s = gamma.as_step();
        int i = static_cast<int>(rng() % static_cast<unsigned>(f.order()));
        auto v = marked_density(f, i, gamma);
        Rational total = 0;
        for (size_t b = 0; b < v.size(); ++b) total += s.weights[b] * v[b];
        CHECK(total == density_exact(f, gamma));
    }
}

TEST_CASE("spectrum") {
    auto c = spectrum(Graphon::constant(Rational(3, 10)), 4);
    CHECK(c.eigenvalues.size() == 1);
    CHECK(c.eigenvalues[0] == doctest::Approx(0.3));
    auto bip = Graphon::step({Rational(1, 2), Rational(1, 2)}, {{0, 1}, {1, 0}});
    auto b = spectrum(bip, 2);
    CHECK(std::max(b.eigenvalues[0], b.eigenvalues[1]) == doctest::Approx(0.5));
    CHECK(std::min(b.eigenvalues[0], b.eigenvalues[1]) == doctest::Approx(-0.5));
    CHECK(b.eigenvalues[0] * b.eigenvalues[1] == doctest::Approx(-0.25));
    std::mt19937 rng(6);
    for (int t = 0; t < 10; ++t) {
        auto gamma = random_step(2 + static_cast<int>(rng() % 8), rng);
        auto r = spectrum(gamma, 8);
        CHECK(std::abs(r.trace_powers[3] - density_exact(graphs::cycle(3), gamma).get_d()) < 1e-10);
        for (int k = 1; k <= 8; ++k) CHECK(std::abs(r.trace_powers[static_cast<size_t>(k)] - r.cycle_densities[static_cast<size_t>(k)]) < 1e-9);
        CHECK(std::abs(r.trace_powers[2] - r.hilbert_schmidt) < 1e-12);
    }
}

TEST_CASE("Fredholm determinants") {
    double p = 0.3;
    auto gp = Graphon::constant(Rational(3, 10));
    for (std::complex<double> z : {std::complex<double>(0.5, 0), std::complex<double>(-1.2, 0.7), std::complex<double>(2, -1)}) {
        auto want = (1.0 + p * z) * std::exp(-p * z + p * p * z * z / 2.0);
        CHECK(std::abs(fredholm_det(gp, z, DetKind::det3) - want) < 1e-12);
    }
    CHECK(std::abs(fredholm_det(gp, 0.0, DetKind::det3) - 1.0) < 1e-15);
    std::mt19937 rng(3);
    auto gamma = random_step(5, rng);
    double hs = spectrum(gamma, 2).hilbert_schmidt;
    std::complex<double> z(0.8, 0.3);
    auto ratio = fredholm_det(gamma, z, DetKind::det2) / fredholm_det(gamma, z, DetKind::det3);
    CHECK(std::abs(ratio - std::exp(-z * z * hs / 2.0)) < 1e-12);
}

TEST_CASE("singularity report") {
    auto c = singularity_report(Graphon::constant(Rational(2, 5)), 4, 0.0);
    CHECK(c.singular);
    CHECK(*c.max_residual_exact == 0);
    auto p3 = singularity_report(step_from_graph(graphs::path(3)), 2, 0.0);
    CHECK_FALSE(p3.singular);
    // kappa2(edge, edge) = 4 (t(P3) - t(edge)^2) = 4 (2/9 - 16/81).
    CHECK(*p3.max_residual_exact == Rational(8, 81));
    auto r1 = Graphon::rank_one(Rational(1, 2), {Rational(1, 2), Rational(1, 2)}, {Rational(1, 5), Rational(7, 5)});
    CHECK(evaluate(kappa2(graphs::edge(), graphs::edge()), r1).value > 0);
    CHECK_FALSE(singularity_report(r1, 3, 1e-12).singular);
    // C5 is regular, so it is locally singular for pairs of edges.
    CHECK(evaluate(kappa2(graphs::edge(), graphs::edge()), step_from_graph(graphs::cycle(5))).value == 0);
}

TEST_CASE("CGW gap") {
    CHECK(*cgw_check(Graphon::constant(Rational(1, 2))).gap.exact == 0);
    auto c5 = cgw_check(step_from_graph(graphs::cycle(5)));
    CHECK(*c5.t_c4.exact == Rational(hom_count(graphs::square(), graphs::cycle(5))) / 625);
    CHECK(*c5.gap.exact > 0);
    std::mt19937 rng(10);
    for (int t = 0; t < 30; ++t) CHECK(*cgw_check(random_step(1 + static_cast<int>(rng() % 5), rng)).gap.exact >= 0);
}

TEST_CASE("kernel densities by Monte Carlo") {
    auto k = Graphon::kernel([](double x, double y) { return x * y; }, "smooth");
    // t(edge) = 1/4, t(P3) = 1/3 * 1/4 ... integral of x y^2 z = 1/12.
    auto e = density(graphs::edge(), k, {1 << 16, 3});
    CHECK(std::abs(e.value - 0.25) < 5 * e.std_error + 1e-9);
    auto p = density(graphs::path(3), k, {1 << 16, 3});
    CHECK(std::abs(p.value - 1.0 / 12) < 5 * p.std_error + 1e-9);
    CHECK(p.std_error > 0);
    auto bad = Graphon::kernel([](double x, double) { return 2 * x; });
    CHECK_THROWS_AS(density(graphs::edge(), bad), ValidationError);
    CHECK(*density(Graph(3), k).exact == 1);
    CHECK(cgw_check(k, {1 << 15, 5}).gap.value > 0);
}
