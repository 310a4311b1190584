#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "singraph/mtree.hpp"

#include <numeric>
#include <random>

using namespace sg;

namespace {

// Oracle: rational determinant by permutation expansion.
auto det_leibniz(const std::vector<std::vector<Rational>>& m) -> Rational {
    const int n = static_cast<int>(m.size());
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    Rational total = 0;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inv += p[static_cast<size_t>(i)] > p[static_cast<size_t>(j)];
        Rational term = inv % 2 ? -1 : 1;
        for (int i = 0; i < n; ++i) term *= m[static_cast<size_t>(i)][static_cast<size_t>(p[static_cast<size_t>(i)])];
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

auto marked_matrix(const Graph& g, const std::vector<Rational>& z, const std::vector<Rational>& d)
    -> std::vector<std::vector<Rational>> {
    auto n = static_cast<size_t>(g.order());
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = d[i];
    for (auto [a, b] : g.edges()) {
        auto ua = static_cast<size_t>(a), ub = static_cast<size_t>(b);
        Rational w = z[ua] * z[ub];
        m[ua][ub] -= w;
        m[ub][ua] -= w;
        m[ua][ua] += w;
        m[ub][ub] += w;
    }
    return m;
}

auto random_graph(int n, std::mt19937& rng) -> Graph {
    std::bernoulli_distribution coin(0.5);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph(n, e);
}

auto random_rational(std::mt19937& rng) -> Rational {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    return Rational(num(rng)) / den(rng);
}

}  // namespace

TEST_CASE("four-vertex example expands to the fourteen forest terms") {
    // 1-indexed edges {1,4},{4,3},{3,2},{2,4}.
    Graph g(4, {{0, 3}, {3, 2}, {2, 1}, {1, 3}});
    const int nv = 8;
    auto z = [&](int i, int pw = 1) { return Poly::var(nv, i - 1, pw); };
    auto d = [&](int i) { return Poly::var(nv, 4 + i - 1); };
    Poly all = d(1) + d(2) + d(3) + d(4);
    Poly expected = d(1) * d(2) * d(3) * d(4) + z(1) * z(4) * (d(1) + d(4)) * d(2) * d(3) +
                    z(2) * z(3) * (d(2) + d(3)) * d(1) * d(4) + z(2) * z(4) * (d(2) + d(4)) * d(1) * d(3) +
                    z(3) * z(4) * (d(3) + d(4)) * d(1) * d(2) + z(1) * z(2) * z(3) * z(4) * (d(1) + d(4)) * (d(2) + d(3)) +
                    z(1) * z(2) * z(4, 2) * d(3) * (d(1) + d(2) + d(4)) + z(1) * z(3) * z(4, 2) * d(2) * (d(1) + d(3) + d(4)) +
                    z(2) * z(3, 2) * z(4) * d(1) * (d(2) + d(3) + d(4)) + z(2, 2) * z(3) * z(4) * d(1) * (d(2) + d(3) + d(4)) +
                    z(2) * z(3) * z(4, 2) * d(1) * (d(2) + d(3) + d(4)) + z(1) * z(2) * z(3, 2) * z(4, 2) * all +
                    z(1) * z(2, 2) * z(3) * z(4, 2) * all + z(1) * z(2) * z(3) * z(4, 3) * all;
    auto r = marked_laplacian_det(g);
    CHECK(r.determinant == expected);
    CHECK(r.forest_sum == expected);
    CHECK(spanning_forests(g).size() == 14);
}

TEST_CASE("forest enumeration") {
    CHECK(spanning_forests(graphs::complete(3)).size() == 7);
    auto lone = spanning_forests(Graph(4));
    REQUIRE(lone.size() == 1);
    CHECK(lone[0].trees == 4);
    // K4: 1 + 6 + 15 + 16 acyclic subsets by edge count.
    std::vector<int> by_size(4, 0);
    for (const auto& f : spanning_forests(graphs::complete(4))) ++by_size[f.edges.size()];
    CHECK(by_size == std::vector<int>{1, 6, 15, 16});
    CHECK_THROWS_AS(spanning_forests(graphs::complete(8)), ValidationError);
}

TEST_CASE("Bareiss, forest sum and Leibniz agree on random instances") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + t % 6;
        Graph g = random_graph(n, rng);
        std::vector<Rational> z, d;
        for (int i = 0; i < n; ++i) {
            z.push_back(random_rational(rng));
            d.push_back(t % 5 == 0 ? Rational(0) : random_rational(rng));
        }
        auto [bareiss, forests] = marked_laplacian_det(g, z, d);
        Rational leibniz = det_leibniz(marked_matrix(g, z, d));
        CHECK(bareiss == leibniz);
        CHECK(forests == leibniz);
    }
}

TEST_CASE("zero diagonal gives a singular Laplacian") {
    std::mt19937 rng(3);
    for (int n = 1; n <= 6; ++n) {
        Graph g = random_graph(n, rng);
        std::vector<Rational> z(static_cast<size_t>(n)), d(static_cast<size_t>(n), Rational(0));
        for (auto& x : z) x = random_rational(rng);
        auto [bareiss, forests] = marked_laplacian_det(g, z, d);
        CHECK(bareiss == 0);
        CHECK(forests == 0);
    }
}

TEST_CASE("unit weights reduce to the forest-partition sum") {
    Graph g(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
    auto r = marked_laplacian_det(g);
    Poly reduced = r.determinant;
    for (int i = 0; i < 5; ++i) reduced = reduced.substitute(i, Poly(10, 1));
    Poly partition_sum(10);
    for (const auto& f : spanning_forests(g)) {
        std::vector<Poly> tree(static_cast<size_t>(f.trees), Poly(10));
        for (int v = 0; v < 5; ++v) tree[static_cast<size_t>(f.tree_of[static_cast<size_t>(v)])] += Poly::var(10, 5 + v);
        Poly w(10, 1);
        for (const auto& t : tree) w *= t;
        partition_sum += w;
    }
    CHECK(reduced == partition_sum);
}

TEST_CASE("complete graph: x(x+n)^(n-1) and elementary symmetric expansion") {
    std::mt19937 rng(11);
    for (int n = 1; n <= 7; ++n) {
        Graph k = graphs::complete(n);
        std::vector<Rational> ones(static_cast<size_t>(n), Rational(1));
        for (long x : {1L, 2L, -3L}) {
            std::vector<Rational> d(static_cast<size_t>(n), Rational(x));
            Rational expected = x;
            for (int i = 1; i < n; ++i) expected *= Rational(x + n);
            auto [bareiss, forests] = marked_laplacian_det(k, ones, d);
            CHECK(bareiss == expected);
            CHECK(forests == expected);
        }
        if (n == 7) break;
        std::vector<Rational> d(static_cast<size_t>(n));
        for (auto& v : d) v = random_rational(rng);
        // e_k(d) by the product expansion of prod (1 + d_i t).
        std::vector<Rational> e(static_cast<size_t>(n + 1), Rational(0));
        e[0] = 1;
        for (const auto& v : d)
            for (int j = n; j >= 1; --j) e[static_cast<size_t>(j)] += v * e[static_cast<size_t>(j - 1)];
        Rational expected = 0;
        for (int j = 1; j <= n; ++j) {
            Rational w = j;
            for (int i = 0; i < n - j - 1; ++i) w *= n;
            if (j == n) w /= n;
            expected += w * e[static_cast<size_t>(j)];
        }
        CHECK(marked_laplacian_det(k, ones, d).second == expected);
    }
}

TEST_CASE("rooted forest counts") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            auto c = rooted_forest_count(n, k);
            CHECK(c.brute_force == c.formula);
        }
    // Cayley: n^(n-1) rooted trees.
    CHECK(rooted_forest_count(5, 1).formula == 625);
    CHECK(rooted_forest_count(3, 1).brute_force == 9);
    CHECK(rooted_forest_count(5, 2).brute_force == 500);
    for (int n = 1; n <= 6; ++n) CHECK(rooted_forest_count(n, n).brute_force == 1);
    CHECK_THROWS_AS(rooted_forest_count(4, 5), ValidationError);
}

TEST_CASE("Cayley degree generating function") {
    Poly z1 = Poly::var(3, 0), z2 = Poly::var(3, 1), z3 = Poly::var(3, 2);
    CHECK(cayley_degree_genfun(3).brute_force == z1 * z2 * z3 * (z1 + z2 + z3));
    for (int s = 1; s <= 6; ++s) {
        auto c = cayley_degree_genfun(s);
        CHECK(c.brute_force == c.closed_form);
        std::vector<Rational> ones(static_cast<size_t>(s), Rational(1));
        Integer cayley = 1;
        for (int i = 0; i < s - 2; ++i) cayley *= s;
        CHECK(c.brute_force.evaluate(ones) == Rational(cayley));
    }
}
