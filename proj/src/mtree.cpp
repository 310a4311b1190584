#include "singraph/mtree.hpp"

#include <numeric>

namespace sg {

namespace {

struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    auto find(int x) -> int {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    }
    std::vector<int> parent;
};

}  // namespace

void for_each_spanning_forest(const Graph& g, const std::function<void(const Forest&)>& visit) {
    auto edges = g.edges();
    if (edges.size() > kMaxForestEdges) throw ValidationError("forest enumeration supports at most 24 edges");
    int n = g.order();
    // Depth-first over edges; a union-find snapshot per level rejects cycles early.
    std::vector<Edge> chosen;
    std::function<void(std::size_t, const UnionFind&)> rec = [&](std::size_t i, const UnionFind& uf) {
        if (i == edges.size()) {
            Forest f;
            f.edges = chosen;
            UnionFind u = uf;
            std::vector<int> label(static_cast<std::size_t>(n), -1);
            f.tree_of.assign(static_cast<std::size_t>(n), -1);
            for (int v = 0; v < n; ++v) {
                int r = u.find(v);
                if (label[static_cast<std::size_t>(r)] < 0) label[static_cast<std::size_t>(r)] = f.trees++;
                f.tree_of[static_cast<std::size_t>(v)] = label[static_cast<std::size_t>(r)];
            }
            visit(f);
            return;
        }
        rec(i + 1, uf);
        UnionFind next = uf;
        int a = next.find(edges[i].first), b = next.find(edges[i].second);
        if (a == b) return;
        next.parent[static_cast<std::size_t>(a)] = b;
        chosen.push_back(edges[i]);
        rec(i + 1, next);
        chosen.pop_back();
    };
    rec(0, UnionFind(n));
}

auto spanning_forests(const Graph& g) -> std::vector<Forest> {
    std::vector<Forest> out;
    for_each_spanning_forest(g, [&](const Forest& f) { out.push_back(f); });
    return out;
}

auto bareiss_determinant(std::vector<std::vector<Poly>> m) -> Poly {
    const std::size_t n = m.size();
    if (n == 0) return Poly(0, 1);
    int nvars = m[0][0].nvars();
    Poly prev(nvars, 1);
    Rational sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Poly(nvars);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev);
            m[i][k] = Poly(nvars);
        }
        prev = m[k][k];
    }
    return m[n - 1][n - 1] * sign;
}

namespace {

auto forest_weight(const Forest& f, int n, const std::function<Poly(int)>& z, const std::function<Poly(int)>& delta, int nvars)
    -> Poly {
    Poly w(nvars, 1);
    for (auto [a, b] : f.edges) w *= z(a) * z(b);
    std::vector<Poly> tree_delta(static_cast<std::size_t>(f.trees), Poly(nvars));
    for (int v = 0; v < n; ++v) tree_delta[static_cast<std::size_t>(f.tree_of[static_cast<std::size_t>(v)])] += delta(v);
    for (const auto& t : tree_delta) w *= t;
    return w;
}

auto laplacian_routes(const Graph& g, const std::function<Poly(int)>& z, const std::function<Poly(int)>& delta, int nvars)
    -> MarkedLaplacian {
    int n = g.order();
    std::vector<std::vector<Poly>> m(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n), Poly(nvars)));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = delta(i);
    for (auto [a, b] : g.edges()) {
        Poly w = z(a) * z(b);
        auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
        m[ua][ub] -= w;
        m[ub][ua] -= w;
        m[ua][ua] += w;
        m[ub][ub] += w;
    }
    MarkedLaplacian out{bareiss_determinant(m), Poly(nvars)};
    for_each_spanning_forest(g, [&](const Forest& f) { out.forest_sum += forest_weight(f, n, z, delta, nvars); });
    return out;
}

}  // namespace

auto marked_laplacian_det(const Graph& g) -> MarkedLaplacian {
    int n = g.order();
    if (n > 6) throw ValidationError("symbolic marked Laplacian supports at most 6 vertices");
    int nvars = 2 * n;
    return laplacian_routes(
        g, [&](int i) { return Poly::var(nvars, i); }, [&](int i) { return Poly::var(nvars, n + i); }, nvars);
}

auto marked_laplacian_det(const Graph& g, const std::vector<Rational>& z, const std::vector<Rational>& delta)
    -> std::pair<Rational, Rational> {
    int n = g.order();
    if (z.size() != static_cast<std::size_t>(n) || delta.size() != static_cast<std::size_t>(n))
        throw ValidationError("need one z and one delta per vertex");
    auto r = laplacian_routes(
        g, [&](int i) { return Poly(0, z[static_cast<std::size_t>(i)]); }, [&](int i) { return Poly(0, delta[static_cast<std::size_t>(i)]); }, 0);
    return {r.determinant.constant_term(), r.forest_sum.constant_term()};
}

auto rooted_forest_count(int n, int k) -> CountPair {
    if (n < 1 || n > 7) throw ValidationError("rooted_forest_count brute force supports 1 <= n <= 7");
    if (k < 1 || k > n) throw ValidationError("need 1 <= k <= n");
    CountPair out;
    out.formula = binomial(n - 1, k - 1);
    for (int i = 0; i < n - k; ++i) out.formula *= n;
    Integer brute = 0;
    for_each_spanning_forest(graphs::complete(n), [&](const Forest& f) {
        if (f.trees != k) return;
        std::vector<long> size(static_cast<std::size_t>(k), 0);
        for (int t : f.tree_of) ++size[static_cast<std::size_t>(t)];
        Integer roots = 1;
        for (long s : size) roots *= s;
        brute += roots;
    });
    out.brute_force = brute;
    return out;
}

auto cayley_degree_genfun(int s) -> PolyPair {
    if (s < 1 || s > 7) throw ValidationError("cayley_degree_genfun supports 1 <= s <= 7");
    PolyPair out{Poly(s), Poly(s, 1)};
    for_each_spanning_forest(graphs::complete(s), [&](const Forest& f) {
        if (f.trees != 1) return;
        std::vector<int> e(static_cast<std::size_t>(s), 0);
        for (auto [a, b] : f.edges) {
            ++e[static_cast<std::size_t>(a)];
            ++e[static_cast<std::size_t>(b)];
        }
        out.brute_force += Poly::monomial(e, 1);
    });
    if (s == 1) return out;
    Poly sum(s);
    for (int i = 0; i < s; ++i) {
        out.closed_form *= Poly::var(s, i);
        sum += Poly::var(s, i);
    }
    out.closed_form *= sum.pow(s - 2);
    return out;
}

}  // namespace sg
