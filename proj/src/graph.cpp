#include "singraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace sg {

namespace {

void check_order(int n) {
    if (n < 0 || n > kMaxVertices)
        throw ValidationError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    check_order(n);
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n) throw ValidationError("edge endpoint out of range");
        if (i == j) throw ValidationError("self-loop in simple graph");
        if (adjacent(i, j)) throw ValidationError("duplicate edge");
        adj_[static_cast<size_t>(i)] |= static_cast<std::uint16_t>(1U << j);
        adj_[static_cast<size_t>(j)] |= static_cast<std::uint16_t>(1U << i);
    }
}

auto Graph::from_rows(int n, const Rows& rows) -> Graph {
    check_order(n);
    Graph g;
    g.n_ = n;
    std::uint32_t mask = (n == 16) ? 0xFFFFU : ((1U << n) - 1U);
    for (int i = 0; i < kMaxVertices; ++i) {
        std::uint16_t r = rows[static_cast<size_t>(i)];
        if (i >= n && r) throw ValidationError("adjacency row beyond graph order");
        if (r & ~mask) throw ValidationError("adjacency bit beyond graph order");
        if ((r >> i) & 1U) throw ValidationError("self-loop in simple graph");
        g.adj_[static_cast<size_t>(i)] = r;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j) != g.adjacent(j, i)) throw ValidationError("adjacency not symmetric");
    return g;
}

auto Graph::size() const -> int {
    int s = 0;
    for (int i = 0; i < n_; ++i) s += std::popcount(adj_[static_cast<size_t>(i)]);
    return s / 2;
}

auto Graph::degree(int i) const -> int { return std::popcount(adj_[static_cast<size_t>(i)]); }

auto Graph::degrees() const -> std::vector<int> {
    std::vector<int> d(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) d[static_cast<size_t>(i)] = degree(i);
    return d;
}

auto Graph::edges() const -> std::vector<Edge> {
    std::vector<Edge> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

auto Graph::relabel(const std::vector<int>& perm) const -> Graph {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    Graph h;
    h.n_ = n_;
    for (int i = 0; i < n_; ++i) {
        std::uint16_t r = adj_[static_cast<size_t>(i)];
        std::uint16_t out = 0;
        while (r) {
            int j = std::countr_zero(r);
            r &= static_cast<std::uint16_t>(r - 1);
            out |= static_cast<std::uint16_t>(1U << perm[static_cast<size_t>(j)]);
        }
        h.adj_[static_cast<size_t>(perm[static_cast<size_t>(i)])] = out;
    }
    return h;
}

auto Graph::induced(const std::vector<int>& vertices) const -> Graph {
    Graph h(static_cast<int>(vertices.size()));
    for (size_t a = 0; a < vertices.size(); ++a)
        for (size_t b = 0; b < vertices.size(); ++b)
            if (adjacent(vertices[a], vertices[b])) h.adj_[a] |= static_cast<std::uint16_t>(1U << b);
    return h;
}

auto Graph::components() const -> std::vector<std::vector<int>> {
    std::vector<std::vector<int>> out;
    std::uint32_t seen = 0;
    for (int s = 0; s < n_; ++s) {
        if ((seen >> s) & 1U) continue;
        std::uint32_t comp = 1U << s, frontier = comp;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj_[static_cast<size_t>(std::countr_zero(f))];
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        std::vector<int> c;
        for (std::uint32_t f = comp; f; f &= f - 1) c.push_back(std::countr_zero(f));
        out.push_back(std::move(c));
    }
    return out;
}

auto Graph::connected() const -> bool { return n_ <= 1 || components().size() == 1; }

auto Graph::labelled_bytes() const -> std::string {
    std::string s(1 + 2 * static_cast<size_t>(n_), '\0');
    s[0] = static_cast<char>(n_);
    for (int i = 0; i < n_; ++i) {
        s[1 + 2 * static_cast<size_t>(i)] = static_cast<char>(adj_[static_cast<size_t>(i)] >> 8);
        s[2 + 2 * static_cast<size_t>(i)] = static_cast<char>(adj_[static_cast<size_t>(i)] & 0xFF);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Canonical labelling: individualisation-refinement, keeping the minimum
// relabelled adjacency over all leaves. Twins (u, v with N(u)-v == N(v)-u) are
// exchanged by the transposition (u v), so only one of them is branched on.

namespace {

using Cells = std::vector<std::vector<int>>;

void refine(const Graph& g, Cells& cells) {
    int n = g.order();
    std::vector<int> cell_of(static_cast<size_t>(n));
    while (true) {
        for (size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) cell_of[static_cast<size_t>(v)] = static_cast<int>(c);
        Cells next;
        next.reserve(static_cast<size_t>(n));
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> sig;
            sig.reserve(cell.size());
            for (int v : cell) {
                std::vector<int> counts(cells.size(), 0);
                for (std::uint32_t r = g.row(v); r; r &= r - 1) ++counts[static_cast<size_t>(cell_of[static_cast<size_t>(std::countr_zero(r))])];
                sig.emplace_back(std::move(counts), v);
            }
            std::sort(sig.begin(), sig.end());
            size_t a = 0;
            while (a < sig.size()) {
                size_t b = a;
                std::vector<int> part;
                while (b < sig.size() && sig[b].first == sig[a].first) part.push_back(sig[b++].second);
                next.push_back(std::move(part));
                a = b;
            }
        }
        bool stable = next.size() == cells.size();
        cells = std::move(next);
        if (stable) return;
    }
}

auto twins(const Graph& g, int u, int v) -> bool {
    auto ru = static_cast<std::uint16_t>(g.row(u) & ~(1U << v));
    auto rv = static_cast<std::uint16_t>(g.row(v) & ~(1U << u));
    return ru == rv;
}

void search(const Graph& g, Cells cells, Graph& best, bool& have) {
    refine(g, cells);
    if (static_cast<int>(cells.size()) == g.order()) {
        std::vector<int> perm(static_cast<size_t>(g.order()));
        for (size_t i = 0; i < cells.size(); ++i) perm[static_cast<size_t>(cells[i][0])] = static_cast<int>(i);
        Graph h = g.relabel(perm);
        if (!have || h.rows() < best.rows()) {
            best = h;
            have = true;
        }
        return;
    }
    size_t target = 0;
    while (cells[target].size() == 1) ++target;
    std::vector<int> tried;
    for (int v : cells[target]) {
        bool skip = false;
        for (int u : tried) skip = skip || twins(g, u, v);
        if (skip) continue;
        tried.push_back(v);
        Cells next;
        next.reserve(cells.size() + 1);
        for (size_t c = 0; c < cells.size(); ++c) {
            if (c != target) {
                next.push_back(cells[c]);
                continue;
            }
            next.push_back({v});
            std::vector<int> rest;
            for (int w : cells[c])
                if (w != v) rest.push_back(w);
            next.push_back(std::move(rest));
        }
        search(g, std::move(next), best, have);
    }
}

auto canonical_with_cells(const Graph& g, Cells cells) -> Graph {
    Graph best;
    bool have = false;
    search(g, std::move(cells), best, have);
    return best;
}

auto canonical_connected(const Graph& g) -> Graph {
    if (g.order() <= 1) return g;
    std::vector<int> all(static_cast<size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    return canonical_with_cells(g, Cells{all});
}

auto compute_canonical_form(const Graph& g) -> Graph {
    auto comps = g.components();
    if (comps.size() <= 1) return canonical_connected(g);
    std::vector<Graph> parts;
    parts.reserve(comps.size());
    for (const auto& c : comps) parts.push_back(canonical_connected(g.induced(c)));
    std::sort(parts.begin(), parts.end(), [](const Graph& a, const Graph& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.rows() < b.rows();
    });
    return disjoint_union(parts);
}

auto key_of(const Graph& canon) -> CanonicalKey { return CanonicalKey{canon.labelled_bytes()}; }

}  // namespace

auto canonical_form(const Graph& g) -> Graph {
    thread_local std::unordered_map<std::string, Graph> cache;
    std::string lb = g.labelled_bytes();
    auto it = cache.find(lb);
    if (it != cache.end()) return it->second;
    if (cache.size() > (1U << 20)) cache.clear();
    Graph c = compute_canonical_form(g);
    cache.emplace(std::move(lb), c);
    return c;
}

auto canonical_key(const Graph& g) -> CanonicalKey { return key_of(canonical_form(g)); }

auto canonical_key_exhaustive(const Graph& g) -> CanonicalKey {
    if (g.order() > 8) throw ValidationError("exhaustive canonical key limited to 8 vertices");
    std::vector<int> perm(static_cast<size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    Graph best = g;
    do {
        Graph h = g.relabel(perm);
        if (h.rows() < best.rows()) best = h;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return CanonicalKey{"x" + best.labelled_bytes()};
}

auto isomorphic(const Graph& a, const Graph& b) -> bool {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

auto disjoint_union(const Graph& a, const Graph& b) -> Graph { return disjoint_union(std::vector<Graph>{a, b}); }

auto disjoint_union(const std::vector<Graph>& parts) -> Graph {
    int n = 0;
    for (const auto& p : parts) n += p.order();
    if (n > kMaxVertices) throw ValidationError("disjoint union exceeds " + std::to_string(kMaxVertices) + " vertices");
    Graph::Rows rows{};
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.order(); ++i) rows[static_cast<size_t>(off + i)] = static_cast<std::uint16_t>(p.row(i) << off);
        off += p.order();
    }
    return Graph::from_rows(n, rows);
}

auto join(const Graph& f1, const Graph& f2, int i1, int i2) -> Graph {
    int k1 = f1.order(), k2 = f2.order();
    if (i1 < 0 || i1 >= k1 || i2 < 0 || i2 >= k2) throw ValidationError("join vertex index out of range");
    int n = k1 + k2 - 1;
    if (n > kMaxVertices) throw ValidationError("join exceeds " + std::to_string(kMaxVertices) + " vertices");
    auto map2 = [&](int j) { return j == i2 ? i1 : (j < i2 ? k1 + j : k1 + j - 1); };
    std::vector<Edge> edges = f1.edges();
    for (auto [a, b] : f2.edges()) edges.emplace_back(map2(a), map2(b));
    Graph g(n, edges);
    if (g.size() != f1.size() + f2.size()) throw std::logic_error("join lost edges");
    return g;
}

auto contract(const Graph& f, const SetPartition& pi) -> ContractedGraph {
    if (pi.size() != f.order()) throw ValidationError("partition does not cover the vertex set");
    ContractedGraph out;
    Graph::Rows rows{};
    for (auto [a, b] : f.edges()) {
        int la = pi.block_of(a), lb = pi.block_of(b);
        if (la == lb) {
            out.has_loop = true;
            continue;
        }
        rows[static_cast<size_t>(la)] |= static_cast<std::uint16_t>(1U << lb);
        rows[static_cast<size_t>(lb)] |= static_cast<std::uint16_t>(1U << la);
    }
    out.graph = Graph::from_rows(pi.block_count(), rows);
    return out;
}

auto hom_count(const Graph& f, const Graph& g) -> Integer {
    int k = f.order(), n = g.order();
    if (k > 10) throw ValidationError("hom_count: motive larger than 10 vertices");
    if (k == 0) return 1;
    if (n == 0) return 0;

    // Order vertices so each one follows a neighbour when possible.
    std::vector<int> order;
    std::uint32_t placed = 0;
    while (static_cast<int>(order.size()) < k) {
        int start = -1;
        for (int v = 0; v < k; ++v)
            if (!((placed >> v) & 1U) && (start < 0 || f.degree(v) > f.degree(start))) start = v;
        std::vector<int> queue{start};
        placed |= 1U << start;
        for (size_t q = 0; q < queue.size(); ++q) {
            order.push_back(queue[q]);
            for (std::uint32_t r = f.row(queue[q]); r; r &= r - 1) {
                int w = std::countr_zero(r);
                if (!((placed >> w) & 1U)) {
                    placed |= 1U << w;
                    queue.push_back(w);
                }
            }
        }
    }
    std::vector<int> pos(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    // Trailing vertices with no later neighbour are counted by popcount.
    int tail = k;
    while (tail > 0) {
        int v = order[static_cast<size_t>(tail - 1)];
        bool later = false;
        for (std::uint32_t r = f.row(v); r; r &= r - 1) later = later || pos[static_cast<size_t>(std::countr_zero(r))] > tail - 1;
        if (later) break;
        --tail;
    }
    std::uint32_t full = (n == 32) ? ~0U : ((1U << n) - 1U);
    std::vector<int> img(static_cast<size_t>(k), -1);
    std::function<unsigned long long(int)> rec = [&](int i) -> unsigned long long {
        if (i == tail) {
            unsigned long long prod = 1;
            for (int t = tail; t < k && prod; ++t) {
                int v = order[static_cast<size_t>(t)];
                std::uint32_t mask = full;
                for (std::uint32_t r = f.row(v); r; r &= r - 1) mask &= g.row(img[static_cast<size_t>(std::countr_zero(r))]);
                prod *= static_cast<unsigned long long>(std::popcount(mask));
            }
            return prod;
        }
        int v = order[static_cast<size_t>(i)];
        std::uint32_t mask = full;
        for (std::uint32_t r = f.row(v); r; r &= r - 1) {
            int u = std::countr_zero(r);
            if (pos[static_cast<size_t>(u)] < i) mask &= g.row(img[static_cast<size_t>(u)]);
        }
        unsigned long long total = 0;
        for (; mask; mask &= mask - 1) {
            img[static_cast<size_t>(v)] = std::countr_zero(mask);
            total += rec(i + 1);
        }
        return total;
    };
    unsigned long long c = rec(0);
    Integer out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(c), 0, 0, &c);
    return out;
}

auto hom_density(const Graph& f, const Graph& g) -> Rational {
    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(g.order()), static_cast<unsigned long>(f.order()));
    if (denom == 0) throw ValidationError("hom_density into the empty graph");
    Rational q(hom_count(f, g), denom);
    q.canonicalize();
    return q;
}

auto same_orbit(const Graph& g, int u, int v) -> bool {
    if (u == v) return true;
    if (g.degree(u) != g.degree(v)) return false;
    auto cells_for = [&](int x) {
        std::vector<int> rest;
        for (int w = 0; w < g.order(); ++w)
            if (w != x) rest.push_back(w);
        Cells c{{x}};
        if (!rest.empty()) c.push_back(rest);
        return c;
    };
    return canonical_with_cells(g, cells_for(u)) == canonical_with_cells(g, cells_for(v));
}

auto is_transitive(const Graph& f) -> bool {
    for (int v = 1; v < f.order(); ++v)
        if (!same_orbit(f, 0, v)) return false;
    return true;
}

auto is_transitive_exhaustive(const Graph& f) -> bool {
    int n = f.order();
    if (n > 8) throw ValidationError("exhaustive transitivity check limited to 8 vertices");
    if (n <= 1) return true;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t orbit = 0;
    do {
        if (f.relabel(perm) == f) orbit |= 1U << perm[0];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::popcount(orbit) == n;
}

auto join_transitive_decomposition(const Graph& f) -> std::optional<JoinTransitiveDecomposition> {
    int n = f.order();
    std::vector<std::vector<int>> blocks;
    // Tarjan's biconnected components with an edge stack.
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<Edge> stack;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = timer++;
        for (std::uint32_t r = f.row(v); r; r &= r - 1) {
            int w = std::countr_zero(r);
            if (w == parent) continue;
            if (disc[static_cast<size_t>(w)] < 0) {
                stack.emplace_back(v, w);
                dfs(w, v);
                low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(w)]);
                if (low[static_cast<size_t>(w)] >= disc[static_cast<size_t>(v)]) {
                    std::set<int> verts;
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        verts.insert(e.first);
                        verts.insert(e.second);
                        if (e == Edge{v, w}) break;
                    }
                    blocks.emplace_back(verts.begin(), verts.end());
                }
            } else if (disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(v)]) {
                stack.emplace_back(v, w);
                low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(w)]);
            }
        }
    };
    for (int v = 0; v < n; ++v) {
        if (disc[static_cast<size_t>(v)] >= 0) continue;
        if (f.degree(v) == 0) {
            disc[static_cast<size_t>(v)] = timer++;
            blocks.push_back({v});
            continue;
        }
        dfs(v, -1);
    }
    std::sort(blocks.begin(), blocks.end());
    JoinTransitiveDecomposition d;
    std::vector<int> uses(static_cast<size_t>(n), 0);
    for (const auto& b : blocks) {
        Graph piece = f.induced(b);
        if (!is_transitive(piece)) return std::nullopt;
        d.pieces.push_back(TransitivePiece{piece, b});
        for (int v : b) ++uses[static_cast<size_t>(v)];
    }
    for (int v = 0; v < n; ++v)
        if (uses[static_cast<size_t>(v)] > 1) d.junctions.push_back(v);
    return d;
}

auto enumerate_graphs(int k, bool connected_only) -> std::vector<Graph> {
    if (k < 0 || k > 7) throw ValidationError("enumerate_graphs supports 0 <= k <= 7");
    // Every graph on k vertices is a graph on k-1 vertices plus one vertex.
    std::map<CanonicalKey, Graph> level{{canonical_key(Graph(0)), Graph(0)}};
    for (int m = 1; m <= k; ++m) {
        std::map<CanonicalKey, Graph> next;
        for (const auto& [key, g] : level) {
            for (std::uint32_t nb = 0; nb < (1U << (m - 1)); ++nb) {
                Graph::Rows rows = g.rows();
                rows[static_cast<size_t>(m - 1)] = static_cast<std::uint16_t>(nb);
                for (int j = 0; j < m - 1; ++j)
                    if ((nb >> j) & 1U) rows[static_cast<size_t>(j)] |= static_cast<std::uint16_t>(1U << (m - 1));
                Graph h = canonical_form(Graph::from_rows(m, rows));
                next.emplace(key_of(h), h);
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (const auto& [key, g] : level)
        if (!connected_only || g.connected()) out.push_back(g);
    std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) { return a.size() < b.size(); });
    return out;
}

auto enumerate_trees(int k) -> std::vector<Graph> {
    if (k < 1 || k > kMaxVertices) throw ValidationError("enumerate_trees supports 1 <= k <= 16");
    std::map<CanonicalKey, Graph> level{{canonical_key(Graph(1)), Graph(1)}};
    for (int m = 2; m <= k; ++m) {
        std::map<CanonicalKey, Graph> next;
        for (const auto& [key, t] : level) {
            for (int v = 0; v < m - 1; ++v) {
                auto edges = t.edges();
                edges.emplace_back(v, m - 1);
                Graph h = canonical_form(Graph(m, edges));
                next.emplace(key_of(h), h);
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (const auto& [key, g] : level) out.push_back(g);
    return out;
}

auto is_forest(const Graph& g) -> bool {
    return g.size() == g.order() - static_cast<int>(g.components().size());
}

auto is_tree(const Graph& g) -> bool { return g.order() >= 1 && g.connected() && g.size() == g.order() - 1; }

namespace graphs {

auto empty(int n) -> Graph { return Graph(n); }
auto edge() -> Graph { return Graph(2, {{0, 1}}); }

auto path(int k) -> Graph {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph(k, e);
}

auto cycle(int k) -> Graph {
    if (k < 3) throw ValidationError("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Graph(k, e);
}

auto complete(int k) -> Graph {
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return Graph(k, e);
}

auto star(int leaves) -> Graph {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

auto diamond() -> Graph { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }
auto triangle() -> Graph { return cycle(3); }
auto square() -> Graph { return cycle(4); }

}  // namespace graphs

auto to_graph6(const Graph& g) -> std::string {
    int n = g.order();
    std::string out(1, static_cast<char>(63 + n));
    int bits = 0, acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                bits = acc = 0;
            }
        }
    }
    if (bits) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

auto from_graph6(const std::string& s) -> Graph {
    std::string t = s;
    if (t.rfind(">>graph6<<", 0) == 0) t = t.substr(10);
    if (t.empty()) throw ValidationError("empty graph6 string");
    int n = t[0] - 63;
    if (n < 0 || n > 62) throw ValidationError("graph6 order out of range: " + s);
    check_order(n);
    size_t needed = (static_cast<size_t>(n) * static_cast<size_t>(n - 1) / 2 + 5) / 6;
    if (t.size() != 1 + needed) throw ValidationError("graph6 length mismatch: " + s);
    std::vector<Edge> edges;
    size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int c = t[1 + bit / 6] - 63;
            if (c < 0 || c > 63) throw ValidationError("graph6 character out of range: " + s);
            if ((c >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

auto parse_motive(const std::string& text) -> Graph {
    static const std::regex sized(R"(^(C|P|K|star|path|cycle|complete|empty)_?(\d+)$)");
    std::smatch m;
    if (text == "edge") return graphs::edge();
    if (text == "vertex") return Graph(1);
    if (text == "triangle") return graphs::triangle();
    if (text == "square") return graphs::square();
    if (text == "diamond") return graphs::diamond();
    if (std::regex_match(text, m, sized)) {
        std::string fam = m[1];
        int k = std::stoi(m[2]);
        if (k > kMaxVertices) throw ValidationError("motive too large: " + text);
        if (fam == "C" || fam == "cycle") return graphs::cycle(k);
        if (fam == "P" || fam == "path") return graphs::path(k);
        if (fam == "K" || fam == "complete") return graphs::complete(k);
        if (fam == "empty") return graphs::empty(k);
        if (k + 1 > kMaxVertices) throw ValidationError("motive too large: " + text);
        return graphs::star(k);
    }
    return from_graph6(text);
}

auto describe(const Graph& g) -> std::string {
    auto comps = g.components();
    if (comps.size() > 1) {
        std::vector<std::string> names;
        for (const auto& c : comps) names.push_back(describe(g.induced(c)));
        std::sort(names.begin(), names.end());
        std::string out;
        for (size_t i = 0; i < names.size(); ++i) out += (i ? "+" : "") + names[i];
        return out;
    }
    int n = g.order(), e = g.size();
    if (n == 0) return "empty_0";
    if (n == 1) return "vertex";
    if (n == 2) return "edge";
    if (e == n - 1) {
        if (isomorphic(g, graphs::path(n))) return "P" + std::to_string(n);
        if (isomorphic(g, graphs::star(n - 1))) return "star" + std::to_string(n - 1);
    }
    if (e == n && isomorphic(g, graphs::cycle(n))) return "C" + std::to_string(n);
    if (e == n * (n - 1) / 2) return "K" + std::to_string(n);
    if (n == 4 && e == 5) return "diamond";
    return to_graph6(canonical_form(g));
}

}  // namespace sg
