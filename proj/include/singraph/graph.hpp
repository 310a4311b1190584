#pragma once

#include "singraph/partition.hpp"
#include "singraph/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sg {

inline constexpr int kMaxVertices = 16;

using Edge = std::pair<int, int>;

// Small simple undirected graph; immutable once built.
class Graph {
public:
    using Rows = std::array<std::uint16_t, kMaxVertices>;

    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);
    static auto from_rows(int n, const Rows& rows) -> Graph;

    auto order() const -> int { return n_; }
    auto size() const -> int;
    auto adjacent(int i, int j) const -> bool { return (adj_[static_cast<size_t>(i)] >> j) & 1U; }
    auto row(int i) const -> std::uint16_t { return adj_[static_cast<size_t>(i)]; }
    auto rows() const -> const Rows& { return adj_; }
    auto degree(int i) const -> int;
    auto degrees() const -> std::vector<int>;
    auto edges() const -> std::vector<Edge>;

    // Vertex i of this graph becomes vertex perm[i].
    auto relabel(const std::vector<int>& perm) const -> Graph;
    // Induced subgraph; vertex vertices[t] becomes t.
    auto induced(const std::vector<int>& vertices) const -> Graph;
    auto components() const -> std::vector<std::vector<int>>;
    auto connected() const -> bool;

    // n followed by the adjacency rows; identifies the labelled graph.
    auto labelled_bytes() const -> std::string;

    friend auto operator==(const Graph& a, const Graph& b) -> bool { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    int n_ = 0;
    Rows adj_{};
};

struct ContractedGraph {
    Graph graph;
    bool has_loop = false;
};

// Bytes identifying the isomorphism class.
struct CanonicalKey {
    std::string bytes;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
    auto operator()(const CanonicalKey& k) const -> size_t { return std::hash<std::string>{}(k.bytes); }
};

// Canonical relabelling: isomorphic graphs map to the identical labelled graph.
auto canonical_form(const Graph& g) -> Graph;
auto canonical_key(const Graph& g) -> CanonicalKey;
// Reference implementation: minimum adjacency over all k! relabellings (k <= 8).
auto canonical_key_exhaustive(const Graph& g) -> CanonicalKey;
auto isomorphic(const Graph& a, const Graph& b) -> bool;

auto disjoint_union(const Graph& a, const Graph& b) -> Graph;
auto disjoint_union(const std::vector<Graph>& parts) -> Graph;
// Identifies vertex i1 of f1 with vertex i2 of f2. The merged vertex is
// numbered i1; the remaining vertices of f2 follow those of f1.
auto join(const Graph& f1, const Graph& f2, int i1, int i2) -> Graph;
auto contract(const Graph& f, const SetPartition& pi) -> ContractedGraph;

auto hom_count(const Graph& f, const Graph& g) -> Integer;
auto hom_density(const Graph& f, const Graph& g) -> Rational;

// Orbit of vertex v under Aut(g) compared with that of u.
auto same_orbit(const Graph& g, int u, int v) -> bool;
auto is_transitive(const Graph& f) -> bool;
auto is_transitive_exhaustive(const Graph& f) -> bool;

struct TransitivePiece {
    Graph graph;                // the piece, relabelled 0..m-1
    std::vector<int> vertices;  // original vertex of each piece vertex
};

struct JoinTransitiveDecomposition {
    std::vector<TransitivePiece> pieces;
    std::vector<int> junctions;  // vertices shared by two or more pieces
};

// Splits f into blocks (2-connected pieces and bridges, isolated vertices on
// their own); f is join-transitive iff every block is vertex-transitive.
auto join_transitive_decomposition(const Graph& f) -> std::optional<JoinTransitiveDecomposition>;

// One representative per isomorphism class, ordered by (edge count, key).
auto enumerate_graphs(int k, bool connected_only) -> std::vector<Graph>;
auto enumerate_trees(int k) -> std::vector<Graph>;
auto is_tree(const Graph& g) -> bool;
auto is_forest(const Graph& g) -> bool;

namespace graphs {
auto empty(int n) -> Graph;
auto edge() -> Graph;
auto path(int k) -> Graph;      // k vertices
auto cycle(int k) -> Graph;
auto complete(int k) -> Graph;
auto star(int leaves) -> Graph;  // centre 0
auto diamond() -> Graph;         // K4 minus an edge
auto triangle() -> Graph;
auto square() -> Graph;
}  // namespace graphs

auto to_graph6(const Graph& g) -> std::string;
auto from_graph6(const std::string& s) -> Graph;
// Named motive (edge, path3, triangle, square, diamond, C_k, P_k, K_k, star_k)
// or graph6 string.
auto parse_motive(const std::string& text) -> Graph;
// Short human-readable name when the graph matches a named family, else graph6.
auto describe(const Graph& g) -> std::string;

}  // namespace sg
