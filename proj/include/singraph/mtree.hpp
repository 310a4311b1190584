#pragma once

#include "singraph/graph.hpp"
#include "singraph/poly.hpp"

#include <functional>
#include <vector>

namespace sg {

struct Forest {
    std::vector<Edge> edges;
    std::vector<int> tree_of;  // component label per vertex, numbered by smallest vertex
    int trees = 0;
};

inline constexpr int kMaxForestEdges = 24;

// Visits every acyclic edge subset of g once (the empty forest included).
void for_each_spanning_forest(const Graph& g, const std::function<void(const Forest&)>& visit);
auto spanning_forests(const Graph& g) -> std::vector<Forest>;

// Fraction-free (Bareiss) determinant of a square matrix of polynomials.
auto bareiss_determinant(std::vector<std::vector<Poly>> m) -> Poly;

// Symbolic det(diag(delta) + L_G(z)), with L_G(z) the Laplacian of the edge
// weights z_i z_j. Variables: z_i is i, delta_i is n + i.
struct MarkedLaplacian {
    Poly determinant;  // Bareiss expansion
    Poly forest_sum;   // sum over forests of prod z^deg prod_T (sum_T delta)
};
auto marked_laplacian_det(const Graph& g) -> MarkedLaplacian;
// The same at rational values, both routes.
auto marked_laplacian_det(const Graph& g, const std::vector<Rational>& z, const std::vector<Rational>& delta)
    -> std::pair<Rational, Rational>;

struct CountPair {
    Integer brute_force;
    Integer formula;
};
// Families of k disjoint rooted trees covering n labelled vertices.
auto rooted_forest_count(int n, int k) -> CountPair;

struct PolyPair {
    Poly brute_force;
    Poly closed_form;
};
// Sum over spanning trees of K_s of prod z_i^deg(i).
auto cayley_degree_genfun(int s) -> PolyPair;

}  // namespace sg
