#pragma once

#include "singraph/graphon.hpp"
#include "singraph/observable.hpp"

#include <string>
#include <vector>

namespace sg {

struct FactorizationCheck {
    DensityValue lhs;  // t(f)
    DensityValue rhs;  // product over the transitive pieces
    DensityValue gap;  // lhs - rhs
    std::vector<Graph> pieces;
};

// Throws ValidationError when f is not join-transitive.
auto join_transitive_factorization_check(const Graphon& gamma, const Graph& f, const KernelOptions& mc = {})
    -> FactorizationCheck;

// One equation kappa(T_1..T_s) = 0 over tree densities, rewritten as
// sum_T c_T t(T) = rhs(p), with c_T over the trees of the top size and every
// smaller tree or product replaced by p^|E|.
struct TreeEquation {
    std::string label;
    Observable expansion;
    int size = 0;
    std::vector<Rational> coefficients;  // indexed like TreeLevel::trees of that size
    Poly rhs{1};                         // polynomial in p
    bool satisfied = false;              // t(T) = p^|E| solves it identically
};

struct DroppedEquation {
    std::string label;
    std::string reason;
};

struct TreeLevel {
    int size = 0;
    std::vector<Graph> trees;
    int equations = 0;
    int rank = 0;
    bool determined = false;         // rank equals the number of trees
    bool pinned_to_edge_power = false;  // unique solution is t(T) = p^(size-1)
};

struct TreeSystemReport {
    int max_size = 0;
    bool include_kappa3 = false;
    std::vector<TreeEquation> equations;
    std::vector<DroppedEquation> dropped;
    std::vector<TreeLevel> levels;  // sizes 3..max_size
    bool all_satisfied = false;
};

// Equations: kappa2 over tree pairs and, optionally, kappa3 over tree
// triples, grouped by the size of the trees they produce. max_size <= 7.
auto tree_equation_system(int max_size, bool include_kappa3) -> TreeSystemReport;

// Human-readable form such as "p^3 = 3/4*t(P4) + 1/4*t(star3)".
auto format_tree_equation(const TreeEquation& e, const TreeLevel& level) -> std::string;

struct GaussianEdgeReport {
    DensityValue kappa3;  // 8 (t(C3) - p^3)
    DensityValue kappa4;  // 48 (t(C4) - p^4)
    CgwReport cgw;
    bool singular_input = false;
    std::string warning;
};

auto gaussian_edge_criterion(const Graphon& gamma, const KernelOptions& mc = {}) -> GaussianEdgeReport;

}  // namespace sg
