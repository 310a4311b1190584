#include "singraph/singular.hpp"

#include <cmath>

namespace sg {

namespace {

auto product_value(const std::vector<DensityValue>& parts) -> DensityValue {
    DensityValue out{1.0, Rational(1), 0.0};
    for (const auto& d : parts) {
        // first-order error propagation for the numeric route
        out.std_error = std::abs(out.value) * d.std_error + std::abs(d.value) * out.std_error;
        out.value *= d.value;
        if (out.exact && d.exact)
            *out.exact *= *d.exact;
        else
            out.exact.reset();
    }
    return out;
}

auto difference(const DensityValue& a, const DensityValue& b, const Rational& scale = 1) -> DensityValue {
    DensityValue out;
    out.value = scale.get_d() * (a.value - b.value);
    out.std_error = std::abs(scale.get_d()) * (a.std_error + b.std_error);
    if (a.exact && b.exact) {
        out.exact = scale * (*a.exact - *b.exact);
        out.value = out.exact->get_d();
    }
    return out;
}

auto edge_power(int edges) -> Poly { return Poly::var(1, 0, edges); }

}  // namespace

auto join_transitive_factorization_check(const Graphon& gamma, const Graph& f, const KernelOptions& mc)
    -> FactorizationCheck {
    auto dec = join_transitive_decomposition(f);
    if (!dec) throw ValidationError("motive is not join-transitive: " + describe(f));
    FactorizationCheck out;
    std::vector<DensityValue> parts;
    for (const auto& piece : dec->pieces) {
        out.pieces.push_back(piece.graph);
        parts.push_back(density(piece.graph, gamma, mc));
    }
    out.lhs = density(f, gamma, mc);
    out.rhs = product_value(parts);
    out.gap = difference(out.lhs, out.rhs);
    return out;
}

namespace {

struct Level {
    TreeLevel info;
    std::map<CanonicalKey, std::size_t> index;
};

// Rank of a rational matrix by Gaussian elimination; solves when square
// and full rank (rhs may be empty).
auto eliminate(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::size_t cols, std::vector<Rational>* solution)
    -> int {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t r = rank;
        while (r < a.size() && a[r][c] == 0) ++r;
        if (r == a.size()) continue;
        std::swap(a[r], a[rank]);
        std::swap(b[r], b[rank]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == rank || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[rank][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
            b[i] -= f * b[rank];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    if (solution && rank == cols) {
        solution->assign(cols, Rational(0));
        for (std::size_t i = 0; i < rank; ++i) (*solution)[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
        // inconsistent rows leave a nonzero rhs below the pivots
        for (std::size_t i = rank; i < a.size(); ++i)
            if (b[i] != 0) solution->clear();
    }
    return static_cast<int>(rank);
}

}  // namespace

auto tree_equation_system(int max_size, bool include_kappa3) -> TreeSystemReport {
    if (max_size < 3 || max_size > 7) throw ValidationError("tree system supports sizes 3..7");
    TreeSystemReport report;
    report.max_size = max_size;
    report.include_kappa3 = include_kappa3;

    std::vector<Level> levels(static_cast<std::size_t>(max_size + 1));
    std::vector<Graph> inputs;  // trees with at least one edge
    for (int k = 2; k <= max_size; ++k) {
        auto& lv = levels[static_cast<std::size_t>(k)];
        lv.info.size = k;
        lv.info.trees = enumerate_trees(k);
        for (std::size_t i = 0; i < lv.info.trees.size(); ++i) lv.index[canonical_key(lv.info.trees[i])] = i;
        if (k < max_size) inputs.insert(inputs.end(), lv.info.trees.begin(), lv.info.trees.end());
    }

    auto add_equation = [&](std::string label, Observable expansion, int size) {
        auto& lv = levels[static_cast<std::size_t>(size)];
        TreeEquation eq;
        eq.label = std::move(label);
        eq.size = size;
        eq.coefficients.assign(lv.info.trees.size(), Rational(0));
        eq.rhs = Poly(1);
        for (const auto& [key, term] : expansion.terms()) {
            auto comps = term.graph.components();
            for (const auto& c : comps) {
                if (!is_tree(term.graph.induced(c))) {
                    report.dropped.push_back({eq.label, "expansion contains the non-tree graph " + describe(term.graph)});
                    return;
                }
            }
            if (comps.size() == 1 && term.graph.order() == size) {
                eq.coefficients[lv.index.at(key)] += term.coeff;
            } else {
                eq.rhs -= edge_power(term.graph.size()) * term.coeff;
            }
        }
        eq.expansion = std::move(expansion);
        Poly check = -eq.rhs;
        for (const auto& c : eq.coefficients) check += edge_power(size - 1) * c;
        eq.satisfied = check.is_zero();
        report.equations.push_back(std::move(eq));
    };

    for (std::size_t i = 0; i < inputs.size(); ++i)
        for (std::size_t j = i; j < inputs.size(); ++j) {
            int size = inputs[i].order() + inputs[j].order() - 1;
            if (size > max_size) continue;
            add_equation("kappa2(" + describe(inputs[i]) + ", " + describe(inputs[j]) + ")", kappa2(inputs[i], inputs[j]), size);
        }
    if (include_kappa3) {
        for (std::size_t i = 0; i < inputs.size(); ++i)
            for (std::size_t j = i; j < inputs.size(); ++j)
                for (std::size_t k = j; k < inputs.size(); ++k) {
                    int size = inputs[i].order() + inputs[j].order() + inputs[k].order() - 2;
                    if (size > max_size) continue;
                    add_equation("kappa3(" + describe(inputs[i]) + ", " + describe(inputs[j]) + ", " + describe(inputs[k]) + ")",
                                 kappa_s({inputs[i], inputs[j], inputs[k]}), size);
                }
    }

    report.all_satisfied = true;
    for (const auto& eq : report.equations) report.all_satisfied = report.all_satisfied && eq.satisfied;
    for (int k = 3; k <= max_size; ++k) {
        auto& lv = levels[static_cast<std::size_t>(k)];
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> b;
        for (const auto& eq : report.equations) {
            if (eq.size != k) continue;
            a.push_back(eq.coefficients);
            std::vector<int> e{k - 1};
            b.push_back(eq.rhs.coefficient(e));
        }
        lv.info.equations = static_cast<int>(a.size());
        std::vector<Rational> sol;
        lv.info.rank = eliminate(a, b, lv.info.trees.size(), &sol);
        lv.info.determined = lv.info.rank == static_cast<int>(lv.info.trees.size());
        lv.info.pinned_to_edge_power = lv.info.determined && !sol.empty();
        for (const auto& x : sol) lv.info.pinned_to_edge_power = lv.info.pinned_to_edge_power && x == 1;
        report.levels.push_back(lv.info);
    }
    return report;
}

auto format_tree_equation(const TreeEquation& e, const TreeLevel& level) -> std::string {
    std::vector<int> exps{e.size - 1};
    Rational lead = e.rhs.coefficient(exps);
    std::string out = lead == 0 ? "0" : "p^" + std::to_string(e.size - 1);
    out += " =";
    bool first = true;
    for (std::size_t i = 0; i < e.coefficients.size(); ++i) {
        if (e.coefficients[i] == 0) continue;
        Rational c = lead == 0 ? e.coefficients[i] : e.coefficients[i] / lead;
        out += first ? (c < 0 ? " -" : " ") : (c < 0 ? " - " : " + ");
        out += Rational(abs(c)).get_str() + "*t(" + describe(level.trees[i]) + ")";
        first = false;
    }
    if (first) out += " 0";
    return out;
}

auto gaussian_edge_criterion(const Graphon& gamma, const KernelOptions& mc) -> GaussianEdgeReport {
    GaussianEdgeReport r;
    auto e = density(graphs::edge(), gamma, mc);
    std::vector<DensityValue> p3(3, e);
    r.kappa3 = difference(density(graphs::triangle(), gamma, mc), product_value(p3), 8);
    r.cgw = cgw_check(gamma, mc);
    r.kappa4 = difference(r.cgw.t_c4, r.cgw.p4, 48);
    r.singular_input = gamma.is_constant() || (gamma.is_exact() && singularity_report(gamma, 3, 0.0).singular);
    if (!r.singular_input) r.warning = "input is not singular; the closed forms assume a singular graphon";
    return r;
}

}  // namespace sg
