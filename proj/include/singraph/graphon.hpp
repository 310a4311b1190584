#pragma once

#include "singraph/graph.hpp"
#include "singraph/observable.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sg {

struct ConstantGraphon {
    Rational p;
};

struct StepGraphon {
    std::vector<Rational> weights;             // block measures, sum 1
    std::vector<std::vector<Rational>> values;  // symmetric, entries in [0,1]
};

// g(x, y) = p f(x) f(y) with f block-constant and of unit L2 norm.
struct RankOneGraphon {
    Rational p;
    std::vector<Rational> weights;
    std::vector<Rational> f;
};

struct KernelGraphon {
    std::function<double(double, double)> g;
    std::string smoothness;  // free-form hint, e.g. "lipschitz"
};

class Graphon {
public:
    using Rep = std::variant<ConstantGraphon, StepGraphon, RankOneGraphon, KernelGraphon>;

    static auto constant(const Rational& p) -> Graphon;
    static auto step(std::vector<Rational> weights, std::vector<std::vector<Rational>> values) -> Graphon;
    static auto rank_one(const Rational& p, std::vector<Rational> weights, std::vector<Rational> f) -> Graphon;
    static auto kernel(std::function<double(double, double)> g, std::string smoothness = "") -> Graphon;

    auto rep() const -> const Rep& { return rep_; }
    auto is_exact() const -> bool { return !std::holds_alternative<KernelGraphon>(rep_); }
    auto is_constant() const -> bool { return std::holds_alternative<ConstantGraphon>(rep_); }
    // Step representation of an exact graphon; throws for kernels.
    auto as_step() const -> StepGraphon;
    auto value(double x, double y) const -> double;
    auto describe() const -> std::string;

private:
    explicit Graphon(Rep r) : rep_(std::move(r)) {}
    Rep rep_;
};

// Equal blocks of measure 1/n, values = adjacency of g.
auto step_from_graph(const Graph& g) -> Graphon;

// Exact value, or a Monte Carlo estimate with its standard error for kernels.
struct DensityValue {
    double value = 0;
    std::optional<Rational> exact;
    double std_error = 0;
};

struct KernelOptions {
    std::uint64_t samples = 1 << 16;
    std::uint64_t seed = 1;
};

auto density(const Graph& f, const Graphon& gamma, const KernelOptions& mc = {}) -> DensityValue;
auto density_exact(const Graph& f, const Graphon& gamma) -> Rational;
// Double-precision elimination over the step representation (any size up to 64 blocks).
auto density_numeric(const Graph& f, const StepGraphon& step) -> double;
// t(F, gamma_p) as a polynomial in p (one variable).
auto constant_density_poly(const Graph& f) -> Poly;

// v[b] = density integrand with vertex i pinned to block b; weights . v = density.
auto marked_density(const Graph& f, int i, const Graphon& gamma) -> std::vector<Rational>;

auto evaluate(const Observable& o, const Graphon& gamma, const KernelOptions& mc = {}) -> DensityValue;

struct SpectrumReport {
    std::vector<double> eigenvalues;          // decreasing in magnitude
    std::vector<double> trace_powers;         // index k: sum lambda^k, k = 0..max_power
    std::vector<double> cycle_densities;      // index k: t(C_k) for k >= 3, tr(T), ||g||^2 for k = 1, 2
    double hilbert_schmidt = 0;               // double integral of g^2
};

auto spectrum(const Graphon& gamma, int max_power) -> SpectrumReport;

enum class DetKind { det2, det3 };
auto fredholm_det(const Graphon& gamma, std::complex<double> z, DetKind kind) -> std::complex<double>;

struct SingularityReport {
    int max_size = 0;
    std::size_t pairs_checked = 0;
    double max_residual = 0;
    std::optional<Rational> max_residual_exact;
    Graph worst_first;
    Graph worst_second;
    bool singular = false;  // max residual <= tol
};

auto singularity_report(const Graphon& gamma, int max_size, double tol, const KernelOptions& mc = {}) -> SingularityReport;

struct CgwReport {
    DensityValue t_c4;
    DensityValue p4;
    DensityValue gap;
};

auto cgw_check(const Graphon& gamma, const KernelOptions& mc = {}) -> CgwReport;

}  // namespace sg
