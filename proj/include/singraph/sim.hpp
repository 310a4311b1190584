#pragma once

#include "singraph/graph.hpp"
#include "singraph/graphon.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sg {

inline constexpr int kMaxSampleSize = 4096;

// Simple graph on up to 4096 vertices as a packed bit matrix.
class SampledGraph {
public:
    explicit SampledGraph(int n);
    static auto from_graph(const Graph& g) -> SampledGraph;

    auto order() const -> int { return n_; }
    auto words() const -> std::size_t { return words_; }
    auto row(int i) const -> const std::uint64_t* { return bits_.data() + static_cast<std::size_t>(i) * words_; }
    auto row(int i) -> std::uint64_t* { return bits_.data() + static_cast<std::size_t>(i) * words_; }
    auto adjacent(int i, int j) const -> bool { return (row(i)[static_cast<std::size_t>(j) / 64] >> (j % 64)) & 1U; }
    void add_edge(int i, int j);
    auto degree(int i) const -> std::uint64_t;
    auto edge_count() const -> std::uint64_t;
    auto induced(const std::vector<int>& vertices) const -> Graph;

    std::optional<std::vector<double>> latent;  // X_i, when requested
    std::uint64_t seed = 0;
    std::uint64_t draw = 0;

private:
    int n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

// Draw `draw` of G_n(gamma) under `seed`. The latent X_i use Philox stream
// 2*draw and the coins U_ij use stream 2*draw+1, block i*ceil(n/4) for row i.
auto sample(const Graphon& gamma, int n, std::uint64_t seed, std::uint64_t draw = 0, bool keep_latent = false) -> SampledGraph;

// Number of homomorphisms F -> G, i.e. S_n(F).
auto subgraph_count(const Graph& f, const SampledGraph& g) -> std::uint64_t;
// Rough operation count for subgraph_count; InfeasibleError above kMaxCountCost.
inline constexpr double kMaxCountCost = 2e11;
auto subgraph_count_cost(const Graph& f, int n, double edge_density) -> double;

struct CumulantEstimate {
    std::vector<Graph> motives;
    std::vector<int> order;  // indices into motives, one per cumulant argument
    double estimate = 0;     // joint cumulant of the S_n(F_r)
    double std_error = 0;    // batch means
    std::uint64_t samples = 0;
    int n = 0;
    std::uint64_t seed = 0;
};

struct McOptions {
    std::uint64_t samples = 1000;
    std::uint64_t seed = 1;
    int workers = 1;
    int batches = 50;
    // Constant graphon with only edge motives: sample the edge count as a binomial.
    bool binomial_fast_path = true;
};

struct McResult {
    std::vector<CumulantEstimate> estimates;
    bool used_binomial_fast_path = false;
    std::string bias_note;
};

// Plug-in joint cumulants (moments, then the Mobius formula over set
// partitions) of S_n(F) across independent samples. Per-sample values are
// stored by draw index, so results do not depend on the worker count.
auto mc_cumulants(const Graphon& gamma, int n, const std::vector<Graph>& motives, const std::vector<std::vector<int>>& orders,
                  const McOptions& opt) -> McResult;

// Per-sample S_n(F) values, draw d at index d.
auto sample_counts(const Graphon& gamma, int n, const std::vector<Graph>& motives, const McOptions& opt, bool* fast_path = nullptr)
    -> std::vector<std::vector<double>>;

// Plug-in joint cumulant of the columns `order` of per-sample rows.
auto plugin_cumulant(const std::vector<std::vector<double>>& rows, const std::vector<int>& order, std::size_t begin, std::size_t end)
    -> double;

struct DegreeFluctuations {
    std::vector<double> eps;
    double max_abs = 0;
};
auto degree_fluctuations(const SampledGraph& g, double p) -> DegreeFluctuations;

struct DeterminantResult {
    std::complex<double> value;
    double condition = 1;  // max |u_ii| / min |u_ii| of the LU factor
};

// det(M) by LU with partial pivoting, row-major n x n.
auto lu_determinant(std::vector<std::complex<double>> m, int n) -> DeterminantResult;
auto charpoly_adjacency(const SampledGraph& g, std::complex<double> z) -> DeterminantResult;
auto hermite_expected_charpoly(int n, double p, std::complex<double> z) -> std::complex<double>;
// det((1 + pz) I + z diag(eps) - z L / n).
auto laplacian_det(const SampledGraph& g, double p, std::complex<double> z, const std::vector<double>& eps) -> DeterminantResult;
auto expected_laplacian_formula(int n, double p, std::complex<double> z, const std::vector<double>& eps) -> std::complex<double>;

struct PiSigma {
    std::complex<double> pi;
    std::complex<double> sigma;
    std::complex<double> product;
    std::complex<double> surrogate;
};
auto pi_sigma(const SampledGraph& g, double p, std::complex<double> z) -> PiSigma;

}  // namespace sg
