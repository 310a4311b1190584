#include "singraph/sim.hpp"

#include "singraph/kernels.hpp"
#include "singraph/rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

namespace sg {

SampledGraph::SampledGraph(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64) {
    if (n < 0 || n > kMaxSampleSize) throw ValidationError("sample size must lie in 0.." + std::to_string(kMaxSampleSize));
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

auto SampledGraph::from_graph(const Graph& g) -> SampledGraph {
    SampledGraph s(g.order());
    for (auto [a, b] : g.edges()) s.add_edge(a, b);
    return s;
}

void SampledGraph::add_edge(int i, int j) {
    if (i == j) throw ValidationError("loops are not allowed");
    row(i)[static_cast<std::size_t>(j) / 64] |= std::uint64_t{1} << (j % 64);
    row(j)[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
}

auto SampledGraph::degree(int i) const -> std::uint64_t { return kernels::popcount(row(i), words_); }

auto SampledGraph::edge_count() const -> std::uint64_t {
    return kernels::popcount(bits_.data(), bits_.size()) / 2;
}

auto SampledGraph::induced(const std::vector<int>& vertices) const -> Graph {
    std::vector<Edge> e;
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (adjacent(vertices[a], vertices[b])) e.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return Graph(static_cast<int>(vertices.size()), e);
}

// ---- sampling ----

namespace {

constexpr double kTwo32 = 4294967296.0;

auto threshold(const Rational& p) -> std::uint64_t {
    Rational t = p * Rational(Integer(1) << 32);
    return mpz_class(t.get_num() / t.get_den()).get_ui();
}

auto threshold(double g) -> std::uint64_t {
    if (!(g >= 0.0 && g <= 1.0)) throw ValidationError("graphon value " + std::to_string(g) + " outside [0,1]");
    return static_cast<std::uint64_t>(std::floor(g * kTwo32));
}

}  // namespace

auto sample(const Graphon& gamma, int n, std::uint64_t seed, std::uint64_t draw, bool keep_latent) -> SampledGraph {
    if (n < 1 || n > kMaxSampleSize) throw ValidationError("sample size must lie in 1.." + std::to_string(kMaxSampleSize));
    SampledGraph g(n);
    g.seed = seed;
    g.draw = draw;
    const auto un = static_cast<std::size_t>(n);

    // thr(i, j) for j > i, filled per row.
    std::function<void(int, std::vector<std::uint64_t>&)> fill;
    std::vector<double> x;
    std::vector<std::size_t> block;
    std::vector<std::vector<std::uint64_t>> table;

    const auto& rep = gamma.rep();
    if (const auto* c = std::get_if<ConstantGraphon>(&rep)) {
        std::uint64_t t = threshold(c->p);
        fill = [t](int, std::vector<std::uint64_t>& thr) { std::fill(thr.begin(), thr.end(), t); };
    } else {
        Philox latent_rng(seed, 2 * draw);
        x.resize(un);
        for (auto& v : x) v = latent_rng.uniform();
        if (const auto* k = std::get_if<KernelGraphon>(&rep)) {
            fill = [&x, k](int i, std::vector<std::uint64_t>& thr) {
                for (std::size_t j = static_cast<std::size_t>(i) + 1; j < thr.size(); ++j) thr[j] = threshold(k->g(x[static_cast<std::size_t>(i)], x[j]));
            };
        } else {
            StepGraphon s = gamma.as_step();
            std::vector<double> cum;
            double acc = 0;
            for (const auto& w : s.weights) cum.push_back(acc += w.get_d());
            block.resize(un);
            for (std::size_t i = 0; i < un; ++i)
                block[i] = std::min<std::size_t>(static_cast<std::size_t>(std::upper_bound(cum.begin(), cum.end(), x[i]) - cum.begin()), cum.size() - 1);
            table.assign(s.weights.size(), std::vector<std::uint64_t>(s.weights.size()));
            for (std::size_t a = 0; a < s.weights.size(); ++a)
                for (std::size_t b = 0; b < s.weights.size(); ++b) table[a][b] = threshold(s.values[a][b]);
            fill = [&](int i, std::vector<std::uint64_t>& thr) {
                const auto& trow = table[block[static_cast<std::size_t>(i)]];
                for (std::size_t j = static_cast<std::size_t>(i) + 1; j < thr.size(); ++j) thr[j] = trow[block[j]];
            };
        }
    }

    std::vector<std::uint32_t> u(un);
    std::vector<std::uint64_t> thr(un), mask(g.words());
    const std::uint64_t blocks_per_row = (un + 3) / 4;
    for (int i = 0; i < n; ++i) {
        Philox rng(seed, 2 * draw + 1, static_cast<std::uint64_t>(i) * blocks_per_row);
        for (auto& v : u) v = rng();
        fill(i, thr);
        std::fill(thr.begin(), thr.begin() + i + 1, 0);
        kernels::bernoulli_mask(u.data(), thr.data(), un, mask.data());
        std::copy(mask.begin(), mask.end(), g.row(i));
    }
    // Mirror the upper triangle.
    for (int i = 0; i < n; ++i) {
        const std::uint64_t* r = g.row(i);
        for (std::size_t w = 0; w < g.words(); ++w)
            for (std::uint64_t bits = r[w]; bits; bits &= bits - 1) {
                int j = static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
                g.row(j)[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
            }
    }
    if (keep_latent && !x.empty()) g.latent = x;
    return g;
}

// ---- homomorphism counting ----

namespace {

struct CountPlan {
    std::vector<int> cover;                 // backtracking order
    std::vector<std::vector<int>> back;     // for cover[t]: earlier cover positions adjacent to it
    std::vector<std::vector<int>> leaves;   // per leaf: cover positions of its neighbours
};

auto make_plan(const Graph& f) -> CountPlan {
    int k = f.order();
    int best = -1;
    for (int mask = 0; mask < (1 << k); ++mask) {
        bool cover = true;
        for (auto [a, b] : f.edges()) cover = cover && (((mask >> a) & 1) || ((mask >> b) & 1));
        if (cover && (best < 0 || __builtin_popcount(static_cast<unsigned>(mask)) < __builtin_popcount(static_cast<unsigned>(best)))) best = mask;
    }
    std::vector<int> in_cover;
    for (int v = 0; v < k; ++v)
        if ((best >> v) & 1) in_cover.push_back(v);
    CountPlan plan;
    // Greedy order: most already-placed neighbours first, then highest degree.
    std::vector<bool> placed(static_cast<std::size_t>(k), false);
    while (plan.cover.size() < in_cover.size()) {
        int pick = -1, score = -1;
        for (int v : in_cover) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            int s = 0;
            for (int u : plan.cover) s += f.adjacent(u, v);
            s = s * 64 + f.degree(v);
            if (s > score) {
                score = s;
                pick = v;
            }
        }
        placed[static_cast<std::size_t>(pick)] = true;
        std::vector<int> back;
        for (std::size_t t = 0; t < plan.cover.size(); ++t)
            if (f.adjacent(plan.cover[t], pick)) back.push_back(static_cast<int>(t));
        plan.cover.push_back(pick);
        plan.back.push_back(back);
    }
    for (int v = 0; v < k; ++v) {
        if ((best >> v) & 1) continue;
        std::vector<int> nb;
        for (std::size_t t = 0; t < plan.cover.size(); ++t)
            if (f.adjacent(plan.cover[t], v)) nb.push_back(static_cast<int>(t));
        plan.leaves.push_back(nb);
    }
    return plan;
}

}  // namespace

auto subgraph_count_cost(const Graph& f, int n, double edge_density) -> double {
    auto plan = make_plan(f);
    double words = std::ceil(n / 64.0);
    double nodes = 0, level = 1;
    for (const auto& back : plan.back) {
        level *= n * (back.empty() ? 1.0 : std::pow(std::max(edge_density, 1.0 / n), static_cast<double>(back.size())));
        nodes += level * (back.size() > 1 ? words : 1.0);
    }
    return nodes + level * static_cast<double>(plan.leaves.size()) * words;
}

auto subgraph_count(const Graph& f, const SampledGraph& g) -> std::uint64_t {
    int k = f.order();
    int n = g.order();
    if (k == 0) return 1;
    if (n == 0) return 0;
    double density = n > 1 ? 2.0 * static_cast<double>(g.edge_count()) / (static_cast<double>(n) * (n - 1)) : 0.0;
    double cost = subgraph_count_cost(f, n, density);
    if (cost > kMaxCountCost)
        throw InfeasibleError("counting " + describe(f) + " on n=" + std::to_string(n) + " needs about " + std::to_string(cost) + " word operations");

    auto plan = make_plan(f);
    const std::size_t words = g.words();
    const std::size_t depth = plan.cover.size();
    std::vector<int> image(depth, 0);
    std::vector<std::vector<std::uint64_t>> cand(depth, std::vector<std::uint64_t>(words));
    std::vector<std::uint64_t> scratch(words);
    std::vector<std::uint64_t> degree(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) degree[static_cast<std::size_t>(i)] = g.degree(i);

    auto leaf_product = [&]() -> std::uint64_t {
        std::uint64_t prod = 1;
        for (const auto& nb : plan.leaves) {
            std::uint64_t c;
            if (nb.empty()) {
                c = static_cast<std::uint64_t>(n);
            } else if (nb.size() == 1) {
                c = degree[static_cast<std::size_t>(image[static_cast<std::size_t>(nb[0])])];
            } else if (nb.size() == 2) {
                c = kernels::and_popcount(g.row(image[static_cast<std::size_t>(nb[0])]), g.row(image[static_cast<std::size_t>(nb[1])]), words);
            } else {
                std::copy(g.row(image[static_cast<std::size_t>(nb[0])]), g.row(image[static_cast<std::size_t>(nb[0])]) + words, scratch.begin());
                for (std::size_t t = 1; t + 1 < nb.size(); ++t) {
                    const std::uint64_t* r = g.row(image[static_cast<std::size_t>(nb[t])]);
                    for (std::size_t w = 0; w < words; ++w) scratch[w] &= r[w];
                }
                c = kernels::and_popcount(scratch.data(), g.row(image[static_cast<std::size_t>(nb.back())]), words);
            }
            if (c == 0) return 0;
            prod *= c;
        }
        return prod;
    };

    if (depth == 0) return leaf_product();

    std::uint64_t total = 0;
    // Iterative backtracking over the cover vertices.
    auto prepare = [&](std::size_t t) {
        auto& c = cand[t];
        if (plan.back[t].empty()) {
            std::fill(c.begin(), c.end(), ~std::uint64_t{0});
            if (n % 64) c[words - 1] = (std::uint64_t{1} << (n % 64)) - 1;
            return;
        }
        const std::uint64_t* r0 = g.row(image[static_cast<std::size_t>(plan.back[t][0])]);
        std::copy(r0, r0 + words, c.begin());
        for (std::size_t b = 1; b < plan.back[t].size(); ++b) {
            const std::uint64_t* r = g.row(image[static_cast<std::size_t>(plan.back[t][b])]);
            for (std::size_t w = 0; w < words; ++w) c[w] &= r[w];
        }
    };
    auto next_candidate = [&](std::size_t t) -> bool {
        auto& c = cand[t];
        for (std::size_t w = 0; w < words; ++w)
            if (c[w]) {
                int bit = __builtin_ctzll(c[w]);
                c[w] &= c[w] - 1;
                image[t] = static_cast<int>(w * 64 + static_cast<std::size_t>(bit));
                return true;
            }
        return false;
    };

    std::size_t t = 0;
    prepare(0);
    while (true) {
        if (!next_candidate(t)) {
            if (t == 0) break;
            --t;
            continue;
        }
        if (t + 1 == depth) {
            total += leaf_product();
        } else {
            ++t;
            prepare(t);
        }
    }
    return total;
}

// ---- Monte Carlo cumulants ----

auto sample_counts(const Graphon& gamma, int n, const std::vector<Graph>& motives, const McOptions& opt, bool* fast_path)
    -> std::vector<std::vector<double>> {
    if (opt.samples < 1) throw ValidationError("need at least one sample");
    bool fast = opt.binomial_fast_path && gamma.is_constant() && !motives.empty() &&
                std::all_of(motives.begin(), motives.end(), [](const Graph& f) { return isomorphic(f, graphs::edge()); });
    if (fast_path) *fast_path = fast;
    if (!fast) {
        double p_guess = 0.5;
        for (const auto& f : motives)
            if (subgraph_count_cost(f, n, p_guess) > kMaxCountCost)
                throw InfeasibleError("counting " + describe(f) + " at n=" + std::to_string(n) + " is too costly");
    }
    std::vector<std::vector<double>> rows(opt.samples, std::vector<double>(motives.size()));
    auto run = [&](std::uint64_t first, std::uint64_t stride) {
        for (std::uint64_t d = first; d < opt.samples; d += stride) {
            if (fast) {
                Philox rng(opt.seed, 2 * d + 1);
                long long pairs = static_cast<long long>(n) * (n - 1) / 2;
                std::binomial_distribution<long long> bin(pairs, std::get<ConstantGraphon>(gamma.rep()).p.get_d());
                double s = 2.0 * static_cast<double>(bin(rng));
                std::fill(rows[d].begin(), rows[d].end(), s);
            } else {
                auto g = sample(gamma, n, opt.seed, d);
                for (std::size_t r = 0; r < motives.size(); ++r) rows[d][r] = static_cast<double>(subgraph_count(motives[r], g));
            }
        }
    };
    auto workers = static_cast<std::uint64_t>(std::max(1, opt.workers));
    if (workers == 1) {
        run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
        for (auto& th : pool) th.join();
    }
    return rows;
}

auto plugin_cumulant(const std::vector<std::vector<double>>& rows, const std::vector<int>& order, std::size_t begin, std::size_t end)
    -> double {
    const std::size_t s = order.size();
    const auto count = static_cast<double>(end - begin);
    std::vector<double> mean(s, 0.0);
    for (std::size_t d = begin; d < end; ++d)
        for (std::size_t r = 0; r < s; ++r) mean[r] += rows[d][static_cast<std::size_t>(order[r])];
    for (auto& m : mean) m /= count;
    if (s == 1) return mean[0];
    // Centring leaves cumulants of order >= 2 unchanged and kills singleton blocks.
    double total = 0;
    for (const SetPartition& theta : set_partitions(static_cast<int>(s))) {
        auto blocks = theta.blocks();
        if (std::any_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() == 1; })) continue;
        double prod = 1;
        for (const auto& b : blocks) {
            double m = 0;
            for (std::size_t d = begin; d < end; ++d) {
                double x = 1;
                for (int r : b) x *= rows[d][static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] - mean[static_cast<std::size_t>(r)];
                m += x;
            }
            prod *= m / count;
        }
        total += static_cast<double>(mobius(theta)) * prod;
    }
    return total;
}

auto mc_cumulants(const Graphon& gamma, int n, const std::vector<Graph>& motives, const std::vector<std::vector<int>>& orders,
                  const McOptions& opt) -> McResult {
    for (const auto& order : orders) {
        if (order.empty() || order.size() > 4) throw ValidationError("cumulant orders must have 1..4 arguments");
        for (int r : order)
            if (r < 0 || static_cast<std::size_t>(r) >= motives.size()) throw ValidationError("cumulant argument out of range");
    }
    McResult res;
    auto rows = sample_counts(gamma, n, motives, opt, &res.used_binomial_fast_path);
    const std::size_t total = rows.size();
    std::size_t batches = std::min<std::size_t>(static_cast<std::size_t>(std::max(2, opt.batches)), std::max<std::size_t>(2, total / 2));
    res.bias_note = "plug-in estimator; bias is O(1/N) for orders >= 2";
    for (const auto& order : orders) {
        CumulantEstimate e;
        e.motives = motives;
        e.order = order;
        e.samples = total;
        e.n = n;
        e.seed = opt.seed;
        e.estimate = plugin_cumulant(rows, order, 0, total);
        if (total >= 2 * batches) {
            std::vector<double> per;
            for (std::size_t b = 0; b < batches; ++b) per.push_back(plugin_cumulant(rows, order, b * total / batches, (b + 1) * total / batches));
            double m = std::accumulate(per.begin(), per.end(), 0.0) / static_cast<double>(batches);
            double v = 0;
            for (double x : per) v += (x - m) * (x - m);
            v /= static_cast<double>(batches - 1);
            e.std_error = std::sqrt(v / static_cast<double>(batches));
        } else {
            e.std_error = std::numeric_limits<double>::infinity();
        }
        res.estimates.push_back(std::move(e));
    }
    return res;
}

// ---- degrees and determinants ----

auto degree_fluctuations(const SampledGraph& g, double p) -> DegreeFluctuations {
    DegreeFluctuations out;
    int n = g.order();
    for (int i = 0; i < n; ++i) {
        double e = static_cast<double>(g.degree(i)) / n - p;
        out.eps.push_back(e);
        out.max_abs = std::max(out.max_abs, std::abs(e));
    }
    return out;
}

auto lu_determinant(std::vector<std::complex<double>> m, int n) -> DeterminantResult {
    const auto un = static_cast<std::size_t>(n);
    if (m.size() != un * un) throw ValidationError("matrix size mismatch");
    std::complex<double> det = 1;
    double umax = 0, umin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < un; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < un; ++i)
            if (std::abs(m[i * un + k]) > std::abs(m[piv * un + k])) piv = i;
        if (std::abs(m[piv * un + k]) == 0.0) return {0.0, std::numeric_limits<double>::infinity()};
        if (piv != k) {
            std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(k * un), m.begin() + static_cast<std::ptrdiff_t>((k + 1) * un),
                             m.begin() + static_cast<std::ptrdiff_t>(piv * un));
            det = -det;
        }
        std::complex<double> pivot = m[k * un + k];
        det *= pivot;
        umax = std::max(umax, std::abs(pivot));
        umin = std::min(umin, std::abs(pivot));
        for (std::size_t i = k + 1; i < un; ++i) {
            std::complex<double> l = m[i * un + k] / pivot;
            if (l == 0.0) continue;
            kernels::caxpy(&m[i * un + k + 1], l, &m[k * un + k + 1], un - k - 1);
        }
    }
    return {det, n == 0 ? 1.0 : umax / umin};
}

auto charpoly_adjacency(const SampledGraph& g, std::complex<double> z) -> DeterminantResult {
    int n = g.order();
    if (n > 2048) throw ValidationError("determinants support n <= 2048");
    const auto un = static_cast<std::size_t>(n);
    std::vector<std::complex<double>> m(un * un, 0.0);
    std::complex<double> w = z / static_cast<double>(n);
    for (int i = 0; i < n; ++i) {
        m[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(i)] = 1.0;
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) m[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)] = w;
    }
    return lu_determinant(std::move(m), n);
}

auto hermite_expected_charpoly(int n, double p, std::complex<double> z) -> std::complex<double> {
    if (!(p > 0 && p < 1)) throw ValidationError("hermite formula needs 0 < p < 1");
    if (z == 0.0) throw ValidationError("hermite formula needs z != 0");
    if (n < 1 || n > 500) throw ValidationError("hermite formula supports 1 <= n <= 500");
    using C = std::complex<long double>;
    const C a = C(static_cast<long double>(p)) * C(z) / static_cast<long double>(n);
    const C b = a * a * (1.0L / static_cast<long double>(p) - 1.0L);
    // h_{k+1} = (1 - a) h_k - k b h_{k-1}, rescaled to keep magnitudes near 1.
    C prev = 1, cur = 1.0L - a;
    long double log_scale = 0;
    for (int k = 1; k < n; ++k) {
        C next = (1.0L - a) * cur - static_cast<long double>(k) * b * prev;
        prev = cur;
        cur = next;
        long double mag = std::abs(cur);
        if (mag > 1e100L || (mag < 1e-100L && mag > 0)) {
            prev /= mag;
            cur /= mag;
            log_scale += std::log(mag);
        }
    }
    C out = (cur + C(static_cast<long double>(p)) * C(z) * prev) * std::exp(log_scale);
    std::complex<double> r(static_cast<double>(out.real()), static_cast<double>(out.imag()));
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) throw InfeasibleError("hermite formula overflowed");
    return r;
}

auto laplacian_det(const SampledGraph& g, double p, std::complex<double> z, const std::vector<double>& eps) -> DeterminantResult {
    int n = g.order();
    if (n > 2048) throw ValidationError("determinants support n <= 2048");
    if (eps.size() != static_cast<std::size_t>(n)) throw ValidationError("need one epsilon per vertex");
    const auto un = static_cast<std::size_t>(n);
    std::vector<std::complex<double>> m(un * un, 0.0);
    std::complex<double> w = z / static_cast<double>(n);
    for (std::size_t i = 0; i < un; ++i) {
        double deg = static_cast<double>(g.degree(static_cast<int>(i)));
        m[i * un + i] = 1.0 + p * z + z * eps[i] - w * deg;
        for (std::size_t j = 0; j < un; ++j)
            if (g.adjacent(static_cast<int>(i), static_cast<int>(j))) m[i * un + j] = w;
    }
    return lu_determinant(std::move(m), n);
}

auto expected_laplacian_formula(int n, double p, std::complex<double> z, const std::vector<double>& eps) -> std::complex<double> {
    if (eps.size() != static_cast<std::size_t>(n) || n < 1) throw ValidationError("need one epsilon per vertex");
    std::complex<double> prod = 1, sum = 0;
    for (double e : eps) {
        std::complex<double> d = 1.0 + e * z;
        if (std::abs(d) < 1e-300) throw ValidationError("pole: 1 + eps_i z = 0");
        prod *= d;
        sum += (1.0 + p * z + e * z) / d;
    }
    return prod * sum / static_cast<double>(n);
}

auto pi_sigma(const SampledGraph& g, double p, std::complex<double> z) -> PiSigma {
    int n = g.order();
    auto fl = degree_fluctuations(g, p);
    PiSigma out;
    out.pi = 1;
    out.sigma = 0;
    for (double e : fl.eps) {
        std::complex<double> d = 1.0 + e * z;
        if (std::abs(d) < 1e-300) throw ValidationError("pole: 1 + eps_i z = 0");
        out.pi *= d;
        out.sigma += (1.0 + p * z + e * z) / d;
    }
    out.sigma /= static_cast<double>(n);
    out.product = out.pi * out.sigma;

    // Rescaled densities Y_n(F) = n (t(F, G_n) - E t(F, G_n)) at a constant graphon.
    double nn = n;
    double t_edge = 2.0 * static_cast<double>(g.edge_count()) / (nn * nn);
    double sum_sq = 0;
    for (int i = 0; i < n; ++i) sum_sq += std::pow(static_cast<double>(g.degree(i)), 2);
    double t_p3 = sum_sq / (nn * nn * nn);
    double y_edge = nn * (t_edge - (nn - 1) * p / nn);
    double y_p3 = nn * (t_p3 - (nn * (nn - 1) * (nn - 2) * p * p + nn * (nn - 1) * p) / (nn * nn * nn));
    out.surrogate = (1.0 + p * z) * std::exp(-p * z - p * z * z / 2.0 + p * p * z * z / 2.0) *
                    std::exp((z + p * z * z) * y_edge - z * z / 2.0 * y_p3);
    return out;
}

}  // namespace sg
