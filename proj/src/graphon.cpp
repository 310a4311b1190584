#include "singraph/graphon.hpp"

#include "singraph/rng.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace sg {

namespace {

void check_unit(const Rational& v, const char* what) {
    if (v < 0 || v > 1) throw ValidationError(std::string(what) + " must lie in [0,1], got " + to_string(v));
}

void check_weights(const std::vector<Rational>& w) {
    if (w.empty()) throw ValidationError("graphon needs at least one block");
    Rational total = 0;
    for (const auto& x : w) {
        if (x <= 0) throw ValidationError("block weights must be positive");
        total += x;
    }
    if (total != 1) throw ValidationError("block weights sum to " + to_string(total) + ", expected 1");
}

}  // namespace

auto Graphon::constant(const Rational& p) -> Graphon {
    check_unit(p, "constant graphon value");
    return Graphon(ConstantGraphon{p});
}

auto Graphon::step(std::vector<Rational> weights, std::vector<std::vector<Rational>> values) -> Graphon {
    check_weights(weights);
    size_t q = weights.size();
    if (values.size() != q) throw ValidationError("step values must be a q x q matrix");
    for (size_t a = 0; a < q; ++a) {
        if (values[a].size() != q) throw ValidationError("step values must be a q x q matrix");
        for (size_t b = 0; b < q; ++b) {
            check_unit(values[a][b], "step value");
            if (values[a][b] != values[b][a]) throw ValidationError("step values must be symmetric");
        }
    }
    return Graphon(StepGraphon{std::move(weights), std::move(values)});
}

auto Graphon::rank_one(const Rational& p, std::vector<Rational> weights, std::vector<Rational> f) -> Graphon {
    check_weights(weights);
    check_unit(p, "rank-one scale");
    if (f.size() != weights.size()) throw ValidationError("rank-one f needs one value per block");
    Rational norm = 0;
    for (size_t b = 0; b < f.size(); ++b) norm += weights[b] * f[b] * f[b];
    if (norm != 1) throw ValidationError("rank-one f must have unit L2 norm, got " + to_string(norm));
    for (const auto& x : f)
        for (const auto& y : f) check_unit(p * x * y, "rank-one value p f(x) f(y)");
    return Graphon(RankOneGraphon{p, std::move(weights), std::move(f)});
}

auto Graphon::kernel(std::function<double(double, double)> g, std::string smoothness) -> Graphon {
    if (!g) throw ValidationError("kernel graphon needs a function");
    return Graphon(KernelGraphon{std::move(g), std::move(smoothness)});
}

auto Graphon::as_step() const -> StepGraphon {
    if (const auto* c = std::get_if<ConstantGraphon>(&rep_)) return StepGraphon{{Rational(1)}, {{c->p}}};
    if (const auto* s = std::get_if<StepGraphon>(&rep_)) return *s;
    if (const auto* r = std::get_if<RankOneGraphon>(&rep_)) {
        size_t q = r->f.size();
        std::vector<std::vector<Rational>> v(q, std::vector<Rational>(q));
        for (size_t a = 0; a < q; ++a)
            for (size_t b = 0; b < q; ++b) v[a][b] = r->p * r->f[a] * r->f[b];
        return StepGraphon{r->weights, v};
    }
    throw ValidationError("kernel graphons have no step representation");
}

auto Graphon::value(double x, double y) const -> double {
    if (const auto* k = std::get_if<KernelGraphon>(&rep_)) return k->g(x, y);
    StepGraphon s = as_step();
    auto block = [&](double t) {
        double acc = 0;
        for (size_t b = 0; b + 1 < s.weights.size(); ++b) {
            acc += s.weights[b].get_d();
            if (t < acc) return b;
        }
        return s.weights.size() - 1;
    };
    return s.values[block(x)][block(y)].get_d();
}

auto Graphon::describe() const -> std::string {
    std::ostringstream out;
    if (const auto* c = std::get_if<ConstantGraphon>(&rep_)) {
        out << "constant(" << to_string(c->p) << ")";
    } else if (const auto* s = std::get_if<StepGraphon>(&rep_)) {
        out << "step(" << s->weights.size() << " blocks)";
    } else if (const auto* r = std::get_if<RankOneGraphon>(&rep_)) {
        out << "rank_one(p=" << to_string(r->p) << ", " << r->f.size() << " blocks)";
    } else {
        out << "kernel(" << std::get<KernelGraphon>(rep_).smoothness << ")";
    }
    return out.str();
}

auto step_from_graph(const Graph& g) -> Graphon {
    int n = g.order();
    if (n == 0) throw ValidationError("step_from_graph needs a non-empty graph");
    std::vector<Rational> w(static_cast<size_t>(n), Rational(1, n));
    std::vector<std::vector<Rational>> v(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), 0));
    for (auto [a, b] : g.edges()) v[static_cast<size_t>(a)][static_cast<size_t>(b)] = v[static_cast<size_t>(b)][static_cast<size_t>(a)] = 1;
    return Graphon::step(std::move(w), std::move(v));
}

// ---- variable elimination over step graphons ----

namespace {

template <class T>
struct Factor {
    std::vector<int> scope;  // vertex ids; table index = sum x[scope[j]] q^j
    std::vector<T> table;
};

constexpr double kMaxTable = 4e7;

// Sums out every vertex not in `keep` and returns one factor over `keep`.
template <class T>
auto eliminate(const Graph& f, const std::vector<T>& w, const std::vector<std::vector<T>>& m,
               const std::vector<int>& keep) -> Factor<T> {
    const size_t q = w.size();
    std::vector<Factor<T>> factors;
    for (auto [a, b] : f.edges()) {
        Factor<T> e{{a, b}, std::vector<T>(q * q)};
        for (size_t x = 0; x < q; ++x)
            for (size_t y = 0; y < q; ++y) e.table[x + q * y] = m[x][y];
        factors.push_back(std::move(e));
    }

    auto product = [&](const std::vector<Factor<T>*>& parts, const std::vector<int>& scope, int sum_out) {
        // Builds the product over `scope`; if sum_out >= 0 it is weighted and summed out.
        std::vector<int> out_scope;
        for (int v : scope)
            if (v != sum_out) out_scope.push_back(v);
        double cells = std::pow(static_cast<double>(q), static_cast<double>(scope.size()));
        if (cells > kMaxTable) throw InfeasibleError("density elimination table of " + std::to_string(cells) + " cells");
        size_t out_size = 1;
        for (size_t i = 0; i < out_scope.size(); ++i) out_size *= q;
        Factor<T> out{out_scope, std::vector<T>(out_size, T(0))};
        std::vector<size_t> x(scope.size(), 0);
        std::vector<std::vector<size_t>> pos(parts.size());
        for (size_t i = 0; i < parts.size(); ++i)
            for (int v : parts[i]->scope)
                pos[i].push_back(static_cast<size_t>(std::find(scope.begin(), scope.end(), v) - scope.begin()));
        size_t sum_pos = sum_out < 0 ? scope.size() : static_cast<size_t>(std::find(scope.begin(), scope.end(), sum_out) - scope.begin());
        while (true) {
            T val = sum_out < 0 ? T(1) : w[x[sum_pos]];
            for (size_t i = 0; i < parts.size(); ++i) {
                size_t idx = 0, mul = 1;
                for (size_t p : pos[i]) {
                    idx += x[p] * mul;
                    mul *= q;
                }
                val *= parts[i]->table[idx];
            }
            size_t oidx = 0, mul = 1;
            for (size_t j = 0; j < scope.size(); ++j) {
                if (j == sum_pos) continue;
                oidx += x[j] * mul;
                mul *= q;
            }
            out.table[oidx] += val;
            size_t j = 0;
            while (j < x.size() && ++x[j] == q) x[j++] = 0;
            if (j == x.size()) break;
        }
        return out;
    };

    std::vector<int> remaining;
    for (int v = 0; v < f.order(); ++v)
        if (std::find(keep.begin(), keep.end(), v) == keep.end()) remaining.push_back(v);

    while (!remaining.empty()) {
        // Greedy: eliminate the vertex whose merged scope is smallest.
        size_t best = 0;
        std::vector<int> best_scope;
        for (size_t r = 0; r < remaining.size(); ++r) {
            std::vector<int> scope = {remaining[r]};
            for (const auto& fac : factors)
                if (std::find(fac.scope.begin(), fac.scope.end(), remaining[r]) != fac.scope.end())
                    for (int u : fac.scope)
                        if (std::find(scope.begin(), scope.end(), u) == scope.end()) scope.push_back(u);
            if (r == 0 || scope.size() < best_scope.size()) {
                best = r;
                best_scope = scope;
            }
        }
        int v = remaining[best];
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
        std::vector<Factor<T>> touching, rest;
        for (auto& fac : factors) {
            bool hit = std::find(fac.scope.begin(), fac.scope.end(), v) != fac.scope.end();
            (hit ? touching : rest).push_back(std::move(fac));
        }
        if (touching.empty()) {
            // Isolated vertex: contributes the total weight.
            T total(0);
            for (const auto& x : w) total += x;
            rest.push_back(Factor<T>{{}, {total}});
        } else {
            std::vector<Factor<T>*> parts;
            for (auto& fac : touching) parts.push_back(&fac);
            rest.push_back(product(parts, best_scope, v));
        }
        factors = std::move(rest);
    }
    std::vector<Factor<T>*> parts;
    for (auto& fac : factors) parts.push_back(&fac);
    return product(parts, keep, -1);
}

template <class T>
auto density_step(const Graph& f, const std::vector<T>& w, const std::vector<std::vector<T>>& m) -> T {
    return eliminate<T>(f, w, m, {}).table.at(0);
}

auto to_double(const StepGraphon& s) -> std::pair<std::vector<double>, std::vector<std::vector<double>>> {
    std::vector<double> w;
    for (const auto& x : s.weights) w.push_back(x.get_d());
    std::vector<std::vector<double>> m;
    for (const auto& row : s.values) {
        m.emplace_back();
        for (const auto& x : row) m.back().push_back(x.get_d());
    }
    return {w, m};
}

auto kernel_density(const Graph& f, const KernelGraphon& k, const KernelOptions& mc) -> DensityValue {
    auto edges = f.edges();
    if (edges.empty()) return {1.0, Rational(1), 0.0};
    const std::uint64_t replicates = 32;
    std::uint64_t per = std::max<std::uint64_t>(2, mc.samples / replicates);
    int kv = f.order();
    std::vector<double> means;
    std::vector<std::vector<double>> x(static_cast<size_t>(kv), std::vector<double>(per));
    for (std::uint64_t r = 0; r < replicates; ++r) {
        Philox rng(mc.seed, r);
        // Latin hypercube: each coordinate is stratified into `per` cells.
        for (auto& coord : x) {
            std::vector<std::uint64_t> perm(per);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            for (std::uint64_t j = 0; j < per; ++j) coord[j] = (static_cast<double>(perm[j]) + rng.uniform()) / static_cast<double>(per);
        }
        double acc = 0;
        for (std::uint64_t j = 0; j < per; ++j) {
            double prod = 1;
            for (auto [a, b] : edges) {
                double g = k.g(x[static_cast<size_t>(a)][j], x[static_cast<size_t>(b)][j]);
                if (!(g >= 0.0 && g <= 1.0)) throw ValidationError("kernel value " + std::to_string(g) + " outside [0,1]");
                prod *= g;
            }
            acc += prod;
        }
        means.push_back(acc / static_cast<double>(per));
    }
    double mean = std::accumulate(means.begin(), means.end(), 0.0) / replicates;
    double var = 0;
    for (double m : means) var += (m - mean) * (m - mean);
    var /= replicates - 1;
    return {mean, std::nullopt, std::sqrt(var / replicates)};
}

}  // namespace

auto density_exact(const Graph& f, const Graphon& gamma) -> Rational {
    const auto& rep = gamma.rep();
    if (const auto* c = std::get_if<ConstantGraphon>(&rep)) return pow(c->p, static_cast<unsigned long>(f.size()));
    if (const auto* r = std::get_if<RankOneGraphon>(&rep)) {
        // p^|E| prod_v m_deg(v), with m_d = integral of f^d.
        Rational out = pow(r->p, static_cast<unsigned long>(f.size()));
        for (int v = 0; v < f.order(); ++v) {
            Rational m = 0;
            for (size_t b = 0; b < r->f.size(); ++b) m += r->weights[b] * pow(r->f[b], static_cast<unsigned long>(f.degree(v)));
            out *= m;
        }
        return out;
    }
    if (const auto* s = std::get_if<StepGraphon>(&rep)) {
        if (f.order() > 10) throw ValidationError("step densities support motives with at most 10 vertices");
        return density_step<Rational>(f, s->weights, s->values);
    }
    throw ValidationError("kernel graphons have no exact densities");
}

auto density_numeric(const Graph& f, const StepGraphon& step) -> double {
    auto [w, m] = to_double(step);
    return density_step<double>(f, w, m);
}

auto constant_density_poly(const Graph& f) -> Poly { return Poly::var(1, 0, f.size()); }

auto density(const Graph& f, const Graphon& gamma, const KernelOptions& mc) -> DensityValue {
    if (const auto* k = std::get_if<KernelGraphon>(&gamma.rep())) return kernel_density(f, *k, mc);
    Rational t = density_exact(f, gamma);
    return {t.get_d(), t, 0.0};
}

auto marked_density(const Graph& f, int i, const Graphon& gamma) -> std::vector<Rational> {
    if (f.order() > 8) throw ValidationError("marked densities support motives with at most 8 vertices");
    if (i < 0 || i >= f.order()) throw ValidationError("marked vertex out of range");
    StepGraphon s = gamma.as_step();
    return eliminate<Rational>(f, s.weights, s.values, {i}).table;
}

auto evaluate(const Observable& o, const Graphon& gamma, const KernelOptions& mc) -> DensityValue {
    if (gamma.is_exact()) {
        Rational total = o.evaluate([&](const Graph& g) { return density_exact(g, gamma); }, Rational(0));
        return {total.get_d(), total, 0.0};
    }
    DensityValue out;
    for (const auto& [key, term] : o.terms()) {
        auto d = density(term.graph, gamma, mc);
        double c = term.coeff.get_d();
        out.value += c * d.value;
        // Terms share random inputs, so errors are added conservatively.
        out.std_error += std::abs(c) * d.std_error;
    }
    return out;
}

auto spectrum(const Graphon& gamma, int max_power) -> SpectrumReport {
    if (max_power < 0) throw ValidationError("max_power must be non-negative");
    StepGraphon s = gamma.as_step();
    size_t q = s.weights.size();
    if (q > 64) throw ValidationError("spectrum supports at most 64 blocks");
    auto [w, m] = to_double(s);
    Eigen::MatrixXd a(q, q);
    for (size_t i = 0; i < q; ++i)
        for (size_t j = 0; j < q; ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = std::sqrt(w[i]) * m[i][j] * std::sqrt(w[j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw InfeasibleError("eigensolve failed");

    SpectrumReport r;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) r.eigenvalues.push_back(solver.eigenvalues()(i));
    std::stable_sort(r.eigenvalues.begin(), r.eigenvalues.end(), [](double x, double y) { return std::abs(x) > std::abs(y); });
    r.trace_powers.assign(static_cast<size_t>(max_power) + 1, 0.0);
    for (double l : r.eigenvalues)
        for (int k = 0; k <= max_power; ++k) r.trace_powers[static_cast<size_t>(k)] += std::pow(l, k);
    for (size_t a2 = 0; a2 < q; ++a2)
        for (size_t b = 0; b < q; ++b) r.hilbert_schmidt += w[a2] * w[b] * m[a2][b] * m[a2][b];
    r.cycle_densities.assign(static_cast<size_t>(max_power) + 1, 0.0);
    if (max_power >= 0) r.cycle_densities[0] = static_cast<double>(q);
    if (max_power >= 1)
        for (size_t b = 0; b < q; ++b) r.cycle_densities[1] += w[b] * m[b][b];
    if (max_power >= 2) r.cycle_densities[2] = r.hilbert_schmidt;
    for (int k = 3; k <= max_power && k <= kMaxVertices; ++k)
        r.cycle_densities[static_cast<size_t>(k)] = density_step<double>(graphs::cycle(k), w, m);
    return r;
}

auto fredholm_det(const Graphon& gamma, std::complex<double> z, DetKind kind) -> std::complex<double> {
    auto spec = spectrum(gamma, 0);
    std::complex<double> out = 1;
    for (double l : spec.eigenvalues) {
        if (std::abs(l) < 1e-12) continue;
        std::complex<double> zl = z * l;
        out *= (1.0 + zl) * std::exp(-zl);
        if (kind == DetKind::det3) out *= std::exp(zl * zl / 2.0);
    }
    return out;
}

auto singularity_report(const Graphon& gamma, int max_size, double tol, const KernelOptions& mc) -> SingularityReport {
    if (max_size < 2 || max_size > 5) throw ValidationError("singularity_report supports motive sizes 2..5");
    std::vector<Graph> motives;
    for (int k = 2; k <= max_size; ++k)
        for (const auto& g : enumerate_graphs(k, true)) motives.push_back(g);

    std::unordered_map<CanonicalKey, DensityValue, CanonicalKeyHash> cache;
    auto dens = [&](const Graph& g) -> const DensityValue& {
        auto key = canonical_key(g);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, density(g, gamma, mc)).first;
        return it->second;
    };

    SingularityReport rep;
    rep.max_size = max_size;
    bool have = false;
    for (size_t i = 0; i < motives.size(); ++i)
        for (size_t j = i; j < motives.size(); ++j) {
            Observable k = kappa2(motives[i], motives[j]);
            double value;
            std::optional<Rational> exact;
            if (gamma.is_exact()) {
                Rational v = k.evaluate([&](const Graph& g) { return *dens(g).exact; }, Rational(0));
                exact = abs(v);
                value = exact->get_d();
            } else {
                value = std::abs(k.evaluate([&](const Graph& g) { return dens(g).value; }, 0.0));
            }
            ++rep.pairs_checked;
            bool worse = exact ? (!have || *exact > *rep.max_residual_exact) : (!have || value > rep.max_residual);
            if (worse) {
                have = true;
                rep.max_residual = value;
                rep.max_residual_exact = exact;
                rep.worst_first = motives[i];
                rep.worst_second = motives[j];
            }
        }
    rep.singular = rep.max_residual_exact ? rep.max_residual_exact->get_d() <= tol && (tol > 0 || *rep.max_residual_exact == 0)
                                          : rep.max_residual <= tol;
    return rep;
}

auto cgw_check(const Graphon& gamma, const KernelOptions& mc) -> CgwReport {
    CgwReport r;
    r.t_c4 = density(graphs::square(), gamma, mc);
    auto e = density(graphs::edge(), gamma, mc);
    if (e.exact) {
        Rational p4 = pow(*e.exact, 4);
        r.p4 = {p4.get_d(), p4, 0.0};
        Rational gap = *r.t_c4.exact - p4;
        r.gap = {gap.get_d(), gap, 0.0};
    } else {
        r.p4 = {std::pow(e.value, 4), std::nullopt, 4 * std::pow(e.value, 3) * e.std_error};
        r.gap = {r.t_c4.value - r.p4.value, std::nullopt, r.t_c4.std_error + r.p4.std_error};
    }
    return r;
}

}  // namespace sg
