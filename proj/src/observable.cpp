#include "singraph/observable.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <future>
#include <numeric>
#include <sstream>
#include <thread>

namespace sg {

// ---- Observable ----

auto Observable::of(const Graph& g, const Rational& c) -> Observable {
    Observable o;
    o.add(g, c);
    return o;
}

auto Observable::constant(const Rational& c) -> Observable { return of(Graph(0), c); }

auto Observable::coefficient(const Graph& g) const -> Rational {
    auto it = terms_.find(canonical_key(g));
    return it == terms_.end() ? Rational(0) : it->second.coeff;
}

void Observable::add(const Graph& g, const Rational& c) {
    if (c == 0) return;
    auto key = canonical_key(g);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), Term{canonical_form(g), c});
        return;
    }
    it->second.coeff += c;
    if (it->second.coeff == 0) terms_.erase(it);
}

auto Observable::operator+=(const Observable& o) -> Observable& {
    for (const auto& [key, term] : o.terms_) {
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, term);
        } else if ((it->second.coeff += term.coeff) == 0) {
            terms_.erase(it);
        }
    }
    return *this;
}

auto Observable::operator-=(const Observable& o) -> Observable& { return *this += o * Rational(-1); }

auto Observable::operator*=(const Rational& c) -> Observable& {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, term] : terms_) term.coeff *= c;
    return *this;
}

auto operator*(const Observable& a, const Observable& b) -> Observable {
    Observable out;
    for (const auto& [ka, ta] : a.terms_)
        for (const auto& [kb, tb] : b.terms_) out.add(disjoint_union(ta.graph, tb.graph), ta.coeff * tb.coeff);
    return out;
}

auto operator==(const Observable& a, const Observable& b) -> bool {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second.coeff != ib->second.coeff) return false;
    return true;
}

auto Observable::to_string() const -> std::string {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, term] : terms_) {
        Rational c = term.coeff;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        c = abs(c);
        bool unit_graph = term.graph.order() == 0;
        if (c != 1 || unit_graph) out << sg::to_string(c);
        if (!unit_graph) out << (c != 1 ? "*" : "") << "[" << describe(term.graph) << "]";
        first = false;
    }
    return out.str();
}

// ---- Stirling numbers ----

auto stirling1(int l, int j) -> Integer {
    // n^{(l)} = sum_j s(l, j) n^j, with s(l+1, j) = s(l, j-1) - l s(l, j).
    std::vector<Integer> row = {1};
    for (int m = 0; m < l; ++m) {
        std::vector<Integer> next(row.size() + 1, 0);
        for (size_t i = 0; i < row.size(); ++i) {
            next[i + 1] += row[i];
            next[i] -= m * row[i];
        }
        row = std::move(next);
    }
    return (j < 0 || j > l) ? Integer(0) : row[static_cast<size_t>(j)];
}

auto stirling2(int l, int j) -> Integer {
    std::vector<Integer> row = {1};
    for (int m = 0; m < l; ++m) {
        std::vector<Integer> next(row.size() + 1, 0);
        for (size_t i = 0; i < row.size(); ++i) {
            next[i + 1] += row[i];
            next[i] += static_cast<long>(i) * row[i];
        }
        row = std::move(next);
    }
    return (j < 0 || j > l) ? Integer(0) : row[static_cast<size_t>(j)];
}

// ---- NPolynomial ----

void NPolynomial::trim() {
    while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
}

auto NPolynomial::from_monomial(const std::map<int, Observable>& coeffs) -> NPolynomial {
    NPolynomial p;
    for (const auto& [l, c] : coeffs) {
        if (l < 0) throw ValidationError("negative power of n");
        if (static_cast<size_t>(l) >= p.coeff_.size()) p.coeff_.resize(static_cast<size_t>(l) + 1);
        p.coeff_[static_cast<size_t>(l)] += c;
    }
    p.trim();
    return p;
}

auto NPolynomial::from_falling(const std::map<int, Observable>& coeffs) -> NPolynomial {
    std::map<int, Observable> mono;
    for (const auto& [l, c] : coeffs)
        for (int j = 0; j <= l; ++j) {
            Integer s = stirling1(l, j);
            if (s != 0) mono[j] += c * Rational(s);
        }
    return from_monomial(mono);
}

auto NPolynomial::coefficient(int l) const -> Observable {
    return (l < 0 || l > degree()) ? Observable() : coeff_[static_cast<size_t>(l)];
}

auto NPolynomial::leading() const -> Observable { return coeff_.empty() ? Observable() : coeff_.back(); }

auto NPolynomial::monomial() const -> std::map<int, Observable> {
    std::map<int, Observable> out;
    for (size_t l = 0; l < coeff_.size(); ++l)
        if (!coeff_[l].is_zero()) out[static_cast<int>(l)] = coeff_[l];
    return out;
}

auto NPolynomial::falling() const -> std::map<int, Observable> {
    std::map<int, Observable> out;
    for (size_t j = 0; j < coeff_.size(); ++j)
        for (int l = 0; l <= static_cast<int>(j); ++l) {
            Integer s = stirling2(static_cast<int>(j), l);
            if (s != 0) out[l] += coeff_[j] * Rational(s);
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

auto NPolynomial::operator+=(const NPolynomial& o) -> NPolynomial& {
    if (o.coeff_.size() > coeff_.size()) coeff_.resize(o.coeff_.size());
    for (size_t l = 0; l < o.coeff_.size(); ++l) coeff_[l] += o.coeff_[l];
    trim();
    return *this;
}

auto NPolynomial::operator*=(const Rational& c) -> NPolynomial& {
    for (auto& x : coeff_) x *= c;
    trim();
    return *this;
}

auto operator*(const NPolynomial& a, const NPolynomial& b) -> NPolynomial {
    NPolynomial out;
    if (a.coeff_.empty() || b.coeff_.empty()) return out;
    out.coeff_.resize(a.coeff_.size() + b.coeff_.size() - 1);
    for (size_t i = 0; i < a.coeff_.size(); ++i)
        for (size_t j = 0; j < b.coeff_.size(); ++j) out.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
    out.trim();
    return out;
}

auto NPolynomial::at(const Rational& n) const -> Observable {
    Observable out;
    Rational power = 1;
    for (const auto& c : coeff_) {
        out += c * power;
        power *= n;
    }
    return out;
}

auto NPolynomial::to_string(bool falling_basis) const -> std::string {
    auto coeffs = falling_basis ? falling() : monomial();
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        out << "(" << it->second.to_string() << ")";
        if (it->first > 0) out << (falling_basis ? "*n_" : "*n^") << it->first;
    }
    return out.str();
}

// ---- cumulants ----

auto kappa2(const Graph& f1, const Graph& f2) -> Observable {
    int k1 = f1.order(), k2 = f2.order();
    if (k1 < 1 || k2 < 1) throw ValidationError("kappa2 needs non-empty graphs");
    Observable out;
    for (int i = 0; i < k1; ++i)
        for (int j = 0; j < k2; ++j) out.add(join(f1, f2, i, j), 1);
    out.add(disjoint_union(f1, f2), -k1 * k2);
    return out;
}

auto kappa_pi(const std::vector<Graph>& fs, const SetPartition& pi) -> Observable {
    std::vector<int> sizes;
    for (const auto& f : fs) sizes.push_back(f.order());
    JointGround ground(sizes);
    if (pi.size() != ground.total()) throw ValidationError("partition does not match the joint vertex set");
    int s = static_cast<int>(fs.size());

    Observable out;
    for (const SetPartition& theta : set_partitions(s)) {
        Observable product = Observable::constant(1);
        for (const auto& block : theta.blocks()) {
            std::vector<Graph> parts;
            std::vector<int> points;
            for (int r : block) {
                parts.push_back(fs[static_cast<size_t>(r)]);
                for (int a = 0; a < sizes[static_cast<size_t>(r)]; ++a) points.push_back(ground.index(r, a));
            }
            auto c = contract(disjoint_union(parts), pi.restrict_to(points));
            if (c.has_loop) throw ValidationError("kappa_pi: contraction creates a loop");
            product = product * Observable::of(c.graph);
        }
        out += product * Rational(static_cast<long>(mobius(theta)));
    }
    return out;
}

auto kappa_s(const std::vector<Graph>& fs) -> Observable {
    int s = static_cast<int>(fs.size());
    if (s < 2) throw ValidationError("kappa_s needs at least two graphs");
    if (s > 6) throw ValidationError("kappa_s supports at most six graphs");
    std::vector<int> sizes;
    for (const auto& f : fs) {
        if (f.order() < 1) throw ValidationError("kappa_s needs non-empty graphs");
        sizes.push_back(f.order());
    }
    if (JointGround(sizes).total() > kMaxGround)
        throw ValidationError("joint vertex set exceeds " + std::to_string(kMaxGround));

    auto trees = enumerate_hypertrees(s);
    auto work = [&](size_t begin, size_t stride) {
        Observable acc;
        for (size_t t = begin; t < trees.size(); t += stride) {
            HypertreePartitionStream stream(trees[t], sizes);
            while (stream.next()) acc += kappa_pi(fs, stream.current());
        }
        return acc;
    };
    size_t workers = std::min<size_t>(std::max(1U, std::thread::hardware_concurrency()), trees.size());
    if (workers <= 1) return work(0, 1);
    std::vector<std::future<Observable>> parts;
    for (size_t w = 0; w < workers; ++w) parts.push_back(std::async(std::launch::async, work, w, workers));
    Observable out;
    for (auto& p : parts) out += p.get();
    return out;
}

auto expected_count_poly(const Graph& f) -> NPolynomial {
    if (f.order() > 10) throw ValidationError("expected_count_poly supports motives with at most 10 vertices");
    std::map<int, Observable> coeffs;
    SetPartitionStream stream(f.order());
    if (f.order() == 0) return NPolynomial::from_falling({{0, Observable::constant(1)}});
    while (stream.next()) {
        auto c = contract(f, stream.current());
        if (!c.has_loop) coeffs[stream.block_count()].add(c.graph, 1);
    }
    return NPolynomial::from_falling(coeffs);
}

auto joint_moment_poly(const std::vector<Graph>& fs) -> NPolynomial { return expected_count_poly(disjoint_union(fs)); }

auto joint_cumulant_poly(const std::vector<Graph>& fs) -> NPolynomial {
    int s = static_cast<int>(fs.size());
    if (s < 1) throw ValidationError("joint_cumulant_poly needs at least one graph");
    int total = 0;
    for (const auto& f : fs) total += f.order();
    if (total > 10) throw ValidationError("joint_cumulant_poly supports total size at most 10");

    std::map<std::vector<int>, NPolynomial> moments;
    NPolynomial out;
    for (const SetPartition& theta : set_partitions(s)) {
        NPolynomial product = NPolynomial::from_monomial({{0, Observable::constant(1)}});
        for (const auto& block : theta.blocks()) {
            auto it = moments.find(block);
            if (it == moments.end()) {
                std::vector<Graph> parts;
                for (int r : block) parts.push_back(fs[static_cast<size_t>(r)]);
                it = moments.emplace(block, joint_moment_poly(parts)).first;
            }
            product = product * it->second;
        }
        out += product * Rational(static_cast<long>(mobius(theta)));
    }
    return out;
}

auto contraction_census(int r) -> std::vector<CensusRow> {
    if (r < 1 || r > 4) throw ValidationError("contraction_census supports 1 <= r <= 4");
    std::vector<Graph> edges(static_cast<size_t>(r), graphs::edge());
    Graph f = disjoint_union(edges);
    std::map<std::pair<std::vector<int>, CanonicalKey>, CensusRow> rows;
    for (const SetPartition& pi : set_partitions(2 * r)) {
        auto c = contract(f, pi);
        if (c.has_loop) continue;
        auto type = pi.type();
        auto& row = rows[{type, canonical_key(c.graph)}];
        if (row.multiplicity == 0) {
            row.type = type;
            row.graph = canonical_form(c.graph);
        }
        ++row.multiplicity;
    }
    std::vector<CensusRow> out;
    for (auto& [key, row] : rows) out.push_back(std::move(row));
    // Types increase lexicographically; within a type, more edges first.
    std::stable_sort(out.begin(), out.end(), [](const CensusRow& a, const CensusRow& b) {
        if (a.type != b.type) return a.type < b.type;
        return a.graph.size() > b.graph.size();
    });
    return out;
}

// ---- closed forms for the edge count ----

auto singular_density(const Graph& g) -> Poly {
    constexpr int kVars = 4;
    auto d = join_transitive_decomposition(g);
    if (!d) throw ValidationError("graph " + describe(g) + " is not join-transitive");
    Poly out(kVars, 1);
    for (const auto& piece : d->pieces) {
        const Graph& h = piece.graph;
        if (h.order() == 1) continue;
        if (h.order() == 2) {
            out *= Poly::var(kVars, 1);
        } else if (isomorphic(h, graphs::triangle())) {
            out *= Poly::var(kVars, 2);
        } else if (isomorphic(h, graphs::square())) {
            out *= Poly::var(kVars, 3);
        } else {
            throw ValidationError("no closed-form density for piece " + describe(h));
        }
    }
    return out;
}

auto edge_cumulant_closed_form(int order) -> Poly {
    if (order < 1 || order > 4) throw ValidationError("edge cumulant order must be in 1..4");
    std::vector<Graph> fs(static_cast<size_t>(order), graphs::edge());
    return joint_cumulant_poly(fs).specialize([](const Graph& g) { return singular_density(g); }, 4);
}

namespace {

auto falling_n(int l) -> Poly {
    Poly out(4, 1);
    for (int i = 0; i < l; ++i) out *= Poly::var(4, 0) - Poly(4, i);
    return out;
}

}  // namespace

auto edge_cumulant_printed(int order) -> Poly {
    Poly n = Poly::var(4, 0), p = Poly::var(4, 1), c3 = Poly::var(4, 2), c4 = Poly::var(4, 3);
    Poly one(4, 1);
    auto k = [](long v) { return Poly(4, Rational(v)); };
    switch (order) {
    case 2:
        // n^2 times 2p(1-p)(1-1/n).
        return k(2) * falling_n(2) * p * (one - p);
    case 3:
        return k(8) * falling_n(3) * (c3 - p.pow(3)) + k(4) * falling_n(2) * p * (p - one) * (k(2) * p - one);
    case 4:
        return k(48) * falling_n(4) * (c4 - p.pow(4)) + k(48) * (one - k(4) * p) * falling_n(3) * c3 +
               k(8) * p * falling_n(2) *
                   (p.pow(3) * (k(24) * n - k(54)) - k(12) * p.pow(2) * (n - k(3)) - k(7) * p + one);
    default:
        throw ValidationError("printed edge cumulants exist for orders 2, 3, 4");
    }
}

auto cumulant_bound(std::vector<int> sizes, double n, bool singular) -> double {
    int s = static_cast<int>(sizes.size());
    if (s < 2) throw ValidationError("cumulant_bound needs s >= 2");
    std::sort(sizes.begin(), sizes.end());
    double total = std::accumulate(sizes.begin(), sizes.end(), 0.0);
    if (singular) {
        double prod = 1;
        for (int k : sizes) prod *= k;
        return std::pow(2.0, s - 1) * std::pow(total, s) * prod * std::pow(n, total - s);
    }
    double prod = 1;
    for (int r = 0; r + 1 < s; ++r) prod *= sizes[static_cast<size_t>(r)];
    return std::pow(2.0, s - 1) * std::pow(s, s - 2) * prod * prod * std::pow(n, total - s + 1);
}

}  // namespace sg
