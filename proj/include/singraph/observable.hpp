#pragma once

#include "singraph/graph.hpp"
#include "singraph/poly.hpp"

#include <map>
#include <string>
#include <type_traits>
#include <vector>

namespace sg {

// Element of the graph algebra: a finite rational combination of unlabelled
// graphs, where the product of two basis graphs is their disjoint union.
class Observable {
public:
    struct Term {
        Graph graph;
        Rational coeff;
    };

    Observable() = default;
    static auto of(const Graph& g, const Rational& c = 1) -> Observable;
    static auto constant(const Rational& c) -> Observable;

    auto terms() const -> const std::map<CanonicalKey, Term>& { return terms_; }
    auto is_zero() const -> bool { return terms_.empty(); }
    auto coefficient(const Graph& g) const -> Rational;
    void add(const Graph& g, const Rational& c);

    auto operator+=(const Observable& o) -> Observable&;
    auto operator-=(const Observable& o) -> Observable&;
    auto operator*=(const Rational& c) -> Observable&;
    friend auto operator+(Observable a, const Observable& b) -> Observable { return a += b; }
    friend auto operator-(Observable a, const Observable& b) -> Observable { return a -= b; }
    friend auto operator*(Observable a, const Rational& c) -> Observable { return a *= c; }
    friend auto operator*(const Rational& c, Observable a) -> Observable { return a *= c; }
    friend auto operator*(const Observable& a, const Observable& b) -> Observable;
    friend auto operator==(const Observable& a, const Observable& b) -> bool;

    // Linear extension of a density map graph -> T.
    template <class T, class Density>
    auto evaluate(Density&& density, T zero) const -> T {
        for (const auto& [key, term] : terms_) {
            if constexpr (std::is_floating_point_v<T>) {
                zero += term.coeff.get_d() * density(term.graph);
            } else {
                zero += term.coeff * density(term.graph);
            }
        }
        return zero;
    }

    // Terms in key order, e.g. "4*[P3] - 4*[edge+edge]".
    auto to_string() const -> std::string;

private:
    std::map<CanonicalKey, Term> terms_;
};

// Polynomial in the size n with Observable coefficients, stored on the
// monomial basis n^l.
class NPolynomial {
public:
    NPolynomial() = default;
    // From coefficients on the falling-factorial basis n^{(l)} = n(n-1)...(n-l+1).
    static auto from_falling(const std::map<int, Observable>& coeffs) -> NPolynomial;
    static auto from_monomial(const std::map<int, Observable>& coeffs) -> NPolynomial;

    auto degree() const -> int { return static_cast<int>(coeff_.size()) - 1; }
    auto coefficient(int l) const -> Observable;
    auto leading() const -> Observable;
    auto monomial() const -> std::map<int, Observable>;
    auto falling() const -> std::map<int, Observable>;

    auto operator+=(const NPolynomial& o) -> NPolynomial&;
    auto operator*=(const Rational& c) -> NPolynomial&;
    friend auto operator+(NPolynomial a, const NPolynomial& b) -> NPolynomial { return a += b; }
    friend auto operator*(NPolynomial a, const Rational& c) -> NPolynomial { return a *= c; }
    friend auto operator*(const NPolynomial& a, const NPolynomial& b) -> NPolynomial;
    friend auto operator==(const NPolynomial& a, const NPolynomial& b) -> bool { return a.coeff_ == b.coeff_; }

    auto at(const Rational& n) const -> Observable;

    // Replaces every graph by density(graph), a Poly whose variable 0 is
    // reserved for n; returns the polynomial in n and the density variables.
    template <class Density>
    auto specialize(Density&& density, int nvars) const -> Poly {
        Poly out(nvars);
        for (size_t l = 0; l < coeff_.size(); ++l)
            out += Poly::var(nvars, 0, static_cast<int>(l)) * coeff_[l].evaluate(density, Poly(nvars));
        return out;
    }

    auto to_string(bool falling_basis) const -> std::string;

private:
    void trim();
    std::vector<Observable> coeff_;
};

// Signed Stirling numbers of the first kind s(l, j) and second kind S(l, j).
auto stirling1(int l, int j) -> Integer;
auto stirling2(int l, int j) -> Integer;

auto kappa2(const Graph& f1, const Graph& f2) -> Observable;
// Contribution of one set partition pi of the joint vertex set.
auto kappa_pi(const std::vector<Graph>& fs, const SetPartition& pi) -> Observable;
// Leading coefficient of the joint cumulant, summed over hypertree partitions.
auto kappa_s(const std::vector<Graph>& fs) -> Observable;

auto expected_count_poly(const Graph& f) -> NPolynomial;
auto joint_moment_poly(const std::vector<Graph>& fs) -> NPolynomial;
auto joint_cumulant_poly(const std::vector<Graph>& fs) -> NPolynomial;

struct CensusRow {
    std::vector<int> type;  // integer partition, decreasing
    Graph graph;
    long long multiplicity = 0;
};
// Loopless contractions of r disjoint edges grouped by (type, iso class).
auto contraction_census(int r) -> std::vector<CensusRow>;

// Variables of the closed forms: 0 = n, 1 = p, 2 = t(C3), 3 = t(C4).
inline const std::vector<std::string> kClosedFormVars = {"n", "p", "tC3", "tC4"};

// Density under the factorisation over join-transitive pieces, with trees
// and other pieces expressed through p, t(C3), t(C4). Throws ValidationError
// for pieces outside {K1, edge, C3, C4}.
auto singular_density(const Graph& g) -> Poly;

// r-th cumulant of the edge count S_n, recomputed by the engine.
auto edge_cumulant_closed_form(int order) -> Poly;
// The same, transcribed as printed in the literature for order 2, 3, 4.
auto edge_cumulant_printed(int order) -> Poly;

auto cumulant_bound(std::vector<int> sizes, double n, bool singular) -> double;

}  // namespace sg
