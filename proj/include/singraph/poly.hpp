#pragma once

#include "singraph/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace sg {

// Sparse multivariate polynomial over Q in a fixed number of variables.
// Monomials are exponent vectors ordered lexicographically, so the largest
// key is the lex-leading term.
class Poly {
public:
    using Exponents = std::vector<int>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}
    Poly(int nvars, const Rational& c);

    static auto var(int nvars, int i, int power = 1) -> Poly;
    static auto monomial(const Exponents& e, const Rational& c) -> Poly;

    auto nvars() const -> int { return nvars_; }
    auto terms() const -> const std::map<Exponents, Rational>& { return terms_; }
    auto is_zero() const -> bool { return terms_.empty(); }
    auto is_constant() const -> bool;
    auto constant_term() const -> Rational;
    auto coefficient(const Exponents& e) const -> Rational;
    auto degree(int var) const -> int;
    auto total_degree() const -> int;
    auto leading() const -> std::pair<Exponents, Rational>;

    auto operator+=(const Poly& o) -> Poly&;
    auto operator-=(const Poly& o) -> Poly&;
    auto operator*=(const Poly& o) -> Poly&;
    auto operator*=(const Rational& c) -> Poly&;
    friend auto operator+(Poly a, const Poly& b) -> Poly { return a += b; }
    friend auto operator-(Poly a, const Poly& b) -> Poly { return a -= b; }
    friend auto operator*(const Poly& a, const Poly& b) -> Poly;
    friend auto operator*(Poly a, const Rational& c) -> Poly { return a *= c; }
    friend auto operator*(const Rational& c, Poly a) -> Poly { return a *= c; }
    auto operator-() const -> Poly;
    friend auto operator==(const Poly& a, const Poly& b) -> bool;

    auto pow(int e) const -> Poly;

    // Exact quotient; throws std::domain_error if the division is not exact.
    auto divide_exact(const Poly& d) const -> Poly;

    auto evaluate(const std::vector<Rational>& at) const -> Rational;
    auto evaluate(const std::vector<double>& at) const -> double;
    // Substitutes variable `var` by polynomial `value` (same variable count).
    auto substitute(int var, const Poly& value) const -> Poly;

    auto to_string(const std::vector<std::string>& names) const -> std::string;

private:
    void add_term(const Exponents& e, const Rational& c);

    int nvars_ = 0;
    std::map<Exponents, Rational> terms_;
};

}  // namespace sg
