#include "singraph/poly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sg {

Poly::Poly(int nvars, const Rational& c) : nvars_(nvars) {
    if (c != 0) terms_.emplace(Exponents(static_cast<size_t>(nvars), 0), c);
}

auto Poly::var(int nvars, int i, int power) -> Poly {
    Exponents e(static_cast<size_t>(nvars), 0);
    e.at(static_cast<size_t>(i)) = power;
    return monomial(e, 1);
}

auto Poly::monomial(const Exponents& e, const Rational& c) -> Poly {
    Poly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

auto Poly::is_constant() const -> bool {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int x : terms_.begin()->first)
        if (x != 0) return false;
    return true;
}

auto Poly::constant_term() const -> Rational {
    return coefficient(Exponents(static_cast<size_t>(nvars_), 0));
}

auto Poly::coefficient(const Exponents& e) const -> Rational {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

auto Poly::degree(int var) const -> int {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var)]);
    return d;
}

auto Poly::total_degree() const -> int {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

auto Poly::leading() const -> std::pair<Exponents, Rational> {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

static void check_vars(int a, int b) {
    if (a != b) throw std::invalid_argument("polynomial variable count mismatch");
}

auto Poly::operator+=(const Poly& o) -> Poly& {
    if (o.terms_.empty()) return *this;
    if (terms_.empty() && nvars_ == 0) nvars_ = o.nvars_;
    check_vars(nvars_, o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

auto Poly::operator-=(const Poly& o) -> Poly& {
    if (o.terms_.empty()) return *this;
    if (terms_.empty() && nvars_ == 0) nvars_ = o.nvars_;
    check_vars(nvars_, o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

auto operator*(const Poly& a, const Poly& b) -> Poly {
    if (a.terms_.empty() || b.terms_.empty()) return Poly(std::max(a.nvars_, b.nvars_));
    check_vars(a.nvars_, b.nvars_);
    Poly r(a.nvars_);
    Poly::Exponents e(static_cast<size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

auto Poly::operator*=(const Poly& o) -> Poly& { return *this = *this * o; }

auto Poly::operator*=(const Rational& c) -> Poly& {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

auto Poly::operator-() const -> Poly {
    Poly r = *this;
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

auto operator==(const Poly& a, const Poly& b) -> bool {
    if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

auto Poly::pow(int e) const -> Poly {
    Poly r(nvars_, 1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

auto Poly::divide_exact(const Poly& d) const -> Poly {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly q(nvars_);
    Poly r = *this;
    auto [de, dc] = d.leading();
    while (!r.is_zero()) {
        auto [re, rc] = r.leading();
        Exponents e(re.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = re[i] - de[i];
            if (e[i] < 0) throw std::domain_error("inexact polynomial division");
        }
        Poly t = monomial(e, rc / dc);
        q += t;
        r -= t * d;
    }
    return q;
}

auto Poly::evaluate(const std::vector<Rational>& at) const -> Rational {
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= sg::pow(at.at(i), static_cast<unsigned long>(e[i]));
        s += t;
    }
    return s;
}

auto Poly::evaluate(const std::vector<double>& at) const -> double {
    double s = 0;
    for (const auto& [e, c] : terms_) {
        double t = c.get_d();
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= std::pow(at.at(i), e[i]);
        s += t;
    }
    return s;
}

auto Poly::substitute(int var, const Poly& value) const -> Poly {
    Poly r(nvars_);
    std::vector<Poly> powers{Poly(nvars_, 1)};
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<size_t>(var)];
        while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * value);
        Exponents rest = e;
        rest[static_cast<size_t>(var)] = 0;
        r += monomial(rest, c) * powers[static_cast<size_t>(k)];
    }
    return r;
}

auto Poly::to_string(const std::vector<std::string>& names) const -> std::string {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool unit = true;
        for (int x : e) unit = unit && x == 0;
        Rational a = abs(c);
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        first = false;
        bool wrote = false;
        if (unit || a != 1) {
            out << a.get_str();
            wrote = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (wrote) out << "*";
            out << (i < names.size() ? names[i] : "x" + std::to_string(i));
            if (e[i] > 1) out << "^" << e[i];
            wrote = true;
        }
    }
    return out.str();
}

}  // namespace sg
