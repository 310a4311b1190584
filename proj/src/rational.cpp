#include "singraph/rational.hpp"

#include <cctype>

namespace sg {

auto parse_rational(std::string_view text) -> Rational {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    s = s.substr(b);
    if (s.empty()) throw ValidationError("empty rational");

    if (s.find_first_of(".eE") == std::string::npos) {
        Rational q;
        if (q.set_str(s, 10) != 0) throw ValidationError("bad rational: " + s);
        if (q.get_den() == 0) throw ValidationError("zero denominator: " + s);
        q.canonicalize();
        return q;
    }

    // Decimal literal: mantissa digits over a power of ten, then the exponent.
    size_t epos = s.find_first_of("eE");
    std::string mant = s.substr(0, epos);
    long exp10 = 0;
    if (epos != std::string::npos) {
        try {
            exp10 = std::stol(s.substr(epos + 1));
        } catch (const std::exception&) {
            throw ValidationError("bad exponent: " + s);
        }
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
        neg = mant[0] == '-';
        mant = mant.substr(1);
    }
    std::string digits;
    long frac = 0;
    bool seen_dot = false;
    for (char c : mant) {
        if (c == '.') {
            if (seen_dot) throw ValidationError("bad decimal: " + s);
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_dot) ++frac;
        } else {
            throw ValidationError("bad decimal: " + s);
        }
    }
    if (digits.empty()) throw ValidationError("bad decimal: " + s);
    Integer num(digits, 10);
    Integer ten = 10;
    long shift = exp10 - frac;
    Rational q;
    if (shift >= 0) {
        Integer scale;
        mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift));
        q = Rational(num * scale);
    } else {
        Integer scale;
        mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-shift));
        q = Rational(num, scale);
        q.canonicalize();
    }
    return neg ? Rational(-q) : q;
}

auto to_string(const Rational& q) -> std::string { return q.get_str(10); }
auto to_string(const Integer& z) -> std::string { return z.get_str(10); }

auto pow(const Rational& q, unsigned long e) -> Rational {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return r;
}

auto falling_factorial(long n, int l) -> Integer {
    Integer r = 1;
    for (int i = 0; i < l; ++i) r *= (n - i);
    return r;
}

auto factorial(int n) -> Integer {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

auto binomial(long n, long k) -> Integer {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace sg
