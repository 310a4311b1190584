#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sg {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised for malformed user input; the CLI maps it to exit code 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a request exceeds a declared cost budget; CLI exit code 3.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts "a", "a/b" and plain decimals such as "0.25" or "-1.5e-2".
auto parse_rational(std::string_view text) -> Rational;
auto to_string(const Rational& q) -> std::string;
auto to_string(const Integer& z) -> std::string;

auto pow(const Rational& q, unsigned long e) -> Rational;
auto falling_factorial(long n, int l) -> Integer;
auto factorial(int n) -> Integer;
auto binomial(long n, long k) -> Integer;

}  // namespace sg
