#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace eef {

using Int = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (model files, density files, flags).
struct parse_error : error {
  using error::error;
};

// Violated mathematical precondition or unattainable result.
struct math_error : error {
  using error::error;
};

// den must be nonzero; result is canonicalized (positive den, coprime).
Rational make_rational(const Int& num, const Int& den);

// base^exponent for exponent >= 0, with 0^0 = 1.
Rational rational_pow(const Rational& base, const Int& exponent);

// Accepts "p/q", "p", or a plain decimal such as "0.25" or "-3.5e-2".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

}  // namespace eef
