#include "eef/numbers.hpp"

#include <cctype>

namespace eef {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw math_error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_pow(const Rational& base, const Int& exponent) {
  if (exponent < 0) throw math_error("rational_pow: negative exponent");
  if (!exponent.fits_ulong_p())
    throw math_error("rational_pow: exponent too large");
  unsigned long e = exponent.get_ui();
  if (e == 0) return Rational(1);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  return make_rational(num, den);
}

namespace {

bool plain_decimal(const std::string& s) {
  bool digit = false, dot = false, exp = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c == '+' || c == '-') {
      if (i != 0 && !(s[i - 1] == 'e' || s[i - 1] == 'E')) return false;
    } else if (c == '.') {
      if (dot || exp) return false;
      dot = true;
    } else if (c == 'e' || c == 'E') {
      if (exp || !digit) return false;
      exp = true;
    } else {
      return false;
    }
  }
  return digit;
}

// "12.5e-2" -> 125/1000 shifted by the exponent, exactly.
Rational decimal_to_rational(const std::string& s) {
  std::string digits;
  long shift = 0;
  long exponent = 0;
  bool neg = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
    if (s[i] == '.') {
      shift = -1;
      continue;
    }
    digits += s[i];
    if (shift < 0) --shift;
  }
  if (shift < 0) shift += 1;  // the first decrement marked the dot itself
  if (i < s.size()) {
    try {
      exponent = std::stol(s.substr(i + 1));
    } catch (const std::exception&) {
      throw parse_error("bad number: " + s);
    }
  }
  if (digits.empty()) throw parse_error("bad number: " + s);
  Int num(digits, 10);
  if (neg) num = -num;
  long ten = exponent + shift;
  Int pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(ten < 0 ? -ten : ten));
  return ten >= 0 ? make_rational(num * pow10, 1) : make_rational(num, pow10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw parse_error("empty number");
  if (s.find('/') != std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw parse_error("bad rational: " + text);
    if (q.get_den() == 0) throw parse_error("zero denominator: " + text);
    q.canonicalize();
    return q;
  }
  if (!plain_decimal(s)) throw parse_error("bad number: " + text);
  return decimal_to_rational(s);
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace eef
