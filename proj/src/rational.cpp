#include "indep/rational.hpp"

#include <cctype>
#include <cstddef>
#include <string>

#include "indep/errors.hpp"

namespace indep {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// [+-]?digits
bool is_plain_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return all_digits(s);
}

Rational parse_fraction(std::string_view text, std::size_t slash) {
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!is_plain_integer(num) || !is_plain_integer(den))
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// [+-]? (digits [. digits?] | . digits) ([eE] [+-]? digits)?
// Converted exactly: mantissa digits over a power of ten.
Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  std::string digits;
  long scale = 0;  // value = digits * 10^scale

  std::size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
    digits.push_back(s[i++]);
  bool any_int_digit = i > 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    std::size_t frac_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      digits.push_back(s[i++]);
    std::size_t frac_len = i - frac_start;
    if (!any_int_digit && frac_len == 0)
      throw ParseError("malformed number: '" + std::string(text) + "'");
    scale -= static_cast<long>(frac_len);
  } else if (!any_int_digit) {
    throw ParseError("malformed number: '" + std::string(text) + "'");
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::string_view exp = s.substr(i + 1);
    if (!is_plain_integer(exp))
      throw ParseError("malformed exponent: '" + std::string(text) + "'");
    scale += std::stol(std::string(exp));
  } else if (i != s.size()) {
    throw ParseError("malformed number: '" + std::string(text) + "'");
  }

  if (digits.empty()) throw ParseError("malformed number: '" + std::string(text) + "'");

  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpz_class pow10;
  Rational r;
  if (scale >= 0) {
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(scale));
    r = Rational(mantissa * pow10);
  } else {
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(-scale));
    r = Rational(mantissa, pow10);
  }
  r.canonicalize();
  return r;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw ParseError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number");

  if (std::size_t slash = text.find('/'); slash != std::string_view::npos)
    return parse_fraction(text, slash);
  if (is_plain_integer(text)) {
    Rational r(mpz_class(std::string(text), 10));
    return r;
  }
  return parse_decimal(text);
}

double to_double(const Rational& r) { return r.get_d(); }

Rational rational_pow(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  // num and den are coprime, so are their powers; no canonicalize needed.
  return out;
}

}  // namespace indep
