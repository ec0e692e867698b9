#include "gsp4/exact/rational.hpp"

#include <cctype>
#include <limits>

#include "gsp4/errors.hpp"

namespace gsp4::exact {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw DomainError(Errc::ParseError, "not an integer: '" + std::string(s) + "'");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError(Errc::DenominatorVanishes, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError(Errc::ParseError, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    exponent = parse_integer(text.substr(e + 1)).get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    auto whole = mantissa.substr(0, dot);
    auto frac = mantissa.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw DomainError(Errc::ParseError, "bad decimal '" + std::string(text) + "'");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
      throw DomainError(Errc::ParseError, "bad decimal '" + std::string(text) + "'");
    digits = std::string(whole) + std::string(frac);
    frac_len = static_cast<long>(frac.size());
  } else {
    if (!all_digits(mantissa)) throw DomainError(Errc::ParseError, "bad number '" + std::string(text) + "'");
    digits = std::string(mantissa);
  }
  mpz_class num(digits, 10);
  if (negative) num = -num;
  long shift = exponent - frac_len;
  if (shift >= 0) return Rational(mpz_class(num * pow10(static_cast<unsigned long>(shift))), mpz_class(1));
  return Rational(num, pow10(static_cast<unsigned long>(-shift)));
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw DomainError(Errc::NotAnInteger, "not an integer: " + to_string());
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw DomainError(Errc::ExponentOverflow, "integer out of range: " + to_string());
  return n.get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError(Errc::DenominatorVanishes, "inverse of zero");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(std::int64_t exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError(Errc::DenominatorVanishes, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace gsp4::exact
