#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/mpfr.hpp>

#include "gsp4/exact/rational.hpp"

namespace gsp4::arch {

using exact::Rational;

/// Working real type. Precision is fixed at compile time and always exceeds
/// the largest accepted request, so callers pass the digits they need by value
/// and no global precision state is touched.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<64>,
                                           boost::multiprecision::et_off>;

inline constexpr int kMinDigits = 15;
inline constexpr int kMaxDigits = 50;

/// Throws DomainError(PrecisionOutOfRange) unless kMinDigits <= digits <= kMaxDigits.
void check_digits(int digits);

Real to_real(const Rational& q);
Real pi();

struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  Complex conj() const { return {re, -im}; }
  Real abs() const;
  Real arg() const;

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b);
  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }

  /// Decimal rendering with `digits` significant digits, e.g. "1.5-2i".
  std::string to_string(int digits) const;
};

Complex exp(const Complex& z);
/// Principal branch.
Complex log(const Complex& z);
Complex sin(const Complex& z);
/// base^z for a positive real base.
Complex pow(const Real& base, const Complex& z);

/// Relative distance |a - b| / |b| (absolute when b = 0), as a double.
double rel_err(const Complex& a, const Complex& b);

/// Gaussian rational, used for sample points so that pole tests are exact.
struct ExactComplex {
  Rational re;
  Rational im;

  /// Accepts "2.3", "3.1+0.7i", "-1/2-2i", "0.5i", "i".
  static ExactComplex parse(std::string_view text);

  bool is_real() const { return im.is_zero(); }
  /// True when the value is 0, -1, -2, ...
  bool is_nonpositive_integer() const;
  Complex to_complex() const { return {to_real(re), to_real(im)}; }
  std::string to_string() const;

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend ExactComplex operator*(const Rational& c, const ExactComplex& z) { return {c * z.re, c * z.im}; }
  friend bool operator==(const ExactComplex&, const ExactComplex&) = default;
};

/**
 * Γ(z) to `digits` significant digits.
 *
 * For Re z < 1/2 the reflection formula Γ(z)Γ(1−z) = π / sin(πz) is applied.
 * Otherwise z is shifted right until |z + n| is large, log Γ(z + n) is taken
 * from the Stirling series with exact Bernoulli coefficients, and the shift is
 * undone by dividing out z(z+1)…(z+n−1).
 *
 * Throws DomainError(PoleAt) when z is a non-positive integer and
 * DomainError(PrecisionOutOfRange) for digits outside [15, 50].
 */
Complex gamma_numeric(const Complex& z, int digits);

/// Γ_C(z) = 2 (2π)^{−z} Γ(z).
Complex gamma_c(const Complex& z, int digits);

}  // namespace gsp4::arch
