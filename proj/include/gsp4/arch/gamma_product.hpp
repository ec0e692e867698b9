#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsp4/arch/numeric.hpp"

namespace gsp4::arch {

/// c + a·s₁ + b·s₂ with exact rational coefficients.
struct AffineArg {
  Rational constant;
  Rational coef_s1;
  Rational coef_s2;

  static AffineArg s1(const Rational& c = Rational(0)) { return {c, Rational(1), Rational(0)}; }
  static AffineArg s2(const Rational& c = Rational(0)) { return {c, Rational(0), Rational(1)}; }

  ExactComplex at(const ExactComplex& s1, const ExactComplex& s2) const;
  std::string to_string() const;

  friend AffineArg operator+(const AffineArg& a, const AffineArg& b) {
    return {a.constant + b.constant, a.coef_s1 + b.coef_s1, a.coef_s2 + b.coef_s2};
  }
  friend AffineArg operator-(const AffineArg& a, const AffineArg& b) {
    return {a.constant - b.constant, a.coef_s1 - b.coef_s1, a.coef_s2 - b.coef_s2};
  }
  friend AffineArg operator+(const AffineArg& a, const Rational& c) { return {a.constant + c, a.coef_s1, a.coef_s2}; }
  AffineArg operator-() const { return {-constant, -coef_s1, -coef_s2}; }
  friend bool operator==(const AffineArg&, const AffineArg&) = default;
  friend auto operator<=>(const AffineArg& a, const AffineArg& b) {
    if (auto c = a.coef_s1 <=> b.coef_s1; c != 0) return c;
    if (auto c = a.coef_s2 <=> b.coef_s2; c != 0) return c;
    return a.constant <=> b.constant;
  }
};

/**
 * coefficient · i^{i_power} · (−1)^{sign_power} · π^{pi_exponent} · (2π)^{two_pi_pow}
 *   · ∏ Γ(numerator_args) / ∏ Γ(denominator_args) · ∏ symbol^{exponent}
 *
 * Kept canonical: i² is folded into the sign so i_power ∈ {0, 1}, identical
 * Γ arguments cancel between numerator and denominator, argument lists are
 * sorted, and symbols with exponent 0 are dropped. Equality of canonical forms
 * is therefore a sound (but not complete) test of equality as functions.
 */
class GammaProduct {
 public:
  GammaProduct() = default;
  explicit GammaProduct(const Rational& coefficient) : coefficient_(coefficient) { canonicalize(); }

  static GammaProduct gamma(const AffineArg& arg);
  /// Γ_C(arg) = 2 (2π)^{−arg} Γ(arg).
  static GammaProduct gamma_c(const AffineArg& arg);
  static GammaProduct symbol(const std::string& name, long exponent = 1);
  static GammaProduct i_unit() { GammaProduct g; g.i_power_ = 1; return g; }
  static GammaProduct minus_one_pow(long k);
  static GammaProduct pi_pow(const AffineArg& e);
  static GammaProduct two_pi_pow(const AffineArg& e);

  const Rational& coefficient() const { return coefficient_; }
  int i_power() const { return i_power_; }
  int sign_power() const { return sign_power_; }
  const AffineArg& pi_exponent() const { return pi_exponent_; }
  const AffineArg& two_pi_exponent() const { return two_pi_pow_; }
  const std::vector<AffineArg>& numerator_args() const { return num_; }
  const std::vector<AffineArg>& denominator_args() const { return den_; }
  const std::map<std::string, long>& symbols() const { return symbols_; }

  /// Γ argument (numerator or denominator) that sits on a pole at (s₁, s₂).
  std::optional<AffineArg> pole_at(const ExactComplex& s1, const ExactComplex& s2) const;

  /// Numeric value with every symbolic constant set to 1.
  /// Throws DomainError(PoleAt) when any Γ argument is a non-positive integer.
  Complex evaluate(const ExactComplex& s1, const ExactComplex& s2, int digits) const;

  GammaProduct inverse() const;
  friend GammaProduct operator*(const GammaProduct& a, const GammaProduct& b);
  friend GammaProduct operator/(const GammaProduct& a, const GammaProduct& b) { return a * b.inverse(); }
  friend bool operator==(const GammaProduct&, const GammaProduct&) = default;

  std::string to_string() const;

 private:
  void canonicalize();

  Rational coefficient_{1};
  int i_power_ = 0;
  int sign_power_ = 0;
  AffineArg pi_exponent_{};
  AffineArg two_pi_pow_{};
  std::vector<AffineArg> num_;
  std::vector<AffineArg> den_;
  std::map<std::string, long> symbols_;
};

}  // namespace gsp4::arch
