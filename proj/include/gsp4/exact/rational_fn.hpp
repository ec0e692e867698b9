#pragma once

#include <map>
#include <string>
#include <string_view>

#include "gsp4/exact/laurent.hpp"

namespace gsp4::exact {

/**
 * Quotient of two Laurent polynomials.
 *
 * Reduction is limited to monomial content, scalar content and exact
 * division of the numerator by the denominator; no multivariate gcd is taken.
 * Equality is therefore decided by cross-multiplication.
 */
class RationalFn {
 public:
  RationalFn() = default;
  RationalFn(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFn(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFn(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFn(LaurentPoly num, LaurentPoly den);

  static RationalFn variable(std::string name, std::int64_t exponent = 1) {
    return RationalFn(LaurentPoly::variable(std::move(name), exponent));
  }
  /// Parses "N" or "(N)/(D)" as produced by to_string().
  static RationalFn parse(std::string_view text);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == LaurentPoly(1); }
  std::optional<Rational> as_constant() const;
  std::vector<std::string> generators() const;

  RationalFn inverse() const;
  RationalFn pow(std::int64_t n) const;
  RationalFn operator-() const { return RationalFn(-num_, den_); }

  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }
  friend bool operator==(const RationalFn& a, const RationalFn& b);

  std::string to_string() const;

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_{1};
};

/// Symbol bindings for substitution. Values may be scalars, Laurent
/// polynomials or rational functions.
using Bindings = std::map<std::string, RationalFn, std::less<>>;

/// Evaluation homomorphism. Unbound symbols are left in place.
/// Throws DomainError(DenominatorVanishes) when the bound denominator is zero.
RationalFn substitute(const RationalFn& f, const Bindings& bindings);
RationalFn substitute(const LaurentPoly& f, const Bindings& bindings);

/// Replaces root^2 by `square` when root appears only to even powers, e.g.
/// binding p = 5 in an expression written in q with p = q^2.
/// Throws DomainError(OddPowerOfRoot) otherwise.
RationalFn substitute_square(const RationalFn& f, std::string_view root, const RationalFn& square);

}  // namespace gsp4::exact
