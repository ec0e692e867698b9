#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsp4/exact/rational.hpp"

namespace gsp4::exact {

/// Product of named generators raised to (possibly negative) integer powers.
/// Factors are kept sorted by name with no zero exponents.
class Monomial {
 public:
  using Factor = std::pair<std::string, std::int64_t>;

  Monomial() = default;
  static Monomial variable(std::string name, std::int64_t exponent = 1);
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::int64_t exponent(std::string_view name) const;
  /// Sum of all exponents; exponents are int64 and overflow throws.
  std::int64_t degree() const;

  Monomial inverse() const;
  Monomial pow(std::int64_t n) const;
  /// True when every exponent of *this is <= the matching exponent of other.
  bool divides(const Monomial& other) const;

  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Component-wise minimum of exponents (the monomial gcd for Laurent terms).
Monomial monomial_min(const Monomial& a, const Monomial& b);

/**
 * Sparse multivariate Laurent polynomial with exact rational coefficients.
 *
 * The generator universe is implicit: any two polynomials can be combined and
 * their generator sets merge. Zero coefficients are never stored.
 */
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Monomial& m, const Rational& c = Rational(1));

  static LaurentPoly variable(std::string name, std::int64_t exponent = 1);
  /// Parses the canonical text form, e.g. "q^6*λ^2 - 1" or "3/2*x^-1 + y".
  static LaurentPoly parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term coefficient (zero when absent).
  Rational constant_term() const;
  std::optional<Rational> as_constant() const;

  /// Sorted list of generator names with a nonzero exponent somewhere.
  std::vector<std::string> generators() const;
  std::int64_t max_exponent(std::string_view name) const;
  std::int64_t min_exponent(std::string_view name) const;

  /// Monomial gcd of all terms (component-wise minimum exponent).
  Monomial monomial_content() const;
  /// Leading term in graded-lexicographic order over generators().
  std::pair<Monomial, Rational> leading_term() const;

  LaurentPoly pow(std::int64_t n) const;
  LaurentPoly operator-() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly scaled(const Rational& c, const Monomial& m = Monomial()) const;

  /// Canonical serialization: graded-lex order, coefficients as "num/den".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

/// Graded-lexicographic comparison over an explicit generator order.
/// Returns true when a precedes b in printing order (higher degree first).
bool graded_lex_before(const Monomial& a, const Monomial& b, const std::vector<std::string>& gens);

/// Exact quotient a / b in the Laurent ring when it exists.
std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace gsp4::exact
