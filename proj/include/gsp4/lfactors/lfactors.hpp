#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsp4/exact/rational_fn.hpp"

namespace gsp4::lfactors {

using exact::Bindings;
using exact::Rational;
using exact::RationalFn;

/// Generator names. p = q^2 throughout.
namespace sym {
inline constexpr const char* kQ = "q";
inline constexpr const char* kA1 = "a1";
inline constexpr const char* kB1 = "b1";
inline constexpr const char* kA2 = "a2";
inline constexpr const char* kB2 = "b2";
inline constexpr const char* kLambda = "lambda";
inline constexpr const char* kBeta = "beta";
inline constexpr const char* kGamma = "gamma";
/// beta, gamma of the second Jacquet-module reduction; independent of the
/// Siegel-induction data until bound.
inline constexpr const char* kBeta0 = "beta0";
inline constexpr const char* kGamma0 = "gamma0";
/// Eigenvalue parameter of the Iwahori-level vector.
inline constexpr const char* kBetaIw = "beta_iw";
/// Stands for p^{-shift} in the degree 16 factor.
inline constexpr const char* kShift = "pshift";
/// Stands for p^{-s} in unevaluated factors.
inline constexpr const char* kS = "S";
}  // namespace sym

inline RationalFn gen(const char* name) { return RationalFn::variable(name); }

/**
 * Hecke parameters: every symbol is a free generator unless bound. Binding
 * "p" is allowed and is applied as q^2 -> p, which requires even powers of q.
 */
struct HeckeParams {
  Bindings bindings;
  std::optional<RationalFn> p;

  RationalFn apply(const RationalFn& f) const;
  /// alpha = q^3 lambda, kept as an abbreviation.
  static RationalFn alpha() { return RationalFn::variable(sym::kQ, 3) * gen(sym::kLambda); }
};

/**
 * Formal product prefactor * prod (1 - mu_i S) over a multiset of roots.
 * Factors returned already evaluated at a point carry S = 1, i.e. their roots
 * include the power of p^{-s}.
 */
struct EulerFactor {
  std::vector<RationalFn> roots;
  RationalFn prefactor{1};

  std::size_t degree() const { return roots.size(); }
  /// prefactor * prod (1 - mu_i S) with S a free generator.
  RationalFn expand(const char* s_symbol = sym::kS) const;
  /// prefactor * prod (1 - mu_i * s_value).
  RationalFn value_at(const RationalFn& s_value) const;
  RationalFn value() const { return value_at(RationalFn(1)); }
  EulerFactor substituted(const HeckeParams& h) const;
  /// "(1 - mu_1)*(1 - mu_2)..." with the prefactor in front when it is not 1.
  std::string factored_string() const;
};

bool multiset_equal(const std::vector<RationalFn>& a, const std::vector<RationalFn>& b);
/// Whether `small` is a sub-multiset of `big`.
bool multiset_includes(const std::vector<RationalFn>& big, const std::vector<RationalFn>& small);

EulerFactor gl2_factor(const RationalFn& a, const RationalFn& b);

/// {lambda, lambda beta, lambda gamma, lambda beta gamma}.
std::vector<RationalFn> spin_from_siegel_induction(const RationalFn& beta, const RationalFn& gamma,
                                                   const RationalFn& lambda);

/// All pairwise products, |x| * |y| entries.
std::vector<RationalFn> tensor_params(const std::vector<RationalFn>& x, const std::vector<RationalFn>& y);

/// p^2/(p^2-1) * prod over (u, v) in {a1, b1} x {a2, b2} of (1 - p^2/(alpha u v)).
EulerFactor delta_factor(const HeckeParams& h = {});

/// Unevaluated p/(p+1) * prod (1 - p^2 mu S) with mu in
/// {1/(beta0 a1 a2), 1/(beta0 b1 a2), 1/(gamma0 a1 a2), 1/(gamma0 b1 a2)}.
EulerFactor delta_prime_factor(const HeckeParams& h = {});

/// delta_prime_factor at S = p^{-s}; needs 2s integral (NonHalfIntegerS).
EulerFactor delta_prime(const HeckeParams& h, const Rational& s);

/// p^3/((p+1)^2 (p-1)) = p^2/(p^2-1) * p/(p+1).
RationalFn depleted_prefactor();

/// The eight factors of delta_factor and delta_prime at s = 1/2, prefactor 1.
EulerFactor euler_D(const HeckeParams& h = {});

/// Root of the factor removed by the improved variant: p^{3/2}/(gamma0 b1 a2).
RationalFn improved_deleted_root(const HeckeParams& h = {});

/// euler_D without the gamma0 b1 a2 factor; FactorAbsent if it is missing.
EulerFactor euler_D_improved(const HeckeParams& h = {});
EulerFactor remove_root(const EulerFactor& f, const RationalFn& root);

/// depleted_prefactor() * value of euler_D.
RationalFn depleted_value(const HeckeParams& h = {});

/// (p^2/(beta_iw b2))^ell * depleted_value; LevelTooSmall for ell < 2.
RationalFn iwahori_value(const HeckeParams& h, long ell);

/// prod (1 - x u v p^{-s} pshift) over spin x {a1, b1} x {a2, b2}, evaluated
/// at s; pshift stays a free symbol unless bound.
EulerFactor sixteen_factor(const HeckeParams& h, const Rational& s);

/// Central-character model used by the normalization audit:
/// b1 = p omega1 / a1, b2 = p omega2 / a2, omega2 = 1/(lambda^2 beta gamma omega1).
Bindings central_character_model();

struct AuditSolution {
  Rational shift;             ///< p^{-s-shift} normalization
  std::string beta0_binding;  ///< canonical text of the bound value
  std::string gamma0_binding;
  std::vector<std::string> matched_roots;
};

struct AuditReport {
  std::vector<Rational> shifts_tried;
  std::size_t candidates_tried = 0;
  std::vector<AuditSolution> solutions;
  std::string model;
};

/**
 * Searches half-integer shifts in [-3, 3] and bindings beta0, gamma0 in
 * q^j * {lambda, lambda beta, lambda gamma, lambda beta gamma}, |j| <= 4,
 * for which the eight euler_D roots form a sub-multiset of the sixteen
 * tensor roots at s = 1/2 under the central-character model.
 */
AuditReport normalization_audit();

}  // namespace gsp4::lfactors
