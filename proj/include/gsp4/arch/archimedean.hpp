#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gsp4/arch/gamma_product.hpp"
#include "gsp4/arch/numeric.hpp"

namespace gsp4::arch {

/// Shift recipes and quadrature budgets. Every field has a default; the CLI
/// fills this from a configuration file and then from flags.
struct ArchConfig {
  /// Verbatim replacements for the default shift recipes.
  std::optional<std::vector<Rational>> spin_shifts;
  std::optional<std::vector<Rational>> gl2_shifts;
  std::optional<std::vector<Rational>> tensor_shifts;

  double smooth_tol = 1e-10;
  double oscillatory_tol = 1e-4;
  /// Gauss-Legendre nodes per unit period (one of 10, 15, 20, 30) and the
  /// range of truncation half-widths tried by the Whittaker transform.
  int oscillatory_nodes = 20;
  int oscillatory_max_periods = 2048;
  int oscillatory_min_periods = 32;
};

/// L(s) = ∏ Γ_C(s + μᵢ), shifts sorted descending.
struct ArchLParams {
  std::vector<Rational> shifts;

  /// Symbolic product ∏ Γ_C(arg + μᵢ).
  GammaProduct at(const AffineArg& arg) const;
};

/// Spin factor of the discrete series of weight (k1, k2):
/// {(k1+k2−3)/2, (k1−k2+1)/2} unless overridden.
ArchLParams arch_spin_shifts(long k1, long k2, const ArchConfig& cfg = {});
/// Weight-ell holomorphic GL₂ factor: {(ell−1)/2} unless overridden.
ArchLParams arch_gl2_shifts(long ell, const ArchConfig& cfg = {});
/// Degree-8 tensor factor: {μ + ν, |μ − ν|} over spin shifts μ and GL₂
/// shifts ν, unless overridden.
ArchLParams arch_tensor_shifts(long k1, long k2, long ell, const ArchConfig& cfg = {});

/**
 * C·(−1)^k·L(Π∞, s₁−s₂+½)·L(Π∞, s₁+s₂−½) / (π^{s₁+s₂−½}·Γ(s₁+(r₁+3−k)/2)·Γ(s₂+(−1−r₂+k)/2))
 * with C left as the symbol `constant`. The spin shifts are those of weight
 * (r1+3, r2+3).
 *
 * Throws DomainError(WeightOutOfRange) unless r1 >= r2 >= -1 and
 * DomainError(IndexOutOfRange) unless 0 <= k <= r1 + r2 + 4.
 */
GammaProduct moriyama_formula(long r1, long r2, long k, const std::string& constant = "C",
                              const ArchConfig& cfg = {});

/// f^{Φ(c)}(1, s) = 2^{1−c} i^c π^{−(s+c/2)} Γ(s + c/2) as a product in s = s₁.
GammaProduct siegel_section_product(long c);

/// Numeric closed form. Throws DomainError(PoleAt) when s + c/2 is a
/// non-positive integer and DomainError(WeightOutOfRange) for c < 1.
Complex siegel_section_value(long c, const ExactComplex& s, int digits);

struct WhittakerResult {
  long c = 0;
  double t = 1;
  /// Raw Jacquet integral ∫ f(w n(x) diag(t,1)) e^{−2πix} dx.
  std::complex<double> raw;
  /// raw / 2, the value under the normalized measure on ℝ×.
  std::complex<double> normalized;
  /// t^{c/2} e^{−2πt}.
  double reference = 0;
  double rel_err = 0;
  int periods = 0;
};

/**
 * Whittaker transform of f^{Φ(c)}(·; sgn^c, c/2) at diag(t, 1).
 *
 * The section is computed from its defining Mellin integral over ℝ× by
 * doubly-exponential quadrature. The x-integral is summed over unit periods
 * with Gauss-Legendre nodes, truncated at ±N for N = min_periods, 2·min_periods,
 * ... and Richardson-extrapolated in 1/N.
 *
 * Throws NumericFailure(QuadratureNotConverged) when successive extrapolants
 * disagree by more than cfg.oscillatory_tol at the largest N.
 */
WhittakerResult whittaker_normalization_check(long c, double t = 1.0, const ArchConfig& cfg = {});

struct SampleEval {
  ExactComplex s;
  Complex lhs;
  Complex rhs;
  double rel_err = 0;
};

struct IdentityReport {
  GammaProduct lhs;
  GammaProduct rhs;
  /// Canonical forms coincide.
  bool symbolic_equal = false;
  double max_rel_err = 0;
  std::vector<SampleEval> samples;
  std::vector<ExactComplex> poles_skipped;

  bool holds(double tol) const { return max_rel_err <= tol; }
};

/// L(Π∞, s − c₂/2 + ½)·L(Π∞, s + c₂/2 − ½) against L(Π∞×Σ∞, s) with ell = c₂.
/// Throws DomainError(WeightOutOfRange) for cᵢ < 1, DomainError(InconsistentWeights)
/// unless c₁ + c₂ = k₁ − k₂ + 2, and DomainError(AllSamplesAtPoles).
IdentityReport verify_regionF_identity(long k1, long k2, long c1, long c2, const std::vector<ExactComplex>& samples,
                                       int digits, const ArchConfig& cfg = {});

/// L(Π∞, s + c₂/2 − ½)·L(Π∞, s − c₂/2 + ½) against
/// L(Π∞×Σ∞, s)·(2π)^{c₁}·Γ(s − c₁/2)/Γ(s + c₁/2) with ell = c₂.
/// Throws DomainError(WeightOutOfRange) for c₁ < 1, DomainError(InconsistentWeights)
/// unless c₂ − c₁ = k₁ − k₂ + 2, DomainError(NotInDMinus) for c₂ > k₁, and
/// DomainError(AllSamplesAtPoles).
IdentityReport verify_regionD_identity(long k1, long k2, long c1, long c2, const std::vector<ExactComplex>& samples,
                                       int digits, const ArchConfig& cfg = {});

enum class ZetaRegion { F, D };

struct ZetaValue {
  GammaProduct symbolic;
  Complex value;
};

/// Region F: C·(−1)^{c₂}·L(Π∞×Σ∞, s), the constant C kept symbolic.
/// Region D: (−2π)^{c₂}·L(Π∞×Σ∞, s), the constant normalized to 1.
/// Throws DomainError(RegionMismatch) when the c-relation of the region
/// fails, ell = c₂ lies outside the region, or 2s + w is odd.
ZetaValue zeta_value(ZetaRegion region, long k1, long k2, long c1, long c2, const Rational& s, int digits,
                     const ArchConfig& cfg = {});

}  // namespace gsp4::arch
