#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gsp4/exact/matrix.hpp"
#include "gsp4/weyl/weyl.hpp"

namespace gsp4::group {

using exact::ExactMatrix;
using exact::RationalFn;

/// The form J with rows (0 0 0 1), (0 0 1 0), (0 -1 0 0), (-1 0 0 0).
const ExactMatrix& symplectic_form();

/// nu with g^T J g = nu J; throws DomainError(NotSymplectic) otherwise.
RationalFn similitude(const ExactMatrix& g);

/// 4x4 symplectic similitude with its multiplier cached.
class GroupElement {
 public:
  /// Validates the similitude condition.
  explicit GroupElement(ExactMatrix m);

  static GroupElement identity();

  const ExactMatrix& matrix() const { return m_; }
  const RationalFn& nu() const { return nu_; }
  GroupElement inverse() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.m_ == b.m_; }

 private:
  GroupElement(ExactMatrix m, RationalFn nu) : m_(std::move(m)), nu_(std::move(nu)) {}
  ExactMatrix m_;
  RationalFn nu_;
};

/// Pair of 2x2 matrices with equal nonzero determinants.
class HElement {
 public:
  /// Throws NotInFiberProduct (unequal determinants) or SingularInput.
  HElement(ExactMatrix first, ExactMatrix second);

  const ExactMatrix& first() const { return first_; }
  const ExactMatrix& second() const { return second_; }
  RationalFn det() const { return first_.determinant(); }

  friend HElement operator*(const HElement& a, const HElement& b) {
    return HElement(a.first_ * b.first_, a.second_ * b.second_);
  }

 private:
  ExactMatrix first_;
  ExactMatrix second_;
};

/// The first factor acts on coordinates 1 and 4, the second on 2 and 3.
GroupElement iota(const HElement& h);

/// diag(A, u * w A^{-T} w) with w = antidiag(1, 1); similitude u.
GroupElement levi_embed(const ExactMatrix& a, const RationalFn& u);

enum class Parabolic { BorelG, Siegel, Klingen, BorelH };

std::string to_string(Parabolic tag);
Parabolic parse_parabolic(const std::string& text);

/// Whether every entry outside the star pattern of the tag is exactly zero.
bool membership(const ExactMatrix& g, Parabolic tag);
inline bool membership(const GroupElement& g, Parabolic tag) { return membership(g.matrix(), tag); }

/// Signed permutation matrix realizing a Weyl element on the torus
/// diag(t1, t2, v/t2, v/t1).
GroupElement weyl_matrix(const weyl::WeylElement& w);

/// Conversion to the model with the last two rows and columns exchanged.
ExactMatrix to_swapped_model(const ExactMatrix& g);

namespace names {
inline constexpr const char* kTau = "tau";
inline constexpr const char* kTauHat = "tau_hat";
inline constexpr const char* kW1 = "w1";
inline constexpr const char* kW2 = "w2";
inline constexpr const char* kWSi = "w_Si";
}  // namespace names

/// tau, tau_hat = tau w1, w1, w2 = w1 w_Si and the Siegel long element w_Si.
std::map<std::string, GroupElement> special_elements();

/// diag(1, 1, p^k, p^k) with p = q^2.
GroupElement s_k(std::int64_t k);

struct OrbitSample {
  std::int64_t a, b, c, d;
  bool matches_printed;
  bool in_siegel;
  bool pass() const { return matches_printed && in_siegel; }
};

struct OrbitReport {
  std::vector<OrbitSample> samples;
  std::size_t passed() const;
};

/**
 * For h = ((a b; c d), (a -b; -c d)) checks that tau_hat^{-1} iota(h) tau_hat
 * equals the matrix (a b 0 b; c d c 0; 0 0 a -b; 0 0 -c d) and lies in the
 * Siegel parabolic. Samples are seeded integer matrices with nonzero
 * determinant; explicit matrices can be supplied instead.
 */
OrbitReport verify_open_orbit_lemma(std::size_t samples, std::uint64_t seed);
OrbitSample check_open_orbit(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

struct DecompositionReport {
  bool identity_holds = false;
  bool congruence_holds = false;
  /// Canonical strings of both sides, row-major.
  std::vector<std::vector<std::string>> lhs;
  std::vector<std::vector<std::string>> rhs;
  /// Numeric spot checks at (0,0,0) and (1,2,3).
  bool origin_is_tau_hat = false;
  bool sample_123_holds = false;
};

/// Matrices of the identity h(x,y,z) tau_hat nbar(x,y,z) = tau_hat p(x,y,z).
HElement decomposition_h();
ExactMatrix decomposition_nbar();
ExactMatrix decomposition_p();

/// Verifies the identity over generators x, y, z and the congruence claim
/// after the substitution (x, y, z) -> pk * (x, y, z). Throws
/// DomainError(IdentityFailed) naming the first mismatching entry.
DecompositionReport verify_decomposition_identity();

}  // namespace gsp4::group
