#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace gsp4::weyl {

/// Character (r1, r2; c) of the diagonal torus diag(t1, t2, v/t2, v/t1).
struct Weight {
  long r1 = 0;
  long r2 = 0;
  long c = 0;
  friend bool operator==(const Weight&, const Weight&) = default;
};

/// Throws DomainError(ParityViolated) unless r1 + r2 = c mod 2.
void validate_parity(const Weight& w);

enum class Group { G, H };

/**
 * Signed permutation of (r1, r2), stored as a 2x2 matrix with one nonzero
 * entry (+1 or -1) per row and column. The central character c is fixed.
 */
class WeylElement {
 public:
  WeylElement() : m_{{{1, 0}, {0, 1}}} {}
  WeylElement(int a, int b, int c, int d) : m_{{{a, b}, {c, d}}} {}

  static WeylElement identity() { return {}; }
  /// r1 <-> r2; the long element of the Siegel Levi.
  static WeylElement swap() { return {0, 1, 1, 0}; }
  static WeylElement flip_first() { return {-1, 0, 0, 1}; }
  static WeylElement flip_second() { return {1, 0, 0, -1}; }

  std::pair<long, long> apply(long r1, long r2) const {
    return {m_[0][0] * r1 + m_[0][1] * r2, m_[1][0] * r1 + m_[1][1] * r2};
  }
  Weight apply(const Weight& w) const {
    auto [a, b] = apply(w.r1, w.r2);
    return {a, b, w.c};
  }
  int entry(int i, int j) const { return m_[i][j]; }

  WeylElement inverse() const { return {m_[0][0], m_[1][0], m_[0][1], m_[1][1]}; }
  /// Number of positive roots of the given group made negative.
  int length(Group g = Group::G) const;

  /// Short description of the action, e.g. "(x,y)->(y,-x)".
  std::string to_string() const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::array<std::array<int, 2>, 2> m_;
};

/// Positive roots in (r1, r2) coordinates.
const std::vector<std::pair<long, long>>& positive_roots(Group g);

/// rho = (2, 1; 0).
inline constexpr Weight kRho{2, 1, 0};

/// All elements, closed under composition: 8 for G, 4 for H.
std::vector<WeylElement> weyl_group(Group g);

struct KostantRep {
  std::string name;
  WeylElement element;
  int length;
};

/// Minimal-length representatives of W_M\W_G (names w0..w3) or all of W_H
/// (names w00, w10, w01, w11), in order of length.
std::vector<KostantRep> kostant_reps(Group g);

bool is_g_dominant(const Weight& w);
bool is_h_dominant(const Weight& w);
bool is_m_dominant(const Weight& w);

/// kappa_i(nu) = w_i(nu + rho) - rho. Requires nu + rho dominant for G with
/// non-strict inequalities; throws DomainError(NotDominant) otherwise.
Weight kappa(int i, const Weight& nu);

struct KTypeParams {
  long lambda1;
  long lambda2;
  long d;
  std::pair<long, long> tau1;
  std::pair<long, long> tau2;
};

/// Requires r1 >= r2 >= -1 (WeightOutOfRange).
KTypeParams ktype_params(long r1, long r2);

/// Weights (k2-4-j, j-k1), j = 0..k1+k2-4, of the restriction to H.
/// Requires k1 >= k2 >= 2 (WeightOutOfRange).
std::vector<std::pair<long, long>> branch_restriction(long k1, long k2);

/// Whether (c1-2, -c2) occurs in branch_restriction(k1, k2).
bool branch_contains(long k1, long k2, long c1, long c2);

enum class MoriyamaRegion { F, D };

/**
 * Index k of the Moriyama basis vector used for the pairing.
 *
 * Region F: c1 + c2 = r1 - r2 + 2 and k = r1 + 3 - c1 = r2 + 1 + c2.
 * Region D: c2 - c1 = r1 - r2 + 2, c2 <= r1 + 3 and k = r1 + 3 + c1 = r2 + 1 + c2.
 * Throws DomainError(InconsistentWeights) when the constraints fail or k is
 * outside [0, r1 + r2 + 4].
 */
long moriyama_index(MoriyamaRegion region, long r1, long r2, long c1, long c2);

}  // namespace gsp4::weyl
