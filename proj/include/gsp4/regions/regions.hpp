#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsp4/exact/rational.hpp"

namespace gsp4::regions {

using exact::Rational;

enum class Region { A, D, F, None };

std::string to_string(Region r);

/// Weights (k1, k2) of the Siegel form, weight ell of the elliptic form, and
/// a half-integral s.
struct WeightTuple {
  long k1;
  long k2;
  long ell;
  Rational s;
};

/// Throws DomainError(WeightOutOfRange) unless k1 >= k2 >= 2 and ell >= 1,
/// and DomainError(NonHalfIntegerS) unless 2s is an integer.
void validate(const WeightTuple& w);

struct RegionResult {
  Region region = Region::None;
  bool d_minus = false;
  std::optional<long> m;
  long w = 0;
};

/// Motivic weight k1 + k2 + ell - 4.
inline long motivic_weight(long k1, long k2, long ell) { return k1 + k2 + ell - 4; }

/// Region containing ell, ignoring s. The two gaps ell = k1 +- (k2 - 2)
/// give None.
Region region_of_ell(long k1, long k2, long ell);

/// Upper bound on |2s - 1| inside the region of ell; absent for None.
std::optional<long> s_bound(long k1, long k2, long ell);

/// Hodge number m for a region, absent for None.
std::optional<long> hodge_m(Region r, long k1, long k2, long ell);

/// Classification with critical parity (2s + w even) and inclusive bounds.
RegionResult classify(const WeightTuple& w);

/// All critical s, ascending. Symmetric under s <-> 1 - s.
std::vector<Rational> critical_s_set(long k1, long k2, long ell);

struct EisensteinParams {
  long c1;
  long c1prime;
  long t;
};

/// Requires ell in region D with ell <= k1 (NotInDMinus) and s critical for
/// the Eisenstein weight c1' (CriticalityViolated).
EisensteinParams eisenstein_params(const WeightTuple& w);

struct ScanRow {
  long ell;
  Region region;
  bool d_minus;
  std::optional<long> m;
  long w;
  std::vector<Rational> critical;
};

/// One row per ell in [ell_min, ell_max].
std::vector<ScanRow> scan(long k1, long k2, long ell_min, long ell_max);

}  // namespace gsp4::regions
