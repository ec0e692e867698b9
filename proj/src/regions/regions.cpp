#include "gsp4/regions/regions.hpp"

#include <algorithm>

#include "gsp4/errors.hpp"

namespace gsp4::regions {

std::string to_string(Region r) {
  switch (r) {
    case Region::A: return "A";
    case Region::D: return "D";
    case Region::F: return "F";
    case Region::None: return "None";
  }
  return "None";
}

void validate(const WeightTuple& w) {
  if (!(w.k1 >= w.k2 && w.k2 >= 2))
    throw DomainError(Errc::WeightOutOfRange, "need k1 >= k2 >= 2, got (" + std::to_string(w.k1) + ", " +
                                                  std::to_string(w.k2) + ")");
  if (w.ell < 1) throw DomainError(Errc::WeightOutOfRange, "need ell >= 1, got " + std::to_string(w.ell));
  if (!(w.s * Rational(2)).is_integer())
    throw DomainError(Errc::NonHalfIntegerS, "s = " + w.s.to_string() + " is not a half-integer");
}

Region region_of_ell(long k1, long k2, long ell) {
  if (ell == k1 + (k2 - 2) || ell == k1 - (k2 - 2)) return Region::None;
  if (ell >= k1 + k2 - 1) return Region::A;
  if (k1 - k2 + 3 <= ell && ell <= k1 + k2 - 3) return Region::D;
  if (1 <= ell && ell <= k1 - k2 + 1) return Region::F;
  return Region::None;
}

std::optional<long> s_bound(long k1, long k2, long ell) {
  switch (region_of_ell(k1, k2, ell)) {
    case Region::A: return ell - (k1 + k2 - 1);
    case Region::D: return std::min(k1 + k2 - 3 - ell, ell - (k1 - k2 + 3));
    case Region::F: return k1 - k2 + 1 - ell;
    case Region::None: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<long> hodge_m(Region r, long k1, long k2, long ell) {
  switch (r) {
    case Region::A: return 2 * k1 + 2 * k2 - 6;
    case Region::D: return k1 + k2 + ell - 4;
    case Region::F: return 2 * k2 + 2 * ell - 6;
    case Region::None: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

// |2s - 1| as an integer; s is half-integral.
long abs_2s_minus_1(const Rational& s) { return (s * Rational(2) - Rational(1)).abs().to_int64(); }

bool parity_ok(const Rational& s, long w) { return ((s * Rational(2)).to_int64() + w) % 2 == 0; }

}  // namespace

RegionResult classify(const WeightTuple& t) {
  validate(t);
  RegionResult r;
  r.w = motivic_weight(t.k1, t.k2, t.ell);
  Region region = region_of_ell(t.k1, t.k2, t.ell);
  if (region == Region::None || !parity_ok(t.s, r.w)) return r;
  if (abs_2s_minus_1(t.s) > *s_bound(t.k1, t.k2, t.ell)) return r;
  r.region = region;
  r.d_minus = region == Region::D && t.ell <= t.k1;
  r.m = hodge_m(region, t.k1, t.k2, t.ell);
  return r;
}

std::vector<Rational> critical_s_set(long k1, long k2, long ell) {
  validate({k1, k2, ell, Rational(0)});
  std::vector<Rational> out;
  auto bound = s_bound(k1, k2, ell);
  if (!bound || *bound < 0) return out;
  const long w = motivic_weight(k1, k2, ell);
  // 2s ranges over integers n with |n - 1| <= bound and n + w even.
  for (long n = 1 - *bound; n <= 1 + *bound; ++n)
    if (((n + w) % 2 + 2) % 2 == 0) out.emplace_back(n, 2);
  return out;
}

EisensteinParams eisenstein_params(const WeightTuple& t) {
  validate(t);
  if (region_of_ell(t.k1, t.k2, t.ell) != Region::D || t.ell > t.k1)
    throw DomainError(Errc::NotInDMinus, "(k1, k2, ell) = (" + std::to_string(t.k1) + ", " + std::to_string(t.k2) +
                                             ", " + std::to_string(t.ell) + ") is not in region D-");
  EisensteinParams p;
  const long a = abs_2s_minus_1(t.s);
  p.c1 = 1 + a;
  p.c1prime = t.ell - (t.k1 - t.k2 + 2);
  const long two_s = (t.s * Rational(2)).to_int64();
  if (((two_s - p.c1prime) % 2 + 2) % 2 != 0 || a > p.c1prime - 1)
    throw DomainError(Errc::CriticalityViolated, "s = " + t.s.to_string() + " is not critical for c1' = " +
                                                     std::to_string(p.c1prime));
  p.t = (p.c1prime - p.c1) / 2;
  return p;
}

std::vector<ScanRow> scan(long k1, long k2, long ell_min, long ell_max) {
  std::vector<ScanRow> rows;
  for (long ell = std::max(1L, ell_min); ell <= ell_max; ++ell) {
    validate({k1, k2, ell, Rational(0)});
    ScanRow row;
    row.ell = ell;
    row.region = region_of_ell(k1, k2, ell);
    row.d_minus = row.region == Region::D && ell <= k1;
    row.m = hodge_m(row.region, k1, k2, ell);
    row.w = motivic_weight(k1, k2, ell);
    row.critical = critical_s_set(k1, k2, ell);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gsp4::regions
