#include <doctest.h>

#include <cstdlib>

#include "gsp4/errors.hpp"
#include "gsp4/regions/regions.hpp"

using namespace gsp4;
using namespace gsp4::regions;

namespace {

// Literal reading of the three inequality systems, without the gap rule.
struct Literal {
  bool a, d, f;
};
Literal literal(long k1, long k2, long ell, long abs2s1) {
  Literal r{};
  r.a = ell >= k1 + k2 - 1 && abs2s1 <= ell - (k1 + k2 - 1);
  r.d = k1 - k2 + 3 <= ell && ell <= k1 + k2 - 3 && abs2s1 <= std::min(k1 + k2 - 3 - ell, ell - (k1 - k2 + 3));
  r.f = 1 <= ell && ell <= k1 - k2 + 1 && abs2s1 <= k1 - k2 + 1 - ell;
  return r;
}

}  // namespace

TEST_CASE("classify examples") {
  auto a = classify({3, 3, 7, Rational(1, 2)});
  CHECK(a.region == Region::A);
  CHECK(a.m == 6);
  CHECK(a.w == 9);
  auto d = classify({4, 4, 4, Rational(1)});
  CHECK(d.region == Region::D);
  CHECK(d.d_minus);
  CHECK(d.m == 8);
  auto f = classify({5, 3, 1, Rational(1, 2)});
  CHECK(f.region == Region::F);
  CHECK(f.m == 2);
  for (long n = -6; n <= 8; ++n) CHECK(classify({4, 4, 6, Rational(n, 2)}).region == Region::None);
  // Wrong parity.
  CHECK(classify({4, 4, 4, Rational(1, 2)}).region == Region::None);
  CHECK_THROWS_AS(classify({4, 4, 4, Rational(1, 3)}), DomainError);
  CHECK_THROWS_AS(classify({3, 4, 4, Rational(1)}), DomainError);
}

TEST_CASE("critical sets") {
  CHECK(critical_s_set(4, 4, 4) == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(critical_s_set(7, 5, 7) == std::vector<Rational>{Rational(-1, 2), Rational(1, 2), Rational(3, 2)});
  CHECK(critical_s_set(4, 4, 6).empty());
  for (long k1 = 2; k1 <= 8; ++k1)
    for (long k2 = 2; k2 <= k1; ++k2)
      for (long ell = 1; ell <= 16; ++ell) {
        auto set = critical_s_set(k1, k2, ell);
        for (const auto& s : set) {
          CHECK(std::find(set.begin(), set.end(), Rational(1) - s) != set.end());
          CHECK(classify({k1, k2, ell, s}).region != Region::None);
        }
      }
}

TEST_CASE("exclusivity, symmetry and m against the literal table") {
  for (long k1 = 2; k1 <= 9; ++k1)
    for (long k2 = 2; k2 <= k1; ++k2)
      for (long n = -12; n <= 14; ++n) {
        Rational s(n, 2);
        for (long ell = 1; ell <= k1 + k2 + 5; ++ell) {
          auto r = classify({k1, k2, ell, s});
          CHECK(r.region == classify({k1, k2, ell, Rational(1) - s}).region);
          auto lit = literal(k1, k2, ell, std::labs(n - 1));
          CHECK(int(lit.a) + int(lit.d) + int(lit.f) <= 1);
          bool gap = ell == k1 + k2 - 2 || ell == k1 - k2 + 2;
          bool parity = (n + k1 + k2 + ell - 4) % 2 == 0;
          Region expect = Region::None;
          if (!gap && parity) expect = lit.a ? Region::A : lit.d ? Region::D : lit.f ? Region::F : Region::None;
          CHECK(r.region == expect);
          if (r.region == Region::D) CHECK(r.m == r.w);
          CHECK(r.m.has_value() == (r.region != Region::None));
          if (r.d_minus) CHECK(r.region == Region::D);
        }
      }
}

TEST_CASE("Eisenstein parameters") {
  auto a = eisenstein_params({6, 4, 6, Rational(1)});
  CHECK(a.c1 == 2);
  CHECK(a.c1prime == 2);
  CHECK(a.t == 0);
  auto b = eisenstein_params({7, 5, 7, Rational(1, 2)});
  CHECK(b.c1 == 1);
  CHECK(b.c1prime == 3);
  CHECK(b.t == 1);
  auto c = eisenstein_params({4, 4, 4, Rational(1)});
  CHECK(c.c1 == 2);
  CHECK(c.c1prime == 2);
  CHECK(c.t == 0);
  CHECK_THROWS_AS(eisenstein_params({4, 4, 5, Rational(1, 2)}), DomainError);
  CHECK_THROWS_AS(eisenstein_params({4, 4, 4, Rational(1, 2)}), DomainError);
  CHECK_THROWS_AS(eisenstein_params({4, 4, 4, Rational(2)}), DomainError);
  // t is a non-negative integer throughout D-.
  for (long k1 = 2; k1 <= 10; ++k1)
    for (long k2 = 2; k2 <= k1; ++k2)
      for (long ell = 1; ell <= k1; ++ell) {
        if (region_of_ell(k1, k2, ell) != Region::D) continue;
        for (const auto& s : critical_s_set(k1, k2, ell)) {
          auto p = eisenstein_params({k1, k2, ell, s});
          CHECK(p.t >= 0);
          CHECK(p.c1prime - p.c1 == 2 * p.t);
        }
      }
}

TEST_CASE("scan over ell for (4,4)") {
  auto rows = scan(4, 4, 1, 9);
  std::vector<Region> got;
  for (const auto& r : rows) got.push_back(r.region);
  CHECK(got == std::vector<Region>{Region::F, Region::None, Region::D, Region::D, Region::D, Region::None, Region::A,
                                   Region::A, Region::A});
}
