#include <doctest.h>

#include "gen.hpp"
#include "gsp4/errors.hpp"
#include "gsp4/group/group.hpp"

using namespace gsp4;
using namespace gsp4::exact;
using namespace gsp4::group;

namespace {

RationalFn V(const char* n) { return RationalFn::variable(n); }

ExactMatrix random_gl2(testgen::Gen& g) {
  for (;;) {
    ExactMatrix m = g.rational_matrix(2, 6);
    if (!m.determinant().is_zero()) return m;
  }
}

// Second factor with the same determinant as `a`: scale a random matrix
// with unit determinant obtained from elementary moves.
ExactMatrix matching_factor(testgen::Gen& g, const ExactMatrix& a) {
  RationalFn det = a.determinant();
  RationalFn t(g.rational());
  RationalFn u(g.rational());
  ExactMatrix e1{{RationalFn(1), t}, {RationalFn(0), RationalFn(1)}};
  ExactMatrix e2{{RationalFn(1), RationalFn(0)}, {u, RationalFn(1)}};
  ExactMatrix d{{det, RationalFn(0)}, {RationalFn(0), RationalFn(1)}};
  return g.integer(0, 1) ? e1 * d * e2 : e2 * e1 * d;
}

HElement random_h(testgen::Gen& g) {
  ExactMatrix a = random_gl2(g);
  return HElement(a, matching_factor(g, a));
}

}  // namespace

TEST_CASE("similitude examples") {
  CHECK(similitude(ExactMatrix::identity(4)) == RationalFn(1));
  RationalFn s = V("s"), t1 = V("t1"), t2 = V("t2");
  ExactMatrix torus = ExactMatrix::diagonal({s * t1, s * t2, s / t2, s / t1});
  CHECK(similitude(torus) == s * s);
  ExactMatrix a{{V("a"), V("b")}, {V("c"), V("d")}};
  ExactMatrix a2{{V("e"), V("f")}, {V("g"), (V("a") * V("d") - V("b") * V("c") + V("f") * V("g")) / V("e")}};
  HElement h(a, a2);
  CHECK(iota(h).nu() == V("a") * V("d") - V("b") * V("c"));
  CHECK_THROWS_AS(similitude(ExactMatrix::diagonal({1, 2, 3, 4})), DomainError);
  CHECK_THROWS_AS(HElement(a, ExactMatrix::identity(2)), DomainError);
}

TEST_CASE("iota shape and homomorphism") {
  CHECK(iota(HElement(ExactMatrix::identity(2), ExactMatrix::identity(2))).matrix() == ExactMatrix::identity(4));
  ExactMatrix a{{V("a"), V("b")}, {V("c"), V("d")}};
  RationalFn det = a.determinant();
  ExactMatrix second{{RationalFn(1), RationalFn(0)}, {RationalFn(0), det}};
  ExactMatrix m = iota(HElement(a, second)).matrix();
  CHECK(m(0, 0) == V("a"));
  CHECK(m(0, 3) == V("b"));
  CHECK(m(3, 0) == V("c"));
  CHECK(m(3, 3) == V("d"));
  testgen::Gen g(17);
  for (int i = 0; i < 40; ++i) {
    HElement h1 = random_h(g), h2 = random_h(g);
    CHECK(iota(h1 * h2) == iota(h1) * iota(h2));
    CHECK(iota(h1 * h2).nu() == iota(h1).nu() * iota(h2).nu());
  }
}

TEST_CASE("levi embedding") {
  CHECK(levi_embed(ExactMatrix::identity(2), RationalFn(1)).matrix() == ExactMatrix::identity(4));
  ExactMatrix a{{V("a"), V("b")}, {V("c"), V("d")}};
  RationalFn det = a.determinant();
  GroupElement l = levi_embed(a, RationalFn(1));
  // w A^{-T} w = (a -b; -c d) / det; this is what reproduces tau's lower block.
  CHECK(l.matrix()(2, 2) == V("a") / det);
  CHECK(l.matrix()(2, 3) == -V("b") / det);
  CHECK(l.matrix()(3, 2) == -V("c") / det);
  CHECK(l.matrix()(3, 3) == V("d") / det);
  CHECK(membership(l, Parabolic::Siegel));
  CHECK(levi_embed(a, V("u")).nu() == V("u"));
  testgen::Gen g(23);
  for (int i = 0; i < 40; ++i) {
    ExactMatrix a1 = random_gl2(g), a2 = random_gl2(g);
    RationalFn u1(g.nonzero_rational()), u2(g.nonzero_rational());
    CHECK(levi_embed(a1 * a2, u1 * u2) == levi_embed(a1, u1) * levi_embed(a2, u2));
  }
  CHECK_THROWS_AS(levi_embed(ExactMatrix{{1, 1}, {1, 1}}, RationalFn(1)), DomainError);
}

TEST_CASE("parabolic membership") {
  ExactMatrix torus = ExactMatrix::diagonal({2, 3, 5, RationalFn(Rational(15, 2))});
  GroupElement t(torus);
  for (auto tag : {Parabolic::BorelG, Parabolic::Siegel, Parabolic::Klingen, Parabolic::BorelH})
    CHECK(membership(t, tag));
  auto sp = special_elements();
  const GroupElement& tau = sp.at(names::kTau);
  CHECK_FALSE(membership(tau, Parabolic::BorelG));
  CHECK(membership(tau, Parabolic::Siegel));
  HElement lower(ExactMatrix{{1, 0}, {1, 1}}, ExactMatrix::identity(2));
  CHECK_FALSE(membership(iota(lower), Parabolic::Siegel));
}

TEST_CASE("Borel containment and the H-Borel pullback") {
  testgen::Gen g(31);
  for (int i = 0; i < 60; ++i) {
    HElement h = random_h(g);
    bool upper = h.first()(1, 0).is_zero() && h.second()(1, 0).is_zero();
    GroupElement x = iota(h);
    CHECK(membership(x, Parabolic::Siegel) == upper);
    CHECK(membership(x, Parabolic::BorelG) == upper);
    CHECK(membership(x, Parabolic::BorelH) == upper);
    if (membership(x, Parabolic::BorelG)) {
      CHECK(membership(x, Parabolic::Siegel));
      CHECK(membership(x, Parabolic::Klingen));
    }
  }
  for (int i = 0; i < 60; ++i) {
    ExactMatrix a{{RationalFn(g.nonzero_rational()), RationalFn(g.rational())},
                  {RationalFn(0), RationalFn(g.nonzero_rational())}};
    HElement h(a, matching_factor(g, a));
    bool upper2 = h.second()(1, 0).is_zero();
    CHECK(membership(iota(h), Parabolic::Siegel) == upper2);
  }
}

TEST_CASE("special elements") {
  auto sp = special_elements();
  const auto& tau = sp.at(names::kTau);
  const auto& w1 = sp.at(names::kW1);
  const auto& w2 = sp.at(names::kW2);
  const auto& wsi = sp.at(names::kWSi);
  const auto& tau_hat = sp.at(names::kTauHat);
  CHECK(tau_hat == tau * w1);
  CHECK(w2 == w1 * wsi);
  for (const auto& [name, g] : sp) CHECK_NOTHROW(similitude(g.matrix()));
  CHECK(s_k(3).nu() == RationalFn::variable("q", 6));
  CHECK((tau * tau.inverse()).matrix() == ExactMatrix::identity(4));
}

TEST_CASE("matrix and abstract Weyl actions agree") {
  RationalFn t1 = V("t1"), t2 = V("t2"), v = V("v");
  ExactMatrix torus = ExactMatrix::diagonal({t1, t2, v / t2, v / t1});
  // Squared character: t1^(2 r1) t2^(2 r2) v^(c - r1 - r2).
  auto chi2 = [&](const ExactMatrix& t, long r1, long r2, long c) {
    RationalFn y1 = t(0, 0), y2 = t(1, 1), y3 = t(2, 2), y4 = t(3, 3);
    return (y1 / y4).pow(r1) * (y2 / y3).pow(r2) * (y1 * y4).pow(c);
  };
  testgen::Gen g(41);
  for (const auto& w : weyl::weyl_group(weyl::Group::G)) {
    GroupElement m = weyl_matrix(w);
    ExactMatrix conj = m.inverse().matrix() * torus * m.matrix();
    for (int i = 0; i < 5; ++i) {
      long r1 = g.integer(-4, 4), r2 = g.integer(-4, 4), c = r1 + r2;
      auto [s1, s2] = w.apply(r1, r2);
      CHECK(chi2(conj, r1, r2, c) == chi2(torus, s1, s2, c));
    }
  }
  // The named elements realize the Kostant representatives.
  auto reps = weyl::kostant_reps(weyl::Group::G);
  auto sp = special_elements();
  CHECK(weyl_matrix(reps[1].element) == sp.at(names::kW1));
  CHECK(weyl_matrix(reps[2].element).matrix() == sp.at(names::kW2).matrix());
}

TEST_CASE("open orbit lemma") {
  auto r = verify_open_orbit_lemma(100, 1);
  CHECK(r.passed() == 100);
  CHECK(check_open_orbit(1, 0, 0, 1).pass());
  CHECK(check_open_orbit(1, 1, 0, 1).pass());
  CHECK(check_open_orbit(2, 3, 1, 2).pass());
}

TEST_CASE("decomposition identity") {
  auto r = verify_decomposition_identity();
  CHECK(r.identity_holds);
  CHECK(r.congruence_holds);
  CHECK(r.origin_is_tau_hat);
  CHECK(r.sample_123_holds);
}

TEST_CASE("swapped model is an involution preserving similitude") {
  auto sp = special_elements();
  for (const auto& [name, g] : sp) {
    ExactMatrix s = to_swapped_model(g.matrix());
    CHECK(to_swapped_model(s) == g.matrix());
  }
}
