#include <doctest.h>

#include "gen.hpp"
#include "gsp4/errors.hpp"
#include "gsp4/lfactors/lfactors.hpp"

using namespace gsp4;
using namespace gsp4::lfactors;
using exact::Rational;

namespace {

RationalFn Q(std::int64_t e) { return RationalFn::variable("q", e); }

// Oracle: the printed products evaluated directly in rational arithmetic.
struct Point {
  Rational q, a1, b1, a2, b2, lambda, beta0, gamma0;
};

Rational oracle_delta(const Point& x) {
  Rational p = x.q * x.q, alpha = x.q.pow(3) * x.lambda;
  Rational prod(1);
  for (const auto& u : {x.a1, x.b1})
    for (const auto& v : {x.a2, x.b2}) prod *= Rational(1) - p * p / (alpha * u * v);
  return p * p / (p * p - Rational(1)) * prod;
}

Rational oracle_delta_prime_half(const Point& x) {
  Rational p = x.q * x.q, p32 = x.q.pow(3);
  Rational prod = (Rational(1) - p32 / (x.beta0 * x.a1 * x.a2)) * (Rational(1) - p32 / (x.beta0 * x.b1 * x.a2)) *
                  (Rational(1) - p32 / (x.gamma0 * x.a1 * x.a2)) * (Rational(1) - p32 / (x.gamma0 * x.b1 * x.a2));
  return p / (p + Rational(1)) * prod;
}

HeckeParams bind(const Point& x) {
  HeckeParams h;
  h.bindings = {{"q", RationalFn(x.q)},       {"a1", RationalFn(x.a1)},      {"b1", RationalFn(x.b1)},
                {"a2", RationalFn(x.a2)},     {"b2", RationalFn(x.b2)},      {"lambda", RationalFn(x.lambda)},
                {"beta0", RationalFn(x.beta0)}, {"gamma0", RationalFn(x.gamma0)}};
  return h;
}

}  // namespace

TEST_CASE("gl2 factor and tensor parameters") {
  auto f = gl2_factor(gen("a2"), gen("b2"));
  CHECK(f.degree() == 2);
  CHECK(f.value_at(RationalFn(0)) == RationalFn(1));
  HeckeParams zero{{{"a2", RationalFn(0)}, {"b2", RationalFn(0)}}, std::nullopt};
  CHECK(f.substituted(zero).expand() == RationalFn(1));
  CHECK(f.expand() == (RationalFn(1) - gen("a2") * gen("S")) * (RationalFn(1) - gen("b2") * gen("S")));

  auto spin = spin_from_siegel_induction(gen("beta"), gen("gamma"), gen("lambda"));
  CHECK(spin.size() == 4);
  CHECK(spin[0] * spin[3] == spin[1] * spin[2]);
  auto degenerate = spin_from_siegel_induction(RationalFn(1), RationalFn(1), gen("lambda"));
  for (const auto& r : degenerate) CHECK(r == gen("lambda"));
  auto t = tensor_params({gen("a"), gen("b")}, {gen("c"), gen("d")});
  CHECK(multiset_equal(t, {gen("a") * gen("c"), gen("a") * gen("d"), gen("b") * gen("c"), gen("b") * gen("d")}));
  CHECK(multiset_equal(tensor_params(spin, {RationalFn(1)}), spin));
  CHECK(sixteen_factor({}, Rational(1, 2)).degree() == 16);
  HeckeParams trivial{{{"a2", RationalFn(1)}, {"b2", RationalFn(1)}}, std::nullopt};
  auto deg8 = sixteen_factor(trivial, Rational(1, 2)).roots;
  // Each root now appears twice: the distinct part has degree 8.
  std::vector<RationalFn> distinct;
  for (const auto& r : deg8)
    if (!multiset_includes(distinct, {r})) distinct.push_back(r);
  CHECK(distinct.size() == 8);
}

TEST_CASE("delta factor") {
  auto d = delta_factor();
  CHECK(d.degree() == 4);
  CHECK(d.roots[0] == Q(1) / (gen("lambda") * gen("a1") * gen("a2")));
  HeckeParams p5;
  p5.p = RationalFn(5);
  CHECK(p5.apply(d.prefactor) == RationalFn(Rational(25, 24)));
  // alpha a1 a2 = p^2 kills the product.
  HeckeParams kill{{{"lambda", Q(1) / (gen("a1") * gen("a2"))}}, std::nullopt};
  CHECK(delta_factor(kill).value().is_zero());
}

TEST_CASE("delta prime") {
  auto d = delta_prime({}, Rational(1, 2));
  CHECK(d.degree() == 4);
  for (const auto& r : d.roots) CHECK(r.numerator().terms().begin()->first.exponent("q") == 3);
  HeckeParams p5;
  p5.p = RationalFn(5);
  CHECK(p5.apply(d.prefactor) == RationalFn(Rational(5, 6)));
  CHECK_THROWS_AS(delta_prime({}, Rational(1, 3)), DomainError);
  HeckeParams kill{{{"beta0", Q(3) / (gen("a1") * gen("a2"))}}, std::nullopt};
  CHECK(delta_prime(kill, Rational(1, 2)).value().is_zero());
  // Polynomial in p^{-s}: no S in any denominator.
  auto e = delta_prime_factor().expand();
  for (const auto& g : e.denominator().generators()) CHECK(g != "S");
  CHECK(e.numerator().min_exponent("S") >= 0);
}

TEST_CASE("prefactor identity") {
  RationalFn p = Q(2);
  RationalFn lhs = p * p / (p * p - RationalFn(1)) * p / (p + RationalFn(1));
  CHECK(lhs - depleted_prefactor() == RationalFn(0));
  CHECK(delta_factor().prefactor * delta_prime_factor().prefactor == depleted_prefactor());
  HeckeParams p5;
  p5.p = RationalFn(5);
  CHECK(p5.apply(depleted_prefactor()) == RationalFn(Rational(125, 144)));
}

TEST_CASE("euler_D against the printed products") {
  auto e = euler_D();
  CHECK(e.degree() == 8);
  std::vector<RationalFn> both = delta_factor().roots;
  for (const auto& r : delta_prime({}, Rational(1, 2)).roots) both.push_back(r);
  CHECK(multiset_equal(e.roots, both));
  RationalFn product = delta_factor().value() * delta_prime({}, Rational(1, 2)).value();
  CHECK(product == depleted_prefactor() * e.value());
  CHECK(depleted_value() == product);

  testgen::Gen g(71);
  for (int i = 0; i < 25; ++i) {
    Point x{Rational(g.integer(2, 7)), g.nonzero_rational(), g.nonzero_rational(), g.nonzero_rational(),
            g.nonzero_rational(), g.nonzero_rational(), g.nonzero_rational(), g.nonzero_rational()};
    auto h = bind(x);
    auto v = depleted_value(h).as_constant();
    REQUIRE(v.has_value());
    CHECK(*v == oracle_delta(x) * oracle_delta_prime_half(x));
  }
  // All parameters 1.
  HeckeParams ones{{{"a1", RationalFn(1)},
                    {"b1", RationalFn(1)},
                    {"a2", RationalFn(1)},
                    {"b2", RationalFn(1)},
                    {"lambda", RationalFn(1)},
                    {"beta0", RationalFn(1)},
                    {"gamma0", RationalFn(1)}},
                   std::nullopt};
  CHECK(depleted_value(ones) == depleted_prefactor() * (RationalFn(1) - Q(1)).pow(4) * (RationalFn(1) - Q(3)).pow(4));
}

TEST_CASE("improved factor") {
  auto e = euler_D();
  auto imp = euler_D_improved();
  CHECK(imp.degree() == 7);
  CHECK(multiset_includes(e.roots, imp.roots));
  CHECK(imp.value() * (RationalFn(1) - improved_deleted_root()) == e.value());
  HeckeParams kill{{{"gamma0", Q(3) / (gen("b1") * gen("a2"))}}, std::nullopt};
  CHECK(euler_D(kill).value().is_zero());
  CHECK_FALSE(euler_D_improved(kill).value().is_zero());
  CHECK_THROWS_AS(remove_root(imp, improved_deleted_root()), DomainError);
}

TEST_CASE("Iwahori scaling") {
  RationalFn ratio = Q(4) / (gen("beta_iw") * gen("b2"));
  for (long ell = 2; ell <= 6; ++ell) {
    CHECK(iwahori_value({}, ell + 1) / iwahori_value({}, ell) == ratio);
    CHECK(iwahori_value({}, ell) / depleted_value() == ratio.pow(ell));
  }
  HeckeParams unit{{{"beta_iw", Q(4) / gen("b2")}}, std::nullopt};
  for (long ell = 2; ell <= 5; ++ell) CHECK(iwahori_value(unit, ell) == depleted_value(unit));
  CHECK_THROWS_AS(iwahori_value({}, 1), DomainError);
}

TEST_CASE("binding p requires even powers of q") {
  HeckeParams p5;
  p5.p = RationalFn(5);
  CHECK_THROWS_AS(euler_D(p5), DomainError);
  CHECK_NOTHROW(delta_prime_factor(p5));
}

TEST_CASE("normalization audit") {
  auto r = normalization_audit();
  CHECK(r.shifts_tried.size() == 13);
  CHECK(r.solutions.size() == 6);
  REQUIRE_FALSE(r.solutions.empty());
  bool expected = false;
  for (const auto& s : r.solutions) {
    CHECK(s.shift == Rational(1));
    if (s.beta0_binding == "gamma*lambda*q^2" && s.gamma0_binding == "beta*lambda*q^2") expected = true;
  }
  CHECK(expected);
}
