#include <doctest.h>

#include "gen.hpp"
#include "gsp4/errors.hpp"
#include "gsp4/exact/matrix.hpp"

using namespace gsp4;
using namespace gsp4::exact;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
RationalFn V(const char* name) { return RationalFn::variable(name); }
const std::vector<std::string> kGens{"q", "x", "y"};
}  // namespace

TEST_CASE("rational parsing and lowest terms") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-2.5e-1") == Rational(-1, 4));
  CHECK(Rational(4, -6).to_string() == "-2/3");
  CHECK(Rational(4, -6).denominator() > 0);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/x"), DomainError);
  CHECK(Rational(7).to_int64() == 7);
  CHECK_THROWS_AS(Rational(7, 2).to_int64(), DomainError);
}

TEST_CASE("polynomial arithmetic examples") {
  auto q = LaurentPoly::variable("q");
  CHECK((q.pow(2) + 1) * (q.pow(2) - 1) == q.pow(4) - 1);
  CHECK(((q.pow(2) + 1) * (q.pow(2) - 1)).to_string() == "q^4 - 1");
  auto x = LaurentPoly::variable("x");
  CHECK((x + x.pow(-1)) + (-x.pow(-1)) == x);
  auto alpha = q.pow(3) * LaurentPoly::variable("λ");
  CHECK((alpha * alpha).to_string() == "q^6*λ^2");
}

TEST_CASE("canonical text form round-trips") {
  testgen::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    auto p = g.poly(kGens);
    CHECK(LaurentPoly::parse(p.to_string()) == p);
  }
  CHECK(P("3/2*x^-1 + y").to_string() == "y + 3/2*x^-1");
}

TEST_CASE("ring axioms on random triples") {
  testgen::Gen g(20240601);
  for (int i = 0; i < 300; ++i) {
    auto a = g.poly(kGens), b = g.poly(kGens), c = g.poly(kGens);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == LaurentPoly());
  }
}

TEST_CASE("exact division") {
  testgen::Gen g(5);
  for (int i = 0; i < 200; ++i) {
    auto a = g.poly(kGens), b = g.nonzero_poly(kGens);
    auto q = try_divide(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  CHECK_FALSE(try_divide(P("x + 2"), P("x + 1")).has_value());
}

TEST_CASE("rational function equality is an equivalence and agrees with cleared denominators") {
  testgen::Gen g(77);
  for (int i = 0; i < 150; ++i) {
    auto n1 = g.poly(kGens), d1 = g.nonzero_poly(kGens), k = g.nonzero_poly(kGens);
    RationalFn f(n1, d1);
    RationalFn h(n1 * k, d1 * k);
    CHECK(f == f);
    CHECK(f == h);
    CHECK(h == f);
    RationalFn h2(n1 * k * k, d1 * k * k);
    CHECK(h == h2);
    CHECK(f == h2);
    auto n2 = g.poly(kGens), d2 = g.nonzero_poly(kGens);
    RationalFn e(n2, d2);
    CHECK((f == e) == (n1 * d2 == n2 * d1));
  }
}

TEST_CASE("field operations on rational functions") {
  testgen::Gen g(3);
  for (int i = 0; i < 100; ++i) {
    RationalFn a(g.poly(kGens, 3, 2), g.nonzero_poly(kGens));
    RationalFn b(g.poly(kGens, 3, 2), g.nonzero_poly(kGens));
    RationalFn c(g.nonzero_poly(kGens), g.nonzero_poly(kGens));
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * c) / c == a);
    CHECK((a - b) + b == a);
    CHECK(RationalFn::parse(a.to_string()) == a);
  }
  CHECK_THROWS_AS(RationalFn(LaurentPoly(1), LaurentPoly()), DomainError);
}

TEST_CASE("substitute is a ring homomorphism") {
  testgen::Gen g(99);
  Bindings bind{{"x", RationalFn(Rational(3, 2))}, {"y", V("q") + RationalFn(2)}};
  for (int i = 0; i < 150; ++i) {
    RationalFn a(g.poly(kGens, 3, 2)), b(g.poly(kGens, 3, 2));
    CHECK(substitute(a * b, bind) == substitute(a, bind) * substitute(b, bind));
    CHECK(substitute(a + b, bind) == substitute(a, bind) + substitute(b, bind));
  }
}

TEST_CASE("substitute examples") {
  auto q = V("q");
  CHECK(substitute(q * q, {{"q", RationalFn(5)}}) == RationalFn(25));
  auto p = q * q;
  auto pref = p * p / (p * p - RationalFn(1));
  CHECK(substitute_square(pref, "q", RationalFn(5)) == RationalFn(Rational(25, 24)));
}

TEST_CASE("substitute reports a vanishing denominator") {
  auto q = V("q");
  auto f = RationalFn(1) / (q * q - RationalFn(1));
  CHECK_THROWS_AS(substitute(f, {{"q", RationalFn(1)}}), DomainError);
  CHECK_THROWS_AS(substitute(q.inverse(), {{"q", RationalFn(0)}}), DomainError);
  CHECK_THROWS_AS(substitute_square(q.pow(3), "q", RationalFn(5)), DomainError);
}

TEST_CASE("exponent overflow is an error") {
  auto x = LaurentPoly::variable("x", std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(x * LaurentPoly::variable("x"), DomainError);
}

TEST_CASE("matrix identities") {
  ExactMatrix J{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}};
  CHECK(J * J == -ExactMatrix::identity(4));
  ExactMatrix tau{{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, -1, 1}};
  CHECK(tau * tau.inverse() == ExactMatrix::identity(4));
  CHECK(ExactMatrix::identity(4) * J == J);
  CHECK_THROWS_AS(ExactMatrix(2, 3) * ExactMatrix(2, 3), DomainError);
  CHECK_THROWS_AS(ExactMatrix(3, 3).inverse(), DomainError);
}

TEST_CASE("M * M^-1 = I for random nonsingular matrices up to size 4") {
  testgen::Gen g(4242);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + static_cast<std::size_t>(g.integer(0, 3));
    auto m = g.rational_matrix(n);
    if (m.determinant().is_zero()) {
      CHECK_THROWS_AS(m.inverse(), DomainError);
      continue;
    }
    CHECK(m * m.inverse() == ExactMatrix::identity(n));
    ++checked;
  }
  CHECK(checked > 150);
  // Symbolic entries.
  ExactMatrix s{{V("a"), V("b")}, {V("c"), V("d")}};
  CHECK(s * s.inverse() == ExactMatrix::identity(2));
  CHECK(s.determinant() == V("a") * V("d") - V("b") * V("c"));
}
