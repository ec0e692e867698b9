#include "gsp4/exact/rational_fn.hpp"

#include <algorithm>
#include <set>

#include "gsp4/errors.hpp"

namespace gsp4::exact {

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFn::normalize() {
  if (den_.is_zero()) throw DomainError(Errc::DenominatorVanishes, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_monomial()) {
    const auto& [m, c] = *den_.terms().begin();
    num_ = num_.scaled(c.inverse(), m.inverse());
    den_ = LaurentPoly(1);
    return;
  }
  Monomial md = den_.monomial_content();
  num_ = num_.scaled(Rational(1), md.inverse());
  den_ = den_.scaled(Rational(1), md.inverse());
  if (den_.size() <= num_.size()) {
    if (auto q = try_divide(num_, den_)) {
      num_ = *q;
      den_ = LaurentPoly(1);
      return;
    }
  }
  auto lead = den_.leading_term().second;
  if (!lead.is_one()) {
    num_ = num_.scaled(lead.inverse());
    den_ = den_.scaled(lead.inverse());
  }
}

RationalFn RationalFn::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    auto close = text.find(')');
    auto slash = text.find("/(", close);
    if (close == std::string_view::npos || slash != close + 1 || text.back() != ')')
      throw DomainError(Errc::ParseError, "malformed rational function '" + std::string(text) + "'");
    auto num = text.substr(1, close - 1);
    auto den = text.substr(slash + 2, text.size() - slash - 3);
    return RationalFn(LaurentPoly::parse(num), LaurentPoly::parse(den));
  }
  return RationalFn(LaurentPoly::parse(text));
}

std::optional<Rational> RationalFn::as_constant() const {
  auto n = num_.as_constant();
  auto d = den_.as_constant();
  if (n && d) return *n / *d;
  if (n && n->is_zero()) return Rational(0);
  return std::nullopt;
}

std::vector<std::string> RationalFn::generators() const {
  auto a = num_.generators();
  auto b = den_.generators();
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

RationalFn RationalFn::inverse() const {
  if (num_.is_zero()) throw DomainError(Errc::DenominatorVanishes, "inverse of zero rational function");
  return RationalFn(den_, num_);
}

RationalFn RationalFn::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  RationalFn out;
  out.num_ = num_.pow(n);
  out.den_ = den_.pow(n);
  return out;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
  if (a.den_.size() <= b.den_.size()) {
    if (auto q = try_divide(b.den_, a.den_)) return RationalFn(a.num_ * *q + b.num_, b.den_);
  } else {
    if (auto q = try_divide(a.den_, b.den_)) return RationalFn(a.num_ + b.num_ * *q, a.den_);
  }
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero() || b.is_zero()) return RationalFn();
  // Cancel a denominator against the other numerator when it divides exactly.
  LaurentPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_constant()) {
    if (auto q = try_divide(an, bd)) {
      an = *q;
      bd = LaurentPoly(1);
    }
  }
  if (!ad.is_constant()) {
    if (auto q = try_divide(bn, ad)) {
      bn = *q;
      ad = LaurentPoly(1);
    }
  }
  return RationalFn(an * bn, ad * bd);
}

bool operator==(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFn::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

RationalFn eval_monomial(const Monomial& m, const Bindings& bindings) {
  RationalFn out(1);
  std::vector<Monomial::Factor> left;
  for (const auto& [name, e] : m.factors()) {
    auto it = bindings.find(name);
    if (it == bindings.end()) {
      left.emplace_back(name, e);
    } else {
      if (it->second.is_zero() && e < 0)
        throw DomainError(Errc::DenominatorVanishes, "symbol '" + name + "' bound to zero with negative exponent");
      out = out * it->second.pow(e);
    }
  }
  if (!left.empty()) out = out * RationalFn(LaurentPoly(Monomial::from_factors(std::move(left))));
  return out;
}

RationalFn eval_poly(const LaurentPoly& p, const Bindings& bindings) {
  RationalFn sum;
  LaurentPoly untouched;
  for (const auto& [m, c] : p.terms()) {
    bool any_bound = std::any_of(m.factors().begin(), m.factors().end(),
                                 [&](const auto& f) { return bindings.count(f.first) > 0; });
    if (!any_bound) {
      untouched += LaurentPoly(m, c);
      continue;
    }
    sum = sum + eval_monomial(m, bindings) * RationalFn(c);
  }
  return sum + RationalFn(untouched);
}

}  // namespace

RationalFn substitute(const LaurentPoly& f, const Bindings& bindings) { return eval_poly(f, bindings); }

RationalFn substitute(const RationalFn& f, const Bindings& bindings) {
  RationalFn num = eval_poly(f.numerator(), bindings);
  RationalFn den = eval_poly(f.denominator(), bindings);
  if (den.is_zero()) throw DomainError(Errc::DenominatorVanishes, "denominator vanishes under substitution");
  return num / den;
}

RationalFn substitute_square(const RationalFn& f, std::string_view root, const RationalFn& square) {
  auto halve = [&](const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [m, c] : p.terms()) {
      std::vector<Monomial::Factor> factors;
      std::int64_t e = 0;
      for (const auto& [name, k] : m.factors()) {
        if (name == root) {
          if (k % 2 != 0)
            throw DomainError(Errc::OddPowerOfRoot,
                              "odd power of '" + std::string(root) + "' cannot be rewritten in its square");
          e = k / 2;
        } else {
          factors.emplace_back(name, k);
        }
      }
      out += LaurentPoly(Monomial::from_factors(std::move(factors)), c) * LaurentPoly(Monomial::variable("\x01sq", e));
    }
    return out;
  };
  Bindings b{{"\x01sq", square}};
  return substitute(RationalFn(halve(f.numerator()), halve(f.denominator())), b);
}

}  // namespace gsp4::exact
