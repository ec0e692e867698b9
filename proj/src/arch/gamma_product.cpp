#include "gsp4/arch/gamma_product.hpp"

#include <algorithm>

#include "gsp4/errors.hpp"

namespace gsp4::arch {

ExactComplex AffineArg::at(const ExactComplex& s1, const ExactComplex& s2) const {
  return ExactComplex{constant, Rational(0)} + coef_s1 * s1 + coef_s2 * s2;
}

std::string AffineArg::to_string() const {
  std::string out;
  auto term = [&](const Rational& c, const char* name) {
    if (c.is_zero()) return;
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    Rational a = c.abs();
    if (!a.is_one()) out += a.to_string() + "*";
    out += name;
  };
  term(coef_s1, "s1");
  term(coef_s2, "s2");
  if (!constant.is_zero() || out.empty()) {
    if (out.empty()) return constant.to_string();
    out += constant.sign() < 0 ? " - " : " + ";
    out += constant.abs().to_string();
  }
  return out;
}

GammaProduct GammaProduct::gamma(const AffineArg& arg) {
  GammaProduct g;
  g.num_.push_back(arg);
  return g;
}

GammaProduct GammaProduct::gamma_c(const AffineArg& arg) {
  GammaProduct g = gamma(arg);
  g.coefficient_ = Rational(2);
  g.two_pi_pow_ = -arg;
  return g;
}

GammaProduct GammaProduct::symbol(const std::string& name, long exponent) {
  GammaProduct g;
  g.symbols_[name] = exponent;
  g.canonicalize();
  return g;
}

GammaProduct GammaProduct::minus_one_pow(long k) {
  GammaProduct g;
  g.sign_power_ = static_cast<int>(((k % 2) + 2) % 2);
  return g;
}

GammaProduct GammaProduct::pi_pow(const AffineArg& e) {
  GammaProduct g;
  g.pi_exponent_ = e;
  return g;
}

GammaProduct GammaProduct::two_pi_pow(const AffineArg& e) {
  GammaProduct g;
  g.two_pi_pow_ = e;
  return g;
}

void GammaProduct::canonicalize() {
  if (coefficient_.is_zero()) throw DomainError(Errc::DenominatorVanishes, "GammaProduct with zero coefficient");
  i_power_ = ((i_power_ % 4) + 4) % 4;
  sign_power_ = (sign_power_ + i_power_ / 2) % 2;
  i_power_ %= 2;
  std::sort(num_.begin(), num_.end());
  std::sort(den_.begin(), den_.end());
  std::vector<AffineArg> n, d;
  std::set_difference(num_.begin(), num_.end(), den_.begin(), den_.end(), std::back_inserter(n));
  std::set_difference(den_.begin(), den_.end(), num_.begin(), num_.end(), std::back_inserter(d));
  num_ = std::move(n);
  den_ = std::move(d);
  std::erase_if(symbols_, [](const auto& kv) { return kv.second == 0; });
}

GammaProduct GammaProduct::inverse() const {
  GammaProduct g;
  g.coefficient_ = coefficient_.inverse();
  g.i_power_ = -i_power_;
  g.sign_power_ = sign_power_;
  g.pi_exponent_ = -pi_exponent_;
  g.two_pi_pow_ = -two_pi_pow_;
  g.num_ = den_;
  g.den_ = num_;
  for (const auto& [name, e] : symbols_) g.symbols_[name] = -e;
  g.canonicalize();
  return g;
}

GammaProduct operator*(const GammaProduct& a, const GammaProduct& b) {
  GammaProduct g;
  g.coefficient_ = a.coefficient_ * b.coefficient_;
  g.i_power_ = a.i_power_ + b.i_power_;
  g.sign_power_ = a.sign_power_ + b.sign_power_;
  g.pi_exponent_ = a.pi_exponent_ + b.pi_exponent_;
  g.two_pi_pow_ = a.two_pi_pow_ + b.two_pi_pow_;
  g.num_ = a.num_;
  g.num_.insert(g.num_.end(), b.num_.begin(), b.num_.end());
  g.den_ = a.den_;
  g.den_.insert(g.den_.end(), b.den_.begin(), b.den_.end());
  g.symbols_ = a.symbols_;
  for (const auto& [name, e] : b.symbols_) g.symbols_[name] += e;
  g.canonicalize();
  return g;
}

std::optional<AffineArg> GammaProduct::pole_at(const ExactComplex& s1, const ExactComplex& s2) const {
  for (const auto* list : {&num_, &den_})
    for (const auto& a : *list)
      if (a.at(s1, s2).is_nonpositive_integer()) return a;
  return std::nullopt;
}

Complex GammaProduct::evaluate(const ExactComplex& s1, const ExactComplex& s2, int digits) const {
  check_digits(digits);
  if (auto p = pole_at(s1, s2))
    throw DomainError(Errc::PoleAt, "Gamma(" + p->to_string() + ") at s1 = " + s1.to_string() +
                                        ", s2 = " + s2.to_string());
  Complex out(to_real(coefficient_));
  if (i_power_ == 1) out = out * Complex(Real(0), Real(1));
  if (sign_power_ == 1) out = -out;
  out *= pow(pi(), pi_exponent_.at(s1, s2).to_complex());
  out *= pow(2 * pi(), two_pi_pow_.at(s1, s2).to_complex());
  for (const auto& a : num_) out *= gamma_numeric(a.at(s1, s2).to_complex(), digits);
  for (const auto& a : den_) out = out / gamma_numeric(a.at(s1, s2).to_complex(), digits);
  return out;
}

std::string GammaProduct::to_string() const {
  std::vector<std::string> parts;
  if (sign_power_ == 1) parts.push_back("-1");
  if (!coefficient_.is_one() || parts.empty()) parts.push_back(coefficient_.to_string());
  if (i_power_ == 1) parts.push_back("i");
  for (const auto& [name, e] : symbols_) parts.push_back(e == 1 ? name : name + "^" + std::to_string(e));
  if (pi_exponent_ != AffineArg{}) parts.push_back("pi^(" + pi_exponent_.to_string() + ")");
  if (two_pi_pow_ != AffineArg{}) parts.push_back("(2*pi)^(" + two_pi_pow_.to_string() + ")");
  for (const auto& a : num_) parts.push_back("Gamma(" + a.to_string() + ")");
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "*" : "") + parts[k];
  if (!den_.empty()) {
    out += "/(";
    for (std::size_t k = 0; k < den_.size(); ++k) out += (k ? "*" : "") + std::string("Gamma(") + den_[k].to_string() + ")";
    out += ")";
  }
  return out;
}

}  // namespace gsp4::arch
