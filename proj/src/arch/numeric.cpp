#include "gsp4/arch/numeric.hpp"

#include <cmath>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "gsp4/errors.hpp"

namespace gsp4::arch {

namespace mp = boost::multiprecision;

void check_digits(int digits) {
  if (digits < kMinDigits || digits > kMaxDigits)
    throw DomainError(Errc::PrecisionOutOfRange, "digits must lie in [" + std::to_string(kMinDigits) + ", " +
                                                     std::to_string(kMaxDigits) + "], got " + std::to_string(digits));
}

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.raw().get_mpq_t(), MPFR_RNDN);
  return r;
}

Real pi() { return boost::math::constants::pi<Real>(); }

Real Complex::abs() const { return mp::sqrt(re * re + im * im); }
Real Complex::arg() const { return mp::atan2(im, re); }

Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  if (d == 0) throw DomainError(Errc::DenominatorVanishes, "complex division by zero");
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

std::string Complex::to_string(int digits) const {
  auto fmt = [&](const Real& x) { return x.str(digits, std::ios_base::fmtflags{}); };
  if (im == 0) return fmt(re);
  std::string out = re == 0 ? std::string() : fmt(re);
  std::string i = fmt(mp::abs(im));
  if (im < 0) out += "-";
  else if (!out.empty()) out += "+";
  return out + i + "i";
}

Complex exp(const Complex& z) {
  Real m = mp::exp(z.re);
  return {m * mp::cos(z.im), m * mp::sin(z.im)};
}

Complex log(const Complex& z) {
  if (z.re == 0 && z.im == 0) throw DomainError(Errc::PoleAt, "log(0)");
  return {mp::log(z.abs()), z.arg()};
}

Complex sin(const Complex& z) {
  return {mp::sin(z.re) * mp::cosh(z.im), mp::cos(z.re) * mp::sinh(z.im)};
}

Complex pow(const Real& base, const Complex& z) { return exp(z * Complex(mp::log(base))); }

double rel_err(const Complex& a, const Complex& b) {
  Real diff = (a - b).abs();
  Real scale = b.abs();
  return static_cast<double>(scale == 0 ? diff : diff / scale);
}

ExactComplex ExactComplex::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw DomainError(Errc::ParseError, "empty complex number");
  if (s.back() != 'i') return {Rational::parse(s), Rational(0)};
  s.pop_back();
  // Split at the last sign that is not the leading one and not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag = [](std::string part) {
    if (part.empty() || part == "+") return Rational(1);
    if (part == "-") return Rational(-1);
    if (part.back() == '*') part.pop_back();
    return Rational::parse(part);
  };
  if (split == std::string::npos) return {Rational(0), imag(s)};
  return {Rational::parse(s.substr(0, split)), imag(s.substr(split))};
}

bool ExactComplex::is_nonpositive_integer() const {
  return im.is_zero() && re.is_integer() && re.sign() <= 0;
}

std::string ExactComplex::to_string() const {
  if (im.is_zero()) return re.to_string();
  std::string out = re.is_zero() ? std::string() : re.to_string();
  if (im.sign() > 0 && !out.empty()) out += "+";
  return out + im.to_string() + "i";
}

namespace {

/// B_0, B_2, B_4, ... from sum_{j<=m} C(m+1, j) B_j = 0.
const std::vector<mpq_class>& even_bernoulli() {
  static const std::vector<mpq_class> table = [] {
    constexpr int kMax = 240;
    std::vector<mpq_class> b(kMax + 1);
    b[0] = 1;
    for (int m = 1; m <= kMax; ++m) {
      mpq_class acc = 0;
      mpz_class binom = 1;  // C(m+1, j)
      for (int j = 0; j < m; ++j) {
        acc += binom * b[j];
        binom = binom * (m + 1 - j) / (j + 1);
      }
      b[m] = -acc / (m + 1);
    }
    std::vector<mpq_class> even;
    for (int m = 0; m <= kMax; m += 2) even.push_back(b[m]);
    return even;
  }();
  return table;
}

Complex log_gamma_stirling(const Complex& z, int digits) {
  const auto& bern = even_bernoulli();
  Real half_log_2pi = mp::log(2 * pi()) / 2;
  Complex out = (z - Complex(Real(0.5))) * log(z) - z + Complex(half_log_2pi);
  Complex zinv = Complex(Real(1)) / z;
  Complex z2inv = zinv * zinv;
  Complex power = zinv;
  Real tol = mp::pow(Real(10), -(digits + 10));
  for (std::size_t k = 1; k < bern.size(); ++k) {
    Rational coeff(mpq_class(bern[k] / (2 * k * (2 * k - 1))));
    Complex term = power * Complex(to_real(coeff));
    out += term;
    if (term.abs() < tol) return out;
    power *= z2inv;
  }
  throw NumericFailure(Errc::QuadratureNotConverged, "Stirling series did not converge");
}

}  // namespace

Complex gamma_numeric(const Complex& z, int digits) {
  check_digits(digits);
  if (z.im == 0 && z.re <= 0 && mp::floor(z.re) == z.re)
    throw DomainError(Errc::PoleAt, "Gamma has a pole at " + z.to_string(digits));
  if (z.re < Real(0.5)) {
    Complex one_minus = Complex(Real(1)) - z;
    return Complex(pi()) / (sin(Complex(pi()) * z) * gamma_numeric(one_minus, digits));
  }
  Real target = Real(digits) / 2 + 12;
  Complex shifted = z;
  Complex product(Real(1));
  while (shifted.abs() < target || shifted.re < target / 2) {
    product *= shifted;
    shifted.re += 1;
  }
  return exp(log_gamma_stirling(shifted, digits)) / product;
}

Complex gamma_c(const Complex& z, int digits) {
  return Complex(Real(2)) * pow(2 * pi(), -z) * gamma_numeric(z, digits);
}

}  // namespace gsp4::arch
