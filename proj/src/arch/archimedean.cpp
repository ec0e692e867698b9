#include "gsp4/arch/archimedean.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>

#include "gsp4/errors.hpp"
#include "gsp4/regions/regions.hpp"

namespace gsp4::arch {

namespace {

ArchLParams sorted(std::vector<Rational> shifts) {
  std::sort(shifts.begin(), shifts.end(), std::greater<>());
  return {std::move(shifts)};
}

void require_weights(long k1, long k2) {
  if (!(k1 >= k2 && k2 >= 2))
    throw DomainError(Errc::WeightOutOfRange, "need k1 >= k2 >= 2, got (" + std::to_string(k1) + ", " +
                                                  std::to_string(k2) + ")");
}

const ExactComplex kZero{Rational(0), Rational(0)};

}  // namespace

GammaProduct ArchLParams::at(const AffineArg& arg) const {
  GammaProduct out;
  for (const auto& mu : shifts) out = out * GammaProduct::gamma_c(arg + mu);
  return out;
}

ArchLParams arch_spin_shifts(long k1, long k2, const ArchConfig& cfg) {
  if (cfg.spin_shifts) return sorted(*cfg.spin_shifts);
  require_weights(k1, k2);
  return sorted({Rational(k1 + k2 - 3, 2), Rational(k1 - k2 + 1, 2)});
}

ArchLParams arch_gl2_shifts(long ell, const ArchConfig& cfg) {
  if (cfg.gl2_shifts) return sorted(*cfg.gl2_shifts);
  if (ell < 1) throw DomainError(Errc::WeightOutOfRange, "ell must be >= 1");
  return sorted({Rational(ell - 1, 2)});
}

ArchLParams arch_tensor_shifts(long k1, long k2, long ell, const ArchConfig& cfg) {
  if (cfg.tensor_shifts) return sorted(*cfg.tensor_shifts);
  std::vector<Rational> out;
  for (const auto& mu : arch_spin_shifts(k1, k2, cfg).shifts)
    for (const auto& nu : arch_gl2_shifts(ell, cfg).shifts) {
      out.push_back(mu + nu);
      out.push_back((mu - nu).abs());
    }
  return sorted(std::move(out));
}

GammaProduct moriyama_formula(long r1, long r2, long k, const std::string& constant, const ArchConfig& cfg) {
  if (!(r1 >= r2 && r2 >= -1))
    throw DomainError(Errc::WeightOutOfRange, "need r1 >= r2 >= -1");
  long d = r1 + r2 + 4;
  if (k < 0 || k > d)
    throw DomainError(Errc::IndexOutOfRange, "k = " + std::to_string(k) + " outside [0, " + std::to_string(d) + "]");
  const Rational half(1, 2);
  ArchLParams spin = arch_spin_shifts(r1 + 3, r2 + 3, cfg);
  AffineArg diff{half, Rational(1), Rational(-1)};
  AffineArg sum{-half, Rational(1), Rational(1)};
  GammaProduct out = GammaProduct::symbol(constant) * GammaProduct::minus_one_pow(k) * spin.at(diff) * spin.at(sum);
  out = out * GammaProduct::pi_pow(-sum);
  out = out / GammaProduct::gamma(AffineArg::s1(Rational(r1 + 3 - k, 2)));
  out = out / GammaProduct::gamma(AffineArg::s2(Rational(-1 - r2 + k, 2)));
  return out;
}

GammaProduct siegel_section_product(long c) {
  if (c < 1) throw DomainError(Errc::WeightOutOfRange, "c must be >= 1");
  AffineArg arg = AffineArg::s1(Rational(c, 2));
  GammaProduct out(Rational(2).pow(1 - c));
  for (long j = 0; j < c % 4; ++j) out = out * GammaProduct::i_unit();
  return out * GammaProduct::pi_pow(-arg) * GammaProduct::gamma(arg);
}

Complex siegel_section_value(long c, const ExactComplex& s, int digits) {
  return siegel_section_product(c).evaluate(s, kZero, digits);
}

WhittakerResult whittaker_normalization_check(long c, double t, const ArchConfig& cfg) {
  if (c < 1) throw DomainError(Errc::WeightOutOfRange, "c must be >= 1");
  if (!(t > 0)) throw DomainError(Errc::WeightOutOfRange, "t must be positive");
  using cd = std::complex<double>;
  constexpr double kPi = 3.14159265358979323846;

  // f(w n(x) diag(t,1)) = t^{c/2} ∫_{ℝ×} Φ(ut, ux) sgn(u)^c |u|^c d×u. With Φ = 2^{1−c}(X+iY)^c e^{−π(X²+Y²)}
  // the u-integral is 2^{1−c} (t+ix)^c · 2∫_0^∞ u^{2c−1} e^{−πu²(x²+t²)} du, and scaling u by
  // (x²+t²)^{−1/2} leaves the x-independent integral m_c below times (x²+t²)^{−c}.
  boost::math::quadrature::exp_sinh<double> des;
  double m_c = 2 * des.integrate(
                       [c](double v) { return v > 0 ? std::exp((2 * c - 1) * std::log(v) - kPi * v * v) : 0.0; },
                       cfg.smooth_tol);
  double scale = std::pow(t, c / 2.0) * std::pow(2.0, 1 - c) * m_c;
  auto integrand = [&](double x) {
    cd section = scale * std::pow(cd(t, x), static_cast<int>(c)) / std::pow(x * x + t * t, static_cast<double>(c));
    return section * std::exp(cd(0, -2 * kPi * x));
  };

  auto period = [&](long n) -> cd {
    auto on = [&](auto rule) {
      double a = static_cast<double>(n);
      double re = rule.integrate([&](double x) { return integrand(x).real(); }, a, a + 1);
      double im = rule.integrate([&](double x) { return integrand(x).imag(); }, a, a + 1);
      return cd(re, im);
    };
    using boost::math::quadrature::gauss;
    switch (cfg.oscillatory_nodes) {
      case 10: return on(gauss<double, 10>());
      case 15: return on(gauss<double, 15>());
      case 20: return on(gauss<double, 20>());
      case 30: return on(gauss<double, 30>());
    }
    throw DomainError(Errc::IndexOutOfRange, "oscillatory_nodes must be one of 10, 15, 20, 30");
  };

  if (cfg.oscillatory_min_periods < 1 || cfg.oscillatory_max_periods < cfg.oscillatory_min_periods)
    throw DomainError(Errc::IndexOutOfRange, "bad oscillatory period budget");

  // Partial integrals over [−N, N] for N = N0, 2N0, ..., then a Richardson table in h = 1/N.
  std::vector<cd> partial;
  std::vector<int> widths;
  cd running = 0;
  long done = 0;
  for (long n = cfg.oscillatory_min_periods; n <= cfg.oscillatory_max_periods; n *= 2) {
    for (long k = done; k < n; ++k) running += period(k) + period(-k - 1);
    done = n;
    partial.push_back(running);
    widths.push_back(static_cast<int>(n));
  }
  std::vector<std::vector<cd>> table(partial.size());
  for (std::size_t j = 0; j < partial.size(); ++j) {
    table[j].push_back(partial[j]);
    for (std::size_t m = 1; m <= j; ++m) {
      double f = std::ldexp(1.0, static_cast<int>(m)) - 1;
      table[j].push_back(table[j][m - 1] + (table[j][m - 1] - table[j - 1][m - 1]) / f);
    }
  }
  cd best = table.back().back();
  if (table.size() >= 2) {
    cd prev = table[table.size() - 2].back();
    if (std::abs(best - prev) > cfg.oscillatory_tol * std::abs(best))
      throw NumericFailure(Errc::QuadratureNotConverged,
                           "Whittaker transform extrapolants differ by " + std::to_string(std::abs(best - prev)));
  }

  WhittakerResult r;
  r.c = c;
  r.t = t;
  r.raw = best;
  r.normalized = best / 2.0;
  r.reference = std::pow(t, c / 2.0) * std::exp(-2 * kPi * t);
  r.rel_err = std::abs(r.normalized - r.reference) / r.reference;
  r.periods = widths.back();
  return r;
}

namespace {

IdentityReport compare(GammaProduct lhs, GammaProduct rhs, const std::vector<ExactComplex>& samples, int digits) {
  check_digits(digits);
  IdentityReport rep;
  rep.symbolic_equal = lhs == rhs;
  for (const auto& s : samples) {
    if (lhs.pole_at(s, kZero) || rhs.pole_at(s, kZero)) {
      rep.poles_skipped.push_back(s);
      continue;
    }
    SampleEval e{s, lhs.evaluate(s, kZero, digits), rhs.evaluate(s, kZero, digits)};
    e.rel_err = rel_err(e.lhs, e.rhs);
    rep.max_rel_err = std::max(rep.max_rel_err, e.rel_err);
    rep.samples.push_back(std::move(e));
  }
  if (rep.samples.empty())
    throw DomainError(Errc::AllSamplesAtPoles, "every sample point is a pole of one side");
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  return rep;
}

}  // namespace

IdentityReport verify_regionF_identity(long k1, long k2, long c1, long c2, const std::vector<ExactComplex>& samples,
                                       int digits, const ArchConfig& cfg) {
  require_weights(k1, k2);
  if (c1 < 1 || c2 < 1) throw DomainError(Errc::WeightOutOfRange, "region F needs c1, c2 >= 1");
  if (c1 + c2 != k1 - k2 + 2)
    throw DomainError(Errc::InconsistentWeights, "region F needs c1 + c2 = k1 - k2 + 2");
  const Rational shift = Rational(c2, 2) - Rational(1, 2);
  ArchLParams spin = arch_spin_shifts(k1, k2, cfg);
  GammaProduct lhs = spin.at(AffineArg::s1(-shift)) * spin.at(AffineArg::s1(shift));
  GammaProduct rhs = arch_tensor_shifts(k1, k2, c2, cfg).at(AffineArg::s1());
  return compare(std::move(lhs), std::move(rhs), samples, digits);
}

IdentityReport verify_regionD_identity(long k1, long k2, long c1, long c2, const std::vector<ExactComplex>& samples,
                                       int digits, const ArchConfig& cfg) {
  require_weights(k1, k2);
  if (c1 < 1) throw DomainError(Errc::WeightOutOfRange, "region D needs c1 >= 1");
  if (c2 - c1 != k1 - k2 + 2)
    throw DomainError(Errc::InconsistentWeights, "region D needs c2 - c1 = k1 - k2 + 2");
  if (c2 > k1) throw DomainError(Errc::NotInDMinus, "region D- needs c2 <= k1");
  const Rational shift = Rational(c2, 2) - Rational(1, 2);
  ArchLParams spin = arch_spin_shifts(k1, k2, cfg);
  GammaProduct lhs = spin.at(AffineArg::s1(shift)) * spin.at(AffineArg::s1(-shift));
  GammaProduct rhs = arch_tensor_shifts(k1, k2, c2, cfg).at(AffineArg::s1()) *
                     GammaProduct::two_pi_pow(AffineArg{Rational(c1), Rational(0), Rational(0)}) *
                     GammaProduct::gamma(AffineArg::s1(Rational(-c1, 2))) /
                     GammaProduct::gamma(AffineArg::s1(Rational(c1, 2)));
  return compare(std::move(lhs), std::move(rhs), samples, digits);
}

ZetaValue zeta_value(ZetaRegion region, long k1, long k2, long c1, long c2, const Rational& s, int digits,
                     const ArchConfig& cfg) {
  check_digits(digits);
  require_weights(k1, k2);
  auto mismatch = [](const std::string& why) { return DomainError(Errc::RegionMismatch, why); };
  if (c1 < 1 || c2 < 1) throw mismatch("c1, c2 must be >= 1");
  if (region == ZetaRegion::F && c1 + c2 != k1 - k2 + 2) throw mismatch("region F needs c1 + c2 = k1 - k2 + 2");
  if (region == ZetaRegion::D && c2 - c1 != k1 - k2 + 2) throw mismatch("region D needs c2 - c1 = k1 - k2 + 2");
  regions::Region expected = region == ZetaRegion::F ? regions::Region::F : regions::Region::D;
  if (regions::region_of_ell(k1, k2, c2) != expected)
    throw mismatch("ell = c2 = " + std::to_string(c2) + " is not in region " + regions::to_string(expected));
  Rational twice = Rational(2) * s;
  if (!twice.is_integer() || (twice.numerator() + regions::motivic_weight(k1, k2, c2)) % 2 != 0)
    throw mismatch("s = " + s.to_string() + " fails the critical parity 2s + w even");

  GammaProduct out = GammaProduct::minus_one_pow(c2) * arch_tensor_shifts(k1, k2, c2, cfg).at(AffineArg::s1());
  if (region == ZetaRegion::F) out = out * GammaProduct::symbol("C");
  else out = out * GammaProduct::two_pi_pow(AffineArg{Rational(c2), Rational(0), Rational(0)});
  Complex v = out.evaluate({s, Rational(0)}, kZero, digits);
  return {std::move(out), std::move(v)};
}

}  // namespace gsp4::arch
