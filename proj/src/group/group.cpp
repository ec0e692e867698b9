#include "gsp4/group/group.hpp"

#include <random>

#include "gsp4/errors.hpp"

namespace gsp4::group {

using exact::LaurentPoly;
using exact::Rational;

const ExactMatrix& symplectic_form() {
  static const ExactMatrix j{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}};
  return j;
}

RationalFn similitude(const ExactMatrix& g) {
  if (g.rows() != 4 || g.cols() != 4) throw DomainError(Errc::DimensionMismatch, "GSp4 elements are 4x4");
  const ExactMatrix& j = symplectic_form();
  ExactMatrix form = g.transpose() * j * g;
  RationalFn nu = form(0, 3);
  if (nu.is_zero() || !(form == j.scaled(nu)))
    throw DomainError(Errc::NotSymplectic, "g^T J g is not a nonzero multiple of J");
  return nu;
}

GroupElement::GroupElement(ExactMatrix m) : m_(std::move(m)), nu_(similitude(m_)) {}

GroupElement GroupElement::identity() { return GroupElement(ExactMatrix::identity(4), RationalFn(1)); }

GroupElement GroupElement::inverse() const { return GroupElement(m_.inverse(), nu_.inverse()); }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  return GroupElement(a.m_ * b.m_, a.nu_ * b.nu_);
}

HElement::HElement(ExactMatrix first, ExactMatrix second) : first_(std::move(first)), second_(std::move(second)) {
  if (first_.rows() != 2 || first_.cols() != 2 || second_.rows() != 2 || second_.cols() != 2)
    throw DomainError(Errc::DimensionMismatch, "H elements are pairs of 2x2 matrices");
  RationalFn d1 = first_.determinant();
  if (d1.is_zero()) throw DomainError(Errc::SingularInput, "first factor is singular");
  if (!(d1 == second_.determinant()))
    throw DomainError(Errc::NotInFiberProduct, "determinants of the two factors differ");
}

GroupElement iota(const HElement& h) {
  const auto& a = h.first();
  const auto& b = h.second();
  ExactMatrix m(4, 4);
  m(0, 0) = a(0, 0);
  m(0, 3) = a(0, 1);
  m(3, 0) = a(1, 0);
  m(3, 3) = a(1, 1);
  m(1, 1) = b(0, 0);
  m(1, 2) = b(0, 1);
  m(2, 1) = b(1, 0);
  m(2, 2) = b(1, 1);
  return GroupElement(std::move(m));
}

GroupElement levi_embed(const ExactMatrix& a, const RationalFn& u) {
  if (a.rows() != 2 || a.cols() != 2) throw DomainError(Errc::DimensionMismatch, "Levi factor must be 2x2");
  if (a.determinant().is_zero()) throw DomainError(Errc::SingularInput, "Levi factor is singular");
  if (u.is_zero()) throw DomainError(Errc::SingularInput, "similitude factor is zero");
  const ExactMatrix w{{0, 1}, {1, 0}};
  ExactMatrix lower = (w * a.inverse().transpose() * w).scaled(u);
  ExactMatrix m(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = a(i, j);
      m(i + 2, j + 2) = lower(i, j);
    }
  return GroupElement(std::move(m));
}

std::string to_string(Parabolic tag) {
  switch (tag) {
    case Parabolic::BorelG: return "Borel_G";
    case Parabolic::Siegel: return "Siegel";
    case Parabolic::Klingen: return "Klingen";
    case Parabolic::BorelH: return "Borel_H";
  }
  return "";
}

Parabolic parse_parabolic(const std::string& text) {
  for (auto t : {Parabolic::BorelG, Parabolic::Siegel, Parabolic::Klingen, Parabolic::BorelH})
    if (to_string(t) == text) return t;
  throw DomainError(Errc::ParseError, "unknown parabolic '" + text + "'");
}

bool membership(const ExactMatrix& g, Parabolic tag) {
  if (g.rows() != 4 || g.cols() != 4) throw DomainError(Errc::DimensionMismatch, "GSp4 elements are 4x4");
  // Zero positions (row, col), 0-based.
  static const std::vector<std::pair<int, int>> siegel{{2, 0}, {2, 1}, {3, 0}, {3, 1}};
  static const std::vector<std::pair<int, int>> klingen{{1, 0}, {2, 0}, {3, 0}, {3, 1}, {3, 2}};
  static const std::vector<std::pair<int, int>> borel{{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}};
  static const std::vector<std::pair<int, int>> borel_h{{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2},
                                                        {0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 0}, {2, 0}};
  const std::vector<std::pair<int, int>>* zeros = nullptr;
  switch (tag) {
    case Parabolic::BorelG: zeros = &borel; break;
    case Parabolic::Siegel: zeros = &siegel; break;
    case Parabolic::Klingen: zeros = &klingen; break;
    case Parabolic::BorelH: zeros = &borel_h; break;
  }
  for (auto [i, j] : *zeros)
    if (!g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).is_zero()) return false;
  return true;
}

GroupElement weyl_matrix(const weyl::WeylElement& w) {
  const ExactMatrix rot{{0, 1}, {-1, 0}};
  const ExactMatrix id2 = ExactMatrix::identity(2);
  GroupElement swap = levi_embed(ExactMatrix{{0, 1}, {1, 0}}, RationalFn(1));
  GroupElement flip1 = iota(HElement(rot, id2));
  GroupElement flip2 = iota(HElement(id2, rot));
  // w = (swap or 1) * diag(signs); the sign flips commute.
  bool off_diagonal = w.entry(0, 0) == 0;
  int s1 = off_diagonal ? w.entry(1, 0) : w.entry(0, 0);
  int s2 = off_diagonal ? w.entry(0, 1) : w.entry(1, 1);
  GroupElement g = off_diagonal ? swap : GroupElement::identity();
  if (s1 < 0) g = g * flip1;
  if (s2 < 0) g = g * flip2;
  return g;
}

ExactMatrix to_swapped_model(const ExactMatrix& g) {
  const ExactMatrix p{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  return p * g * p;
}

std::map<std::string, GroupElement> special_elements() {
  GroupElement tau = levi_embed(ExactMatrix{{1, 0}, {1, 1}}, RationalFn(1));
  GroupElement w1 = weyl_matrix(weyl::WeylElement::flip_second());
  GroupElement w_si = weyl_matrix(weyl::WeylElement::swap());
  std::map<std::string, GroupElement> out;
  out.emplace(names::kTau, tau);
  out.emplace(names::kW1, w1);
  out.emplace(names::kWSi, w_si);
  out.emplace(names::kW2, w1 * w_si);
  out.emplace(names::kTauHat, tau * w1);
  return out;
}

GroupElement s_k(std::int64_t k) {
  RationalFn pk = RationalFn::variable("q", 2 * k);
  return GroupElement(ExactMatrix::diagonal({RationalFn(1), RationalFn(1), pk, pk}));
}

std::size_t OrbitReport::passed() const {
  std::size_t n = 0;
  for (const auto& s : samples) n += s.pass() ? 1 : 0;
  return n;
}

OrbitSample check_open_orbit(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  auto r = [](std::int64_t v) { return RationalFn(static_cast<long>(v)); };
  HElement h(ExactMatrix{{r(a), r(b)}, {r(c), r(d)}}, ExactMatrix{{r(a), r(-b)}, {r(-c), r(d)}});
  static const GroupElement tau_hat = special_elements().at(names::kTauHat);
  ExactMatrix conj = (tau_hat.inverse() * iota(h) * tau_hat).matrix();
  ExactMatrix printed{{r(a), r(b), 0, r(b)}, {r(c), r(d), r(c), 0}, {0, 0, r(a), r(-b)}, {0, 0, r(-c), r(d)}};
  return {a, b, c, d, conj == printed, membership(conj, Parabolic::Siegel)};
}

OrbitReport verify_open_orbit_lemma(std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw DomainError(Errc::IndexOutOfRange, "at least one sample is required");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-9, 9);
  OrbitReport report;
  while (report.samples.size() < samples) {
    std::int64_t a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
    if (a * d - b * c == 0) continue;
    report.samples.push_back(check_open_orbit(a, b, c, d));
  }
  return report;
}

namespace {

RationalFn var(const char* name) { return RationalFn::variable(name); }

// Entry-wise ideal check: every numerator term carries a positive power of
// `gen` with integral coefficient, and the denominator is +-1 modulo `gen`.
bool congruent_to_zero(const RationalFn& f, const std::string& gen) {
  for (const auto& [m, c] : f.numerator().terms())
    if (m.exponent(gen) < 1 || !c.is_integer()) return false;
  Rational unit_part(0);
  for (const auto& [m, c] : f.denominator().terms()) {
    if (!c.is_integer() || m.exponent(gen) < 0) return false;
    if (m.exponent(gen) == 0) {
      if (!m.is_one()) return false;
      unit_part = c;
    }
  }
  return unit_part == Rational(1) || unit_part == Rational(-1);
}

bool matrix_congruent_to_one(const ExactMatrix& m, const std::string& gen) {
  ExactMatrix diff = m - ExactMatrix::identity(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!congruent_to_zero(diff(i, j), gen)) return false;
  return true;
}

}  // namespace

HElement decomposition_h() {
  RationalFn x = var("x"), y = var("y"), z = var("z");
  RationalFn x1 = x + RationalFn(1);
  ExactMatrix first{{x1 - y * z / x1, y / x1}, {-z, RationalFn(1)}};
  ExactMatrix second{{RationalFn(1), RationalFn(0)}, {RationalFn(0), x1}};
  return HElement(first, second);
}

ExactMatrix decomposition_nbar() {
  RationalFn x = var("x"), y = var("y"), z = var("z");
  return ExactMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {x, y, 1, 0}, {z, x, 0, 1}};
}

ExactMatrix decomposition_p() {
  RationalFn x = var("x"), y = var("y");
  RationalFn x1 = x + RationalFn(1);
  return ExactMatrix{{x1, y, 0, y / x1}, {0, x1, 0, 0}, {0, 0, 1, -y / x1}, {0, 0, 0, 1}};
}

DecompositionReport verify_decomposition_identity() {
  const GroupElement tau_hat = special_elements().at(names::kTauHat);
  const HElement h = decomposition_h();
  const ExactMatrix lhs = iota(h).matrix() * tau_hat.matrix() * decomposition_nbar();
  const ExactMatrix rhs = tau_hat.matrix() * decomposition_p();

  DecompositionReport report;
  report.lhs = lhs.to_strings();
  report.rhs = rhs.to_strings();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!(lhs(i, j) == rhs(i, j)))
        throw DomainError(Errc::IdentityFailed, "entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                                    "): " + lhs(i, j).to_string() + " vs " + rhs(i, j).to_string());
  report.identity_holds = true;

  // x, y, z divisible by p^k: substitute pk * x etc. and test the ideal.
  exact::Bindings scale{{"x", var("pk") * var("x")}, {"y", var("pk") * var("y")}, {"z", var("pk") * var("z")}};
  bool ok = matrix_congruent_to_one(exact::substitute(h.first(), scale), "pk") &&
            matrix_congruent_to_one(exact::substitute(h.second(), scale), "pk") &&
            matrix_congruent_to_one(exact::substitute(decomposition_p(), scale), "pk");
  report.congruence_holds = ok;

  exact::Bindings origin{{"x", RationalFn(0)}, {"y", RationalFn(0)}, {"z", RationalFn(0)}};
  report.origin_is_tau_hat =
      exact::substitute(lhs, origin) == tau_hat.matrix() && exact::substitute(rhs, origin) == tau_hat.matrix();

  exact::Bindings sample{{"x", RationalFn(1)}, {"y", RationalFn(2)}, {"z", RationalFn(3)}};
  auto h123 = HElement(exact::substitute(h.first(), sample), exact::substitute(h.second(), sample));
  ExactMatrix l123 = iota(h123).matrix() * tau_hat.matrix() * exact::substitute(decomposition_nbar(), sample);
  ExactMatrix r123 = tau_hat.matrix() * exact::substitute(decomposition_p(), sample);
  report.sample_123_holds = l123 == r123;
  return report;
}

}  // namespace gsp4::group
