#include "gsp4/lfactors/lfactors.hpp"

#include <algorithm>

#include "gsp4/errors.hpp"

namespace gsp4::lfactors {

namespace {

RationalFn qpow(std::int64_t e) { return RationalFn::variable(sym::kQ, e); }
RationalFn p() { return qpow(2); }

}  // namespace

RationalFn HeckeParams::apply(const RationalFn& f) const {
  RationalFn out = bindings.empty() ? f : exact::substitute(f, bindings);
  if (p) out = exact::substitute_square(out, sym::kQ, *p);
  return out;
}

RationalFn EulerFactor::expand(const char* s_symbol) const {
  return value_at(RationalFn::variable(s_symbol));
}

RationalFn EulerFactor::value_at(const RationalFn& s_value) const {
  RationalFn out = prefactor;
  for (const auto& mu : roots) out *= RationalFn(1) - mu * s_value;
  return out;
}

EulerFactor EulerFactor::substituted(const HeckeParams& h) const {
  EulerFactor out;
  out.prefactor = h.apply(prefactor);
  for (const auto& mu : roots) out.roots.push_back(h.apply(mu));
  return out;
}

std::string EulerFactor::factored_string() const {
  std::string out;
  if (!(prefactor == RationalFn(1))) out = "(" + prefactor.to_string() + ")";
  for (const auto& mu : roots) {
    if (!out.empty()) out += "*";
    out += "(1 - " + mu.to_string() + ")";
  }
  return out.empty() ? "1" : out;
}

bool multiset_includes(const std::vector<RationalFn>& big, const std::vector<RationalFn>& small) {
  std::vector<bool> used(big.size(), false);
  for (const auto& x : small) {
    bool found = false;
    for (std::size_t i = 0; i < big.size(); ++i) {
      if (!used[i] && big[i] == x) {
        used[i] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool multiset_equal(const std::vector<RationalFn>& a, const std::vector<RationalFn>& b) {
  return a.size() == b.size() && multiset_includes(a, b);
}

EulerFactor gl2_factor(const RationalFn& a, const RationalFn& b) { return {{a, b}, RationalFn(1)}; }

std::vector<RationalFn> spin_from_siegel_induction(const RationalFn& beta, const RationalFn& gamma,
                                                   const RationalFn& lambda) {
  return {lambda, lambda * beta, lambda * gamma, lambda * beta * gamma};
}

std::vector<RationalFn> tensor_params(const std::vector<RationalFn>& x, const std::vector<RationalFn>& y) {
  std::vector<RationalFn> out;
  out.reserve(x.size() * y.size());
  for (const auto& a : x)
    for (const auto& b : y) out.push_back(a * b);
  return out;
}

EulerFactor delta_factor(const HeckeParams& h) {
  const RationalFn alpha = HeckeParams::alpha();
  const RationalFn p2 = qpow(4);
  EulerFactor f;
  for (const char* u : {sym::kA1, sym::kB1})
    for (const char* v : {sym::kA2, sym::kB2}) f.roots.push_back(p2 / (alpha * gen(u) * gen(v)));
  f.prefactor = p2 / (p2 - RationalFn(1));
  return f.substituted(h);
}

EulerFactor delta_prime_factor(const HeckeParams& h) {
  const RationalFn p2 = qpow(4);
  EulerFactor f;
  for (const char* x : {sym::kBeta0, sym::kGamma0})
    for (const char* u : {sym::kA1, sym::kB1}) f.roots.push_back(p2 / (gen(x) * gen(u) * gen(sym::kA2)));
  f.prefactor = p() / (p() + RationalFn(1));
  return f.substituted(h);
}

EulerFactor delta_prime(const HeckeParams& h, const Rational& s) {
  Rational two_s = s * Rational(2);
  if (!two_s.is_integer())
    throw DomainError(Errc::NonHalfIntegerS, "p^(2-s) is not a power of q for s = " + s.to_string());
  EulerFactor f = delta_prime_factor();
  RationalFn ps = qpow(-two_s.to_int64());
  for (auto& mu : f.roots) mu *= ps;
  return f.substituted(h);
}

RationalFn depleted_prefactor() {
  RationalFn pp = p();
  return pp.pow(3) / ((pp + RationalFn(1)).pow(2) * (pp - RationalFn(1)));
}

EulerFactor euler_D(const HeckeParams& h) {
  EulerFactor d = delta_factor();
  EulerFactor dp = delta_prime(HeckeParams{}, Rational(1, 2));
  EulerFactor e;
  e.roots = d.roots;
  e.roots.insert(e.roots.end(), dp.roots.begin(), dp.roots.end());
  return e.substituted(h);
}

RationalFn improved_deleted_root(const HeckeParams& h) {
  return h.apply(qpow(3) / (gen(sym::kGamma0) * gen(sym::kB1) * gen(sym::kA2)));
}

EulerFactor remove_root(const EulerFactor& f, const RationalFn& root) {
  EulerFactor out = f;
  for (auto it = out.roots.begin(); it != out.roots.end(); ++it) {
    if (*it == root) {
      out.roots.erase(it);
      return out;
    }
  }
  throw DomainError(Errc::FactorAbsent, "factor (1 - " + root.to_string() + ") is not present");
}

EulerFactor euler_D_improved(const HeckeParams& h) {
  return remove_root(euler_D(h), improved_deleted_root(h));
}

RationalFn depleted_value(const HeckeParams& h) { return h.apply(depleted_prefactor()) * euler_D(h).value(); }

RationalFn iwahori_value(const HeckeParams& h, long ell) {
  if (ell < 2) throw DomainError(Errc::LevelTooSmall, "Iwahori level needs ell >= 2, got " + std::to_string(ell));
  RationalFn scale = h.apply(qpow(4) / (gen(sym::kBetaIw) * gen(sym::kB2)));
  return scale.pow(ell) * depleted_value(h);
}

EulerFactor sixteen_factor(const HeckeParams& h, const Rational& s) {
  Rational two_s = s * Rational(2);
  if (!two_s.is_integer()) throw DomainError(Errc::NonHalfIntegerS, "s = " + s.to_string() + " is not a half-integer");
  auto spin = spin_from_siegel_induction(gen(sym::kBeta), gen(sym::kGamma), gen(sym::kLambda));
  auto roots = tensor_params(tensor_params(spin, {gen(sym::kA1), gen(sym::kB1)}), {gen(sym::kA2), gen(sym::kB2)});
  RationalFn ps = qpow(-two_s.to_int64()) * gen(sym::kShift);
  EulerFactor f;
  for (auto& r : roots) f.roots.push_back(r * ps);
  return f.substituted(h);
}

Bindings central_character_model() {
  RationalFn omega1 = gen("omega1");
  RationalFn omega2 = RationalFn(1) / (gen(sym::kLambda).pow(2) * gen(sym::kBeta) * gen(sym::kGamma) * omega1);
  return {{sym::kB1, p() * omega1 / gen(sym::kA1)}, {sym::kB2, p() * omega2 / gen(sym::kA2)}};
}

AuditReport normalization_audit() {
  AuditReport report;
  report.model = "b1 = p*omega1/a1, b2 = p*omega2/a2, omega2 = 1/(lambda^2*beta*gamma*omega1)";
  HeckeParams model{central_character_model(), std::nullopt};

  const RationalFn lambda = gen(sym::kLambda), beta = gen(sym::kBeta), gamma = gen(sym::kGamma);
  const std::vector<RationalFn> base{lambda, lambda * beta, lambda * gamma, lambda * beta * gamma};
  std::vector<RationalFn> choices;
  for (int j = -4; j <= 4; ++j)
    for (const auto& b : base) choices.push_back(qpow(j) * b);

  // Delta roots do not involve beta0, gamma0; the Delta' roots do.
  const EulerFactor delta = delta_factor(model);
  const EulerFactor dprime = delta_prime(HeckeParams{}, Rational(1, 2));

  for (int twice = -6; twice <= 6; ++twice) {
    Rational shift(twice, 2);
    report.shifts_tried.push_back(shift);
    HeckeParams bind_shift = model;
    bind_shift.bindings[sym::kShift] = qpow(-twice);
    const auto tensor = sixteen_factor(bind_shift, Rational(1, 2)).roots;
    if (!multiset_includes(tensor, delta.roots)) {
      report.candidates_tried += choices.size() * choices.size();
      continue;
    }
    for (const auto& b0 : choices)
      for (const auto& g0 : choices) {
        ++report.candidates_tried;
        HeckeParams hb = model;
        hb.bindings[sym::kBeta0] = b0;
        hb.bindings[sym::kGamma0] = g0;
        auto dp = dprime.substituted(hb).roots;
        std::vector<RationalFn> all = delta.roots;
        all.insert(all.end(), dp.begin(), dp.end());
        if (!multiset_includes(tensor, all)) continue;
        AuditSolution sol{shift, b0.to_string(), g0.to_string(), {}};
        for (const auto& r : all) sol.matched_roots.push_back(r.to_string());
        report.solutions.push_back(std::move(sol));
      }
  }
  return report;
}

}  // namespace gsp4::lfactors
