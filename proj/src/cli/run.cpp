#include <algorithm>
#include <set>

#include "gsp4/cli/cli.hpp"
#include "gsp4/errors.hpp"
#include "gsp4/group/group.hpp"
#include "gsp4/lfactors/lfactors.hpp"
#include "gsp4/regions/regions.hpp"
#include "gsp4/weyl/weyl.hpp"

namespace gsp4::cli {

namespace {

using exact::Rational;
using exact::RationalFn;

/// Typed, schema-checked view of a job's inputs.
class Inputs {
 public:
  Inputs(const Json& doc, std::initializer_list<const char*> allowed) : doc_(doc) {
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, v] : doc.items())
      if (!ok.count(key)) throw SchemaError("unexpected input '" + key + "'");
  }

  bool has(const char* key) const { return doc_.contains(key) && !doc_[key].is_null(); }

  long integer(const char* key) const {
    const Json& v = need(key);
    if (!v.is_number_integer()) throw SchemaError(std::string("input '") + key + "' must be an integer");
    return v.get<long>();
  }
  long integer(const char* key, long fallback) const { return has(key) ? integer(key) : fallback; }

  double real(const char* key, double fallback) const {
    if (!has(key)) return fallback;
    const Json& v = doc_[key];
    if (!v.is_number()) throw SchemaError(std::string("input '") + key + "' must be a number");
    return v.get<double>();
  }

  std::string string(const char* key) const {
    const Json& v = need(key);
    if (!v.is_string()) throw SchemaError(std::string("input '") + key + "' must be a string");
    return v.get<std::string>();
  }
  std::string string(const char* key, const std::string& fallback) const { return has(key) ? string(key) : fallback; }

  Rational rational(const char* key) const { return parse_rational(need(key), key); }

  static Rational parse_rational(const Json& v, const std::string& key) {
    if (!v.is_string() && !v.is_number()) throw SchemaError("input '" + key + "' must be a string or number");
    try {
      return Rational::parse(v.is_string() ? v.get<std::string>() : v.dump());
    } catch (const DomainError&) {
      throw SchemaError("input '" + key + "' is not a rational: " + v.dump());
    }
  }

  std::vector<arch::ExactComplex> complex_list(const char* key) const {
    const Json& v = need(key);
    if (!v.is_array()) throw SchemaError(std::string("input '") + key + "' must be an array");
    std::vector<arch::ExactComplex> out;
    for (const auto& x : v) {
      try {
        if (x.is_number()) out.push_back(arch::ExactComplex::parse(x.dump()));
        else if (x.is_string()) out.push_back(arch::ExactComplex::parse(x.get<std::string>()));
        else throw SchemaError(std::string("input '") + key + "' entries must be strings or numbers");
      } catch (const DomainError&) {
        throw SchemaError(std::string("input '") + key + "' has a malformed entry " + x.dump());
      }
    }
    return out;
  }

  const Json& raw(const char* key) const { return need(key); }

 private:
  const Json& need(const char* key) const {
    if (!has(key)) throw SchemaError(std::string("missing input '") + key + "'");
    return doc_[key];
  }
  const Json& doc_;
};

Json rational_json(const Rational& r) { return r.to_string(); }

Json rational_list_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(rational_json(r));
  return out;
}

Json complex_json(const arch::Complex& z, int digits) {
  return Json{{"re", z.re.str(digits, std::ios_base::fmtflags{})}, {"im", z.im.str(digits, std::ios_base::fmtflags{})}};
}

Json optional_long(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

// Greek and Fraktur spellings accepted in symbol names and expressions.
std::string canonical_symbols(std::string text) {
  static const std::pair<const char*, const char*> kAliases[] = {
      {"β₀", "beta0"}, {"γ₀", "gamma0"}, {"β0", "beta0"},  {"γ0", "gamma0"}, {"𝔞₁", "a1"}, {"𝔟₁", "b1"},
      {"𝔞₂", "a2"},    {"𝔟₂", "b2"},     {"𝔞1", "a1"},     {"𝔟1", "b1"},     {"𝔞2", "a2"}, {"𝔟2", "b2"},
      {"λ", "lambda"}, {"β", "beta"},    {"γ", "gamma"},
  };
  for (const auto& [from, to] : kAliases) {
    std::string f(from);
    for (std::size_t pos; (pos = text.find(f)) != std::string::npos;) text.replace(pos, f.size(), to);
  }
  return text;
}

RationalFn parse_expr(const Json& v, const std::string& key) {
  if (!v.is_string() && !v.is_number_integer()) throw SchemaError("binding '" + key + "' must be a string or integer");
  try {
    return RationalFn::parse(canonical_symbols(v.is_string() ? v.get<std::string>() : v.dump()));
  } catch (const DomainError&) {
    throw SchemaError("binding '" + key + "' is not a rational function: " + v.dump());
  }
}

regions::WeightTuple weight_tuple(const Inputs& in) {
  return {in.integer("k1"), in.integer("k2"), in.integer("ell"), in.rational("s")};
}

Json run_regions(Command cmd, const Json& doc) {
  switch (cmd) {
    case Command::RegionsClassify: {
      Inputs in(doc, {"k1", "k2", "ell", "s"});
      auto r = regions::classify(weight_tuple(in));
      return Json{{"region", regions::to_string(r.region)}, {"d_minus", r.d_minus}, {"m", optional_long(r.m)},
                  {"w", r.w}};
    }
    case Command::RegionsCritical: {
      Inputs in(doc, {"k1", "k2", "ell"});
      long k1 = in.integer("k1"), k2 = in.integer("k2"), ell = in.integer("ell");
      regions::validate({k1, k2, ell, Rational(0)});
      return Json{{"region", regions::to_string(regions::region_of_ell(k1, k2, ell))},
                  {"critical_s", rational_list_json(regions::critical_s_set(k1, k2, ell))}};
    }
    default: {
      Inputs in(doc, {"k1", "k2", "ell_min", "ell_max"});
      long k1 = in.integer("k1"), k2 = in.integer("k2");
      long lo = in.integer("ell_min", 1), hi = in.integer("ell_max");
      if (hi < lo) throw SchemaError("ell_max < ell_min");
      if (hi - lo > 10000) throw SchemaError("scan range too large");
      Json rows = Json::array();
      for (const auto& row : regions::scan(k1, k2, lo, hi)) {
        Json r{{"ell", row.ell},   {"region", regions::to_string(row.region)}, {"d_minus", row.d_minus},
               {"m", optional_long(row.m)}, {"w", row.w}, {"critical", rational_list_json(row.critical)}};
        rows.push_back(std::move(r));
      }
      return Json{{"k1", k1}, {"k2", k2}, {"rows", rows}};
    }
  }
}

Json run_weights(Command cmd, const Json& doc) {
  if (cmd == Command::WeightsKappa) {
    Inputs in(doc, {"i", "r1", "r2", "c"});
    weyl::Weight nu{in.integer("r1"), in.integer("r2"), in.integer("c", 0)};
    if (in.has("c")) weyl::validate_parity(nu);
    auto out = weyl::kappa(static_cast<int>(in.integer("i")), nu);
    return Json{{"r1", out.r1}, {"r2", out.r2}, {"c", out.c}};
  }
  Inputs in(doc, {"k1", "k2"});
  long k1 = in.integer("k1"), k2 = in.integer("k2");
  Json rows = Json::array();
  for (auto [a, b] : weyl::branch_restriction(k1, k2)) rows.push_back(Json{{"first", a}, {"second", b}});
  return Json{{"k1", k1}, {"k2", k2}, {"count", rows.size()}, {"summands", rows}};
}

Json matrix_json(const std::vector<std::vector<std::string>>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

Json run_group(const Json& doc, const Settings& settings) {
  Inputs in(doc, {"identity", "samples", "seed"});
  std::string which = in.string("identity");
  if (which == "decomposition") {
    auto rep = group::verify_decomposition_identity();
    bool pass = rep.identity_holds && rep.congruence_holds && rep.origin_is_tau_hat && rep.sample_123_holds;
    Json cert{{"identity_holds", rep.identity_holds},     {"congruence_holds", rep.congruence_holds},
              {"origin_is_tau_hat", rep.origin_is_tau_hat}, {"sample_123_holds", rep.sample_123_holds},
              {"lhs", matrix_json(rep.lhs)},                 {"rhs", matrix_json(rep.rhs)}};
    return Json{{"identity", which}, {"status", pass ? "pass" : "fail"}, {"certificate", cert}};
  }
  if (which == "open_orbit") {
    long n = in.integer("samples", 100);
    if (n < 1 || n > 100000) throw SchemaError("samples must be in [1, 100000]");
    auto seed = static_cast<std::uint64_t>(in.integer("seed", static_cast<long>(settings.seed)));
    auto rep = group::verify_open_orbit_lemma(static_cast<std::size_t>(n), seed);
    long passed = std::count_if(rep.samples.begin(), rep.samples.end(), [](const auto& s) { return s.pass(); });
    return Json{{"identity", which}, {"status", rep.passed() ? "pass" : "fail"}, {"seed", seed},
                {"certificate", Json{{"samples", n}, {"passed", passed}}}};
  }
  throw SchemaError("identity must be 'decomposition' or 'open_orbit'");
}

Json factor_json(const std::string& name, const lfactors::EulerFactor& f) {
  Json roots = Json::array();
  for (const auto& r : f.roots) roots.push_back(r.to_string());
  return Json{{"factor", name},
              {"degree", f.degree()},
              {"roots", roots},
              {"prefactor", f.prefactor.to_string()},
              {"factored", f.factored_string()}};
}

Json run_euler(Command cmd, const Json& doc) {
  if (cmd == Command::EulerAudit) {
    Inputs in(doc, {});
    auto rep = lfactors::normalization_audit();
    Json rows = Json::array();
    for (const auto& s : rep.solutions)
      rows.push_back(Json{{"shift", rational_json(s.shift)},
                          {"beta0", s.beta0_binding},
                          {"gamma0", s.gamma0_binding},
                          {"matched_roots", s.matched_roots}});
    return Json{{"model", rep.model},
                {"candidates_tried", rep.candidates_tried},
                {"shifts_tried", rational_list_json(rep.shifts_tried)},
                {"found", !rep.solutions.empty()},
                {"solutions", rows}};
  }
  Inputs in(doc, {"factor", "bindings", "p", "s", "ell"});
  lfactors::HeckeParams h;
  if (in.has("bindings")) {
    const Json& b = in.raw("bindings");
    if (!b.is_object()) throw SchemaError("'bindings' must be an object");
    for (const auto& [key, v] : b.items()) h.bindings[canonical_symbols(key)] = parse_expr(v, key);
  }
  if (in.has("p")) h.p = parse_expr(in.raw("p"), "p");
  std::string name = in.string("factor");
  auto need_s = [&] {
    if (!in.has("s")) throw SchemaError("factor '" + name + "' needs input 's'");
    return in.rational("s");
  };
  if (name == "delta") return factor_json(name, lfactors::delta_factor(h));
  if (name == "delta_prime")
    return factor_json(name, in.has("s") ? lfactors::delta_prime(h, need_s()) : lfactors::delta_prime_factor(h));
  if (name == "euler_D") return factor_json(name, lfactors::euler_D(h));
  if (name == "euler_D_improved") return factor_json(name, lfactors::euler_D_improved(h));
  if (name == "sixteen") return factor_json(name, lfactors::sixteen_factor(h, need_s()));
  if (name == "depleted_value") return Json{{"factor", name}, {"value", lfactors::depleted_value(h).to_string()}};
  if (name == "depleted_prefactor")
    return Json{{"factor", name}, {"value", h.apply(lfactors::depleted_prefactor()).to_string()}};
  if (name == "iwahori_value")
    return Json{{"factor", name}, {"ell", in.integer("ell")},
                {"value", lfactors::iwahori_value(h, in.integer("ell")).to_string()}};
  throw SchemaError("unknown factor '" + name + "'");
}

Json report_json(const arch::IdentityReport& rep, int digits, double tol) {
  Json samples = Json::array();
  for (const auto& e : rep.samples)
    samples.push_back(Json{{"s", e.s.to_string()},
                           {"lhs", complex_json(e.lhs, digits)},
                           {"rhs", complex_json(e.rhs, digits)},
                           {"rel_err", e.rel_err}});
  Json poles = Json::array();
  for (const auto& s : rep.poles_skipped) poles.push_back(s.to_string());
  return Json{{"max_rel_err", rep.max_rel_err},
              {"holds", rep.holds(tol)},
              {"tolerance", tol},
              {"symbolic_equal", rep.symbolic_equal},
              {"lhs", rep.lhs.to_string()},
              {"rhs", rep.rhs.to_string()},
              {"samples", samples},
              {"poles_skipped", poles}};
}

arch::ZetaRegion zeta_region(const std::string& r) {
  if (r == "F") return arch::ZetaRegion::F;
  if (r == "D") return arch::ZetaRegion::D;
  throw SchemaError("region must be 'F' or 'D'");
}

Json run_arch(Command cmd, const Json& doc, const Settings& settings, int digits) {
  const auto& cfg = settings.arch;
  switch (cmd) {
    case Command::ArchVerify: {
      Inputs in(doc, {"region", "k1", "k2", "c1", "c2", "samples"});
      auto region = zeta_region(in.string("region"));
      long k1 = in.integer("k1"), k2 = in.integer("k2"), c1 = in.integer("c1"), c2 = in.integer("c2");
      auto samples = in.complex_list("samples");
      if (samples.empty()) throw SchemaError("'samples' must not be empty");
      auto rep = region == arch::ZetaRegion::F ? arch::verify_regionF_identity(k1, k2, c1, c2, samples, digits, cfg)
                                               : arch::verify_regionD_identity(k1, k2, c1, c2, samples, digits, cfg);
      Json out = report_json(rep, digits, cfg.smooth_tol);
      out["region"] = in.string("region");
      return out;
    }
    case Command::ArchZeta: {
      Inputs in(doc, {"region", "k1", "k2", "c1", "c2", "s"});
      auto z = arch::zeta_value(zeta_region(in.string("region")), in.integer("k1"), in.integer("k2"),
                                in.integer("c1"), in.integer("c2"), in.rational("s"), digits, cfg);
      Json constants = Json::object();
      for (const auto& [name, e] : z.symbolic.symbols()) constants[name] = e;
      return Json{{"region", in.string("region")},
                  {"s", rational_json(in.rational("s"))},
                  {"symbolic", z.symbolic.to_string()},
                  {"symbolic_constants", constants},
                  {"value", complex_json(z.value, digits)}};
    }
    case Command::ArchWhittaker: {
      Inputs in(doc, {"c", "t"});
      auto r = arch::whittaker_normalization_check(in.integer("c"), in.real("t", 1.0), cfg);
      auto cj = [](std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; };
      return Json{{"c", r.c},           {"t", r.t},        {"raw", cj(r.raw)}, {"normalized", cj(r.normalized)},
                  {"reference", r.reference}, {"rel_err", r.rel_err}, {"periods", r.periods},
                  {"holds", r.rel_err <= cfg.oscillatory_tol}};
    }
    case Command::ArchSiegel: {
      Inputs in(doc, {"c", "s"});
      long c = in.integer("c");
      auto s = in.has("s") ? (in.raw("s").is_string() ? arch::ExactComplex::parse(in.string("s"))
                                                      : arch::ExactComplex::parse(in.raw("s").dump()))
                           : arch::ExactComplex{};
      return Json{{"c", c},
                  {"s", s.to_string()},
                  {"symbolic", arch::siegel_section_product(c).to_string()},
                  {"value", complex_json(arch::siegel_section_value(c, s, digits), digits)}};
    }
    case Command::ArchShifts: {
      Inputs in(doc, {"k1", "k2", "ell"});
      long k1 = in.integer("k1"), k2 = in.integer("k2");
      Json out{{"spin", rational_list_json(arch::arch_spin_shifts(k1, k2, cfg).shifts)}};
      if (in.has("ell")) {
        long ell = in.integer("ell");
        out["gl2"] = rational_list_json(arch::arch_gl2_shifts(ell, cfg).shifts);
        out["tensor"] = rational_list_json(arch::arch_tensor_shifts(k1, k2, ell, cfg).shifts);
      }
      return out;
    }
    default: {
      Inputs in(doc, {"r1", "r2", "k", "constant"});
      auto g = arch::moriyama_formula(in.integer("r1"), in.integer("r2"), in.integer("k"),
                                      in.string("constant", "C"), cfg);
      Json den = Json::array();
      for (const auto& a : g.denominator_args()) den.push_back(a.to_string());
      return Json{{"symbolic", g.to_string()}, {"sign_power", g.sign_power()}, {"denominator_args", den}};
    }
  }
}

void check_mode(const JobSpec& job, Mode mode, int digits) {
  if (mode == Mode::Numeric && digits < arch::kMinDigits)
    throw SchemaError("numeric mode needs precision >= " + std::to_string(arch::kMinDigits));
  if (mode == Mode::Exact && job.inputs.contains("s")) {
    const Json& s = job.inputs["s"];
    Rational r = Inputs::parse_rational(s, "s");
    if (!(Rational(2) * r).is_integer()) throw SchemaError("exact mode needs a half-integral s");
  }
}

}  // namespace

Json run(const JobSpec& job, const Settings& settings) {
  int digits = job.precision.value_or(settings.digits);
  Mode mode = job.mode.value_or(default_mode(job.command));
  if (!job.inputs.is_object()) throw SchemaError("'inputs' must be an object");
  check_mode(job, mode, digits);
  switch (job.command) {
    case Command::RegionsClassify:
    case Command::RegionsCritical:
    case Command::RegionsScan:
      return run_regions(job.command, job.inputs);
    case Command::WeightsKappa:
    case Command::WeightsBranch:
      return run_weights(job.command, job.inputs);
    case Command::GroupVerify:
      return run_group(job.inputs, settings);
    case Command::EulerCompute:
    case Command::EulerAudit:
      return run_euler(job.command, job.inputs);
    default:
      return run_arch(job.command, job.inputs, settings, digits);
  }
}

int exit_code(const std::exception& e) {
  if (dynamic_cast<const SchemaError*>(&e)) return 2;
  if (dynamic_cast<const DomainError*>(&e)) return 3;
  if (dynamic_cast<const NumericFailure*>(&e)) return 4;
  if (dynamic_cast<const Json::exception*>(&e)) return 2;
  return 1;
}

Outcome execute(const JobSpec& job, const Settings& settings) {
  Outcome out;
  try {
    out.document = run(job, settings);
    out.text = emit(out.document, job.command, job.format);
  } catch (const std::exception& e) {
    out.status = exit_code(e);
    std::string kind = out.status == 2   ? "SchemaError"
                       : out.status == 3 ? "DomainError"
                       : out.status == 4 ? "NumericFailure"
                                         : "InternalError";
    Json err{{"class", kind}, {"message", e.what()}, {"exit", out.status}};
    if (const auto* ge = dynamic_cast<const Error*>(&e)) err["code"] = std::string(errc_name(ge->code()));
    out.document = Json{{"error", err}};
    out.text = out.document.dump(2) + "\n";
  }
  return out;
}

}  // namespace gsp4::cli
