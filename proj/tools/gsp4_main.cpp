// gsp4: command-line front end. Every subcommand builds a JobSpec and hands
// it to gsp4::cli::run, so the CLI and job files share one code path.

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "gsp4/cli/cli.hpp"

using gsp4::cli::Command;
using gsp4::cli::Json;
using gsp4::cli::JobSpec;
using gsp4::cli::SchemaError;

namespace {

enum class Kind { Int, Text, Real };

struct Leaf {
  Command command;
  CLI::App* app;
  std::map<std::string, std::pair<Kind, std::string>> values;  // json key -> (kind, raw text)
  std::vector<std::string> samples;
  std::string samples_file;
  std::vector<std::string> bindings;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

Json convert(Kind kind, const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    if (kind == Kind::Int) {
      long v = std::stol(text, &used);
      if (used == text.size()) return v;
    } else if (kind == Kind::Real) {
      double v = std::stod(text, &used);
      if (used == text.size()) return v;
    } else {
      return text;
    }
  } catch (const std::logic_error&) {
  }
  throw SchemaError("option --" + key + " expects " + (kind == Kind::Int ? "an integer" : "a number") + ", got '" +
                    text + "'");
}

Json build_inputs(const Leaf& leaf) {
  Json in = Json::object();
  for (const auto& [key, kv] : leaf.values)
    if (!kv.second.empty()) in[key] = convert(kv.first, key, kv.second);
  if (leaf.command == Command::ArchVerify) {
    Json samples = Json::array();
    if (!leaf.samples_file.empty()) {
      Json doc = read_json_file(leaf.samples_file);
      if (doc.is_object() && doc.contains("samples")) doc = doc["samples"];
      if (!doc.is_array()) throw SchemaError("samples file must hold a JSON array");
      for (const auto& x : doc) samples.push_back(x);
    }
    for (const auto& s : leaf.samples) samples.push_back(s);
    in["samples"] = samples;
  }
  if (!leaf.bindings.empty()) {
    Json b = Json::object();
    for (const auto& kv : leaf.bindings) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw SchemaError("--bind expects symbol=expression, got '" + kv + "'");
      b[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    in["bindings"] = b;
  }
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical regions, weights, group identities, Euler factors and archimedean zeta integrals for GSp4 x GL2"};
  app.require_subcommand(1);

  std::string config_path, format_text, mode_text;
  std::optional<int> digits;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "JSON configuration file")->check(CLI::ExistingFile);
  app.add_option("--digits,--precision", digits, "Decimal digits for numeric work (default 30 or $GSP4_DIGITS)");
  app.add_option("--format", format_text, "Output format: json, csv or tex");
  app.add_option("--mode", mode_text, "exact or numeric");
  app.add_option("--seed", seed, "Seed for sampled checks");
  app.fallthrough();

  std::vector<std::unique_ptr<Leaf>> leaves;
  auto leaf = [&](CLI::App* parent, const char* name, Command cmd, const char* help,
                  std::vector<std::tuple<const char*, const char*, Kind, bool>> opts) {
    auto l = std::make_unique<Leaf>();
    l->command = cmd;
    l->app = parent->add_subcommand(name, help);
    for (const auto& [flag, key, kind, required] : opts) {
      auto& slot = l->values[key];
      slot.first = kind;
      auto* o = l->app->add_option(flag, slot.second);
      if (required) o->required();
    }
    leaves.push_back(std::move(l));
    return leaves.back().get();
  };
  const Kind I = Kind::Int, T = Kind::Text, R = Kind::Real;

  auto* regions = app.add_subcommand("regions", "Critical-region classification")->require_subcommand(1);
  leaf(regions, "classify", Command::RegionsClassify, "Region, D- flag, Hodge number m and weight w",
       {{"--k1", "k1", I, true}, {"--k2", "k2", I, true}, {"--ell", "ell", I, true}, {"--s", "s", T, true}});
  leaf(regions, "critical", Command::RegionsCritical, "All critical s",
       {{"--k1", "k1", I, true}, {"--k2", "k2", I, true}, {"--ell", "ell", I, true}});
  leaf(regions, "scan", Command::RegionsScan, "One row per ell",
       {{"--k1", "k1", I, true}, {"--k2", "k2", I, true}, {"--ell-min", "ell_min", I, false},
        {"--ell-max", "ell_max", I, true}});

  auto* weights = app.add_subcommand("weights", "Weyl group and weight combinatorics")->require_subcommand(1);
  leaf(weights, "kappa", Command::WeightsKappa, "kappa_i(nu) = w_i(nu + rho) - rho",
       {{"--i", "i", I, true}, {"--r1", "r1", I, true}, {"--r2", "r2", I, true}, {"--c", "c", I, false}});
  leaf(weights, "branch", Command::WeightsBranch, "Summands of the restricted minimal K-type",
       {{"--k1", "k1", I, true}, {"--k2", "k2", I, true}});

  auto* group = app.add_subcommand("group", "Symplectic matrix identities")->require_subcommand(1);
  leaf(group, "verify", Command::GroupVerify, "Check the decomposition or open-orbit identity",
       {{"--identity", "identity", T, true}, {"--samples", "samples", I, false}});

  auto* euler = app.add_subcommand("euler", "Symbolic Euler factors")->require_subcommand(1);
  auto* compute = leaf(euler, "compute", Command::EulerCompute, "Build a factor, optionally binding Hecke parameters",
                       {{"--factor", "factor", T, true}, {"--p", "p", T, false}, {"--s", "s", T, false},
                        {"--ell", "ell", I, false}});
  compute->app->add_option("--bind", compute->bindings, "symbol=expression, repeatable");
  leaf(euler, "audit", Command::EulerAudit, "Search bindings embedding the degree 8 factor in the degree 16 one", {});

  auto* archc = app.add_subcommand("arch", "Archimedean Gamma factors and zeta integrals")->require_subcommand(1);
  auto* verify = leaf(archc, "verify", Command::ArchVerify, "Check the region D or F Gamma identity at sample points",
                      {{"--region", "region", T, true}, {"--k1", "k1", I, true}, {"--k2", "k2", I, true},
                       {"--c1", "c1", I, true}, {"--c2", "c2", I, true}});
  verify->app->add_option("--samples", verify->samples_file, "JSON file with an array of sample points");
  verify->app->add_option("--sample", verify->samples, "Sample point such as 3.1+0.7i, repeatable");
  leaf(archc, "zeta", Command::ArchZeta, "Zeta-integral value up to the normalized constant",
       {{"--region", "region", T, true}, {"--k1", "k1", I, true}, {"--k2", "k2", I, true}, {"--c1", "c1", I, true},
        {"--c2", "c2", I, true}, {"--s", "s", T, true}});
  leaf(archc, "whittaker", Command::ArchWhittaker, "Whittaker transform of the weight-c Siegel section",
       {{"--c", "c", I, true}, {"--t", "t", R, false}});
  leaf(archc, "siegel", Command::ArchSiegel, "Closed-form Siegel section value",
       {{"--c", "c", I, true}, {"--s", "s", T, true}});
  leaf(archc, "shifts", Command::ArchShifts, "Gamma_C shift recipes",
       {{"--k1", "k1", I, true}, {"--k2", "k2", I, true}, {"--ell", "ell", I, false}});
  leaf(archc, "moriyama", Command::ArchMoriyama, "Torus Mellin formula as a symbolic Gamma product",
       {{"--r1", "r1", I, true}, {"--r2", "r2", I, true}, {"--k", "k", I, true}});

  std::string job_path, jobs_path;
  unsigned threads = 0;
  auto* run = app.add_subcommand("run", "Run a JSON job file");
  run->add_option("--job", job_path, "Job file")->required();
  auto* batch = app.add_subcommand("batch", "Run a JSON array of jobs concurrently");
  batch->add_option("--jobs", jobs_path, "Jobs file")->required();
  batch->add_option("--threads", threads, "Worker count (default: hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    gsp4::cli::Settings settings = gsp4::cli::default_settings();
    if (!config_path.empty()) gsp4::cli::apply_config_file(settings, config_path);
    if (digits) settings.digits = *digits;
    if (seed) settings.seed = *seed;

    auto override_flags = [&](JobSpec& job) {
      if (!format_text.empty()) job.format = gsp4::cli::parse_format(format_text);
      if (!mode_text.empty()) job.mode = gsp4::cli::parse_mode(mode_text);
      if (digits) job.precision = *digits;
    };

    if (batch->parsed()) {
      Json doc = read_json_file(jobs_path);
      if (!doc.is_array()) throw SchemaError("jobs file must hold a JSON array");
      std::vector<JobSpec> jobs;
      for (const auto& j : doc) {
        jobs.push_back(JobSpec::from_json(j));
        override_flags(jobs.back());
      }
      int worst = 0;
      for (const auto& o : gsp4::cli::run_batch(jobs, settings, threads)) {
        std::cout << o.text;
        worst = std::max(worst, o.status);
      }
      return worst;
    }

    JobSpec job;
    if (run->parsed()) {
      job = JobSpec::from_json(read_json_file(job_path));
    } else {
      for (const auto& l : leaves)
        if (l->app->parsed()) {
          job.command = l->command;
          job.inputs = build_inputs(*l);
        }
    }
    override_flags(job);
    auto outcome = gsp4::cli::execute(job, settings);
    (outcome.status == 0 ? std::cout : std::cerr) << outcome.text;
    return outcome.status;
  } catch (const std::exception& e) {
    int rc = gsp4::cli::exit_code(e);
    std::cerr << Json{{"error", {{"message", e.what()}, {"exit", rc}}}}.dump(2) << "\n";
    return rc;
  }
}
