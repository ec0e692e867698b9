#include <cstdlib>
#include <fstream>
#include <set>

#include "gsp4/cli/cli.hpp"
#include "gsp4/errors.hpp"

namespace gsp4::cli {

using exact::Rational;

namespace {

constexpr std::pair<Command, const char*> kCommands[] = {
    {Command::RegionsClassify, "regions.classify"}, {Command::RegionsCritical, "regions.critical"},
    {Command::RegionsScan, "regions.scan"},         {Command::WeightsKappa, "weights.kappa"},
    {Command::WeightsBranch, "weights.branch"},     {Command::GroupVerify, "group.verify"},
    {Command::EulerCompute, "euler.compute"},       {Command::EulerAudit, "euler.audit"},
    {Command::ArchVerify, "arch.verify"},           {Command::ArchZeta, "arch.zeta"},
    {Command::ArchWhittaker, "arch.whittaker"},     {Command::ArchSiegel, "arch.siegel"},
    {Command::ArchShifts, "arch.shifts"},           {Command::ArchMoriyama, "arch.moriyama"},
};

std::vector<Rational> rational_list(const Json& v, const std::string& key) {
  if (!v.is_array()) throw SchemaError("config: " + key + " must be an array");
  std::vector<Rational> out;
  for (const auto& x : v) {
    try {
      out.push_back(Rational::parse(x.is_string() ? x.get<std::string>() : x.dump()));
    } catch (const DomainError&) {
      throw SchemaError("config: " + key + " holds a non-rational entry " + x.dump());
    }
  }
  return out;
}

template <class T>
T number(const Json& v, const std::string& key) {
  if (!v.is_number()) throw SchemaError("config: " + key + " must be a number");
  if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer()) throw SchemaError("config: " + key + " must be an integer");
  }
  return v.get<T>();
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [cmd, name] : kCommands)
    if (cmd == c) return name;
  return "?";
}

Command parse_command(const std::string& name) {
  for (const auto& [cmd, text] : kCommands)
    if (name == text) return cmd;
  throw SchemaError("unknown command '" + name + "'");
}

std::string to_string(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Tex: return "tex";
  }
  return "?";
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "tex") return Format::Tex;
  throw SchemaError("unknown format '" + name + "'");
}

std::string to_string(Mode m) { return m == Mode::Exact ? "exact" : "numeric"; }

Mode parse_mode(const std::string& name) {
  if (name == "exact") return Mode::Exact;
  if (name == "numeric") return Mode::Numeric;
  throw SchemaError("unknown mode '" + name + "'");
}

Settings default_settings() {
  Settings s;
  if (const char* env = std::getenv("GSP4_DIGITS"); env && *env) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0') throw SchemaError(std::string("GSP4_DIGITS is not an integer: '") + env + "'");
    s.digits = static_cast<int>(v);
  }
  return s;
}

void apply_config(Settings& s, const Json& doc) {
  if (!doc.is_object()) throw SchemaError("config: top level must be an object");
  for (const auto& [key, v] : doc.items()) {
    if (key == "digits") s.digits = number<int>(v, key);
    else if (key == "seed") s.seed = number<std::uint64_t>(v, key);
    else if (key == "arch") {
      if (!v.is_object()) throw SchemaError("config: arch must be an object");
      auto& a = s.arch;
      for (const auto& [k, x] : v.items()) {
        if (k == "spin_shifts") a.spin_shifts = rational_list(x, k);
        else if (k == "gl2_shifts") a.gl2_shifts = rational_list(x, k);
        else if (k == "tensor_shifts") a.tensor_shifts = rational_list(x, k);
        else if (k == "smooth_tol") a.smooth_tol = number<double>(x, k);
        else if (k == "oscillatory_tol") a.oscillatory_tol = number<double>(x, k);
        else if (k == "oscillatory_nodes") a.oscillatory_nodes = number<int>(x, k);
        else if (k == "oscillatory_min_periods") a.oscillatory_min_periods = number<int>(x, k);
        else if (k == "oscillatory_max_periods") a.oscillatory_max_periods = number<int>(x, k);
        else throw SchemaError("config: unknown key arch." + k);
      }
    } else {
      throw SchemaError("config: unknown key " + key);
    }
  }
}

void apply_config_file(Settings& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read config file " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("config file " + path + ": " + e.what());
  }
  apply_config(s, doc);
}

Mode default_mode(Command c) {
  switch (c) {
    case Command::ArchVerify:
    case Command::ArchZeta:
    case Command::ArchWhittaker:
    case Command::ArchSiegel:
      return Mode::Numeric;
    default:
      return Mode::Exact;
  }
}

JobSpec JobSpec::from_json(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("job must be a JSON object");
  static const std::set<std::string> allowed{"command", "inputs", "format", "precision", "mode"};
  for (const auto& [key, v] : doc.items())
    if (!allowed.count(key)) throw SchemaError("unknown job key '" + key + "'");
  JobSpec j;
  if (!doc.contains("command") || !doc["command"].is_string()) throw SchemaError("job needs a string 'command'");
  j.command = parse_command(doc["command"].get<std::string>());
  if (doc.contains("inputs")) {
    if (!doc["inputs"].is_object()) throw SchemaError("'inputs' must be an object");
    j.inputs = doc["inputs"];
  }
  if (doc.contains("format")) {
    if (!doc["format"].is_string()) throw SchemaError("'format' must be a string");
    j.format = parse_format(doc["format"].get<std::string>());
  }
  if (doc.contains("precision")) {
    if (!doc["precision"].is_number_integer()) throw SchemaError("'precision' must be an integer");
    j.precision = doc["precision"].get<int>();
  }
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) throw SchemaError("'mode' must be a string");
    j.mode = parse_mode(doc["mode"].get<std::string>());
  }
  return j;
}

Json JobSpec::to_json() const {
  Json out{{"command", to_string(command)}, {"inputs", inputs}, {"format", to_string(format)}};
  if (precision) out["precision"] = *precision;
  if (mode) out["mode"] = to_string(*mode);
  return out;
}

}  // namespace gsp4::cli
