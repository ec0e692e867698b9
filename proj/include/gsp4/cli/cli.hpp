#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsp4/arch/archimedean.hpp"

namespace gsp4::cli {

using Json = nlohmann::json;

/// Malformed job or input document. Exit status 2.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command {
  RegionsClassify,
  RegionsCritical,
  RegionsScan,
  WeightsKappa,
  WeightsBranch,
  GroupVerify,
  EulerCompute,
  EulerAudit,
  ArchVerify,
  ArchZeta,
  ArchWhittaker,
  ArchSiegel,
  ArchShifts,
  ArchMoriyama,
};

enum class Format { Json, Csv, Tex };
enum class Mode { Exact, Numeric };

std::string to_string(Command c);
Command parse_command(const std::string& name);
std::string to_string(Format f);
Format parse_format(const std::string& name);
std::string to_string(Mode m);
Mode parse_mode(const std::string& name);

/// Process-wide settings: defaults, then GSP4_DIGITS, then a config file,
/// then command-line flags.
struct Settings {
  int digits = 30;
  std::uint64_t seed = 20240611;
  arch::ArchConfig arch;
};

/// Defaults with GSP4_DIGITS applied when set. SchemaError if it is not an integer.
Settings default_settings();

/**
 * Overlays a JSON configuration file:
 *
 *   {
 *     "digits": 30,
 *     "seed": 7,
 *     "arch": {
 *       "spin_shifts": ["5/2", "1/2"], "gl2_shifts": [...], "tensor_shifts": [...],
 *       "smooth_tol": 1e-10, "oscillatory_tol": 1e-4, "oscillatory_nodes": 20,
 *       "oscillatory_min_periods": 32, "oscillatory_max_periods": 2048
 *     }
 *   }
 *
 * Every key is optional; unknown keys are a SchemaError.
 */
void apply_config(Settings& s, const Json& doc);
void apply_config_file(Settings& s, const std::string& path);

struct JobSpec {
  Command command = Command::RegionsClassify;
  Json inputs = Json::object();
  Format format = Format::Json;
  std::optional<int> precision;
  std::optional<Mode> mode;

  /// {"command": "...", "inputs": {...}, "format": "json", "precision": 30, "mode": "exact"}
  static JobSpec from_json(const Json& doc);
  Json to_json() const;
};

/// Mode used when the job does not set one: numeric for arch.*, exact otherwise.
Mode default_mode(Command c);

/// Executes a job. The returned document has sorted keys and canonical
/// scalars: exact rationals as strings, numeric values as decimal strings with
/// the job's precision, relative errors as JSON numbers.
/// Throws SchemaError, DomainError or NumericFailure.
Json run(const JobSpec& job, const Settings& settings);

/// Renders a result in the job's format. Commands with a list result
/// (see table_key) become tables; others become a single row of their
/// top-level keys.
std::string emit(const Json& result, Command command, Format format);

/// Key of the row list for list-valued commands ("rows", "summands",
/// "solutions", "samples"), empty for the others.
std::string table_key(Command command);
/// Columns used for a command's table, so an empty row list still has a header.
std::vector<std::string> table_columns(Command command, const Json& result);
std::string emit_csv(const std::vector<std::string>& columns, const Json& rows);
std::string emit_tex(const std::vector<std::string>& columns, const Json& rows);

/// 0 on success, 2 SchemaError, 3 DomainError, 4 NumericFailure, 1 otherwise.
int exit_code(const std::exception& e);

struct Outcome {
  int status = 0;
  /// Result document on success, {"error": {...}} otherwise.
  Json document;
  std::string text;
};

/// run + emit, with errors captured as an Outcome.
Outcome execute(const JobSpec& job, const Settings& settings);

/// Runs jobs concurrently on at most `threads` workers; outcomes keep input order.
std::vector<Outcome> run_batch(const std::vector<JobSpec>& jobs, const Settings& settings, unsigned threads = 0);

}  // namespace gsp4::cli
