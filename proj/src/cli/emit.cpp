#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

#include "gsp4/cli/cli.hpp"

namespace gsp4::cli {

namespace {

std::string cell_text(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : " ") + cell_text(x);
    return out;
  }
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string tex_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '\\': out += "\\textbackslash{}"; break;
      case '{': out += "\\{"; break;
      case '}': out += "\\}"; break;
      case '&': out += "\\&"; break;
      case '%': out += "\\%"; break;
      case '$': out += "\\$"; break;
      case '#': out += "\\#"; break;
      case '_': out += "\\_"; break;
      case '^': out += "\\^{}"; break;
      case '~': out += "\\~{}"; break;
      default: out += ch;
    }
  }
  return out;
}

// Column headings in the style of the region table.
std::string tex_heading(const std::string& column) {
  if (column == "ell") return "$\\ell$";
  if (column == "region") return "Region";
  if (column == "d_minus") return "$D^-$";
  if (column == "m") return "$m$";
  if (column == "w") return "$w$";
  if (column == "critical") return "critical $s$";
  return "\\texttt{" + tex_escape(column) + "}";
}

std::string tex_cell(const std::string& column, const Json& v) {
  if (column == "d_minus" && v.is_boolean()) return v.get<bool>() ? "$\\checkmark$" : "";
  if (column == "m" && v.is_null()) return "--";
  return tex_escape(cell_text(v));
}

}  // namespace

std::string table_key(Command command) {
  switch (command) {
    case Command::RegionsScan: return "rows";
    case Command::WeightsBranch: return "summands";
    case Command::EulerAudit: return "solutions";
    case Command::ArchVerify: return "samples";
    default: return "";
  }
}

std::vector<std::string> table_columns(Command command, const Json& result) {
  switch (command) {
    case Command::RegionsScan: return {"ell", "region", "d_minus", "m", "w", "critical"};
    case Command::WeightsBranch: return {"first", "second"};
    case Command::EulerAudit: return {"shift", "beta0", "gamma0", "matched_roots"};
    case Command::ArchVerify: return {"s", "lhs", "rhs", "rel_err"};
    default: break;
  }
  std::vector<std::string> cols;
  if (result.is_object())
    for (const auto& [key, v] : result.items()) cols.push_back(key);
  return cols;
}

std::string emit_csv(const std::vector<std::string>& columns, const Json& rows) {
  std::ostringstream out;
  for (std::size_t j = 0; j < columns.size(); ++j) out << (j ? "," : "") << csv_escape(columns[j]);
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < columns.size(); ++j)
      out << (j ? "," : "") << csv_escape(row.contains(columns[j]) ? cell_text(row[columns[j]]) : "");
    out << "\n";
  }
  return out.str();
}

std::string emit_tex(const std::vector<std::string>& columns, const Json& rows) {
  std::ostringstream out;
  out << "\\begin{tabular}{|" << std::string(columns.size(), 'c') << "|}\n\\hline\n";
  for (std::size_t j = 0; j < columns.size(); ++j) out << (j ? " & " : "") << tex_heading(columns[j]);
  out << " \\\\\n\\hline\n";
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < columns.size(); ++j)
      out << (j ? " & " : "") << (row.contains(columns[j]) ? tex_cell(columns[j], row[columns[j]]) : "");
    out << " \\\\\n";
  }
  out << "\\hline\n\\end{tabular}\n";
  return out.str();
}

std::string emit(const Json& result, Command command, Format format) {
  if (format == Format::Json) return result.dump(2) + "\n";
  std::string key = table_key(command);
  auto columns = table_columns(command, result);
  Json rows = Json::array();
  if (!key.empty()) rows = result.value(key, Json::array());
  else rows.push_back(result);
  return format == Format::Csv ? emit_csv(columns, rows) : emit_tex(columns, rows);
}

std::vector<Outcome> run_batch(const std::vector<JobSpec>& jobs, const Settings& settings, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Outcome> out(jobs.size());
  for (std::size_t start = 0; start < jobs.size(); start += threads) {
    std::size_t stop = std::min(jobs.size(), start + threads);
    std::vector<std::future<Outcome>> wave;
    for (std::size_t k = start; k < stop; ++k)
      wave.push_back(std::async(std::launch::async, [&, k] { return execute(jobs[k], settings); }));
    for (std::size_t k = start; k < stop; ++k) out[k] = wave[k - start].get();
  }
  return out;
}

}  // namespace gsp4::cli
