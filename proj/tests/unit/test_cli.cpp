#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gen.hpp"
#include "gsp4/cli/cli.hpp"
#include "gsp4/errors.hpp"

using namespace gsp4;
using namespace gsp4::cli;

namespace {

JobSpec job(Command c, Json inputs, Format f = Format::Json) {
  JobSpec j;
  j.command = c;
  j.inputs = std::move(inputs);
  j.format = f;
  return j;
}

// One representative job per command.
std::vector<JobSpec> every_command() {
  return {
      job(Command::RegionsClassify, {{"k1", 4}, {"k2", 4}, {"ell", 4}, {"s", "1"}}),
      job(Command::RegionsCritical, {{"k1", 6}, {"k2", 3}, {"ell", 2}}),
      job(Command::RegionsScan, {{"k1", 4}, {"k2", 4}, {"ell_max", 9}}),
      job(Command::WeightsKappa, {{"i", 2}, {"r1", 3}, {"r2", 1}}),
      job(Command::WeightsBranch, {{"k1", 5}, {"k2", 3}}),
      job(Command::GroupVerify, {{"identity", "decomposition"}}),
      job(Command::GroupVerify, {{"identity", "open_orbit"}, {"samples", 5}}),
      job(Command::EulerCompute, {{"factor", "euler_D"}}),
      job(Command::EulerCompute, {{"factor", "iwahori_value"}, {"ell", 3}}),
      job(Command::EulerAudit, Json::object()),
      job(Command::ArchVerify, {{"region", "D"}, {"k1", 6}, {"k2", 4}, {"c1", 2}, {"c2", 6},
                                {"samples", {"3.1+0.7i", "2.3", "-1/2-2i"}}}),
      job(Command::ArchZeta, {{"region", "F"}, {"k1", 5}, {"k2", 3}, {"c1", 3}, {"c2", 1}, {"s", "3/2"}}),
      job(Command::ArchWhittaker, {{"c", 1}}),
      job(Command::ArchSiegel, {{"c", 3}, {"s", "1"}}),
      job(Command::ArchShifts, {{"k1", 6}, {"k2", 4}, {"ell", 6}}),
      job(Command::ArchMoriyama, {{"r1", 4}, {"r2", 2}, {"k", 3}}),
  };
}

// Checks {}, [] and \begin/\end nesting.
bool tex_balanced(const std::string& tex) {
  std::vector<std::string> stack;
  for (std::size_t i = 0; i < tex.size(); ++i) {
    char ch = tex[i];
    if (ch == '\\' && i + 1 < tex.size() && std::string("{}[]&%$#_\\").find(tex[i + 1]) != std::string::npos) {
      if (tex[i + 1] == '\\') {
        ++i;
        continue;
      }
      ++i;
      continue;
    }
    for (const char* env : {"\\begin{", "\\end{"}) {
      std::string tag(env);
      if (tex.compare(i, tag.size(), tag) == 0) {
        auto close = tex.find('}', i + tag.size());
        if (close == std::string::npos) return false;
        std::string name = tex.substr(i + tag.size(), close - i - tag.size());
        if (tag == "\\begin{") {
          stack.push_back("env:" + name);
        } else {
          if (stack.empty() || stack.back() != "env:" + name) return false;
          stack.pop_back();
        }
        i = close;
        ch = 0;
        break;
      }
    }
    if (ch == '{' || ch == '[') stack.push_back(std::string(1, ch));
    if (ch == '}' || ch == ']') {
      if (stack.empty() || stack.back() != std::string(1, ch == '}' ? '{' : '[')) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

std::string temp_file(const std::string& name, const std::string& body) {
  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("documented command examples") {
  auto classify = run(every_command()[0], default_settings());
  CHECK(classify == Json{{"region", "D"}, {"d_minus", true}, {"m", 8}, {"w", 8}});
  CHECK(emit(classify, Command::RegionsClassify, Format::Json) ==
        "{\n  \"d_minus\": true,\n  \"m\": 8,\n  \"region\": \"D\",\n  \"w\": 8\n}\n");

  auto branch = run(job(Command::WeightsBranch, {{"k1", 5}, {"k2", 3}}), default_settings());
  CHECK(branch["count"] == 5);
  CHECK(branch["summands"].size() == 5);

  auto group = run(job(Command::GroupVerify, {{"identity", "decomposition"}}), default_settings());
  CHECK(group["status"] == "pass");
  CHECK(group["certificate"]["lhs"].size() == 4);
  CHECK(group["certificate"]["lhs"] == group["certificate"]["rhs"]);
}

TEST_CASE("json round trip for every command") {
  auto settings = default_settings();
  for (const auto& j : every_command()) {
    CAPTURE(to_string(j.command));
    auto doc = run(j, settings);
    CHECK(Json::parse(emit(doc, j.command, Format::Json)) == doc);
    CHECK(JobSpec::from_json(j.to_json()).to_json() == j.to_json());
  }
}

TEST_CASE("identical jobs give byte-identical output") {
  auto settings = default_settings();
  for (const auto& j : every_command()) {
    CAPTURE(to_string(j.command));
    CHECK(execute(j, settings).text == execute(j, settings).text);
  }
}

TEST_CASE("exit statuses") {
  auto settings = default_settings();
  auto status = [&](const JobSpec& j) { return execute(j, settings).status; };

  CHECK(status(job(Command::RegionsClassify, {{"k1", 4}, {"k2", 4}, {"ell", 4}})) == 2);
  CHECK(status(job(Command::RegionsClassify, {{"k1", 4}, {"k2", 4}, {"ell", 4}, {"s", "1"}, {"x", 1}})) == 2);
  CHECK(status(job(Command::RegionsClassify, {{"k1", "four"}, {"k2", 4}, {"ell", 4}, {"s", "1"}})) == 2);
  CHECK(status(job(Command::GroupVerify, {{"identity", "neither"}})) == 2);
  CHECK(status(job(Command::EulerCompute, {{"factor", "nope"}})) == 2);

  // Inner-module domain errors.
  CHECK(status(job(Command::RegionsClassify, {{"k1", 2}, {"k2", 4}, {"ell", 4}, {"s", "1"}})) == 3);
  CHECK(status(job(Command::WeightsKappa, {{"i", 5}, {"r1", 3}, {"r2", 1}})) == 3);
  CHECK(status(job(Command::ArchZeta, {{"region", "F"}, {"k1", 7}, {"k2", 3}, {"c1", 3}, {"c2", 4}, {"s", "1"}})) ==
        3);

  // Numeric failure: a budget too small for the oscillatory integral.
  Settings tight = settings;
  tight.arch.oscillatory_tol = 1e-14;
  tight.arch.oscillatory_max_periods = 64;
  CHECK(execute(job(Command::ArchWhittaker, {{"c", 1}}), tight).status == 4);

  auto err = execute(job(Command::WeightsKappa, {{"i", 5}, {"r1", 3}, {"r2", 1}}), settings);
  CHECK(err.document["error"]["class"] == "DomainError");
  CHECK(err.document["error"]["exit"] == 3);
}

TEST_CASE("job invariants on mode and precision") {
  auto settings = default_settings();
  auto j = job(Command::ArchZeta, {{"region", "F"}, {"k1", 5}, {"k2", 3}, {"c1", 3}, {"c2", 1}, {"s", "3/2"}});
  j.precision = 14;
  CHECK(execute(j, settings).status == 2);
  j.precision = 15;
  CHECK(execute(j, settings).status == 0);

  auto c = job(Command::RegionsClassify, {{"k1", 4}, {"k2", 4}, {"ell", 4}, {"s", "1/3"}});
  c.mode = Mode::Exact;
  CHECK(execute(c, settings).status == 2);

  CHECK_THROWS_AS(JobSpec::from_json(Json{{"command", "regions.classify"}, {"bogus", 1}}), SchemaError);
  CHECK_THROWS_AS(JobSpec::from_json(Json{{"command", "no.such"}}), SchemaError);
  CHECK_THROWS_AS(JobSpec::from_json(Json{{"command", "arch.zeta"}, {"precision", "30"}}), SchemaError);
}

TEST_CASE("region scan tables") {
  auto doc = run(job(Command::RegionsScan, {{"k1", 4}, {"k2", 4}, {"ell_max", 9}}), default_settings());
  std::string csv = emit(doc, Command::RegionsScan, Format::Csv);
  std::istringstream lines(csv);
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == "ell,region,d_minus,m,w,critical");
  const char* expected[] = {"F", "None", "D", "D", "D", "None", "A", "A", "A"};
  for (int ell = 1; ell <= 9; ++ell) {
    CAPTURE(ell);
    CHECK(rows[ell].rfind(std::to_string(ell) + "," + expected[ell - 1] + ",", 0) == 0);
  }

  std::string tex = emit(doc, Command::RegionsScan, Format::Tex);
  CHECK(tex_balanced(tex));
  CHECK(tex.find("$\\ell$ & Region & $D^-$ & $m$ & $w$") != std::string::npos);
}

TEST_CASE("empty list gives a header-only table") {
  CHECK(emit_csv({"a", "b"}, Json::array()) == "a,b\n");
  Json doc{{"k1", 4}, {"k2", 4}, {"rows", Json::array()}};
  CHECK(emit(doc, Command::RegionsScan, Format::Csv) == "ell,region,d_minus,m,w,critical\n");
  CHECK(tex_balanced(emit(doc, Command::RegionsScan, Format::Tex)));
}

TEST_CASE("tex output is balanced for every command") {
  auto settings = default_settings();
  for (auto j : every_command()) {
    CAPTURE(to_string(j.command));
    j.format = Format::Tex;
    auto out = execute(j, settings);
    REQUIRE(out.status == 0);
    CHECK(tex_balanced(out.text));
  }
  CHECK(tex_balanced(emit_tex({"x_1", "{y}"}, Json::array({Json{{"x_1", "a&b}"}, {"{y}", "$\\"}}}))));
}

TEST_CASE("bracket checker rejects unbalanced text") {
  CHECK_FALSE(tex_balanced("{"));
  CHECK_FALSE(tex_balanced("\\begin{tabular}{cc}\\end{table}"));
  CHECK_FALSE(tex_balanced("[}"));
  CHECK(tex_balanced("\\{ \\[ {a}"));
}

TEST_CASE("csv escaping") {
  auto out = emit_csv({"v"}, Json::array({Json{{"v", "a,b"}}, Json{{"v", "say \"hi\""}}}));
  CHECK(out == "v\n\"a,b\"\n\"say \"\"hi\"\"\"\n");
}

TEST_CASE("batch keeps input order") {
  testgen::Gen g(77);
  std::vector<JobSpec> jobs;
  std::vector<Json> expected;
  auto settings = default_settings();
  for (int n = 0; n < 24; ++n) {
    long k2 = g.integer(2, 8), k1 = g.integer(k2, 10);
    jobs.push_back(job(Command::WeightsBranch, {{"k1", k1}, {"k2", k2}}));
    if (n % 5 == 0) jobs.back().inputs["k1"] = 1;  // sprinkle failures
    expected.push_back(execute(jobs.back(), settings).document);
  }
  for (unsigned threads : {1u, 3u, 8u}) {
    auto got = run_batch(jobs, settings, threads);
    REQUIRE(got.size() == jobs.size());
    for (std::size_t k = 0; k < jobs.size(); ++k) CHECK(got[k].document == expected[k]);
  }
}

TEST_CASE("settings precedence") {
  ::unsetenv("GSP4_DIGITS");
  CHECK(default_settings().digits == 30);
  ::setenv("GSP4_DIGITS", "42", 1);
  CHECK(default_settings().digits == 42);

  auto s = default_settings();
  apply_config(s, Json{{"digits", 20}, {"seed", 9}});
  CHECK(s.digits == 20);
  CHECK(s.seed == 9);
  ::setenv("GSP4_DIGITS", "x", 1);
  CHECK_THROWS_AS(default_settings(), SchemaError);
  ::unsetenv("GSP4_DIGITS");

  // The job's own precision beats the settings.
  auto j = job(Command::ArchSiegel, {{"c", 2}, {"s", "1/3"}});
  auto at = [&](int digits) {
    Settings t = default_settings();
    t.digits = digits;
    return run(j, t)["value"]["re"].get<std::string>();
  };
  CHECK(at(20) != at(40));
  j.precision = 20;
  CHECK(at(40) == at(20));

  CHECK_THROWS_AS(apply_config(s, Json{{"digts", 20}}), SchemaError);
  CHECK_THROWS_AS(apply_config(s, Json{{"arch", {{"smooth", 1}}}}), SchemaError);
  CHECK_THROWS_AS(apply_config(s, Json{{"digits", 2.5}}), SchemaError);
  CHECK_THROWS_AS(apply_config(s, Json{{"arch", {{"spin_shifts", {"x"}}}}}), SchemaError);
}

TEST_CASE("config file overrides shift recipes") {
  auto path = temp_file("gsp4_cli_test_config.json",
                        R"({"arch": {"spin_shifts": ["1/2", "9/2"], "tensor_shifts": [1, 2, 3, 4]}})");
  auto s = default_settings();
  apply_config_file(s, path);
  auto doc = run(job(Command::ArchShifts, {{"k1", 6}, {"k2", 4}, {"ell", 6}}), s);
  CHECK(doc["spin"] == Json::array({"9/2", "1/2"}));
  CHECK(doc["tensor"] == Json::array({"4", "3", "2", "1"}));
  auto base = run(job(Command::ArchShifts, {{"k1", 6}, {"k2", 4}, {"ell", 6}}), default_settings());
  CHECK(doc["gl2"] == base["gl2"]);
  CHECK(base["spin"] == Json::array({"7/2", "3/2"}));
  std::remove(path.c_str());

  auto bad = temp_file("gsp4_cli_test_bad.json", "{ not json");
  CHECK_THROWS_AS(apply_config_file(s, bad), SchemaError);
  std::remove(bad.c_str());
  CHECK_THROWS_AS(apply_config_file(s, "/nonexistent/gsp4.json"), SchemaError);
}

TEST_CASE("arch verify reports the identity") {
  auto doc = run(every_command()[10], default_settings());
  CHECK(doc["holds"] == true);
  CHECK(doc["symbolic_equal"] == true);
  CHECK(doc["samples"].size() == 3);
  CHECK(doc["max_rel_err"].get<double>() < 1e-20);
  auto csv = emit(doc, Command::ArchVerify, Format::Csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("euler bindings accept symbol aliases") {
  auto a = run(job(Command::EulerCompute, {{"factor", "euler_D"}, {"bindings", {{"β", "2"}}}}), default_settings());
  auto b = run(job(Command::EulerCompute, {{"factor", "euler_D"}, {"bindings", {{"beta", "2"}}}}), default_settings());
  CHECK(a == b);
  CHECK(a["degree"] == 8);
}
