// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "monideal/commands.hpp"
#include "monideal/error.hpp"
#include "monideal/expression.hpp"
#include "monideal/limits.hpp"
#include "support.hpp"

using namespace monideal;
using test::ideal_of;

namespace {

CommandResult run(const std::string& verb, std::optional<std::string> target, std::optional<std::string> spec = {},
                  CommandOptions options = {}) {
  return run_command(verb, target, spec, options);
}

CommandOptions json_options() {
  CommandOptions o;
  o.format = Format::json;
  return o;
}

// Runs the installed binary and returns (exit code, stdout).
std::pair<int, std::string> run_binary(const std::string& args, const std::string& input = "") {
  std::string cmd = std::string(MONIDEAL_CLI_PATH) + " " + args + " 2>/dev/null";
  if (!input.empty()) cmd = "printf '%s' '" + input + "' | " + cmd;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("parse literals and constructors") {
  CHECK(ideal_of("ideal(x1*x2^2, x1^2*x2)").size() == 2);
  CHECK(ideal_of("V(3; 2,2)") == veronese_type({{2, 2}, 3}));
  CHECK(ideal_of("capped_veronese_gmp(2,2,7)") == capped_veronese_gmp(2, 2, 7));
  CHECK(ideal_of("transversal([[1,2],[2,3]])") == ideal_of("prime(x1,x2)*prime(x2,x3)"));
  CHECK(ideal_of("gmp(ideal(x1^2, x1*x2, x2^2); veronese; 2,2)") ==
        transversal_build({2, {{0, 1}, {0, 1}}, {2, 2}}));
  CHECK(ideal_of("ring(2,2); ideal(x11*x21)").ring()->total_vars() == 4);
  CHECK(ideal_of("0").is_zero());
  CHECK(ideal_of("1").is_unit());
  // Precedence: ^ binds tighter than *, * than &, & than +.
  CHECK(ideal_of("ideal(x1) + ideal(x2) * ideal(x3)") == ideal_of("ideal(x1, x2*x3)"));
  CHECK(ideal_of("ideal(x1) + ideal(x2) & ideal(x3)") == ideal_of("ideal(x1, x2*x3)"));
  CHECK(ideal_of("ideal(x1) * ideal(x2)^2") == ideal_of("ideal(x1*x2^2)"));
  CHECK(ideal_of("# comment\nideal(x1)  # trailing\n") == ideal_of("ideal(x1)"));
}

TEST_CASE("syntax errors carry line and column") {
  try {
    (void)parse("ideal(x1,\n  x2*)");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() >= 5);
  }
  CHECK_THROWS_AS(parse("ideal(x1"), SyntaxError);
  CHECK_THROWS_AS(parse("ideal(x1) +"), SyntaxError);
  CHECK_THROWS_AS(parse("foo(x1)"), SyntaxError);
  CHECK_THROWS_AS(parse("ideal(x1)^"), SyntaxError);
}

TEST_CASE("print round-trips through parse") {
  const std::vector<std::string> inputs = {
      "ideal(x1*x2^2, x1^2*x2)", "capped_veronese_gmp(2,2,4)", "transversal([[1,2],[1,2,3,4],[3,5],[4,5]]; 2,1,1,1,1)",
      "0", "1", "ring(3,1); ideal(x11^3*x21, x13)", "prime(x1,x3)^3",
  };
  for (const auto& text : inputs) {
    CAPTURE(text);
    const MonomialIdeal i = ideal_of(text);
    const std::string printed = print(i);
    CHECK(ideal_of(printed) == i);
    CHECK(print(ideal_of(printed)) == printed);
  }
  CHECK(print(ideal_of("ideal(x1*x2)")) == "ring(1,1); ideal(x1*x2)");
}

TEST_CASE("transversal descriptions parse back") {
  for (const auto& spec : shipped_transversal_specs()) {
    const Instance inst = evaluate(describe(spec));
    REQUIRE(inst.transversal.has_value());
    CHECK(inst.ideal == transversal_build(spec));
  }
}

TEST_CASE("commands produce text") {
  const CommandResult ass = run("ass", std::nullopt, std::string("capped_veronese_gmp(2,2,7)"));
  CHECK(ass.exit_code == exit_ok);
  CHECK(ass.out.find("(x12, x22)") != std::string::npos);

  CHECK(run("reg", std::nullopt, std::string("capped_veronese_gmp(2,2,4)"), [] {
          CommandOptions o;
          o.k = 2;
          return o;
        }()).out == "8\n");
  CHECK(run("mindec", std::string("ideal(x1*x2^2, x1^2*x2)")).out == "(x1)\n(x2)\n(x1^2, x2^2)\n");
  CHECK(run("height", std::string("capped_veronese_gmp(2,2,3)")).out == "2\n");
  CHECK(run("dim", std::string("capped_veronese_gmp(2,2,3)")).out == "2\n");
  CHECK(run("unmixed", std::string("capped_veronese_gmp(2,2,3)")).out == "true\n");
  CHECK(run("linquot", std::string("capped_veronese_gmp(2,2,3)")).out == "true\n");
  CHECK(run("linres", std::string("capped_veronese_gmp(2,2,3)")).out == "true\n");
  CHECK(run("depth", std::string("prime(x1,x2)*prime(x3,x4)")).out == "1\n");
  CHECK(run("ell", std::string("transversal([[1,2],[2,3]])")).out == "3\n");
  CHECK(run("bracket", std::string("prime(x1,x2)")).out == "ring(1,1); ideal(x1^2, x2^2)\n");
  CHECK(run("eval", std::string("prime(x1,x2)^2")).out == "ring(1,1); ideal(x1^2, x1*x2, x2^2)\n");
  CHECK(run("astab", std::string("transversal([[1,2],[2,3]])")).out.rfind("astab = 1\n", 0) == 0);
  CHECK(run("dstab", std::string("transversal([[1,2],[2,3]])")).out.rfind("dstab = 1\n", 0) == 0);
  CHECK(run("primdec", std::string("ideal(x1*x2^2, x1^2*x2)")).exit_code == exit_ok);
  CHECK(run("betti", std::string("prime(x1,x2)")).out.find("beta_1,2 = 1") != std::string::npos);
}

TEST_CASE("JSON output is versioned and stable") {
  const CommandResult a = run("ass", std::string("capped_veronese_gmp(2,2,7)"), std::nullopt, json_options());
  const Json j = Json::parse(a.out);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "ass");
  CHECK(j["primes"].size() == 10);
  CHECK(j["primes"][4] == Json::array({"x11", "x12"}));
  CHECK(run("ass", std::string("capped_veronese_gmp(2,2,7)"), std::nullopt, json_options()).out == a.out);

  const Json b = Json::parse(run("betti", std::string("prime(x1,x2)"), std::nullopt, json_options()).out);
  CHECK(b["entries"].size() == 3);
  CHECK(b["field"] == "QQ");
}

TEST_CASE("verify returns pass/fail with the report schema") {
  CommandOptions o = json_options();
  o.k = 2;
  const CommandResult r = run("verify", std::string("decomposition-theorem"),
                              std::string("transversal([[1,2],[2,3]])"), o);
  CHECK(r.exit_code == exit_ok);
  const Json j = Json::parse(r.out);
  CHECK(j["scenario"] == "decomposition-theorem");
  CHECK(j["passes"] == 1);
  CHECK(j["failures"].empty());
  CHECK(j["grid"].size() == 1);

  CHECK(run("verify", std::string("ass-theorem")).exit_code == exit_ok);
  CHECK(run("verify", std::string("cm-check")).exit_code == exit_ok);
  CHECK(scenario_names().size() == 10);
}

TEST_CASE("errors map to exit codes") {
  CHECK(run("verify", std::string("no-such-theorem")).exit_code == exit_usage);
  CHECK(run("ass", std::string("ideal(x1")).exit_code == exit_usage);
  CHECK(run("ass", std::string("ideal(x1")).err.find("1:9") != std::string::npos);
  CHECK(run("frobnicate", std::string("ideal(x1)")).exit_code == exit_usage);
  CHECK(run("ass", std::nullopt).exit_code == exit_usage);
  CHECK(run("ell", std::string("ideal(x1*x2)")).exit_code == exit_usage);
  CHECK(run("verify", std::string("ass-theorem"), std::string("transversal([[1,2]])")).exit_code == exit_usage);
  CHECK(run("mindec", std::string("0")).exit_code == exit_usage);

  CommandOptions strict;
  strict.strict = true;
  CHECK(run("ass", std::string("capped_veronese_gmp(2,2,5)"), std::nullopt, strict).exit_code == exit_usage);
  CHECK(run("ass", std::string("capped_veronese_gmp(2,2,5)"), std::nullopt, strict).err.find("Condition5Violation") !=
        std::string::npos);

  const std::size_t saved = limits().max_witness_box;
  limits().max_witness_box = 10;
  CHECK(run("verify", std::string("ass-theorem")).exit_code == exit_resource);
  limits().max_witness_box = saved;
}

TEST_CASE("spec files") {
  const auto dir = std::filesystem::temp_directory_path() / "monideal_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "poly.json";
  {
    std::ofstream out(path);
    out << R"({"kind": "transversal", "subsets": [[1,2],[1,2,3,4],[3,5],[4,5]], "blocks": [2,1,1,1,1]})";
  }
  const Instance inst = load_target(path.string());
  CHECK(inst.provenance == Provenance::transversal);
  CHECK(inst.ideal == transversal_build({5, {{0, 1}, {0, 1, 2, 3}, {2, 4}, {3, 4}}, {2, 1, 1, 1, 1}}));
  CHECK(run("verify", std::string("astab-theorem"), path.string()).exit_code == exit_ok);

  const auto bad = dir / "bad.json";
  {
    std::ofstream out(bad);
    out << "{ not json";
  }
  CHECK(run("ass", bad.string()).exit_code == exit_usage);
  std::filesystem::remove_all(dir);
}

TEST_CASE("the binary honours exit codes and stdin") {
  CHECK(run_binary("reg --spec 'capped_veronese_gmp(2,2,4)' --k 2") == std::pair<int, std::string>{0, "8\n"});
  CHECK(run_binary("frobnicate").first == exit_usage);
  CHECK(run_binary("ass 'ideal(x1'").first == exit_usage);
  CHECK(run_binary("verify power-theorem --spec 'capped_veronese_gmp(2,2,3)' --format json").first == exit_ok);
  CHECK(run_binary("height < /dev/null").first == exit_usage);
  CHECK(run_binary("--field 7 betti 'prime(x1,x2)'").first == exit_ok);
  CHECK(run_binary("betti 'prime(x1,x2)' --field p=8").first == exit_usage);
  CHECK(run_binary("ass --max-witness-box 5 'ideal(x1^9*x2^9)'").first == exit_ok);
  const auto piped = run_binary("eval", "prime(x1,x2)*prime(x2,x3)");
  CHECK(piped == std::pair<int, std::string>{0, "ring(1,1,1); ideal(x1*x2, x1*x3, x2^2, x2*x3)\n"});
}
