#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "invlim/json_io.hpp"
#include "invlim/report.hpp"

using namespace invlim;

namespace {

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

const char* tool_path() {
  const char* p = std::getenv("INVLIM_TOOL");
  REQUIRE_MESSAGE(p != nullptr, "INVLIM_TOOL must point at the binary");
  return p;
}

/* run the tool with `input` piped to stdin, capture stdout */
RunResult run_tool(const std::string& args, const std::string& input,
                   const std::string& extra_env = "") {
  static int serial = 0;
  std::string in_file = "/tmp/invlim_cli_" + std::to_string(getpid()) + "_" +
                        std::to_string(serial++) + ".json";
  std::FILE* f = std::fopen(in_file.c_str(), "w");
  REQUIRE(f != nullptr);
  std::fwrite(input.data(), 1, input.size(), f);
  std::fclose(f);

  std::string cmd = extra_env + " \"" + std::string(tool_path()) + "\" " +
                    args + " < " + in_file + " 2>/dev/null";
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  int status = pclose(pipe);
  std::remove(in_file.c_str());
  int code = -1;
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
  return {code, out};
}

Report parse_report(const std::string& text) {
  return Report::from_json(Json::parse(text), "$");
}

const char* kCyclic6 = R"({"ngens": 1, "relations": [["6"]]})";
const char* kFreeZ = R"({"ngens": 1, "relations": []})";

}  // namespace

TEST_CASE("matrix diagonalization through the tool") {
  RunResult r = run_tool("snf --seed 3", R"([["2","4"],["6","8"]])");
  CHECK(r.exit_code == 0);
  Report rep = parse_report(r.stdout_text);
  CHECK(rep.command == "snf");
  CHECK(rep.seed == 3);
  CHECK(rep.all_pass());
  CHECK(rep.artifact.at("s").at(0).at(0) == "2");
  CHECK(rep.artifact.at("s").at(1).at(1) == "4");
}

TEST_CASE("presentation build emits the full document") {
  RunResult r = run_tool("hull --samples 20", kCyclic6);
  CHECK(r.exit_code == 0);
  Report rep = parse_report(r.stdout_text);
  CHECK(rep.all_pass());
  CHECK(rep.artifact.contains("input"));
  CHECK(rep.artifact.contains("m_shape"));
  CHECK(rep.artifact.contains("e"));
  CHECK(rep.artifact.contains("f"));
}

TEST_CASE("intersection suite on the integers presentation") {
  RunResult r = run_tool("thm1 --seed 7 --samples 40", kFreeZ);
  CHECK(r.exit_code == 0);
  Report rep = parse_report(r.stdout_text);
  CHECK(rep.command == "thm1");
  CHECK(rep.all_pass());
  bool found = false;
  for (const Check& c : rep.checks)
    found = found || c.name.find("exhaustive_agreement") != std::string::npos;
  CHECK(found);
}

TEST_CASE("surjective-stage and collapse suites run end to end") {
  CHECK(run_tool("thm2 --samples 15 --stages 2 --seed 5", kCyclic6).exit_code ==
        0);
  CHECK(run_tool("zerolim --samples 6 --stages 4 --seed 5", kCyclic6)
            .exit_code == 0);
}

TEST_CASE("ladder transcript over a chain document") {
  ModuleShape s({Family{"v", Atom::rationals_mod_one(), Extent::finite(1)}});
  Json doc{
      {"stages", Json::array({shape_to_json(s), shape_to_json(s),
                              shape_to_json(s), shape_to_json(s)})},
      {"maps",
       Json::array({hom_to_json(hom_mult_int(s, Integer(2))),
                    hom_to_json(hom_mult_int(s, Integer(2))),
                    hom_to_json(hom_mult_int(s, Integer(2)))})},
      {"f0_image",
       element_to_json(single_coord_element(
           s, 0, 0, Rational(Integer(1), Integer(3))))}};
  RunResult r = run_tool("ladder --k 3 --primes 2 --seed 1", doc.dump());
  CHECK(r.exit_code == 0);
  Report rep = parse_report(r.stdout_text);
  CHECK(rep.all_pass());
  const Json& images = rep.artifact.at("generator_images");
  REQUIRE(images.size() == 4);
  CHECK(images.at(3).at("coords").at(0).at(2) == "1/192");
}

TEST_CASE("divisibility chain is printed with its indices") {
  RunResult r = run_tool("bigdiv --primes 2 --primes 3 --k 2", "");
  CHECK(r.exit_code == 0);
  Report rep = parse_report(r.stdout_text);
  CHECK(rep.all_pass());
  CHECK(rep.artifact.at("generators") ==
        Json::array({"1", "1/2", "1/36"}));
  CHECK(rep.artifact.at("inclusion_indices") == Json::array({"2", "18"}));
}

TEST_CASE("non-divisible sequence is refused with a witness") {
  RunResult r = run_tool("ex6 --k 2 --stages 2",
                         R"({"head": [], "tail": "1"})");
  CHECK(r.exit_code == 0);
  Report rep = parse_report(r.stdout_text);
  CHECK(rep.all_pass());
  bool saw_refutation_law = false;
  for (const Check& c : rep.checks)
    saw_refutation_law =
        saw_refutation_law ||
        c.name.find("division_law") != std::string::npos;
  CHECK(saw_refutation_law);
}

TEST_CASE("input errors exit with code two") {
  CHECK(run_tool("hull", "").exit_code == 2);
  CHECK(run_tool("hull", "{not json").exit_code == 2);
  CHECK(run_tool("hull --no-such-flag", kCyclic6).exit_code == 2);
  CHECK(run_tool("snf", R"([["1","2"],["3"]])").exit_code == 2);
}

TEST_CASE("failing checks exit with code one") {
  /* a non-surjective chain map surfaces as a failed check, not a crash */
  ModuleShape s({Family{"v", Atom::rationals_mod_one(), Extent::finite(1)}});
  Json doc{{"stages", Json::array({shape_to_json(s), shape_to_json(s)})},
           {"maps", Json::array({hom_to_json(hom_zero(s, s))})},
           {"f0_image", element_to_json(single_coord_element(
                            s, 0, 0, Rational(Integer(1), Integer(3))))}};
  RunResult r = run_tool("ladder --k 1 --primes 2", doc.dump());
  CHECK(r.exit_code == 1);
  Report rep = parse_report(r.stdout_text);
  CHECK(!rep.all_pass());
}

TEST_CASE("seed comes from the environment when the flag is absent") {
  RunResult env_run =
      run_tool("bigdiv --k 1", "", "INVLIM_SEED=99");
  Report rep = parse_report(env_run.stdout_text);
  CHECK(rep.seed == 99);

  RunResult flag_wins =
      run_tool("bigdiv --k 1 --seed 5", "", "INVLIM_SEED=99");
  CHECK(parse_report(flag_wins.stdout_text).seed == 5);
}

TEST_CASE("text output lists one line per check") {
  RunResult r = run_tool("bigdiv --k 1 --output text", "");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("pass") != std::string::npos);
  CHECK(r.stdout_text.find("bigdiv/strictly_decreasing") != std::string::npos);
}

TEST_CASE("identical seeds give identical reports apart from timing") {
  RunResult a = run_tool("thm1 --seed 11 --samples 30", kFreeZ);
  RunResult b = run_tool("thm1 --seed 11 --samples 30", kFreeZ);
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  Json ja = Json::parse(a.stdout_text);
  Json jb = Json::parse(b.stdout_text);
  ja["elapsed_ms"] = 0;
  jb["elapsed_ms"] = 0;
  CHECK(ja.dump() == jb.dump());
}
