#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invlim/json_io.hpp"
#include "invlim/report.hpp"
#include "invlim/suites.hpp"

namespace {

using invlim::Json;

struct Flags {
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::size_t stages = 4;
  std::int64_t max_d = 4;
  std::size_t k = 3;
  std::vector<std::int64_t> primes{2, 3, 5};
  std::string output = "json";
  std::string input_file;
};

void add_common_flags(CLI::App* sub, Flags& f, bool takes_input) {
  sub->add_option("--seed", f.seed, "root seed for all randomized checks")
      ->envname("INVLIM_SEED");
  sub->add_option("--samples", f.samples, "random samples per property");
  sub->add_option("--stages", f.stages, "stage/config count for chain suites");
  sub->add_option("--max-d,--max-D", f.max_d,
                  "index window for finite subsets D");
  sub->add_option("--k", f.k, "chain length / divisor");
  sub->add_option("--primes", f.primes, "divisibility primes, in order");
  sub->add_option("--output", f.output, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  if (takes_input)
    sub->add_option("--input", f.input_file,
                    "input JSON file (default: stdin)");
}

Json read_input_doc(const Flags& f) {
  std::string text;
  if (!f.input_file.empty()) {
    std::ifstream in(f.input_file);
    if (!in)
      throw invlim::parse_error("$", "cannot open input file " + f.input_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  }
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    throw invlim::parse_error("$", "missing input document");
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw invlim::parse_error("$", e.what());
  }
}

std::vector<invlim::Integer> prime_list(const Flags& f) {
  std::vector<invlim::Integer> primes;
  primes.reserve(f.primes.size());
  for (std::int64_t p : f.primes) primes.emplace_back(p);
  return primes;
}

invlim::Report run_snf(const Flags& f) {
  Json doc = read_input_doc(f);
  const Json& m = doc.contains("matrix") ? doc.at("matrix") : doc;
  invlim::IntMatrix a = invlim::matrix_from_json(
      m, doc.contains("matrix") ? "$.matrix" : "$");
  invlim::Report r;
  r.checks = invlim::snf_matrix_checks(a, "input");
  r.artifact = invlim::snf_to_json(invlim::snf(a));
  return r;
}

invlim::Report run_hull(const Flags& f) {
  Json doc = read_input_doc(f);
  invlim::PresentationInput input =
      invlim::presentation_input_from_json(doc, "$");
  invlim::Report r;
  r.checks = invlim::presentation_checks(input, "input", f.seed, f.samples);
  r.artifact = invlim::presentation_to_json(
      invlim::build_injective_presentation(input.relations, input.ngens),
      input);
  return r;
}

invlim::Report run_thm1(const Flags& f) {
  Json doc = read_input_doc(f);
  invlim::PresentationInput input =
      invlim::presentation_input_from_json(doc, "$");
  invlim::Report r;
  r.checks = invlim::submod_system_checks(input, "input", f.seed, f.samples,
                                          f.max_d);
  return r;
}

invlim::Report run_zerolim(const Flags& f) {
  Json doc = read_input_doc(f);
  invlim::PresentationInput input =
      invlim::presentation_input_from_json(doc, "$");
  invlim::InjectivePresentation pres =
      invlim::build_injective_presentation(input.relations, input.ngens);
  invlim::Report r;
  r.checks = invlim::set_chain_suite(pres.n_shape, "input", f.seed, f.samples,
                                     f.stages, 8);
  return r;
}

invlim::Report run_thm2(const Flags& f) {
  Json doc = read_input_doc(f);
  invlim::PresentationInput input =
      invlim::presentation_input_from_json(doc, "$");
  invlim::Report r;
  r.checks =
      invlim::onto_system_checks(input, "input", f.seed, f.stages, f.samples);
  return r;
}

Json transcript_json(const invlim::LadderTranscript& t) {
  Json maps = Json::array();
  for (const invlim::Hom& h : t.maps) maps.push_back(invlim::hom_to_json(h));
  Json images = Json::array();
  for (const invlim::Element& x : t.generator_images)
    images.push_back(invlim::element_to_json(x));
  Json checks = Json::array();
  for (const auto& c : t.checks)
    checks.push_back(Json{{"stage", c.stage}, {"ok", c.ok}});
  Json j{{"maps", std::move(maps)},
         {"generator_images", std::move(images)},
         {"composite_checks", std::move(checks)}};
  if (t.failed_stage) j["failed_stage"] = *t.failed_stage;
  return j;
}

invlim::Report run_ladder_cmd(const Flags& f) {
  Json doc = read_input_doc(f);
  invlim::ChainInput input =
      invlim::chain_input_from_json(doc, "$", "f0_image");
  if (!input.element)
    throw invlim::parse_error("$.f0_image", "missing field");
  if (f.k + 1 > input.stages.size())
    throw invlim::parse_error(
        "$.stages", "chain has fewer than k+1 = " + std::to_string(f.k + 1) +
                        " stages");
  invlim::InverseChain inv(std::move(input.stages), std::move(input.maps),
                           f.seed);
  invlim::DirectChain dir = invlim::big_div_chain(prime_list(f), f.k);
  invlim::LadderTranscript t = invlim::run_ladder(
      invlim::ladder_start(*input.element), inv, dir, f.k, f.seed);
  invlim::Report r;
  r.checks = invlim::ladder_run_checks(t, "input");
  r.artifact = transcript_json(t);
  return r;
}

invlim::Report run_bigdiv(const Flags& f) {
  std::vector<invlim::Integer> primes = prime_list(f);
  invlim::DirectChain dir = invlim::big_div_chain(primes, f.k);
  invlim::Report r;
  r.checks = invlim::big_div_chain_checks(primes, f.k);
  Json gens = Json::array();
  Json indices = Json::array();
  Json factors = Json::array();
  for (std::size_t i = 0; i <= f.k; ++i) {
    gens.push_back(dir.generator(i).str());
    factors.push_back(invlim::int_to_string(dir.embedding_factor(i)));
    if (i < f.k) indices.push_back(invlim::int_to_string(dir.index(i)));
  }
  r.artifact = Json{{"generators", std::move(gens)},
                    {"inclusion_indices", std::move(indices)},
                    {"embedding_factors", std::move(factors)}};
  return r;
}

invlim::Report run_ex6(const Flags& f) {
  Json doc = read_input_doc(f);
  invlim::EventuallyIntegerSeq seq = invlim::seq_from_json(doc, "$");
  invlim::Report r;
  r.checks = invlim::limit_seq_checks(
      seq, invlim::Integer(static_cast<long>(f.k)),
      static_cast<std::int64_t>(f.stages));
  return r;
}

invlim::Report run_selftest(const Flags& f) {
  invlim::Report r;
  r.checks = invlim::selftest_checks(f.seed);
  return r;
}

int emit(invlim::Report r, const Flags& f, const std::string& command,
         std::chrono::steady_clock::time_point start) {
  r.command = command;
  r.seed = f.seed;
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  if (f.output == "text")
    std::cout << r.to_text();
  else
    std::cout << r.to_json().dump() << "\n";
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inverse-limit presentation builder and verifier"};
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
    bool takes_input;
    invlim::Report (*run)(const Flags&);
  };
  static const Command commands[] = {
      {"snf", "diagonalize an integer matrix with exact transforms", true,
       run_snf},
      {"hull", "build the divisible presentation of a presented module", true,
       run_hull},
      {"thm1", "verify the finite-subset intersection system", true,
       run_thm1},
      {"zerolim", "verify fiber-sum chains whose limit collapses", true,
       run_zerolim},
      {"thm2", "verify the surjective-stage system", true, run_thm2},
      {"ladder", "factor a map through a divisible chain prefix", true,
       run_ladder_cmd},
      {"bigdiv", "print and verify the divisibility chain", false,
       run_bigdiv},
      {"ex6", "verify an eventually-integer sequence in its limit", true,
       run_ex6},
      {"selftest", "run every verification suite", false, run_selftest},
  };

  Flags flags[std::size(commands)];
  CLI::App* subs[std::size(commands)];
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    subs[i] = app.add_subcommand(commands[i].name, commands[i].help);
    add_common_flags(subs[i], flags[i], commands[i].takes_input);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  for (std::size_t i = 0; i < std::size(commands); ++i) {
    if (!subs[i]->parsed()) continue;
    auto start = std::chrono::steady_clock::now();
    try {
      return emit(commands[i].run(flags[i]), flags[i], commands[i].name,
                  start);
    } catch (const invlim::parse_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const invlim::error& e) {
      invlim::Report r;
      r.checks.push_back(invlim::fail_check("run/exception", "invented: artifact plumbing",
                                            Json{{"what", e.what()}}));
      return emit(std::move(r), flags[i], commands[i].name, start);
    }
  }
  return 2;
}
