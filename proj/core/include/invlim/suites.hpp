#pragma once

#include "invlim/json_io.hpp"
#include "invlim/report.hpp"
#include "invlim/rng.hpp"

namespace invlim {

/* Property suites shared by the CLI subcommands, the selftest, and the
   acceptance runner. Every suite is deterministic in its seed and returns
   one Check per verified law, aggregated over all sampled instances with
   the first counterexample recorded. */

struct NamedPresentation {
  std::string label;
  std::size_t ngens;
  IntMatrix relations;
};

/* fixed relation matrices exercising free, cyclic, mixed, split and
   non-diagonal cases */
const std::vector<NamedPresentation>& presentation_battery();

/* exact linear algebra */
std::vector<Check> snf_matrix_checks(const IntMatrix& a,
                                     const std::string& label);
std::vector<Check> snf_random_suite(std::uint64_t seed, std::size_t count,
                                    std::size_t max_dim,
                                    std::int64_t entry_bound);

/* divisible presentations 0 -> A -> M -> N */
std::vector<Check> presentation_checks(const PresentationInput& input,
                                       const std::string& label,
                                       std::uint64_t seed,
                                       std::size_t samples);
std::vector<Check> presentation_random_suite(std::uint64_t seed,
                                             std::size_t count);

/* intersection systems over the index set omega */
std::vector<Check> submod_system_checks(const PresentationInput& input,
                                        const std::string& label,
                                        std::uint64_t seed,
                                        std::size_t samples,
                                        std::int64_t window);
std::vector<Check> submod_battery_suite(std::uint64_t seed,
                                        std::size_t samples,
                                        std::int64_t window);

/* fiber-sum chains with zero inverse limit behavior */
std::vector<Check> set_chain_suite(const ModuleShape& n_shape,
                                   const std::string& label,
                                   std::uint64_t seed, std::size_t chains,
                                   std::size_t max_stages,
                                   std::int64_t max_size);
std::vector<Check> set_chain_random_suite(std::uint64_t seed,
                                          std::size_t chains,
                                          std::size_t max_stages,
                                          std::int64_t max_size);

/* surjective stage systems */
std::vector<Check> onto_system_checks(const PresentationInput& input,
                                      const std::string& label,
                                      std::uint64_t seed, std::size_t configs,
                                      std::size_t samples);
std::vector<Check> onto_battery_suite(std::uint64_t seed, std::size_t configs,
                                      std::size_t samples);

/* ladder factorization through divisible chains */
std::vector<Check> ladder_random_suite(std::uint64_t seed,
                                       std::size_t configs, std::size_t max_k);
std::vector<Check> ladder_frozen_checks();
std::vector<Check> ladder_run_checks(const LadderTranscript& t,
                                     const std::string& label);
std::vector<Check> certificate_random_suite(std::uint64_t seed,
                                            std::size_t targets,
                                            std::size_t max_k);
std::vector<Check> big_div_chain_checks(const std::vector<Integer>& primes,
                                        std::size_t k);

/* eventually-integer sequence limits */
std::vector<Check> limit_seq_checks(const EventuallyIntegerSeq& seq,
                                       const Integer& k,
                                       std::int64_t max_stage);
std::vector<Check> limit_seq_random_suite(std::uint64_t seed,
                                    std::size_t sequences,
                                    std::size_t preimage_samples,
                                    std::int64_t max_stage);

/* everything above, at the sizes the acceptance criteria pin down */
std::vector<Check> selftest_checks(std::uint64_t seed);

}  // namespace invlim
