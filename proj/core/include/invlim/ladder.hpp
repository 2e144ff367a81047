#pragma once

#include "invlim/homs.hpp"
#include "invlim/rng.hpp"

namespace invlim {

/* Finite prefix of an inverse chain of divisible stages
   M_0 <- M_1 <- ... <- M_k with surjective connecting maps. Surjectivity
   is validated by witness sampling at construction: random targets must
   all admit sound preimages. */
class InverseChain {
 public:
  InverseChain(std::vector<ModuleShape> stages, std::vector<Hom> maps,
               std::uint64_t witness_seed = 0, std::size_t witness_samples = 20);

  /* number of maps; stages run 0..length() */
  std::size_t length() const { return maps_.size(); }
  const ModuleShape& stage(std::size_t i) const { return stages_.at(i); }
  const Hom& map(std::size_t i) const { return maps_.at(i); }  // M_{i+1} -> M_i

  /* composed map M_l -> M_k, k <= l */
  Hom composed(std::size_t k, std::size_t l) const;

 private:
  std::vector<ModuleShape> stages_;
  std::vector<Hom> maps_;
};

/* The rank-one direct chain N_0 -> N_1 -> ... with N_i = c_i * Z inside Q;
   each inclusion index m_i = c_i / c_{i+1} is a positive integer. */
class DirectChain {
 public:
  explicit DirectChain(std::vector<Rational> generators);

  std::size_t length() const { return generators_.size() - 1; }
  const Rational& generator(std::size_t i) const { return generators_.at(i); }
  const Integer& index(std::size_t i) const { return indices_.at(i); }
  /* the factor carrying N_0's generator into N_i's: product of m_j, j < i */
  Integer embedding_factor(std::size_t i) const;

 private:
  std::vector<Rational> generators_;
  std::vector<Integer> indices_;
};

/* The "big divisibility" chain: c_0 = 1 and c_i the product of the first
   min(i, |primes|) list entries, each to the power -i; a finite list keeps
   contributing its full product at every later stage. Repeated list
   entries multiply literally. */
DirectChain big_div_chain(const std::vector<Integer>& primes, std::size_t k);

/* One rung: factor f_i through phi_i, then divide by the inclusion index.
   nullopt when phi_i's preimage strategy misses a generator image. */
std::optional<Hom> ladder_step(const Hom& f_i, const Hom& phi_i,
                               const Integer& m_i);

/* Transcript of a full ladder run: the maps f_0..f_k, their generator
   images, and the composite checks "phi_{0i} . f_i . psi_{i0} = f_0",
   each verified exactly on the generator and 20 random multiples. */
struct LadderTranscript {
  std::vector<Hom> maps;
  std::vector<Element> generator_images;
  struct CompositeCheck {
    std::size_t stage;
    bool ok;
  };
  std::vector<CompositeCheck> checks;
  std::optional<std::size_t> failed_stage;  // preimage search failed here

  bool complete() const { return !failed_stage.has_value(); }
  bool all_ok() const;
};

LadderTranscript run_ladder(const Hom& f0, const InverseChain& inv,
                            const DirectChain& dir, std::size_t k,
                            std::uint64_t check_seed = 0);

/* Finite-stage divisibility witness: c = 1/c_k and y = f_k(generator)
   satisfy c * phi_{0k}(y) = x exactly. */
struct DivisibilityCertificate {
  Integer c;
  Element y;
  bool verified = false;
  std::optional<std::size_t> failed_stage;
};

DivisibilityCertificate divisibility_certificate(const Element& x,
                                                 const InverseChain& inv,
                                                 const std::vector<Integer>& primes,
                                                 std::size_t k);

/* the rank-one free source shape used by every ladder: one Z generator */
ModuleShape ladder_source_shape();

/* f: N -> M_0 sending the generator to x */
Hom ladder_start(const Element& x);

}  // namespace invlim
