#include "invlim/ladder.hpp"

#include <algorithm>

namespace invlim {

InverseChain::InverseChain(std::vector<ModuleShape> stages,
                           std::vector<Hom> maps, std::uint64_t witness_seed,
                           std::size_t witness_samples)
    : stages_(std::move(stages)), maps_(std::move(maps)) {
  if (stages_.empty()) throw value_error("inverse chain needs a stage");
  if (maps_.size() + 1 != stages_.size())
    throw value_error("inverse chain needs one map per adjacent stage pair");
  for (const ModuleShape& s : stages_)
    if (!s.all_divisible())
      throw shape_error("inverse chain stages must be divisible");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (!(maps_[i].source() == stages_[i + 1]) ||
        !(maps_[i].target() == stages_[i]))
      throw shape_error("inverse chain map " + std::to_string(i) +
                        " does not connect its stages");
  }
  /* surjectivity witness sampling: every random target must lift */
  SplitMix64 rng(witness_seed);
  for (std::size_t i = 0; i < maps_.size(); ++i)
    for (std::size_t s = 0; s < witness_samples; ++s) {
      Element target = random_element(stages_[i], rng, 3, 12);
      if (!hom_preimage(maps_[i], target))
        throw value_error("inverse chain map " + std::to_string(i) +
                          " failed a surjectivity witness (target " +
                          std::to_string(s) + ")");
    }
}

Hom InverseChain::composed(std::size_t k, std::size_t l) const {
  if (k > l || l >= stages_.size())
    throw value_error("composed needs k <= l <= chain length");
  Hom out = hom_identity(stages_[k]);
  for (std::size_t i = k; i < l; ++i) out = hom_compose(out, maps_[i]);
  return out;
}

DirectChain::DirectChain(std::vector<Rational> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) throw value_error("direct chain needs a generator");
  for (const Rational& c : generators_)
    if (c.sign() <= 0) throw value_error("direct chain generators must be > 0");
  for (std::size_t i = 0; i + 1 < generators_.size(); ++i) {
    Rational m = generators_[i] / generators_[i + 1];
    if (!m.is_integer() || m.num() < 1)
      throw value_error("direct chain index " + std::to_string(i) +
                        " is not a positive integer");
    indices_.push_back(m.num());
  }
}

Integer DirectChain::embedding_factor(std::size_t i) const {
  Integer out(1);
  for (std::size_t j = 0; j < i; ++j) out *= indices_.at(j);
  return out;
}

DirectChain big_div_chain(const std::vector<Integer>& primes, std::size_t k) {
  if (primes.empty()) throw value_error("big_div_chain needs primes");
  for (const Integer& p : primes)
    if (!is_prime(p))
      throw value_error("big_div_chain: " + int_to_string(p) + " is not prime");
  std::vector<Rational> gens;
  gens.reserve(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    /* stage i divides by the first min(i, L) listed primes, each to power i;
       a finite list keeps contributing its full product at later stages */
    Integer base(1);
    for (std::size_t j = 0; j < std::min(i, primes.size()); ++j)
      base *= primes[j];
    gens.emplace_back(Integer(1), pow_int(base, i));
  }
  return DirectChain(std::move(gens));
}

std::optional<Hom> ladder_step(const Hom& f_i, const Hom& phi_i,
                               const Integer& m_i) {
  auto lifted = lift_through_surjection(f_i, phi_i);
  if (!lifted) return std::nullopt;
  return extend_into_divisible(*lifted, m_i);
}

bool LadderTranscript::all_ok() const {
  return complete() && std::all_of(checks.begin(), checks.end(),
                                   [](const CompositeCheck& c) { return c.ok; });
}

LadderTranscript run_ladder(const Hom& f0, const InverseChain& inv,
                            const DirectChain& dir, std::size_t k,
                            std::uint64_t check_seed) {
  if (k > inv.length() || k > dir.length())
    throw value_error("run_ladder: k exceeds a chain length");
  if (!(f0.source() == ladder_source_shape()))
    throw shape_error("run_ladder: f0 must start on the rank-one source");
  if (!(f0.target() == inv.stage(0)))
    throw shape_error("run_ladder: f0 must land in stage 0");

  LadderTranscript t;
  t.maps.push_back(f0);
  for (std::size_t i = 0; i < k; ++i) {
    auto next = ladder_step(t.maps.back(), inv.map(i), dir.index(i));
    if (!next) {
      t.failed_stage = i;
      break;
    }
    t.maps.push_back(std::move(*next));
  }

  Element gen = single_coord_element(ladder_source_shape(), 0, 0, 1);
  for (const Hom& f : t.maps)
    t.generator_images.push_back(hom_apply(f, gen));

  /* composite identity at stage i: phi_{0i}(f_i(psi_{i0}(g))) = f_0(g),
     where psi_{i0} multiplies by the embedding factor */
  SplitMix64 rng(check_seed);
  for (std::size_t i = 0; i < t.maps.size(); ++i) {
    Hom down = inv.composed(0, i);
    Integer emb = dir.embedding_factor(i);
    bool ok = true;
    for (std::size_t trial = 0; trial < 21 && ok; ++trial) {
      Integer mult = trial == 0 ? Integer(1) : Integer(rng.in_range(-50, 50));
      Element n0 = elem_scalar_mul(mult, gen);
      Element via_ladder = hom_apply(
          down, hom_apply(t.maps[i], elem_scalar_mul(emb, n0)));
      ok = via_ladder == hom_apply(t.maps[0], n0);
    }
    t.checks.push_back(LadderTranscript::CompositeCheck{i, ok});
  }
  return t;
}

DivisibilityCertificate divisibility_certificate(
    const Element& x, const InverseChain& inv,
    const std::vector<Integer>& primes, std::size_t k) {
  DirectChain dir = big_div_chain(primes, k);
  LadderTranscript t = run_ladder(ladder_start(x), inv, dir, k);
  DivisibilityCertificate cert;
  cert.c = dir.generator(k).reciprocal().num();
  if (!t.complete()) {
    cert.failed_stage = t.failed_stage;
    cert.y = Element(inv.stage(std::min(t.maps.size() - 1, k)));
    return cert;
  }
  cert.y = t.generator_images.back();
  Element down = hom_apply(inv.composed(0, k), cert.y);
  cert.verified = elem_scalar_mul(cert.c, down) == x;
  return cert;
}

ModuleShape ladder_source_shape() {
  return ModuleShape({Family{"g", Atom::integers(), Extent::finite(1)}});
}

Hom ladder_start(const Element& x) {
  std::map<Coord, Element> images;
  if (!x.is_zero()) images.emplace(Coord{0, 0}, x);
  return hom_generator_image(ladder_source_shape(), x.shape(), std::move(images));
}

}  // namespace invlim
