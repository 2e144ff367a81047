#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "invlim/sums.hpp"

namespace invlim {

/* Homomorphisms form a closed combinator language. Every node carries its
   source and target shapes, checked at construction, so an ill-typed
   composite cannot be built. Application is exact; each combinator also
   owns a deterministic preimage strategy, and every preimage returned is
   verified by re-application before it leaves this module. */

enum class HomKind {
  Zero,
  Identity,
  Route,          // family-to-family rerouting, identity on copy indices
  MultRational,   // all-Q shapes only
  MultInt,        // any shape
  ReduceQ,        // Q -> Q/Z, one family
  EmbedCyclic,    // Z/p^k -> Z(p^inf), one family
  PrueferMult,    // multiply one Pruefer family by p^k
  GeneratorImage, // free/cyclic finite source, images chosen per generator
  FiberSum,       // finitely many copies collapsed along a surjection
  Sum,
  DirectSum,
  Compose,
};

struct HomNode;

class Hom {
 public:
  Hom() = default;

  HomKind kind() const;
  const ModuleShape& source() const;
  const ModuleShape& target() const;
  const HomNode& node() const { return *node_; }
  bool valid() const { return node_ != nullptr; }

 private:
  explicit Hom(std::shared_ptr<const HomNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const HomNode> node_;
  friend Hom make_hom(HomNode node);
};

struct HomNode {
  HomKind kind;
  ModuleShape source;
  ModuleShape target;

  Rational scalar_q;                 // MultRational
  Integer scalar_n = 0;              // MultInt
  std::uint64_t exponent = 0;        // PrueferMult: multiply by p^exponent

  /* Route: (source family pos, target family pos); a source family appears
     at most once, several sources may feed one target (their images add) */
  std::vector<std::pair<std::size_t, std::size_t>> routes;

  std::map<Coord, Element> images;   // GeneratorImage; absent coord = zero

  std::vector<std::int64_t> set_map; // FiberSum: copy j feeds copy set_map[j]

  std::vector<Hom> parts;            // Sum, DirectSum, Compose = {after, before}
};

Hom hom_zero(ModuleShape source, ModuleShape target);
Hom hom_identity(ModuleShape shape);

/* routes are (source id, target id) pairs; unrouted source families are
   dropped, images landing on one target family add up */
Hom hom_route(ModuleShape source, ModuleShape target,
              const std::vector<std::pair<std::string, std::string>>& routes);

Hom hom_mult_rational(ModuleShape qq_shape, Rational q);
Hom hom_mult_int(ModuleShape shape, Integer n);
Hom hom_reduce_q(const ModuleShape& one_qq_family);
Hom hom_embed_cyclic(const ModuleShape& one_prime_power_cyclic_family);
Hom hom_pruefer_mult(const ModuleShape& one_pruefer_family, std::uint64_t k);

/* source must be all-Z / Z/d with finite extents; cyclic generators demand
   d * image = 0, enforced here */
Hom hom_generator_image(ModuleShape source, ModuleShape target,
                        std::map<Coord, Element> images);

/* source families have extent B, target families extent A, set_map is a
   surjection [0,B) -> [0,A); y_i collects the sum of the x_j with
   set_map[j] = i, independently in every family */
Hom hom_fiber_sum(ModuleShape source, ModuleShape target,
                  std::vector<std::int64_t> set_map);

Hom hom_sum(std::vector<Hom> parts);
Hom hom_direct_sum(std::vector<Hom> parts);

/* apply(compose(g, h), x) = apply(g, apply(h, x)) */
Hom hom_compose(Hom after, Hom before);

Element hom_apply(const Hom& h, const Element& x);

/* Deterministic preimage along the per-combinator strategy; nullopt when
   the strategy finds nothing (that outcome is data, not an error). Any
   element returned satisfies hom_apply(h, result) == y exactly. */
std::optional<Element> hom_preimage(const Hom& h, const Element& y);

/* Factors f0 through phi: picks a preimage of every generator image, so
   the result g satisfies compose(phi, g) = f0 pointwise on generators
   (hence everywhere). nullopt when some generator image has no preimage
   along phi's strategy. */
std::optional<Hom> lift_through_surjection(const Hom& f0, const Hom& phi);

/* Given h on a rank-one free source into a divisible target, produces h'
   with h = m * h', realizing one step of divisible refinement. */
Hom extend_into_divisible(const Hom& h, const Integer& m);

}  // namespace invlim
