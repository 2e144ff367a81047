#pragma once

#include <optional>
#include <vector>

#include "invlim/homs.hpp"

namespace invlim {

/* One Z/p^k summand in the primary decomposition; `factor` records which
   invariant factor it was split from. */
struct PrimePowerPart {
  Integer p;
  std::uint64_t k;
  std::size_t factor;

  Integer pk() const { return pow_int(p, k); }
  bool operator==(const PrimePowerPart& o) const = default;
};

/* A = Z^rank + sum of Z/d_i, read off the Smith normal form of the
   relation matrix (columns are relations). to_canonical is the unimodular
   change of basis from presentation generators to canonical coordinates;
   from_canonical is its exact inverse. */
struct Decomposition {
  std::size_t ngens = 0;
  std::size_t rank = 0;
  std::vector<Integer> invariant_factors;  // each >= 2, d_i | d_{i+1}
  std::vector<PrimePowerPart> parts;       // factor-major, primes ascending
  IntMatrix to_canonical;
  IntMatrix from_canonical;

  /* role of canonical coordinate i: factor ordinal, free ordinal, or
     dropped (trivial d_i = 1) */
  enum class Role { Dropped, Factor, Free };
  std::vector<Role> roles;
  std::vector<std::size_t> ordinals;  // factor/free ordinal per coordinate
};

Decomposition decompose(const IntMatrix& relations, std::size_t ngens);

/* The exact sequence 0 -> A -> M -> N with M, N divisible:
   free rank contributes Q -> Q/Z, each Z/p^k part contributes
   Z(p^inf) -> Z(p^inf) via multiplication by p^k. `e` embeds A in M,
   `f` is the quotient-by-A map, and ker f = im e. */
struct InjectivePresentation {
  Decomposition decomposition;
  ModuleShape a_shape;  // Z/p^k parts ("t<j>") then free part ("free")
  ModuleShape m_shape;  // Pruefer parts ("d<j>") then rationals ("q")
  ModuleShape n_shape;  // same ids as m_shape, rationals become Q/Z
  Hom e;                // a_shape -> m_shape, injective
  Hom f;                // m_shape -> n_shape, surjective, ker f = im e
};

InjectivePresentation build_injective_presentation(const IntMatrix& relations,
                                                   std::size_t ngens);

/* Membership of x in ker f = A, decided coordinatewise: the free part
   must be integral, each Pruefer part must have depth at most k. On
   success the witness carries both the abstract A-element and its
   expression over the original presentation generators. */
struct KernelWitness {
  Element a_element;                     // in a_shape, e(a_element) = x
  std::vector<Integer> generator_coords; // length ngens, via from_canonical
};

std::optional<KernelWitness> kernel_membership(const InjectivePresentation& pres,
                                               const Element& x);

/* e-image of the witness's abstract element; used to confirm round-trips */
Element kernel_witness_image(const InjectivePresentation& pres,
                             const KernelWitness& witness);

/* image in M of an integer combination of the original presentation
   generators; the composite A -> M realized over generator coordinates */
Element generator_vector_image(const InjectivePresentation& pres,
                               const std::vector<Integer>& generator_coords);

/* |A| when A is finite (rank 0): the product of the invariant factors */
std::optional<Integer> finite_order(const Decomposition& d);

}  // namespace invlim
