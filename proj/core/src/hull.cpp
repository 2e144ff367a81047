#include "invlim/hull.hpp"

namespace invlim {

Decomposition decompose(const IntMatrix& relations, std::size_t ngens) {
  if (relations.rows() != ngens)
    throw shape_error("relation matrix must have one row per generator");
  Decomposition out;
  out.ngens = ngens;
  SnfResult nf = snf(relations);
  /* u * A * v = s, so generators expressed in u-coordinates satisfy the
     diagonal relations: u is the map into canonical coordinates */
  out.to_canonical = nf.u;
  out.from_canonical = inverse_unimodular(nf.u);

  std::vector<Integer> diag = nf.diagonal();
  out.roles.resize(ngens);
  out.ordinals.resize(ngens, 0);
  for (std::size_t i = 0; i < ngens; ++i) {
    Integer d = i < diag.size() ? diag[i] : Integer(0);
    if (d == 1) {
      out.roles[i] = Decomposition::Role::Dropped;
    } else if (d == 0) {
      out.roles[i] = Decomposition::Role::Free;
      out.ordinals[i] = out.rank++;
    } else {
      out.roles[i] = Decomposition::Role::Factor;
      out.ordinals[i] = out.invariant_factors.size();
      out.invariant_factors.push_back(d);
    }
  }
  for (std::size_t i = 0; i < out.invariant_factors.size(); ++i)
    for (const auto& [p, k] : factorize(out.invariant_factors[i]))
      out.parts.push_back(PrimePowerPart{p, k, i});
  return out;
}

namespace {

std::string part_id(std::size_t j) { return "t" + std::to_string(j); }
std::string divisible_id(std::size_t j) { return "d" + std::to_string(j); }

}  // namespace

InjectivePresentation build_injective_presentation(const IntMatrix& relations,
                                                   std::size_t ngens) {
  InjectivePresentation pres;
  pres.decomposition = decompose(relations, ngens);
  const Decomposition& dec = pres.decomposition;

  std::vector<Family> a_fams, m_fams, n_fams;
  for (std::size_t j = 0; j < dec.parts.size(); ++j) {
    const PrimePowerPart& part = dec.parts[j];
    a_fams.push_back(
        Family{part_id(j), Atom::cyclic(part.pk()), Extent::finite(1)});
    m_fams.push_back(
        Family{divisible_id(j), Atom::pruefer(part.p), Extent::finite(1)});
    n_fams.push_back(
        Family{divisible_id(j), Atom::pruefer(part.p), Extent::finite(1)});
  }
  if (dec.rank > 0) {
    a_fams.push_back(Family{"free", Atom::integers(),
                            Extent::finite(static_cast<std::int64_t>(dec.rank))});
    m_fams.push_back(Family{"q", Atom::rationals(),
                            Extent::finite(static_cast<std::int64_t>(dec.rank))});
    n_fams.push_back(Family{"q", Atom::rationals_mod_one(),
                            Extent::finite(static_cast<std::int64_t>(dec.rank))});
  }
  pres.a_shape = ModuleShape(std::move(a_fams));
  pres.m_shape = ModuleShape(std::move(m_fams));
  pres.n_shape = ModuleShape(std::move(n_fams));

  /* e: part generator -> 1/p^k in its Pruefer line, free basis -> unit
     rational coordinate */
  std::map<Coord, Element> images;
  for (std::size_t j = 0; j < dec.parts.size(); ++j) {
    Element img = single_coord_element(
        pres.m_shape, j, 0, Rational(Integer(1), dec.parts[j].pk()));
    images.emplace(Coord{static_cast<std::uint32_t>(j), 0}, std::move(img));
  }
  if (dec.rank > 0) {
    const std::size_t qpos = dec.parts.size();
    for (std::size_t i = 0; i < dec.rank; ++i) {
      Element img = single_coord_element(
          pres.m_shape, qpos, static_cast<std::int64_t>(i), Rational(1));
      images.emplace(
          Coord{static_cast<std::uint32_t>(qpos), static_cast<std::int64_t>(i)},
          std::move(img));
    }
  }
  pres.e = hom_generator_image(pres.a_shape, pres.m_shape, std::move(images));

  /* f: multiply each Pruefer line by its p^k, reduce the rational block */
  std::vector<Hom> blocks;
  for (std::size_t j = 0; j < dec.parts.size(); ++j) {
    ModuleShape line({pres.m_shape.family(j)});
    blocks.push_back(hom_pruefer_mult(line, dec.parts[j].k));
  }
  if (dec.rank > 0)
    blocks.push_back(
        hom_reduce_q(ModuleShape({pres.m_shape.family(dec.parts.size())})));
  if (blocks.empty())
    pres.f = hom_zero(pres.m_shape, pres.n_shape);
  else
    pres.f = hom_direct_sum(std::move(blocks));
  return pres;
}

std::optional<KernelWitness> kernel_membership(const InjectivePresentation& pres,
                                               const Element& x) {
  if (!(x.shape() == pres.m_shape))
    throw shape_error("kernel_membership: element not in M");
  const Decomposition& dec = pres.decomposition;
  KernelWitness w;
  w.a_element = Element::zero(pres.a_shape);

  /* part residues: coordinate a/p^j lies in ker f iff j <= k, and then it
     is the image of a * p^(k-j) mod p^k; rational coordinates lie in ker
     (reduce mod 1) iff they are integers */
  std::vector<Integer> part_residue(dec.parts.size(), Integer(0));
  std::vector<Integer> free_value(dec.rank, Integer(0));
  for (const auto& [c, v] : x.coords()) {
    if (c.family < dec.parts.size()) {
      const PrimePowerPart& part = dec.parts[c.family];
      auto factors = factorize(v.value().den());
      const std::uint64_t j = factors.empty() ? 0 : factors[0].second;
      if (j > part.k) return std::nullopt;
      part_residue[c.family] =
          floor_mod(v.value().num() * pow_int(part.p, part.k - j), part.pk());
    } else {
      if (!v.value().is_integer()) return std::nullopt;
      free_value[static_cast<std::size_t>(c.index)] = v.value().num();
    }
  }
  for (std::size_t j = 0; j < dec.parts.size(); ++j)
    if (part_residue[j] != 0)
      w.a_element.set(j, 0, AtomElement(pres.a_shape.family(j).atom,
                                        Rational(part_residue[j])));
  if (dec.rank > 0) {
    const std::size_t fpos = dec.parts.size();
    for (std::size_t i = 0; i < dec.rank; ++i)
      if (free_value[i] != 0)
        w.a_element.set(fpos, static_cast<std::int64_t>(i),
                        AtomElement(Atom::integers(), Rational(free_value[i])));
  }

  /* canonical coordinate vector: CRT-combine the residues of each
     invariant factor, then pull back through from_canonical */
  std::vector<Integer> canonical(dec.ngens, Integer(0));
  for (std::size_t i = 0; i < dec.ngens; ++i) {
    switch (dec.roles[i]) {
      case Decomposition::Role::Dropped:
        break;
      case Decomposition::Role::Free:
        canonical[i] = free_value[dec.ordinals[i]];
        break;
      case Decomposition::Role::Factor: {
        /* the factor generator sits in M as the partial-fraction expansion
           of 1/d, so residues combine with weights d/p^k:
              c/d = sum_j r_j / p_j^{k_j}  (mod 1) */
        const Integer& d = dec.invariant_factors[dec.ordinals[i]];
        Integer value(0);
        for (std::size_t j = 0; j < dec.parts.size(); ++j) {
          if (dec.parts[j].factor != dec.ordinals[i]) continue;
          value += part_residue[j] * (d / dec.parts[j].pk());
        }
        canonical[i] = floor_mod(value, d);
        break;
      }
    }
  }
  w.generator_coords.assign(dec.ngens, Integer(0));
  for (std::size_t r = 0; r < dec.ngens; ++r)
    for (std::size_t c = 0; c < dec.ngens; ++c)
      w.generator_coords[r] += dec.from_canonical(r, c) * canonical[c];
  return w;
}

Element kernel_witness_image(const InjectivePresentation& pres,
                             const KernelWitness& witness) {
  return hom_apply(pres.e, witness.a_element);
}

Element generator_vector_image(const InjectivePresentation& pres,
                               const std::vector<Integer>& generator_coords) {
  const Decomposition& dec = pres.decomposition;
  if (generator_coords.size() != dec.ngens)
    throw shape_error("generator vector length differs from ngens");
  std::vector<Integer> canonical(dec.ngens, Integer(0));
  for (std::size_t r = 0; r < dec.ngens; ++r)
    for (std::size_t c = 0; c < dec.ngens; ++c)
      canonical[r] += dec.to_canonical(r, c) * generator_coords[c];

  Element a(pres.a_shape);
  for (std::size_t i = 0; i < dec.ngens; ++i) {
    switch (dec.roles[i]) {
      case Decomposition::Role::Dropped:
        break;
      case Decomposition::Role::Free: {
        const std::size_t fpos = dec.parts.size();
        if (canonical[i] != 0)
          a.set(fpos, static_cast<std::int64_t>(dec.ordinals[i]),
                AtomElement(Atom::integers(), Rational(canonical[i])));
        break;
      }
      case Decomposition::Role::Factor: {
        /* split c into part residues: r_j = c * (d/p^k)^{-1} mod p^k,
           inverse of the partial-fraction combination above */
        const Integer& d = dec.invariant_factors[dec.ordinals[i]];
        for (std::size_t j = 0; j < dec.parts.size(); ++j) {
          if (dec.parts[j].factor != dec.ordinals[i]) continue;
          const Integer pk = dec.parts[j].pk();
          Integer w = floor_mod(d / pk, pk);
          Integer r = floor_mod(canonical[i] * mod_inverse(w, pk), pk);
          if (r != 0)
            a.set(j, 0, AtomElement(pres.a_shape.family(j).atom, Rational(r)));
        }
        break;
      }
    }
  }
  return hom_apply(pres.e, a);
}

std::optional<Integer> finite_order(const Decomposition& d) {
  if (d.rank > 0) return std::nullopt;
  Integer order(1);
  for (const Integer& f : d.invariant_factors) order *= f;
  return order;
}

}  // namespace invlim
