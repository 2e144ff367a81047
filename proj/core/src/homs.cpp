#include "invlim/homs.hpp"

#include <algorithm>
#include <set>

namespace invlim {

Hom make_hom(HomNode node) {
  return Hom(std::make_shared<const HomNode>(std::move(node)));
}

HomKind Hom::kind() const { return node_->kind; }
const ModuleShape& Hom::source() const { return node_->source; }
const ModuleShape& Hom::target() const { return node_->target; }

Hom hom_zero(ModuleShape source, ModuleShape target) {
  HomNode n;
  n.kind = HomKind::Zero;
  n.source = std::move(source);
  n.target = std::move(target);
  return make_hom(std::move(n));
}

Hom hom_identity(ModuleShape shape) {
  HomNode n;
  n.kind = HomKind::Identity;
  n.source = shape;
  n.target = std::move(shape);
  return make_hom(std::move(n));
}

Hom hom_route(ModuleShape source, ModuleShape target,
              const std::vector<std::pair<std::string, std::string>>& routes) {
  HomNode n;
  n.kind = HomKind::Route;
  std::set<std::size_t> used_sources;
  for (const auto& [src_id, dst_id] : routes) {
    std::size_t s = source.index_of(src_id);
    std::size_t d = target.index_of(dst_id);
    if (!used_sources.insert(s).second)
      throw value_error("route lists source family '" + src_id + "' twice");
    const Family& sf = source.family(s);
    const Family& df = target.family(d);
    if (!(sf.atom == df.atom))
      throw shape_error("route '" + src_id + "' -> '" + dst_id +
                        "': atom mismatch");
    const bool fits = df.extent.is_omega ||
                      (!sf.extent.is_omega && sf.extent.n <= df.extent.n);
    if (!fits)
      throw shape_error("route '" + src_id + "' -> '" + dst_id +
                        "': source extent does not fit in target");
    n.routes.emplace_back(s, d);
  }
  n.source = std::move(source);
  n.target = std::move(target);
  return make_hom(std::move(n));
}

Hom hom_mult_rational(ModuleShape qq_shape, Rational q) {
  for (const auto& f : qq_shape.families())
    if (f.atom.kind() != AtomKind::QQ)
      throw shape_error("mult_rational needs an all-Q shape");
  HomNode n;
  n.kind = HomKind::MultRational;
  n.source = qq_shape;
  n.target = std::move(qq_shape);
  n.scalar_q = std::move(q);
  return make_hom(std::move(n));
}

Hom hom_mult_int(ModuleShape shape, Integer k) {
  HomNode n;
  n.kind = HomKind::MultInt;
  n.source = shape;
  n.target = std::move(shape);
  n.scalar_n = std::move(k);
  return make_hom(std::move(n));
}

namespace {

const Family& sole_family(const ModuleShape& shape, const char* what) {
  if (shape.family_count() != 1)
    throw shape_error(std::string(what) + " acts on exactly one family");
  return shape.family(0);
}

}  // namespace

Hom hom_reduce_q(const ModuleShape& one_qq_family) {
  const Family& f = sole_family(one_qq_family, "reduce_q");
  if (f.atom.kind() != AtomKind::QQ)
    throw shape_error("reduce_q needs a Q family");
  HomNode n;
  n.kind = HomKind::ReduceQ;
  n.source = one_qq_family;
  n.target =
      ModuleShape({Family{f.id, Atom::rationals_mod_one(), f.extent}});
  return make_hom(std::move(n));
}

Hom hom_embed_cyclic(const ModuleShape& one_cyclic_family) {
  const Family& f = sole_family(one_cyclic_family, "embed_cyclic");
  if (f.atom.kind() != AtomKind::Cyclic)
    throw shape_error("embed_cyclic needs a Z/d family");
  auto factors = factorize(f.atom.modulus());
  if (factors.size() != 1)
    throw value_error("embed_cyclic: order " +
                      int_to_string(f.atom.modulus()) + " is not a prime power");
  HomNode n;
  n.kind = HomKind::EmbedCyclic;
  n.source = one_cyclic_family;
  n.target =
      ModuleShape({Family{f.id, Atom::pruefer(factors[0].first), f.extent}});
  return make_hom(std::move(n));
}

Hom hom_pruefer_mult(const ModuleShape& one_pruefer_family, std::uint64_t k) {
  const Family& f = sole_family(one_pruefer_family, "pruefer_mult");
  if (f.atom.kind() != AtomKind::Pruefer)
    throw shape_error("pruefer_mult needs a Pruefer family");
  HomNode n;
  n.kind = HomKind::PrueferMult;
  n.source = one_pruefer_family;
  n.target = one_pruefer_family;
  n.exponent = k;
  return make_hom(std::move(n));
}

Hom hom_generator_image(ModuleShape source, ModuleShape target,
                        std::map<Coord, Element> images) {
  if (!source.all_integral() || !source.all_finite_extent())
    throw shape_error("generator_image needs a finite all-Z / Z/d source");
  for (const auto& [c, img] : images) {
    if (c.family >= source.family_count())
      throw shape_error("generator_image: family position out of range");
    const Family& f = source.family(c.family);
    if (!f.extent.contains(c.index))
      throw value_error("generator_image: generator index outside extent");
    if (!(img.shape() == target))
      throw shape_error("generator_image: image shape differs from target");
    if (f.atom.kind() == AtomKind::Cyclic &&
        !elem_scalar_mul(f.atom.modulus(), img).is_zero())
      throw value_error("generator_image: image of a Z/" +
                        int_to_string(f.atom.modulus()) +
                        " generator must have order dividing the modulus");
  }
  HomNode n;
  n.kind = HomKind::GeneratorImage;
  n.source = std::move(source);
  n.target = std::move(target);
  n.images = std::move(images);
  return make_hom(std::move(n));
}

Hom hom_fiber_sum(ModuleShape source, ModuleShape target,
                  std::vector<std::int64_t> set_map) {
  if (source.family_count() == 0 ||
      source.family_count() != target.family_count())
    throw shape_error("fiber_sum needs matching nonempty family lists");
  std::int64_t b = -1, a = -1;
  for (std::size_t i = 0; i < source.family_count(); ++i) {
    const Family& sf = source.family(i);
    const Family& tf = target.family(i);
    if (sf.id != tf.id || !(sf.atom == tf.atom))
      throw shape_error("fiber_sum: family " + std::to_string(i) +
                        " differs between source and target");
    if (sf.extent.is_omega || tf.extent.is_omega)
      throw shape_error("fiber_sum needs finite extents");
    if (b == -1) {
      b = sf.extent.n;
      a = tf.extent.n;
    }
    if (sf.extent.n != b || tf.extent.n != a)
      throw shape_error("fiber_sum: extents must agree across families");
  }
  if (static_cast<std::int64_t>(set_map.size()) != b)
    throw value_error("fiber_sum: set map has size " +
                      std::to_string(set_map.size()) + ", expected " +
                      std::to_string(b));
  std::vector<bool> hit(static_cast<std::size_t>(a), false);
  for (std::int64_t v : set_map) {
    if (v < 0 || v >= a)
      throw value_error("fiber_sum: set map value out of range");
    hit[static_cast<std::size_t>(v)] = true;
  }
  if (!std::all_of(hit.begin(), hit.end(), [](bool x) { return x; }))
    throw value_error("fiber_sum: set map is not surjective");
  HomNode n;
  n.kind = HomKind::FiberSum;
  n.source = std::move(source);
  n.target = std::move(target);
  n.set_map = std::move(set_map);
  return make_hom(std::move(n));
}

Hom hom_sum(std::vector<Hom> parts) {
  if (parts.empty()) throw value_error("sum of zero homs");
  for (const Hom& p : parts)
    if (!(p.source() == parts[0].source() && p.target() == parts[0].target()))
      throw shape_error("sum: all parts need equal source and target");
  HomNode n;
  n.kind = HomKind::Sum;
  n.source = parts[0].source();
  n.target = parts[0].target();
  n.parts = std::move(parts);
  return make_hom(std::move(n));
}

Hom hom_direct_sum(std::vector<Hom> parts) {
  if (parts.empty()) throw value_error("direct sum of zero homs");
  std::vector<ModuleShape> sources, targets;
  for (const Hom& p : parts) {
    sources.push_back(p.source());
    targets.push_back(p.target());
  }
  HomNode n;
  n.kind = HomKind::DirectSum;
  n.source = concat_shapes(sources);  // rejects duplicate family ids
  n.target = concat_shapes(targets);
  n.parts = std::move(parts);
  return make_hom(std::move(n));
}

Hom hom_compose(Hom after, Hom before) {
  if (!(before.target() == after.source()))
    throw shape_error("compose: inner target differs from outer source");
  HomNode n;
  n.kind = HomKind::Compose;
  n.source = before.source();
  n.target = after.target();
  n.parts = {std::move(after), std::move(before)};
  return make_hom(std::move(n));
}

/* ---- application ---- */

namespace {

void add_into(Element& acc, std::size_t family, std::int64_t index,
              const AtomElement& v) {
  acc.set(family, index, atom_add(acc.get(family, index), v));
}

Element apply_impl(const HomNode& n, const Element& x);

Element apply_hom(const Hom& h, const Element& x) { return apply_impl(h.node(), x); }

Element apply_impl(const HomNode& n, const Element& x) {
  switch (n.kind) {
    case HomKind::Zero:
      return Element::zero(n.target);

    case HomKind::Identity:
      return x;

    case HomKind::Route: {
      Element out(n.target);
      for (const auto& [src, dst] : n.routes)
        for (const auto& [c, v] : x.coords())
          if (c.family == src) add_into(out, dst, c.index, v);
      return out;
    }

    case HomKind::MultRational: {
      Element out(n.target);
      for (const auto& [c, v] : x.coords())
        out.set(c.family, c.index, AtomElement(v.atom(), v.value() * n.scalar_q));
      return out;
    }

    case HomKind::MultInt:
      return elem_scalar_mul(n.scalar_n, x);

    case HomKind::ReduceQ: {
      Element out(n.target);
      for (const auto& [c, v] : x.coords())
        out.set(c.family, c.index, reduce_q_to_qmodz(v));
      return out;
    }

    case HomKind::EmbedCyclic: {
      Element out(n.target);
      for (const auto& [c, v] : x.coords())
        out.set(c.family, c.index, cyclic_into_pruefer(v));
      return out;
    }

    case HomKind::PrueferMult: {
      const Integer& p = n.source.family(0).atom.modulus();
      return elem_scalar_mul(pow_int(p, n.exponent), x);
    }

    case HomKind::GeneratorImage: {
      Element out(n.target);
      for (const auto& [c, v] : x.coords()) {
        auto it = n.images.find(c);
        if (it == n.images.end()) continue;  // generator mapped to zero
        out = elem_add(out, elem_scalar_mul(v.value().num(), it->second));
      }
      return out;
    }

    case HomKind::FiberSum: {
      Element out(n.target);
      for (const auto& [c, v] : x.coords())
        add_into(out, c.family, n.set_map[static_cast<std::size_t>(c.index)], v);
      return out;
    }

    case HomKind::Sum: {
      Element out(n.target);
      for (const Hom& p : n.parts) out = elem_add(out, apply_hom(p, x));
      return out;
    }

    case HomKind::DirectSum: {
      Element out(n.target);
      std::size_t src_off = 0, dst_off = 0;
      for (const Hom& p : n.parts) {
        const std::size_t sc = p.source().family_count();
        Element sub(p.source());
        for (const auto& [c, v] : x.coords())
          if (c.family >= src_off && c.family < src_off + sc)
            sub.set(c.family - src_off, c.index, v);
        Element img = apply_hom(p, sub);
        for (const auto& [c, v] : img.coords())
          out.set(dst_off + c.family, c.index, v);
        src_off += sc;
        dst_off += p.target().family_count();
      }
      return out;
    }

    case HomKind::Compose:
      return apply_hom(n.parts[0], apply_hom(n.parts[1], x));
  }
  throw value_error("unreachable hom kind");
}

}  // namespace

Element hom_apply(const Hom& h, const Element& x) {
  if (!(x.shape() == h.source()))
    throw shape_error("hom_apply: element shape differs from hom source");
  return apply_impl(h.node(), x);
}

/* ---- preimage strategies ---- */

namespace {

std::optional<Element> preimage_impl(const HomNode& n, const Element& y) {
  switch (n.kind) {
    case HomKind::Zero:
      if (y.is_zero()) return Element::zero(n.source);
      return std::nullopt;

    case HomKind::Identity:
      return y;

    case HomKind::Route: {
      /* first-listed route into each target family carries it back */
      Element out(n.source);
      std::map<std::size_t, std::size_t> carrier;  // target fam -> source fam
      for (const auto& [src, dst] : n.routes) carrier.try_emplace(dst, src);
      for (const auto& [c, v] : y.coords()) {
        auto it = carrier.find(c.family);
        if (it == carrier.end()) return std::nullopt;  // family never hit
        if (!n.source.family(it->second).extent.contains(c.index))
          return std::nullopt;  // index beyond the source copy range
        out.set(it->second, c.index, v);
      }
      return out;
    }

    case HomKind::MultRational: {
      if (n.scalar_q.is_zero())
        return y.is_zero() ? std::optional<Element>(Element::zero(n.source))
                           : std::nullopt;
      Element out(n.source);
      Rational inv = n.scalar_q.reciprocal();
      for (const auto& [c, v] : y.coords())
        out.set(c.family, c.index, AtomElement(v.atom(), v.value() * inv));
      return out;
    }

    case HomKind::MultInt: {
      if (n.scalar_n == 0)
        return y.is_zero() ? std::optional<Element>(Element::zero(n.source))
                           : std::nullopt;
      auto division = elem_divide(n.scalar_n, y);
      if (!division.quotient) return std::nullopt;
      return std::move(*division.quotient);
    }

    case HomKind::ReduceQ: {
      /* canonical representative in [0,1) is the chosen section */
      Element out(n.source);
      for (const auto& [c, v] : y.coords())
        out.set(c.family, c.index, AtomElement(Atom::rationals(), v.value()));
      return out;
    }

    case HomKind::EmbedCyclic: {
      const Atom& cyc = n.source.family(0).atom;
      auto pk_factors = factorize(cyc.modulus());
      const std::uint64_t k = pk_factors[0].second;
      const Integer& p = pk_factors[0].first;
      Element out(n.source);
      for (const auto& [c, v] : y.coords()) {
        auto factors = factorize(v.value().den());
        const std::uint64_t j = factors.empty() ? 0 : factors[0].second;
        if (j > k) return std::nullopt;  // deeper than the embedded copy
        Integer rep = v.value().num() * pow_int(p, k - j);
        out.set(c.family, c.index, AtomElement(cyc, Rational(rep)));
      }
      return out;
    }

    case HomKind::PrueferMult: {
      const Integer& p = n.source.family(0).atom.modulus();
      auto division = elem_divide(pow_int(p, n.exponent), y);
      return std::move(*division.quotient);  // Pruefer division never fails
    }

    case HomKind::GeneratorImage:
      if (y.is_zero()) return Element::zero(n.source);
      return std::nullopt;  // no strategy beyond the trivial one

    case HomKind::FiberSum: {
      /* least-index section: copy i lifts to the least j with map(j) = i */
      std::map<std::int64_t, std::int64_t> section;
      for (std::size_t j = 0; j < n.set_map.size(); ++j)
        section.try_emplace(n.set_map[j], static_cast<std::int64_t>(j));
      Element out(n.source);
      for (const auto& [c, v] : y.coords())
        out.set(c.family, section.at(c.index), v);
      return out;
    }

    case HomKind::Sum: {
      /* try the first summand; remaining parts contribute zero only if the
         verification pass (below) accepts the candidate */
      return preimage_impl(n.parts[0].node(), y);
    }

    case HomKind::DirectSum: {
      Element out(n.source);
      std::size_t src_off = 0, dst_off = 0;
      for (const Hom& p : n.parts) {
        const std::size_t tc = p.target().family_count();
        Element sub(p.target());
        for (const auto& [c, v] : y.coords())
          if (c.family >= dst_off && c.family < dst_off + tc)
            sub.set(c.family - dst_off, c.index, v);
        auto pre = hom_preimage(p, sub);
        if (!pre) return std::nullopt;
        for (const auto& [c, v] : pre->coords())
          out.set(src_off + c.family, c.index, v);
        src_off += p.source().family_count();
        dst_off += tc;
      }
      return out;
    }

    case HomKind::Compose: {
      auto mid = hom_preimage(n.parts[0], y);
      if (!mid) return std::nullopt;
      return hom_preimage(n.parts[1], *mid);
    }
  }
  throw value_error("unreachable hom kind");
}

}  // namespace

std::optional<Element> hom_preimage(const Hom& h, const Element& y) {
  if (!(y.shape() == h.target()))
    throw shape_error("hom_preimage: element shape differs from hom target");
  auto candidate = preimage_impl(h.node(), y);
  if (!candidate) return std::nullopt;
  /* soundness gate: a strategy may miss, it may never lie */
  if (!(hom_apply(h, *candidate) == y)) return std::nullopt;
  return candidate;
}

std::optional<Hom> lift_through_surjection(const Hom& f0, const Hom& phi) {
  if (!(f0.target() == phi.target()))
    throw shape_error("lift_through_surjection: targets differ");
  if (!f0.source().all_integral() || !f0.source().all_finite_extent())
    throw shape_error("lift_through_surjection: source must be finitely "
                      "generated free/cyclic");
  std::map<Coord, Element> images;
  for (std::size_t f = 0; f < f0.source().family_count(); ++f) {
    const Family& fam = f0.source().family(f);
    for (std::int64_t i = 0; i < fam.extent.n; ++i) {
      Element gen = single_coord_element(f0.source(), f, i, 1);
      Element target_image = hom_apply(f0, gen);
      auto pre = hom_preimage(phi, target_image);
      if (!pre) return std::nullopt;
      if (fam.atom.kind() == AtomKind::Cyclic &&
          !elem_scalar_mul(fam.atom.modulus(), *pre).is_zero())
        return std::nullopt;  // lift exists but breaks the generator's order
      if (!pre->is_zero())
        images.emplace(Coord{static_cast<std::uint32_t>(f), i},
                       std::move(*pre));
    }
  }
  return hom_generator_image(f0.source(), phi.source(), std::move(images));
}

Hom extend_into_divisible(const Hom& h, const Integer& m) {
  if (m < 1) throw value_error("extend_into_divisible needs m >= 1");
  if (h.source().family_count() != 1 ||
      h.source().family(0).atom.kind() != AtomKind::ZZ ||
      h.source().family(0).extent.is_omega || h.source().family(0).extent.n != 1)
    throw shape_error("extend_into_divisible needs a rank-one free source");
  if (!h.target().all_divisible())
    throw shape_error("extend_into_divisible needs a divisible target");
  Element gen_image = hom_apply(h, single_coord_element(h.source(), 0, 0, 1));
  auto division = elem_divide(m, gen_image);
  if (!division.quotient)
    throw value_error("extend_into_divisible: division failed on a "
                      "divisible target");
  std::map<Coord, Element> images;
  if (!division.quotient->is_zero())
    images.emplace(Coord{0, 0}, std::move(*division.quotient));
  return hom_generator_image(h.source(), h.target(), std::move(images));
}

}  // namespace invlim
