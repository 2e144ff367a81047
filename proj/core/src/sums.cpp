#include "invlim/sums.hpp"

#include <algorithm>
#include <set>

namespace invlim {

Extent Extent::finite(std::int64_t n) {
  if (n < 0) throw value_error("finite extent needs n >= 0");
  return Extent{false, n};
}

ModuleShape::ModuleShape(std::vector<Family> families)
    : families_(std::move(families)) {
  std::set<std::string> seen;
  for (const auto& f : families_) {
    if (f.id.empty()) throw value_error("family id must be nonempty");
    if (!seen.insert(f.id).second)
      throw value_error("duplicate family id '" + f.id + "'");
  }
}

std::optional<std::size_t> ModuleShape::find(const std::string& id) const {
  for (std::size_t i = 0; i < families_.size(); ++i)
    if (families_[i].id == id) return i;
  return std::nullopt;
}

std::size_t ModuleShape::index_of(const std::string& id) const {
  auto i = find(id);
  if (!i) throw shape_error("no family '" + id + "' in shape");
  return *i;
}

bool ModuleShape::all_divisible() const {
  return std::all_of(families_.begin(), families_.end(),
                     [](const Family& f) { return f.atom.is_divisible(); });
}

bool ModuleShape::all_integral() const {
  return std::all_of(families_.begin(), families_.end(),
                     [](const Family& f) { return f.atom.is_integral(); });
}

bool ModuleShape::all_finite_extent() const {
  return std::all_of(families_.begin(), families_.end(),
                     [](const Family& f) { return !f.extent.is_omega; });
}

ModuleShape concat_shapes(const std::vector<ModuleShape>& parts) {
  std::vector<Family> families;
  for (const auto& p : parts)
    families.insert(families.end(), p.families().begin(), p.families().end());
  return ModuleShape(std::move(families));
}

AtomElement Element::get(std::size_t family, std::int64_t index) const {
  if (family >= shape_.family_count())
    throw shape_error("family position out of range");
  auto it = coords_.find(Coord{static_cast<std::uint32_t>(family), index});
  if (it != coords_.end()) return it->second;
  return AtomElement::zero(shape_.family(family).atom);
}

AtomElement Element::get(const std::string& family_id, std::int64_t index) const {
  return get(shape_.index_of(family_id), index);
}

void Element::set(std::size_t family, std::int64_t index,
                  const AtomElement& value) {
  if (family >= shape_.family_count())
    throw shape_error("family position out of range");
  const Family& f = shape_.family(family);
  if (!(value.atom() == f.atom))
    throw shape_error("value atom " + value.atom().str() +
                      " does not match family '" + f.id + "' atom " +
                      f.atom.str());
  if (!f.extent.contains(index))
    throw value_error("index " + std::to_string(index) +
                      " outside extent of family '" + f.id + "'");
  Coord c{static_cast<std::uint32_t>(family), index};
  if (value.is_zero())
    coords_.erase(c);
  else
    coords_.insert_or_assign(c, value);
}

void Element::set(const std::string& family_id, std::int64_t index,
                  const AtomElement& value) {
  set(shape_.index_of(family_id), index, value);
}

namespace {

void require_same_shape(const Element& x, const Element& y) {
  if (!(x.shape() == y.shape()))
    throw shape_error("element shapes do not match");
}

}  // namespace

Element elem_add(const Element& x, const Element& y) {
  require_same_shape(x, y);
  Element out = x;
  for (const auto& [c, v] : y.coords()) {
    AtomElement sum = atom_add(out.get(c.family, c.index), v);
    out.set(c.family, c.index, sum);
  }
  return out;
}

Element elem_neg(const Element& x) {
  Element out(x.shape());
  for (const auto& [c, v] : x.coords()) out.set(c.family, c.index, atom_neg(v));
  return out;
}

Element elem_sub(const Element& x, const Element& y) {
  return elem_add(x, elem_neg(y));
}

Element elem_scalar_mul(const Integer& n, const Element& x) {
  Element out(x.shape());
  for (const auto& [c, v] : x.coords())
    out.set(c.family, c.index, atom_scalar_mul(n, v));
  return out;
}

ElementDivision elem_divide(const Integer& n, const Element& x) {
  if (n == 0) throw value_error("elem_divide needs n != 0");
  Element out(x.shape());
  for (const auto& [c, v] : x.coords()) {
    auto q = atom_divide(n, v);
    if (!q) return ElementDivision{std::nullopt, c};
    out.set(c.family, c.index, *q);
  }
  return ElementDivision{std::move(out), std::nullopt};
}

Element single_coord_element(const ModuleShape& shape, std::size_t family,
                             std::int64_t index, const Rational& raw) {
  Element out(shape);
  out.set(family, index, AtomElement(shape.family(family).atom, raw));
  return out;
}

AtomElement random_atom_element(const Atom& atom, SplitMix64& rng,
                                const Integer& bound) {
  if (bound < 0) throw value_error("random_atom_element needs bound >= 0");
  const std::int64_t b = to_int64(bound);
  switch (atom.kind()) {
    case AtomKind::ZZ:
      return AtomElement(atom, Rational(Integer(rng.in_range(-b, b))));
    case AtomKind::Cyclic: {
      Integer cap = atom.modulus() < bound + 1 ? atom.modulus() : bound + 1;
      return AtomElement(
          atom, Rational(Integer(static_cast<long>(
                    rng.below(static_cast<std::uint64_t>(to_int64(cap)))))));
    }
    case AtomKind::QQ: {
      std::int64_t den = rng.in_range(1, std::max<std::int64_t>(1, b));
      std::int64_t num = rng.in_range(-b, b);
      return AtomElement(atom, Rational(Integer(num), Integer(den)));
    }
    case AtomKind::QmodZ: {
      std::int64_t den = rng.in_range(1, std::max<std::int64_t>(1, b));
      std::int64_t num = static_cast<std::int64_t>(
          rng.below(static_cast<std::uint64_t>(den)));
      return AtomElement(atom, Rational(Integer(num), Integer(den)));
    }
    case AtomKind::Pruefer: {
      const Integer& p = atom.modulus();
      std::uint64_t kmax = 0;
      Integer power = p;
      while (power <= bound) {
        ++kmax;
        power *= p;
      }
      std::uint64_t k = rng.below(kmax + 1);
      if (k == 0) return AtomElement::zero(atom);
      Integer pk = pow_int(p, k);
      std::uint64_t num = rng.below(static_cast<std::uint64_t>(to_int64(pk)));
      return AtomElement(atom, Rational(Integer(static_cast<long>(num)), pk));
    }
  }
  throw value_error("unreachable atom kind");
}

Element random_element(const ModuleShape& shape, SplitMix64& rng,
                       std::size_t max_support, const Integer& bound) {
  Element out(shape);
  if (shape.family_count() == 0) return out;
  const std::uint64_t support = rng.below(max_support + 1);
  for (std::uint64_t s = 0; s < support; ++s) {
    std::size_t f = rng.below(shape.family_count());
    const Family& fam = shape.family(f);
    std::int64_t index;
    if (fam.extent.is_omega) {
      index = static_cast<std::int64_t>(rng.below(8 * std::max<std::uint64_t>(
                                                          1, max_support)));
    } else {
      if (fam.extent.n == 0) continue;  // empty family: skip this draw
      index = static_cast<std::int64_t>(
          rng.below(static_cast<std::uint64_t>(fam.extent.n)));
    }
    out.set(f, index, random_atom_element(fam.atom, rng, bound));
  }
  return out;
}

Element random_element(const ModuleShape& shape, std::uint64_t seed,
                       std::size_t max_support, const Integer& bound) {
  SplitMix64 rng(seed);
  return random_element(shape, rng, max_support, bound);
}

}  // namespace invlim
