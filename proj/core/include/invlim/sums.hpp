#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invlim/atoms.hpp"
#include "invlim/rng.hpp"

namespace invlim {

/* Index range of one family: finitely many copies, or countably many
   (the aleph_0 instance of an arbitrary-exponent power). */
struct Extent {
  static Extent finite(std::int64_t n);
  static Extent omega() { return Extent{true, 0}; }

  bool is_omega;
  std::int64_t n;  // meaningful only when !is_omega

  bool contains(std::int64_t index) const {
    return index >= 0 && (is_omega || index < n);
  }
  bool operator==(const Extent& o) const = default;
};

struct Family {
  std::string id;
  Atom atom;
  Extent extent;

  bool operator==(const Family& o) const = default;
};

/* A finite list of atom families; the module is the direct sum of all
   copies, so every element has finite support even over omega extents. */
class ModuleShape {
 public:
  ModuleShape() = default;
  explicit ModuleShape(std::vector<Family> families);

  const std::vector<Family>& families() const { return families_; }
  std::size_t family_count() const { return families_.size(); }
  const Family& family(std::size_t i) const { return families_.at(i); }

  /* position by id; nullopt when absent */
  std::optional<std::size_t> find(const std::string& id) const;
  std::size_t index_of(const std::string& id) const;  // throws shape_error

  bool all_divisible() const;
  bool all_integral() const;
  bool all_finite_extent() const;

  bool operator==(const ModuleShape& o) const = default;

 private:
  std::vector<Family> families_;
};

ModuleShape concat_shapes(const std::vector<ModuleShape>& parts);

/* coordinate address: family position within the shape + copy index */
struct Coord {
  std::uint32_t family;
  std::int64_t index;

  auto operator<=>(const Coord&) const = default;
};

/* Finite-support element of a ModuleShape. Zero coordinates are never
   stored, so support size and equality are literal map comparisons. */
class Element {
 public:
  Element() = default;
  explicit Element(ModuleShape shape) : shape_(std::move(shape)) {}
  static Element zero(ModuleShape shape) { return Element(std::move(shape)); }

  const ModuleShape& shape() const { return shape_; }
  const std::map<Coord, AtomElement>& coords() const { return coords_; }

  bool is_zero() const { return coords_.empty(); }
  std::size_t support_size() const { return coords_.size(); }

  /* zero when the coordinate is absent */
  AtomElement get(std::size_t family, std::int64_t index) const;
  AtomElement get(const std::string& family_id, std::int64_t index) const;

  /* validates the index against the extent and the value's atom against
     the family atom; storing zero clears the slot */
  void set(std::size_t family, std::int64_t index, const AtomElement& value);
  void set(const std::string& family_id, std::int64_t index,
           const AtomElement& value);

  bool operator==(const Element& o) const {
    return shape_ == o.shape_ && coords_ == o.coords_;
  }

 private:
  ModuleShape shape_;
  std::map<Coord, AtomElement> coords_;
};

/* coordinatewise group structure; shape mismatch throws shape_error */
Element elem_add(const Element& x, const Element& y);
Element elem_neg(const Element& x);
Element elem_sub(const Element& x, const Element& y);
Element elem_scalar_mul(const Integer& n, const Element& x);

/* n * q = x solved coordinatewise (n != 0). Divisibility of a direct sum
   is exactly coordinatewise divisibility; on failure `blocked_at` names
   the first coordinate (in coordinate order) with no solution. */
struct ElementDivision {
  std::optional<Element> quotient;
  std::optional<Coord> blocked_at;
};
ElementDivision elem_divide(const Integer& n, const Element& x);

/* element with one coordinate set to `raw` (canonicalized per the atom) */
Element single_coord_element(const ModuleShape& shape, std::size_t family,
                             std::int64_t index, const Rational& raw);

/* single random atom value with numerator/denominator/representative
   magnitudes bounded by `bound` */
AtomElement random_atom_element(const Atom& atom, SplitMix64& rng,
                                const Integer& bound);

/* Deterministic sampler: support size <= max_support, omega indices drawn
   from [0, 8*max_support). Equal seeds give equal elements. */
Element random_element(const ModuleShape& shape, std::uint64_t seed,
                       std::size_t max_support, const Integer& bound);
Element random_element(const ModuleShape& shape, SplitMix64& rng,
                       std::size_t max_support, const Integer& bound);

}  // namespace invlim
