#pragma once

#include <compare>
#include <optional>
#include <string>

#include "invlim/exact.hpp"

namespace invlim {

enum class AtomKind { ZZ, Cyclic, QQ, QmodZ, Pruefer };

/* One of the five building-block groups: Z, Z/d, Q, Q/Z, Z(p^infinity).
   The last three are the divisible ones. */
class Atom {
 public:
  static Atom integers() { return Atom(AtomKind::ZZ, 0); }
  static Atom cyclic(Integer d);    // requires d >= 2
  static Atom rationals() { return Atom(AtomKind::QQ, 0); }
  static Atom rationals_mod_one() { return Atom(AtomKind::QmodZ, 0); }
  static Atom pruefer(Integer p);   // requires p prime, p <= 10^6

  AtomKind kind() const { return kind_; }
  /* Cyclic: the order d; Pruefer: the prime p; otherwise unused (0) */
  const Integer& modulus() const { return modulus_; }

  bool is_divisible() const {
    return kind_ == AtomKind::QQ || kind_ == AtomKind::QmodZ ||
           kind_ == AtomKind::Pruefer;
  }
  bool is_integral() const {
    return kind_ == AtomKind::ZZ || kind_ == AtomKind::Cyclic;
  }

  bool operator==(const Atom& o) const = default;
  std::strong_ordering operator<=>(const Atom& o) const;

  std::string str() const;

 private:
  Atom(AtomKind kind, Integer modulus)
      : kind_(kind), modulus_(std::move(modulus)) {}
  AtomKind kind_;
  Integer modulus_;
};

/* Element of a single atom, stored via one canonical rational:
     ZZ       any integer            Cyclic(d)  integer in [0, d)
     QQ       any rational           QmodZ      rational in [0, 1)
     Pruefer  a/p^k in [0, 1), reduced.
   Canonical form makes equality literal field comparison. */
class AtomElement {
 public:
  /* canonicalizes `raw`; throws value_error when raw lies outside the
     atom's domain (non-integer for ZZ/Cyclic, non-p-power denominator
     for Pruefer) */
  AtomElement(Atom atom, Rational raw);
  static AtomElement zero(const Atom& atom) { return AtomElement(atom, 0); }

  const Atom& atom() const { return atom_; }
  const Rational& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  bool operator==(const AtomElement& o) const = default;

 private:
  Atom atom_;
  Rational value_;
};

/* group operations; mixing distinct atoms throws shape_error */
AtomElement atom_add(const AtomElement& x, const AtomElement& y);
AtomElement atom_neg(const AtomElement& x);
AtomElement atom_sub(const AtomElement& x, const AtomElement& y);
AtomElement atom_scalar_mul(const Integer& n, const AtomElement& x);

/* Solves n * y = x exactly (n != 0). nullopt means no solution exists --
   that is a result, not an error. When solutions exist the returned y is
   the minimal canonical representative, so equal inputs give equal
   witnesses. In the divisible atoms this never fails. */
std::optional<AtomElement> atom_divide(const Integer& n, const AtomElement& x);

/* injective Z/p^k -> Z(p^infinity), r -> [r / p^k];
   requires the cyclic order to be a prime power */
AtomElement cyclic_into_pruefer(const AtomElement& x);

/* quotient map Q -> Q/Z */
AtomElement reduce_q_to_qmodz(const AtomElement& x);

/* inclusion Z(p^infinity) -> Q/Z (identity on representatives) */
AtomElement pruefer_into_qmodz(const AtomElement& x);

}  // namespace invlim
