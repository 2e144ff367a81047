#include "invlim/atoms.hpp"

namespace invlim {

Atom Atom::cyclic(Integer d) {
  if (d < 2) throw value_error("cyclic atom needs order >= 2");
  return Atom(AtomKind::Cyclic, std::move(d));
}

Atom Atom::pruefer(Integer p) {
  if (p > 1000000) throw value_error("pruefer atom supports primes <= 10^6");
  if (!is_prime(p))
    throw value_error("pruefer atom needs a prime, got " + int_to_string(p));
  return Atom(AtomKind::Pruefer, std::move(p));
}

std::strong_ordering Atom::operator<=>(const Atom& o) const {
  if (kind_ != o.kind_) return kind_ <=> o.kind_;
  int c = cmp(modulus_, o.modulus_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Atom::str() const {
  switch (kind_) {
    case AtomKind::ZZ: return "Z";
    case AtomKind::Cyclic: return "Z/" + int_to_string(modulus_);
    case AtomKind::QQ: return "Q";
    case AtomKind::QmodZ: return "Q/Z";
    case AtomKind::Pruefer: return "Z(" + int_to_string(modulus_) + "^inf)";
  }
  return "?";
}

namespace {

/* p-adic valuation of a positive integer that must be exactly p^k */
std::optional<std::uint64_t> pure_power_exponent(Integer n, const Integer& p) {
  std::uint64_t k = 0;
  while (n > 1) {
    if (!mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) return std::nullopt;
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    ++k;
  }
  return k;
}

}  // namespace

AtomElement::AtomElement(Atom atom, Rational raw)
    : atom_(std::move(atom)), value_(std::move(raw)) {
  switch (atom_.kind()) {
    case AtomKind::ZZ:
      if (!value_.is_integer())
        throw value_error("Z element must be an integer, got " + value_.str());
      break;
    case AtomKind::Cyclic:
      if (!value_.is_integer())
        throw value_error("Z/d element must be an integer, got " + value_.str());
      value_ = Rational(floor_mod(value_.num(), atom_.modulus()));
      break;
    case AtomKind::QQ:
      break;
    case AtomKind::QmodZ:
      value_ = value_.frac();
      break;
    case AtomKind::Pruefer: {
      value_ = value_.frac();
      if (!pure_power_exponent(value_.den(), atom_.modulus()))
        throw value_error("Pruefer(" + int_to_string(atom_.modulus()) +
                          ") element needs a p-power denominator, got " +
                          value_.str());
      break;
    }
  }
}

namespace {

void require_same_atom(const AtomElement& x, const AtomElement& y) {
  if (!(x.atom() == y.atom()))
    throw shape_error("atom mismatch: " + x.atom().str() + " vs " +
                      y.atom().str());
}

}  // namespace

AtomElement atom_add(const AtomElement& x, const AtomElement& y) {
  require_same_atom(x, y);
  return AtomElement(x.atom(), x.value() + y.value());
}

AtomElement atom_neg(const AtomElement& x) {
  return AtomElement(x.atom(), -x.value());
}

AtomElement atom_sub(const AtomElement& x, const AtomElement& y) {
  require_same_atom(x, y);
  return AtomElement(x.atom(), x.value() - y.value());
}

AtomElement atom_scalar_mul(const Integer& n, const AtomElement& x) {
  return AtomElement(x.atom(), Rational(n) * x.value());
}

std::optional<AtomElement> atom_divide(const Integer& n, const AtomElement& x) {
  if (n == 0) throw value_error("atom_divide needs n != 0");
  const Atom& atom = x.atom();
  switch (atom.kind()) {
    case AtomKind::QQ:
      return AtomElement(atom, x.value() / Rational(n));

    case AtomKind::ZZ: {
      if (!mpz_divisible_p(x.value().num().get_mpz_t(), n.get_mpz_t()))
        return std::nullopt;
      Integer q;
      mpz_divexact(q.get_mpz_t(), x.value().num().get_mpz_t(), n.get_mpz_t());
      return AtomElement(atom, Rational(q));
    }

    case AtomKind::Cyclic: {
      const Integer& d = atom.modulus();
      Integer nn = floor_mod(n, d);
      const Integer& r = x.value().num();
      if (nn == 0) {
        if (r == 0) return AtomElement::zero(atom);
        return std::nullopt;
      }
      Integer g = gcd(nn, d);
      if (floor_mod(r, g) != 0) return std::nullopt;
      Integer dd = d / g;
      /* minimal solution: (r/g) * (n/g)^{-1} reduced mod d/g */
      Integer y = floor_mod((r / g) * mod_inverse(nn / g, dd), dd);
      return AtomElement(atom, Rational(y));
    }

    case AtomKind::QmodZ: {
      if (n < 0) {
        auto y = atom_divide(-n, atom_neg(x));
        return y;  // n*y = x and -n*y = -x have the same solution sets
      }
      /* representative a/b in [0,1): least solution is a/(n b) */
      return AtomElement(atom, Rational(x.value().num(), n * x.value().den()));
    }

    case AtomKind::Pruefer: {
      const Integer& p = atom.modulus();
      Integer m = n;
      std::uint64_t v = 0;
      while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++v;
      }
      std::uint64_t k = *pure_power_exponent(x.value().den(), p);
      if (k == 0 && x.value().is_zero()) {
        /* least solution of n*y = 0 is y = 0 */
        return AtomElement::zero(atom);
      }
      Integer pk = pow_int(p, k);
      Integer c = floor_mod(x.value().num() * mod_inverse(floor_mod(m, pk), pk), pk);
      return AtomElement(atom, Rational(c, pow_int(p, k + v)));
    }
  }
  throw value_error("unreachable atom kind");
}

AtomElement cyclic_into_pruefer(const AtomElement& x) {
  if (x.atom().kind() != AtomKind::Cyclic)
    throw shape_error("cyclic_into_pruefer needs a Z/d element");
  auto factors = factorize(x.atom().modulus());
  if (factors.size() != 1)
    throw value_error("cyclic_into_pruefer: order " +
                      int_to_string(x.atom().modulus()) +
                      " is not a prime power");
  const auto& [p, k] = factors.front();
  return AtomElement(Atom::pruefer(p),
                     Rational(x.value().num(), pow_int(p, k)));
}

AtomElement reduce_q_to_qmodz(const AtomElement& x) {
  if (x.atom().kind() != AtomKind::QQ)
    throw shape_error("reduce_q_to_qmodz needs a Q element");
  return AtomElement(Atom::rationals_mod_one(), x.value());
}

AtomElement pruefer_into_qmodz(const AtomElement& x) {
  if (x.atom().kind() != AtomKind::Pruefer)
    throw shape_error("pruefer_into_qmodz needs a Pruefer element");
  return AtomElement(Atom::rationals_mod_one(), x.value());
}

}  // namespace invlim
