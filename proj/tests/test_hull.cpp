#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "invlim/hull.hpp"

using namespace invlim;

namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

IntMatrix single_relation(long d) {
  IntMatrix m(1, 1);
  m(0, 0) = d;
  return m;
}

}  // namespace

TEST_CASE("decomposition of a dense relation matrix") {
  IntMatrix rel(2, 2);
  rel(0, 0) = 2; rel(0, 1) = 4;
  rel(1, 0) = 6; rel(1, 1) = 8;
  Decomposition d = decompose(rel, 2);
  CHECK(d.rank == 0);
  REQUIRE(d.invariant_factors.size() == 2);
  CHECK(d.invariant_factors[0] == 2);
  CHECK(d.invariant_factors[1] == 4);
  REQUIRE(d.parts.size() == 2);
  CHECK(d.parts[0].pk() == 2);
  CHECK(d.parts[1].pk() == 4);
  CHECK(finite_order(d) == Integer(8));
}

TEST_CASE("trivial factors are dropped") {
  Decomposition d = decompose(single_relation(1), 1);
  CHECK(d.rank == 0);
  CHECK(d.invariant_factors.empty());
  CHECK(finite_order(d) == Integer(1));

  Decomposition free1 = decompose(IntMatrix(1, 0), 1);
  CHECK(free1.rank == 1);
  CHECK(!finite_order(free1).has_value());
}

TEST_CASE("the cyclic-six presentation in full") {
  InjectivePresentation pres =
      build_injective_presentation(single_relation(6), 1);
  /* 6 = 2 * 3: two quasicyclic target families, no free part */
  CHECK(pres.m_shape.family_count() == 2);
  CHECK(pres.m_shape.family(0).atom == Atom::pruefer(2));
  CHECK(pres.m_shape.family(1).atom == Atom::pruefer(3));
  CHECK(pres.m_shape.all_divisible());
  CHECK(pres.n_shape.all_divisible());
  CHECK(pres.a_shape.all_integral());

  Element g = generator_vector_image(pres, {Integer(1)});
  CHECK(hom_apply(pres.f, g).is_zero());
  CHECK(!g.is_zero());
  CHECK(generator_vector_image(pres, {Integer(6)}).is_zero());
}

TEST_CASE("kernel membership recombines residues") {
  InjectivePresentation pres =
      build_injective_presentation(single_relation(6), 1);
  Element x(pres.m_shape);
  x.set(0, 0, AtomElement(Atom::pruefer(2), q(1, 2)));
  x.set(1, 0, AtomElement(Atom::pruefer(3), q(1, 3)));

  auto w = kernel_membership(pres, x);
  REQUIRE(w.has_value());
  REQUIRE(w->generator_coords.size() == 1);
  CHECK(floor_mod(w->generator_coords[0], Integer(6)) == 5);
  CHECK(kernel_witness_image(pres, *w) == x);
  CHECK(generator_vector_image(pres, {Integer(5)}) == x);
}

TEST_CASE("membership refuses elements outside the kernel") {
  InjectivePresentation pres =
      build_injective_presentation(single_relation(6), 1);
  Element deep(pres.m_shape);
  deep.set(0, 0, AtomElement(Atom::pruefer(2), q(1, 4)));
  CHECK(!kernel_membership(pres, deep).has_value());
  CHECK(!hom_apply(pres.f, deep).is_zero());

  InjectivePresentation free1 = build_injective_presentation(IntMatrix(1, 0), 1);
  Element half(free1.m_shape);
  half.set(0, 0, AtomElement(Atom::rationals(), q(1, 2)));
  CHECK(!kernel_membership(free1, half).has_value());
  Element seven(free1.m_shape);
  seven.set(0, 0, AtomElement(Atom::rationals(), Rational(7)));
  auto w = kernel_membership(free1, seven);
  REQUIRE(w.has_value());
  CHECK(w->generator_coords == std::vector<Integer>{Integer(7)});
}

TEST_CASE("mixed rank and torsion") {
  IntMatrix rel(2, 1);
  rel(0, 0) = 4;
  rel(1, 0) = 0;
  InjectivePresentation pres = build_injective_presentation(rel, 2);
  CHECK(pres.decomposition.rank == 1);
  REQUIRE(pres.decomposition.invariant_factors.size() == 1);
  CHECK(pres.decomposition.invariant_factors[0] == 4);
  CHECK(!finite_order(pres.decomposition).has_value());

  for (long a = 0; a < 4; ++a) {
    Element x = generator_vector_image(pres, {Integer(a), Integer(-3)});
    auto w = kernel_membership(pres, x);
    REQUIRE(w.has_value());
    CHECK(kernel_witness_image(pres, *w) == x);
  }
}

TEST_CASE("exhaustive kernel enumeration matches the order") {
  InjectivePresentation pres =
      build_injective_presentation(single_relation(6), 1);
  std::set<std::string> seen;
  for (long a = 0; a < 6; ++a) {
    Element x = generator_vector_image(pres, {Integer(a)});
    seen.insert(x.is_zero()
                    ? std::string("0")
                    : x.get(0, 0).value().str() + "|" + x.get(1, 0).value().str());
    REQUIRE(kernel_membership(pres, x).has_value());
  }
  CHECK(seen.size() == 6);
}
