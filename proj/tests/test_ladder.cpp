#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invlim/ladder.hpp"

using namespace invlim;

namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

ModuleShape qmodz1() {
  return ModuleShape({Family{"v", Atom::rationals_mod_one(), Extent::finite(1)}});
}

Element qz(const Rational& r) { return single_coord_element(qmodz1(), 0, 0, r); }

InverseChain constant_qmodz_chain(std::size_t stages, const Integer& mult) {
  ModuleShape s = qmodz1();
  return InverseChain(std::vector<ModuleShape>(stages, s),
                      std::vector<Hom>(stages - 1, hom_mult_int(s, mult)), 1);
}

}  // namespace

TEST_CASE("divisibility chain generators") {
  DirectChain d1 = big_div_chain({Integer(2)}, 1);
  CHECK(d1.generator(0) == Rational(1));
  CHECK(d1.generator(1) == q(1, 2));
  CHECK(d1.index(0) == 2);

  DirectChain d2 = big_div_chain({Integer(2), Integer(3)}, 2);
  CHECK(d2.generator(0) == Rational(1));
  CHECK(d2.generator(1) == q(1, 2));
  CHECK(d2.generator(2) == q(1, 36));
  CHECK(d2.index(0) == 2);
  CHECK(d2.index(1) == 18);
  CHECK(d2.embedding_factor(2) == 36);

  DirectChain d0 = big_div_chain({Integer(5)}, 0);
  CHECK(d0.length() == 0);
  CHECK(d0.generator(0) == Rational(1));

  /* a finite list keeps dividing by its full product at later stages */
  DirectChain tail = big_div_chain({Integer(2)}, 3);
  CHECK(tail.generator(2) == q(1, 4));
  CHECK(tail.generator(3) == q(1, 8));
  CHECK(tail.index(1) == 2);
  CHECK(tail.index(2) == 2);

  /* explicit repeats in the list multiply literally */
  DirectChain rep = big_div_chain({Integer(2), Integer(2)}, 2);
  CHECK(rep.generator(2) == q(1, 16));

  CHECK_THROWS_AS(big_div_chain({Integer(4)}, 1), value_error);
  CHECK_THROWS_AS(big_div_chain({}, 1), value_error);
}

TEST_CASE("one rung of the ladder") {
  ModuleShape s = qmodz1();
  Hom f0 = ladder_start(qz(q(1, 3)));
  auto f1 = ladder_step(f0, hom_mult_int(s, Integer(2)), Integer(2));
  REQUIRE(f1.has_value());
  Element gen(ladder_source_shape());
  gen.set(0, 0, AtomElement(Atom::integers(), Rational(1)));
  CHECK(hom_apply(*f1, gen) == qz(q(1, 12)));
  /* check 2*(2*[1/12]) = [1/3] */
  CHECK(elem_scalar_mul(Integer(4), hom_apply(*f1, gen)) == qz(q(1, 3)));

  auto id = ladder_step(f0, hom_identity(s), Integer(1));
  REQUIRE(id.has_value());
  CHECK(hom_apply(*id, gen) == qz(q(1, 3)));

  auto zero = ladder_step(ladder_start(Element(s)), hom_mult_int(s, Integer(2)),
                          Integer(2));
  REQUIRE(zero.has_value());
  CHECK(hom_apply(*zero, gen).is_zero());
}

TEST_CASE("the doubling ladder reaches one-192nd") {
  InverseChain inv = constant_qmodz_chain(4, Integer(2));
  DirectChain dir = big_div_chain({Integer(2)}, 3);
  LadderTranscript t = run_ladder(ladder_start(qz(q(1, 3))), inv, dir, 3, 7);
  REQUIRE(t.complete());
  CHECK(t.all_ok());
  REQUIRE(t.generator_images.size() == 4);
  CHECK(t.generator_images[0] == qz(q(1, 3)));
  CHECK(t.generator_images[3] == qz(q(1, 192)));
  /* 8 * (8 * [1/192]) = [1/3] */
  CHECK(elem_scalar_mul(Integer(64), t.generator_images[3]) == qz(q(1, 3)));
}

TEST_CASE("k = 0 is the trivial transcript") {
  InverseChain inv = constant_qmodz_chain(2, Integer(2));
  DirectChain dir = big_div_chain({Integer(2)}, 0);
  LadderTranscript t = run_ladder(ladder_start(qz(q(1, 5))), inv, dir, 0, 3);
  REQUIRE(t.complete());
  CHECK(t.all_ok());
  CHECK(t.generator_images.size() == 1);
  CHECK(t.generator_images[0] == qz(q(1, 5)));
}

TEST_CASE("ladders replay bit for bit") {
  InverseChain inv = constant_qmodz_chain(5, Integer(3));
  DirectChain dir = big_div_chain({Integer(2), Integer(3)}, 4);
  LadderTranscript a = run_ladder(ladder_start(qz(q(2, 7))), inv, dir, 4, 11);
  LadderTranscript b = run_ladder(ladder_start(qz(q(2, 7))), inv, dir, 4, 11);
  REQUIRE(a.complete());
  CHECK(a.all_ok());
  CHECK(a.generator_images == b.generator_images);
}

TEST_CASE("certificate for one-fifth over the identity chain") {
  ModuleShape s = qmodz1();
  InverseChain inv(std::vector<ModuleShape>(3, s),
                   std::vector<Hom>(2, hom_identity(s)), 1);
  DivisibilityCertificate cert =
      divisibility_certificate(qz(q(1, 5)), inv, {Integer(2)}, 2);
  CHECK(cert.verified);
  CHECK(cert.c == 4);
  CHECK(cert.y == qz(q(1, 20)));
  CHECK(elem_scalar_mul(cert.c, cert.y) == qz(q(1, 5)));
}

TEST_CASE("certificate over a mixed two-family chain") {
  ModuleShape s({Family{"p3", Atom::pruefer(3), Extent::finite(1)},
                 Family{"w", Atom::rationals_mod_one(), Extent::finite(1)}});
  Hom phi = hom_direct_sum(
      {hom_mult_int(ModuleShape({s.family(0)}), Integer(3)),
       hom_identity(ModuleShape({s.family(1)}))});
  InverseChain inv({s, s}, {phi}, 1);
  Element x(s);
  x.set("p3", 0, AtomElement(Atom::pruefer(3), q(1, 3)));
  DivisibilityCertificate cert =
      divisibility_certificate(x, inv, {Integer(3)}, 1);
  CHECK(cert.verified);
  CHECK(cert.c == 3);
  Hom phi01 = inv.composed(0, 1);
  CHECK(elem_scalar_mul(cert.c, hom_apply(phi01, cert.y)) == x);

  DivisibilityCertificate zero =
      divisibility_certificate(Element(s), inv, {Integer(3)}, 1);
  CHECK(zero.verified);
  CHECK(zero.y.is_zero());
}

TEST_CASE("chain construction rejects bad stages and maps") {
  ModuleShape cy({Family{"c", Atom::cyclic(6), Extent::finite(1)}});
  CHECK_THROWS_AS(InverseChain({cy, cy}, {hom_mult_int(cy, Integer(2))}, 19),
                  shape_error);
  ModuleShape s = qmodz1();
  CHECK_THROWS_AS(InverseChain({s, s}, {hom_zero(s, s)}, 19), value_error);
}
