#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "invlim/systems.hpp"

using namespace invlim;

namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

InjectivePresentation zz_pres() {
  return build_injective_presentation(IntMatrix(1, 0), 1);
}

ModuleShape qmodz1() {
  return ModuleShape({Family{"n", Atom::rationals_mod_one(), Extent::finite(1)}});
}

}  // namespace

TEST_CASE("membership in one finite-subset submodule") {
  SubmodSystem sys(zz_pres());
  Element x = sys.make_element(
      generator_vector_image(sys.presentation(), {Integer(7)}), {});
  CHECK(pD_contains(sys, FiniteSubsetD{{1}}, x));
  CHECK(pD_contains(sys, FiniteSubsetD{{1, 2, 5}}, x));

  Element m0 = single_coord_element(sys.presentation().m_shape, 0, 0, q(1, 2));
  Element y = sys.make_element(m0, {});
  Element fm0 = hom_apply(sys.presentation().f, m0);
  Element with3 = sys.make_element(m0, {{3, fm0}});
  CHECK(pD_contains(sys, FiniteSubsetD{{3}}, with3));
  CHECK(!pD_contains(sys, FiniteSubsetD{{3, 4}}, with3));
  CHECK(!pD_contains(sys, FiniteSubsetD{{4}}, with3));
  CHECK(!pD_contains(sys, FiniteSubsetD{{3}}, y));
}

TEST_CASE("intersection over all finite subsets is the kernel") {
  SubmodSystem sys(zz_pres());
  const InjectivePresentation& pres = sys.presentation();

  Element in = sys.make_element(generator_vector_image(pres, {Integer(7)}), {});
  auto w = intersection_member(sys, in);
  REQUIRE(w.has_value());
  CHECK(w->generator_coords == std::vector<Integer>{Integer(7)});

  Element half = sys.make_element(
      single_coord_element(pres.m_shape, 0, 0, q(1, 2)), {});
  CHECK(!intersection_member(sys, half).has_value());

  Element noise = sys.make_element(
      single_coord_element(pres.m_shape, 0, 0, q(1, 2)),
      {{5, single_coord_element(pres.n_shape, 0, 0, q(1, 2))}});
  CHECK(!intersection_member(sys, noise).has_value());
  CHECK(!pD_contains(sys, FiniteSubsetD{{7}}, noise));
}

TEST_CASE("dropping and reinserting the constrained coordinates") {
  SubmodSystem sys(zz_pres());
  const InjectivePresentation& pres = sys.presentation();
  FiniteSubsetD D{{2, 3}};

  Element base = sys.make_element(
      single_coord_element(pres.m_shape, 0, 0, q(5, 3)),
      {{1, single_coord_element(pres.n_shape, 0, 0, q(1, 7))}});
  Element mem = pD_reinsert(sys, D, base);
  CHECK(pD_contains(sys, D, mem));
  CHECK(pD_drop(sys, D, mem) == base);
  CHECK(pD_reinsert(sys, D, pD_drop(sys, D, mem)) == mem);

  Element mem2 = pD_reinsert(
      sys, D,
      sys.make_element(single_coord_element(pres.m_shape, 0, 0, q(1, 3)), {}));
  CHECK(pD_drop(sys, D, elem_add(mem, mem2)) ==
        elem_add(pD_drop(sys, D, mem), pD_drop(sys, D, mem2)));
}

TEST_CASE("fiber sums over a two-stage chain") {
  SetChain chain({1, 2}, {{0, 0}});
  ModuleShape n = qmodz1();
  Hom phi = fiber_sum_map(chain, 0, n);

  Element x(phi.source());
  x.set(0, 0, AtomElement(Atom::rationals_mod_one(), q(1, 3)));
  x.set(0, 1, AtomElement(Atom::rationals_mod_one(), q(1, 3)));
  CHECK(hom_apply(phi, x).get(0, 0).value() == q(2, 3));

  Element y(phi.target());
  y.set(0, 0, AtomElement(Atom::rationals_mod_one(), q(1, 5)));
  auto pre = hom_preimage(phi, y);
  REQUIRE(pre.has_value());
  CHECK(pre->get(0, 0).value() == q(1, 5));
  CHECK(pre->get(0, 1).is_zero());

  SetChain perm({2, 2}, {{1, 0}});
  Hom swap = fiber_sum_map(perm, 0, n);
  Element z(swap.source());
  z.set(0, 0, AtomElement(Atom::rationals_mod_one(), q(1, 7)));
  CHECK(hom_apply(swap, z).get(0, 1).value() == q(1, 7));
}

TEST_CASE("thread supports grow and tie into bijections") {
  ModuleShape n = qmodz1();

  SetChain bij({1, 1, 1}, {{0}, {0}});
  Element top(fiber_stage_shape(n, 1));
  top.set(0, 0, AtomElement(Atom::rationals_mod_one(), q(1, 5)));
  ThreadPrefix t = ThreadPrefix::from_top(bij, n, top);
  ThreadSupportReport rep = thread_support_analysis(t);
  CHECK(rep.supports ==
        std::vector<std::vector<std::int64_t>>{{0}, {0}, {0}});
  CHECK(rep.monotone);
  CHECK(rep.all_bijections());

  /* two fiber coordinates of order two cancel in the sum below */
  SetChain cancel({1, 2}, {{0, 0}});
  Element half2(fiber_stage_shape(n, 2));
  half2.set(0, 0, AtomElement(Atom::rationals_mod_one(), q(1, 2)));
  half2.set(0, 1, AtomElement(Atom::rationals_mod_one(), q(1, 2)));
  ThreadPrefix tc = ThreadPrefix::from_top(cancel, n, half2);
  ThreadSupportReport rc = thread_support_analysis(tc);
  CHECK(rc.supports == std::vector<std::vector<std::int64_t>>{{}, {0, 1}});
  CHECK(rc.monotone);
  CHECK(rc.all_bijections());

  ThreadPrefix zero = ThreadPrefix::from_top(cancel, n,
                                             Element(fiber_stage_shape(n, 2)));
  ThreadSupportReport rz = thread_support_analysis(zero);
  CHECK(rz.supports == std::vector<std::vector<std::int64_t>>{{}, {}});
  CHECK(rz.monotone);
}

TEST_CASE("stage membership solves the sum constraint") {
  OntoStage stage(zz_pres(), 2, 1);
  const InjectivePresentation& pres = stage.presentation();

  CHECK(onto_stage_contains(stage, Element(stage.shape())));

  Element x0 = single_coord_element(pres.m_shape, 0, 0, q(1, 3));
  Element base = stage.make_element(x0, {});
  Element solved = onto_stage_reinsert(stage, base);
  CHECK(onto_stage_contains(stage, solved));
  CHECK(stage.m_component(solved) == x0);
  CHECK(onto_stage_drop(stage, solved) == base);

  Element broken = solved;
  broken.set(stage.shape().family_count() - 1, 0,
             AtomElement(Atom::rationals_mod_one(), q(1, 2)));
  CHECK(!onto_stage_contains(stage, broken));
}

TEST_CASE("connecting maps preserve stage membership both ways") {
  OntoStage fine(zz_pres(), 3, 0);
  OntoStage coarse(zz_pres(), 2, 0);
  Hom conn = onto_connecting_map(fine, coarse, {0, 1, 1});

  Element x0 = single_coord_element(fine.presentation().m_shape, 0, 0, q(2, 5));
  Element x = onto_stage_reinsert(
      fine,
      fine.make_element(
          x0, {{1, single_coord_element(fine.presentation().n_shape, 0, 0,
                                        q(1, 4))}}));
  Element y = hom_apply(conn, x);
  CHECK(onto_stage_contains(coarse, y));
  CHECK(coarse.m_component(y) == x0);

  auto pre = hom_preimage(conn, y);
  REQUIRE(pre.has_value());
  CHECK(onto_stage_contains(fine, *pre));
  CHECK(hom_apply(conn, *pre) == y);

  /* all-zero N-part forces the M-component into the kernel */
  Element gen = generator_vector_image(fine.presentation(), {Integer(4)});
  Element z = fine.make_element(gen, {});
  CHECK(onto_stage_contains(fine, z));
  Element zc = hom_apply(conn, z);
  CHECK(onto_stage_contains(coarse, zc));
  CHECK(coarse.n_total(zc).is_zero());
  Element nonker = fine.make_element(
      single_coord_element(fine.presentation().m_shape, 0, 0, q(1, 2)), {});
  CHECK(!onto_stage_contains(fine, nonker));
}

TEST_CASE("eventually integer sequences project onto the stages") {
  EventuallyIntegerSeq seq({q(1, 2)}, Integer(1));
  CHECK(seq.at(0) == q(1, 2));
  CHECK(seq.at(1) == Rational(1));
  CHECK(seq.at(100) == Rational(1));

  Element at0 = limit_seq_stage_project(seq, 0);
  CHECK(at0.get("t", 0).value() == q(1, 2));
  CHECK(at0.support_size() == 1);

  Element at2 = limit_seq_stage_project(seq, 2);
  CHECK(at2.get("q", 0).value() == q(1, 2));
  CHECK(at2.get("q", 1).value() == Rational(1));
  CHECK(limit_seq_connect(at2, 2, 0) == at0);
}

TEST_CASE("division law on represented sequences") {
  EventuallyIntegerSeq one({}, Integer(1));
  for (long k = 2; k <= 12; ++k) {
    SeqDivision d = limit_seq_divisibility(one, Integer(k));
    CHECK(!d.quotient.has_value());
    CHECK(d.blocked_tail == Integer(1));
  }

  EventuallyIntegerSeq s({q(1, 2)}, Integer(0));
  SeqDivision d7 = limit_seq_divisibility(s, Integer(7));
  REQUIRE(d7.quotient.has_value());
  CHECK(d7.quotient->head() == std::vector<Rational>{q(1, 14)});
  CHECK(d7.quotient->tail() == 0);
  CHECK(seq_scalar_mul(Integer(7), *d7.quotient) == s);

  EventuallyIntegerSeq t({q(3, 4)}, Integer(6));
  REQUIRE(limit_seq_divisibility(t, Integer(3)).quotient.has_value());
  CHECK(!limit_seq_divisibility(t, Integer(4)).quotient.has_value());
  CHECK(limit_seq_divisibility(t, Integer(1)).quotient == t);
}

TEST_CASE("divisible preimages land in the tail-zero class") {
  ModuleShape m1 = limit_seq_stage_shape(1);
  Element x(m1);
  x.set("q", 0, AtomElement(Atom::rationals(), q(1, 3)));
  x.set("t", 4, AtomElement(Atom::rationals_mod_one(), q(2, 5)));
  EventuallyIntegerSeq pre = limit_seq_divisible_preimage(x, 1);
  CHECK(pre.tail() == 0);
  CHECK(pre.head() ==
        std::vector<Rational>{q(1, 3), Rational(0), Rational(0), Rational(0),
                              q(2, 5)});
  CHECK(limit_seq_stage_project(pre, 1) == x);
  for (long k = 2; k <= 12; ++k)
    CHECK(limit_seq_divisibility(pre, Integer(k)).quotient.has_value());

  CHECK(limit_seq_divisible_preimage(Element(limit_seq_stage_shape(0)), 0).is_zero());
}
