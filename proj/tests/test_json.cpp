#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invlim/json_io.hpp"
#include "invlim/report.hpp"

using namespace invlim;

namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

ModuleShape sample_shape() {
  return ModuleShape({Family{"p", Atom::pruefer(2), Extent::finite(2)},
                      Family{"q", Atom::rationals(), Extent::omega()},
                      Family{"c", Atom::cyclic(12), Extent::finite(1)}});
}

template <class T, class ToJson, class FromJson>
void roundtrip(const T& value, ToJson to, FromJson from) {
  Json j = to(value);
  T back = from(j, "$");
  CHECK(back == value);
  CHECK(to(back).dump() == j.dump());
}

}  // namespace

TEST_CASE("atoms round-trip") {
  for (const Atom& a : {Atom::integers(), Atom::cyclic(6), Atom::rationals(),
                        Atom::rationals_mod_one(), Atom::pruefer(3)})
    roundtrip(a, atom_to_json, atom_from_json);
  CHECK_THROWS_AS(atom_from_json(Json{{"atom", "nope"}}, "$"), parse_error);
  CHECK_THROWS_AS(atom_from_json(Json{{"atom", "cyclic"}, {"d", "0"}}, "$"),
                  parse_error);
}

TEST_CASE("shapes and elements round-trip") {
  ModuleShape s = sample_shape();
  roundtrip(s, shape_to_json, shape_from_json);

  Element x(s);
  x.set("p", 1, AtomElement(Atom::pruefer(2), q(3, 8)));
  x.set("q", 11, AtomElement(Atom::rationals(), q(-7, 2)));
  x.set("c", 0, AtomElement(Atom::cyclic(12), Rational(5)));
  roundtrip(x, element_to_json, element_from_json);
  roundtrip(Element(s), element_to_json, element_from_json);

  Json j = element_to_json(x);
  j["coords"][0][2] = "1/6";  // non-integer residue for the cyclic slot
  CHECK_THROWS_AS(element_from_json(j, "$"), parse_error);
}

TEST_CASE("parse errors carry the offending path") {
  Json j = shape_to_json(sample_shape());
  j[1]["extent"] = -3;
  try {
    shape_from_json(j, "$");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.path()).find("$[1]") == 0);
  }
}

TEST_CASE("matrices round-trip and reject ragged input") {
  IntMatrix m(2, 3);
  m(0, 0) = -4;
  m(1, 2) = Integer("123456789123456789");
  roundtrip(m, matrix_to_json, matrix_from_json);
  roundtrip(IntMatrix(0, 0), matrix_to_json, matrix_from_json);

  Json ragged = Json::array({Json::array({"1", "2"}), Json::array({"3"})});
  CHECK_THROWS_AS(matrix_from_json(ragged, "$"), parse_error);
}

TEST_CASE("homs round-trip through the builder layer") {
  ModuleShape a({Family{"v", Atom::rationals_mod_one(), Extent::finite(1)}});
  ModuleShape b({Family{"w", Atom::rationals(), Extent::finite(2)}});
  std::map<Coord, Element> images;
  images[{0, 0}] = single_coord_element(a, 0, 0, q(1, 2));
  std::vector<Hom> homs = {
      hom_zero(b, a),
      hom_identity(a),
      hom_mult_int(a, Integer(6)),
      hom_mult_rational(b, q(2, 3)),
      hom_reduce_q(ModuleShape({Family{"w", Atom::rationals(), Extent::finite(2)}})),
      hom_pruefer_mult(ModuleShape({Family{"p", Atom::pruefer(5), Extent::finite(1)}}), 2),
      hom_generator_image(
          ModuleShape({Family{"g", Atom::integers(), Extent::finite(1)}}), a,
          images),
      hom_compose(hom_mult_int(a, Integer(2)), hom_mult_int(a, Integer(3))),
  };
  for (const Hom& h : homs) {
    Json j = hom_to_json(h);
    Hom back = hom_from_json(j, "$");
    CHECK(hom_to_json(back).dump() == j.dump());
    CHECK(back.source() == h.source());
    CHECK(back.target() == h.target());
  }

  Json j = hom_to_json(hom_identity(a));
  j["op"] = "unknown";
  CHECK_THROWS_AS(hom_from_json(j, "$"), parse_error);
}

TEST_CASE("round-tripped homs act identically") {
  ModuleShape a({Family{"v", Atom::rationals_mod_one(), Extent::finite(1)}});
  Hom h = hom_compose(hom_mult_int(a, Integer(2)), hom_mult_int(a, Integer(5)));
  Hom back = hom_from_json(hom_to_json(h), "$");
  Element x = single_coord_element(a, 0, 0, q(1, 7));
  CHECK(hom_apply(back, x) == hom_apply(h, x));
}

TEST_CASE("presentation inputs accept both layouts") {
  Json bare{{"ngens", 2},
            {"relations", Json::array({Json::array({"2", "0"}),
                                       Json::array({"0", "12"})})}};
  PresentationInput in = presentation_input_from_json(bare, "$");
  CHECK(in.ngens == 2);
  CHECK(in.relations(1, 1) == 12);

  InjectivePresentation pres =
      build_injective_presentation(in.relations, in.ngens);
  Json full = presentation_to_json(pres, in);
  PresentationInput again = presentation_input_from_json(full, "$");
  CHECK(again.ngens == in.ngens);
  CHECK(again.relations == in.relations);

  Json empty_rel{{"ngens", 2}, {"relations", Json::array()}};
  PresentationInput free2 = presentation_input_from_json(empty_rel, "$");
  CHECK(free2.relations.rows() == 2);
  CHECK(free2.relations.cols() == 0);

  Json bad{{"ngens", 2}, {"relations", Json::array({Json::array({"2"})})}};
  CHECK_THROWS_AS(presentation_input_from_json(bad, "$"), parse_error);
}

TEST_CASE("sequences round-trip") {
  EventuallyIntegerSeq s({q(1, 2), Rational(3)}, Integer(-4));
  roundtrip(s, seq_to_json, seq_from_json);
  roundtrip(EventuallyIntegerSeq(), seq_to_json, seq_from_json);
  CHECK_THROWS_AS(seq_from_json(Json{{"head", Json::array()}}, "$"),
                  parse_error);
}

TEST_CASE("reports round-trip and serialize deterministically") {
  Report r;
  r.command = "selftest";
  r.seed = 42;
  r.elapsed_ms = 17;
  r.checks.push_back(pass_check("a/b", "anchor one"));
  r.checks.push_back(fail_check("c/d", "anchor two", Json{{"x", "1/2"}}));
  r.checks.push_back(skip_check("e/f", "anchor three"));
  CHECK(!r.all_pass());
  CHECK(r.fail_count() == 1);

  Json j = r.to_json();
  Report back = Report::from_json(j, "$");
  CHECK(back.command == r.command);
  CHECK(back.seed == r.seed);
  CHECK(back.checks == r.checks);
  CHECK(back.to_json().dump() == j.dump());

  std::string text = r.to_text();
  CHECK(text.find("a/b") != std::string::npos);
  CHECK(text.find("fail") != std::string::npos);
}

TEST_CASE("chain documents rebuild whole inverse chains") {
  ModuleShape s({Family{"v", Atom::rationals_mod_one(), Extent::finite(1)}});
  Json doc{{"stages", Json::array({shape_to_json(s), shape_to_json(s)})},
           {"maps", Json::array({hom_to_json(hom_mult_int(s, Integer(2)))})},
           {"f0_image",
            element_to_json(single_coord_element(s, 0, 0, q(1, 3)))}};
  ChainInput in = chain_input_from_json(doc, "$", "f0_image");
  CHECK(in.stages.size() == 2);
  CHECK(in.maps.size() == 1);
  REQUIRE(in.element.has_value());
  CHECK(in.element->get(0, 0).value() == q(1, 3));

  doc.erase("f0_image");
  ChainInput no_elem = chain_input_from_json(doc, "$", "f0_image");
  CHECK(!no_elem.element.has_value());
}
