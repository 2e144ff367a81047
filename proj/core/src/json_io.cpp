#include "invlim/json_io.hpp"

#include <algorithm>
#include <tuple>

#include "invlim/errors.hpp"

namespace invlim {

namespace {

std::string child(const std::string& path, const char* key) {
  return path + "." + key;
}

std::string item(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw parse_error(path, what);
}

const Json& expect_object(const Json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected object");
  return j;
}

const Json& expect_array(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected array");
  return j;
}

/* rebuilders funnel domain validation failures into parse errors so a bad
   document always reports a JSON path */
template <class F>
auto rebuild(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const parse_error&) {
    throw;
  } catch (const error& e) {
    throw parse_error(path, e.what());
  }
}

}  // namespace

const Json& json_field(const Json& j, const char* key,
                       const std::string& path) {
  expect_object(j, path);
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string json_string(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected string");
  return j.get<std::string>();
}

std::int64_t json_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected integer");
  return j.get<std::int64_t>();
}

Integer json_integer(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (!j.is_string()) bad(path, "expected integer string");
  return rebuild(path, [&] { return int_from_string(j.get<std::string>()); });
}

Rational json_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(j.get<std::int64_t>()));
  if (!j.is_string()) bad(path, "expected rational string \"a\" or \"a/b\"");
  return rebuild(path,
                 [&] { return Rational::parse(j.get<std::string>()); });
}

Json atom_to_json(const Atom& a) {
  Json j;
  switch (a.kind()) {
    case AtomKind::ZZ: j["atom"] = "z"; break;
    case AtomKind::Cyclic:
      j["atom"] = "cyclic";
      j["d"] = int_to_string(a.modulus());
      break;
    case AtomKind::QQ: j["atom"] = "q"; break;
    case AtomKind::QmodZ: j["atom"] = "q_mod_z"; break;
    case AtomKind::Pruefer:
      j["atom"] = "pruefer";
      j["p"] = int_to_string(a.modulus());
      break;
  }
  return j;
}

Atom atom_from_json(const Json& j, const std::string& path) {
  std::string kind = json_string(json_field(j, "atom", path),
                                 child(path, "atom"));
  return rebuild(path, [&]() -> Atom {
    if (kind == "z") return Atom::integers();
    if (kind == "q") return Atom::rationals();
    if (kind == "q_mod_z") return Atom::rationals_mod_one();
    if (kind == "cyclic")
      return Atom::cyclic(json_integer(json_field(j, "d", path),
                                       child(path, "d")));
    if (kind == "pruefer")
      return Atom::pruefer(json_integer(json_field(j, "p", path),
                                        child(path, "p")));
    bad(child(path, "atom"), "unknown atom \"" + kind + "\"");
  });
}

Json shape_to_json(const ModuleShape& s) {
  Json out = Json::array();
  for (const Family& f : s.families()) {
    Json fam;
    fam["id"] = f.id;
    fam["atom"] = atom_to_json(f.atom);
    if (f.extent.is_omega)
      fam["extent"] = "omega";
    else
      fam["extent"] = f.extent.n;
    out.push_back(std::move(fam));
  }
  return out;
}

ModuleShape shape_from_json(const Json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<Family> families;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string fp = item(path, i);
    const Json& fj = j[i];
    std::string id = json_string(json_field(fj, "id", fp), child(fp, "id"));
    Atom atom = atom_from_json(json_field(fj, "atom", fp), child(fp, "atom"));
    const Json& ej = json_field(fj, "extent", fp);
    Extent extent = Extent::omega();
    if (ej.is_string()) {
      if (ej.get<std::string>() != "omega")
        bad(child(fp, "extent"), "expected \"omega\" or a count");
    } else {
      std::int64_t n = json_int(ej, child(fp, "extent"));
      if (n < 0) bad(child(fp, "extent"), "negative extent");
      extent = Extent::finite(n);
    }
    families.push_back(Family{std::move(id), atom, extent});
  }
  return rebuild(path, [&] { return ModuleShape(std::move(families)); });
}

Json element_to_json(const Element& x) {
  Json coords = Json::array();
  std::vector<std::tuple<std::string, std::int64_t, std::string>> rows;
  for (const auto& [coord, value] : x.coords())
    rows.emplace_back(x.shape().families()[coord.family].id, coord.index,
                      value.value().str());
  std::sort(rows.begin(), rows.end());
  for (auto& [id, index, value] : rows)
    coords.push_back(Json::array({id, index, value}));
  Json j;
  j["shape"] = shape_to_json(x.shape());
  j["coords"] = std::move(coords);
  return j;
}

Element element_from_json(const Json& j, const std::string& path) {
  ModuleShape shape =
      shape_from_json(json_field(j, "shape", path), child(path, "shape"));
  Element x(shape);
  const Json& coords = expect_array(json_field(j, "coords", path),
                                    child(path, "coords"));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const std::string cp = item(child(path, "coords"), i);
    const Json& row = expect_array(coords[i], cp);
    if (row.size() != 3) bad(cp, "expected [family, index, value]");
    std::string id = json_string(row[0], item(cp, 0));
    auto pos = shape.find(id);
    if (!pos) bad(item(cp, 0), "unknown family \"" + id + "\"");
    std::int64_t index = json_int(row[1], item(cp, 1));
    Rational value = json_rational(row[2], item(cp, 2));
    rebuild(cp, [&] {
      x.set(*pos, index, AtomElement(shape.families()[*pos].atom, value));
      return 0;
    });
  }
  return x;
}

namespace {

const char* op_name(HomKind k) {
  switch (k) {
    case HomKind::Zero: return "zero";
    case HomKind::Identity: return "identity";
    case HomKind::Route: return "route";
    case HomKind::MultRational: return "mult_rational";
    case HomKind::MultInt: return "mult_int";
    case HomKind::ReduceQ: return "reduce_q";
    case HomKind::EmbedCyclic: return "embed_cyclic";
    case HomKind::PrueferMult: return "pruefer_mult";
    case HomKind::GeneratorImage: return "generator_image";
    case HomKind::FiberSum: return "fiber_sum";
    case HomKind::Sum: return "sum";
    case HomKind::DirectSum: return "direct_sum";
    case HomKind::Compose: return "compose";
  }
  throw error("unreachable hom kind");
}

}  // namespace

Json hom_to_json(const Hom& h) {
  const HomNode& n = h.node();
  Json j;
  j["op"] = op_name(n.kind);
  switch (n.kind) {
    case HomKind::Zero:
      j["source"] = shape_to_json(n.source);
      j["target"] = shape_to_json(n.target);
      break;
    case HomKind::Identity:
      j["shape"] = shape_to_json(n.source);
      break;
    case HomKind::Route: {
      j["source"] = shape_to_json(n.source);
      j["target"] = shape_to_json(n.target);
      Json routes = Json::array();
      for (const auto& [sp, tp] : n.routes)
        routes.push_back(Json::array({n.source.families()[sp].id,
                                      n.target.families()[tp].id}));
      j["routes"] = std::move(routes);
      break;
    }
    case HomKind::MultRational:
      j["shape"] = shape_to_json(n.source);
      j["q"] = n.scalar_q.str();
      break;
    case HomKind::MultInt:
      j["shape"] = shape_to_json(n.source);
      j["n"] = int_to_string(n.scalar_n);
      break;
    case HomKind::ReduceQ:
      j["shape"] = shape_to_json(n.source);
      break;
    case HomKind::EmbedCyclic:
      j["shape"] = shape_to_json(n.source);
      break;
    case HomKind::PrueferMult:
      j["shape"] = shape_to_json(n.source);
      j["k"] = n.exponent;
      break;
    case HomKind::GeneratorImage: {
      j["source"] = shape_to_json(n.source);
      j["target"] = shape_to_json(n.target);
      std::vector<std::tuple<std::string, std::int64_t, Json>> rows;
      for (const auto& [coord, image] : n.images)
        rows.emplace_back(n.source.families()[coord.family].id, coord.index,
                          element_to_json(image));
      std::sort(rows.begin(), rows.end(),
                [](const auto& a, const auto& b) {
                  return std::tie(std::get<0>(a), std::get<1>(a)) <
                         std::tie(std::get<0>(b), std::get<1>(b));
                });
      Json images = Json::array();
      for (auto& [id, index, image] : rows)
        images.push_back(Json::array({id, index, std::move(image)}));
      j["images"] = std::move(images);
      break;
    }
    case HomKind::FiberSum:
      j["source"] = shape_to_json(n.source);
      j["target"] = shape_to_json(n.target);
      j["map"] = n.set_map;
      break;
    case HomKind::Sum:
    case HomKind::DirectSum: {
      Json parts = Json::array();
      for (const Hom& p : n.parts) parts.push_back(hom_to_json(p));
      j["parts"] = std::move(parts);
      break;
    }
    case HomKind::Compose:
      j["after"] = hom_to_json(n.parts[0]);
      j["before"] = hom_to_json(n.parts[1]);
      break;
  }
  return j;
}

Hom hom_from_json(const Json& j, const std::string& path) {
  std::string op = json_string(json_field(j, "op", path), child(path, "op"));

  auto shape_at = [&](const char* key) {
    return shape_from_json(json_field(j, key, path), child(path, key));
  };

  return rebuild(path, [&]() -> Hom {
    if (op == "zero") return hom_zero(shape_at("source"), shape_at("target"));
    if (op == "identity") return hom_identity(shape_at("shape"));
    if (op == "route") {
      const Json& rj = expect_array(json_field(j, "routes", path),
                                    child(path, "routes"));
      std::vector<std::pair<std::string, std::string>> routes;
      for (std::size_t i = 0; i < rj.size(); ++i) {
        const std::string rp = item(child(path, "routes"), i);
        const Json& row = expect_array(rj[i], rp);
        if (row.size() != 2) bad(rp, "expected [source id, target id]");
        routes.emplace_back(json_string(row[0], item(rp, 0)),
                            json_string(row[1], item(rp, 1)));
      }
      return hom_route(shape_at("source"), shape_at("target"), routes);
    }
    if (op == "mult_rational")
      return hom_mult_rational(shape_at("shape"),
                               json_rational(json_field(j, "q", path),
                                             child(path, "q")));
    if (op == "mult_int")
      return hom_mult_int(shape_at("shape"),
                          json_integer(json_field(j, "n", path),
                                       child(path, "n")));
    if (op == "reduce_q") return hom_reduce_q(shape_at("shape"));
    if (op == "embed_cyclic") return hom_embed_cyclic(shape_at("shape"));
    if (op == "pruefer_mult") {
      std::int64_t k = json_int(json_field(j, "k", path), child(path, "k"));
      if (k < 0) bad(child(path, "k"), "negative exponent");
      return hom_pruefer_mult(shape_at("shape"),
                              static_cast<std::uint64_t>(k));
    }
    if (op == "generator_image") {
      ModuleShape source = shape_at("source");
      ModuleShape target = shape_at("target");
      const Json& ij = expect_array(json_field(j, "images", path),
                                    child(path, "images"));
      std::map<Coord, Element> images;
      for (std::size_t i = 0; i < ij.size(); ++i) {
        const std::string ip = item(child(path, "images"), i);
        const Json& row = expect_array(ij[i], ip);
        if (row.size() != 3) bad(ip, "expected [family, index, element]");
        std::string id = json_string(row[0], item(ip, 0));
        auto pos = source.find(id);
        if (!pos) bad(item(ip, 0), "unknown family \"" + id + "\"");
        std::int64_t index = json_int(row[1], item(ip, 1));
        images.emplace(Coord{static_cast<std::uint32_t>(*pos), index},
                       element_from_json(row[2], item(ip, 2)));
      }
      return hom_generator_image(std::move(source), std::move(target),
                                 std::move(images));
    }
    if (op == "fiber_sum") {
      const Json& mj = expect_array(json_field(j, "map", path),
                                    child(path, "map"));
      std::vector<std::int64_t> set_map;
      for (std::size_t i = 0; i < mj.size(); ++i)
        set_map.push_back(json_int(mj[i], item(child(path, "map"), i)));
      return hom_fiber_sum(shape_at("source"), shape_at("target"),
                           std::move(set_map));
    }
    if (op == "sum" || op == "direct_sum") {
      const Json& pj = expect_array(json_field(j, "parts", path),
                                    child(path, "parts"));
      std::vector<Hom> parts;
      for (std::size_t i = 0; i < pj.size(); ++i)
        parts.push_back(hom_from_json(pj[i], item(child(path, "parts"), i)));
      return op == "sum" ? hom_sum(std::move(parts))
                         : hom_direct_sum(std::move(parts));
    }
    if (op == "compose")
      return hom_compose(
          hom_from_json(json_field(j, "after", path), child(path, "after")),
          hom_from_json(json_field(j, "before", path), child(path, "before")));
    bad(child(path, "op"), "unknown op \"" + op + "\"");
  });
}

Json matrix_to_json(const IntMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.cols(); ++k)
      row.push_back(int_to_string(a(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j, const std::string& path) {
  expect_array(j, path);
  std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = expect_array(j[i], item(path, i));
    if (i == 0)
      cols = row.size();
    else if (row.size() != cols)
      bad(item(path, i), "ragged matrix row");
  }
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k)
      a(i, k) = json_integer(j[i][k], item(item(path, i), k));
  return a;
}

PresentationInput presentation_input_from_json(const Json& j,
                                               const std::string& path) {
  const Json* doc = &j;
  std::string base = path;
  if (j.is_object() && j.contains("input")) {
    doc = &j["input"];
    base = child(path, "input");
  }
  std::int64_t ngens = json_int(json_field(*doc, "ngens", base),
                                child(base, "ngens"));
  if (ngens < 0) bad(child(base, "ngens"), "negative generator count");
  IntMatrix relations = matrix_from_json(json_field(*doc, "relations", base),
                                         child(base, "relations"));
  if (relations.rows() == 0 && ngens > 0)
    relations = IntMatrix(static_cast<std::size_t>(ngens), 0);
  if (relations.rows() != static_cast<std::size_t>(ngens))
    bad(child(base, "relations"),
        "relation rows must match generator count");
  return PresentationInput{std::move(relations),
                           static_cast<std::size_t>(ngens)};
}

Json presentation_to_json(const InjectivePresentation& pres,
                          const PresentationInput& input) {
  Json j;
  Json in;
  in["ngens"] = input.ngens;
  in["relations"] = matrix_to_json(input.relations);
  j["input"] = std::move(in);

  const Decomposition& dec = pres.decomposition;
  Json d;
  d["rank"] = dec.rank;
  Json factors = Json::array();
  for (const Integer& f : dec.invariant_factors)
    factors.push_back(int_to_string(f));
  d["invariant_factors"] = std::move(factors);
  Json parts = Json::array();
  for (const PrimePowerPart& p : dec.parts) {
    Json pj;
    pj["p"] = int_to_string(p.p);
    pj["k"] = p.k;
    pj["factor"] = p.factor;
    parts.push_back(std::move(pj));
  }
  d["prime_power_parts"] = std::move(parts);
  d["to_canonical"] = matrix_to_json(dec.to_canonical);
  d["from_canonical"] = matrix_to_json(dec.from_canonical);
  j["decomposition"] = std::move(d);

  j["a_shape"] = shape_to_json(pres.a_shape);
  j["m_shape"] = shape_to_json(pres.m_shape);
  j["n_shape"] = shape_to_json(pres.n_shape);
  j["e"] = hom_to_json(pres.e);
  j["f"] = hom_to_json(pres.f);
  return j;
}

ChainInput chain_input_from_json(const Json& j, const std::string& path,
                                 const char* element_key) {
  ChainInput out;
  const Json& sj = expect_array(json_field(j, "stages", path),
                                child(path, "stages"));
  for (std::size_t i = 0; i < sj.size(); ++i)
    out.stages.push_back(shape_from_json(sj[i],
                                         item(child(path, "stages"), i)));
  const Json& mj = expect_array(json_field(j, "maps", path),
                                child(path, "maps"));
  for (std::size_t i = 0; i < mj.size(); ++i)
    out.maps.push_back(hom_from_json(mj[i], item(child(path, "maps"), i)));
  if (element_key != nullptr && j.is_object() && j.contains(element_key))
    out.element = element_from_json(j[element_key], child(path, element_key));
  return out;
}

Json seq_to_json(const EventuallyIntegerSeq& s) {
  Json j;
  Json head = Json::array();
  for (const Rational& h : s.head()) head.push_back(h.str());
  j["head"] = std::move(head);
  j["tail"] = int_to_string(s.tail());
  return j;
}

EventuallyIntegerSeq seq_from_json(const Json& j, const std::string& path) {
  const Json& hj = expect_array(json_field(j, "head", path),
                                child(path, "head"));
  std::vector<Rational> head;
  for (std::size_t i = 0; i < hj.size(); ++i)
    head.push_back(json_rational(hj[i], item(child(path, "head"), i)));
  Integer tail = json_integer(json_field(j, "tail", path),
                              child(path, "tail"));
  return EventuallyIntegerSeq(std::move(head), std::move(tail));
}

Json snf_to_json(const SnfResult& r) {
  Json j;
  j["u"] = matrix_to_json(r.u);
  j["s"] = matrix_to_json(r.s);
  j["v"] = matrix_to_json(r.v);
  Json diag = Json::array();
  for (const Integer& d : r.diagonal()) diag.push_back(int_to_string(d));
  j["diagonal"] = std::move(diag);
  return j;
}

}  // namespace invlim
