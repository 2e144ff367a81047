#pragma once

#include <nlohmann/json.hpp>

#include "invlim/ladder.hpp"
#include "invlim/systems.hpp"

namespace invlim {

using Json = nlohmann::json;

/* All integers and rationals travel as decimal strings; object keys are
   emitted in sorted order, so equal values serialize to identical bytes.
   Parsers rebuild through the ordinary constructors/builders, so every
   domain validation runs; the first offending node is reported by JSON
   path in a parse_error. */

Json atom_to_json(const Atom& a);
Atom atom_from_json(const Json& j, const std::string& path);

Json shape_to_json(const ModuleShape& s);
ModuleShape shape_from_json(const Json& j, const std::string& path);

Json element_to_json(const Element& x);
Element element_from_json(const Json& j, const std::string& path);

Json hom_to_json(const Hom& h);
Hom hom_from_json(const Json& j, const std::string& path);

/* array of rows of decimal integer strings */
Json matrix_to_json(const IntMatrix& a);
IntMatrix matrix_from_json(const Json& j, const std::string& path);

struct PresentationInput {
  IntMatrix relations;
  std::size_t ngens;
};
/* accepts {"ngens", "relations"} directly or a full presentation document
   (whose "input" field holds the same pair) */
PresentationInput presentation_input_from_json(const Json& j,
                                               const std::string& path);

Json presentation_to_json(const InjectivePresentation& pres,
                          const PresentationInput& input);

struct ChainInput {
  std::vector<ModuleShape> stages;
  std::vector<Hom> maps;
  std::optional<Element> element;  // "f0_image" or "x", per command
};
ChainInput chain_input_from_json(const Json& j, const std::string& path,
                                 const char* element_key);

Json seq_to_json(const EventuallyIntegerSeq& s);
EventuallyIntegerSeq seq_from_json(const Json& j, const std::string& path);

Json snf_to_json(const SnfResult& r);

/* helpers shared by the parsers: presence/type checks with path reporting */
const Json& json_field(const Json& j, const char* key, const std::string& path);
std::string json_string(const Json& j, const std::string& path);
std::int64_t json_int(const Json& j, const std::string& path);
Integer json_integer(const Json& j, const std::string& path);
Rational json_rational(const Json& j, const std::string& path);

}  // namespace invlim
