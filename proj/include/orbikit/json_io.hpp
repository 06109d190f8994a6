#ifndef ORBIKIT_JSON_IO_HPP
#define ORBIKIT_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "orbikit/cp1.hpp"
#include "orbikit/hatk.hpp"
#include "orbikit/mtorus.hpp"

namespace orbikit {

using Json = nlohmann::json;

// Throws input_error instead of the library's parse exception.
Json parse_json(const std::string& text);

// Integers render as JSON numbers when they fit, decimal strings
// otherwise; both forms parse.
Json integer_to_json(const Integer& n);
Integer integer_from_json(const Json& j);

// Rationals travel as "p/q" strings.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// {"conductor": n, "coeffs": {"<exponent>": "p/q"}}; omitted exponents
// are zero.
Json cyclotomic_to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

// {"rows": r, "cols": c, "entries": [[...], ...]}
Json intmatrix_to_json(const IntMatrix& m);
IntMatrix intmatrix_from_json(const Json& j);

// {"orders": [n1, ...]}
Json group_to_json(const FiniteAbelianGroup& g);
FiniteAbelianGroup group_from_json(const Json& j);

// {"group": ..., "coeffs": {"l1,l2,...": n}}; "group" may be omitted when
// a fallback is supplied.
Json rep_to_json(const RepRingElement& x);
RepRingElement rep_from_json(const Json& j,
                             const std::optional<FiniteAbelianGroup>& fallback = {});

// {"group": ..., "values": {"g1,g2,...": <Cyclotomic>}}; omitted elements
// are zero.
Json classfun_to_json(const ClassFunction& f);
ClassFunction classfun_from_json(const Json& j,
                                 const std::optional<FiniteAbelianGroup>& fallback = {});

// ClassFunction encoding plus {"modulo": "character-lattice"} and, when
// present, the extra lattice generators.
Json torus_to_json(const TorusClassFunction& u);
TorusClassFunction torus_from_json(const Json& j,
                                   const std::optional<FiniteAbelianGroup>& fallback = {});

// {"ambient": ..., "generators": [[...], ...]}; "ambient" may be omitted
// when a fallback is supplied.
SubgroupEmbedding subgroup_from_json(const Json& j,
                                     const std::optional<FiniteAbelianGroup>& fallback = {});
Json subgroup_to_json(const SubgroupEmbedding& e);

// {"group": ..., "sectors": {"g1,g2,...": [{"theta": "a/b",
//  "plus": ["t", ...], "minus": [...]}, ...]}}
Json holonomy_to_json(const HolonomyData& d);
HolonomyData holonomy_from_json(const Json& j);

std::string coords_key(const Coords& c);
Coords coords_from_key(const std::string& key);

}  // namespace orbikit

#endif
