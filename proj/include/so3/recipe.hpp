#pragma once

// Evaluation of construction recipes.
//
//   {"construction":"catalog","name":"wu"}
//   {"construction":"connected_sum","parts":[recipe, ...]}
//   {"construction":"product_3x2","n3_homology":[H0,H1,H2,H3] | {"h1":G},"genus":g}
//   {"construction":"circle_bundle","base":base,"euler_class":[...] | {"search":{...}}}
//
// where base is {"construction":"hypersurface","degree":d} or
// {"construction":"intersection_form","form":[[...]]}, and the search object
// has "torsion", and optionally "u" (default: the hyperplane class) and
// "bound" (default: SO3_EULER_SEARCH_BOUND or 3). An object with a
// "homology" field is read as a literal profile.

#include "so3/serialize.hpp"

#include <string>

namespace so3 {

// Default bound for Euler class searches.
long euler_search_bound();

// Throws SchemaError on malformed recipes and InvalidProfile when the
// result fails validation.
ManifoldProfile parse_recipe(const Json& j);
FourManifoldProfile parse_four_manifold(const Json& j);

// Parses JSON text; syntax errors become SchemaError.
Json parse_json_text(const std::string& text);

}  // namespace so3
