#pragma once

// JSON encoding of groups, profiles, bundle records and decisions. Objects
// are emitted with sorted keys; integers that fit in 64 bits are numbers,
// larger ones are decimal strings.

#include "so3/charclass.hpp"
#include "so3/constructors.hpp"
#include "so3/decide.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace so3 {

using Json = nlohmann::json;

// Malformed or schema-violating input.
class SchemaError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json to_json(const FgAbGroup& g);
FgAbGroup group_from_json(const Json& j);

// Generator coordinates, free part first.
Json to_json(const GroupElement& x);
GroupElement element_from_json(const FgAbGroup& g, const Json& j);

Json to_json(const Mod2Fragment& f);
Json to_json(const ManifoldProfile& m);
// Reads a profile without validating it.
ManifoldProfile profile_from_json(const Json& j);

Json to_json(const FourManifoldProfile& x);
Json to_json(const Bundle3Data& b);
Json to_json(const Bundle5Data& b);
Json to_json(const NecessaryConditions& c);
Json to_json(const ObstructionReport& r);
Json to_json(const Decision& d);

// Two-space indented, sorted keys, trailing newline.
std::string canonical(const Json& j);

}  // namespace so3
