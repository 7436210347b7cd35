#include "so3/recipe.hpp"

#include <charconv>
#include <cstdlib>

namespace so3 {

namespace {

std::string construction_of(const Json& j)
{
    if (!j.is_object())
        throw SchemaError("recipe must be a JSON object, got " + std::string(j.type_name()));
    auto it = j.find("construction");
    if (it == j.end())
        throw SchemaError("recipe needs a 'construction' field or a 'homology' field");
    if (!it->is_string())
        throw SchemaError("field 'construction' must be a string");
    return it->get<std::string>();
}

const Json& require(const Json& j, const char* key, const std::string& where)
{
    auto it = j.find(key);
    if (it == j.end())
        throw SchemaError(where + ": missing field '" + key + "'");
    return *it;
}

long small_integer(const Json& j, const std::string& what)
{
    if (!j.is_number_integer())
        throw SchemaError(what + " must be an integer");
    return static_cast<long>(j.get<long long>());
}

std::vector<Integer> integer_vector(const Json& j, const std::string& what)
{
    if (!j.is_array())
        throw SchemaError(what + " must be an array of integers");
    std::vector<Integer> out;
    for (const auto& x : j)
        out.push_back(integer_from_json(x));
    return out;
}

std::array<FgAbGroup, 4> three_manifold_homology(const Json& j)
{
    if (j.is_array()) {
        if (j.size() != 4)
            throw SchemaError("product_3x2: 'n3_homology' must list H_0 through H_3");
        return {group_from_json(j[0]), group_from_json(j[1]), group_from_json(j[2]), group_from_json(j[3])};
    }
    if (j.is_object() && j.contains("h1")) {
        // H_2 is determined by Poincare duality.
        const FgAbGroup h1 = group_from_json(j["h1"]);
        return {FgAbGroup::free(1), h1, h1.free_part(), FgAbGroup::free(1)};
    }
    throw SchemaError("product_3x2: 'n3_homology' must be an array of four groups or an object with 'h1'");
}

ManifoldProfile circle_bundle_recipe(const Json& j)
{
    FourManifoldProfile base = parse_four_manifold(require(j, "base", "circle_bundle"));
    const Json& e = require(j, "euler_class", "circle_bundle");
    std::vector<Integer> c;
    if (e.is_array()) {
        c = integer_vector(e, "circle_bundle: 'euler_class'");
    }
    else if (e.is_object() && e.contains("search")) {
        const Json& s = e["search"];
        if (!s.is_object())
            throw SchemaError("circle_bundle: 'search' must be an object");
        std::vector<Integer> u;
        if (s.contains("u"))
            u = integer_vector(s["u"], "search: 'u'");
        else if (base.hyperplane_class)
            u = *base.hyperplane_class;
        else
            throw SchemaError("search: base '" + base.name + "' has no hyperplane class; give 'u'");
        const Integer g = integer_from_json(require(s, "torsion", "search"));
        const long bound = s.contains("bound") ? small_integer(s["bound"], "search: 'bound'") : euler_search_bound();
        std::optional<EulerClassWitness> w;
        try {
            w = find_euler_class(base, u, g, bound);
        }
        catch (const std::invalid_argument& ex) {
            throw SchemaError(ex.what());
        }
        if (!w)
            throw SchemaError("search: no Euler class with torsion " + g.get_str() + " within bound " + std::to_string(bound));
        c = w->c;
    }
    else {
        throw SchemaError("circle_bundle: 'euler_class' must be an array or {\"search\":{...}}");
    }
    try {
        return circle_bundle({std::move(base), std::move(c)});
    }
    catch (const std::invalid_argument& ex) {
        throw SchemaError(ex.what());
    }
}

}  // namespace

long euler_search_bound()
{
    if (const char* env = std::getenv("SO3_EULER_SEARCH_BOUND")) {
        long v = 0;
        const char* end = env + std::char_traits<char>::length(env);
        auto [p, ec] = std::from_chars(env, end, v);
        if (ec == std::errc() && p == end && v >= 0)
            return v;
        throw SchemaError("SO3_EULER_SEARCH_BOUND must be a nonnegative integer");
    }
    return 3;
}

FourManifoldProfile parse_four_manifold(const Json& j)
{
    const std::string kind = construction_of(j);
    if (kind == "hypersurface") {
        const long d = small_integer(require(j, "degree", "hypersurface"), "hypersurface: 'degree'");
        if (d < 1)
            throw SchemaError("hypersurface: 'degree' must be positive");
        return hypersurface(d);
    }
    if (kind == "intersection_form") {
        const Json& f = require(j, "form", "intersection_form");
        if (!f.is_array())
            throw SchemaError("intersection_form: 'form' must be an array of rows");
        std::vector<std::vector<Integer>> rows;
        for (const auto& r : f)
            rows.push_back(integer_vector(r, "intersection_form row"));
        for (const auto& r : rows)
            if (r.size() != rows.size())
                throw SchemaError("intersection_form: 'form' must be square");
        const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "X";
        try {
            return four_manifold_from_form(name, IntegerMatrix::from_rows(rows));
        }
        catch (const std::invalid_argument& ex) {
            throw SchemaError(ex.what());
        }
    }
    throw SchemaError("unknown 4-manifold construction '" + kind + "'");
}

ManifoldProfile parse_recipe(const Json& j)
{
    if (j.is_object() && j.contains("homology")) {
        ManifoldProfile m = profile_from_json(j);
        require_valid(m);
        return m;
    }
    const std::string kind = construction_of(j);
    if (kind == "catalog") {
        const Json& n = require(j, "name", "catalog");
        if (!n.is_string())
            throw SchemaError("catalog: 'name' must be a string");
        try {
            return catalog(n.get<std::string>());
        }
        catch (const std::invalid_argument& ex) {
            throw SchemaError(ex.what());
        }
    }
    if (kind == "connected_sum") {
        const Json& parts = require(j, "parts", "connected_sum");
        if (!parts.is_array() || parts.empty())
            throw SchemaError("connected_sum: 'parts' must be a nonempty array");
        ManifoldProfile m = parse_recipe(parts[0]);
        for (std::size_t i = 1; i < parts.size(); ++i)
            m = connected_sum(m, parse_recipe(parts[i]));
        return m;
    }
    if (kind == "product_3x2") {
        const auto n = three_manifold_homology(require(j, "n3_homology", "product_3x2"));
        const long g = small_integer(require(j, "genus", "product_3x2"), "product_3x2: 'genus'");
        const std::string name = j.contains("n3_name") && j["n3_name"].is_string() ? j["n3_name"].get<std::string>() : "N";
        try {
            return product_3x2(n, g, name);
        }
        catch (const std::invalid_argument& ex) {
            throw SchemaError(ex.what());
        }
    }
    if (kind == "circle_bundle")
        return circle_bundle_recipe(j);
    if (kind == "hypersurface" || kind == "intersection_form")
        throw SchemaError("'" + kind + "' builds a 4-manifold; use it as the base of a circle_bundle");
    throw SchemaError("unknown construction '" + kind + "'");
}

Json parse_json_text(const std::string& text)
{
    try {
        return Json::parse(text);
    }
    catch (const Json::parse_error& ex) {
        throw SchemaError(std::string("malformed JSON: ") + ex.what());
    }
}

}  // namespace so3
