#include "so3/serialize.hpp"

#include <cstdint>

namespace so3 {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object())
        throw SchemaError(std::string("expected an object with field '") + key + "'");
    auto it = j.find(key);
    if (it == j.end())
        throw SchemaError(std::string("missing field '") + key + "'");
    return *it;
}

bool boolean(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_boolean())
        throw SchemaError(std::string("field '") + key + "' must be a boolean");
    return v.get<bool>();
}

const Json& array(const Json& j, const char* what)
{
    if (!j.is_array())
        throw SchemaError(std::string(what) + " must be an array");
    return j;
}

Json bits_to_json(const Mod2Vector& v)
{
    Json out = Json::array();
    for (auto b : v)
        out.push_back(static_cast<int>(b));
    return out;
}

Mod2Vector bits_from_json(const Json& j, const char* what)
{
    Mod2Vector out;
    for (const auto& x : array(j, what)) {
        if (!x.is_number_integer() || (x.get<long long>() != 0 && x.get<long long>() != 1))
            throw SchemaError(std::string(what) + " entries must be 0 or 1");
        out.push_back(static_cast<std::uint8_t>(x.get<long long>()));
    }
    return out;
}

}  // namespace

Json integer_to_json(const Integer& x)
{
    if (x.fits_slong_p() && sizeof(long) >= sizeof(std::int64_t))
        return Json(static_cast<std::int64_t>(x.get_si()));
    return Json(x.get_str());
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_unsigned())
        return Integer(std::to_string(j.get<unsigned long long>()));
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) != 0)
            throw SchemaError("malformed integer string '" + j.get<std::string>() + "'");
        return x;
    }
    throw SchemaError("expected an integer, got " + j.dump());
}

Json to_json(const FgAbGroup& g)
{
    Json t = Json::array();
    for (const auto& d : g.torsion())
        t.push_back(integer_to_json(d));
    return Json{{"free", g.free_rank()}, {"torsion", t}};
}

FgAbGroup group_from_json(const Json& j)
{
    const Json& f = field(j, "free");
    if (!f.is_number_integer() || f.get<long long>() < 0)
        throw SchemaError("group field 'free' must be a nonnegative integer");
    std::vector<Integer> orders;
    if (j.contains("torsion"))
        for (const auto& d : array(j["torsion"], "group field 'torsion'")) {
            Integer x = integer_from_json(d);
            if (x <= 0)
                throw SchemaError("torsion orders must be positive");
            orders.push_back(x);
        }
    // Accepts any cyclic orders and brings them into invariant-factor form.
    return FgAbGroup::from_cyclic_orders(static_cast<std::size_t>(f.get<long long>()), orders);
}

Json to_json(const GroupElement& x)
{
    Json out = Json::array();
    for (const auto& c : x.generator_coords())
        out.push_back(integer_to_json(c));
    return out;
}

GroupElement element_from_json(const FgAbGroup& g, const Json& j)
{
    std::vector<Integer> coords;
    for (const auto& c : array(j, "element coordinates"))
        coords.push_back(integer_from_json(c));
    if (coords.size() != g.generator_count())
        throw SchemaError("element of " + g.to_string() + " needs " + std::to_string(g.generator_count()) + " coordinates, got " +
                          std::to_string(coords.size()));
    return GroupElement::from_generator_coords(g, coords);
}

Json to_json(const Mod2Fragment& f)
{
    Json cup = Json::array();
    for (const auto& row : f.cup) {
        Json r = Json::array();
        for (const auto& x : row)
            r.push_back(to_json(x));
        cup.push_back(std::move(r));
    }
    Json ps = Json::array();
    for (const auto& x : f.psquare)
        ps.push_back(to_json(x));
    return Json{{"h2_dim", f.h2_dim}, {"cup", cup}, {"psquare", ps}, {"w2", bits_to_json(f.w2)}};
}

Json to_json(const ManifoldProfile& m)
{
    Json h = Json::array();
    for (const auto& g : m.homology)
        h.push_back(to_json(g));
    Json out{{"name", m.name}, {"homology", h}, {"spin", m.spin}, {"w4_zero", m.w4_is_zero}, {"p1", to_json(m.p1)}};
    if (m.mod2)
        out["mod2_fragment"] = to_json(*m.mod2);
    return out;
}

ManifoldProfile profile_from_json(const Json& j)
{
    ManifoldProfile m;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw SchemaError("field 'name' must be a string");
        m.name = j["name"].get<std::string>();
    }
    const Json& h = array(field(j, "homology"), "field 'homology'");
    if (h.size() != 6)
        throw SchemaError("field 'homology' must list H_0 through H_5");
    for (std::size_t i = 0; i < 6; ++i)
        m.homology[i] = group_from_json(h[i]);
    m.spin = boolean(j, "spin");
    m.w4_is_zero = boolean(j, "w4_zero");
    const FgAbGroup h4 = cohomology(m, 4, Coefficients::Z);
    m.p1 = j.contains("p1") ? element_from_json(h4, j["p1"]) : GroupElement::zero(h4);

    if (j.contains("mod2_fragment")) {
        const Json& fj = j["mod2_fragment"];
        const FgAbGroup h4_2 = cohomology(m, 4, Coefficients::Z2), h4_4 = cohomology(m, 4, Coefficients::Z4);
        Mod2Fragment f;
        const Json& dim = field(fj, "h2_dim");
        if (!dim.is_number_integer() || dim.get<long long>() < 0)
            throw SchemaError("fragment field 'h2_dim' must be a nonnegative integer");
        f.h2_dim = static_cast<std::size_t>(dim.get<long long>());
        for (const auto& row : array(field(fj, "cup"), "fragment field 'cup'")) {
            std::vector<GroupElement> r;
            for (const auto& x : array(row, "cup table row"))
                r.push_back(element_from_json(h4_2, x));
            f.cup.push_back(std::move(r));
        }
        for (const auto& x : array(field(fj, "psquare"), "fragment field 'psquare'"))
            f.psquare.push_back(element_from_json(h4_4, x));
        f.w2 = bits_from_json(field(fj, "w2"), "fragment field 'w2'");
        m.mod2 = std::move(f);
    }
    return m;
}

Json to_json(const FourManifoldProfile& x)
{
    Json out{{"name", x.name},
             {"b2", x.b2},
             {"spin", x.spin},
             {"euler_char", integer_to_json(x.euler_char)},
             {"p1_eval", integer_to_json(x.p1_eval)},
             {"signature", integer_to_json(x.signature)}};
    if (x.form) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < x.form->rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < x.form->cols(); ++c)
                row.push_back(integer_to_json((*x.form)(r, c)));
            rows.push_back(std::move(row));
        }
        out["form"] = rows;
    }
    if (x.w2_vector)
        out["w2_vector"] = bits_to_json(*x.w2_vector);
    if (x.hyperplane_class) {
        Json u = Json::array();
        for (const auto& c : *x.hyperplane_class)
            u.push_back(integer_to_json(c));
        out["hyperplane_class"] = u;
    }
    return out;
}

Json to_json(const Bundle3Data& b)
{
    Json out{{"base", b.base ? b.base->name : ""}, {"w2_zero", b.w2_zero}, {"p1", to_json(b.p1)}};
    if (b.w2_class)
        out["w2_class"] = bits_to_json(*b.w2_class);
    return out;
}

Json to_json(const Bundle5Data& b)
{
    Json out{{"base", b.base ? b.base->name : ""},
             {"w2_zero", b.w2_zero},
             {"w4_zero", b.w4_zero},
             {"w5_zero", b.w5_zero},
             {"p1", to_json(b.p1)}};
    if (b.w2_class)
        out["w2_class"] = bits_to_json(*b.w2_class);
    if (b.w4_class)
        out["w4_class"] = to_json(*b.w4_class);
    return out;
}

Json to_json(const NecessaryConditions& c)
{
    return Json{{"p1_divisible_by_5", c.p1_divisible_by_5}, {"w4_zero", c.w4_zero}, {"w5_zero", c.w5_zero}, {"pass", c.pass()}};
}

Json to_json(const ObstructionReport& r)
{
    Json out{{"k1_vanishes", r.k1_vanishes}, {"k1_mod5_part_zero", r.k1_mod5_part_zero}, {"k1_mod2_part_zero", r.k1_mod2_part_zero}};
    out["k2_value"] = r.k2_value ? Json(*r.k2_value) : Json(nullptr);
    return out;
}

Json to_json(const Decision& d)
{
    Json trace = Json::array();
    for (const auto& s : d.trace)
        trace.push_back(Json{{"condition", s.condition}, {"value", s.value}, {"ok", s.ok}});
    return Json{{"verdict", to_string(d.verdict)}, {"theorem", d.theorem}, {"trace", trace}};
}

std::string canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace so3
