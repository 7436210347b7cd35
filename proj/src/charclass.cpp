#include "so3/charclass.hpp"

#include <algorithm>
#include <stdexcept>

namespace so3 {

namespace {

bool same_base(const ProfileRef& a, const ProfileRef& b)
{
    if (a == b)
        return true;
    return a && b && *a == *b;
}

bool is_zero_vector(const Mod2Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

void check_common(const ProfileRef& base, bool w2_zero, const std::optional<Mod2Vector>& w2_class, const GroupElement& p1,
                  std::vector<std::string>& out)
{
    if (!base) {
        out.push_back("bundle has no base profile");
        return;
    }
    const FgAbGroup h4 = cohomology(*base, 4, Coefficients::Z);
    if (!(p1.group() == h4))
        out.push_back("p1 must lie in H^4(M;Z) = " + h4.to_string());
    if (w2_class.has_value() != base->mod2.has_value())
        out.push_back("w2 class must be present exactly when the base has a mod 2 fragment");
    if (w2_class && base->mod2) {
        if (w2_class->size() != base->mod2->h2_dim)
            out.push_back("w2 class has the wrong length");
        else if (is_zero_vector(*w2_class) != w2_zero)
            out.push_back("w2 flag disagrees with the w2 class");
    }
}

}  // namespace

bool operator==(const Bundle3Data& a, const Bundle3Data& b)
{
    return same_base(a.base, b.base) && a.w2_zero == b.w2_zero && a.w2_class == b.w2_class && a.p1 == b.p1;
}

bool operator==(const Bundle5Data& a, const Bundle5Data& b)
{
    return same_base(a.base, b.base) && a.w2_zero == b.w2_zero && a.w4_zero == b.w4_zero && a.w5_zero == b.w5_zero &&
           a.w2_class == b.w2_class && a.w4_class == b.w4_class && a.p1 == b.p1;
}

std::vector<std::string> validate(const Bundle3Data& b)
{
    std::vector<std::string> out;
    check_common(b.base, b.w2_zero, b.w2_class, b.p1, out);
    return out;
}

std::vector<std::string> validate(const Bundle5Data& b)
{
    std::vector<std::string> out;
    check_common(b.base, b.w2_zero, b.w2_class, b.p1, out);
    if (b.w4_class) {
        if (b.w4_zero)
            out.push_back("w4 class recorded although w4 = 0");
        else if (b.base && !(b.w4_class->group() == cohomology(*b.base, 4, Coefficients::Z2)))
            out.push_back("w4 class must lie in H^4(M;Z2)");
        else if (b.w4_class->is_zero())
            out.push_back("w4 class is zero although w4 != 0");
    }
    return out;
}

Bundle5Data tangent_data(ProfileRef m)
{
    require_valid(*m);
    Bundle5Data t;
    t.w2_zero = m->spin;
    t.w4_zero = m->w4_is_zero;
    t.w5_zero = true;  // top class of an odd-dimensional closed manifold
    t.p1 = m->p1;
    if (m->mod2) {
        t.w2_class = m->mod2->w2;
        if (!m->w4_is_zero)
            t.w4_class = cup_product(*m, m->mod2->w2, m->mod2->w2);
    }
    t.base = std::move(m);
    return t;
}

Bundle5Data sym0_classes(const Bundle3Data& b)
{
    Bundle5Data z;
    z.base = b.base;
    z.w2_zero = b.w2_zero;
    z.w2_class = b.w2_class;
    z.w4_zero = true;
    z.w5_zero = true;
    z.p1 = scale(5, b.p1);
    return z;
}

Bundle3Data g_twist(const Bundle3Data& b)
{
    if (!b.w2_zero)
        throw std::invalid_argument("g_twist: the bundle has no spin structure (w2 != 0)");
    Bundle3Data t = b;
    t.p1 = scale(5, b.p1);
    return t;
}

NecessaryConditions necessary_conditions(const Bundle5Data& b)
{
    NecessaryConditions c;
    c.p1_divisible_by_5 = solve_divisibility(b.p1, 5).has_value();
    c.w4_zero = b.w4_zero;
    c.w5_zero = b.w5_zero;
    return c;
}

ObstructionReport obstruction_report(const Bundle5Data& b)
{
    ObstructionReport r;
    r.k1_mod5_part_zero = reduce_integral(*b.base, b.p1, 5).is_zero();
    r.k1_mod2_part_zero = b.w4_zero;
    r.k1_vanishes = r.k1_mod5_part_zero && r.k1_mod2_part_zero;
    if (r.k1_vanishes && b.base->spin)
        r.k2_value = semicharacteristic(*b.base);
    return r;
}

const std::vector<PullbackConstant>& rep_pullback_constants()
{
    static const std::vector<PullbackConstant> table{
        {"p1", "10*p1"},
        {"p2", "9*p1^2"},
        {"w2", "w2"},
        {"w3", "w3"},
        {"w4", "0"},
        {"w5", "0"},
        {"torus", "z -> (z, z^2)"},
        {"pi3(SO(5)/SO(3))", "Z10"},
        {"pi4(SO(5)/SO(3))", "Z2"},
    };
    return table;
}

std::optional<std::string> lookup_pullback_constant(std::string_view key)
{
    for (const auto& c : rep_pullback_constants())
        if (c.key == key)
            return c.value;
    return std::nullopt;
}

}  // namespace so3
