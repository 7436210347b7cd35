#include "so3/topology.hpp"

#include <stdexcept>

namespace so3 {

namespace {

const FgAbGroup z_group = FgAbGroup::free(1);

FgAbGroup coefficient_group(Coefficients r)
{
    const Integer n = modulus_of(r);
    return n == 0 ? z_group : FgAbGroup::cyclic(n);
}

void check_degree(int k)
{
    if (k < 0 || k > 5)
        throw std::out_of_range("degree " + std::to_string(k) + " outside 0..5");
}

std::string join(const std::vector<std::string>& items)
{
    std::string s;
    for (const auto& it : items)
        s += (s.empty() ? "" : "; ") + it;
    return s;
}

bool valid_mod2_vector(const Mod2Vector& v, std::size_t n)
{
    if (v.size() != n)
        return false;
    for (auto b : v)
        if (b > 1)
            return false;
    return true;
}

bool all_zero(const Mod2Vector& v)
{
    for (auto b : v)
        if (b != 0)
            return false;
    return true;
}

void validate_fragment(const ManifoldProfile& m, std::vector<std::string>& out)
{
    const auto& f = *m.mod2;
    const std::size_t dim = mod_p_dimension(cohomology(m, 2, Coefficients::Z2), 2);
    const FgAbGroup h4_2 = cohomology(m, 4, Coefficients::Z2);
    const FgAbGroup h4_4 = cohomology(m, 4, Coefficients::Z4);

    if (f.h2_dim != dim) {
        out.push_back("mod2 fragment: basis size " + std::to_string(f.h2_dim) + " must equal dim H^2(M;Z2) = " + std::to_string(dim));
        return;
    }
    if (f.cup.size() != dim || f.psquare.size() != dim) {
        out.push_back("mod2 fragment: cup and psquare tables must have " + std::to_string(dim) + " rows");
        return;
    }
    for (const auto& row : f.cup)
        if (row.size() != dim) {
            out.push_back("mod2 fragment: cup table must be square");
            return;
        }
    bool groups_ok = true;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j)
            if (!(f.cup[i][j].group() == h4_2)) {
                out.push_back("mod2 fragment: cup products must lie in H^4(M;Z2) = " + h4_2.to_string());
                groups_ok = false;
                break;
            }
        if (!groups_ok)
            break;
    }
    for (const auto& p : f.psquare)
        if (!(p.group() == h4_4)) {
            out.push_back("mod2 fragment: Pontryagin squares must lie in H^4(M;Z4) = " + h4_4.to_string());
            groups_ok = false;
            break;
        }
    if (!valid_mod2_vector(f.w2, dim)) {
        out.push_back("mod2 fragment: w2 must be a 0/1 vector of length " + std::to_string(dim));
        return;
    }
    if (all_zero(f.w2) != m.spin)
        out.push_back("mod2 fragment: w2 class must vanish exactly when the profile is spin");
    if (!groups_ok)
        return;

    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            if (!(f.cup[i][j] == f.cup[j][i])) {
                out.push_back("mod2 fragment: cup table must be symmetric");
                i = dim;
                break;
            }
    for (std::size_t i = 0; i < dim; ++i)
        if (!(reduce_mod4_to_mod2(m, f.psquare[i]) == f.cup[i][i])) {
            out.push_back("mod2 fragment: Pontryagin square of basis element " + std::to_string(i) +
                          " must reduce mod 2 to its cup square");
            break;
        }
    // Wu: on an orientable 5-manifold w4 = w2^2.
    if (cup_product(m, f.w2, f.w2).is_zero() != m.w4_is_zero)
        out.push_back("w4 flag must agree with w2 cup w2 (Wu formula)");
}

}  // namespace

Integer modulus_of(Coefficients r)
{
    switch (r) {
    case Coefficients::Z2:
        return 2;
    case Coefficients::Z4:
        return 4;
    case Coefficients::Z5:
        return 5;
    case Coefficients::Z10:
        return 10;
    case Coefficients::Z:
    case Coefficients::R:
        return 0;
    }
    return 0;
}

std::string to_string(Coefficients r)
{
    switch (r) {
    case Coefficients::Z:
        return "Z";
    case Coefficients::Z2:
        return "Z2";
    case Coefficients::Z4:
        return "Z4";
    case Coefficients::Z5:
        return "Z5";
    case Coefficients::Z10:
        return "Z10";
    case Coefficients::R:
        return "R";
    }
    return "?";
}

InvalidProfile::InvalidProfile(std::string name, std::vector<std::string> violations)
    : std::runtime_error("invalid profile '" + name + "': " + join(violations)), violations_(std::move(violations))
{
}

std::vector<std::string> validate(const ManifoldProfile& m)
{
    std::vector<std::string> out;
    const auto& h = m.homology;
    if (!(h[0] == z_group))
        out.push_back("H0 must be Z");
    if (!(h[5] == z_group))
        out.push_back("H5 must be Z");
    if (!h[4].is_free())
        out.push_back("H4 must be torsion-free");
    if (h[4].free_rank() != h[1].free_rank())
        out.push_back("rank H4 must equal rank H1");
    if (h[3].free_rank() != h[2].free_rank())
        out.push_back("rank H3 must equal rank H2");
    if (!(h[1].torsion_subgroup() == h[3].torsion_subgroup()))
        out.push_back("torsion of H1 must equal torsion of H3");
    if (m.spin && !m.w4_is_zero)
        out.push_back("spin requires w4 = 0 (Wu formula)");
    if (!m.spin && cohomology(m, 2, Coefficients::Z2).is_trivial())
        out.push_back("w2 != 0 requires H^2(M;Z2) != 0");
    if (!m.w4_is_zero && cohomology(m, 4, Coefficients::Z2).is_trivial())
        out.push_back("w4 != 0 requires H^4(M;Z2) != 0");

    const FgAbGroup h4 = cohomology(m, 4, Coefficients::Z);
    if (!(m.p1.group() == h4))
        out.push_back("p1 must lie in H^4(M;Z) = " + h4.to_string() + ", got " + m.p1.group().to_string());

    if (m.mod2 && out.empty())
        validate_fragment(m, out);
    return out;
}

void require_valid(const ManifoldProfile& m)
{
    auto v = validate(m);
    if (!v.empty())
        throw InvalidProfile(m.name, std::move(v));
}

FgAbGroup cohomology(const ManifoldProfile& m, int k, Coefficients r)
{
    check_degree(k);
    const auto& h = m.homology;
    if (r == Coefficients::R)
        return FgAbGroup::free(h[k].free_rank());
    const FgAbGroup coeff = coefficient_group(r);
    const FgAbGroup lower = k == 0 ? FgAbGroup() : h[k - 1];
    return direct_sum(hom(h[k], coeff), ext(lower, coeff));
}

FgAbGroup homology(const ManifoldProfile& m, int k, Coefficients r)
{
    check_degree(k);
    const auto& h = m.homology;
    if (r == Coefficients::R)
        return FgAbGroup::free(h[k].free_rank());
    const FgAbGroup coeff = coefficient_group(r);
    const FgAbGroup lower = k == 0 ? FgAbGroup() : h[k - 1];
    return direct_sum(tensor(h[k], coeff), tor(lower, coeff));
}

int semicharacteristic(const ManifoldProfile& m)
{
    std::size_t sum = 0;
    for (int i = 0; i <= 2; ++i)
        sum += mod_p_dimension(homology(m, i, Coefficients::Z2), 2);
    return static_cast<int>(sum % 2);
}

int kervaire_semicharacteristic(const ManifoldProfile& m)
{
    const auto& h = m.homology;
    return static_cast<int>((h[0].free_rank() + h[2].free_rank() + h[4].free_rank()) % 2);
}

int semicharacteristic_difference(const ManifoldProfile& m)
{
    std::size_t even = 0;
    for (const auto& d : m.homology[2].torsion())
        if (mpz_even_p(d.get_mpz_t()))
            ++even;
    return static_cast<int>(even % 2);
}

bool has_trivial_h1(const ManifoldProfile& m) { return m.homology[1].is_trivial(); }

GroupElement reduce_integral(const ManifoldProfile& m, const GroupElement& x, const Integer& modulus)
{
    return Reduction(cohomology(m, 4, Coefficients::Z), modulus).apply(x);
}

GroupElement include_mod2_in_mod4(const ManifoldProfile& m, const GroupElement& x)
{
    const FgAbGroup h4 = cohomology(m, 4, Coefficients::Z);
    const Reduction two(h4, 2), four(h4, 4);
    return four.apply(scale(2, two.lift(x)));
}

GroupElement reduce_mod4_to_mod2(const ManifoldProfile& m, const GroupElement& y)
{
    const FgAbGroup h4 = cohomology(m, 4, Coefficients::Z);
    const Reduction two(h4, 2), four(h4, 4);
    return two.apply(four.lift(y));
}

const Mod2Fragment& require_fragment(const ManifoldProfile& m)
{
    if (!m.mod2)
        throw InsufficientRingData("insufficient ring data: profile '" + m.name + "' has no mod 2 cohomology fragment");
    return *m.mod2;
}

GroupElement cup_product(const ManifoldProfile& m, const Mod2Vector& x, const Mod2Vector& y)
{
    const auto& f = require_fragment(m);
    if (!valid_mod2_vector(x, f.h2_dim) || !valid_mod2_vector(y, f.h2_dim))
        throw std::invalid_argument("cup_product: expected 0/1 vectors of length " + std::to_string(f.h2_dim));
    GroupElement sum = GroupElement::zero(cohomology(m, 4, Coefficients::Z2));
    for (std::size_t i = 0; i < f.h2_dim; ++i)
        for (std::size_t j = 0; j < f.h2_dim; ++j)
            if (x[i] && y[j])
                sum = sum + f.cup[i][j];
    return sum;
}

GroupElement pontryagin_square(const ManifoldProfile& m, const Mod2Vector& x)
{
    // P(a + b) = P(a) + P(b) + i_*(a b), expanded over the basis.
    const auto& f = require_fragment(m);
    if (!valid_mod2_vector(x, f.h2_dim))
        throw std::invalid_argument("pontryagin_square: expected a 0/1 vector of length " + std::to_string(f.h2_dim));
    GroupElement squares = GroupElement::zero(cohomology(m, 4, Coefficients::Z4));
    GroupElement cross = GroupElement::zero(cohomology(m, 4, Coefficients::Z2));
    for (std::size_t i = 0; i < f.h2_dim; ++i) {
        if (!x[i])
            continue;
        squares = squares + f.psquare[i];
        for (std::size_t j = i + 1; j < f.h2_dim; ++j)
            if (x[j])
                cross = cross + f.cup[i][j];
    }
    return squares + include_mod2_in_mod4(m, cross);
}

}  // namespace so3
