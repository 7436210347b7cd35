#pragma once

// Characteristic-class records of rank 3 and rank 5 bundles over a profile.

#include "so3/topology.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace so3 {

using ProfileRef = std::shared_ptr<const ManifoldProfile>;

struct Bundle3Data
{
    ProfileRef base;
    bool w2_zero = true;
    // Present iff the base carries a mod 2 fragment.
    std::optional<Mod2Vector> w2_class;
    GroupElement p1;

    friend bool operator==(const Bundle3Data& a, const Bundle3Data& b);
};

struct Bundle5Data
{
    ProfileRef base;
    bool w2_zero = true;
    bool w4_zero = true;
    bool w5_zero = true;
    std::optional<Mod2Vector> w2_class;
    // Only recorded for a nonvanishing w4, as an element of H^4(M;Z_2).
    std::optional<GroupElement> w4_class;
    GroupElement p1;

    friend bool operator==(const Bundle5Data& a, const Bundle5Data& b);
};

std::vector<std::string> validate(const Bundle3Data& b);
std::vector<std::string> validate(const Bundle5Data& b);

// The tangent bundle of the base: w2, w4 and p1 of M, w5 = 0. When the base
// has a fragment and w4 != 0 the class is w2 cup w2.
Bundle5Data tangent_data(ProfileRef m);

// Classes of the bundle of symmetric trace-free endomorphisms of b.
Bundle5Data sym0_classes(const Bundle3Data& b);

// The degree-5 twist of a spin rank 3 bundle; multiplies p1 by 5.
Bundle3Data g_twist(const Bundle3Data& b);

struct NecessaryConditions
{
    bool p1_divisible_by_5 = false;
    bool w4_zero = false;
    bool w5_zero = false;

    bool pass() const { return p1_divisible_by_5 && w4_zero && w5_zero; }
};

NecessaryConditions necessary_conditions(const Bundle5Data& b);

struct ObstructionReport
{
    bool k1_vanishes = false;
    bool k1_mod5_part_zero = false;
    bool k1_mod2_part_zero = false;
    std::optional<int> k2_value;
};

// k1 = (-rho_5(p1), w4); k2 is the semi-characteristic of a spin base.
ObstructionReport obstruction_report(const Bundle5Data& b);

struct PullbackConstant
{
    std::string key;
    std::string value;
};

// Effect of the irreducible representation SO(3) -> SO(5) on universal
// classes, plus homotopy groups of the fibre SO(5)/SO(3). Documentation only.
const std::vector<PullbackConstant>& rep_pullback_constants();
std::optional<std::string> lookup_pullback_constant(std::string_view key);

}  // namespace so3
