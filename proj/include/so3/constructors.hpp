#pragma once

// Validated profiles built from geometric recipes.

#include "so3/topology.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace so3 {

// A simply connected closed oriented 4-manifold. The intersection form is
// optional: hypersurfaces of degree >= 4 only carry their numerical data.
struct FourManifoldProfile
{
    std::string name;
    std::size_t b2 = 0;
    std::optional<IntegerMatrix> form;
    std::optional<Mod2Vector> w2_vector;
    bool spin = false;
    Integer euler_char;
    Integer p1_eval;
    Integer signature;
    // Restriction of the hyperplane class, for hypersurfaces with a form.
    std::optional<std::vector<Integer>> hyperplane_class;

    friend bool operator==(const FourManifoldProfile&, const FourManifoldProfile&) = default;
};

std::vector<std::string> validate(const FourManifoldProfile& x);

// Signature of a symmetric integer matrix (exact rational elimination).
Integer signature_of(const IntegerMatrix& q);
// The characteristic vector w with Q(x,x) = Q(x,w) mod 2; q unimodular.
Mod2Vector characteristic_vector(const IntegerMatrix& q);

// Degree d surface in CP^3. Forms are attached for d <= 3.
FourManifoldProfile hypersurface(long degree);
// A 4-manifold given by a unimodular form; p1 from the signature theorem.
FourManifoldProfile four_manifold_from_form(std::string name, IntegerMatrix q);

struct CircleBundleSpec
{
    FourManifoldProfile base;
    std::vector<Integer> euler_class;
};

// Total space of the circle bundle with the given Euler class, via the Gysin
// sequence. The base needs an intersection form; a zero class is rejected.
ManifoldProfile circle_bundle(const CircleBundleSpec& spec);

struct EulerClassWitness
{
    std::vector<Integer> c;
    std::vector<Integer> w;
};

// Lexicographically first w in [-bound, bound]^b2 with Q(u,w) = 0, w != u and
// content(Q(u + w)) = torsion; returns c = u + w.
std::optional<EulerClassWitness> find_euler_class(const FourManifoldProfile& base, const std::vector<Integer>& u,
                                                  const Integer& torsion, long bound);

ManifoldProfile connected_sum(const ManifoldProfile& a, const ManifoldProfile& b);

// N^3 x Sigma_g from the integral homology H_0..H_3 of N.
ManifoldProfile product_3x2(const std::array<FgAbGroup, 4>& n_homology, long genus, std::string n_name = "N");
std::vector<std::string> validate_three_manifold_homology(const std::array<FgAbGroup, 4>& h);

std::vector<std::string> catalog_names();
ManifoldProfile catalog(std::string_view name);

}  // namespace so3
