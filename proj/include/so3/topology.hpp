#pragma once

// Invariant profiles of closed, oriented, connected 5-manifolds.

#include "so3/fgab.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace so3 {

enum class Coefficients { Z, Z2, Z4, Z5, Z10, R };

// 0 for Z and R.
Integer modulus_of(Coefficients r);
std::string to_string(Coefficients r);

// A vector over Z_2 with entries 0 or 1.
using Mod2Vector = std::vector<std::uint8_t>;

// Fragment of the mod 2 / mod 4 cohomology ring: a basis e_1..e_n of
// H^2(M;Z_2), the cup products e_i e_j in H^4(M;Z_2), the Pontryagin squares
// P(e_i) in H^4(M;Z_4), and w_2(M) in that basis.
//
// Elements of H^4(M;Z_m) use the coordinates of the reduction
// H^4(M;Z) -> H^4(M;Z) (x) Z_m (see so3::Reduction), which is all of
// H^4(M;Z_m) because H^5(M;Z) is free.
struct Mod2Fragment
{
    std::size_t h2_dim = 0;
    std::vector<std::vector<GroupElement>> cup;
    std::vector<GroupElement> psquare;
    Mod2Vector w2;

    friend bool operator==(const Mod2Fragment&, const Mod2Fragment&) = default;
};

struct ManifoldProfile
{
    std::string name;
    std::array<FgAbGroup, 6> homology;
    bool spin = false;
    bool w4_is_zero = false;
    GroupElement p1;
    std::optional<Mod2Fragment> mod2;

    friend bool operator==(const ManifoldProfile&, const ManifoldProfile&) = default;
};

// Thrown by operations that require a valid profile.
class InvalidProfile : public std::runtime_error
{
  public:
    InvalidProfile(std::string name, std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

  private:
    std::vector<std::string> violations_;
};

// Empty iff the profile is consistent with Poincare duality, the universal
// coefficient theorem and the Wu relations; otherwise one message per failure.
std::vector<std::string> validate(const ManifoldProfile& m);
void require_valid(const ManifoldProfile& m);

// H^k(M;R) by the universal coefficient theorem. For R the result is free of
// rank b_k.
FgAbGroup cohomology(const ManifoldProfile& m, int k, Coefficients r);
FgAbGroup homology(const ManifoldProfile& m, int k, Coefficients r);

// The semi-characteristic: sum_{i<=2} dim H_i(M;Z_2) mod 2.
int semicharacteristic(const ManifoldProfile& m);
// The Kervaire semi-characteristic: (b_0 + b_2 + b_4) mod 2.
int kervaire_semicharacteristic(const ManifoldProfile& m);
// Number of even invariant factors of H_2 mod 2; equals the difference of
// the two semi-characteristics.
int semicharacteristic_difference(const ManifoldProfile& m);

bool has_trivial_h1(const ManifoldProfile& m);

// Coefficient maps on degree-4 cohomology.
GroupElement reduce_integral(const ManifoldProfile& m, const GroupElement& x, const Integer& modulus);
// i_* : H^4(M;Z_2) -> H^4(M;Z_4), induced by 1 -> 2.
GroupElement include_mod2_in_mod4(const ManifoldProfile& m, const GroupElement& x);
// rho_2 : H^4(M;Z_4) -> H^4(M;Z_2).
GroupElement reduce_mod4_to_mod2(const ManifoldProfile& m, const GroupElement& y);

// Ring operations on the fragment; the profile must carry one.
GroupElement cup_product(const ManifoldProfile& m, const Mod2Vector& x, const Mod2Vector& y);
GroupElement pontryagin_square(const ManifoldProfile& m, const Mod2Vector& x);

class InsufficientRingData : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Throws InsufficientRingData when the profile has no fragment.
const Mod2Fragment& require_fragment(const ManifoldProfile& m);

}  // namespace so3
