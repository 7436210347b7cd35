#pragma once

// Existence decisions for irreducible SO(3)-structures, two-fields and low
// rank bundles. Every decision names the criterion it applied and carries
// the condition-by-condition trace that justifies the verdict.

#include "so3/charclass.hpp"
#include "so3/topology.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace so3 {

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

struct TraceStep
{
    std::string condition;
    std::string value;
    bool ok = true;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Decision
{
    Verdict verdict = Verdict::Unknown;
    std::string theorem;
    std::vector<TraceStep> trace;

    friend bool operator==(const Decision&, const Decision&) = default;
};

enum class TwoFieldCriterion { Thomas, Atiyah };

class CriterionInapplicable : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Throws InvalidProfile for profiles failing validate().
Decision decide_irreducible_so3(const ManifoldProfile& m);

// Thomas needs a spin profile and throws CriterionInapplicable otherwise.
Decision decide_two_field(const ManifoldProfile& m, TwoFieldCriterion criterion);

// Standard SO(3)-structures are two-fields; decided with the Atiyah criterion.
Decision decide_standard_so3(const ManifoldProfile& m);

// For spin profiles: irreducible <=> standard structure and 5 | p1.
struct ReformulationCheck
{
    bool applicable = false;
    bool standard = false;
    bool p1_divisible_by_5 = false;
    bool irreducible = false;
    bool agrees = true;
};

ReformulationCheck standard_reformulation_check(const ManifoldProfile& m);

// Is there a rank 3 bundle with w2 = w and p1 = p? Yes iff rho_4 p = P(w).
// Throws InsufficientRingData without a mod 2 fragment.
Decision rank3_bundle_exists(const ManifoldProfile& m, const Mod2Vector& w, const GroupElement& p);

// rho_4 p1(xi) == P w2(xi) + i_* w4(xi) in H^4(M;Z_4).
bool rank5_relation_holds(const ManifoldProfile& m, const Bundle5Data& b);

}  // namespace so3
