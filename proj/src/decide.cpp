#include "so3/decide.hpp"

#include <stdexcept>

namespace so3 {

namespace {

const std::string wu_forced = "true (forced by Wu formula)";

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string bits(const Mod2Vector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

void add_semicharacteristics(const ManifoldProfile& m, std::vector<TraceStep>& trace)
{
    trace.push_back({"semi-characteristic chi_hat(M)", std::to_string(semicharacteristic(m)), true});
    trace.push_back({"Kervaire semi-characteristic k(M)", std::to_string(kervaire_semicharacteristic(m)), true});
    trace.push_back({"t2(H2) mod 2 (chi_hat - k)", std::to_string(semicharacteristic_difference(m)), true});
}

TraceStep p1_divisibility_step(const ManifoldProfile& m, bool& divisible)
{
    divisible = solve_divisibility(m.p1, 5).has_value();
    return {"p1(M) divisible by 5", m.p1.to_string(), divisible};
}

}  // namespace

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Yes:
        return "Yes";
    case Verdict::No:
        return "No";
    case Verdict::Unknown:
        return "Unknown";
    }
    return "?";
}

ReformulationCheck standard_reformulation_check(const ManifoldProfile& m)
{
    require_valid(m);
    ReformulationCheck r;
    if (!m.spin)
        return r;
    r.applicable = true;
    r.standard = kervaire_semicharacteristic(m) == 0;
    r.p1_divisible_by_5 = solve_divisibility(m.p1, 5).has_value();
    r.irreducible = m.w4_is_zero && r.p1_divisible_by_5 && semicharacteristic(m) == 0;
    r.agrees = r.irreducible == (r.standard && r.p1_divisible_by_5);
    return r;
}

Decision decide_irreducible_so3(const ManifoldProfile& m)
{
    require_valid(m);
    Decision d;
    const bool h1_trivial = has_trivial_h1(m);
    const FgAbGroup h4 = cohomology(m, 4, Coefficients::Z);

    if (m.spin) {
        d.theorem = h1_trivial ? "Cor 1.5(a)/Thm 1.4(a)" : "Thm 1.4(a)";
        d.trace.push_back({"w2(M) = 0", "true", true});
        d.trace.push_back({"w4(M) = 0", wu_forced, m.w4_is_zero});
        bool div5 = false;
        d.trace.push_back(p1_divisibility_step(m, div5));
        const int chi = semicharacteristic(m);
        d.trace.push_back({"chi_hat(M) = 0", "chi_hat = " + std::to_string(chi), chi == 0});
        if (h1_trivial) {
            const auto dim = mod_p_dimension(homology(m, 2, Coefficients::Z2), 2);
            d.trace.push_back({"H1 = 0: dim H2(M;Z2) odd", std::to_string(dim), dim % 2 == 1});
        }
        add_semicharacteristics(m, d.trace);
        d.verdict = m.w4_is_zero && div5 && chi == 0 ? Verdict::Yes : Verdict::No;

        const auto r = standard_reformulation_check(m);
        d.trace.push_back({"reformulation: standard SO(3)-structure and 5 | p1",
                           std::string(r.standard && r.p1_divisible_by_5 ? "Yes" : "No") + (r.agrees ? " (agrees)" : " (disagrees)"),
                           r.agrees});
        if (!r.agrees)
            d.trace.push_back({"warning: Thomas and Atiyah semi-characteristics differ on a spin profile",
                               "t2(H2) mod 2 = " + std::to_string(semicharacteristic_difference(m)), false});
        return d;
    }

    d.trace.push_back({"w2(M) != 0", "true", true});
    const bool four_torsion = has_element_of_order(h4, 4);
    d.trace.push_back({"H^4(M;Z) has no element of order 4", h4.to_string(), !four_torsion});
    d.trace.push_back({"w4(M) = 0", yes_no(m.w4_is_zero), m.w4_is_zero});
    bool div5 = false;
    d.trace.push_back(p1_divisibility_step(m, div5));
    if (h1_trivial)
        d.trace.push_back({"H1 = 0: H^4(M;Z) = 0", h4.to_string(), h4.is_trivial()});
    add_semicharacteristics(m, d.trace);

    if (!four_torsion) {
        d.theorem = h1_trivial ? "Cor 1.5(b)/Thm 1.4(b)" : "Thm 1.4(b)";
        d.verdict = m.w4_is_zero && div5 ? Verdict::Yes : Verdict::No;
        return d;
    }
    // Outside both criteria only the necessary conditions can decide.
    d.trace.push_back({"necessary conditions: 5 | p1, w4 = 0, w5 = 0", yes_no(m.w4_is_zero && div5), m.w4_is_zero && div5});
    if (!(m.w4_is_zero && div5)) {
        d.theorem = "Prop 2.4";
        d.verdict = Verdict::No;
    }
    else {
        d.theorem = "Remark 4.4";
        d.verdict = Verdict::Unknown;
        d.trace.push_back({"no criterion covers non-spin manifolds with 4-torsion in H^4(M;Z)", "undecided", false});
    }
    return d;
}

Decision decide_two_field(const ManifoldProfile& m, TwoFieldCriterion criterion)
{
    require_valid(m);
    Decision d;
    const int chi = semicharacteristic(m);
    const int k = kervaire_semicharacteristic(m);
    if (criterion == TwoFieldCriterion::Thomas) {
        if (!m.spin)
            throw CriterionInapplicable("criterion inapplicable: manifold is not spin");
        d.theorem = "Cor 1.2";
        d.trace.push_back({"w2(M) = 0", "true", true});
        d.trace.push_back({"w4(M) = 0", wu_forced, m.w4_is_zero});
        d.trace.push_back({"chi_hat(M) = 0", "chi_hat = " + std::to_string(chi), chi == 0});
        d.verdict = chi == 0 && m.w4_is_zero ? Verdict::Yes : Verdict::No;
        if (k != chi)
            d.trace.push_back({"warning: Atiyah criterion gives k(M) = " + std::to_string(k), "disagrees", false});
        return d;
    }
    d.theorem = "Thm 1.3";
    d.trace.push_back({"k(M) = 0", "k = " + std::to_string(k), k == 0});
    d.verdict = k == 0 ? Verdict::Yes : Verdict::No;
    if (m.spin && k != chi)
        d.trace.push_back({"warning: Thomas criterion gives chi_hat(M) = " + std::to_string(chi), "disagrees", false});
    return d;
}

Decision decide_standard_so3(const ManifoldProfile& m)
{
    Decision d = decide_two_field(m, TwoFieldCriterion::Atiyah);
    d.theorem = "Remark 1.9/Thm 1.3";
    if (m.spin) {
        const auto r = standard_reformulation_check(m);
        d.trace.push_back({"reformulation: irreducible <=> standard and 5 | p1", r.agrees ? "agrees" : "disagrees", r.agrees});
    }
    return d;
}

Decision rank3_bundle_exists(const ManifoldProfile& m, const Mod2Vector& w, const GroupElement& p)
{
    require_valid(m);
    require_fragment(m);
    const FgAbGroup h4 = cohomology(m, 4, Coefficients::Z);
    if (!(p.group() == h4))
        throw std::invalid_argument("rank3_bundle_exists: P must lie in H^4(M;Z) = " + h4.to_string());

    Decision d;
    d.theorem = "Thm 4.2";
    const bool hyp = !m.spin && !has_element_of_order(h4, 4);
    d.trace.push_back({"hypothesis: w2(M) != 0 and no element of order 4 in H^4(M;Z)", yes_no(hyp), hyp});
    const GroupElement lhs = reduce_integral(m, p, 4);
    const GroupElement rhs = pontryagin_square(m, w);
    d.trace.push_back({"rho_4 P", lhs.to_string(), true});
    d.trace.push_back({"P(W) for W = " + bits(w), rhs.to_string(), true});
    const bool eq = lhs == rhs;
    d.trace.push_back({"rho_4 P = P(W)", yes_no(eq), eq});
    d.verdict = eq ? Verdict::Yes : Verdict::No;
    return d;
}

bool rank5_relation_holds(const ManifoldProfile& m, const Bundle5Data& b)
{
    require_valid(m);
    require_fragment(m);
    if (!b.w2_class)
        throw InsufficientRingData("rank5_relation_holds: bundle has no w2 class");
    const FgAbGroup h4_2 = cohomology(m, 4, Coefficients::Z2);
    GroupElement w4 = GroupElement::zero(h4_2);
    if (!b.w4_zero) {
        if (b.w4_class)
            w4 = *b.w4_class;
        else if (h4_2 == FgAbGroup::cyclic(2))
            w4 = GroupElement(h4_2, {}, {1});
        else
            throw InsufficientRingData("rank5_relation_holds: w4 != 0 but its class is not recorded");
    }
    const GroupElement lhs = reduce_integral(m, b.p1, 4);
    const GroupElement rhs = pontryagin_square(m, *b.w2_class) + include_mod2_in_mod4(m, w4);
    return lhs == rhs;
}

}  // namespace so3
