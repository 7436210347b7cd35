#include "so3/reproduce.hpp"

#include "so3/charclass.hpp"
#include "so3/constructors.hpp"
#include "so3/decide.hpp"
#include "so3/recipe.hpp"

#include <stdexcept>

namespace so3 {

namespace {

std::string str(bool b) { return b ? "true" : "false"; }
std::string str(const Integer& x) { return x.get_str(); }
std::string str(std::size_t x) { return std::to_string(x); }
std::string str(int x) { return std::to_string(x); }

std::string str(const std::vector<Integer>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

class Recorder
{
  public:
    Recorder(ReproductionReport& r, std::string prefix) : report_(r), prefix_(std::move(prefix)) {}

    void expect(const std::string& name, const std::string& expected, const std::string& actual)
    {
        report_.checks.push_back({prefix_ + name, expected, actual});
    }

  private:
    ReproductionReport& report_;
    std::string prefix_;
};

Integer pairing(const IntegerMatrix& q, const std::vector<Integer>& a, const std::vector<Integer>& b)
{
    Integer s = 0;
    const auto qb = q.apply(b);
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * qb[i];
    return s;
}

// The rank 3 bundle behind an irreducible structure on a non-spin manifold:
// P = p1/5 with rho_4 P = P w2, and Sym0 of it recovers the tangent data.
void check_eta(Recorder& rec, const ManifoldProfile& m)
{
    const auto ref = std::make_shared<const ManifoldProfile>(m);
    const Bundle5Data tangent = tangent_data(ref);
    rec.expect("tangent data satisfies rho_4 p1 = P w2 + i_* w4", "true", str(rank5_relation_holds(m, tangent)));
    const auto p = solve_divisibility(m.p1, 5);
    rec.expect("p1(M) divisible by 5", "true", str(p.has_value()));
    if (!p)
        return;
    const Decision d = rank3_bundle_exists(m, m.mod2->w2, *p);
    rec.expect("rank 3 bundle with w2 = w2(M), p1 = p1(M)/5", "Yes", to_string(d.verdict));
    Bundle3Data eta;
    eta.base = ref;
    eta.w2_zero = m.spin;
    eta.w2_class = m.mod2->w2;
    eta.p1 = *p;
    rec.expect("Sym0(eta) has the classes of the tangent bundle", "true", str(sym0_classes(eta) == tangent));
}

void hypersurface_table(Recorder& rec)
{
    const auto x3 = hypersurface(3);
    rec.expect("Sigma_3: b2", "7", str(x3.b2));
    rec.expect("Sigma_3: euler characteristic", "9", str(x3.euler_char));
    rec.expect("Sigma_3: signature", "-5", str(x3.signature));
    rec.expect("Sigma_3: p1", "-15", str(x3.p1_eval));
    rec.expect("Sigma_3: spin", "false", str(x3.spin));
    const auto x4 = hypersurface(4);
    rec.expect("Sigma_4: b2", "22", str(x4.b2));
    rec.expect("Sigma_4: spin", "true", str(x4.spin));
    rec.expect("Sigma_4: 3 sigma = p1", "true", str(3 * x4.signature == x4.p1_eval));
}

void circle_bundle_example(Recorder& rec)
{
    const auto x = hypersurface(3);
    const auto& u = *x.hyperplane_class;
    rec.expect("u.u", "3", str(pairing(*x.form, u, u)));
    const auto w = find_euler_class(x, u, 3, euler_search_bound());
    rec.expect("Euler class search succeeds", "true", str(w.has_value()));
    if (!w)
        return;
    rec.expect("witness c = u + w", "(3,-3,-3,0,0,0,0)", str(w->c));
    rec.expect("u.w", "0", str(pairing(*x.form, u, w->w)));
    const auto m = circle_bundle({x, w->c});
    const auto h4 = cohomology(m, 4, Coefficients::Z);
    rec.expect("H^4(M;Z)", "Z_3", h4.to_string());
    rec.expect("H^4(M;Z) has an element of order 4", "false", str(has_element_of_order(h4, 4)));
    rec.expect("M spin", "false", str(m.spin));
    rec.expect("p1(M) = 0", "true", str(m.p1.is_zero()));
    rec.expect("w4(M) = 0", "true", str(m.w4_is_zero));
    rec.expect("chi_hat(M)", "1", str(semicharacteristic(m)));
    rec.expect("k(M)", "1", str(kervaire_semicharacteristic(m)));
    const auto d = decide_irreducible_so3(m);
    rec.expect("irreducible SO(3)-structure", "Yes", to_string(d.verdict));
    rec.expect("criterion", "Thm 1.4(b)", d.theorem);
    check_eta(rec, m);
}

ManifoldProfile product(const FgAbGroup& h1, long genus, const std::string& name)
{
    return product_3x2({FgAbGroup::free(1), h1, h1.free_part(), FgAbGroup::free(1)}, genus, name);
}

void sec5(ReproductionReport& report)
{
    {
        Recorder rec(report, "Wu manifold: ");
        const auto wu = catalog("wu");
        rec.expect("chi_hat", "0", str(semicharacteristic(wu)));
        rec.expect("k", "1", str(kervaire_semicharacteristic(wu)));
        const auto d = decide_irreducible_so3(wu);
        rec.expect("irreducible SO(3)-structure", "Yes", to_string(d.verdict));
        rec.expect("criterion", "Cor 1.5(b)/Thm 1.4(b)", d.theorem);
        rec.expect("two-field (Atiyah)", "No", to_string(decide_two_field(wu, TwoFieldCriterion::Atiyah).verdict));
        check_eta(rec, wu);
    }
    {
        Recorder rec(report, "hypersurfaces: ");
        hypersurface_table(rec);
    }
    {
        Recorder rec(report, "circle bundle over Sigma_3: ");
        circle_bundle_example(rec);
    }
    {
        Recorder rec(report, "products N x Sigma_g: ");
        const std::vector<std::pair<std::string, FgAbGroup>> ns{
            {"S3", FgAbGroup::trivial()},          {"RP3", FgAbGroup::cyclic(2)},
            {"L(3,1)", FgAbGroup::cyclic(3)},      {"L(4,1)", FgAbGroup::cyclic(4)},
            {"S1xS2", FgAbGroup::free(1)},         {"T3", FgAbGroup::free(3)},
            {"S1xS2#RP3", FgAbGroup(1, {2})},
        };
        for (const auto& [name, h1] : ns) {
            std::string verdicts, chis;
            for (long g = 0; g <= 3; ++g) {
                const auto m = product(h1, g, name);
                verdicts += (g ? "," : "") + to_string(decide_irreducible_so3(m).verdict);
                chis += (g ? "," : "") + str(semicharacteristic(m));
            }
            rec.expect(name + " x Sigma_0..3: irreducible", "Yes,Yes,Yes,Yes", verdicts);
            rec.expect(name + " x Sigma_0..3: chi_hat", "0,0,0,0", chis);
        }
    }
    {
        Recorder rec(report, "S3-bundles over S2: ");
        const auto triv = catalog("s3xs2");
        rec.expect("S3 x S2 has the homology of N x Sigma_0 for N = S3", "true",
                   str(triv.homology == product(FgAbGroup::trivial(), 0, "S3").homology));
        rec.expect("S3 x S2: irreducible", "Yes", to_string(decide_irreducible_so3(triv).verdict));
        const auto m = catalog("s3~xs2");
        rec.expect("twisted: H2", "Z", m.homology[2].to_string());
        rec.expect("twisted: H^4(M;Z)", "0", cohomology(m, 4, Coefficients::Z).to_string());
        rec.expect("twisted: w2 != 0", "true", str(!m.spin));
        rec.expect("twisted: p1 = 0", "true", str(m.p1.is_zero()));
        const auto d = decide_irreducible_so3(m);
        rec.expect("twisted: irreducible", "Yes", to_string(d.verdict));
        rec.expect("twisted: criterion", "Cor 1.5(b)/Thm 1.4(b)", d.theorem);
        check_eta(rec, m);
    }
    {
        Recorder rec(report, "connected sums of spin manifolds: ");
        bool formula = true;
        for (const auto& a : catalog_names())
            for (const auto& b : catalog_names()) {
                const auto ma = catalog(a), mb = catalog(b);
                formula &= kervaire_semicharacteristic(connected_sum(ma, mb)) ==
                           (kervaire_semicharacteristic(ma) + kervaire_semicharacteristic(mb) + 1) % 2;
            }
        rec.expect("k(a # b) = k(a) + k(b) + 1 on catalog pairs", "true", str(formula));
        const std::vector<ManifoldProfile> parts{product(FgAbGroup::trivial(), 1, "S3"), product(FgAbGroup::cyclic(2), 0, "RP3"),
                                                 product(FgAbGroup::free(3), 2, "T3")};
        ManifoldProfile sum = parts[0];
        std::string verdicts = to_string(decide_irreducible_so3(sum).verdict), two_field;
        two_field = to_string(decide_two_field(sum, TwoFieldCriterion::Atiyah).verdict);
        for (std::size_t i = 1; i < 5; ++i) {
            sum = connected_sum(sum, parts[i % parts.size()]);
            verdicts += "," + to_string(decide_irreducible_so3(sum).verdict);
            two_field += "," + to_string(decide_two_field(sum, TwoFieldCriterion::Atiyah).verdict);
        }
        rec.expect("#1..#5 of products: irreducible", "Yes,No,Yes,No,Yes", verdicts);
        rec.expect("#1..#5 of products: two-field", "Yes,No,Yes,No,Yes", two_field);
    }
}

}  // namespace

bool ReproductionReport::ok() const
{
    for (const auto& c : checks)
        if (!c.ok())
            return false;
    return true;
}

std::vector<std::string> reproduction_targets() { return {"prop1.7", "sec5"}; }

ReproductionReport reproduce(const std::string& target)
{
    ReproductionReport report;
    report.target = target;
    if (target == "prop1.7") {
        Recorder rec(report, "");
        hypersurface_table(rec);
        circle_bundle_example(rec);
    }
    else if (target == "sec5") {
        sec5(report);
    }
    else {
        throw std::invalid_argument("unknown reproduction target '" + target + "' (expected prop1.7 or sec5)");
    }
    return report;
}

}  // namespace so3
