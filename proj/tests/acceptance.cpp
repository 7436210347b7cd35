// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "generators.hpp"

#include <so3/charclass.hpp>
#include <so3/decide.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

using namespace so3;

namespace {

// Collects the first few failure messages of a criterion.
class Criterion
{
  public:
    explicit Criterion(int id) : id_(id) {}

    void check(bool ok, const std::string& what)
    {
        ++checks_;
        if (ok)
            return;
        ++failures_;
        if (notes_.size() < 5)
            notes_.push_back(what);
    }

    bool report(const std::string& summary) const
    {
        std::cout << (failures_ == 0 ? "PASS" : "FAIL") << " criterion " << id_ << ": " << summary << " (" << checks_
                  << " checks, " << failures_ << " failures)\n";
        for (const auto& n : notes_)
            std::cout << "       " << n << "\n";
        return failures_ == 0;
    }

  private:
    int id_;
    long checks_ = 0;
    long failures_ = 0;
    std::vector<std::string> notes_;
};

std::string vec(const std::vector<Integer>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

Integer pairing(const IntegerMatrix& q, const std::vector<Integer>& a, const std::vector<Integer>& b)
{
    Integer s = 0;
    const auto qb = q.apply(b);
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * qb[i];
    return s;
}

std::size_t dim_h2_mod2(const ManifoldProfile& m) { return mod_p_dimension(homology(m, 2, Coefficients::Z2), 2); }

// The rank 5 relation for the tangent data and, when P = p1/5 exists and
// w4 = 0, the rank 3 reconstruction. Returns a failure note or "".
std::string coherence_failure(const ManifoldProfile& m, long* eta_checked)
{
    if (!m.mod2)
        return "";
    const auto ref = std::make_shared<const ManifoldProfile>(m);
    const Bundle5Data tangent = tangent_data(ref);
    try {
        if (!rank5_relation_holds(m, tangent))
            return m.name + ": rank 5 relation fails for the tangent data";
    }
    catch (const std::exception& e) {
        return m.name + ": rank 5 relation not checkable: " + e.what();
    }
    const auto p = solve_divisibility(m.p1, 5);
    if (!p || !m.w4_is_zero)
        return "";
    ++*eta_checked;
    if (rank3_bundle_exists(m, m.mod2->w2, *p).verdict != Verdict::Yes)
        return m.name + ": no rank 3 bundle with w2 = w2(M), p1 = p1(M)/5";
    Bundle3Data eta;
    eta.base = ref;
    eta.w2_zero = m.spin;
    eta.w2_class = m.mod2->w2;
    eta.p1 = *p;
    if (!(sym0_classes(eta) == tangent))
        return m.name + ": Sym0(eta) differs from the tangent data";
    return "";
}

bool criterion1()
{
    Criterion c(1);
    const auto x3 = hypersurface(3);
    c.check(x3.b2 == 7, "b2(Sigma_3) = " + std::to_string(x3.b2));
    c.check(x3.euler_char == 9, "chi(Sigma_3) = " + x3.euler_char.get_str());
    c.check(x3.signature == -5, "sigma(Sigma_3) = " + x3.signature.get_str());
    c.check(x3.p1_eval == -15, "p1(Sigma_3) = " + x3.p1_eval.get_str());
    c.check(!x3.spin, "Sigma_3 reported spin");
    const auto x4 = hypersurface(4);
    c.check(x4.b2 == 22, "b2(Sigma_4) = " + std::to_string(x4.b2));
    c.check(x4.spin, "Sigma_4 reported non-spin");
    c.check(3 * x4.signature == x4.p1_eval, "3 sigma != p1 on Sigma_4");
    // The closed formulas for every degree up to 12.
    for (long d = 1; d <= 12; ++d) {
        const auto x = hypersurface(d);
        const Integer chi = Integer((6 - 4 * d + d * d) * d);
        const Integer p1 = Integer((4 - d * d) * d);
        c.check(x.euler_char == chi, "chi(Sigma_" + std::to_string(d) + ")");
        c.check(x.b2 == static_cast<std::size_t>((6 - 4 * d + d * d) * d - 2), "b2(Sigma_" + std::to_string(d) + ")");
        c.check(x.p1_eval == p1, "p1(Sigma_" + std::to_string(d) + ")");
        c.check(3 * x.signature == x.p1_eval, "3 sigma = p1 on Sigma_" + std::to_string(d));
        c.check(x.spin == (d % 2 == 0), "w2(Sigma_" + std::to_string(d) + ") = d u mod 2");
    }
    return c.report("hypersurface invariants, Sigma_3 = (b2 7, chi 9, sigma -5, p1 -15, non-spin), Sigma_4 spin with b2 22");
}

bool criterion2()
{
    Criterion c(2);
    const auto x = hypersurface(3);
    const std::vector<Integer> u{3, -1, -1, -1, -1, -1, -1};
    c.check(x.hyperplane_class && *x.hyperplane_class == u, "hyperplane class is not (3,-1,...,-1)");
    const auto w = find_euler_class(x, u, 3, 3);
    c.check(w.has_value(), "no Euler class found within bound 3");
    if (w) {
        c.check(pairing(*x.form, u, w->w) == 0, "u.w != 0");
        const auto qc = x.form->apply(w->c);
        c.check(content(qc) == 3, "content of Q(c) is " + content(qc).get_str());
        const auto m = circle_bundle({x, w->c});
        const auto h4 = cohomology(m, 4, Coefficients::Z);
        c.check(!m.spin, "(a) M is spin");
        c.check(h4 == FgAbGroup::cyclic(3), "H^4(M;Z) = " + h4.to_string());
        c.check(!has_element_of_order(h4, 4), "H^4(M;Z) has an element of order 4");
        c.check(m.p1.is_zero() && m.p1.group() == FgAbGroup::cyclic(3), "(b) p1(M) = " + m.p1.to_string());
        c.check(m.w4_is_zero, "(c) w4(M) != 0");
        c.check(semicharacteristic(m) == 1, "(d) chi_hat(M) != 1");
        c.check(kervaire_semicharacteristic(m) == 1, "(d) k(M) != 1");
        const auto d = decide_irreducible_so3(m);
        c.check(d.verdict == Verdict::Yes, "verdict " + to_string(d.verdict));
        c.check(d.theorem == "Thm 1.4(b)", "criterion " + d.theorem);
        return c.report("Sigma_3 -> c = " + vec(w->c) + " -> S^1-bundle: non-spin, H^4 = Z_3, p1 = 0, w4 = 0, chi_hat = k = 1, Yes via " +
                        d.theorem);
    }
    return c.report("circle bundle pipeline over Sigma_3");
}

bool criterion3()
{
    Criterion c(3);
    const auto wu = catalog("wu");
    const auto d = decide_irreducible_so3(wu);
    const auto a = decide_two_field(wu, TwoFieldCriterion::Atiyah);
    c.check(d.verdict == Verdict::Yes, "irreducible: " + to_string(d.verdict));
    c.check(a.verdict == Verdict::No, "two-field (atiyah): " + to_string(a.verdict));
    c.check(kervaire_semicharacteristic(wu) == 1, "k(wu) != 1");
    c.check(semicharacteristic(wu) == 0, "chi_hat(wu) != 0");
    return c.report("Wu manifold: irreducible " + to_string(d.verdict) + ", two-field (atiyah) " + to_string(a.verdict) + ", k = " +
                    std::to_string(kervaire_semicharacteristic(wu)) + ", chi_hat = " + std::to_string(semicharacteristic(wu)));
}

bool criterion4()
{
    Criterion c(4);
    std::mt19937_64 rng(2024);
    long spin = 0, nonspin = 0, bundles = 0;
    auto check = [&](const ManifoldProfile& m) {
        const auto d = decide_irreducible_so3(m);
        const Verdict expected = m.spin ? (dim_h2_mod2(m) % 2 == 1 ? Verdict::Yes : Verdict::No) : Verdict::Yes;
        c.check(d.verdict == expected, m.name + ": " + to_string(d.verdict) + " but the parity rule gives " + to_string(expected));
        (m.spin ? spin : nonspin)++;
    };
    for (int i = 0; i < 1000; ++i)
        check(gen::random_profile(rng, {.simply_connected = true}));
    // Circle bundles with primitive Euler class are simply connected.
    while (bundles < 300) {
        auto base = gen::random_base(rng);
        auto v = gen::random_nonzero_vector(rng, base.b2, 4);
        if (content(v) != 1)
            continue;
        const auto m = circle_bundle({std::move(base), std::move(v)});
        if (!has_trivial_h1(m))
            continue;
        check(m);
        ++bundles;
    }
    return c.report(std::to_string(spin + nonspin) + " simply connected profiles (" + std::to_string(spin) + " spin, " +
                    std::to_string(nonspin) + " non-spin, " + std::to_string(bundles) + " circle bundles) against the parity rule");
}

bool criterion5()
{
    Criterion c(5);
    std::mt19937_64 rng(1905);
    std::vector<ManifoldProfile> pool;
    for (const auto& n : catalog_names()) {
        auto m = catalog(n);
        if (m.spin && decide_irreducible_so3(m).verdict == Verdict::Yes)
            pool.push_back(std::move(m));
    }
    for (long g = 0; g <= 2; ++g)
        pool.push_back(product_3x2({FgAbGroup::free(1), FgAbGroup::cyclic(3), FgAbGroup(), FgAbGroup::free(1)}, g, "L(3,1)"));
    while (pool.size() < 40) {
        auto m = gen::random_profile(rng, {.spin = true});
        if (decide_irreducible_so3(m).verdict == Verdict::Yes)
            pool.push_back(std::move(m));
    }
    for (const auto& m : pool)
        c.check(m.spin && decide_irreducible_so3(m).verdict == Verdict::Yes, m.name + " is not a spin Yes profile");

    long pairs = 0;
    for (const auto& a : pool)
        for (const auto& b : pool) {
            const auto s = connected_sum(a, b);
            c.check(kervaire_semicharacteristic(s) == (kervaire_semicharacteristic(a) + kervaire_semicharacteristic(b) + 1) % 2,
                    "k formula fails on " + a.name + " # " + b.name);
            ++pairs;
        }

    long tuples = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const long n = 2 * gen::uniform(rng, 0, 3) + 1;
        ManifoldProfile sum = pool[gen::uniform(rng, 0, static_cast<long>(pool.size()) - 1)];
        for (long i = 1; i < n; ++i)
            sum = connected_sum(sum, pool[gen::uniform(rng, 0, static_cast<long>(pool.size()) - 1)]);
        const auto d = decide_irreducible_so3(sum);
        c.check(d.verdict == Verdict::Yes, std::to_string(n) + "-fold sum " + sum.name + " decides " + to_string(d.verdict));
        ++tuples;
    }
    return c.report(std::to_string(tuples) + " odd connected sums of spin Yes profiles decide Yes; k(a#b) = k(a)+k(b)+1 on " +
                    std::to_string(pairs) + " pairs");
}

bool criterion6()
{
    Criterion c(6);
    // H1(N) = Z^b + T with b + dim(T tensor Z_2) <= 5. The torsion part ranges
    // over every finite group of order <= 64 with that bound.
    long count = 0;
    for (const auto& t : oracle::all_finite_groups(64)) {
        const std::size_t t2 = mod_p_dimension(t, 2);
        for (std::size_t b = 0; b + t2 <= 5; ++b) {
            const FgAbGroup h1 = direct_sum(FgAbGroup::free(b), t);
            for (long g = 0; g <= 5; ++g) {
                const auto m = product_3x2({FgAbGroup::free(1), h1, FgAbGroup::free(b), FgAbGroup::free(1)}, g, "N");
                const std::string label = "H1(N) = " + h1.to_string() + ", genus " + std::to_string(g);
                c.check(semicharacteristic(m) == 0, label + ": chi_hat = 1");
                const auto d = decide_irreducible_so3(m);
                c.check(d.verdict == Verdict::Yes, label + ": " + to_string(d.verdict));
                ++count;
            }
        }
    }
    return c.report(std::to_string(count) + " products N x Sigma_g (dim H1(N;Z2) <= 5, |T(H1)| <= 64, g <= 5): chi_hat = 0 and Yes");
}

bool snf_contract(const IntegerMatrix& a, const SnfDecomposition& s, std::string& why)
{
    if (!(s.u * a * s.v == s.d)) {
        why = "U A V != D";
        return false;
    }
    if (abs(s.u.determinant()) != 1 || abs(s.v.determinant()) != 1) {
        why = "U or V not unimodular";
        return false;
    }
    if (s.d.rows() != a.rows() || s.d.cols() != a.cols()) {
        why = "D has the wrong shape";
        return false;
    }
    for (std::size_t r = 0; r < s.d.rows(); ++r)
        for (std::size_t col = 0; col < s.d.cols(); ++col)
            if (r != col && s.d(r, col) != 0) {
                why = "D not diagonal";
                return false;
            }
    const auto diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] < 0) {
            why = "negative diagonal entry";
            return false;
        }
        if (i + 1 < diag.size() && (diag[i] == 0 ? diag[i + 1] != 0 : diag[i + 1] % diag[i] != 0)) {
            why = "divisibility chain broken";
            return false;
        }
    }
    return true;
}

bool criterion7()
{
    Criterion c(7);
    std::mt19937_64 rng(7);
    const long matrices = 10000;
    for (long i = 0; i < matrices; ++i) {
        const std::size_t rows = gen::uniform(rng, 1, 6), cols = gen::uniform(rng, 1, 6);
        auto a = oracle::random_matrix(rng, rows, cols, -20, 20);
        // Every fourth matrix is rank deficient, so that zeros appear on the diagonal.
        if (i % 4 == 0 && rows > 1)
            for (std::size_t col = 0; col < cols; ++col)
                a(rows - 1, col) = a(0, col) * gen::uniform(rng, -2, 2);
        std::string why;
        c.check(snf_contract(a, smith_normal_form(a), why), std::to_string(rows) + "x" + std::to_string(cols) + ": " + why + " for " +
                                                                  a.to_string());
    }

    const std::vector<long> divisors{2, 3, 4, 5};
    long groups = 0, elements = 0;
    for (const auto& g : oracle::all_finite_groups(1000)) {
        ++groups;
        const auto moduli = oracle::orders_of(g);
        const auto all = oracle::enumerate(moduli);
        for (long n : divisors) {
            std::set<oracle::Coords> image;
            for (const auto& y : all)
                image.insert(oracle::scaled(y, n, moduli));
            for (const auto& x : all) {
                const std::vector<Integer> coords(x.begin(), x.end());
                const auto elem = GroupElement::from_generator_coords(g, coords);
                const auto y = solve_divisibility(elem, n);
                const bool divisible = image.count(x) > 0;
                if (y.has_value() != divisible || (y && !(scale(n, *y) == elem)))
                    c.check(false, "solve_divisibility(" + elem.to_string() + ", " + std::to_string(n) + ")");
                else
                    c.check(true, "");
                ++elements;
            }
        }
    }
    return c.report(std::to_string(matrices) + " random SNFs up to 6x6 in [-20,20]; solve_divisibility by 2,3,4,5 on all " +
                    std::to_string(groups) + " groups of order <= 1000 (" + std::to_string(elements) + " cases)");
}

bool criterion8()
{
    Criterion c(8);
    std::mt19937_64 rng(88);
    std::vector<ManifoldProfile> profiles;
    for (const auto& n : catalog_names())
        profiles.push_back(catalog(n));
    const std::size_t named = profiles.size();
    for (std::size_t i = 0; i < named; ++i)
        for (std::size_t j = 0; j < named; ++j)
            profiles.push_back(connected_sum(profiles[i], profiles[j]));
    {
        const auto x = hypersurface(3);
        const auto w = find_euler_class(x, *x.hyperplane_class, 3, 3);
        if (w)
            profiles.push_back(circle_bundle({x, w->c}));
        for (long d = 1; d <= 3; ++d) {
            const auto y = hypersurface(d);
            for (long k = 1; k <= 6; ++k) {
                std::vector<Integer> cl(y.b2, 0);
                cl[0] = k;
                profiles.push_back(circle_bundle({y, cl}));
            }
        }
    }
    for (int i = 0; i < 400; ++i)
        profiles.push_back(gen::random_circle_bundle(rng));
    for (int i = 0; i < 100; ++i)
        profiles.push_back(connected_sum(gen::random_circle_bundle(rng), profiles[gen::uniform(rng, 0, static_cast<long>(named) - 1)]));

    long with_fragment = 0, eta_checked = 0;
    for (const auto& m : profiles) {
        if (!m.mod2)
            continue;
        ++with_fragment;
        const auto why = coherence_failure(m, &eta_checked);
        c.check(why.empty(), why);
    }
    return c.report("rank 5 relation on " + std::to_string(with_fragment) + " constructed profiles with ring data; Sym0(eta) = tangent for " +
                    std::to_string(eta_checked) + " with 5 | p1 and w4 = 0");
}

}  // namespace

int main()
{
    const std::vector<std::function<bool()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                      criterion5, criterion6, criterion7, criterion8};
    bool all = true;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            all &= criteria[i]();
        }
        catch (const std::exception& e) {
            std::cout << "FAIL criterion " << i + 1 << ": uncaught exception: " << e.what() << "\n";
            all = false;
        }
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (all ? "all criteria passed" : "some criteria failed") << " in " << secs << " s\n";
    return all ? 0 : 1;
}
