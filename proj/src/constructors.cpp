#include "so3/constructors.hpp"

#include <algorithm>
#include <stdexcept>

namespace so3 {

namespace {

const FgAbGroup z_group = FgAbGroup::free(1);

std::string vector_string(const std::vector<Integer>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

Mod2Vector mod2(const std::vector<Integer>& v)
{
    Mod2Vector out;
    for (const auto& x : v)
        out.push_back(mpz_odd_p(x.get_mpz_t()) ? 1 : 0);
    return out;
}

bool is_zero_vector(const Mod2Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

ManifoldProfile make_profile(std::string name, std::array<FgAbGroup, 6> h, bool spin, bool w4_zero)
{
    ManifoldProfile m;
    m.name = std::move(name);
    m.homology = std::move(h);
    m.spin = spin;
    m.w4_is_zero = w4_zero;
    m.p1 = GroupElement::zero(cohomology(m, 4, Coefficients::Z));
    return m;
}

// Fragment for a profile whose H^4(M;Z) is trivial.
Mod2Fragment fragment_with_trivial_h4(const ManifoldProfile& m, Mod2Vector w2)
{
    Mod2Fragment f;
    f.h2_dim = mod_p_dimension(cohomology(m, 2, Coefficients::Z2), 2);
    const auto zero2 = GroupElement::zero(cohomology(m, 4, Coefficients::Z2));
    const auto zero4 = GroupElement::zero(cohomology(m, 4, Coefficients::Z4));
    f.cup.assign(f.h2_dim, std::vector<GroupElement>(f.h2_dim, zero2));
    f.psquare.assign(f.h2_dim, zero4);
    f.w2 = std::move(w2);
    return f;
}

ManifoldProfile finish(ManifoldProfile m)
{
    require_valid(m);
    return m;
}

}  // namespace

/****************************************************
 *                  4-manifolds
 ***************************************************/

std::vector<std::string> validate(const FourManifoldProfile& x)
{
    std::vector<std::string> out;
    if (x.euler_char != Integer(x.b2) + 2)
        out.push_back("Euler characteristic must equal b2 + 2");
    if (3 * x.signature != x.p1_eval)
        out.push_back("p1 must equal 3 * signature");
    if (x.form) {
        const auto& q = *x.form;
        if (q.rows() != x.b2 || q.cols() != x.b2) {
            out.push_back("intersection form must be b2 x b2");
            return out;
        }
        if (!q.is_symmetric())
            out.push_back("intersection form must be symmetric");
        else if (abs(q.determinant()) != 1)
            out.push_back("intersection form must be unimodular");
        else if (signature_of(q) != x.signature)
            out.push_back("signature disagrees with the intersection form");
    }
    if (x.w2_vector) {
        const auto& w = *x.w2_vector;
        if (w.size() != x.b2) {
            out.push_back("w2 vector must have length b2");
        }
        else {
            if (is_zero_vector(w) != x.spin)
                out.push_back("w2 vector must vanish exactly when spin");
            if (x.form && out.empty()) {
                const auto& q = *x.form;
                for (std::size_t i = 0; i < x.b2; ++i) {
                    Integer qw = 0;
                    for (std::size_t j = 0; j < x.b2; ++j)
                        if (w[j])
                            qw += q(i, j);
                    if (mpz_odd_p(Integer(qw - q(i, i)).get_mpz_t())) {
                        out.push_back("w2 vector is not characteristic for the form");
                        break;
                    }
                }
            }
        }
    }
    if (x.hyperplane_class && x.hyperplane_class->size() != x.b2)
        out.push_back("hyperplane class must have length b2");
    return out;
}

Integer signature_of(const IntegerMatrix& q)
{
    if (!q.is_symmetric())
        throw std::invalid_argument("signature_of: matrix is not symmetric");
    const std::size_t n = q.rows();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = q(i, j);

    // Congruence a -> E a E^T, one pivot at a time.
    Integer sig = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][p] == 0)
                ++p;
            if (p < n) {
                std::swap(a[k], a[p]);
                for (auto& row : a)
                    std::swap(row[k], row[p]);
            }
            else {
                p = k + 1;
                while (p < n && a[k][p] == 0)
                    ++p;
                if (p == n)
                    continue;  // null direction
                // e_k <- e_k + e_p gives a[k][k] = 2 a[k][p] != 0
                for (std::size_t j = 0; j < n; ++j)
                    a[k][j] += a[p][j];
                for (std::size_t i = 0; i < n; ++i)
                    a[i][k] += a[i][p];
            }
        }
        const mpq_class pivot = a[k][k];
        sig += pivot > 0 ? 1 : -1;
        // Schur complement of the pivot.
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] -= a[i][k] * a[k][j] / pivot;
        for (std::size_t i = k + 1; i < n; ++i)
            a[i][k] = a[k][i] = 0;
    }
    return sig;
}

Mod2Vector characteristic_vector(const IntegerMatrix& q)
{
    // Solve Q w = diag(Q) over F_2.
    const std::size_t n = q.rows();
    std::vector<std::vector<std::uint8_t>> a(n, std::vector<std::uint8_t>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = mpz_odd_p(q(i, j).get_mpz_t()) ? 1 : 0;
        a[i][n] = mpz_odd_p(q(i, i).get_mpz_t()) ? 1 : 0;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && !a[p][c])
            ++p;
        if (p == n)
            throw std::invalid_argument("characteristic_vector: form is singular mod 2");
        std::swap(a[c], a[p]);
        for (std::size_t r = 0; r < n; ++r)
            if (r != c && a[r][c])
                for (std::size_t j = c; j <= n; ++j)
                    a[r][j] ^= a[c][j];
    }
    Mod2Vector w(n);
    for (std::size_t i = 0; i < n; ++i)
        w[i] = a[i][n];
    return w;
}

FourManifoldProfile four_manifold_from_form(std::string name, IntegerMatrix q)
{
    if (!q.is_symmetric() || abs(q.determinant()) != 1)
        throw std::invalid_argument("four_manifold_from_form: form must be symmetric and unimodular");
    FourManifoldProfile x;
    x.name = std::move(name);
    x.b2 = q.rows();
    x.signature = signature_of(q);
    x.p1_eval = 3 * x.signature;
    x.euler_char = Integer(x.b2) + 2;
    x.w2_vector = characteristic_vector(q);
    x.spin = is_zero_vector(*x.w2_vector);
    x.form = std::move(q);
    return x;
}

FourManifoldProfile hypersurface(long degree)
{
    if (degree < 1)
        throw std::invalid_argument("hypersurface: degree must be positive");
    const Integer d = degree;
    FourManifoldProfile x;
    x.name = "Sigma_" + d.get_str();
    const Integer chi = (6 - 4 * d + d * d) * d;
    x.b2 = Integer(chi - 2).get_ui();
    x.euler_char = chi;
    // <u^2, [Sigma_d]> = d
    x.p1_eval = (4 - d * d) * d;
    if (!mpz_divisible_ui_p(x.p1_eval.get_mpz_t(), 3))
        throw std::logic_error("hypersurface: p1 not divisible by 3");
    x.signature = x.p1_eval / 3;
    x.spin = degree % 2 == 0;

    switch (degree) {
    case 1:
        x.form = IntegerMatrix{{1}};
        x.hyperplane_class = std::vector<Integer>{1};
        break;
    case 2:
        x.form = IntegerMatrix{{0, 1}, {1, 0}};
        x.hyperplane_class = std::vector<Integer>{1, 1};
        break;
    case 3: {
        // CP^2 # 6 (-CP^2) in the basis H, E_1..E_6.
        std::vector<Integer> diag{1, -1, -1, -1, -1, -1, -1};
        x.form = IntegerMatrix::diagonal(diag);
        x.hyperplane_class = std::vector<Integer>{3, -1, -1, -1, -1, -1, -1};
        break;
    }
    default:
        break;
    }
    if (x.hyperplane_class) {
        Mod2Vector w;
        for (const auto& c : *x.hyperplane_class)
            w.push_back(mpz_odd_p(Integer(d * c).get_mpz_t()) ? 1 : 0);
        x.w2_vector = w;
    }
    auto v = validate(x);
    if (!v.empty())
        throw std::logic_error("hypersurface: " + v.front());
    return x;
}

/****************************************************
 *                 Circle bundles
 ***************************************************/

ManifoldProfile circle_bundle(const CircleBundleSpec& spec)
{
    const auto& base = spec.base;
    if (auto v = validate(base); !v.empty())
        throw std::invalid_argument("circle_bundle: invalid base: " + v.front());
    if (!base.form || !base.w2_vector)
        throw std::invalid_argument("circle_bundle: base '" + base.name + "' has no intersection form");
    const auto& q = *base.form;
    const auto& c = spec.euler_class;
    const std::size_t b2 = base.b2;
    if (c.size() != b2)
        throw std::invalid_argument("circle_bundle: Euler class must have length " + std::to_string(b2));
    if (content(c) == 0)
        throw std::invalid_argument("circle_bundle: Euler class must be nonzero");

    // phi = Q c represents x -> c.x : H^2(X) -> H^4(X) = Z.
    const auto phi = q.apply(c);
    const Integer g = content(phi);
    if (g != content(c))
        throw std::logic_error("circle_bundle: content(Qc) != content(c) for a unimodular form");

    // H^2(M;Z) = coker(1 -> c), H^4(M;Z) = coker(x -> c.x).
    const FgAbGroup h2 = cokernel(IntegerMatrix::column(c));
    IntegerMatrix cup_c(1, b2);
    for (std::size_t i = 0; i < b2; ++i)
        cup_c(0, i) = phi[i];
    const Cokernel h4 = cokernel_with_map(cup_c);

    const FgAbGroup tg = FgAbGroup::cyclic(g);
    std::array<FgAbGroup, 6> h{z_group, tg, FgAbGroup::free(b2 - 1), direct_sum(FgAbGroup::free(b2 - 1), tg), FgAbGroup(), z_group};

    const Mod2Vector cbar = mod2(c);
    const Mod2Vector& w2x = *base.w2_vector;
    const bool spin = is_zero_vector(w2x) || w2x == cbar;
    const bool phi_odd = !is_zero_vector(mod2(phi));
    const bool w4_zero = mpz_even_p(base.euler_char.get_mpz_t()) || phi_odd;

    ManifoldProfile m = make_profile("S1-bundle(" + base.name + ", c=" + vector_string(c) + ")", h, spin, w4_zero);
    const FgAbGroup h4z = cohomology(m, 4, Coefficients::Z);
    if (!(h4.group == h4z) || !(h2 == cohomology(m, 2, Coefficients::Z)))
        throw std::logic_error("circle_bundle: Gysin cokernels disagree with the homology");
    const std::vector<Integer> p1_top{base.p1_eval};
    m.p1 = h4.project(p1_top);

    // H^2(M;Z_2) is spanned by pullbacks; pi^* kills exactly cbar.
    std::vector<std::size_t> basis;
    std::size_t pivot = b2;
    for (std::size_t i = 0; i < b2; ++i)
        if (cbar[i]) {
            pivot = i;
            break;
        }
    for (std::size_t i = 0; i < b2; ++i)
        if (i != pivot)
            basis.push_back(i);

    const Reduction two(h4z, 2), four(h4z, 4);
    auto pull = [&](const Integer& top) {
        const std::vector<Integer> v{top};
        return h4.project(v);
    };
    Mod2Fragment f;
    f.h2_dim = basis.size();
    for (std::size_t a = 0; a < basis.size(); ++a) {
        std::vector<GroupElement> row;
        for (std::size_t b = 0; b < basis.size(); ++b)
            row.push_back(two.apply(pull(q(basis[a], basis[b]))));
        f.cup.push_back(std::move(row));
        f.psquare.push_back(four.apply(pull(q(basis[a], basis[a]))));
    }
    Mod2Vector w = w2x;
    if (pivot < b2 && w[pivot])
        for (std::size_t i = 0; i < b2; ++i)
            w[i] ^= cbar[i];
    for (std::size_t i : basis)
        f.w2.push_back(w[i]);
    m.mod2 = std::move(f);
    return finish(std::move(m));
}

std::optional<EulerClassWitness> find_euler_class(const FourManifoldProfile& base, const std::vector<Integer>& u,
                                                  const Integer& torsion, long bound)
{
    if (!base.form)
        throw std::invalid_argument("find_euler_class: base has no intersection form");
    const auto& q = *base.form;
    const std::size_t n = base.b2;
    if (u.size() != n)
        throw std::invalid_argument("find_euler_class: u must have length " + std::to_string(n));
    if (bound < 0)
        return std::nullopt;

    const auto qu = q.apply(u);
    std::vector<Integer> w(n, -bound);
    for (;;) {
        Integer dot = 0;
        for (std::size_t i = 0; i < n; ++i)
            dot += qu[i] * w[i];
        if (dot == 0 && w != u) {
            std::vector<Integer> c(n);
            for (std::size_t i = 0; i < n; ++i)
                c[i] = u[i] + w[i];
            if (content(q.apply(c)) == torsion)
                return EulerClassWitness{std::move(c), w};
        }
        // odometer, last coordinate fastest
        std::size_t i = n;
        while (i > 0 && w[i - 1] == bound) {
            w[i - 1] = -bound;
            --i;
        }
        if (i == 0)
            return std::nullopt;
        ++w[i - 1];
    }
}

/****************************************************
 *            Connected sums and products
 ***************************************************/

ManifoldProfile connected_sum(const ManifoldProfile& a, const ManifoldProfile& b)
{
    require_valid(a);
    require_valid(b);
    std::array<FgAbGroup, 6> h{z_group, {}, {}, {}, {}, z_group};
    for (int i = 1; i <= 4; ++i)
        h[i] = direct_sum(a.homology[i], b.homology[i]);
    ManifoldProfile m = make_profile(a.name + " # " + b.name, h, a.spin && b.spin, a.w4_is_zero && b.w4_is_zero);

    const FgAbGroup h4a = cohomology(a, 4, Coefficients::Z), h4b = cohomology(b, 4, Coefficients::Z);
    const DirectSum sum = direct_sum_with_maps(h4a, h4b);
    if (!(sum.group == cohomology(m, 4, Coefficients::Z)))
        throw std::logic_error("connected_sum: H^4 is not additive");
    m.p1 = sum.pair(a.p1, b.p1);

    if (a.mod2 && b.mod2) {
        // Products between summands vanish; within a summand they are kept.
        const FgAbGroup h4m = sum.group;
        const Reduction two_a(h4a, 2), four_a(h4a, 4), two_b(h4b, 2), four_b(h4b, 4);
        const Reduction two_m(h4m, 2), four_m(h4m, 4);
        const std::size_t na = a.mod2->h2_dim, nb = b.mod2->h2_dim;
        Mod2Fragment f;
        f.h2_dim = na + nb;
        const auto zero2 = GroupElement::zero(two_m.target());
        f.cup.assign(f.h2_dim, std::vector<GroupElement>(f.h2_dim, zero2));
        for (std::size_t i = 0; i < na; ++i) {
            for (std::size_t j = 0; j < na; ++j)
                f.cup[i][j] = two_m.apply(sum.include_first(two_a.lift(a.mod2->cup[i][j])));
            f.psquare.push_back(four_m.apply(sum.include_first(four_a.lift(a.mod2->psquare[i]))));
        }
        for (std::size_t i = 0; i < nb; ++i) {
            for (std::size_t j = 0; j < nb; ++j)
                f.cup[na + i][na + j] = two_m.apply(sum.include_second(two_b.lift(b.mod2->cup[i][j])));
            f.psquare.push_back(four_m.apply(sum.include_second(four_b.lift(b.mod2->psquare[i]))));
        }
        f.w2 = a.mod2->w2;
        f.w2.insert(f.w2.end(), b.mod2->w2.begin(), b.mod2->w2.end());
        m.mod2 = std::move(f);
    }
    return finish(std::move(m));
}

std::vector<std::string> validate_three_manifold_homology(const std::array<FgAbGroup, 4>& h)
{
    std::vector<std::string> out;
    if (!(h[0] == z_group))
        out.push_back("H0(N) must be Z");
    if (!(h[3] == z_group))
        out.push_back("H3(N) must be Z");
    if (!h[2].is_free())
        out.push_back("H2(N) must be free");
    if (h[2].free_rank() != h[1].free_rank())
        out.push_back("rank H2(N) must equal rank H1(N)");
    return out;
}

ManifoldProfile product_3x2(const std::array<FgAbGroup, 4>& n, long genus, std::string n_name)
{
    if (auto v = validate_three_manifold_homology(n); !v.empty())
        throw std::invalid_argument("product_3x2: " + v.front());
    if (genus < 0)
        throw std::invalid_argument("product_3x2: genus must be nonnegative");
    const std::array<FgAbGroup, 3> surface{z_group, FgAbGroup::free(2 * static_cast<std::size_t>(genus)), z_group};

    std::array<FgAbGroup, 6> h;
    for (int k = 0; k <= 5; ++k) {
        FgAbGroup acc;
        for (int i = 0; i <= 3; ++i) {
            const int j = k - i;
            if (j >= 0 && j <= 2)
                acc = direct_sum(acc, tensor(n[i], surface[j]));
            const int jt = k - 1 - i;
            if (jt >= 0 && jt <= 2)
                acc = direct_sum(acc, tor(n[i], surface[jt]));
        }
        h[k] = acc;
    }
    // N is parallelizable and Sigma_g x N has trivial stable tangent data in
    // degrees 2 and 4.
    return finish(make_profile(n_name + " x Sigma_" + std::to_string(genus), h, true, true));
}

/****************************************************
 *                    Catalog
 ***************************************************/

std::vector<std::string> catalog_names() { return {"s5", "wu", "s3xs2", "s3~xs2"}; }

ManifoldProfile catalog(std::string_view name)
{
    const FgAbGroup zero;
    if (name == "s5") {
        auto m = make_profile("s5", {z_group, zero, zero, zero, zero, z_group}, true, true);
        m.mod2 = fragment_with_trivial_h4(m, {});
        return finish(std::move(m));
    }
    if (name == "wu") {
        auto m = make_profile("wu", {z_group, zero, FgAbGroup::cyclic(2), zero, zero, z_group}, false, true);
        m.mod2 = fragment_with_trivial_h4(m, {1});
        return finish(std::move(m));
    }
    if (name == "s3xs2") {
        auto m = make_profile("s3xs2", {z_group, zero, z_group, z_group, zero, z_group}, true, true);
        m.mod2 = fragment_with_trivial_h4(m, {0});
        return finish(std::move(m));
    }
    if (name == "s3~xs2") {
        auto m = make_profile("s3~xs2", {z_group, zero, z_group, z_group, zero, z_group}, false, true);
        m.mod2 = fragment_with_trivial_h4(m, {1});
        return finish(std::move(m));
    }
    throw std::invalid_argument("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace so3
