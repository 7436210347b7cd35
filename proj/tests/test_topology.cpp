#include "generators.hpp"

#include <doctest.h>

using namespace so3;

namespace {

ManifoldProfile bare(std::array<FgAbGroup, 6> h, bool spin = true, bool w4_zero = true)
{
    ManifoldProfile m;
    m.name = "test";
    m.homology = std::move(h);
    m.spin = spin;
    m.w4_is_zero = w4_zero;
    m.p1 = GroupElement::zero(cohomology(m, 4, Coefficients::Z));
    return m;
}

const FgAbGroup Z = FgAbGroup::free(1);
const FgAbGroup O = FgAbGroup::trivial();

ManifoldProfile bundle_over_cubic()
{
    std::vector<Integer> c{3, -3, -3, 0, 0, 0, 0};
    return circle_bundle({hypersurface(3), c});
}

long even_factors(const FgAbGroup& g)
{
    long n = 0;
    for (const auto& d : g.torsion())
        n += d % 2 == 0;
    return n;
}

// dim H_i(M;Z_2) read off from integral homology by counting element orders.
long mod2_betti(const ManifoldProfile& m, int i)
{
    auto two_torsion_rank = [](const FgAbGroup& g) {
        const long count = oracle::k_torsion_count(oracle::orders_of(g.torsion_subgroup()), 2);
        long r = 0;
        for (long c = count; c > 1; c /= 2)
            ++r;
        return r;
    };
    long d = static_cast<long>(m.homology[i].free_rank()) + two_torsion_rank(m.homology[i]);
    if (i > 0)
        d += two_torsion_rank(m.homology[i - 1]);
    return d;
}

}  // namespace

TEST_CASE("validate: named examples")
{
    CHECK(validate(catalog("s5")).empty());
    CHECK(validate(bare({Z, O, O, O, O, Z})).empty());

    auto bad = bare({Z, O, O, O, FgAbGroup::cyclic(2), Z});
    const auto v = validate(bad);
    CHECK(std::find(v.begin(), v.end(), "H4 must be torsion-free") != v.end());

    CHECK(validate(bare({Z, O, FgAbGroup::cyclic(2), O, O, Z}, false, true)).empty());
}

TEST_CASE("validate: each duality constraint is reported")
{
    CHECK(!validate(bare({FgAbGroup::free(2), O, O, O, O, Z})).empty());
    CHECK(!validate(bare({Z, O, O, O, O, O})).empty());
    CHECK(!validate(bare({Z, Z, O, O, O, Z})).empty());
    CHECK(!validate(bare({Z, FgAbGroup::cyclic(3), O, O, O, Z})).empty());
    CHECK(!validate(bare({Z, O, Z, O, O, Z})).empty());

    auto m = bare({Z, O, O, O, O, Z});
    m.w4_is_zero = false;
    CHECK(!validate(m).empty());
    m = bare({Z, O, O, O, O, Z}, false, true);
    CHECK(!validate(m).empty());

    m = bare({Z, O, Z, Z, O, Z});
    m.w4_is_zero = false;
    const auto v = validate(m);
    CHECK(std::find(v.begin(), v.end(), "spin requires w4 = 0 (Wu formula)") != v.end());
}

TEST_CASE("validate: p1 must live in H^4")
{
    auto m = bare({Z, Z, O, O, Z, Z});
    m.p1 = GroupElement(FgAbGroup::cyclic(3), {}, {1});
    CHECK(!validate(m).empty());
    CHECK_THROWS_AS(require_valid(m), InvalidProfile);
    m.p1 = GroupElement(FgAbGroup::free(1), {7}, {});
    CHECK(validate(m).empty());
}

TEST_CASE("cohomology: named examples")
{
    CHECK(cohomology(catalog("wu"), 4, Coefficients::Z) == O);
    CHECK(cohomology(bundle_over_cubic(), 4, Coefficients::Z) == FgAbGroup::cyclic(3));
    CHECK(cohomology(catalog("s3xs2"), 5, Coefficients::Z) == Z);
    CHECK(cohomology(catalog("wu"), 3, Coefficients::Z) == FgAbGroup::cyclic(2));
    CHECK(cohomology(catalog("wu"), 2, Coefficients::Z2) == FgAbGroup::cyclic(2));
    CHECK(cohomology(catalog("wu"), 3, Coefficients::Z2) == FgAbGroup::cyclic(2));
    CHECK(cohomology(catalog("s3xs2"), 2, Coefficients::R) == Z);
    CHECK_THROWS_AS(cohomology(catalog("s5"), 6, Coefficients::Z), std::out_of_range);
    CHECK_THROWS_AS(homology(catalog("s5"), -1, Coefficients::Z2), std::out_of_range);
}

TEST_CASE("semi-characteristics: named examples")
{
    CHECK(semicharacteristic(catalog("s5")) == 1);
    CHECK(semicharacteristic(catalog("wu")) == 0);
    CHECK(semicharacteristic(bundle_over_cubic()) == 1);

    CHECK(kervaire_semicharacteristic(catalog("wu")) == 1);
    CHECK(kervaire_semicharacteristic(catalog("s3xs2")) == 0);
    CHECK(kervaire_semicharacteristic(bundle_over_cubic()) == 1);

    CHECK(semicharacteristic_difference(catalog("wu")) == 1);
    CHECK(semicharacteristic_difference(catalog("s3xs2")) == 0);
}

TEST_CASE("property: UCT duality and the mod 2 Euler relation")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const auto m = gen::random_profile(rng);
        REQUIRE(validate(m).empty());
        for (int k = 0; k <= 5; ++k) {
            const auto h = cohomology(m, k, Coefficients::Z);
            CHECK(h.free_rank() == m.homology[k].free_rank());
            CHECK(h.torsion_subgroup() == (k == 0 ? O : m.homology[k - 1].torsion_subgroup()));
            CHECK(cohomology(m, k, Coefficients::R).free_rank() == m.homology[k].free_rank());
        }
        long euler = 0;
        for (int i = 0; i <= 5; ++i) {
            const long d = mod2_betti(m, i);
            CHECK(static_cast<long>(mod_p_dimension(homology(m, i, Coefficients::Z2), 2)) == d);
            // Mod 2 Poincare duality.
            CHECK(mod_p_dimension(cohomology(m, i, Coefficients::Z2), 2) == mod_p_dimension(homology(m, 5 - i, Coefficients::Z2), 2));
            euler += (i % 2 ? -d : d);
        }
        CHECK(euler == 0);

        const long chi = (mod2_betti(m, 0) + mod2_betti(m, 1) + mod2_betti(m, 2)) % 2;
        CHECK(semicharacteristic(m) == chi);
        const long k = (m.homology[0].free_rank() + m.homology[2].free_rank() + m.homology[4].free_rank()) % 2;
        CHECK(kervaire_semicharacteristic(m) == k);
        CHECK(semicharacteristic_difference(m) == even_factors(m.homology[2]) % 2);
        CHECK((chi + k + semicharacteristic_difference(m)) % 2 == 0);
    }
}

TEST_CASE("property: circle bundles over simply connected bases")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        auto base = gen::random_base(rng);
        const auto c = gen::random_nonzero_vector(rng, base.b2, 4);
        const auto m = circle_bundle({base, c});
        CHECK(validate(m).empty());
        const int parity = static_cast<int>(base.b2 % 2);
        CHECK(semicharacteristic(m) == parity);
        CHECK(kervaire_semicharacteristic(m) == parity);
        CHECK(cohomology(m, 4, Coefficients::Z) == FgAbGroup::cyclic(content(c)));
    }
}

TEST_CASE("coefficient maps on H^4")
{
    auto m = bare({Z, FgAbGroup::from_cyclic_orders(1, std::vector<Integer>{12}), O, FgAbGroup::cyclic(12), Z, Z});
    REQUIRE(validate(m).empty());
    const auto h4 = cohomology(m, 4, Coefficients::Z);
    REQUIRE(h4 == FgAbGroup::from_cyclic_orders(1, std::vector<Integer>{12}));
    CHECK(cohomology(m, 4, Coefficients::Z4) == FgAbGroup(0, {4, 4}));

    const GroupElement x(h4, {5}, {7});
    const auto x4 = reduce_integral(m, x, 4);
    const auto x2 = reduce_integral(m, x, 2);
    CHECK(reduce_mod4_to_mod2(m, x4) == x2);
    // i_* rho_2 = multiplication by 2 on mod 4 classes.
    CHECK(include_mod2_in_mod4(m, x2) == scale(2, x4));
    CHECK(reduce_integral(m, scale(5, x), 5).is_zero());
    CHECK(reduce_integral(m, x, 5) == reduce_integral(m, scale(6, x), 5));
}

TEST_CASE("property: Pontryagin square is a quadratic refinement of the cup square")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const auto m = gen::random_circle_bundle(rng);
        const auto& f = require_fragment(m);
        for (std::size_t bits = 0; bits < (std::size_t{1} << std::min<std::size_t>(f.h2_dim, 6)); ++bits) {
            Mod2Vector x(f.h2_dim, 0), y(f.h2_dim, 0), s(f.h2_dim, 0);
            for (std::size_t i = 0; i < f.h2_dim; ++i) {
                x[i] = (bits >> i) & 1;
                y[i] = gen::coin(rng);
                s[i] = x[i] ^ y[i];
            }
            CHECK(pontryagin_square(m, s) == pontryagin_square(m, x) + pontryagin_square(m, y) + include_mod2_in_mod4(m, cup_product(m, x, y)));
            CHECK(reduce_mod4_to_mod2(m, pontryagin_square(m, x)) == cup_product(m, x, x));
            CHECK(cup_product(m, x, y) == cup_product(m, y, x));
        }
    }
}

TEST_CASE("ring operations need a fragment")
{
    auto m = bare({Z, O, Z, Z, O, Z});
    CHECK_THROWS_AS(require_fragment(m), InsufficientRingData);
    CHECK_THROWS_AS(pontryagin_square(m, {1}), InsufficientRingData);
    try {
        require_fragment(m);
    }
    catch (const InsufficientRingData& e) {
        CHECK(std::string(e.what()).rfind("insufficient ring data", 0) == 0);
    }
}

TEST_CASE("validate: fragment consistency")
{
    auto m = catalog("wu");
    m.mod2->w2 = {0};
    CHECK(!validate(m).empty());
    m = catalog("s3~xs2");
    m.mod2->w2 = {1, 0};
    CHECK(!validate(m).empty());
    CHECK(validate(bundle_over_cubic()).empty());
}
