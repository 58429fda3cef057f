#include <gtest/gtest.h>

#include "hyper/constructions.hpp"

using namespace hyper;

TEST(Product, R6Squared)
{
    auto r6 = build_zmt(6, {1, 3});
    auto dp = direct_product(r6, r6);
    EXPECT_EQ(dp.ring.order(), 36);
    EXPECT_TRUE(dp.ring.is_valid());
    EXPECT_EQ(dp.ring.hyp(dp.pair(1, 0), dp.pair(1, 0)), dp.embed({1, 3}, {0}));
    EXPECT_EQ(dp.ring.units(), dp.embed(r6.units(), r6.units()));
}

TEST(Product, TrivialFactor)
{
    auto r6 = build_zmt(6, {1, 3});
    auto zero = build_zmt(1, {0});
    auto dp = direct_product(r6, zero);
    for (Element x = 0; x < 6; ++x)
        for (Element y = 0; y < 6; ++y)
            EXPECT_EQ(dp.ring.hyp(dp.pair(x, 0), dp.pair(y, 0)), dp.embed(r6.hyp(x, y), {0}));
}

TEST(Matrix, DiagonalEmbedding)
{
    auto r6 = build_zmt(6, {1, 3});
    MatrixRing mr(r6);
    EXPECT_EQ(mr.order(), 1296);
    EXPECT_TRUE(mr.lift_is_hyperideal({0}));
    for (Element x = 0; x < 6; ++x)
        for (Element y = 0; y < 6; ++y) {
            std::vector<int> expected;
            r6.hyp(x, y).for_each([&](Element z) { expected.push_back(mr.encode(z, 0, 0, 0)); });
            EXPECT_EQ(mr.product(mr.encode(x, 0, 0, 0), mr.encode(y, 0, 0, 0)), expected);
        }
    EXPECT_EQ(mr.product(0, 0), std::vector<int>{0});
    EXPECT_THROW(MatrixRing(r6, 2, 100), Error);
    EXPECT_FALSE(mr.materialize().has_value());
}

TEST(Matrix, MaterializedMatchesLazy)
{
    auto a = build_zmt(3, {1, 2});
    MatrixRing mr(a);
    auto ring = mr.materialize();
    ASSERT_TRUE(ring.has_value());
    for (int x = 0; x < mr.order(); ++x)
        for (int y = 0; y < mr.order(); ++y) {
            auto lazy = mr.product(x, y);
            ASSERT_EQ(ring->hyp(x, y).members(), std::vector<Element>(lazy.begin(), lazy.end()));
        }
    EXPECT_FALSE(ring->flags().hyperop_commutative);
}

TEST(Monomial, ProductRule)
{
    auto r6 = build_zmt(6, {1, 3});
    MonomialExtension ext(r6, 4);
    std::vector<Monomial> seq{{2, 1}, {5, 2}};
    auto [coeffs, degree] = ext.multiply(seq);
    EXPECT_EQ(coeffs, r6.hyp(2, 5));
    EXPECT_EQ(degree, 3);
    std::vector<Monomial> deg0{{2, 0}, {5, 0}};
    EXPECT_EQ(ext.multiply(deg0).first, r6.hyp(2, 5));
    std::vector<Monomial> big{{1, 3}, {1, 2}};
    EXPECT_THROW((void)ext.multiply(big), Error);
}

TEST(Monomial, MirrorsBaseVerdict)
{
    auto r6 = build_zmt(6, {1, 3});
    MonomialExtension ext(r6, 6);
    for (const auto& q : enumerate_hyperideals(r6)) {
        if (!is_proper(r6, q))
            continue;
        for (auto [u, v] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}}) {
            AbsorbingQuery query{u, v, AbsorbingKind::Prime};
            if (is_uv_absorbing_prime(r6, q, u, v).holds)
                EXPECT_TRUE(ext.check(q, query).holds);
        }
    }
}

TEST(Quotient, R6Cosets)
{
    auto r6 = build_zmt(6, {1, 3});
    auto q3 = quotient(r6, {0, 3});
    EXPECT_EQ(q3.ring.order(), 3);
    EXPECT_TRUE(q3.ring.is_valid());
    auto q2 = quotient(r6, {0, 2, 4});
    EXPECT_EQ(q2.ring.order(), 2);
    auto q0 = quotient(r6, {0});
    EXPECT_EQ(q0.ring.order(), 6);
    for (Element x = 0; x < 6; ++x)
        for (Element y = 0; y < 6; ++y)
            EXPECT_EQ(q0.ring.hyp(x, y), r6.hyp(x, y));
    // R6/{0,3} is Z3 with T' = {1, 3 mod 3} = {0, 1}.
    auto z3 = build_zmt(3, {0, 1});
    for (Element x = 0; x < 3; ++x)
        for (Element y = 0; y < 3; ++y)
            EXPECT_EQ(q3.ring.hyp(x, y), z3.hyp(x, y));
    EXPECT_THROW((void)quotient(r6, {0, 1}), Error);
}

TEST(Quotient, MapTransport)
{
    auto r6 = build_zmt(6, {1, 3});
    auto qr = quotient(r6, {0, 3});
    auto hom = quotient_map(r6, qr);
    EXPECT_TRUE(hom.surjective());
    EXPECT_EQ(hom.kernel(), (ElementSet{0, 3}));
    auto report = transport_checks(hom, {0}, {0, 3});
    EXPECT_EQ(report.preimage, (ElementSet{0, 3}));
    EXPECT_EQ(report.image, ElementSet{0});
    // 1 o 1 = {1,3} meets {0,3} without lying in it.
    EXPECT_TRUE(report.image_precondition.has_value());
    auto bad = transport_checks(hom, {0}, {0});
    EXPECT_EQ(*bad.image_precondition, "kernel not contained in Q");
    EXPECT_THROW((void)transport_image(hom, {0}), Error);
    auto z6 = build_zmt(6, {1});
    auto zq = quotient(z6, {0, 3});
    auto zhom = quotient_map(z6, zq);
    EXPECT_EQ(transport_image(zhom, {0, 3}), ElementSet{0});
}

TEST(Homomorphism, IdentityAndProjection)
{
    auto r6 = build_zmt(6, {1, 3});
    std::vector<Element> id{0, 1, 2, 3, 4, 5};
    auto hom = make_good_homomorphism(r6, r6, id);
    EXPECT_EQ(hom.preimage({0, 3}), (ElementSet{0, 3}));

    auto z2 = build_zmt(2, {1});
    auto dp = direct_product(r6, z2);
    std::vector<Element> proj;
    for (Element p = 0; p < dp.ring.order(); ++p)
        proj.push_back(dp.left(p));
    auto pi = make_good_homomorphism(dp.ring, r6, proj);
    EXPECT_EQ(pi.preimage({0, 3}), dp.embed({0, 3}, z2.carrier()));

    std::vector<Element> bad{0, 1, 1, 1, 1, 1};
    EXPECT_THROW((void)make_good_homomorphism(r6, r6, bad), Error);
}

TEST(Fundamental, R6TwoClasses)
{
    auto r6 = build_zmt(6, {1, 3});
    auto cache = CClassCache::build(r6);
    auto fr = fundamental_ring(r6, cache);
    ASSERT_EQ(fr.classes.size(), 2U);
    EXPECT_EQ(fr.classes[0], (ElementSet{0, 2, 4}));
    EXPECT_EQ(fr.classes[1], (ElementSet{1, 3, 5}));
    EXPECT_TRUE(fr.ring.is_valid());
    EXPECT_TRUE(fr.ring.flags().strongly_distributive);
    EXPECT_EQ(gamma_classes_literal(r6, cache), fr.classes);
}

TEST(Fundamental, OrdinaryRingSingletons)
{
    auto z6 = build_zmt(6, {1});
    auto fr = fundamental_ring(z6, CClassCache::build(z6));
    EXPECT_EQ(fr.classes.size(), 6U);
}

TEST(Fundamental, KernelMatchesLiteralClosure)
{
    for (int m : {2, 3, 4, 5, 6})
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                auto r = build_zmt(m, {a, b});
                auto cache = CClassCache::build(r);
                auto fr = fundamental_ring(r, cache);
                EXPECT_EQ(gamma_classes_literal(r, cache), fr.classes) << r.name();
                EXPECT_TRUE(fr.ring.is_valid());
            }
}

TEST(Localization, R6)
{
    auto r6 = build_zmt(6, {1, 3});
    auto trivial = localization(r6, {1});
    EXPECT_EQ(trivial.order(), 6);
    auto at_units = localization(r6, {1, 5});
    EXPECT_EQ(at_units.order(), 6);
    // A zero divisor pair in S collapses everything.
    auto collapsed = localization(r6, {0, 1});
    EXPECT_EQ(collapsed.order(), 1);
    EXPECT_THROW((void)localization(r6, {1}, ClosureMode::Strict), Error);
    EXPECT_THROW((void)localization(r6, {5}), Error);
}

TEST(Localization, OrdinaryRingAtUnitsIsIsomorphic)
{
    auto z6 = build_zmt(6, {1});
    auto loc = localization(z6, {1, 5}, ClosureMode::Strict);
    EXPECT_EQ(loc.order(), 6);
    auto ring = loc.as_hyperring();
    ASSERT_TRUE(ring.has_value());
    EXPECT_EQ(ring->units().size(), 2);
    EXPECT_EQ(loc.extend_ideal({0, 3}).size(), 2);
}
