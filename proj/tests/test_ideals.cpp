#include <gtest/gtest.h>

#include "hyper/ideals.hpp"
#include "oracles.hpp"

using namespace hyper;

namespace {

std::vector<Hyperring> small_grid()
{
    std::vector<Hyperring> out;
    for (int m : {2, 3, 4, 5, 6, 8, 9})
        for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b) {
                std::vector<int> T{a};
                if (b != a)
                    T.push_back(b);
                out.push_back(build_zmt(m, T));
            }
    return out;
}

}  // namespace

TEST(Ideals, R6Membership)
{
    auto r6 = build_zmt(6, {1, 3});
    EXPECT_TRUE(is_hyperideal(r6, {0, 3}));
    EXPECT_TRUE(is_hyperideal(r6, {0, 2, 4}));
    EXPECT_FALSE(is_hyperideal(r6, {0, 1}));
}

TEST(Ideals, R6Enumeration)
{
    auto r6 = build_zmt(6, {1, 3});
    std::vector<ElementSet> expected{{0}, {0, 3}, {0, 2, 4}, ElementSet::full(6)};
    EXPECT_EQ(enumerate_hyperideals(r6), expected);
}

TEST(Ideals, SmallRingLattices)
{
    for (int p : {2, 3, 5, 7}) {
        std::vector<ElementSet> expected{{0}, ElementSet::full(p)};
        EXPECT_EQ(enumerate_hyperideals(build_zmt(p, {1})), expected);
    }
    std::vector<ElementSet> z4{{0}, {0, 2}, ElementSet::full(4)};
    EXPECT_EQ(enumerate_hyperideals(build_zmt(4, {1})), z4);
}

TEST(Ideals, EnumerationMatchesSubsetOracle)
{
    for (const auto& r : small_grid()) {
        auto fast = enumerate_hyperideals(r);
        auto slow = oracle::hyperideals_by_subsets(r);
        std::sort(slow.begin(), slow.end(),
                  [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); });
        ASSERT_EQ(fast, slow) << r.name();
        EXPECT_EQ(fast.back(), r.carrier());
    }
}

TEST(Ideals, Generation)
{
    auto r6 = build_zmt(6, {1, 3});
    EXPECT_EQ(generated_hyperideal(r6, {3}), (ElementSet{0, 3}));
    EXPECT_EQ(generated_hyperideal(r6, {2}), (ElementSet{0, 2, 4}));
    EXPECT_EQ(generated_hyperideal(r6, {0}), (ElementSet{0}));
    for (const auto& r : small_grid()) {
        auto all = enumerate_hyperideals(r);
        for (Element g = 0; g < r.order(); ++g) {
            auto gen = generated_hyperideal(r, {g});
            ASSERT_TRUE(is_hyperideal(r, gen));
            // Least: contained in every ideal holding g.
            for (const auto& i : all)
                if (i.contains(g))
                    ASSERT_TRUE(gen.is_subset_of(i));
        }
    }
}

TEST(Ideals, PrimeMaximal)
{
    auto r6 = build_zmt(6, {1, 3});
    EXPECT_TRUE(is_prime(r6, {0, 3}));
    EXPECT_FALSE(is_prime(r6, {0}));
    EXPECT_TRUE(r6.hyp(2, 3).is_subset_of({0}));
    EXPECT_TRUE(is_maximal(r6, {0, 3}));
    EXPECT_TRUE(is_maximal(r6, {0, 2, 4}));
    EXPECT_FALSE(is_maximal(r6, {0}));
    EXPECT_THROW((void)is_prime(r6, r6.carrier()), Error);
}

TEST(Ideals, CClasses)
{
    auto r6 = build_zmt(6, {1, 3});
    auto cache = CClassCache::build(r6);
    EXPECT_FALSE(is_c_hyperideal({0}, cache));
    EXPECT_TRUE(is_c_hyperideal({0, 2, 4}, cache));
    EXPECT_TRUE(is_c_hyperideal(r6.carrier(), cache));
    EXPECT_EQ(cache.fundamental_kernel(), (ElementSet{0, 2, 4}));
}

TEST(Ideals, StrongCKernelMatchesSumEnumeration)
{
    for (const auto& r : small_grid()) {
        if (r.order() > 6)
            continue;
        auto cache = CClassCache::build(r);
        auto sums = cache.enumerate_sums(r);
        for (const auto& q : enumerate_hyperideals(r)) {
            bool literal = true;
            for (const auto& d : sums)
                if (d.intersects(q) && !d.is_subset_of(q))
                    literal = false;
            ASSERT_EQ(literal, is_strong_c_hyperideal(q, cache)) << r.name() << q.to_string();
        }
    }
}

TEST(Ideals, RadicalAndPowers)
{
    auto r6 = build_zmt(6, {1, 3});
    EXPECT_EQ(radical(r6, {0}).members, (ElementSet{0}));
    EXPECT_EQ(radical(r6, {0, 3}).members, (ElementSet{0, 3}));
    EXPECT_EQ(power_members(r6, {0}), (ElementSet{0}));
    auto full = radical(r6, r6.carrier());
    EXPECT_TRUE(full.no_prime_above);
    EXPECT_EQ(full.members, r6.carrier());
    for (const auto& r : small_grid()) {
        auto cache = CClassCache::build(r);
        for (const auto& q : enumerate_hyperideals(r)) {
            auto rad = radical(r, q).members;
            auto pm = power_members(r, q);
            ASSERT_TRUE(pm.is_subset_of(rad));
            if (is_c_hyperideal(q, cache))
                ASSERT_EQ(pm, rad) << r.name() << q.to_string();
        }
    }
}

TEST(Ideals, Colon)
{
    auto r6 = build_zmt(6, {1, 3});
    EXPECT_EQ(colon(r6, {0, 3}, 2), (ElementSet{0, 3}));
    EXPECT_EQ(colon(r6, {0}, 3), (ElementSet{0, 2, 4}));
    EXPECT_EQ(colon(r6, {0, 3}, 3), r6.carrier());
    for (const auto& r : small_grid())
        for (const auto& q : enumerate_hyperideals(r))
            for (Element x = 0; x < r.order(); ++x) {
                auto c = colon(r, q, x);
                ASSERT_TRUE(q.is_subset_of(c));
                ASSERT_TRUE(is_hyperideal(r, c));
            }
}

TEST(Ideals, JacobsonLocalCoprime)
{
    auto r6 = build_zmt(6, {1, 3});
    EXPECT_EQ(jacobson(r6), (ElementSet{0}));
    EXPECT_FALSE(is_local(r6));
    EXPECT_TRUE(are_coprime(r6, {0, 3}, {0, 2, 4}));
    EXPECT_TRUE(are_coprime(r6, r6.carrier(), {0}));
    EXPECT_TRUE(is_local(build_zmt(4, {1})));
}

TEST(Ideals, IntersectionIsIdeal)
{
    for (const auto& r : small_grid()) {
        auto all = enumerate_hyperideals(r);
        for (const auto& a : all)
            for (const auto& b : all)
                ASSERT_TRUE(is_hyperideal(r, a & b));
    }
}
