#include <gtest/gtest.h>

#include "hyper/absorbing.hpp"
#include "hyper/ideals.hpp"
#include "oracles.hpp"

using namespace hyper;

namespace {

std::vector<Hyperring> order6_grid()
{
    std::vector<Hyperring> out;
    for (int m : {2, 3, 4, 5, 6})
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

TEST(Absorbing, Zt150)
{
    ZTContext ctx({2, 4}, 150);
    EXPECT_TRUE(zt_check_absorbing(ctx, {4, 3, AbsorbingKind::Plain}).holds);
    auto v = zt_check_absorbing(ctx, {3, 2, AbsorbingKind::Plain});
    ASSERT_FALSE(v.holds);
    EXPECT_EQ(v.witness->tuple, (std::vector<Element>{3, 5, 5}));
    EXPECT_TRUE(zt_witness_fails(ctx, *v.witness));
    auto two = zt_is_v_absorbing(ctx, 2);
    ASSERT_FALSE(two.holds);
    EXPECT_EQ(two.witness->tuple, (std::vector<Element>{3, 5, 5}));
    auto idx = zt_abs_indices(ctx, 6);
    EXPECT_EQ(idx.big_abs, 3);
    EXPECT_LE(idx.small_abs, idx.big_abs);
}

TEST(Absorbing, ParallelMatchesSerial)
{
    ZTContext ctx({2, 4}, 150);
    for (int v = 1; v <= 2; ++v) {
        AbsorbingQuery q{v + 1, v, AbsorbingKind::Plain};
        auto a = zt_check_absorbing(ctx, q, {1});
        auto b = zt_check_absorbing(ctx, q, {4});
        ASSERT_EQ(a.holds, b.holds);
        if (!a.holds)
            EXPECT_EQ(a.witness->tuple, b.witness->tuple);
    }
}

TEST(Absorbing, R6Examples)
{
    auto r6 = build_zmt(6, {1, 3});
    EXPECT_TRUE(is_v_absorbing(r6, {0}, 2).holds);
    EXPECT_FALSE(is_v_absorbing(r6, {0}, 1).holds);
    EXPECT_TRUE(is_ab_uv_absorbing(r6, {0, 3}, 3, 2).holds);
    auto idx = abs_indices(r6, {0}, 6);
    EXPECT_EQ(idx.big_abs, 2);
    auto prime_idx = abs_indices(r6, {0, 3}, 6);
    EXPECT_EQ(prime_idx.big_abs, 1);
    EXPECT_EQ(prime_idx.small_abs, 1);
    EXPECT_THROW((void)is_uv_absorbing(r6, r6.carrier(), 3, 2), Error);
    EXPECT_THROW((void)is_uv_absorbing(r6, {0}, 2, 2), Error);
    EXPECT_THROW((void)is_uv_absorbing(r6, {0, 1}, 3, 2), Error);
}

TEST(Absorbing, MatchesNaiveOracle)
{
    int checked = 0;
    for (const auto& r : order6_grid())
        for (const auto& q : enumerate_hyperideals(r)) {
            if (!is_proper(r, q))
                continue;
            for (int u = 2; u <= 4; ++u)
                for (int v = 1; v < u; ++v)
                    for (auto kind : {AbsorbingKind::Plain, AbsorbingKind::AB,
                                      AbsorbingKind::Prime}) {
                        AbsorbingQuery query{u, v, kind};
                        auto fast = check_absorbing(r, q, query);
                        bool slow = oracle::naive_absorbing(r, q, query);
                        ASSERT_EQ(fast.holds, slow)
                            << r.name() << " " << q.to_string() << " " << u << "," << v << " "
                            << to_string(kind);
                        if (!fast.holds)
                            ASSERT_TRUE(witness_fails(r, q, *fast.witness));
                        ++checked;
                    }
        }
    EXPECT_GT(checked, 0);
}

TEST(Absorbing, ZtMatchesIntegerOracle)
{
    for (auto T : std::vector<std::vector<std::int64_t>>{{2, 4}, {1, 3}, {2, 3}})
        for (int n = 2; n <= 12; ++n) {
            ZTContext ctx(T, n);
            std::vector<Element> residues;
            for (int r = 0; r < n; ++r)
                residues.push_back(r);
            auto in_q = [&](const std::vector<Element>& s) {
                std::vector<std::int64_t> lifts(s.begin(), s.end());
                for (auto p : ctx.integer_hyperproduct(lifts))
                    if (p % n != 0)
                        return false;
                return true;
            };
            for (int u = 2; u <= 4; ++u)
                for (int v = 1; v < u; ++v)
                    for (auto kind : {AbsorbingKind::Plain, AbsorbingKind::Prime}) {
                        AbsorbingQuery query{u, v, kind};
                        ASSERT_EQ(zt_check_absorbing(ctx, query).holds,
                                  oracle::naive_absorbing(residues, query, in_q))
                            << n << " " << u << "," << v;
                    }
        }
}

TEST(Absorbing, IdealFormAgreesOnR6)
{
    auto r6 = build_zmt(6, {1, 3});
    std::vector<ElementSet> proper;
    for (const auto& i : enumerate_hyperideals(r6))
        if (is_proper(r6, i))
            proper.push_back(i);
    for (const auto& q : proper)
        for (auto [u, v] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}}) {
            AbsorbingQuery query{u, v, AbsorbingKind::Prime};
            EXPECT_EQ(ideal_product_prime_check(r6, q, query, proper).holds,
                      is_uv_absorbing_prime(r6, q, u, v).holds);
        }
    EXPECT_THROW((void)ideal_product_prime_check(r6, r6.carrier(), {2, 1}, proper), Error);
}
