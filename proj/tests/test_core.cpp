#include <gtest/gtest.h>

#include <numeric>

#include "hyper/hyperring.hpp"
#include "hyper/zt_context.hpp"

using namespace hyper;

namespace {

// Independent table: a o b over Z6 with T = {1,3}, written out by hand.
std::vector<ElementSet> r6_cells()
{
    std::vector<ElementSet> cells;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            cells.push_back({a * b % 6, 3 * a * b % 6});
    return cells;
}

std::vector<Element> mod_add(int m)
{
    std::vector<Element> add;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            add.push_back((a + b) % m);
    return add;
}

}  // namespace

TEST(Hyperring, R6Validates)
{
    auto r6 = validate_hyperring(6, mod_add(6), r6_cells());
    EXPECT_TRUE(r6.is_valid());
    EXPECT_TRUE(r6.identities().contains(1));
    EXPECT_EQ(r6.units(), (ElementSet{1, 5}));
    EXPECT_FALSE(r6.flags().strongly_distributive);
}

TEST(Hyperring, NonStrongWitnessRecomputes)
{
    auto r6 = build_zmt(6, {1, 3});
    ASSERT_TRUE(r6.report().non_strong_witness.has_value());
    auto [x, y, z] = *r6.report().non_strong_witness;
    ElementSet lhs = r6.hyp(x, r6.add(y, z));
    ElementSet rhs = r6.sum(r6.hyp(x, y), r6.hyp(x, z));
    EXPECT_NE(lhs, rhs);
    // The documented triple x = y = z = 1.
    EXPECT_EQ(r6.hyp(1, 2), (ElementSet{0, 2}));
    EXPECT_EQ(r6.sum(r6.hyp(1, 1), r6.hyp(1, 1)), (ElementSet{0, 2, 4}));
}

TEST(Hyperring, EmptyCellRejected)
{
    auto cells = r6_cells();
    cells[2 * 6 + 3] = ElementSet{};
    try {
        (void)validate_hyperring(6, mod_add(6), cells);
        FAIL() << "expected rejection";
    } catch (const AxiomError& e) {
        EXPECT_EQ(e.violation().kind, ErrorKind::EmptyHyperproduct);
    }
}

TEST(Hyperring, NonAssociativeRejected)
{
    // Z3 with 1 o 1 = {1,2} and every other cell the ordinary product.
    std::vector<ElementSet> cells;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            cells.push_back({a * b % 3});
    cells[1 * 3 + 1] = {1, 2};
    auto report = check_axioms(3, mod_add(3), cells);
    EXPECT_FALSE(report.flags.valid());
    ASSERT_TRUE(report.violation.has_value());
}

TEST(Hyperring, NotAGroupRejected)
{
    auto add = mod_add(4);
    add[1 * 4 + 1] = 1;
    auto report = check_axioms(4, add, std::vector<ElementSet>(16, ElementSet{0}));
    ASSERT_TRUE(report.violation.has_value());
    EXPECT_EQ(report.violation->kind, ErrorKind::NotAGroup);
}

TEST(Hyperring, OrdinaryRingUnits)
{
    for (int m = 2; m <= 12; ++m) {
        auto r = build_zmt(m, {1});
        ElementSet expected;
        for (int x = 1; x < m; ++x)
            if (std::gcd(x, m) == 1)
                expected.insert(x);
        EXPECT_EQ(r.units(), expected) << m;
        EXPECT_TRUE(r.flags().strongly_distributive);
    }
}

TEST(Hyperring, Z8Units)
{
    auto r = build_zmt(8, {1, 3});
    ElementSet expected;
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y)
            if (x * y % 8 == 1 || 3 * x * y % 8 == 1)
                expected.insert(x);
    EXPECT_EQ(r.units(), expected);
}

TEST(Hyperring, ZmtFamilyAlwaysValid)
{
    for (int m = 2; m <= 16; ++m)
        for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b)
                for (int c = b; c < m; ++c) {
                    std::vector<int> T{a};
                    if (b != a)
                        T.push_back(b);
                    if (c != b)
                        T.push_back(c);
                    auto report = [&] {
                        std::vector<ElementSet> cells;
                        for (int x = 0; x < m; ++x)
                            for (int y = 0; y < m; ++y) {
                                ElementSet s;
                                for (int t : T)
                                    s.insert(x * t * y % m);
                                cells.push_back(s);
                            }
                        return check_axioms(m, mod_add(m), cells);
                    }();
                    EXPECT_TRUE(report.flags.valid()) << m;
                }
}

TEST(Hyperring, FoldOrderIndependence)
{
    for (int m : {4, 6, 8})
        for (auto T : std::vector<std::vector<int>>{{1, 3}, {2, 3}, {1, 2}}) {
            auto r = build_zmt(m, T);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    for (int c = 0; c < m; ++c)
                        for (int d = 0; d < m; ++d) {
                            auto left = r.hyperproduct({a, b, c, d});
                            auto bc = r.table().product(ElementSet{b}, ElementSet{c});
                            auto right = r.table().product(
                                ElementSet{a}, r.table().product(bc, ElementSet{d}));
                            ASSERT_EQ(left, right);
                        }
        }
}

TEST(Hyperring, SubsetProduct)
{
    auto r6 = build_zmt(6, {1, 3});
    std::vector<ElementSet> ops{ElementSet{1, 2, 5}, ElementSet{0}};
    EXPECT_EQ(r6.subset_hyperproduct(ops), ElementSet{0});
    std::vector<ElementSet> bad{ElementSet{1}, ElementSet{}};
    EXPECT_THROW((void)r6.subset_hyperproduct(bad), Error);
}

TEST(ZT, WorkedProducts)
{
    ZTContext ctx({2, 4}, 150);
    std::vector<std::int64_t> a{3, 5};
    std::vector<std::int64_t> b{3, 5, 5};
    EXPECT_EQ(ctx.integer_hyperproduct(a), (std::vector<std::int64_t>{30, 60}));
    EXPECT_EQ(ctx.integer_hyperproduct(b), (std::vector<std::int64_t>{300, 600, 1200}));
    std::vector<int> ra{3, 5};
    std::vector<int> rb{3, 5, 5};
    std::vector<int> z{0};
    EXPECT_FALSE(zt_hyperproduct_in_ideal(ctx, ra));
    EXPECT_TRUE(zt_hyperproduct_in_ideal(ctx, rb));
    EXPECT_TRUE(zt_hyperproduct_in_ideal(ctx, z));
}

TEST(ZT, ResidueAgreesWithIntegerLifts)
{
    for (auto T : std::vector<std::vector<std::int64_t>>{{2, 4}, {1, 3}, {2, 3}})
        for (int n = 2; n <= 12; ++n) {
            ZTContext ctx(T, n);
            // Length 2 over lifts in [-3n, 3n]: exhaustive.
            for (std::int64_t x = -3 * n; x <= 3 * n; ++x)
                for (std::int64_t y = -3 * n; y <= 3 * n; ++y) {
                    std::vector<std::int64_t> f{x, y};
                    bool direct = true;
                    for (auto p : ctx.integer_hyperproduct(f))
                        direct = direct && p % n == 0;
                    std::vector<int> r{ctx.reduce(x), ctx.reduce(y)};
                    ASSERT_EQ(direct, zt_hyperproduct_in_ideal(ctx, r));
                }
        }
}
