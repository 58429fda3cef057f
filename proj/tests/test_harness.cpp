#include <gtest/gtest.h>

#include <set>

#include "hyper/harness.hpp"

using namespace hyper;

namespace {

InstanceSpec small_spec()
{
    InstanceSpec s = default_spec();
    s.zmt_moduli = {4, 6};
    s.small_max_order = 3;
    s.product_factor_max_order = 3;
    s.product_max_order = 9;
    s.quotient_max_order = 6;
    s.matrix_max_order = 2;
    s.localization_max_order = 4;
    s.zt = {{{2, 4}, 15}};
    s.zt_grid_max_n = 6;
    s.max_u = 3;
    return s;
}

const InstanceStream& small_stream()
{
    static const InstanceStream stream = InstanceStream::build(small_spec());
    return stream;
}

}  // namespace

TEST(Harness, RegistryIdsUnique)
{
    const auto& reg = registry();
    EXPECT_GE(reg.size(), 27U);
    std::set<std::string> ids;
    for (const auto& p : reg) {
        EXPECT_FALSE(p.statement.empty()) << p.id;
        EXPECT_TRUE(ids.insert(p.id).second) << p.id;
    }
}

TEST(Harness, EveryIdResolves)
{
    for (const auto& p : registry()) {
        const TheoremVerdict v = run_property(p.id, small_stream());
        EXPECT_EQ(v.id, p.id);
        EXPECT_FALSE(v.incomplete) << p.id;
    }
}

TEST(Harness, UnknownIdRejected)
{
    try {
        (void)run_property("NO-SUCH", small_stream());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownTheorem);
    }
}

TEST(Harness, ReportDeterministic)
{
    const auto& s = small_stream();
    const std::string a = format_report(s, run_all(s, 1));
    const std::string b = format_report(s, run_all(s, 3));
    EXPECT_EQ(a, b);
    const InstanceStream again = InstanceStream::build(small_spec());
    EXPECT_EQ(a, format_report(again, run_all(again, 2)));
    EXPECT_NE(a.find("summary: theorems="), std::string::npos);
}

TEST(Harness, SeedChangesOrderNotVerdicts)
{
    InstanceSpec spec = small_spec();
    spec.seed = 7;
    const InstanceStream seeded = InstanceStream::build(spec);
    const auto x = run_all(small_stream(), 1);
    const auto y = run_all(seeded, 1);
    ASSERT_EQ(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        EXPECT_EQ(x[i].hypothesis_hits, y[i].hypothesis_hits) << x[i].id;
        EXPECT_EQ(x[i].failures, y[i].failures) << x[i].id;
    }
}

TEST(Harness, BudgetMarksIncomplete)
{
    InstanceSpec spec = small_spec();
    spec.budget = 2;
    const InstanceStream s = InstanceStream::build(spec);
    const TheoremVerdict v = run_property("MONOTONICITY", s);
    EXPECT_TRUE(v.incomplete);
    EXPECT_EQ(v.status(), VerdictStatus::Incomplete);
    EXPECT_LE(v.scanned, 2U);
    EXPECT_NE(format_report(s, {v}).find("incomplete: budget 2 reached"), std::string::npos);
}

TEST(Harness, VerdictStatusPrecedence)
{
    TheoremVerdict v;
    EXPECT_EQ(v.status(), VerdictStatus::Vacuous);
    v.hypothesis_hits = 3;
    EXPECT_EQ(v.status(), VerdictStatus::Pass);
    v.incomplete = true;
    EXPECT_EQ(v.status(), VerdictStatus::Incomplete);
    v.failures = 1;
    EXPECT_EQ(v.status(), VerdictStatus::Fail);
}

TEST(Harness, SpecParsing)
{
    const InstanceSpec s = parse_spec(R"({"max_u": 3, "seed": 11, "ideals": "generated"})");
    EXPECT_EQ(s.max_u, 3);
    EXPECT_EQ(s.seed, 11U);
    EXPECT_EQ(s.ideals, "generated");
    EXPECT_EQ(parse_spec("{}").max_u, default_spec().max_u);
    EXPECT_EQ(parse_spec(describe_spec(s)).seed, 11U);
}

TEST(Harness, BadSpecs)
{
    for (const char* text : {
             R"({"max_u": 9})",
             R"({"max_u": 1})",
             R"({"colour": 1})",
             R"({"ideals": "some"})",
             R"({"zt": [{"T": [2], "n": 15}]})",
             R"([1, 2])",
             "{not json",
         }) {
        try {
            (void)parse_spec(text);
            ADD_FAILURE() << text;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::BadSpec) << text;
        }
    }
}

TEST(Harness, ShuffleIsPermutation)
{
    const auto a = shuffled_indices(50, 3, "x");
    EXPECT_EQ(a, shuffled_indices(50, 3, "x"));
    EXPECT_NE(a, shuffled_indices(50, 4, "x"));
    std::set<std::size_t> seen(a.begin(), a.end());
    EXPECT_EQ(seen.size(), 50U);
    EXPECT_EQ(*seen.rbegin(), 49U);
}

TEST(Harness, CoreEntriesNonVacuous)
{
    for (const char* id : {"MONOTONICITY", "INTERSECTION", "RADICAL-FORM", "IDEAL-FORM",
                           "GAMMA-TRANSFER", "PRODUCT-AB", "QUOTIENT"}) {
        const TheoremVerdict v = run_property(id, small_stream());
        EXPECT_GT(v.hypothesis_hits, 0U) << id;
        EXPECT_EQ(v.failures, 0U) << id;
    }
}

TEST(Harness, FailuresCarryWitnesses)
{
    const TheoremVerdict v = run_property("LOCALIZATION", small_stream());
    ASSERT_GT(v.failures, 0U);
    ASSERT_FALSE(v.witnesses.empty());
    EXPECT_NE(v.witnesses.front().find("S^-1"), std::string::npos);
}
