#include <gtest/gtest.h>

#include "hyper/ring_io.hpp"

using namespace hyper;

TEST(RingIO, ZmtShorthand)
{
    auto d = parse_ring(R"({"zmt": {"m": 6, "T": [3, 1, 7]}})");
    ASSERT_TRUE(d.ring.has_value());
    EXPECT_EQ(d.ring->hyp(1, 1), (ElementSet{1, 3}));
    EXPECT_EQ(emit_ring(d), "{\n  \"zmt\": {\"m\": 6, \"T\": [1, 3]}\n}\n");
}

TEST(RingIO, ZtShorthand)
{
    auto d = parse_ring(R"({"zt": {"T": [4, 2], "n": 150}})");
    ASSERT_TRUE(d.zt.has_value());
    EXPECT_EQ(d.zt->T, (std::vector<std::int64_t>{2, 4}));
    EXPECT_EQ(emit_ring(d), "{\n  \"zt\": {\"T\": [2, 4], \"n\": 150}\n}\n");
    EXPECT_THROW((void)parse_ring(R"({"zt": {"T": [2], "n": 150}})"), Error);
}

TEST(RingIO, TableRoundTripIsByteStable)
{
    auto r6 = build_zmt(6, {1, 3});
    std::string first = emit_ring(r6);
    auto parsed = parse_ring(first);
    EXPECT_EQ(emit_ring(parsed), first);
    EXPECT_EQ(parsed.ring->hyp(2, 3), r6.hyp(2, 3));
    EXPECT_EQ(parsed.ring->name(), r6.name());
}

TEST(RingIO, Labels)
{
    std::string text = R"({
  "order": 2,
  "labels": ["zero", "one"],
  "add": [[0, 1], [1, 0]],
  "hyp": [[[0], [0]], [[0], [1]]]
})";
    auto d = parse_ring(text);
    EXPECT_EQ(d.label(1), "one");
    EXPECT_EQ(parse_ideal(*d.ring, "zero", d.labels), ElementSet{0});
    EXPECT_EQ(emit_ring(parse_ring(emit_ring(d))), emit_ring(d));
}

TEST(RingIO, Rejections)
{
    EXPECT_THROW((void)parse_ring("{"), Error);
    EXPECT_THROW((void)parse_ring(R"({"order": 2, "add": [[0,1],[1,0]]})"), Error);
    EXPECT_THROW((void)parse_ring(R"({"order": 2, "add": [[0,1],[1,0]], "hyp": [[[0],[]],[[],[1]]]})"),
                 Error);
    EXPECT_THROW((void)parse_ring(R"({"zmt": {"m": 6, "T": [1]}, "extra": 1})"), Error);
}

TEST(RingIO, Ideals)
{
    auto r6 = build_zmt(6, {1, 3});
    EXPECT_EQ(parse_ideal(r6, "0,3"), (ElementSet{0, 3}));
    EXPECT_EQ(parse_ideal(r6, "gen:[2]"), (ElementSet{0, 2, 4}));
    EXPECT_THROW((void)parse_ideal(r6, "0,9"), Error);
    EXPECT_THROW((void)parse_ideal(r6, "x"), Error);
    EXPECT_EQ(parse_int_list("[2, 4]"), (std::vector<std::int64_t>{2, 4}));
}
