#include <gtest/gtest.h>

#include <map>

#include "support.hpp"

using namespace khbn;

TEST(Cube, TrefoilCircleCounts) {
  const Cube cube(parse_pd(fixtures::kTrefoilLeft));
  const std::map<std::uint32_t, int> expected = {
      {0b000, 3}, {0b001, 2}, {0b010, 2}, {0b011, 1}, {0b100, 2}, {0b101, 1}, {0b110, 1}, {0b111, 2}};
  for (const auto& [alpha, k] : expected) {
    EXPECT_EQ(cube.vertex(alpha).circle_count, k) << "alpha=" << alpha;
    EXPECT_EQ(cube.vertex(alpha).basepoint_circle, 0) << "alpha=" << alpha;
  }
}

TEST(Cube, TrefoilDumpGolden) {
  const Cube cube(parse_pd(fixtures::kTrefoilLeft));
  EXPECT_EQ(cube.dump(),
            "000 3 0\n100 2 0\n010 2 0\n110 1 0\n001 2 0\n101 1 0\n011 1 0\n111 2 0\n"
            "000 0 merge\n000 1 merge\n000 2 merge\n100 1 merge\n100 2 merge\n010 0 merge\n"
            "010 2 merge\n110 2 split\n001 0 merge\n001 1 merge\n101 1 split\n011 0 split\n");
}

TEST(Cube, ZeroCrossingUnknot) {
  const Cube cube(parse_pd(fixtures::kUnknot));
  EXPECT_EQ(cube.n(), 0);
  EXPECT_EQ(cube.vertex_count(), 1u);
  EXPECT_EQ(cube.vertex(0).circle_count, 1);
  EXPECT_EQ(cube.vertex(0).basepoint_circle, 0);
  EXPECT_EQ(cube.dump(), "- 1 0\n");
}

TEST(Cube, FreeLoopsAppendAfterArcCircles) {
  const Cube cube(parse_pd("X+(1,1,2,2) O O @1"));
  EXPECT_EQ(cube.vertex(0).circle_count, cube.vertex(0).arc_circle_count + 2);
  for (int j = 0; j < cube.n(); ++j) {
    const EdgeSurgery& e = cube.edge(0, j);
    const int from_arc = cube.vertex(0).arc_circle_count;
    const int to_arc = cube.vertex(1u << j).arc_circle_count;
    EXPECT_EQ(e.carry[from_arc], to_arc);
    EXPECT_EQ(e.carry[from_arc + 1], to_arc + 1);
  }
}

TEST(Cube, MergeSplitClassification) {
  // One-crossing kink: the 0-resolution of X+(1,1,2,2) has two circles, so
  // the edge is a merge.
  const Cube cube(parse_pd(fixtures::kKinkPos));
  EXPECT_EQ(cube.vertex(0).circle_count, 2);
  EXPECT_EQ(cube.vertex(1).circle_count, 1);
  EXPECT_TRUE(cube.edge(0, 0).is_merge);
  const EdgeSurgery& e = cube.edge(0, 0);
  EXPECT_EQ(e.src1, 0);
  EXPECT_EQ(e.src2, 1);
  EXPECT_EQ(e.dst, 0);
}

TEST(Cube, SplitTargetsDistinct) {
  const Cube cube(parse_pd(fixtures::kTrefoilLeft));
  const EdgeSurgery& e = cube.edge(0b011, 2);
  EXPECT_FALSE(e.is_merge);
  EXPECT_NE(e.dst1, e.dst2);
}

TEST(Cube, EdgeRequiresClearBit) {
  const LinkDiagram d = parse_pd(fixtures::kKinkPos);
  EXPECT_THROW(edge(d, 1, 0), std::invalid_argument);
}

TEST(Cube, SizeGuard) {
  EXPECT_THROW(Cube(parse_pd(fixtures::kTrefoilLeft), 2), SizeLimitError);
  EXPECT_NO_THROW(Cube(parse_pd(fixtures::kTrefoilLeft), 3));
}

TEST(Cube, MaxCircles) {
  const Cube cube(parse_pd(fixtures::kTrefoilLeft));
  EXPECT_EQ(cube.max_circles(), 3);
  EXPECT_EQ(k_truncation_bound(cube), 2);
}
