#include <gtest/gtest.h>

#include "support.hpp"

using namespace khbn;

TEST(Parse, TrefoilSignsInferred) {
  const LinkDiagram d = parse_pd(fixtures::kTrefoilLeft);
  ASSERT_EQ(d.n(), 3);
  EXPECT_EQ(d.n_plus(), 0);
  EXPECT_EQ(d.n_minus(), 3);
  EXPECT_EQ(d.basepoint_arc, 1);
  EXPECT_FALSE(d.basepoint_on_loop);
}

TEST(Parse, RightTrefoilAllPositive) {
  const LinkDiagram d = parse_pd(fixtures::kTrefoilRight);
  EXPECT_EQ(d.n_plus(), 3);
  EXPECT_EQ(d.n_minus(), 0);
}

TEST(Parse, HopfBothPositive) {
  const LinkDiagram d = parse_pd(fixtures::kHopf);
  EXPECT_EQ(d.n_plus(), 2);
  EXPECT_EQ(d.n_minus(), 0);
}

TEST(Parse, Fig8MixedSigns) {
  const LinkDiagram d = parse_pd(fixtures::kFig8);
  EXPECT_EQ(d.n_plus(), 2);
  EXPECT_EQ(d.n_minus(), 2);
}

TEST(Parse, ExplicitAnnotationsKept) {
  const LinkDiagram d = parse_pd(fixtures::kTrefoil4);
  EXPECT_EQ(d.n_plus(), 1);
  EXPECT_EQ(d.n_minus(), 3);
}

TEST(Parse, FreeLoopsAndBasepoint) {
  const LinkDiagram d = parse_pd("O O @2");
  EXPECT_EQ(d.n(), 0);
  EXPECT_EQ(d.free_loops, 2);
  EXPECT_TRUE(d.basepoint_on_loop);
  EXPECT_EQ(d.basepoint_arc, 2);
}

TEST(Parse, DefaultBasepointIsSmallestArc) {
  const LinkDiagram d = parse_pd("X+(1,1,2,2)");
  EXPECT_EQ(d.basepoint_arc, 1);
}

TEST(Parse, CommentsAndWhitespace) {
  const LinkDiagram d = parse_pd("# a kink\nX+(1,1,2,2)  # trailing\n @2\n");
  EXPECT_EQ(d.n(), 1);
  EXPECT_EQ(d.basepoint_arc, 2);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_pd(""), ParseError);
  EXPECT_THROW(parse_pd("X(1,2,3)"), ParseError);
  EXPECT_THROW(parse_pd("X(1,2,3,4)"), ParseError);          // arcs appear once
  EXPECT_THROW(parse_pd("X+(1,1,2,2) @7"), ParseError);      // basepoint not an arc
  EXPECT_THROW(parse_pd("O @3"), ParseError);                // basepoint not a loop
  EXPECT_THROW(parse_pd("garbage"), ParseError);
  EXPECT_THROW(parse_pd("X+(1,1,2,2) @1 @2"), ParseError);   // two basepoints
  EXPECT_THROW(parse_pd("X(0,0,1,1)"), ParseError);          // non-positive arc
}

TEST(Parse, AnnotationContradictionRejected) {
  EXPECT_THROW(parse_pd("X+(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"), ParseError);
}

TEST(Parse, SerializeRoundTrip) {
  for (const char* code : fixtures::core_suite()) {
    const LinkDiagram d = parse_pd(code);
    const std::string s = serialize(d);
    EXPECT_EQ(canonical(parse_pd(s)), canonical(d)) << code;
    EXPECT_EQ(serialize(parse_pd(s)), s) << code;
  }
}

TEST(Parse, SerializeIsSignedAndSorted) {
  EXPECT_EQ(serialize(parse_pd(fixtures::kTrefoilLeft)), "X-(1,4,2,5) X-(3,6,4,1) X-(5,2,6,3) @1");
  EXPECT_EQ(serialize(parse_pd("O @1")), "O @1");
}
