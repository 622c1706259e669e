#include <gtest/gtest.h>

#include <random>

#include "ivd/errors.hpp"
#include "ivd/predicates.hpp"

using namespace ivd;

namespace {

long double incircle_ld(const Site& a, const Site& b, const Site& c, const Site& q) {
  long double ax = a.x - q.x, ay = a.y - q.y, bx = b.x - q.x, by = b.y - q.y, cx = c.x - q.x, cy = c.y - q.y;
  return (ax * ax + ay * ay) * (bx * cy - by * cx) - (bx * bx + by * by) * (ax * cy - ay * cx) +
         (cx * cx + cy * cy) * (ax * by - ay * bx);
}

}  // namespace

TEST(Predicates, OrientationBasic) {
  Site a{0, 0, 0}, b{1, 10, 0}, c{2, 0, 10};
  EXPECT_EQ(orientation(a, b, c), Orientation::kCCW);
  EXPECT_EQ(orientation(a, c, b), Orientation::kCW);
  EXPECT_EQ(orientation(a, b, Site{3, 20, 0}), Orientation::kCollinear);
}

TEST(Predicates, TripleNormalizesAndKeys) {
  Site a{5, 0, 0}, b{2, 10, 0}, c{9, 0, 10};
  SiteTriple t(a, c, b);
  EXPECT_EQ(orientation(t[0], t[1], t[2]), Orientation::kCCW);
  auto k = t.key();
  EXPECT_EQ(k[0], 2);
  EXPECT_EQ(k[1], 9);
  EXPECT_EQ(k[2], 5);
  EXPECT_THROW(SiteTriple(a, b, Site{7, 20, 0}), DegeneracyError);
}

TEST(Predicates, IncircleExtremes) {
  const Coord K = kSentinelScale;
  Site s0{-3, -K, -K}, s1{-2, 3 * K, -K}, s2{-1, -K, 3 * K};
  SiteTriple t(s0, s1, s2);
  EXPECT_EQ(side_of_circle(t, Site{0, kCoordBound, kCoordBound}), CircleSide::kInside);
  EXPECT_EQ(side_of_circle(t, Site{0, -kCoordBound, kCoordBound}), CircleSide::kInside);
  // Cocircular square corners.
  SiteTriple sq(Site{1, 0, 0}, Site{2, 4, 0}, Site{3, 4, 4});
  EXPECT_EQ(side_of_circle(sq, Site{4, 0, 4}), CircleSide::kOn);
  EXPECT_EQ(side_of_circle(sq, Site{4, 2, 2}), CircleSide::kInside);
  EXPECT_EQ(side_of_circle(sq, Site{4, 9, 9}), CircleSide::kOutside);
}

TEST(Predicates, IncircleMatchesLongDoubleOnSmallCoords) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Coord> d(-1000, 1000);
  int checked = 0;
  for (int i = 0; i < 20000; ++i) {
    Site a{1, d(rng), d(rng)}, b{2, d(rng), d(rng)}, c{3, d(rng), d(rng)}, q{4, d(rng), d(rng)};
    if (orientation(a, b, c) == Orientation::kCollinear) continue;
    SiteTriple t(a, b, c);
    long double v = incircle_ld(t[0], t[1], t[2], q);
    CircleSide want = v > 0 ? CircleSide::kInside : (v < 0 ? CircleSide::kOutside : CircleSide::kOn);
    ASSERT_EQ(side_of_circle(t, q), want);
    ++checked;
  }
  EXPECT_GT(checked, 19000);
}

TEST(Predicates, CircumcenterExact) {
  auto c = circumcenter(Site{1, 0, 0}, Site{2, 4, 0}, Site{3, 0, 2});
  EXPECT_EQ(c.x.to_string(), "2");
  EXPECT_EQ(c.y.to_string(), "1");
  auto d = circumcenter(Site{1, 0, 0}, Site{2, 1, 0}, Site{3, 0, 1});
  EXPECT_EQ(d.x.to_string(), "1/2");
  EXPECT_EQ(d.y.to_string(), "1/2");
  EXPECT_THROW(circumcenter(Site{1, 0, 0}, Site{2, 1, 1}, Site{3, 2, 2}), DegeneracyError);
}

TEST(Predicates, CircumcenterHandExample) {
  auto c = circumcenter(Site{1, 0, 0}, Site{2, 10, 0}, Site{3, 5, 8});
  EXPECT_EQ(c.x.to_string(), "5");
  EXPECT_EQ(c.y.to_string(), "39/16");
}
