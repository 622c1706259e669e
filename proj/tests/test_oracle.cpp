#include <gtest/gtest.h>

#include <random>

#include "ivd/diagram.hpp"
#include "ivd/errors.hpp"
#include "ivd/oracle.hpp"

using namespace ivd;

TEST(Oracle, FirstSiteFans) {
  Triangulation t;
  EXPECT_EQ(t.triangle_count(), 1u);
  oracle_insert(t, Site{0, 3, 4});
  EXPECT_EQ(t.triangle_count(), 3u);
  EXPECT_TRUE(t.is_delaunay());
}

TEST(Oracle, MatchesBootstrappedDiagram) {
  Triangulation t;
  oracle_insert(t, Site{0, 10, 20});
  Diagram d;
  d.bootstrap(Site{0, 10, 20});
  EXPECT_EQ(dual_canonical(t), d.canonical());
  EXPECT_EQ(dual_canonical(Triangulation{}), Diagram{}.canonical());
}

TEST(Oracle, TriangleCountAndDelaunay) {
  Triangulation t;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Coord> d(-1000, 1000);
  int n = 0;
  while (n < 120) {
    Site s{n, d(rng), d(rng)};
    try {
      oracle_insert(t, s);
    } catch (const DuplicateSiteError&) {
      continue;
    } catch (const DegeneracyError&) {
      continue;
    }
    ++n;
    ASSERT_EQ(t.triangle_count(), static_cast<std::size_t>(2 * (n + 3) - 5));
  }
  EXPECT_TRUE(t.is_delaunay());
  auto g = dual_canonical(t);
  EXPECT_EQ(g.vertices.size(), t.triangle_count());
  EXPECT_EQ(g.edges.size(), static_cast<std::size_t>(3 * (n + 3) - 9));
  EXPECT_EQ(g.site_pairs.size(), static_cast<std::size_t>(3 * (n + 3) - 6));
}

TEST(Oracle, CocircularRejectedWithoutChange) {
  Triangulation t;
  for (Site s : {Site{0, 0, 0}, Site{1, 4, 0}, Site{2, 4, 4}}) oracle_insert(t, s);
  auto before = dual_canonical(t);
  EXPECT_THROW(oracle_insert(t, Site{3, 0, 4}), DegeneracyError);
  EXPECT_EQ(dual_canonical(t), before);
  EXPECT_THROW(oracle_insert(t, Site{4, 4, 4}), DuplicateSiteError);
  EXPECT_THROW(oracle_insert(t, Site{5, -kSentinelScale * 2, 0}), InputError);
}

TEST(Oracle, DiffOfInteriorInsertion) {
  Triangulation t;
  for (Site s : {Site{0, 0, 0}, Site{1, 10, 0}, Site{2, 5, 8}}) oracle_insert(t, s);
  auto before = dual_canonical(t);
  EXPECT_TRUE(graph_diff(before, before).empty());
  oracle_insert(t, Site{3, 5, 3});
  auto d = graph_diff(before, dual_canonical(t));
  EXPECT_EQ(d.added_vertices.size(), 3u);
  EXPECT_EQ(d.removed_vertices.size(), 1u);
  EXPECT_EQ(d.added_pairs.size(), 3u);
  EXPECT_TRUE(d.removed_pairs.empty());
}
