#include <gtest/gtest.h>

#include <random>

#include "ivd/big_cell_index.hpp"
#include "ivd/engine.hpp"
#include "ivd/errors.hpp"

using namespace ivd;

namespace {

DcrEntry circle(VertexId id, Coord cx, Coord cy, Coord r) {
  return DcrEntry{id, kNoVertex, SiteTriple(Site{1, cx + r, cy}, Site{2, cx, cy + r}, Site{3, cx - r, cy})};
}

}  // namespace

TEST(Dcr, ReportExamples) {
  Dcr d;
  d.insert(circle(10, 0, 0, 5));
  d.insert(circle(11, 10, 0, 3));
  EXPECT_EQ(dcr_report(d, Site{0, 1, 0}), std::vector<VertexId>{10});
  EXPECT_EQ(dcr_report(d, Site{0, 8, 0}), std::vector<VertexId>{11});
  EXPECT_TRUE(dcr_report(d, Site{0, 1000000, 1000000}).empty());
  EXPECT_THROW(d.report(Site{0, 0, 5}), DegeneracyError);
}

TEST(Dcr, InsertDeleteRules) {
  Dcr d;
  d.insert(circle(4, 0, 0, 5));
  EXPECT_THROW(d.insert(circle(4, 1, 1, 2)), StructureError);
  dcr_delete(d, 4);
  EXPECT_EQ(d.size(), 0u);
  EXPECT_THROW(dcr_delete(d, 4), StructureError);

  Diagram g;
  g.bootstrap(Site{0, 5, 5});
  BigCellIndex idx(g);
  idx.initialize();
  // Every vertex of the bootstrapped diagram touches a sentinel cell.
  EXPECT_THROW(dcr_insert(d, g, g.boundary(*g.cell_of_site(0))[0], kNoVertex), StructureError);
}

TEST(BigCellIndex, Threshold) {
  EXPECT_EQ(BigCellIndex::threshold_for(16), 2);
  EXPECT_EQ(BigCellIndex::threshold_for(17), 3);
  EXPECT_EQ(BigCellIndex::threshold_for(81), 3);
  EXPECT_EQ(BigCellIndex::threshold_for(82), 4);
  EXPECT_EQ(BigCellIndex::threshold_for(4), 2);
}

TEST(BigCellIndex, SentinelGammaEdges) {
  Diagram g;
  g.bootstrap(Site{0, 5, 5});
  BigCellIndex idx(g);
  idx.initialize();
  EXPECT_EQ(idx.check(), "");
  // Four sites, threshold 2: the triangle cell (size 3) is big too.
  EXPECT_EQ(idx.big_cells().size(), 4u);
  for (CellId c : g.site_cells()) {
    auto edges = idx.gamma_edges(c);
    EXPECT_EQ(edges.size(), 3u);
    for (const auto& e : edges) EXPECT_TRUE(idx.is_big(e.other));
  }
}

TEST(BigCellIndex, SplitThenJoinRestoresGamma) {
  Diagram g;
  g.bootstrap(Site{0, 5, 5});
  BigCellIndex idx(g);
  idx.initialize();
  CellId r = *g.cell_of_site(0);
  const auto before = idx.gamma_edges(r);
  auto b = g.boundary(r);
  VertexId x = g.subdivide(b[0], b[1]);
  VertexId y = g.subdivide(b[1], b[2]);
  CellId part = g.link(x, y, r);
  idx.gamma_split(r, part, x, y);
  for (const auto& e : idx.gamma_edges(r)) EXPECT_NE(e.other, part);
  g.cut(x, y, r);
  g.smooth(x);
  g.smooth(y);
  idx.gamma_join(r, part, b[0], b[1]);
  idx.refresh_marks_at(b[2]);
  EXPECT_EQ(idx.gamma_edges(r).size(), before.size());
  EXPECT_THROW(idx.gamma_split(part, part, x, y), StructureError);
}

TEST(BigCellIndex, RebuildIsIdempotentAndFlagsFollowRule) {
  VoronoiEngine e;
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<Coord> d(-5000, 5000);
  int id = 0;
  while (id < 500) {
    Site s{id, d(rng), d(rng)};
    try {
      e.insert_site(s);
    } catch (const DuplicateSiteError&) {
      continue;
    } catch (const DegeneracyError&) {
      continue;
    }
    ++id;
    ASSERT_EQ(e.index().check(), "") << "after " << id;
  }
  const BigCellIndex& idx = e.index();
  for (CellId c : idx.big_cells()) {
    for (BlockId b : idx.blocks_of(c)) {
      auto range = idx.block_range(b);
      EXPECT_LE(idx.block(b).dcr.size(), range.size());
    }
  }
}
