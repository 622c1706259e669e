#include <gtest/gtest.h>

#include "ivd/diagram.hpp"
#include "ivd/errors.hpp"

using namespace ivd;

namespace {

Diagram bootstrapped() {
  Diagram d;
  d.bootstrap(Site{0, 10, 20});
  return d;
}

}  // namespace

TEST(Diagram, EmptyHasOneFiniteVertex) {
  Diagram d;
  EXPECT_EQ(d.site_count(), 3);
  EXPECT_EQ(d.finite_vertex_count(), 1);
  EXPECT_EQ(d.finite_edge_count(), 0);
  auto g = d.canonical();
  ASSERT_EQ(g.vertices.size(), 1u);
  EXPECT_EQ(g.site_pairs.size(), 3u);
  EXPECT_EQ(d.check_structure(), "");
}

TEST(Diagram, BootstrapCounts) {
  Diagram d = bootstrapped();
  EXPECT_EQ(d.check_structure(), "");
  EXPECT_EQ(d.finite_vertex_count(), 3);
  EXPECT_EQ(d.finite_edge_count(), 3);
  auto g = d.canonical();
  EXPECT_EQ(g.vertices.size(), 3u);
  EXPECT_EQ(g.edges.size(), 3u);
  EXPECT_EQ(g.site_pairs.size(), 6u);
  CellId r = *d.cell_of_site(0);
  EXPECT_EQ(d.cell_size(r), 3);
  for (VertexId v : d.boundary(r)) {
    EXPECT_TRUE(d.vertex_triple(v).contains(0));
    EXPECT_EQ(d.vertex_side(v, Site{1, 10, 20}), CircleSide::kOn);
  }
}

TEST(Diagram, PawsOfSmallCell) {
  Diagram d = bootstrapped();
  CellId r = *d.cell_of_site(0);
  auto p = d.paws(r);
  // Every paw of the central cell is the infinite vertex.
  ASSERT_EQ(p.size(), 1u);
  EXPECT_TRUE(d.is_infinite(p[0].first));
}

TEST(Diagram, LinkCutRoundTrip) {
  Diagram d = bootstrapped();
  const CanonicalGraph before = d.canonical();
  CellId r = *d.cell_of_site(0);
  auto b = d.boundary(r);
  ASSERT_EQ(b.size(), 3u);
  NodeId n0 = d.node_in(b[0], r);
  VertexId b1 = d.node_vertex(d.succ(n0));
  VertexId b2 = d.node_vertex(d.succ(d.succ(n0)));
  VertexId x = d.subdivide(b[0], b1);
  VertexId y = d.subdivide(b1, b2);
  EXPECT_EQ(d.cell_size(r), 5);
  const auto links0 = d.change_log().links;
  CellId part = d.link(x, y, r);
  EXPECT_EQ(d.change_log().links, links0 + 1);
  EXPECT_EQ(d.boundary(part), (std::vector<VertexId>{x, b1, y}));
  EXPECT_EQ(d.cell_size(r), 4);
  EXPECT_EQ(d.vertex(x).deg, 3);
  CellId kept = d.cut(x, y, r);
  EXPECT_EQ(kept, r);
  EXPECT_EQ(d.change_log().cuts, 1);
  d.smooth(x);
  d.smooth(y);
  EXPECT_EQ(d.check_structure(), "");
  EXPECT_EQ(d.canonical(), before);
}

TEST(Diagram, CutRefusesBridgeAndSiteCells) {
  Diagram d = bootstrapped();
  CellId r = *d.cell_of_site(0);
  auto b = d.boundary(r);
  EXPECT_THROW(d.cut(b[0], b[1]), StructureError);
  EXPECT_THROW(d.smooth(b[0]), StructureError);
}

TEST(Diagram, BuildFromFacesRejectsInconsistentInput) {
  Diagram d;
  auto s = sentinel_sites();
  std::vector<Site> sites{s[0], s[1], s[2], Site{0, 1, 1}};
  std::vector<std::vector<VertexId>> cycles{{0, 2, 3}, {1, 0, 3}, {2, 1, 3}, {0, 2, 1}};
  EXPECT_THROW(d.build_from_faces(sites, cycles, 3), StructureError);
}
