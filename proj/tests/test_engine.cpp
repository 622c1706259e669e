#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ivd/engine.hpp"
#include "ivd/errors.hpp"
#include "ivd/oracle.hpp"

using namespace ivd;

namespace {

std::vector<Site> random_sites(std::uint64_t seed, int n, Coord bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coord> d(-bound, bound);
  std::vector<Site> out;
  std::set<std::pair<Coord, Coord>> seen;
  while (static_cast<int>(out.size()) < n) {
    Coord x = d(rng), y = d(rng);
    if (!seen.insert({x, y}).second) continue;
    out.push_back(Site{static_cast<SiteId>(out.size()), x, y});
  }
  return out;
}

}  // namespace

TEST(Engine, MatchesOracleOnRandomSites) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    VoronoiEngine e;
    Triangulation t;
    for (const Site& s : random_sites(seed, 200, kCoordBound)) {
      oracle_insert(t, s);
      e.insert_site(s);
      ASSERT_EQ(e.check_invariants(), "") << "seed " << seed << " site " << s.id;
      ASSERT_EQ(e.diagram().canonical(), dual_canonical(t)) << "seed " << seed << " site " << s.id;
    }
  }
}

namespace {

std::vector<Site> clustered_sites(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0, 3000);
  std::vector<Site> out;
  std::set<std::pair<Coord, Coord>> seen;
  while (static_cast<int>(out.size()) < n) {
    double cx = (rng() % 2) ? 400000 : -400000;
    Coord x = static_cast<Coord>(cx + g(rng)), y = static_cast<Coord>(g(rng));
    if (!seen.insert({x, y}).second) continue;
    out.push_back(Site{static_cast<SiteId>(out.size()), x, y});
  }
  return out;
}

std::set<std::pair<SiteId, SiteId>> pair_set(const CanonicalGraph& g) {
  return {g.site_pairs.begin(), g.site_pairs.end()};
}

}  // namespace

TEST(Engine, InteriorFourthSiteCounts) {
  VoronoiEngine e;
  for (Site s : {Site{0, 0, 0}, Site{1, 10, 0}, Site{2, 5, 8}}) e.insert_site(s);
  const auto v0 = e.diagram().finite_vertex_count();
  const auto e0 = e.diagram().finite_edge_count();
  e.insert_site(Site{3, 5, 3});
  EXPECT_EQ(e.diagram().finite_vertex_count(), v0 + 2);
  EXPECT_EQ(e.diagram().finite_edge_count(), e0 + 3);
  EXPECT_EQ(e.diagram().real_site_count(), 4);
}

TEST(Engine, SoleVertexTripleOfThreeSites) {
  VoronoiEngine e;
  for (Site s : {Site{0, 0, 0}, Site{1, 10, 0}, Site{2, 5, 8}}) e.insert_site(s);
  const auto& g = e.diagram().canonical();
  EXPECT_TRUE(std::binary_search(g.vertices.begin(), g.vertices.end(), SiteTriple::Key{0, 1, 2}));
}

TEST(Engine, CocircularInsertionRejectedUnchanged) {
  VoronoiEngine e;
  for (Site s : {Site{0, 0, 0}, Site{1, 4, 0}, Site{2, 4, 4}}) e.insert_site(s);
  const auto before = e.diagram().canonical();
  const auto log = e.diagram().change_log();
  EXPECT_THROW(e.insert_site(Site{3, 0, 4}), DegeneracyError);
  EXPECT_EQ(e.diagram().canonical(), before);
  EXPECT_EQ(e.diagram().change_log().links, log.links);
  EXPECT_EQ(e.check_invariants(), "");
  e.insert_site(Site{3, 1, 5});
  EXPECT_EQ(e.check_invariants(), "");
}

TEST(Engine, InputValidation) {
  VoronoiEngine e(100);
  EXPECT_THROW(e.insert_site(Site{0, 101, 0}), InputError);
  e.insert_site(Site{0, 1, 1});
  EXPECT_THROW(e.insert_site(Site{1, 1, 1}), DuplicateSiteError);
  EXPECT_THROW(e.insert_site(Site{0, 2, 2}), InputError);
}

TEST(Engine, LocateStartCellContainsSite) {
  VoronoiEngine e;
  auto sites = random_sites(21, 300, 100000);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Coord> d(-100000, 100000);
  for (const Site& s : sites) {
    e.insert_site(s);
    Site q{999999, d(rng), d(rng)};
    CellId c = e.locate_start_cell(q);
    const Site& owner = e.diagram().cell(c).site;
    auto dist = [&](const Site& a) { return (a.x - q.x) * (a.x - q.x) + (a.y - q.y) * (a.y - q.y); };
    for (const Site& t : e.sites()) ASSERT_LE(dist(owner), dist(t));
  }
}

TEST(Engine, InsideRangeMatchesPredicateFilter) {
  VoronoiEngine e;
  for (const Site& s : random_sites(4, 100, 50000)) e.insert_site(s);
  const Diagram& d = e.diagram();
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<Coord> dist(-50000, 50000);
  int checked = 0;
  while (checked < 200) {
    Site q{1000, dist(rng), dist(rng)};
    for (CellId c : d.site_cells()) {
      auto b = d.boundary(c);
      std::vector<VertexId> inside;
      for (VertexId v : b) {
        if (d.vertex_side(v, q) == CircleSide::kInside) inside.push_back(v);
      }
      if (inside.empty()) continue;
      auto r = e.find_inside_range(c, inside[inside.size() / 2], q);
      std::vector<VertexId> got = r.run;
      std::sort(got.begin(), got.end());
      std::sort(inside.begin(), inside.end());
      ASSERT_EQ(got, inside);
      EXPECT_EQ(d.vertex_side(r.u, q), CircleSide::kOutside);
      EXPECT_EQ(d.vertex_side(r.w, q), CircleSide::kOutside);
      ++checked;
    }
  }
}

TEST(Engine, RecognitionOnlyReportsChangedNeighbours) {
  for (int family = 0; family < 2; ++family) {
    VoronoiEngine e;
    Triangulation t;
    auto sites = family == 0 ? random_sites(31, 300, 200000) : clustered_sites(31, 300);
    for (const Site& s : sites) {
      const Diagram& d = e.diagram();
      if (d.real_site_count() >= 4) {
        // Cells with a vertex inside the new circle are exactly the changed ones.
        std::set<CellId> changed;
        for (CellId c : d.site_cells()) {
          for (VertexId v : d.boundary(c)) {
            if (d.vertex_side(v, s) == CircleSide::kInside) changed.insert(c);
          }
        }
        for (CellId c : changed) {
          std::vector<Seeded> got =
              d.cell(c).big ? e.recognize_big(c, s, nullptr) : e.recognize_small(c, s);
          for (const Seeded& x : got) {
            ASSERT_TRUE(changed.count(x.cell)) << "recognized an unchanged cell";
            ASSERT_FALSE(d.cell(x.cell).big);
            ASSERT_EQ(d.vertex_side(x.seed, s), CircleSide::kInside);
          }
        }
        // Oracle view: new neighbours of s are the changed cells.
        Triangulation copy = t;
        oracle_insert(copy, s);
        std::set<SiteId> nbrs;
        for (auto [a, b] : graph_diff(dual_canonical(t), dual_canonical(copy)).added_pairs) {
          nbrs.insert(a == s.id ? b : a);
        }
        std::set<SiteId> changed_sites;
        for (CellId c : changed) changed_sites.insert(d.cell(c).site.id);
        ASSERT_EQ(changed_sites, nbrs);
      }
      oracle_insert(t, s);
      auto st = e.insert_site(s);
      std::int64_t links = 0, cuts = 0;
      for (const CellEdit& ed : e.last_edits()) {
        EXPECT_LE(ed.links, 1);
        if (ed.links == 0) EXPECT_EQ(ed.cuts, 0);
        links += ed.links;
        cuts += ed.cuts;
      }
      if (e.diagram().real_site_count() > 1) {
        EXPECT_EQ(links, st.links);
        EXPECT_EQ(cuts, st.cuts);
      }
    }
    ASSERT_EQ(e.diagram().canonical(), dual_canonical(t));
  }
}

TEST(Engine, ClusteredInstanceMatchesOracle) {
  VoronoiEngine e;
  Triangulation t;
  for (const Site& s : clustered_sites(77, 400)) {
    oracle_insert(t, s);
    e.insert_site(s);
    ASSERT_EQ(e.check_invariants(), "");
  }
  EXPECT_EQ(e.diagram().canonical(), dual_canonical(t));
  EXPECT_GT(e.index().big_cells().size(), 3u);
}

TEST(Engine, OneInsideCaseCostsOneLink) {
  VoronoiEngine e;
  for (Site s : {Site{0, 0, 0}, Site{1, 1000, 0}, Site{2, 500, 800}}) e.insert_site(s);
  // Near the circumcentre of the three sites only that vertex is enclosed.
  auto st = e.insert_site(Site{3, 500, 300});
  EXPECT_EQ(st.links, 1);
  EXPECT_EQ(st.cuts, 0);
  EXPECT_EQ(st.cells_changed, 3);
}
