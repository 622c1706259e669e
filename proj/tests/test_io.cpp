#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <set>
#include <sstream>

#include "ivd/engine.hpp"
#include "ivd/errors.hpp"
#include "ivd/io.hpp"
#include "ivd/oracle.hpp"

using namespace ivd;

namespace {

std::unique_ptr<VoronoiEngine> build(const std::vector<Site>& sites, Coord bound = kCoordBound) {
  auto e = std::make_unique<VoronoiEngine>(bound);
  for (const Site& s : sites) e->insert_site(s);
  return e;
}

std::string text_of(const Diagram& d, bool sentinels) {
  std::ostringstream out;
  export_text(d, out, sentinels);
  return out.str();
}

}  // namespace

TEST(Io, ParsesCommentsAndBlankLines) {
  std::istringstream in("# header\n1 2\n\n  -3 4  # trailing\r\n");
  auto pts = parse_points(in, kCoordBound);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[1], (Site{1, -3, 4}));
}

TEST(Io, RejectsMalformedInput) {
  for (const char* bad : {"1\n", "1 2 3\n", "a b\n", "1.5 2\n", "", "# only\n", "2000000 0\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(parse_points(in, kCoordBound), InputError) << bad;
  }
}

TEST(Io, ErrorNamesTheLine) {
  std::istringstream in("0 0\n1 1\nx 2\n");
  try {
    parse_points(in, kCoordBound);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Io, GeneratorIsDeterministicAndDistinct) {
  for (const char* dist : {"uniform-disc", "uniform-square", "clustered"}) {
    GenSpec g = parse_gen_spec(std::string(dist) + ":300:7");
    auto a = generate_sites(g, 1000);
    auto b = generate_sites(g, 1000);
    EXPECT_EQ(a, b);
    std::set<std::pair<Coord, Coord>> seen;
    for (const Site& s : a) {
      EXPECT_TRUE(seen.insert({s.x, s.y}).second);
      EXPECT_LE(std::abs(s.x), 1000);
      EXPECT_LE(std::abs(s.y), 1000);
    }
  }
  EXPECT_NE(generate_sites(parse_gen_spec("uniform-disc:50:1"), 1000),
            generate_sites(parse_gen_spec("uniform-disc:50:2"), 1000));
  EXPECT_THROW(parse_gen_spec("gauss:10:1"), InputError);
  EXPECT_THROW(parse_gen_spec("uniform-disc:10"), InputError);
}

TEST(Io, StatsRow) {
  std::ostringstream out;
  write_stats_row(out, InsertionStats{4, 2, 1, 5, 0, 99});
  EXPECT_EQ(out.str(), "4,2,1,5,0,99\n");
}

TEST(Io, SingleSiteExport) {
  auto e = build({Site{0, 10, 20}});
  std::string hidden = text_of(e->diagram(), false);
  std::string shown = text_of(e->diagram(), true);
  auto count = [](const std::string& s, const std::string& what) {
    std::size_t n = 0;
    for (std::size_t p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count(hidden, "\ncell "), 1u);
  EXPECT_EQ(count(shown, "\ncell "), 4u);
  EXPECT_EQ(count(shown, "\nvertex "), 3u);
  EXPECT_EQ(hidden.rfind(kExportHeader, 0), 0u);
}

TEST(Io, RoundTripReproducesCanonicalGraph) {
  auto sites = generate_sites(parse_gen_spec("uniform-disc:512:3"), kCoordBound);
  auto e = build(sites);
  for (bool sent : {false, true}) {
    std::istringstream in(text_of(e->diagram(), sent));
    ImportedDiagram imp = import_text(in);
    VoronoiEngine r;
    r.restore(imp.sites, imp.cycles, imp.infinite);
    EXPECT_EQ(r.check_invariants(), "");
    EXPECT_EQ(r.diagram().canonical(), e->diagram().canonical());
    EXPECT_EQ(text_of(r.diagram(), sent), text_of(e->diagram(), sent));
  }
}

TEST(Io, RestoredEngineKeepsInserting) {
  auto sites = generate_sites(parse_gen_spec("uniform-square:200:5"), 5000);
  std::vector<Site> head(sites.begin(), sites.begin() + 100);
  auto e = build(head, 5000);
  std::istringstream in(text_of(e->diagram(), false));
  ImportedDiagram imp = import_text(in);
  VoronoiEngine r(5000);
  r.restore(imp.sites, imp.cycles, imp.infinite);
  Triangulation t;
  for (const Site& s : head) t.insert(s);
  for (std::size_t i = 100; i < sites.size(); ++i) {
    r.insert_site(sites[i]);
    t.insert(sites[i]);
  }
  EXPECT_EQ(r.diagram().canonical(), dual_canonical(t));
  EXPECT_EQ(r.check_invariants(), "");
}

TEST(Io, EmptyDiagramRoundTrip) {
  VoronoiEngine e;
  std::istringstream in(text_of(e.diagram(), true));
  ImportedDiagram imp = import_text(in);
  EXPECT_EQ(imp.sites.size(), 3u);
  EXPECT_TRUE(imp.cycles.empty());
}

TEST(Io, ImportRejectsCorruption) {
  auto e = build(generate_sites(parse_gen_spec("uniform-disc:40:9"), 1000));
  std::string txt = text_of(e->diagram(), false);
  std::istringstream no_header(txt.substr(txt.find('\n') + 1));
  EXPECT_THROW(import_text(no_header), InputError);
  std::string broken = txt;
  auto pos = broken.find("\nvertex 3 ");
  ASSERT_NE(pos, std::string::npos);
  broken.erase(pos, broken.find('\n', pos + 1) - pos);
  std::istringstream in(broken);
  EXPECT_THROW(import_text(in), InputError);
}

TEST(Io, SvgContainsExactCircumcenters) {
  auto e = build({Site{0, 0, 0}, Site{1, 8, 0}, Site{2, 3, 5}});
  std::ostringstream out;
  export_svg(e->diagram(), out, false, kCoordBound);
  std::string svg = out.str();
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("<title>4, 1</title>"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}
