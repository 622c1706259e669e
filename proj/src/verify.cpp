#include "ivd/verify.hpp"

#include "ivd/errors.hpp"

namespace ivd {

std::string check_counts(const Diagram& d) {
  const std::int64_t n = d.site_count();
  const std::int64_t v = d.finite_vertex_count();
  const std::int64_t e = d.finite_edge_count();
  if (v != 2 * n - 5 || e != 3 * n - 9) {
    return "counts V=" + std::to_string(v) + " E=" + std::to_string(e) + " for N=" + std::to_string(n);
  }
  return {};
}

std::string check_empty_circles(const Diagram& d) {
  std::vector<Site> all;
  for (CellId c : d.site_cells()) all.push_back(d.cell(c).site);
  for (std::size_t i = 0; i < d.vertex_capacity(); ++i) {
    VertexId v = static_cast<VertexId>(i);
    if (!d.vertex_live(v) || d.is_infinite(v)) continue;
    SiteTriple t = d.vertex_triple(v);
    for (const Site& s : all) {
      if (t.contains(s.id)) continue;
      if (side_of_circle(t, s) != CircleSide::kOutside) {
        return "site " + std::to_string(s.id) + " not outside the circle of vertex " + std::to_string(v);
      }
    }
  }
  return {};
}

std::string check_against(const Diagram& d, const Triangulation& t) {
  CanonicalGraph want = dual_canonical(t);
  CanonicalGraph got = d.canonical();
  if (got == want) return {};
  GraphDiff diff = graph_diff(want, got);
  return "graph differs from the oracle (" + std::to_string(diff.added_vertices.size()) + " extra, " +
         std::to_string(diff.removed_vertices.size()) + " missing vertices, " + std::to_string(diff.pair_changes()) +
         " site pairs)";
}

}  // namespace ivd
