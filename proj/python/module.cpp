#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "ivd/engine.hpp"
#include "ivd/errors.hpp"
#include "ivd/io.hpp"
#include "ivd/oracle.hpp"
#include "ivd/verify.hpp"

namespace py = pybind11;
using namespace ivd;

namespace {

py::dict stats_dict(const InsertionStats& s) {
  py::dict d;
  d["n"] = s.n;
  d["links"] = s.links;
  d["cuts"] = s.cuts;
  d["cells_changed"] = s.cells_changed;
  d["dcr_rebuilds"] = s.dcr_rebuilds;
  d["time_ns"] = s.time_ns;
  return d;
}

InsertionStats insert_point(VoronoiEngine& e, Coord x, Coord y) {
  return e.insert_site(Site{static_cast<SiteId>(e.sites().size()), x, y});
}

std::vector<std::pair<Coord, Coord>> xy(const std::vector<Site>& sites) {
  std::vector<std::pair<Coord, Coord>> out;
  out.reserve(sites.size());
  for (const Site& s : sites) out.emplace_back(s.x, s.y);
  return out;
}

std::string matches_oracle(const VoronoiEngine& e) {
  Triangulation t;
  for (const Site& s : e.sites()) t.insert(s);
  return check_against(e.diagram(), t);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Incremental planar Voronoi diagrams with exact integer predicates";
  m.attr("COORD_BOUND") = kCoordBound;
  m.attr("STATS_HEADER") = kStatsHeader;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<DegeneracyError>(m, "DegeneracyError", PyExc_ValueError);
  py::register_exception<DuplicateSiteError>(m, "DuplicateSiteError", PyExc_ValueError);
  py::register_exception<StructureError>(m, "StructureError", PyExc_RuntimeError);

  py::class_<VoronoiEngine>(m, "Engine")
      .def(py::init<Coord>(), py::arg("coord_bound") = kCoordBound)
      .def(
          "insert", [](VoronoiEngine& e, Coord x, Coord y) { return stats_dict(insert_point(e, x, y)); },
          py::arg("x"), py::arg("y"), "Insert one site; returns its statistics.")
      .def(
          "insert_many",
          [](VoronoiEngine& e, const std::vector<std::pair<Coord, Coord>>& pts) {
            py::list out;
            for (auto [x, y] : pts) out.append(stats_dict(insert_point(e, x, y)));
            return out;
          },
          py::arg("points"))
      .def_property_readonly("coord_bound", &VoronoiEngine::coord_bound)
      .def_property_readonly("sites", [](const VoronoiEngine& e) { return xy(e.sites()); })
      .def("__len__", [](const VoronoiEngine& e) { return e.sites().size(); })
      .def("vertex_count", [](const VoronoiEngine& e) { return e.diagram().finite_vertex_count(); })
      .def("edge_count", [](const VoronoiEngine& e) { return e.diagram().finite_edge_count(); })
      .def("threshold", [](const VoronoiEngine& e) { return e.index().threshold(); })
      .def("big_cell_count", [](const VoronoiEngine& e) { return e.index().big_cells().size(); })
      .def("change_log",
           [](const VoronoiEngine& e) {
             const ChangeLog& l = e.diagram().change_log();
             return std::make_pair(l.links, l.cuts);
           })
      .def("vertices", [](const VoronoiEngine& e) { return e.diagram().canonical().vertices; },
           "Sorted site-id triples of the finite Voronoi vertices.")
      .def("neighbor_pairs", [](const VoronoiEngine& e) { return e.diagram().canonical().site_pairs; })
      .def("nearest",
           [](const VoronoiEngine& e, Coord x, Coord y) {
             Site s = e.nn().nearest(x, y);
             return py::make_tuple(s.id, s.x, s.y);
           },
           py::arg("x"), py::arg("y"), "Nearest site (sentinels have negative ids).")
      .def("check_invariants", &VoronoiEngine::check_invariants, "Empty string when every check passes.")
      .def("check_oracle", &matches_oracle, "Empty string when the graph equals the Delaunay dual.")
      .def("check_counts", [](const VoronoiEngine& e) { return check_counts(e.diagram()); })
      .def(
          "export_text",
          [](const VoronoiEngine& e, bool include_sentinels) {
            std::ostringstream out;
            export_text(e.diagram(), out, include_sentinels);
            return out.str();
          },
          py::arg("include_sentinels") = false)
      .def(
          "export_svg",
          [](const VoronoiEngine& e, bool include_sentinels) {
            std::ostringstream out;
            export_svg(e.diagram(), out, include_sentinels, e.coord_bound());
            return out.str();
          },
          py::arg("include_sentinels") = false);

  m.def(
      "import_text",
      [](const std::string& text, Coord coord_bound) {
        std::istringstream in(text);
        ImportedDiagram imp = import_text(in);
        auto e = std::make_unique<VoronoiEngine>(coord_bound);
        e->restore(imp.sites, imp.cycles, imp.infinite);
        return e;
      },
      py::arg("text"), py::arg("coord_bound") = kCoordBound, "Rebuild an engine from a text export.");
  m.def(
      "parse_points",
      [](const std::string& text, Coord bound) {
        std::istringstream in(text);
        return xy(parse_points(in, bound));
      },
      py::arg("text"), py::arg("coord_bound") = kCoordBound);
  m.def(
      "generate",
      [](const std::string& dist, int count, std::uint64_t seed, Coord bound) {
        return xy(generate_sites(GenSpec{dist, count, seed}, bound));
      },
      py::arg("dist"), py::arg("count"), py::arg("seed"), py::arg("coord_bound") = kCoordBound);
}
