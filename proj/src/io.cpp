#include "ivd/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "ivd/errors.hpp"

namespace ivd {

namespace {

std::string trim_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool parse_int(const std::string& tok, std::int64_t& out) {
  if (tok.empty()) return false;
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) return false;
  for (std::size_t k = i; k < tok.size(); ++k) {
    if (tok[k] < '0' || tok[k] > '9') return false;
  }
  if (tok.size() - i > 18) return false;
  out = std::stoll(tok);
  return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

std::vector<Site> parse_points(std::istream& in, Coord bound) {
  std::vector<Site> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(trim_comment(line));
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    std::int64_t x = 0, y = 0;
    if (toks.size() != 2 || !parse_int(toks[0], x) || !parse_int(toks[1], y)) {
      throw InputError("line " + std::to_string(lineno) + ": expected two integers");
    }
    if (x < -bound || x > bound || y < -bound || y > bound) {
      throw InputError("line " + std::to_string(lineno) + ": point (" + std::to_string(x) + "," + std::to_string(y) +
                       ") exceeds coordinate bound " + std::to_string(bound));
    }
    out.push_back(Site{static_cast<SiteId>(out.size()), x, y});
  }
  if (out.empty()) throw InputError("input contains no points");
  return out;
}

std::vector<Site> read_points_file(const std::string& path, Coord bound) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  return parse_points(in, bound);
}

GenSpec parse_gen_spec(const std::string& text) {
  auto parts = split(text, ':');
  GenSpec g;
  std::int64_t count = 0, seed = 0;
  if (parts.size() != 3 || !parse_int(parts[1], count) || !parse_int(parts[2], seed) || count < 0 || seed < 0) {
    throw InputError("generator spec must be <dist>:<count>:<seed>, got '" + text + "'");
  }
  g.dist = parts[0];
  if (g.dist != "uniform-disc" && g.dist != "uniform-square" && g.dist != "clustered") {
    throw InputError("unknown distribution '" + g.dist + "'");
  }
  g.count = static_cast<int>(count);
  g.seed = static_cast<std::uint64_t>(seed);
  return g;
}

std::vector<Site> generate_sites(const GenSpec& spec, Coord bound) {
  const std::int64_t cells = (2 * bound + 1) * (2 * bound + 1);
  if (spec.count > cells / 2) throw InputError("too many points for the coordinate bound");
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<Coord> coord(-bound, bound);
  std::set<std::pair<Coord, Coord>> seen;
  std::vector<Site> out;
  out.reserve(static_cast<std::size_t>(spec.count));

  std::vector<std::pair<double, double>> centers;
  std::normal_distribution<double> spread(0.0, std::max<double>(1.0, static_cast<double>(bound) / 40.0));
  if (spec.dist == "clustered") {
    std::uniform_int_distribution<Coord> inner(-bound * 4 / 5, bound * 4 / 5);
    for (int i = 0; i < 8; ++i) centers.emplace_back(static_cast<double>(inner(rng)), static_cast<double>(inner(rng)));
  }
  std::uniform_int_distribution<std::size_t> pick(0, centers.empty() ? 0 : centers.size() - 1);
  while (static_cast<int>(out.size()) < spec.count) {
    Coord x = 0, y = 0;
    if (spec.dist == "uniform-square") {
      x = coord(rng);
      y = coord(rng);
    } else if (spec.dist == "uniform-disc") {
      x = coord(rng);
      y = coord(rng);
      if (x * x + y * y > bound * bound) continue;
    } else {
      const auto& c = centers[pick(rng)];
      x = std::clamp<Coord>(static_cast<Coord>(std::llround(c.first + spread(rng))), -bound, bound);
      y = std::clamp<Coord>(static_cast<Coord>(std::llround(c.second + spread(rng))), -bound, bound);
    }
    if (!seen.insert({x, y}).second) continue;
    out.push_back(Site{static_cast<SiteId>(out.size()), x, y});
  }
  return out;
}

void write_stats_row(std::ostream& out, const InsertionStats& s) {
  out << s.n << ',' << s.links << ',' << s.cuts << ',' << s.cells_changed << ',' << s.dcr_rebuilds << ','
      << s.time_ns << '\n';
}

namespace {

/// Export numbering: finite vertices sorted by canonical triple key.
std::unordered_map<VertexId, std::int64_t> export_ids(const Diagram& d) {
  std::vector<std::pair<SiteTriple::Key, VertexId>> order;
  for (std::size_t v = 0; v < d.vertex_capacity(); ++v) {
    VertexId id = static_cast<VertexId>(v);
    if (!d.vertex_live(id) || d.is_infinite(id)) continue;
    order.emplace_back(d.vertex_triple(id).key(), id);
  }
  std::sort(order.begin(), order.end());
  std::unordered_map<VertexId, std::int64_t> ids;
  for (std::size_t i = 0; i < order.size(); ++i) ids[order[i].second] = static_cast<std::int64_t>(i);
  return ids;
}

std::string id_text(const Diagram& d, const std::unordered_map<VertexId, std::int64_t>& ids, VertexId v) {
  return d.is_infinite(v) ? std::string("inf") : std::to_string(ids.at(v));
}

}  // namespace

void export_text(const Diagram& d, std::ostream& out, bool include_sentinels) {
  out << kExportHeader << '\n';
  if (d.infinity() == kNoVertex) {
    for (CellId c : d.site_cells()) {
      const Cell& cell = d.cell(c);
      if (cell.kind == CellKind::kSentinel && include_sentinels) {
        out << "cell " << cell.site.id << ' ' << cell.site.x << ' ' << cell.site.y << " 0 big \n";
      }
    }
    return;
  }
  auto ids = export_ids(d);
  std::vector<std::pair<std::int64_t, VertexId>> verts;
  for (const auto& [v, i] : ids) verts.emplace_back(i, v);
  std::sort(verts.begin(), verts.end());
  for (const auto& [i, v] : verts) {
    const Vertex& x = d.vertex(v);
    auto cs = d.vertex_cells(v);
    // start at the smallest site so the line does not depend on slot layout
    std::size_t o = 0;
    for (std::size_t k = 1; k < 3; ++k) {
      if (d.cell(cs[k]).site.id < d.cell(cs[o]).site.id) o = k;
    }
    auto at = [&](std::size_t k) { return (o + k) % 3; };
    out << "vertex " << i << ' ' << d.cell(cs[at(0)]).site.id << ',' << d.cell(cs[at(1)]).site.id << ','
        << d.cell(cs[at(2)]).site.id << ' ' << id_text(d, ids, x.nbr[at(0)]) << ','
        << id_text(d, ids, x.nbr[at(1)]) << ',' << id_text(d, ids, x.nbr[at(2)]) << '\n';
  }
  std::vector<std::pair<SiteId, CellId>> cells;
  for (CellId c : d.site_cells()) {
    if (d.cell(c).kind == CellKind::kSentinel && !include_sentinels) continue;
    cells.emplace_back(d.cell(c).site.id, c);
  }
  std::sort(cells.begin(), cells.end());
  for (const auto& [sid, c] : cells) {
    const Cell& cell = d.cell(c);
    std::vector<VertexId> cyc = d.boundary(c);
    auto rank = [&](VertexId v) { return d.is_infinite(v) ? std::int64_t{1} << 62 : ids.at(v); };
    auto lo = std::min_element(cyc.begin(), cyc.end(), [&](VertexId a, VertexId b) { return rank(a) < rank(b); });
    std::rotate(cyc.begin(), lo, cyc.end());
    out << "cell " << sid << ' ' << cell.site.x << ' ' << cell.site.y << ' ' << cyc.size() << ' '
        << (cell.big ? "big" : "small") << ' ';
    for (std::size_t k = 0; k < cyc.size(); ++k) out << (k ? "," : "") << id_text(d, ids, cyc[k]);
    out << '\n';
  }
}

void export_svg(const Diagram& d, std::ostream& out, bool include_sentinels, Coord bound) {
  const double lo = include_sentinels ? -static_cast<double>(kSentinelScale) : -1.05 * static_cast<double>(bound);
  const double hi = include_sentinels ? 3.0 * static_cast<double>(kSentinelScale) : 1.05 * static_cast<double>(bound);
  const double span = hi - lo;
  const auto saved = out.precision(12);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << lo << ' ' << lo << ' ' << span << ' ' << span
      << "\" width=\"800\" height=\"800\">\n";
  out << "<g transform=\"translate(0," << (lo + hi) << ") scale(1,-1)\" fill=\"none\" stroke=\"#1f4e79\">\n";
  std::unordered_map<VertexId, RationalPoint> centers;
  if (d.infinity() != kNoVertex) {
    for (std::size_t v = 0; v < d.vertex_capacity(); ++v) {
      VertexId id = static_cast<VertexId>(v);
      if (!d.vertex_live(id) || d.is_infinite(id)) continue;
      centers.emplace(id, circumcenter(d.vertex_triple(id)));
    }
    for (const auto& [v, p] : centers) {
      const Vertex& x = d.vertex(v);
      for (VertexId w : x.nbr) {
        if (w < v || d.is_infinite(w)) continue;
        const RationalPoint& q = centers.at(w);
        out << "<line x1=\"" << p.x.to_double() << "\" y1=\"" << p.y.to_double() << "\" x2=\"" << q.x.to_double()
            << "\" y2=\"" << q.y.to_double() << "\" vector-effect=\"non-scaling-stroke\"/>\n";
      }
    }
  }
  out << "</g>\n<g transform=\"translate(0," << (lo + hi) << ") scale(1,-1)\">\n";
  const double r = span / 400.0;
  for (const auto& [v, p] : centers) {
    out << "<circle cx=\"" << p.x.to_double() << "\" cy=\"" << p.y.to_double() << "\" r=\"" << r / 2
        << "\" fill=\"#c0392b\"><title>" << p.x.to_string() << ", " << p.y.to_string() << "</title></circle>\n";
  }
  for (CellId c : d.site_cells()) {
    const Cell& cell = d.cell(c);
    if (cell.kind == CellKind::kSentinel && !include_sentinels) continue;
    out << "<circle cx=\"" << cell.site.x << "\" cy=\"" << cell.site.y << "\" r=\"" << r
        << "\" fill=\"#222\"><title>site " << cell.site.id << "</title></circle>\n";
  }
  out << "</g>\n</svg>\n";
  out.precision(saved);
}

ImportedDiagram import_text(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kExportHeader) throw InputError("missing diagram header");
  struct VRec {
    std::array<SiteId, 3> sites;
    std::array<std::int64_t, 3> nbr;  // -1 for the infinite vertex
  };
  std::map<std::int64_t, VRec> verts;
  std::map<SiteId, Site> site_of;
  std::map<SiteId, std::vector<std::int64_t>> listed;
  int lineno = 1;
  auto fail = [&](const std::string& what) { throw InputError("line " + std::to_string(lineno) + ": " + what); };
  auto vid = [&](const std::string& t) {
    if (t == "inf") return std::int64_t{-1};
    std::int64_t v = 0;
    if (!parse_int(t, v) || v < 0) fail("bad vertex id '" + t + "'");
    return v;
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "vertex") {
      std::string id, tri, nb;
      if (!(ls >> id >> tri >> nb)) fail("truncated vertex line");
      auto ts = split(tri, ',');
      auto ns = split(nb, ',');
      if (ts.size() != 3 || ns.size() != 3) fail("vertex needs three sites and three neighbours");
      VRec r{};
      for (int k = 0; k < 3; ++k) {
        std::int64_t s = 0;
        if (!parse_int(ts[static_cast<std::size_t>(k)], s)) fail("bad site id");
        r.sites[static_cast<std::size_t>(k)] = s;
        r.nbr[static_cast<std::size_t>(k)] = vid(ns[static_cast<std::size_t>(k)]);
      }
      if (!verts.emplace(vid(id), r).second) fail("duplicate vertex id");
    } else if (kind == "cell") {
      std::string sid, xs, ys, size, cls, list;
      if (!(ls >> sid >> xs >> ys >> size >> cls)) fail("truncated cell line");
      ls >> list;
      std::int64_t s = 0, x = 0, y = 0;
      if (!parse_int(sid, s) || !parse_int(xs, x) || !parse_int(ys, y)) fail("bad cell header");
      site_of[s] = Site{s, x, y};
      std::vector<std::int64_t> cyc;
      if (!list.empty()) {
        for (const auto& t : split(list, ',')) cyc.push_back(vid(t));
      }
      listed[s] = cyc;
    } else {
      fail("unknown record '" + kind + "'");
    }
  }

  ImportedDiagram out;
  auto sent = sentinel_sites();
  out.sites.assign(sent.begin(), sent.end());
  for (const auto& [id, s] : site_of) {
    if (id >= 0) out.sites.push_back(s);
  }
  if (verts.empty()) return out;

  const std::int64_t nv = static_cast<std::int64_t>(verts.size());
  if (verts.rbegin()->first != nv - 1) throw InputError("vertex ids must be 0..V-1");
  out.infinite = static_cast<VertexId>(nv);
  auto label = [&](std::int64_t v) { return static_cast<VertexId>(v < 0 ? nv : v); };

  // site -> (vertex, slot) occurrences
  std::map<SiteId, std::vector<std::pair<std::int64_t, int>>> occ;
  for (const auto& [v, r] : verts) {
    for (int k = 0; k < 3; ++k) occ[r.sites[static_cast<std::size_t>(k)]].emplace_back(v, k);
  }
  for (const Site& s : out.sites) {
    auto it = occ.find(s.id);
    if (it == occ.end()) throw InputError("site " + std::to_string(s.id) + " has no vertices");
    std::map<std::int64_t, std::int64_t> succ;  // vertex -> next vertex in this cell
    std::int64_t after_inf = -2;
    for (auto [v, k] : it->second) {
      const VRec& r = verts.at(v);
      succ[v] = r.nbr[static_cast<std::size_t>(k)];
      if (r.nbr[static_cast<std::size_t>((k + 1) % 3)] == -1) after_inf = v;
    }
    if (after_inf != -2) succ[-1] = after_inf;
    std::vector<VertexId> cyc;
    std::int64_t start = it->second.front().first;
    std::int64_t cur = start;
    do {
      cyc.push_back(label(cur));
      auto nx = succ.find(cur);
      if (nx == succ.end() || cyc.size() > succ.size()) {
        throw InputError("cell " + std::to_string(s.id) + " boundary does not close");
      }
      cur = nx->second;
    } while (cur != start);
    if (cyc.size() != succ.size()) throw InputError("cell " + std::to_string(s.id) + " boundary is not one cycle");
    auto lst = listed.find(s.id);
    if (lst != listed.end() && !lst->second.empty()) {
      std::vector<VertexId> want;
      for (std::int64_t v : lst->second) want.push_back(label(v));
      auto pos = std::find(cyc.begin(), cyc.end(), want.front());
      std::vector<VertexId> rotated = cyc;
      if (pos != cyc.end()) std::rotate(rotated.begin(), rotated.begin() + (pos - cyc.begin()), rotated.end());
      if (rotated != want) throw InputError("cell " + std::to_string(s.id) + " list disagrees with vertex records");
    }
    out.cycles.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace ivd
