#include "ivd/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ivd/errors.hpp"

namespace ivd {

namespace {

std::string vid(VertexId v) { return std::to_string(v); }

}  // namespace

std::array<Site, 3> sentinel_sites() {
  constexpr Coord k = kSentinelScale;
  return {Site{-3, -k, -k}, Site{-2, 3 * k, -k}, Site{-1, -k, 3 * k}};
}

Diagram::Diagram() {
  for (const Site& s : sentinel_sites()) {
    CellId c = add_cell(s, CellKind::kSentinel);
    cell_mut(c).big = true;
    site_to_cell_[s.id] = c;
    site_order_.push_back(c);
  }
}

CellId Diagram::add_cell(const Site& s, CellKind kind) {
  CellId c;
  if (!free_cells_.empty()) {
    c = free_cells_.back();
    free_cells_.pop_back();
  } else {
    c = static_cast<CellId>(cells_.size());
    cells_.emplace_back();
  }
  Cell& cell = cell_mut(c);
  cell = Cell{};
  cell.site = s;
  cell.kind = kind;
  cell.live = true;
  return c;
}

CellId Diagram::new_part_cell(const Site& site) { return add_cell(site, CellKind::kPart); }

void Diagram::register_site_cell(CellId c) {
  Cell& cell = cell_mut(c);
  if (site_to_cell_.count(cell.site.id) != 0) throw StructureError("site registered twice");
  cell.kind = CellKind::kReal;
  site_to_cell_[cell.site.id] = c;
  site_order_.push_back(c);
}

void Diagram::retire_cell(CellId c) {
  Cell& cell = cell_mut(c);
  if (!cell.live) throw StructureError("retire of dead cell");
  if (cell.kind != CellKind::kPart) throw StructureError("only partial cells can be retired");
  cell.live = false;
  cell.root = kNoNode;
  free_cells_.push_back(c);
}

std::optional<CellId> Diagram::cell_of_site(SiteId id) const {
  auto it = site_to_cell_.find(id);
  if (it == site_to_cell_.end()) return std::nullopt;
  return it->second;
}

VertexId Diagram::new_vertex() {
  VertexId v;
  if (!free_vertices_.empty()) {
    v = free_vertices_.back();
    free_vertices_.pop_back();
  } else {
    v = static_cast<VertexId>(vertices_.size());
    vertices_.emplace_back();
  }
  vertices_[static_cast<std::size_t>(v)] = Vertex{};
  vertices_[static_cast<std::size_t>(v)].live = true;
  ++live_vertices_;
  return v;
}

void Diagram::free_vertex(VertexId v) {
  if (on_vertex_removed) on_vertex_removed(v);
  vertices_[static_cast<std::size_t>(v)].live = false;
  free_vertices_.push_back(v);
  --live_vertices_;
}

void Diagram::set_root(CellId c, NodeId root) {
  cell_mut(c).root = root;
  if (root != kNoNode) forest_.set_owner(root, c);
}

void Diagram::refresh_root(CellId c, NodeId any_node) { set_root(c, forest_.root_of(any_node)); }

bool Diagram::adjacent(VertexId a, VertexId b) const {
  const Vertex& va = vertex(a);
  for (int i = 0; i < va.deg; ++i) {
    if (va.nbr[static_cast<std::size_t>(i)] == b) return true;
  }
  return false;
}

int Diagram::slot_of_nbr(VertexId v, VertexId w) const {
  const Vertex& x = vertex(v);
  for (int i = 0; i < x.deg; ++i) {
    if (x.nbr[static_cast<std::size_t>(i)] == w) return i;
  }
  throw StructureError("vertices " + vid(v) + " and " + vid(w) + " are not adjacent");
}

int Diagram::slot_of_cell(VertexId v, CellId c) const {
  const Vertex& x = vertex(v);
  for (int i = 0; i < x.deg; ++i) {
    if (owner_cell(x.node[static_cast<std::size_t>(i)]) == c) return i;
  }
  throw StructureError("vertex " + vid(v) + " is not on cell " + std::to_string(c));
}

NodeId Diagram::node_in(VertexId v, CellId c) const {
  return vertex(v).node[static_cast<std::size_t>(slot_of_cell(v, c))];
}

std::array<CellId, 3> Diagram::vertex_cells(VertexId v) const {
  const Vertex& x = vertex(v);
  std::array<CellId, 3> out{kNoCell, kNoCell, kNoCell};
  for (int i = 0; i < x.deg; ++i) out[static_cast<std::size_t>(i)] = owner_cell(x.node[static_cast<std::size_t>(i)]);
  return out;
}

SiteTriple Diagram::vertex_triple(VertexId v) const {
  const Vertex& x = vertex(v);
  if (!x.live || x.deg != 3 || x.infinite) {
    throw StructureError("vertex_triple of vertex " + vid(v) + " with degree " + std::to_string(x.deg));
  }
  auto cs = vertex_cells(v);
  return SiteTriple(cell(cs[0]).site, cell(cs[1]).site, cell(cs[2]).site);
}

CircleSide Diagram::vertex_side(VertexId v, const Site& q) const {
  if (is_infinite(v)) return CircleSide::kOutside;
  return side_of_circle(vertex_triple(v), q);
}

std::int64_t Diagram::finite_vertex_count() const {
  if (infinity_ == kNoVertex) return 1;
  return live_vertices_ - 1;
}

std::int64_t Diagram::finite_edge_count() const {
  if (infinity_ == kNoVertex) return 0;
  std::int64_t degree_sum = 0;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const Vertex& x = vertices_[v];
    if (!x.live || x.infinite) continue;
    for (int i = 0; i < x.deg; ++i) {
      if (!is_infinite(x.nbr[static_cast<std::size_t>(i)])) ++degree_sum;
    }
  }
  return degree_sum / 2;
}

CellId Diagram::across(NodeId n) const {
  VertexId v = node_vertex(n);
  CellId c = owner_cell(n);
  const Vertex& x = vertex(v);
  int j = slot_of_cell(v, c);
  return owner_cell(x.node[static_cast<std::size_t>((j + x.deg - 1) % x.deg)]);
}

std::vector<std::pair<VertexId, VertexId>> Diagram::paws(CellId c) const {
  std::vector<std::pair<VertexId, VertexId>> out;
  NodeId root = cell(c).root;
  if (root == kNoNode) return out;
  forest_.for_each(root, [&](NodeId n) {
    VertexId b = node_vertex(n);
    const Vertex& x = vertex(b);
    if (x.deg != 3) throw StructureError("paws: boundary vertex of degree " + std::to_string(x.deg));
    int j = slot_of_cell(b, c);
    VertexId paw = x.nbr[static_cast<std::size_t>((j + 2) % 3)];
    if (!out.empty() && out.back().first == paw) return;
    out.emplace_back(paw, b);
  });
  if (out.size() > 1 && out.front().first == out.back().first) out.pop_back();
  return out;
}

VertexId Diagram::subdivide(VertexId a, VertexId b) {
  int sa = slot_of_nbr(a, b);
  int sb = slot_of_nbr(b, a);
  Vertex& va = vertices_[static_cast<std::size_t>(a)];
  NodeId a_f1 = va.node[static_cast<std::size_t>(sa)];  // face where a -> b
  NodeId b_f2 = vertex(b).node[static_cast<std::size_t>(sb)];  // face where b -> a
  CellId f1 = owner_cell(a_f1);
  CellId f2 = owner_cell(b_f2);

  VertexId x = new_vertex();
  NodeId x0 = forest_.make(x);
  NodeId x1 = forest_.make(x);
  bool g1 = forest_.gamma(a_f1);
  bool g2 = forest_.gamma(b_f2);
  set_root(f1, forest_.insert_after(a_f1, x0));
  set_root(f2, forest_.insert_after(b_f2, x1));
  forest_.set_gamma(x0, g1);
  forest_.set_gamma(x1, g2);

  Vertex& vx = vertices_[static_cast<std::size_t>(x)];
  vx.deg = 2;
  vx.nbr = {b, a, kNoVertex};
  vx.node = {x0, x1, kNoNode};
  vertices_[static_cast<std::size_t>(a)].nbr[static_cast<std::size_t>(sa)] = x;
  vertices_[static_cast<std::size_t>(b)].nbr[static_cast<std::size_t>(sb)] = x;
  touch(a);
  touch(b);
  touch(x);
  touch_cell(f1);
  touch_cell(f2);
  return x;
}

void Diagram::smooth(VertexId x) {
  const Vertex vx = vertex(x);
  if (!vx.live || vx.deg != 2) {
    throw StructureError("smooth of vertex " + vid(x) + " with degree " + std::to_string(vx.deg));
  }
  VertexId p = vx.nbr[0];
  VertexId q = vx.nbr[1];
  if (p == q || adjacent(p, q)) throw StructureError("smooth would create a multi-edge at " + vid(x));
  int ip = slot_of_nbr(p, x);
  int iq = slot_of_nbr(q, x);
  vertices_[static_cast<std::size_t>(p)].nbr[static_cast<std::size_t>(ip)] = q;
  vertices_[static_cast<std::size_t>(q)].nbr[static_cast<std::size_t>(iq)] = p;
  for (int i = 0; i < 2; ++i) {
    NodeId n = vx.node[static_cast<std::size_t>(i)];
    CellId c = owner_cell(n);
    if (forest_.block(n) != kNoBlock) forest_.set_block(n, kNoBlock);
    NodeId root = forest_.detach(n);
    forest_.release(n);
    set_root(c, root);
    touch_cell(c);
  }
  free_vertex(x);
  touch(p);
  touch(q);
}

CellId Diagram::link(VertexId u, VertexId v, CellId face) {
  if (u == v) throw StructureError("link of a vertex to itself");
  if (adjacent(u, v)) throw StructureError("link of adjacent vertices " + vid(u) + ", " + vid(v));
  const Vertex vu = vertex(u);
  const Vertex vv = vertex(v);
  if (vu.deg != 2 || vv.deg != 2) throw StructureError("link needs two degree-2 vertices");
  if (face == kNoCell) {
    auto cu = vertex_cells(u);
    auto cv = vertex_cells(v);
    for (int i = 0; i < 2 && face == kNoCell; ++i) {
      for (int k = 0; k < 2; ++k) {
        if (cu[static_cast<std::size_t>(i)] == cv[static_cast<std::size_t>(k)]) {
          face = cu[static_cast<std::size_t>(i)];
          break;
        }
      }
    }
    if (face == kNoCell) throw StructureError("link: vertices share no face");
  }
  int ju = slot_of_cell(u, face);
  int jv = slot_of_cell(v, face);
  NodeId u_f = vu.node[static_cast<std::size_t>(ju)];
  NodeId v_f = vv.node[static_cast<std::size_t>(jv)];
  NodeId u_g = vu.node[static_cast<std::size_t>(1 - ju)];
  NodeId v_g = vv.node[static_cast<std::size_t>(1 - jv)];
  VertexId p = vu.nbr[static_cast<std::size_t>(ju)];       // succ(u) in face
  VertexId q = vu.nbr[static_cast<std::size_t>(1 - ju)];   // pred(u) in face
  VertexId p2 = vv.nbr[static_cast<std::size_t>(jv)];      // succ(v)
  VertexId q2 = vv.nbr[static_cast<std::size_t>(1 - jv)];  // pred(v)

  NodeId q_node = forest_.prev_cyclic(u_f);
  // Side A: u -> p -> ... -> v -> u, carries the original nodes of u and v.
  auto [rest, range] = forest_.cut_range(u_f, v_f);
  if (rest == kNoNode) throw StructureError("link: degenerate face");
  CellId part = new_part_cell(cell(face).site);
  set_root(part, range);
  NodeId u_new = forest_.make(u);
  NodeId v_new = forest_.make(v);
  set_root(face, rest);
  set_root(face, forest_.insert_after(q_node, u_new));
  set_root(face, forest_.insert_after(u_new, v_new));

  Vertex& nu = vertices_[static_cast<std::size_t>(u)];
  nu.deg = 3;
  nu.nbr = {p, v, q};
  nu.node = {u_f, u_new, u_g};
  Vertex& nv = vertices_[static_cast<std::size_t>(v)];
  nv.deg = 3;
  nv.nbr = {p2, u, q2};
  nv.node = {v_new, v_f, v_g};
  ++log_.links;
  touch(u);
  touch(v);
  touch_cell(face);
  touch_cell(part);
  return part;
}

CellId Diagram::cut(VertexId u, VertexId v, CellId keep) {
  int su = slot_of_nbr(u, v);
  int sv = slot_of_nbr(v, u);
  const Vertex vu = vertex(u);
  const Vertex vv = vertex(v);
  if (vu.deg != 3 || vv.deg != 3) throw StructureError("cut needs degree-3 endpoints");
  auto rot = [](int s) {
    std::array<int, 3> idx{s, (s + 1) % 3, (s + 2) % 3};
    return idx;
  };
  auto iu = rot(su);
  auto iv = rot(sv);
  NodeId k0 = vu.node[static_cast<std::size_t>(iu[0])];  // F1, u -> v
  NodeId k1 = vu.node[static_cast<std::size_t>(iu[1])];
  NodeId k2 = vu.node[static_cast<std::size_t>(iu[2])];  // F2, v -> u
  NodeId l0 = vv.node[static_cast<std::size_t>(iv[0])];  // F2, v -> u
  NodeId l1 = vv.node[static_cast<std::size_t>(iv[1])];
  NodeId l2 = vv.node[static_cast<std::size_t>(iv[2])];  // F1, u -> v
  CellId f1 = owner_cell(k0);
  CellId f2 = owner_cell(k2);
  if (f1 == f2) throw StructureError("cut of a bridge " + vid(u) + "-" + vid(v));
  if (keep == kNoCell) keep = f1;
  if (keep != f1 && keep != f2) throw StructureError("cut: keep cell is not incident");
  CellId gone = keep == f1 ? f2 : f1;
  if (cell(gone).kind != CellKind::kPart) throw StructureError("cut would delete a site cell");

  forest_.rotate_to_front(k0);
  NodeId r1 = forest_.detach(k0);
  r1 = forest_.detach(l2);
  bool l2_gamma = forest_.gamma(l2);
  for (NodeId dead : {k0, l2}) {
    if (forest_.block(dead) != kNoBlock) forest_.set_block(dead, kNoBlock);
    forest_.release(dead);
  }
  // r1 now holds F1 minus u and v, starting at succ(v).
  NodeId r2 = forest_.rotate_to_front(k2);
  NodeId merged = forest_.join(r2, r1);
  forest_.set_gamma(l0, l2_gamma);
  merged = forest_.root_of(l0);
  set_root(keep, merged);
  cell_mut(gone).root = kNoNode;
  retire_cell(gone);

  Vertex& nu = vertices_[static_cast<std::size_t>(u)];
  nu.deg = 2;
  nu.nbr = {vu.nbr[static_cast<std::size_t>(iu[1])], vu.nbr[static_cast<std::size_t>(iu[2])], kNoVertex};
  nu.node = {k1, k2, kNoNode};
  Vertex& nv = vertices_[static_cast<std::size_t>(v)];
  nv.deg = 2;
  nv.nbr = {vv.nbr[static_cast<std::size_t>(iv[1])], vv.nbr[static_cast<std::size_t>(iv[2])], kNoVertex};
  nv.node = {l1, l0, kNoNode};
  ++log_.cuts;
  touch(u);
  touch(v);
  touch_cell(keep);
  return keep;
}

void Diagram::split_range(CellId f, NodeId first_node, NodeId last_node, CellId g) {
  if (owner_cell(first_node) != f || owner_cell(last_node) != f) {
    throw StructureError("split_range: handles not in cell " + std::to_string(f));
  }
  auto [rest, range] = forest_.cut_range(first_node, last_node);
  set_root(f, rest);
  set_root(g, forest_.join(cell(g).root, range));
  touch_cell(f);
  touch_cell(g);
}

CellId Diagram::merge_boundaries(CellId f, CellId g, VertexId a, VertexId b) {
  if (!adjacent(a, b)) throw StructureError("merge_boundaries: no edge between given vertices");
  int sa = slot_of_nbr(a, b);
  const Vertex& va = vertex(a);
  CellId c1 = owner_cell(va.node[static_cast<std::size_t>(sa)]);
  CellId c2 = owner_cell(va.node[static_cast<std::size_t>((sa + 2) % 3)]);
  if (!((c1 == f && c2 == g) || (c1 == g && c2 == f))) {
    throw StructureError("merge_boundaries: cells are not adjacent along the edge");
  }
  return cut(a, b, f);
}

void Diagram::bootstrap(const Site& first) {
  auto s = sentinel_sites();
  // Vertices: 0 = (S0,S1,r), 1 = (S1,S2,r), 2 = (S2,S0,r), 3 = infinity.
  std::vector<Site> sites{s[0], s[1], s[2], first};
  std::vector<std::vector<VertexId>> cycles{{0, 2, 3}, {1, 0, 3}, {2, 1, 3}, {0, 1, 2}};
  build_from_faces(sites, cycles, 3);
  // Combinatorially this is one link across the sentinel star.
  ++log_.links;
}

void Diagram::build_from_faces(const std::vector<Site>& sites,
                               const std::vector<std::vector<VertexId>>& cycles,
                               VertexId infinite_label) {
  if (sites.size() != cycles.size() || sites.size() < 4) throw StructureError("build_from_faces: bad input");
  auto sent = sentinel_sites();
  for (int i = 0; i < 3; ++i) {
    if (!(sites[static_cast<std::size_t>(i)] == sent[static_cast<std::size_t>(i)])) {
      throw StructureError("build_from_faces: first three sites must be the sentinels");
    }
  }
  vertices_.clear();
  free_vertices_.clear();
  cells_.clear();
  free_cells_.clear();
  site_to_cell_.clear();
  site_order_.clear();
  forest_ = BoundaryForest();
  live_vertices_ = 0;

  VertexId max_label = infinite_label;
  for (const auto& cyc : cycles) {
    for (VertexId v : cyc) max_label = std::max(max_label, v);
  }
  for (VertexId v = 0; v <= max_label; ++v) new_vertex();
  infinity_ = infinite_label;
  vertices_[static_cast<std::size_t>(infinity_)].infinite = true;

  struct SlotRec {
    VertexId succ, pred;
    NodeId node;
  };
  std::vector<std::vector<SlotRec>> recs(static_cast<std::size_t>(max_label) + 1);
  for (std::size_t i = 0; i < sites.size(); ++i) {
    CellId c = add_cell(sites[i], i < 3 ? CellKind::kSentinel : CellKind::kReal);
    if (i < 3) cell_mut(c).big = true;
    if (site_to_cell_.count(sites[i].id) != 0) throw StructureError("duplicate site id in build");
    site_to_cell_[sites[i].id] = c;
    site_order_.push_back(c);
    const auto& cyc = cycles[i];
    NodeId root = kNoNode;
    const std::size_t k = cyc.size();
    for (std::size_t j = 0; j < k; ++j) {
      NodeId n = forest_.make(cyc[j]);
      root = forest_.join(root, n);
      recs[static_cast<std::size_t>(cyc[j])].push_back(SlotRec{cyc[(j + 1) % k], cyc[(j + k - 1) % k], n});
    }
    set_root(c, root);
  }
  for (VertexId v = 0; v <= max_label; ++v) {
    auto& r = recs[static_cast<std::size_t>(v)];
    if (r.size() != 3) throw StructureError("build_from_faces: vertex " + vid(v) + " is not on three faces");
    Vertex& x = vertices_[static_cast<std::size_t>(v)];
    x.deg = 3;
    // slot j: succ = nbr[j], pred = nbr[j+1]
    x.nbr[0] = r[0].succ;
    x.nbr[1] = r[0].pred;
    x.node[0] = r[0].node;
    for (int j = 1; j < 3; ++j) {
      auto it = std::find_if(r.begin(), r.end(), [&](const SlotRec& s) { return s.succ == x.nbr[static_cast<std::size_t>(j)]; });
      if (it == r.end()) throw StructureError("build_from_faces: inconsistent rotation at " + vid(v));
      x.node[static_cast<std::size_t>(j)] = it->node;
      if (j == 1) x.nbr[2] = it->pred;
    }
  }
}

CanonicalGraph Diagram::canonical() const {
  CanonicalGraph g;
  if (infinity_ == kNoVertex) {
    auto s = sentinel_sites();
    g.vertices.push_back(SiteTriple(s[0], s[1], s[2]).key());
    g.site_pairs = {{s[0].id, s[1].id}, {s[0].id, s[2].id}, {s[1].id, s[2].id}};
    std::sort(g.site_pairs.begin(), g.site_pairs.end());
    return g;
  }
  std::vector<SiteTriple::Key> keys(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const Vertex& x = vertices_[v];
    if (!x.live || x.infinite) continue;
    keys[v] = vertex_triple(static_cast<VertexId>(v)).key();
    g.vertices.push_back(keys[v]);
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const Vertex& x = vertices_[v];
    if (!x.live) continue;
    for (int j = 0; j < x.deg; ++j) {
      VertexId w = x.nbr[static_cast<std::size_t>(j)];
      if (w < static_cast<VertexId>(v)) continue;
      SiteId a = cell(owner_cell(x.node[static_cast<std::size_t>(j)])).site.id;
      SiteId b = cell(owner_cell(x.node[static_cast<std::size_t>((j + x.deg - 1) % x.deg)])).site.id;
      g.site_pairs.emplace_back(std::min(a, b), std::max(a, b));
      if (x.infinite || is_infinite(w)) continue;
      auto ka = keys[v];
      auto kb = keys[static_cast<std::size_t>(w)];
      g.edges.emplace_back(std::min(ka, kb), std::max(ka, kb));
    }
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  std::sort(g.edges.begin(), g.edges.end());
  std::sort(g.site_pairs.begin(), g.site_pairs.end());
  return g;
}

std::string Diagram::check_structure() const {
  std::ostringstream err;
  if (infinity_ == kNoVertex) return {};
  std::int64_t degree_sum = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vertex& x = vertices_[i];
    if (!x.live) continue;
    VertexId v = static_cast<VertexId>(i);
    if (x.deg != 3) {
      err << "vertex " << v << " has degree " << x.deg << "\n";
      continue;
    }
    degree_sum += 3;
    std::set<CellId> cs;
    for (int j = 0; j < 3; ++j) {
      VertexId w = x.nbr[static_cast<std::size_t>(j)];
      NodeId n = x.node[static_cast<std::size_t>(j)];
      if (!vertex_live(w) || !adjacent(w, v)) err << "vertex " << v << " has bad neighbor " << w << "\n";
      if (!forest_.live(n) || forest_.node(n).vertex != v) {
        err << "vertex " << v << " slot " << j << " has a bad node\n";
        continue;
      }
      CellId c = owner_cell(n);
      if (c == kNoCell || !cell(c).live || cell(c).kind == CellKind::kPart) err << "vertex " << v << " on bad cell\n";
      cs.insert(c);
      NodeId s = forest_.next_cyclic(n);
      NodeId p = forest_.prev_cyclic(n);
      if (forest_.node(s).vertex != w) err << "vertex " << v << " slot " << j << " successor mismatch\n";
      if (forest_.node(p).vertex != x.nbr[static_cast<std::size_t>((j + 1) % 3)]) {
        err << "vertex " << v << " slot " << j << " predecessor mismatch\n";
      }
    }
    if (cs.size() != 3) err << "vertex " << v << " is not on three distinct cells\n";
  }
  std::int64_t size_sum = 0;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    const Cell& cell_ref = cells_[c];
    if (!cell_ref.live) continue;
    if (cell_ref.kind == CellKind::kPart) {
      err << "leftover partial cell " << c << "\n";
      continue;
    }
    if (cell_ref.root == kNoNode) {
      err << "cell " << c << " has no boundary\n";
      continue;
    }
    if (!forest_.check(cell_ref.root)) err << "cell " << c << " tree is malformed\n";
    if (forest_.node(cell_ref.root).owner != static_cast<CellId>(c)) err << "cell " << c << " root owner mismatch\n";
    size_sum += forest_.size(cell_ref.root);
  }
  if (size_sum != degree_sum) err << "sum of cell sizes " << size_sum << " != 2E " << degree_sum << "\n";
  const std::int64_t n = site_count();
  if (finite_vertex_count() != 2 * n - 5) err << "V=" << finite_vertex_count() << " expected " << 2 * n - 5 << "\n";
  if (finite_edge_count() != 3 * n - 9) err << "E=" << finite_edge_count() << " expected " << 3 * n - 9 << "\n";
  return err.str();
}

}  // namespace ivd
