#include "ivd/engine.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "ivd/errors.hpp"

namespace ivd {

namespace {

bool has_cell(const std::array<CellId, 3>& cs, CellId c) { return std::find(cs.begin(), cs.end(), c) != cs.end(); }

CircleSide checked_side(const Diagram& d, VertexId v, const Site& s) {
  CircleSide side = d.vertex_side(v, s);
  if (side == CircleSide::kOn) {
    throw DegeneracyError("site " + std::to_string(s.id) + " (" + std::to_string(s.x) + "," + std::to_string(s.y) +
                          ") is cocircular with the sites of a Voronoi vertex");
  }
  return side;
}

VertexId paw_at(const Diagram& d, CellId f, VertexId b) {
  int j = d.slot_of_cell(b, f);
  return d.vertex(b).nbr[static_cast<std::size_t>((j + 2) % 3)];
}

}  // namespace

VoronoiEngine::VoronoiEngine(Coord coord_bound) : index_(diagram_), coord_bound_(coord_bound) {
  if (coord_bound <= 0 || coord_bound > kCoordBound) {
    throw InputError("coordinate bound must lie in [1, " + std::to_string(kCoordBound) + "]");
  }
  for (const Site& s : sentinel_sites()) nn_.insert(s);
  index_.initialize();
  diagram_.on_vertex_touched = [this](VertexId v) { dirty_.push_back(v); };
  diagram_.on_cell_touched = [this](CellId c) { touched_cells_.push_back(c); };
}

bool VoronoiEngine::on_curve_side(VertexId v) const {
  return static_cast<std::size_t>(v) < stamp_.size() && stamp_[static_cast<std::size_t>(v)] == epoch_;
}

void VoronoiEngine::mark_curve_side(VertexId v) {
  if (stamp_.size() <= static_cast<std::size_t>(v)) stamp_.resize(static_cast<std::size_t>(v) * 2 + 16, 0);
  stamp_[static_cast<std::size_t>(v)] = epoch_;
}

void VoronoiEngine::validate(const Site& s) const {
  if (s.x < -coord_bound_ || s.x > coord_bound_ || s.y < -coord_bound_ || s.y > coord_bound_) {
    throw InputError("site (" + std::to_string(s.x) + "," + std::to_string(s.y) + ") exceeds coordinate bound " +
                     std::to_string(coord_bound_));
  }
  if (s.id < 0 || diagram_.cell_of_site(s.id)) throw InputError("site id " + std::to_string(s.id) + " is in use");
  if (nn_.contains(s.x, s.y)) {
    throw DuplicateSiteError("duplicate site (" + std::to_string(s.x) + "," + std::to_string(s.y) + ")");
  }
}

CellId VoronoiEngine::locate_start_cell(const Site& s) const {
  const Site& near = nn_.nearest(s.x, s.y);
  auto c = diagram_.cell_of_site(near.id);
  if (!c) throw StructureError("nearest site has no cell");
  return *c;
}

VertexId VoronoiEngine::find_seed(CellId f, const Site& s) const {
  VertexId found = kNoVertex;
  for (VertexId v : diagram_.boundary(f)) {
    if (checked_side(diagram_, v, s) == CircleSide::kInside && found == kNoVertex) found = v;
  }
  if (found == kNoVertex) throw StructureError("start cell has no vertex enclosing the new site");
  return found;
}

InsideRange VoronoiEngine::find_inside_range(CellId f, VertexId seed, const Site& s) const {
  const Diagram& d = diagram_;
  if (checked_side(d, seed, s) != CircleSide::kInside) {
    throw StructureError("seed vertex " + std::to_string(seed) + " does not enclose the new site");
  }
  const NodeId n0 = d.node_in(seed, f);
  const int size = d.cell_size(f);
  InsideRange r;
  r.cell = f;
  std::vector<VertexId> fwd, bwd;
  int seen = 1;
  NodeId n = d.succ(n0);
  for (;; n = d.succ(n)) {
    VertexId v = d.node_vertex(n);
    if (checked_side(d, v, s) != CircleSide::kInside) {
      r.w = v;
      break;
    }
    if (++seen >= size) throw StructureError("every vertex of cell " + std::to_string(f) + " encloses the new site");
    fwd.push_back(v);
  }
  for (n = d.pred(n0);; n = d.pred(n)) {
    VertexId v = d.node_vertex(n);
    if (checked_side(d, v, s) != CircleSide::kInside) {
      r.u = v;
      break;
    }
    if (++seen >= size) throw StructureError("every vertex of cell " + std::to_string(f) + " encloses the new site");
    bwd.push_back(v);
  }
  r.run.assign(bwd.rbegin(), bwd.rend());
  r.run.push_back(seed);
  r.run.insert(r.run.end(), fwd.begin(), fwd.end());
  r.left = d.across(d.node_in(r.u, f));
  r.right = d.across(d.node_in(r.run.back(), f));
  return r;
}

std::vector<Seeded> VoronoiEngine::recognize_small(CellId f, const Site& s) const {
  const Diagram& d = diagram_;
  std::vector<Seeded> out;
  for (const auto& [paw, b] : d.paws(f)) {
    if (checked_side(d, paw, s) != CircleSide::kInside) continue;
    auto around_b = d.vertex_cells(b);
    for (CellId c : d.vertex_cells(paw)) {
      if (c == f || !has_cell(around_b, c) || d.cell(c).big) continue;
      Seeded x{c, paw};
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
  }
  return out;
}

std::vector<Seeded> VoronoiEngine::recognize_big(CellId f, const Site& s, const InsideRange* range) const {
  const Diagram& d = diagram_;
  std::vector<Seeded> out;
  auto offer = [&](VertexId paw, VertexId attach) {
    auto around = d.vertex_cells(attach);
    for (CellId c : d.vertex_cells(paw)) {
      if (c == f || !has_cell(around, c) || d.cell(c).big) continue;
      Seeded x{c, paw};
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
  };
  for (BlockId b : index_.blocks_of(f)) {
    for (const DcrEntry& e : index_.block(b).dcr.report(s)) offer(e.paw, e.attach);
  }
  if (range != nullptr) {
    std::vector<VertexId> ends;
    if (range->left != kNoCell && !d.cell(range->left).big) {
      ends.push_back(range->u);
      ends.push_back(range->run.front());
    }
    if (range->right != kNoCell && !d.cell(range->right).big) {
      ends.push_back(range->run.back());
      ends.push_back(range->w);
    }
    for (VertexId b : ends) {
      VertexId p = paw_at(d, f, b);
      if (checked_side(d, p, s) == CircleSide::kInside) offer(p, b);
    }
  }
  return out;
}

std::vector<VoronoiEngine::Plan> VoronoiEngine::recognize(const Site& s, std::vector<VertexId>& inside) {
  const Diagram& d = diagram_;
  const CellId start = locate_start_cell(s);
  std::unordered_map<CellId, VertexId> seed;
  std::unordered_set<CellId> processed, queued, scanned;
  std::deque<CellId> q;
  seed[start] = find_seed(start, s);
  q.push_back(start);
  queued.insert(start);
  for (CellId c : index_.big_cells()) {
    if (queued.insert(c).second) q.push_back(c);
  }
  auto offer = [&](CellId c, VertexId v) {
    if (processed.count(c) != 0) return;
    seed.emplace(c, v);
    if (queued.insert(c).second) q.push_back(c);
  };

  std::vector<Plan> plans;
  while (!q.empty()) {
    CellId c = q.front();
    q.pop_front();
    queued.erase(c);
    if (processed.count(c) != 0) continue;
    auto it = seed.find(c);
    if (it == seed.end()) {
      // A big cell nothing has reached yet: query its blocks once and wait.
      if (scanned.insert(c).second) {
        for (const Seeded& x : recognize_big(c, s, nullptr)) offer(x.cell, x.seed);
      }
      continue;
    }
    InsideRange r = find_inside_range(c, it->second, s);
    processed.insert(c);
    plans.push_back(Plan{c, r.u, r.w});
    for (VertexId v : r.run) {
      if (!on_curve_side(v)) {
        mark_curve_side(v);
        inside.push_back(v);
      }
      for (CellId other : d.vertex_cells(v)) {
        if (other != c) offer(other, v);
      }
    }
    const bool big = d.cell(c).big;
    for (const Seeded& x : big ? recognize_big(c, s, &r) : recognize_small(c, s)) offer(x.cell, x.seed);
  }
  return plans;
}

CellEdit VoronoiEngine::process_big(const Plan& p) {
  if (!diagram_.cell(p.cell).big) throw StructureError("process_big on a small cell");
  return process_cell(p);
}

CellEdit VoronoiEngine::process_small(const Plan& p) {
  if (diagram_.cell(p.cell).big) throw StructureError("process_small on a big cell");
  return process_cell(p);
}

CellEdit VoronoiEngine::process_cell(const Plan& p) {
  Diagram& d = diagram_;
  const CellId f = p.cell;
  const ChangeLog before = d.change_log();

  std::vector<VertexId> portion;
  const int limit = d.cell_size(f);
  for (NodeId n = d.succ(d.node_in(p.u, f)); d.node_vertex(n) != p.w; n = d.succ(n)) {
    VertexId v = d.node_vertex(n);
    if (!on_curve_side(v) || static_cast<int>(portion.size()) > limit) {
      throw StructureError("cell " + std::to_string(f) + ": unexpected vertex " + std::to_string(v) + " in inside range");
    }
    portion.push_back(v);
  }
  if (portion.empty()) throw StructureError("cell " + std::to_string(f) + ": empty inside range");

  auto is_part = [&](CellId c) { return d.cell(c).kind == CellKind::kPart; };
  if (portion.size() == 2 && is_part(d.across(d.node_in(portion[0], f)))) {
    // The edge between the two already lies on the new cell: nothing to do.
    return CellEdit{f, 0, 0};
  }

  const VertexId x1 = d.subdivide(p.u, portion.front());
  mark_curve_side(x1);
  const VertexId x2 = d.subdivide(portion.back(), p.w);
  mark_curve_side(x2);
  const CellId part = d.link(x1, x2, f);
  d.set_cell_site(part, current_);
  parts_.push_back(part);
  if (d.cell(f).big) index_.gamma_split(f, part, x1, x2);

  // Merge with neighbouring parts across the old boundary between x1 and x2.
  NodeId cur = d.node_in(x1, part);
  while (d.node_vertex(cur) != x2) {
    const NodeId nxt = d.succ(cur);
    const VertexId a = d.node_vertex(cur);
    const VertexId b = d.node_vertex(nxt);
    const CellId other = d.across(cur);
    if (!is_part(other) || other == part) {
      cur = nxt;
      continue;
    }
    d.cut(a, b, part);
    parts_.erase(std::find(parts_.begin(), parts_.end(), other));
    if (d.vertex(b).deg == 2) {
      if (b == x2) throw StructureError("cut isolated a curve vertex");
      cur = d.pred(d.node_in(b, part));
      d.smooth(b);
    } else {
      cur = d.node_in(b, part);
    }
    if (d.vertex(a).deg == 2) {
      if (a == x1) throw StructureError("cut isolated a curve vertex");
      d.smooth(a);
    }
  }
  const ChangeLog& after = d.change_log();
  return CellEdit{f, after.links - before.links, after.cuts - before.cuts};
}

InsertionStats VoronoiEngine::insert_site(const Site& s) {
  const auto t0 = std::chrono::steady_clock::now();
  validate(s);
  const ChangeLog log0 = diagram_.change_log();
  InsertionStats st;
  last_edits_.clear();

  if (diagram_.infinity() == kNoVertex) {
    diagram_.bootstrap(s);
    index_.initialize();
    st.cells_changed = 3;
    st.dcr_rebuilds = index_.rebuild_count();
  } else {
    ++epoch_;
    dirty_.clear();
    touched_cells_.clear();
    parts_.clear();
    current_ = s;
    std::vector<VertexId> inside;
    std::vector<Plan> plans = recognize(s, inside);

    for (const Plan& p : plans) {
      last_edits_.push_back(diagram_.cell(p.cell).big ? process_big(p) : process_small(p));
    }
    if (parts_.size() != 1) {
      throw StructureError("insertion left " + std::to_string(parts_.size()) + " partial cells");
    }
    const CellId fresh = parts_.front();
    diagram_.register_site_cell(fresh);
    dirty_.insert(dirty_.end(), inside.begin(), inside.end());
    st.cells_changed = static_cast<std::int64_t>(plans.size());
    st.dcr_rebuilds = index_.finish_insertion(dirty_, touched_cells_, fresh);
  }
  nn_.insert(s);
  sites_.push_back(s);
  st.n = static_cast<std::int64_t>(sites_.size());
  st.links = diagram_.change_log().links - log0.links;
  st.cuts = diagram_.change_log().cuts - log0.cuts;
  st.time_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count();
  return st;
}

void VoronoiEngine::restore(const std::vector<Site>& sites, const std::vector<std::vector<VertexId>>& cycles,
                            VertexId infinite_label) {
  for (std::size_t i = 3; i < sites.size(); ++i) {
    const Site& s = sites[i];
    if (s.x < -coord_bound_ || s.x > coord_bound_ || s.y < -coord_bound_ || s.y > coord_bound_) {
      throw InputError("restored site " + std::to_string(s.id) + " exceeds the coordinate bound");
    }
  }
  NnIndex nn;
  for (const Site& s : sites) nn.insert(s);
  diagram_ = Diagram();
  if (sites.size() > 3) diagram_.build_from_faces(sites, cycles, infinite_label);
  diagram_.on_vertex_touched = [this](VertexId v) { dirty_.push_back(v); };
  diagram_.on_cell_touched = [this](CellId c) { touched_cells_.push_back(c); };
  index_ = BigCellIndex(diagram_);
  index_.initialize();
  nn_ = std::move(nn);
  sites_.assign(sites.begin() + 3, sites.end());
  stamp_.clear();
  last_edits_.clear();
}

std::string VoronoiEngine::check_invariants() const {
  std::string err = diagram_.check_structure();
  err += index_.check();
  return err;
}

}  // namespace ivd
