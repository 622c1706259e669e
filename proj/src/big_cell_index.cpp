#include "ivd/big_cell_index.hpp"

#include <algorithm>
#include <sstream>

#include "ivd/errors.hpp"

namespace ivd {

void Dcr::insert(const DcrEntry& e) {
  if (contains(e.paw)) throw StructureError("paw " + std::to_string(e.paw) + " already in DCR");
  entries_.push_back(e);
}

void Dcr::erase(VertexId paw) {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const DcrEntry& e) { return e.paw == paw; });
  if (it == entries_.end()) throw StructureError("paw " + std::to_string(paw) + " not in DCR");
  *it = entries_.back();
  entries_.pop_back();
}

bool Dcr::contains(VertexId paw) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const DcrEntry& e) { return e.paw == paw; });
}

std::vector<DcrEntry> Dcr::report(const Site& q) const {
  std::vector<DcrEntry> out;
  for (const DcrEntry& e : entries_) {
    CircleSide side = side_of_circle(e.triple, q);
    if (side == CircleSide::kOn) {
      throw DegeneracyError("site " + std::to_string(q.id) + " is cocircular with paw " + std::to_string(e.paw));
    }
    if (side == CircleSide::kInside) out.push_back(e);
  }
  return out;
}

bool paw_relevant(const Diagram& d, VertexId paw) {
  if (d.is_infinite(paw)) return false;
  for (CellId c : d.vertex_cells(paw)) {
    if (c == kNoCell || d.cell(c).big) return false;
  }
  return true;
}

void dcr_insert(Dcr& dcr, const Diagram& d, VertexId paw, VertexId attach) {
  if (!d.vertex_live(paw) || d.vertex(paw).deg != 3) throw StructureError("dcr_insert: stale paw");
  if (!paw_relevant(d, paw)) throw StructureError("dcr_insert: paw " + std::to_string(paw) + " touches a big cell");
  dcr.insert(DcrEntry{paw, attach, d.vertex_triple(paw)});
}

void dcr_delete(Dcr& dcr, VertexId paw) { dcr.erase(paw); }

std::vector<VertexId> dcr_report(const Dcr& dcr, const Site& q) {
  std::vector<VertexId> out;
  for (const DcrEntry& e : dcr.report(q)) out.push_back(e.paw);
  return out;
}

int BigCellIndex::threshold_for(std::int64_t site_count) {
  std::int64_t t = 1;
  while (t * t * t * t < site_count) ++t;
  return static_cast<int>(t);
}

bool BigCellIndex::want_mark(NodeId n) const {
  const Cell& c = d_->cell(d_->owner_cell(n));
  if (!c.big || c.kind == CellKind::kPart) return false;
  const Cell& a = d_->cell(d_->across(n));
  return a.big && a.kind != CellKind::kPart;
}

void BigCellIndex::set_big(CellId c, bool big) {
  d_->cell_mut(c).big = big;
  if (big) {
    big_.insert(c);
  } else {
    big_.erase(c);
  }
}

std::vector<GammaEdge> BigCellIndex::gamma_edges(CellId f) const {
  std::vector<GammaEdge> out;
  NodeId root = d_->cell(f).root;
  const BoundaryForest& fr = d_->forest();
  for (int i = 0; i < fr.marks(root); ++i) {
    NodeId n = fr.select_mark(root, i);
    out.push_back(GammaEdge{f, d_->across(n), d_->node_vertex(n), d_->node_vertex(d_->succ(n))});
  }
  return out;
}

void BigCellIndex::refresh_marks_at(VertexId v) {
  if (!d_->vertex_live(v)) return;
  BoundaryForest& fr = d_->forest_mut();
  const Vertex& x = d_->vertex(v);
  for (int j = 0; j < x.deg; ++j) {
    NodeId n = x.node[static_cast<std::size_t>(j)];
    fr.set_gamma(n, want_mark(n));
    NodeId p = d_->pred(n);
    fr.set_gamma(p, want_mark(p));
  }
}

void BigCellIndex::gamma_split(CellId f, CellId part, VertexId v1, VertexId v2) {
  if (big_.count(f) == 0) throw StructureError("gamma_split: cell " + std::to_string(f) + " is not big");
  (void)part;
  refresh_marks_at(v1);
  refresh_marks_at(v2);
}

void BigCellIndex::gamma_join(CellId f1, CellId f2, VertexId a, VertexId b) {
  if (big_.count(f1) == 0) throw StructureError("gamma_join: cell " + std::to_string(f1) + " is not big");
  (void)f2;
  refresh_marks_at(a);
  refresh_marks_at(b);
}

std::vector<BlockId> BigCellIndex::blocks_of(CellId f) const {
  std::vector<BlockId> out;
  NodeId root = d_->cell(f).root;
  const BoundaryForest& fr = d_->forest();
  for (int i = 0; i < fr.heads(root); ++i) out.push_back(fr.block(fr.select_head(root, i)));
  return out;
}

BlockId BigCellIndex::block_of_node(NodeId n) const {
  const BoundaryForest& fr = d_->forest();
  if (fr.block(n) != kNoBlock) return fr.block(n);
  NodeId root = fr.root_of(n);
  int total = fr.heads(root);
  if (total == 0) return kNoBlock;
  int before = fr.heads_before(n);
  return fr.block(fr.select_head(root, before == 0 ? total - 1 : before - 1));
}

std::vector<NodeId> BigCellIndex::block_range(BlockId b) const {
  const BoundaryForest& fr = d_->forest();
  NodeId head = block(b).head;
  std::vector<NodeId> out{head};
  for (NodeId n = fr.next_cyclic(head); n != head && fr.block(n) == kNoBlock; n = fr.next_cyclic(n)) {
    out.push_back(n);
  }
  return out;
}

std::vector<DcrEntry> BigCellIndex::collect(const std::vector<NodeId>& range) const {
  std::vector<DcrEntry> out;
  VertexId last_paw = kNoVertex;
  VertexId first_paw = kNoVertex;
  for (NodeId n : range) {
    VertexId b = d_->node_vertex(n);
    const Vertex& x = d_->vertex(b);
    int j = d_->slot_of_cell(b, d_->owner_cell(n));
    VertexId paw = x.nbr[static_cast<std::size_t>((j + 2) % 3)];
    if (first_paw == kNoVertex) first_paw = paw;
    if (paw == last_paw) continue;
    last_paw = paw;
    if (paw_relevant(*d_, paw)) out.push_back(DcrEntry{paw, b, d_->vertex_triple(paw)});
  }
  const bool whole = !range.empty() && static_cast<int>(range.size()) == d_->forest().size(d_->forest().root_of(range[0]));
  if (whole && out.size() > 1 && out.front().paw == out.back().paw) out.pop_back();
  return out;
}

BlockId BigCellIndex::new_block(CellId owner, NodeId head) {
  BlockId id;
  if (!free_blocks_.empty()) {
    id = free_blocks_.back();
    free_blocks_.pop_back();
  } else {
    id = static_cast<BlockId>(blocks_.size());
    blocks_.emplace_back();
  }
  DcrBlock& b = blocks_[static_cast<std::size_t>(id)];
  b = DcrBlock{};
  b.owner = owner;
  b.head = head;
  b.live = true;
  d_->forest_mut().set_block(head, id);
  cell_blocks_[owner].insert(id);
  return id;
}

void BigCellIndex::delete_block(BlockId id) {
  DcrBlock& b = blocks_[static_cast<std::size_t>(id)];
  if (!b.live) return;
  BoundaryForest& fr = d_->forest_mut();
  if (fr.live(b.head) && fr.block(b.head) == id) fr.set_block(b.head, kNoBlock);
  auto it = cell_blocks_.find(b.owner);
  if (it != cell_blocks_.end()) {
    it->second.erase(id);
    if (it->second.empty()) cell_blocks_.erase(it);
  }
  b.live = false;
  b.dcr.clear();
  free_blocks_.push_back(id);
}

void BigCellIndex::rebuild_block(BlockId id) {
  DcrBlock& b = blocks_[static_cast<std::size_t>(id)];
  b.dcr.clear();
  for (const DcrEntry& e : collect(block_range(id))) b.dcr.insert(e);
  ++rebuilds_;
}

void BigCellIndex::drop_chain(CellId f) {
  auto it = cell_blocks_.find(f);
  if (it != cell_blocks_.end()) {
    std::vector<BlockId> ids(it->second.begin(), it->second.end());
    for (BlockId b : ids) delete_block(b);
  }
  clear_foreign_heads(f);
}

void BigCellIndex::build_chain(CellId f) {
  drop_chain(f);
  NodeId root = d_->cell(f).root;
  if (root == kNoNode) return;
  const BoundaryForest& fr = d_->forest();
  const int size = fr.size(root);
  const int step = std::max(threshold_, 1);
  const int count = std::max(1, size / step);
  std::vector<NodeId> heads;
  for (int i = 0; i < count; ++i) heads.push_back(fr.select(root, static_cast<int>(static_cast<long>(i) * size / count)));
  std::vector<BlockId> ids;
  for (NodeId h : heads) ids.push_back(new_block(f, h));
  for (BlockId b : ids) rebuild_block(b);
}

void BigCellIndex::clear_foreign_heads(CellId c) {
  NodeId root = d_->cell(c).root;
  if (root == kNoNode) return;
  BoundaryForest& fr = d_->forest_mut();
  std::vector<NodeId> heads;
  for (int i = 0; i < fr.heads(root); ++i) heads.push_back(fr.select_head(root, i));
  for (NodeId n : heads) {
    BlockId id = fr.block(n);
    const bool ok = id >= 0 && static_cast<std::size_t>(id) < blocks_.size() && blocks_[static_cast<std::size_t>(id)].live &&
                    blocks_[static_cast<std::size_t>(id)].owner == c && blocks_[static_cast<std::size_t>(id)].head == n;
    if (ok) continue;
    fr.set_block(n, kNoBlock);
    if (id >= 0 && static_cast<std::size_t>(id) < blocks_.size() && blocks_[static_cast<std::size_t>(id)].live &&
        blocks_[static_cast<std::size_t>(id)].head == n) {
      delete_block(id);
    }
  }
}

void BigCellIndex::sync_chain(CellId c) {
  clear_foreign_heads(c);
  const BoundaryForest& fr = d_->forest();
  auto it = cell_blocks_.find(c);
  if (it != cell_blocks_.end()) {
    std::vector<BlockId> ids(it->second.begin(), it->second.end());
    for (BlockId id : ids) {
      const DcrBlock& b = block(id);
      const bool ok = fr.live(b.head) && fr.block(b.head) == id && d_->owner_cell(b.head) == c;
      if (!ok) delete_block(id);
    }
  }
  if (cell_blocks_.count(c) == 0) build_chain(c);
}

void BigCellIndex::fix_sizes(BlockId id, std::set<BlockId>& rebuilt) {
  if (!block(id).live) return;
  const int t = std::max(threshold_, 1);
  std::vector<NodeId> range = block_range(id);
  const int s = static_cast<int>(range.size());
  if (s > 2 * t) {
    const CellId owner = block(id).owner;
    for (int i = t; i + t / 2 < s; i += t) {
      BlockId nb = new_block(owner, range[static_cast<std::size_t>(i)]);
      rebuild_block(nb);
      rebuilt.insert(nb);
    }
    rebuild_block(id);
    return;
  }
  if (2 * s < t) {
    BlockId next = block_of_node(d_->succ(range.back()));
    if (next != id && 2 * static_cast<int>(block_range(next).size()) < t) {
      delete_block(next);
      rebuild_block(id);
    }
  }
}

void BigCellIndex::initialize() {
  threshold_ = threshold_for(d_->site_count());
  big_.clear();
  for (CellId c : d_->site_cells()) {
    const Cell& cell = d_->cell(c);
    const bool want = cell.kind == CellKind::kSentinel || (cell.root != kNoNode && d_->cell_size(c) > threshold_);
    set_big(c, want);
  }
  if (d_->infinity() == kNoVertex) return;
  for (std::size_t v = 0; v < d_->vertex_capacity(); ++v) {
    if (d_->vertex_live(static_cast<VertexId>(v))) refresh_marks_at(static_cast<VertexId>(v));
  }
  for (CellId c : d_->site_cells()) {
    if (d_->cell(c).big) {
      build_chain(c);
    } else {
      drop_chain(c);
    }
  }
}

int BigCellIndex::finish_insertion(const std::vector<VertexId>& dirty, const std::vector<CellId>& touched,
                                   CellId new_cell) {
  const int before = rebuilds_;
  const int t = threshold_for(d_->site_count());
  const bool global = t != threshold_;
  threshold_ = t;

  std::set<CellId> cand;
  if (global) {
    cand.insert(d_->site_cells().begin(), d_->site_cells().end());
  } else {
    for (CellId c : touched) {
      if (d_->cell(c).live && d_->cell(c).kind != CellKind::kPart) cand.insert(c);
    }
    cand.insert(new_cell);
  }
  clear_foreign_heads(new_cell);

  std::vector<VertexId> dv;
  for (VertexId v : dirty) {
    if (d_->vertex_live(v)) dv.push_back(v);
  }
  std::vector<CellId> flipped;
  for (CellId c : cand) {
    const Cell& cell = d_->cell(c);
    const bool want = cell.kind == CellKind::kSentinel || d_->cell_size(c) > t;
    if (want == cell.big) continue;
    set_big(c, want);
    flipped.push_back(c);
    for (VertexId v : d_->boundary(c)) dv.push_back(v);
  }
  std::sort(dv.begin(), dv.end());
  dv.erase(std::unique(dv.begin(), dv.end()), dv.end());
  for (VertexId v : dv) refresh_marks_at(v);

  for (CellId c : flipped) {
    if (!d_->cell(c).big) drop_chain(c);
  }
  std::set<CellId> chain_cells(cand.begin(), cand.end());
  for (CellId c : chain_cells) {
    if (d_->cell(c).big) sync_chain(c);
  }

  std::set<BlockId> dirty_blocks;
  for (VertexId v : dv) {
    const Vertex& x = d_->vertex(v);
    std::array<VertexId, 4> around{v, x.nbr[0], x.nbr[1], x.nbr[2]};
    for (VertexId w : around) {
      if (!d_->vertex_live(w)) continue;
      const Vertex& y = d_->vertex(w);
      for (int j = 0; j < y.deg; ++j) {
        NodeId n = y.node[static_cast<std::size_t>(j)];
        if (!d_->cell(d_->owner_cell(n)).big) continue;
        BlockId b = block_of_node(n);
        if (b != kNoBlock) dirty_blocks.insert(b);
      }
    }
  }
  std::set<BlockId> rebuilt;
  for (BlockId b : dirty_blocks) {
    if (block(b).live) rebuild_block(b);
  }
  for (BlockId b : dirty_blocks) fix_sizes(b, rebuilt);
  return rebuilds_ - before;
}

std::string BigCellIndex::check() const {
  std::ostringstream err;
  const int t = threshold_for(d_->site_count());
  if (t != threshold_) err << "threshold " << threshold_ << " expected " << t << "\n";
  std::set<CellId> want_big;
  for (CellId c : d_->site_cells()) {
    const Cell& cell = d_->cell(c);
    const bool want = cell.kind == CellKind::kSentinel || (cell.root != kNoNode && d_->cell_size(c) > t);
    if (want != cell.big) err << "cell " << c << " big flag " << cell.big << " expected " << want << "\n";
    if (want) want_big.insert(c);
  }
  if (want_big != big_) err << "gamma vertex set differs from big cells\n";
  if (d_->infinity() == kNoVertex) return err.str();

  const BoundaryForest& fr = d_->forest();
  std::size_t heads_total = 0;
  for (CellId c : d_->site_cells()) {
    const Cell& cell = d_->cell(c);
    std::set<BlockId> seen;
    fr.for_each(cell.root, [&](NodeId n) {
      if (fr.gamma(n) != want_mark(n)) err << "cell " << c << " node " << n << " gamma mark wrong\n";
      if (fr.block(n) != kNoBlock) seen.insert(fr.block(n));
    });
    heads_total += seen.size();
    if (!cell.big) {
      if (!seen.empty() || cell_blocks_.count(c) != 0) err << "small cell " << c << " carries blocks\n";
      continue;
    }
    auto it = cell_blocks_.find(c);
    std::set<BlockId> recorded = it == cell_blocks_.end() ? std::set<BlockId>{} : it->second;
    if (seen.empty()) err << "big cell " << c << " has no blocks\n";
    if (recorded != seen) err << "big cell " << c << " block records differ from heads\n";
    for (BlockId b : seen) {
      const DcrBlock& blk = block(b);
      if (!blk.live || blk.owner != c || fr.block(blk.head) != b) {
        err << "block " << b << " record is stale\n";
        continue;
      }
      auto want = collect(block_range(b));
      auto have = blk.dcr.entries();
      auto key = [](const DcrEntry& e) { return std::make_tuple(e.paw, e.attach, e.triple.key()); };
      std::vector<decltype(key(want[0]))> a, bb;
      if (!want.empty() || !have.empty()) {
        for (const auto& e : want) a.push_back(key(e));
        for (const auto& e : have) bb.push_back(key(e));
        std::sort(a.begin(), a.end());
        std::sort(bb.begin(), bb.end());
        if (a != bb) err << "block " << b << " of cell " << c << " DCR contents differ from rescan\n";
      }
    }
  }
  std::size_t live_records = 0;
  for (const auto& b : blocks_) live_records += b.live ? 1 : 0;
  if (live_records != heads_total) err << "orphan block records: " << live_records << " vs " << heads_total << "\n";
  return err.str();
}

}  // namespace ivd
