#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ivd/diagram.hpp"

namespace ivd {

struct DcrEntry {
  VertexId paw = kNoVertex;
  VertexId attach = kNoVertex;  // boundary vertex the paw hangs from
  SiteTriple triple;
};

/// Circle-reporting set over paw circles. Linear scan inside one block.
class Dcr {
 public:
  void insert(const DcrEntry& e);
  void erase(VertexId paw);
  void clear() { entries_.clear(); }
  /// Entries whose circle strictly encloses q. Throws DegeneracyError on ON.
  std::vector<DcrEntry> report(const Site& q) const;
  bool contains(VertexId paw) const;
  const std::vector<DcrEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<DcrEntry> entries_;
};

/// A paw is relevant when none of its three cells is big.
bool paw_relevant(const Diagram& d, VertexId paw);

/// Inserts paw into d after checking it is a current, relevant vertex.
void dcr_insert(Dcr& dcr, const Diagram& d, VertexId paw, VertexId attach);
void dcr_delete(Dcr& dcr, VertexId paw);
std::vector<VertexId> dcr_report(const Dcr& dcr, const Site& q);

struct DcrBlock {
  CellId owner = kNoCell;
  NodeId head = kNoNode;
  Dcr dcr;
  bool live = false;
};

/// One shared edge between two big cells, seen from `cell`.
struct GammaEdge {
  CellId cell = kNoCell;
  CellId other = kNoCell;
  VertexId from = kNoVertex;
  VertexId to = kNoVertex;

  friend bool operator==(const GammaEdge&, const GammaEdge&) = default;
};

/// Big-cell graph plus the per-big-cell chains of circle-reporting blocks.
/// Both live as annotations on the diagram's boundary trees: a gamma mark on
/// a node means its outgoing boundary edge is shared with another big cell,
/// and a block id on a node marks the head of a block whose range runs to the
/// next head.
class BigCellIndex {
 public:
  explicit BigCellIndex(Diagram& d) : d_(&d) {}

  static int threshold_for(std::int64_t site_count);
  int threshold() const { return threshold_; }

  const std::set<CellId>& big_cells() const { return big_; }
  bool is_big(CellId c) const { return d_->cell(c).big; }

  /// Gamma edges of f in counterclockwise order.
  std::vector<GammaEdge> gamma_edges(CellId f) const;
  /// After a link splitting f at chord (v1, v2): refreshes the seam marks.
  void gamma_split(CellId f, CellId part, VertexId v1, VertexId v2);
  /// After a cut joining f2 into big cell f1 at (a, b): refreshes the seam marks.
  void gamma_join(CellId f1, CellId f2, VertexId a, VertexId b);
  /// Recomputes the marks on all boundary nodes at v and their predecessors.
  void refresh_marks_at(VertexId v);

  std::vector<BlockId> blocks_of(CellId f) const;
  const DcrBlock& block(BlockId b) const { return blocks_[static_cast<std::size_t>(b)]; }
  BlockId block_of_node(NodeId n) const;
  std::vector<NodeId> block_range(BlockId b) const;
  void rebuild_block(BlockId b);
  void build_chain(CellId f);
  void drop_chain(CellId f);
  int rebuild_count() const { return rebuilds_; }

  /// Initial classification of the sentinel-only or bootstrapped diagram.
  void initialize();

  /// End-of-insertion maintenance. `dirty` must hold every vertex whose
  /// neighborhood or triple changed; `touched` every cell whose boundary
  /// changed. Returns the number of block rebuilds performed.
  int finish_insertion(const std::vector<VertexId>& dirty, const std::vector<CellId>& touched, CellId new_cell);

  /// Full-rescan comparison. Empty string when consistent.
  std::string check() const;

 private:
  bool want_mark(NodeId n) const;
  void set_big(CellId c, bool big);
  BlockId new_block(CellId owner, NodeId head);
  void delete_block(BlockId b);
  void clear_foreign_heads(CellId c);
  void sync_chain(CellId c);
  void fix_sizes(BlockId b, std::set<BlockId>& rebuilt);
  std::vector<DcrEntry> collect(const std::vector<NodeId>& range) const;

  Diagram* d_;
  int threshold_ = 1;
  std::set<CellId> big_;
  std::vector<DcrBlock> blocks_;
  std::vector<BlockId> free_blocks_;
  std::unordered_map<CellId, std::set<BlockId>> cell_blocks_;
  int rebuilds_ = 0;
};

}  // namespace ivd
