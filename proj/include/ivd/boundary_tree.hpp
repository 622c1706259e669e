#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ivd {

using VertexId = std::int32_t;
using CellId = std::int32_t;
using NodeId = std::int32_t;
using BlockId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr CellId kNoCell = -1;
inline constexpr NodeId kNoNode = -1;
inline constexpr BlockId kNoBlock = -1;

/// A forest of randomized balanced search trees keyed by position. Each tree
/// holds the cyclic boundary of one cell, read in-order from an arbitrary
/// rotation. Nodes carry parent links so any node finds its root, and the
/// root stores the owning cell.
///
/// Two per-node annotations are aggregated over subtrees: a "gamma" mark
/// (the boundary edge starting at this node is shared with another big cell)
/// and a DCR block head id. Both support select-by-rank so marked nodes can be
/// enumerated without walking the whole boundary.
class BoundaryForest {
 public:
  struct Node {
    VertexId vertex = kNoVertex;
    NodeId left = kNoNode;
    NodeId right = kNoNode;
    NodeId parent = kNoNode;
    std::uint32_t priority = 0;
    std::int32_t size = 1;
    std::int32_t marks = 0;
    std::int32_t heads = 0;
    bool gamma = false;
    BlockId block = kNoBlock;
    CellId owner = kNoCell;  // meaningful on roots only
    bool live = false;
  };

  explicit BoundaryForest(std::uint64_t seed = 0x9e3779b97f4a7c15ULL) : rng_state_(seed) {}

  NodeId make(VertexId v);
  void release(NodeId n);

  const Node& node(NodeId n) const { return nodes_[static_cast<std::size_t>(n)]; }
  bool live(NodeId n) const { return n >= 0 && static_cast<std::size_t>(n) < nodes_.size() && node(n).live; }
  std::size_t live_count() const { return nodes_.size() - free_.size(); }

  NodeId root_of(NodeId n) const;
  CellId owner(NodeId n) const { return node(root_of(n)).owner; }
  void set_owner(NodeId root, CellId c) { at(root).owner = c; }

  int size(NodeId root) const { return root == kNoNode ? 0 : node(root).size; }
  int rank(NodeId n) const;
  NodeId select(NodeId root, int k) const;
  NodeId first(NodeId root) const;
  NodeId last(NodeId root) const;

  NodeId next(NodeId n) const;  // in-order successor, or kNoNode
  NodeId prev(NodeId n) const;
  NodeId next_cyclic(NodeId n) const;
  NodeId prev_cyclic(NodeId n) const;

  /// Splits into the first k nodes and the rest.
  std::pair<NodeId, NodeId> split(NodeId root, int k);
  NodeId join(NodeId a, NodeId b);

  /// Inserts a detached node right after `pos` in pos's tree; returns new root.
  NodeId insert_after(NodeId pos, NodeId fresh);
  /// Detaches n from its tree (n stays allocated); returns new root of the rest.
  NodeId detach(NodeId n);

  /// Rotates the cyclic sequence so that n comes first; returns new root.
  NodeId rotate_to_front(NodeId n);

  /// Removes the cyclic range [first, last] from its tree. Returns
  /// {root of the remainder, root of the range in cyclic order}.
  std::pair<NodeId, NodeId> cut_range(NodeId first, NodeId last);

  void set_gamma(NodeId n, bool on);
  bool gamma(NodeId n) const { return node(n).gamma; }
  void set_block(NodeId n, BlockId b);
  BlockId block(NodeId n) const { return node(n).block; }

  int marks(NodeId root) const { return root == kNoNode ? 0 : node(root).marks; }
  int heads(NodeId root) const { return root == kNoNode ? 0 : node(root).heads; }
  /// k-th marked node (0-based, in order).
  NodeId select_mark(NodeId root, int k) const;
  NodeId select_head(NodeId root, int k) const;
  /// Number of marked / head nodes strictly before n in its tree.
  int marks_before(NodeId n) const;
  int heads_before(NodeId n) const;

  template <typename F>
  void for_each(NodeId root, F&& fn) const {
    for (NodeId n = first(root); n != kNoNode; n = next(n)) fn(n);
  }

  std::vector<VertexId> sequence(NodeId root) const;

  /// Height and parent-link consistency check of one tree.
  bool check(NodeId root) const;

 private:
  Node& at(NodeId n) { return nodes_[static_cast<std::size_t>(n)]; }
  void pull(NodeId n);
  void pull_up(NodeId n);
  std::uint32_t next_priority();
  int count_before(NodeId n, bool heads) const;
  NodeId select_flag(NodeId root, int k, bool heads) const;
  int check_rec(NodeId n, NodeId parent, bool& ok) const;

  std::vector<Node> nodes_;
  std::vector<NodeId> free_;
  std::uint64_t rng_state_;
};

}  // namespace ivd
