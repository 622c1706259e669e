#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ivd/boundary_tree.hpp"
#include "ivd/canonical.hpp"
#include "ivd/predicates.hpp"

namespace ivd {

/// A Voronoi vertex. Neighbors are kept in counterclockwise order; slot j is
/// the face lying counterclockwise between nbr[j] and nbr[(j+1) % deg], so in
/// that face's boundary the successor of this vertex is nbr[j] and the
/// predecessor is nbr[(j+1) % deg].
struct Vertex {
  std::array<VertexId, 3> nbr{kNoVertex, kNoVertex, kNoVertex};
  std::array<NodeId, 3> node{kNoNode, kNoNode, kNoNode};
  int deg = 0;
  bool live = false;
  bool infinite = false;
};

enum class CellKind : std::uint8_t { kReal, kSentinel, kPart };

struct Cell {
  Site site;
  NodeId root = kNoNode;
  bool big = false;
  CellKind kind = CellKind::kReal;
  bool live = false;
};

struct ChangeLog {
  std::int64_t links = 0;
  std::int64_t cuts = 0;
};

/// Sentinel sites, ids -3..-1.
std::array<Site, 3> sentinel_sites();

/// The explicit Voronoi graph with one balanced boundary tree per cell.
class Diagram {
 public:
  Diagram();

  // -- sites and cells ------------------------------------------------------
  int site_count() const { return static_cast<int>(site_to_cell_.size()); }
  int real_site_count() const { return site_count() - 3; }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(CellId c) const { return cells_[static_cast<std::size_t>(c)]; }
  Cell& cell_mut(CellId c) { return cells_[static_cast<std::size_t>(c)]; }
  std::optional<CellId> cell_of_site(SiteId id) const;
  int cell_size(CellId c) const { return forest_.size(cell(c).root); }
  /// Cells of real and sentinel sites, in insertion order.
  const std::vector<CellId>& site_cells() const { return site_order_; }

  // -- vertices -------------------------------------------------------------
  const Vertex& vertex(VertexId v) const { return vertices_[static_cast<std::size_t>(v)]; }
  bool vertex_live(VertexId v) const {
    return v >= 0 && static_cast<std::size_t>(v) < vertices_.size() && vertex(v).live;
  }
  std::size_t vertex_capacity() const { return vertices_.size(); }
  VertexId infinity() const { return infinity_; }
  bool is_infinite(VertexId v) const { return v == infinity_; }
  bool adjacent(VertexId a, VertexId b) const;
  int slot_of_nbr(VertexId v, VertexId w) const;
  int slot_of_cell(VertexId v, CellId c) const;
  CellId slot_cell(VertexId v, int slot) const { return owner_cell(vertex(v).node[static_cast<std::size_t>(slot)]); }
  /// The cells around v in slot order.
  std::array<CellId, 3> vertex_cells(VertexId v) const;
  /// Sites of the three cells around v; throws StructureError unless deg == 3.
  SiteTriple vertex_triple(VertexId v) const;
  /// Circle test for vertex v against q; the infinite vertex is always outside.
  CircleSide vertex_side(VertexId v, const Site& q) const;

  /// Number of finite vertices and of edges between finite vertices.
  std::int64_t finite_vertex_count() const;
  std::int64_t finite_edge_count() const;

  // -- boundary trees -------------------------------------------------------
  const BoundaryForest& forest() const { return forest_; }
  BoundaryForest& forest_mut() { return forest_; }
  CellId owner_cell(NodeId n) const { return forest_.owner(n); }
  /// Boundary node of v in cell c.
  NodeId node_in(VertexId v, CellId c) const;
  VertexId node_vertex(NodeId n) const { return forest_.node(n).vertex; }
  NodeId succ(NodeId n) const { return forest_.next_cyclic(n); }
  NodeId pred(NodeId n) const { return forest_.prev_cyclic(n); }
  std::vector<VertexId> boundary(CellId c) const { return forest_.sequence(cell(c).root); }
  /// The cell across the boundary edge that starts at node n.
  CellId across(NodeId n) const;

  /// Paws of c in boundary order, each paired with the boundary vertex it
  /// hangs from; a paw adjacent to two consecutive boundary vertices is
  /// reported once.
  std::vector<std::pair<VertexId, VertexId>> paws(CellId c) const;

  // -- combinatorial edits --------------------------------------------------
  const ChangeLog& change_log() const { return log_; }

  /// Subdivides edge (a, b) with a new degree-2 vertex. Free.
  VertexId subdivide(VertexId a, VertexId b);
  /// Removes a degree-2 vertex, joining its two neighbors. Free.
  void smooth(VertexId x);
  /// Adds edge (u, v) across a face both lie on; splits that face. The side
  /// holding the walk u -> succ(u) -> ... -> v becomes a new partial cell
  /// (carrying the face's site until relabelled) and is returned; the other
  /// side keeps the face record.
  CellId link(VertexId u, VertexId v, CellId face = kNoCell);
  /// Removes edge (u, v); the two incident faces merge. Returns the surviving
  /// cell (the one on the side where u -> v is a boundary step unless
  /// `keep` names the other one).
  CellId cut(VertexId u, VertexId v, CellId keep = kNoCell);

  /// Moves the cyclic range [first, last] of f's boundary to the end of g's.
  void split_range(CellId f, NodeId first, NodeId last, CellId g);
  /// Deletes the edge (a, b) shared by f and g and concatenates the two
  /// boundaries. Counts as a cut. Returns the surviving cell.
  CellId merge_boundaries(CellId f, CellId g, VertexId a, VertexId b);

  /// New empty cell record used for pieces of the cell being inserted.
  CellId new_part_cell(const Site& site);
  /// Registers a freshly inserted site's final cell.
  void register_site_cell(CellId c);
  void retire_cell(CellId c);
  /// Gives a partial cell its final site (the one being inserted).
  void set_cell_site(CellId c, const Site& s) { cell_mut(c).site = s; }

  /// Called when a cell's tree root may have changed.
  void refresh_root(CellId c, NodeId any_node);

  // -- construction and inspection ------------------------------------------
  /// Builds the four-site diagram (sentinels plus `first`).
  void bootstrap(const Site& first);
  /// Rebuilds the whole structure from CCW face cycles (used by import).
  void build_from_faces(const std::vector<Site>& sites,
                        const std::vector<std::vector<VertexId>>& cycles,
                        VertexId infinite_label);

  CanonicalGraph canonical() const;
  /// Structural self-check. Returns an empty string when consistent.
  std::string check_structure() const;

  /// Observers notified of vertex-level changes during an insertion.
  std::function<void(VertexId)> on_vertex_touched;
  std::function<void(VertexId)> on_vertex_removed;
  std::function<void(CellId)> on_cell_touched;

 private:
  VertexId new_vertex();
  void free_vertex(VertexId v);
  void touch(VertexId v) {
    if (on_vertex_touched) on_vertex_touched(v);
  }
  void touch_cell(CellId c) {
    if (on_cell_touched) on_cell_touched(c);
  }
  void set_root(CellId c, NodeId root);
  CellId add_cell(const Site& s, CellKind kind);

  std::vector<Vertex> vertices_;
  std::vector<VertexId> free_vertices_;
  std::vector<Cell> cells_;
  std::vector<CellId> free_cells_;
  std::unordered_map<SiteId, CellId> site_to_cell_;
  std::vector<CellId> site_order_;
  BoundaryForest forest_;
  VertexId infinity_ = kNoVertex;
  std::int64_t live_vertices_ = 0;
  ChangeLog log_;
};

}  // namespace ivd
