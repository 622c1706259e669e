#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "ivd/big_cell_index.hpp"
#include "ivd/diagram.hpp"
#include "ivd/nn_index.hpp"

namespace ivd {

struct InsertionStats {
  std::int64_t n = 0;  // real sites after the insertion
  std::int64_t links = 0;
  std::int64_t cuts = 0;
  std::int64_t cells_changed = 0;
  std::int64_t dcr_rebuilds = 0;
  std::int64_t time_ns = 0;
};

/// Inside range of one cell: the boundary run whose circles enclose the new
/// site, with the outside vertices just before (u) and after (w) it.
struct InsideRange {
  CellId cell = kNoCell;
  std::vector<VertexId> run;
  VertexId u = kNoVertex;
  VertexId w = kNoVertex;
  CellId left = kNoCell;   // across the edge u -> run.front()
  CellId right = kNoCell;  // across the edge run.back() -> w
};

/// A cell to enqueue together with an enclosed vertex on its boundary.
struct Seeded {
  CellId cell = kNoCell;
  VertexId seed = kNoVertex;

  friend bool operator==(const Seeded&, const Seeded&) = default;
};

struct CellEdit {
  CellId cell = kNoCell;
  std::int64_t links = 0;
  std::int64_t cuts = 0;
};

/// Incremental Voronoi diagram. Each insertion runs in two phases: a
/// read-only recognition pass that finds every affected cell and its inside
/// range, then the graph edits.
class VoronoiEngine {
 public:
  explicit VoronoiEngine(Coord coord_bound = kCoordBound);
  VoronoiEngine(const VoronoiEngine&) = delete;
  VoronoiEngine& operator=(const VoronoiEngine&) = delete;

  /// Throws InputError (bounds, reused id), DuplicateSiteError,
  /// DegeneracyError. The diagram is untouched when it throws.
  InsertionStats insert_site(const Site& s);

  const Diagram& diagram() const { return diagram_; }
  const BigCellIndex& index() const { return index_; }
  const NnIndex& nn() const { return nn_; }
  const std::vector<Site>& sites() const { return sites_; }
  Coord coord_bound() const { return coord_bound_; }
  /// Per-cell links and cuts of the last insertion, in processing order.
  const std::vector<CellEdit>& last_edits() const { return last_edits_; }

  CellId locate_start_cell(const Site& s) const;
  /// Linear scan of f's boundary for a vertex whose circle encloses s.
  VertexId find_seed(CellId f, const Site& s) const;
  InsideRange find_inside_range(CellId f, VertexId seed, const Site& s) const;
  std::vector<Seeded> recognize_small(CellId f, const Site& s) const;
  std::vector<Seeded> recognize_big(CellId f, const Site& s, const InsideRange* range) const;

  /// Replaces the whole state by a diagram given as face cycles (sites[0..2]
  /// must be the sentinels). Used to reload exports.
  void restore(const std::vector<Site>& sites, const std::vector<std::vector<VertexId>>& cycles,
               VertexId infinite_label);

  /// Diagram self-check plus full rescan of the big-cell structures.
  std::string check_invariants() const;

 private:
  struct Plan {
    CellId cell;
    VertexId u, w;
  };
  void validate(const Site& s) const;
  std::vector<Plan> recognize(const Site& s, std::vector<VertexId>& inside);
  CellEdit process_cell(const Plan& p);
  CellEdit process_big(const Plan& p);
  CellEdit process_small(const Plan& p);
  bool on_curve_side(VertexId v) const;
  void mark_curve_side(VertexId v);

  Diagram diagram_;
  BigCellIndex index_;
  NnIndex nn_;
  std::vector<Site> sites_;
  Coord coord_bound_;
  std::vector<CellEdit> last_edits_;

  // Scratch state of the running insertion.
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 1;
  std::vector<VertexId> dirty_;
  std::vector<CellId> touched_cells_;
  std::vector<CellId> parts_;
  Site current_{};
};

}  // namespace ivd
