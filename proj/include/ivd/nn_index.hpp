#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "ivd/predicates.hpp"

namespace ivd {

/// Insertion-only exact nearest-site index: logarithmic rebuilding over
/// static kd-trees, one per occupied binary digit of the size.
class NnIndex {
 public:
  /// Throws DuplicateSiteError if a site with the same coordinates exists.
  void insert(const Site& s);
  /// Site minimizing squared distance to (x, y); ties go to the smaller id.
  /// Throws EmptyIndexError when empty.
  const Site& nearest(Coord x, Coord y) const;

  std::size_t size() const { return count_; }
  std::size_t layer_count() const;
  bool contains(Coord x, Coord y) const;

 private:
  struct Layer {
    std::vector<Site> pts;  // implicit kd-tree: median at mid, split axis by depth
  };
  static void build(std::vector<Site>& pts, std::size_t lo, std::size_t hi, int depth);
  static void search(const std::vector<Site>& pts, std::size_t lo, std::size_t hi, int depth, Coord x, Coord y,
                     const Site*& best, std::int64_t& best_d);

  std::vector<Layer> layers_;  // layers_[k] is empty or holds 2^k sites
  std::unordered_set<std::uint64_t> coords_;
  std::size_t count_ = 0;
};

inline const Site& nn_nearest(const NnIndex& idx, Coord x, Coord y) { return idx.nearest(x, y); }
inline void nn_insert(NnIndex& idx, const Site& s) { idx.insert(s); }

}  // namespace ivd
