#pragma once

#include <utility>
#include <vector>

#include "ivd/predicates.hpp"

namespace ivd {

/// Canonical combinatorial form: Voronoi vertices keyed by site triples,
/// edges as pairs of adjacent triples, and the adjacent site-pair set.
struct CanonicalGraph {
  using Key = SiteTriple::Key;
  using SitePair = std::pair<SiteId, SiteId>;
  std::vector<Key> vertices;               // sorted
  std::vector<std::pair<Key, Key>> edges;  // sorted, each pair ordered
  std::vector<SitePair> site_pairs;        // sorted, each pair ordered

  friend bool operator==(const CanonicalGraph&, const CanonicalGraph&) = default;
};

struct GraphDiff {
  std::vector<CanonicalGraph::SitePair> added_pairs;
  std::vector<CanonicalGraph::SitePair> removed_pairs;
  std::vector<CanonicalGraph::Key> added_vertices;
  std::vector<CanonicalGraph::Key> removed_vertices;

  std::size_t pair_changes() const { return added_pairs.size() + removed_pairs.size(); }
  bool empty() const {
    return added_pairs.empty() && removed_pairs.empty() && added_vertices.empty() && removed_vertices.empty();
  }
};

GraphDiff graph_diff(const CanonicalGraph& prev, const CanonicalGraph& next);

}  // namespace ivd
