#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ivd/canonical.hpp"
#include "ivd/predicates.hpp"

namespace ivd {

/// Incremental Delaunay triangulation (Bowyer-Watson) over the sentinel
/// triangle plus inserted sites. Slow and simple on purpose: it is the
/// reference the Voronoi engine is checked against.
class Triangulation {
 public:
  struct Triangle {
    std::array<int, 3> v{};    // indices into sites(), CCW
    std::array<int, 3> nbr{};  // nbr[i] is across the edge opposite v[i], -1 on the hull
    bool live = true;
  };

  Triangulation();

  const std::vector<Site>& sites() const { return sites_; }
  const std::vector<Triangle>& triangles() const { return tris_; }
  std::size_t triangle_count() const { return live_; }

  /// Inserts s. Throws DuplicateSiteError, DegeneracyError, InputError; the
  /// triangulation is unchanged when an exception escapes.
  void insert(const Site& s);

  /// Brute-force Delaunay check over all triangles and all sites.
  bool is_delaunay() const;

 private:
  std::vector<Site> sites_;
  std::vector<Triangle> tris_;
  std::vector<int> free_;
  std::size_t live_ = 0;
};

void oracle_insert(Triangulation& t, const Site& s);
CanonicalGraph dual_canonical(const Triangulation& t);

}  // namespace ivd
