#include "ivd/oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "ivd/errors.hpp"

namespace ivd {

namespace {

constexpr std::array<Site, 3> kSentinels{Site{-3, -kSentinelScale, -kSentinelScale},
                                         Site{-2, 3 * kSentinelScale, -kSentinelScale},
                                         Site{-1, -kSentinelScale, 3 * kSentinelScale}};

}  // namespace

Triangulation::Triangulation() {
  sites_.assign(kSentinels.begin(), kSentinels.end());
  tris_.push_back(Triangle{{0, 1, 2}, {-1, -1, -1}, true});
  live_ = 1;
}

void Triangulation::insert(const Site& s) {
  for (int i = 0; i < 3; ++i) {
    if (orientation(kSentinels[static_cast<std::size_t>(i)], kSentinels[static_cast<std::size_t>((i + 1) % 3)], s) !=
        Orientation::kCCW) {
      throw InputError("site " + std::to_string(s.id) + " is not inside the sentinel triangle");
    }
  }
  for (const Site& t : sites_) {
    if (t.id == s.id || (t.x == s.x && t.y == s.y)) {
      throw DuplicateSiteError("duplicate site " + std::to_string(s.id));
    }
  }

  std::vector<char> bad(tris_.size(), 0);
  std::vector<int> cavity;
  for (std::size_t i = 0; i < tris_.size(); ++i) {
    const Triangle& t = tris_[i];
    if (!t.live) continue;
    SiteTriple tr(sites_[static_cast<std::size_t>(t.v[0])], sites_[static_cast<std::size_t>(t.v[1])],
                  sites_[static_cast<std::size_t>(t.v[2])]);
    CircleSide side = side_of_circle(tr, s);
    if (side == CircleSide::kOn) {
      throw DegeneracyError("site " + std::to_string(s.id) + " is cocircular with an existing triangle");
    }
    if (side == CircleSide::kInside) {
      bad[i] = 1;
      cavity.push_back(static_cast<int>(i));
    }
  }
  if (cavity.empty()) throw StructureError("oracle: empty cavity");

  struct Rim {
    int a, b, outside, outside_slot;
  };
  std::vector<Rim> rim;
  for (int ti : cavity) {
    const Triangle& t = tris_[static_cast<std::size_t>(ti)];
    for (int i = 0; i < 3; ++i) {
      int n = t.nbr[static_cast<std::size_t>(i)];
      if (n >= 0 && bad[static_cast<std::size_t>(n)]) continue;
      int a = t.v[static_cast<std::size_t>((i + 1) % 3)];
      int b = t.v[static_cast<std::size_t>((i + 2) % 3)];
      if (orientation(sites_[static_cast<std::size_t>(a)], sites_[static_cast<std::size_t>(b)], s) != Orientation::kCCW) {
        throw DegeneracyError("site " + std::to_string(s.id) + " is collinear with a cavity edge");
      }
      int slot = -1;
      if (n >= 0) {
        const auto& nn = tris_[static_cast<std::size_t>(n)].nbr;
        slot = static_cast<int>(std::find(nn.begin(), nn.end(), ti) - nn.begin());
      }
      rim.push_back(Rim{a, b, n, slot});
    }
  }

  // Commit.
  const int si = static_cast<int>(sites_.size());
  sites_.push_back(s);
  for (int ti : cavity) {
    tris_[static_cast<std::size_t>(ti)].live = false;
    free_.push_back(ti);
  }
  live_ -= cavity.size();
  std::unordered_map<int, int> by_start;
  std::vector<int> made;
  for (const Rim& r : rim) {
    int id;
    if (!free_.empty()) {
      id = free_.back();
      free_.pop_back();
    } else {
      id = static_cast<int>(tris_.size());
      tris_.emplace_back();
    }
    tris_[static_cast<std::size_t>(id)] = Triangle{{r.a, r.b, si}, {-1, -1, r.outside}, true};
    if (r.outside >= 0) tris_[static_cast<std::size_t>(r.outside)].nbr[static_cast<std::size_t>(r.outside_slot)] = id;
    by_start[r.a] = id;
    made.push_back(id);
  }
  for (int id : made) {
    Triangle& t = tris_[static_cast<std::size_t>(id)];
    int next = by_start.at(t.v[1]);
    t.nbr[0] = next;
    tris_[static_cast<std::size_t>(next)].nbr[1] = id;
  }
  live_ += made.size();
}

bool Triangulation::is_delaunay() const {
  for (const Triangle& t : tris_) {
    if (!t.live) continue;
    SiteTriple tr(sites_[static_cast<std::size_t>(t.v[0])], sites_[static_cast<std::size_t>(t.v[1])],
                  sites_[static_cast<std::size_t>(t.v[2])]);
    for (std::size_t i = 0; i < sites_.size(); ++i) {
      if (static_cast<int>(i) == t.v[0] || static_cast<int>(i) == t.v[1] || static_cast<int>(i) == t.v[2]) continue;
      if (side_of_circle(tr, sites_[i]) != CircleSide::kOutside) return false;
    }
  }
  return true;
}

void oracle_insert(Triangulation& t, const Site& s) { t.insert(s); }

CanonicalGraph dual_canonical(const Triangulation& t) {
  CanonicalGraph g;
  const auto& sites = t.sites();
  const auto& tris = t.triangles();
  std::vector<SiteTriple::Key> keys(tris.size());
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const auto& tr = tris[i];
    if (!tr.live) continue;
    keys[i] = SiteTriple(sites[static_cast<std::size_t>(tr.v[0])], sites[static_cast<std::size_t>(tr.v[1])],
                         sites[static_cast<std::size_t>(tr.v[2])])
                  .key();
    g.vertices.push_back(keys[i]);
  }
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const auto& tr = tris[i];
    if (!tr.live) continue;
    for (int k = 0; k < 3; ++k) {
      SiteId a = sites[static_cast<std::size_t>(tr.v[static_cast<std::size_t>((k + 1) % 3)])].id;
      SiteId b = sites[static_cast<std::size_t>(tr.v[static_cast<std::size_t>((k + 2) % 3)])].id;
      int n = tr.nbr[static_cast<std::size_t>(k)];
      if (n >= 0 && static_cast<std::size_t>(n) < i) continue;
      g.site_pairs.emplace_back(std::min(a, b), std::max(a, b));
      if (n < 0) continue;
      const auto& ka = keys[i];
      const auto& kb = keys[static_cast<std::size_t>(n)];
      g.edges.emplace_back(std::min(ka, kb), std::max(ka, kb));
    }
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  std::sort(g.edges.begin(), g.edges.end());
  std::sort(g.site_pairs.begin(), g.site_pairs.end());
  return g;
}

GraphDiff graph_diff(const CanonicalGraph& prev, const CanonicalGraph& next) {
  GraphDiff d;
  std::set_difference(next.site_pairs.begin(), next.site_pairs.end(), prev.site_pairs.begin(), prev.site_pairs.end(),
                      std::back_inserter(d.added_pairs));
  std::set_difference(prev.site_pairs.begin(), prev.site_pairs.end(), next.site_pairs.begin(), next.site_pairs.end(),
                      std::back_inserter(d.removed_pairs));
  std::set_difference(next.vertices.begin(), next.vertices.end(), prev.vertices.begin(), prev.vertices.end(),
                      std::back_inserter(d.added_vertices));
  std::set_difference(prev.vertices.begin(), prev.vertices.end(), next.vertices.begin(), next.vertices.end(),
                      std::back_inserter(d.removed_vertices));
  return d;
}

}  // namespace ivd
