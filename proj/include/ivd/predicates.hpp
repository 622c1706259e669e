#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace ivd {

using SiteId = std::int64_t;
using Coord = std::int64_t;

/// Largest admissible |x| or |y| for user sites.
inline constexpr Coord kCoordBound = Coord{1} << 20;

/// Half-width of the sentinel triangle; the three sentinels lie at
/// (-K,-K), (3K,-K), (-K,3K), which encloses the square [-K, K]^2.
inline constexpr Coord kSentinelScale = 8 * kCoordBound;

struct Site {
  SiteId id = 0;
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Site&, const Site&) = default;
};

enum class Orientation { kCW = -1, kCollinear = 0, kCCW = 1 };

enum class CircleSide { kInside, kOn, kOutside };

Orientation orientation(const Site& a, const Site& b, const Site& c);

/// Three sites defining a Voronoi vertex, stored counterclockwise.
class SiteTriple {
 public:
  using Key = std::array<SiteId, 3>;

  SiteTriple() = default;
  /// Normalizes to CCW order. Throws DegeneracyError if collinear.
  SiteTriple(const Site& a, const Site& b, const Site& c);

  const std::array<Site, 3>& sites() const { return sites_; }
  const Site& operator[](int i) const { return sites_[static_cast<std::size_t>(i)]; }

  /// CCW rotation of the three ids that starts at the smallest id.
  Key key() const;

  bool contains(SiteId id) const {
    return sites_[0].id == id || sites_[1].id == id || sites_[2].id == id;
  }

 private:
  std::array<Site, 3> sites_{};
};

/// Exact incircle test of q against the circle through t's sites.
CircleSide side_of_circle(const SiteTriple& t, const Site& q);

/// Exact rational number with a positive denominator, in lowest terms.
struct Rational {
  __int128 num = 0;
  __int128 den = 1;

  double to_double() const;
  std::string to_string() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct RationalPoint {
  Rational x;
  Rational y;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// Center of the circle through the triple. Export only.
RationalPoint circumcenter(const SiteTriple& t);
RationalPoint circumcenter(const Site& a, const Site& b, const Site& c);

std::string int128_to_string(__int128 v);

}  // namespace ivd
