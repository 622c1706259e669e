#include "ivd/predicates.hpp"

#include <algorithm>
#include <utility>

#include "ivd/errors.hpp"

namespace ivd {

namespace {

using i128 = __int128;

int sign(i128 v) { return (v > 0) - (v < 0); }

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_rational(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

}  // namespace

Orientation orientation(const Site& a, const Site& b, const Site& c) {
  i128 det = i128(b.x - a.x) * (c.y - a.y) - i128(b.y - a.y) * (c.x - a.x);
  return static_cast<Orientation>(sign(det));
}

SiteTriple::SiteTriple(const Site& a, const Site& b, const Site& c) : sites_{a, b, c} {
  switch (orientation(a, b, c)) {
    case Orientation::kCCW:
      break;
    case Orientation::kCW:
      std::swap(sites_[1], sites_[2]);
      break;
    case Orientation::kCollinear:
      throw DegeneracyError("collinear site triple (" + std::to_string(a.id) + "," +
                            std::to_string(b.id) + "," + std::to_string(c.id) + ")");
  }
}

SiteTriple::Key SiteTriple::key() const {
  int lo = 0;
  for (int i = 1; i < 3; ++i) {
    if (sites_[i].id < sites_[lo].id) lo = i;
  }
  return {sites_[lo].id, sites_[(lo + 1) % 3].id, sites_[(lo + 2) % 3].id};
}

CircleSide side_of_circle(const SiteTriple& t, const Site& q) {
  // Lifted 3x3 determinant relative to q; positive means q is inside for a
  // CCW triple. Differences stay below 2^26, lifted terms below 2^53, and the
  // cofactor products below 2^106.
  const auto& s = t.sites();
  i128 ax = s[0].x - q.x, ay = s[0].y - q.y;
  i128 bx = s[1].x - q.x, by = s[1].y - q.y;
  i128 cx = s[2].x - q.x, cy = s[2].y - q.y;
  i128 al = ax * ax + ay * ay;
  i128 bl = bx * bx + by * by;
  i128 cl = cx * cx + cy * cy;
  i128 det = al * (bx * cy - by * cx) - bl * (ax * cy - ay * cx) + cl * (ax * by - ay * bx);
  if (det > 0) return CircleSide::kInside;
  if (det < 0) return CircleSide::kOutside;
  return CircleSide::kOn;
}

double Rational::to_double() const {
  return static_cast<double>(num) / static_cast<double>(den);
}

std::string int128_to_string(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string out;
  while (u != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

std::string Rational::to_string() const {
  if (den == 1) return int128_to_string(num);
  return int128_to_string(num) + "/" + int128_to_string(den);
}

RationalPoint circumcenter(const Site& a, const Site& b, const Site& c) {
  i128 bx = b.x - a.x, by = b.y - a.y;
  i128 cx = c.x - a.x, cy = c.y - a.y;
  i128 d = 2 * (bx * cy - by * cx);
  if (d == 0) {
    throw DegeneracyError("circumcenter of collinear sites");
  }
  i128 bl = bx * bx + by * by;
  i128 cl = cx * cx + cy * cy;
  i128 ux = cy * bl - by * cl;
  i128 uy = bx * cl - cx * bl;
  return RationalPoint{make_rational(ux + i128(a.x) * d, d), make_rational(uy + i128(a.y) * d, d)};
}

RationalPoint circumcenter(const SiteTriple& t) { return circumcenter(t[0], t[1], t[2]); }

}  // namespace ivd
