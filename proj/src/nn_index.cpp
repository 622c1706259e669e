#include "ivd/nn_index.hpp"

#include <algorithm>

#include "ivd/errors.hpp"

namespace ivd {

namespace {

std::uint64_t pack(Coord x, Coord y) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
         static_cast<std::uint32_t>(y);
}

bool better(const Site& s, std::int64_t d, const Site* best, std::int64_t best_d) {
  return best == nullptr || d < best_d || (d == best_d && s.id < best->id);
}

}  // namespace

bool NnIndex::contains(Coord x, Coord y) const { return coords_.count(pack(x, y)) != 0; }

std::size_t NnIndex::layer_count() const {
  return static_cast<std::size_t>(std::count_if(layers_.begin(), layers_.end(),
                                                [](const Layer& l) { return !l.pts.empty(); }));
}

void NnIndex::insert(const Site& s) {
  if (!coords_.insert(pack(s.x, s.y)).second) {
    throw DuplicateSiteError("site (" + std::to_string(s.x) + "," + std::to_string(s.y) + ") already present");
  }
  std::vector<Site> carry{s};
  std::size_t k = 0;
  for (;; ++k) {
    if (k == layers_.size()) layers_.emplace_back();
    if (layers_[k].pts.empty()) break;
    carry.insert(carry.end(), layers_[k].pts.begin(), layers_[k].pts.end());
    layers_[k].pts.clear();
  }
  build(carry, 0, carry.size(), 0);
  layers_[k].pts = std::move(carry);
  ++count_;
}

void NnIndex::build(std::vector<Site>& pts, std::size_t lo, std::size_t hi, int depth) {
  if (hi - lo <= 1) return;
  std::size_t mid = lo + (hi - lo) / 2;
  auto first = pts.begin() + static_cast<std::ptrdiff_t>(lo);
  auto nth = pts.begin() + static_cast<std::ptrdiff_t>(mid);
  auto last = pts.begin() + static_cast<std::ptrdiff_t>(hi);
  if (depth % 2 == 0) {
    std::nth_element(first, nth, last, [](const Site& a, const Site& b) { return a.x < b.x; });
  } else {
    std::nth_element(first, nth, last, [](const Site& a, const Site& b) { return a.y < b.y; });
  }
  build(pts, lo, mid, depth + 1);
  build(pts, mid + 1, hi, depth + 1);
}

void NnIndex::search(const std::vector<Site>& pts, std::size_t lo, std::size_t hi, int depth, Coord x, Coord y,
                     const Site*& best, std::int64_t& best_d) {
  if (lo >= hi) return;
  std::size_t mid = lo + (hi - lo) / 2;
  const Site& s = pts[mid];
  std::int64_t dx = s.x - x, dy = s.y - y;
  std::int64_t d = dx * dx + dy * dy;
  if (better(s, d, best, best_d)) {
    best = &s;
    best_d = d;
  }
  std::int64_t delta = depth % 2 == 0 ? x - s.x : y - s.y;
  bool left_first = delta <= 0;
  if (left_first) {
    search(pts, lo, mid, depth + 1, x, y, best, best_d);
    if (delta * delta <= best_d) search(pts, mid + 1, hi, depth + 1, x, y, best, best_d);
  } else {
    search(pts, mid + 1, hi, depth + 1, x, y, best, best_d);
    if (delta * delta <= best_d) search(pts, lo, mid, depth + 1, x, y, best, best_d);
  }
}

const Site& NnIndex::nearest(Coord x, Coord y) const {
  if (count_ == 0) throw EmptyIndexError("nearest query on empty index");
  const Site* best = nullptr;
  std::int64_t best_d = 0;
  for (const Layer& l : layers_) search(l.pts, 0, l.pts.size(), 0, x, y, best, best_d);
  return *best;
}

}  // namespace ivd
