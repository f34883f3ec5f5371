#include "capset/point_set.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <string>

#include "capset/errors.hpp"

namespace capset {

SpaceBitmap::SpaceBitmap(int dim) : dim_(dim) {
  if (dim < 1) throw DimensionError("bitmap dimension must be positive");
  if (dim > kMaxBitmapDim) {
    throw CapacityError("dimension " + std::to_string(dim) +
                        " exceeds bitmap capacity " +
                        std::to_string(kMaxBitmapDim));
  }
  bits_ = pow3(dim);
  words_.assign((bits_ + 63) / 64, 0);
}

Rank SpaceBitmap::count() const noexcept {
  Rank total = 0;
  for (auto w : words_) total += static_cast<Rank>(std::popcount(w));
  return total;
}

std::optional<Rank> SpaceBitmap::first_unset(Rank from) const noexcept {
  for (Rank w = from >> 6; w < words_.size(); ++w) {
    std::uint64_t inv = ~words_[w];
    if (w == (from >> 6)) inv &= ~std::uint64_t{0} << (from & 63);
    if (inv == 0) continue;
    const Rank r = w * 64 + static_cast<Rank>(std::countr_zero(inv));
    if (r >= bits_) return std::nullopt;
    return r;
  }
  return std::nullopt;
}

SpaceBitmap& SpaceBitmap::operator|=(const SpaceBitmap& other) {
  if (other.dim_ != dim_) throw DimensionError("bitmap dimension mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

bool SpaceBitmap::is_subset_of(const SpaceBitmap& other) const {
  if (other.dim_ != dim_) throw DimensionError("bitmap dimension mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

PointSet::PointSet(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxPointDim) {
    throw DimensionError("point set dimension " + std::to_string(dim) +
                         " outside [1, " + std::to_string(kMaxPointDim) + "]");
  }
}

PointSet PointSet::from_unsorted(int dim, std::vector<Point> points) {
  PointSet s(dim);
  for (const auto& p : points) {
    if (p.dim() != dim) throw DimensionError("point of dimension " + std::to_string(p.dim()) +
                                             " in a set of dimension " + std::to_string(dim));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  s.points_ = std::move(points);
  return s;
}

PointSet PointSet::from_sorted(int dim, std::vector<Point> points) {
  PointSet s(dim);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != dim) throw DimensionError("point dimension mismatch");
    if (i > 0 && !(points[i - 1] < points[i])) {
      throw InvalidInputError("points not strictly increasing at index " +
                              std::to_string(i));
    }
  }
  s.points_ = std::move(points);
  return s;
}

PointSet PointSet::from_strings(std::initializer_list<const char*> rows) {
  std::vector<Point> pts;
  for (const char* r : rows) pts.push_back(Point::parse(r));
  if (pts.empty()) throw InvalidInputError("from_strings needs at least one row");
  const int dim = pts.front().dim();
  return from_unsorted(dim, std::move(pts));
}

bool PointSet::contains(const Point& p) const noexcept {
  if (p.dim() != dim_) return false;
  if (membership_) return membership_->test(rank(p));
  return std::binary_search(points_.begin(), points_.end(), p);
}

PointSet PointSet::with_membership() const {
  if (membership_) return *this;
  auto bm = std::make_shared<SpaceBitmap>(dim_);
  for (const auto& p : points_) bm->set(rank(p));
  PointSet out = *this;
  out.membership_ = std::move(bm);
  return out;
}

PointSet support_class(const Point& p) {
  const Mask free = p.nonzero_mask();
  std::vector<Point> pts;
  pts.reserve(std::size_t{1} << std::popcount(free));
  // Walk every subset of the nonzero positions; a set bit means "this
  // coordinate is 2".
  Mask sub = 0;
  do {
    pts.push_back(Point::from_planes(p.dim(), free & ~sub, sub));
    sub = (sub - free) & free;
  } while (sub != 0);
  return PointSet::from_unsorted(p.dim(), std::move(pts));
}

namespace {

void check_dims(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("set dimension mismatch: " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

PointSet set_union(const PointSet& a, const PointSet& b) {
  check_dims(a, b);
  std::vector<Point> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet::from_sorted(a.dim(), std::move(out));
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  check_dims(a, b);
  std::vector<Point> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return PointSet::from_sorted(a.dim(), std::move(out));
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
  check_dims(a, b);
  std::vector<Point> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return PointSet::from_sorted(a.dim(), std::move(out));
}

bool disjoint(const PointSet& a, const PointSet& b) {
  check_dims(a, b);
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

}  // namespace capset
