#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "capset/f3.hpp"

namespace capset {

// Dense bit array over every rank of F_3^n.
class SpaceBitmap {
 public:
  // Throws CapacityError when dim > kMaxBitmapDim.
  explicit SpaceBitmap(int dim);

  int dim() const noexcept { return dim_; }
  Rank size() const noexcept { return bits_; }

  bool test(Rank r) const noexcept { return (words_[r >> 6] >> (r & 63)) & 1U; }
  void set(Rank r) noexcept { words_[r >> 6] |= std::uint64_t{1} << (r & 63); }
  void reset(Rank r) noexcept { words_[r >> 6] &= ~(std::uint64_t{1} << (r & 63)); }

  Rank count() const noexcept;
  // First rank with a clear bit at or after `from`, or nullopt.
  std::optional<Rank> first_unset(Rank from = 0) const noexcept;

  SpaceBitmap& operator|=(const SpaceBitmap& other);
  bool is_subset_of(const SpaceBitmap& other) const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  friend bool operator==(const SpaceBitmap&, const SpaceBitmap&) = default;

 private:
  int dim_;
  Rank bits_;
  std::vector<std::uint64_t> words_;
};

// Immutable, duplicate-free, rank-ordered set of points of one dimension.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int dim);

  // Sorts and drops duplicates.
  static PointSet from_unsorted(int dim, std::vector<Point> points);
  // Requires strictly increasing input; throws InvalidInputError otherwise.
  static PointSet from_sorted(int dim, std::vector<Point> points);
  static PointSet from_strings(std::initializer_list<const char*> rows);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  std::span<const Point> points() const noexcept { return points_; }
  const Point& operator[](std::size_t i) const noexcept { return points_[i]; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  bool contains(const Point& p) const noexcept;

  // Copy of this set carrying a membership bitmap (shared, read-only).
  // Throws CapacityError above kMaxBitmapDim.
  PointSet with_membership() const;
  bool has_membership() const noexcept { return membership_ != nullptr; }
  const SpaceBitmap* membership() const noexcept { return membership_.get(); }

  // Equality is on dim and members; the cached bitmap is ignored.
  friend bool operator==(const PointSet& a, const PointSet& b) noexcept {
    return a.dim_ == b.dim_ && a.points_ == b.points_;
  }

 private:
  int dim_ = 0;
  std::vector<Point> points_;
  std::shared_ptr<const SpaceBitmap> membership_;
};

// X(p): every point with the same zero support as p.
PointSet support_class(const Point& p);

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);
bool disjoint(const PointSet& a, const PointSet& b);

}  // namespace capset
