#pragma once

#include "capset/point_set.hpp"

namespace capset {

// Nonzero vectors of F_3^dim, no two proportional: one representative per
// point of a set in PG(dim-1, 3).
class ProjectiveCap {
 public:
  // Throws InvalidInputError on a zero vector or a proportional pair.
  explicit ProjectiveCap(PointSet members);

  int dim() const noexcept { return members_.dim(); }
  std::size_t size() const noexcept { return members_.size(); }
  const PointSet& members() const noexcept { return members_; }

 private:
  PointSet members_;
};

}  // namespace capset
