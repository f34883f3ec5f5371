#pragma once

// Conversions between library sets and oracle sets.

#include <string>

#include <capset/point_set.hpp>

#include "oracle.hpp"

namespace bridge {

inline oracle::Set to_oracle(const capset::PointSet& s) {
  oracle::Set out;
  for (const auto& p : s) out.push_back(oracle::from_string(p.to_string()));
  return out;
}

inline capset::PointSet to_lib(int dim, const oracle::Set& s) {
  std::vector<capset::Point> pts;
  for (const auto& v : s) pts.push_back(capset::Point::parse(oracle::to_string(v)));
  return capset::PointSet::from_unsorted(dim, std::move(pts));
}

// Subset of `universe` selected by the bits of `mask`.
inline oracle::Set subset(const std::vector<oracle::Vec>& universe, unsigned long mask) {
  oracle::Set out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (mask >> i & 1) out.push_back(universe[i]);
  }
  return out;
}

}  // namespace bridge
