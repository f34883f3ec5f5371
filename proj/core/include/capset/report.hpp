#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "capset/f3.hpp"

namespace capset {

// Outcome of one verification. A failed report always carries a witness that
// reproduces the failure through the f3 primitives.
struct VerifyReport {
  std::string property;
  bool passed = false;
  std::vector<Point> witness;
  // Work counter; `unit` says what was counted ("pairs", "triples", "points").
  std::uint64_t examined = 0;
  std::string unit = "pairs";
  std::chrono::nanoseconds elapsed{0};
  unsigned workers = 1;
  // Free-form qualifier, e.g. which sub-condition failed.
  std::string detail;
};

}  // namespace capset
