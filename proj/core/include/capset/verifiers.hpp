#pragma once

// Exhaustive checkers. Each returns a VerifyReport; a failing report carries
// the first counterexample in rank order, so results are reproducible for any
// worker count.

#include <cstddef>
#include <iosfwd>

#include "capset/point_set.hpp"
#include "capset/projective.hpp"
#include "capset/report.hpp"

namespace capset {

enum class CheckPath { kAuto, kFast, kNaive };

struct VerifyOptions {
  unsigned workers = 0;  // 0 = default_workers()
  CheckPath path = CheckPath::kAuto;
  std::ostream* progress = nullptr;
};

// Sets up to this size use the triple scan under CheckPath::kAuto.
inline constexpr std::size_t kNaiveCapThreshold = 512;

// No three distinct members sum to zero. Witness: the collinear triple in
// increasing order (identical for both paths).
VerifyReport is_cap(const PointSet& s, const VerifyOptions& opts = {});
VerifyReport is_cap_naive(const PointSet& s);
VerifyReport is_cap_sweep(const PointSet& s, const VerifyOptions& opts = {});

// Every non-member completes some pair of members to a line. Throws
// InvalidInputError if s is not a cap, CapacityError above the bitmap limit.
VerifyReport is_complete_cap(const PointSet& s, const VerifyOptions& opts = {});

struct CapCompleteReports {
  VerifyReport cap;
  VerifyReport complete;
};

// Both checks from a single coverage sweep (or the oracles under kNaive).
// When s is not a cap, `complete` fails too, carrying the cap witness.
CapCompleteReports verify_cap_complete(const PointSet& s, const VerifyOptions& opts = {});

// Condition (i): every two members share a zero coordinate.
VerifyReport pset_pair_condition(const PointSet& s);

// Condition (i) and no collinear triple.
VerifyReport is_pset(const PointSet& s, const VerifyOptions& opts = {});

// Every member has an odd number of zero coordinates.
VerifyReport is_odd_pset(const PointSet& s);

// X(a) is contained in s for every member a. Witness: [missing, member].
VerifyReport is_b_saturated(const PointSet& s);

// No non-member x keeps s u {x} a P-set. Throws InvalidInputError if s is not
// a P-set. Witness: the first extending point.
VerifyReport is_complete_pset(const PointSet& s, const VerifyOptions& opts = {});

// Condition (i) on all pairs and, on all distinct triples, either equal zero
// supports or some two members sharing a zero where the third is nonzero.
VerifyReport theoremC_characterization(const PointSet& s);

// x in p1, y in p2, z in p3: x + y + z != 0.
VerifyReport check_condition1(const PointSet& p1, const PointSet& p2, const PointSet& p3);
// x in p1, {y, z} a pair of distinct members of p3: x + y + z != 0.
VerifyReport check_condition2(const PointSet& p1, const PointSet& p3);
// x in p12, y in p3: x and y share a zero coordinate.
VerifyReport check_condition3(const PointSet& p12, const PointSet& p3);

// Every three representatives are linearly independent over F_3.
VerifyReport is_projective_cap(const ProjectiveCap& a);

// Rank over F_3 of the given vectors (Gaussian elimination mod 3).
int rank_mod3(std::span<const Point> vectors);

}  // namespace capset
