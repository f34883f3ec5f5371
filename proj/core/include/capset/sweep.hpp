#pragma once

// Pair-sweep engine: visits every unordered pair {a, b} of a point set once,
// forms the third point -(a + b), and either stops at the first pair whose
// third point is a member (cap check) or marks every third point in a
// coverage bitmap (completeness).

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "capset/f3.hpp"
#include "capset/point_set.hpp"
#include "capset/report.hpp"

namespace capset {

enum class SweepMode { kCapOnly, kCapAndCoverage };

// Contiguous range of anchors [first_anchor, end_anchor); each anchor i is
// paired with every j > i.
struct PairChunk {
  std::size_t first_anchor = 0;
  std::size_t end_anchor = 0;
  std::uint64_t first_pair = 0;  // canonical index of the chunk's first pair
  std::uint64_t pairs = 0;
};

inline constexpr std::uint64_t kDefaultChunkPairs = 10'000'000;

std::uint64_t pair_count(std::size_t n) noexcept;

// Partitions [0, n(n-1)/2) into anchor-aligned chunks of roughly
// `target_pairs` pairs each. Depends only on n and the target, never on the
// worker count.
std::vector<PairChunk> plan_chunks(std::size_t n,
                                   std::uint64_t target_pairs = kDefaultChunkPairs);

// Worker count used when a caller passes 0: CAPSET_THREADS if set to a
// positive integer, otherwise std::thread::hardware_concurrency().
unsigned default_workers();

struct SweepTask {
  const PointSet* set = nullptr;
  SweepMode mode = SweepMode::kCapOnly;
  unsigned workers = 0;
  std::uint64_t chunk_pairs = kDefaultChunkPairs;
  // When set, progress lines go here at most once per `progress_interval`.
  std::ostream* progress = nullptr;
  std::chrono::milliseconds progress_interval{1000};
};

struct Violation {
  std::size_t first = 0;  // indices into the set, first < second
  std::size_t second = 0;
  Point a;
  Point b;
  Point third;
  std::uint64_t pair_index = 0;  // canonical position of the pair
};

struct SweepOutcome {
  std::optional<Violation> violation;
  std::optional<SpaceBitmap> coverage;
  // In cap-only mode with a violation this is pair_index + 1: the number of
  // pairs a sequential scan would have examined. Otherwise all pairs.
  std::uint64_t pairs_examined = 0;
  std::uint64_t pairs_total = 0;
  unsigned workers = 1;
  std::size_t chunks = 0;
};

// Throws CapacityError when the set's dimension exceeds kMaxBitmapDim and
// InvalidInputError when no set is given. Results do not depend on workers.
SweepOutcome run_sweep(const SweepTask& task);

// passed iff every rank is a member or covered; the witness is the first
// uncovered non-member in rank order.
VerifyReport coverage_complete(const PointSet& set, const SpaceBitmap& coverage);

// Rank of -(a + b) computed two ways: the packed table-driven path used by
// the sweep, and a per-coordinate reference kept for differential testing.
Rank third_rank_packed(const Point& a, const Point& b) noexcept;
Rank third_rank_reference(const Point& a, const Point& b);

}  // namespace capset
