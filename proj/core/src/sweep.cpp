#include "capset/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <condition_variable>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>

#include "capset/errors.hpp"

namespace capset {
namespace {

// Rank of a point given by two planes of at most 20 bits, via four 1024-entry
// tables. 3^20 < 2^32, so 32-bit sums suffice.
class PlaneRanker {
 public:
  PlaneRanker() {
    for (std::uint32_t v = 0; v < 1024; ++v) {
      std::uint32_t lo = 0;
      for (int b = 0; b < 10; ++b) {
        if (v & (1U << b)) lo += static_cast<std::uint32_t>(pow3(b));
      }
      const auto hi = static_cast<std::uint32_t>(lo * pow3(10));
      ones_lo_[v] = lo;
      ones_hi_[v] = hi;
      twos_lo_[v] = 2 * lo;
      twos_hi_[v] = 2 * hi;
    }
  }

  std::uint32_t operator()(Mask ones, Mask twos) const noexcept {
    return ones_lo_[ones & 1023] + ones_hi_[ones >> 10] + twos_lo_[twos & 1023] +
           twos_hi_[twos >> 10];
  }

 private:
  std::array<std::uint32_t, 1024> ones_lo_{};
  std::array<std::uint32_t, 1024> ones_hi_{};
  std::array<std::uint32_t, 1024> twos_lo_{};
  std::array<std::uint32_t, 1024> twos_hi_{};
};

const PlaneRanker& ranker() {
  static const PlaneRanker r;
  return r;
}

// Structure-of-arrays copy of the set used by the inner loop.
struct PackedSet {
  std::vector<Mask> ones;
  std::vector<Mask> twos;
  std::vector<Mask> zeros;  // complement of ones|twos, unmasked

  explicit PackedSet(const PointSet& s) {
    ones.reserve(s.size());
    twos.reserve(s.size());
    zeros.reserve(s.size());
    for (const auto& p : s) {
      ones.push_back(p.ones());
      twos.push_back(p.twos());
      zeros.push_back(~(p.ones() | p.twos()));
    }
  }
};

struct ChunkResult {
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

// Cap-only: stop at the first pair (in chunk order) whose third point is a
// member.
ChunkResult scan_cap(const PackedSet& ps, const std::uint64_t* member,
                     const PairChunk& c, const std::atomic<std::size_t>& stop_after,
                     std::size_t chunk_index) {
  const auto& rk = ranker();
  const std::size_t n = ps.ones.size();
  const Mask* ones = ps.ones.data();
  const Mask* twos = ps.twos.data();
  const Mask* zeros = ps.zeros.data();
  for (std::size_t i = c.first_anchor; i < c.end_anchor; ++i) {
    if (stop_after.load(std::memory_order_relaxed) < chunk_index) return {};
    const Mask a1 = ones[i];
    const Mask a2 = twos[i];
    const Mask az = zeros[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Mask b1 = ones[j];
      const Mask b2 = twos[j];
      const Mask bz = zeros[j];
      const Mask t1 = (a1 & b1) | (az & b2) | (a2 & bz);
      const Mask t2 = (a2 & b2) | (az & b1) | (a1 & bz);
      assert(!(t1 == a1 && t2 == a2) && !(t1 == b1 && t2 == b2));
      const std::uint32_t r = rk(t1, t2);
      if ((member[r >> 6] >> (r & 63)) & 1U) return {std::make_pair(i, j)};
    }
  }
  return {};
}

// Coverage: mark every third point; membership is checked afterwards.
void scan_coverage(const PackedSet& ps, std::uint64_t* cov, const PairChunk& c) {
  const auto& rk = ranker();
  const std::size_t n = ps.ones.size();
  const Mask* ones = ps.ones.data();
  const Mask* twos = ps.twos.data();
  const Mask* zeros = ps.zeros.data();
  for (std::size_t i = c.first_anchor; i < c.end_anchor; ++i) {
    const Mask a1 = ones[i];
    const Mask a2 = twos[i];
    const Mask az = zeros[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Mask b1 = ones[j];
      const Mask b2 = twos[j];
      const Mask bz = zeros[j];
      const Mask t1 = (a1 & b1) | (az & b2) | (a2 & bz);
      const Mask t2 = (a2 & b2) | (az & b1) | (a1 & bz);
      const std::uint32_t r = rk(t1, t2);
      cov[r >> 6] |= std::uint64_t{1} << (r & 63);
    }
  }
}

std::uint64_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  // Pairs before anchor i: sum_{a<i} (n-1-a) = i(2n - i - 1)/2.
  const auto ii = static_cast<std::uint64_t>(i);
  const auto nn = static_cast<std::uint64_t>(n);
  return ii * (2 * nn - ii - 1) / 2 + (j - i - 1);
}

class ProgressPrinter {
 public:
  ProgressPrinter(std::ostream* out, std::uint64_t total)
      : out_(out), total_(total) {}

  void print(std::uint64_t done) const {
    if (!out_) return;
    const double pct = total_ ? 100.0 * static_cast<double>(done) /
                                    static_cast<double>(total_)
                              : 100.0;
    *out_ << "sweep: " << done << '/' << total_ << " (" << std::fixed
          << std::setprecision(1) << pct << "%)" << std::endl;
  }

 private:
  std::ostream* out_;
  std::uint64_t total_;
};

}  // namespace

std::uint64_t pair_count(std::size_t n) noexcept {
  const auto nn = static_cast<std::uint64_t>(n);
  return nn < 2 ? 0 : nn * (nn - 1) / 2;
}

std::vector<PairChunk> plan_chunks(std::size_t n, std::uint64_t target_pairs) {
  std::vector<PairChunk> chunks;
  if (n < 2) return chunks;
  target_pairs = std::max<std::uint64_t>(target_pairs, 1);
  PairChunk cur;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (cur.pairs == 0) {
      cur.first_anchor = i;
      cur.first_pair = pair_index(n, i, i + 1);
    }
    cur.pairs += n - 1 - i;
    cur.end_anchor = i + 1;
    if (cur.pairs >= target_pairs) {
      chunks.push_back(cur);
      cur = PairChunk{};
    }
  }
  if (cur.pairs > 0) chunks.push_back(cur);
  return chunks;
}

unsigned default_workers() {
  if (const char* env = std::getenv("CAPSET_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 4096) {
      return static_cast<unsigned>(v);
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

SweepOutcome run_sweep(const SweepTask& task) {
  if (task.set == nullptr) throw InvalidInputError("sweep task has no point set");
  const PointSet& input = *task.set;
  if (input.dim() > kMaxBitmapDim) {
    throw CapacityError("dimension " + std::to_string(input.dim()) +
                        " exceeds sweep capacity " + std::to_string(kMaxBitmapDim));
  }
  const PointSet set = input.with_membership();
  const PackedSet packed(set);
  const std::size_t n = set.size();
  const auto chunks = plan_chunks(n, task.chunk_pairs);
  const unsigned workers = std::max(
      1U, std::min<unsigned>(task.workers ? task.workers : default_workers(),
                             static_cast<unsigned>(std::max<std::size_t>(chunks.size(), 1))));

  SweepOutcome out;
  out.pairs_total = pair_count(n);
  out.workers = task.workers ? task.workers : default_workers();
  out.chunks = chunks.size();

  const bool coverage_mode = task.mode == SweepMode::kCapAndCoverage;
  const std::uint64_t* member = set.membership()->words().data();

  std::vector<ChunkResult> results(chunks.size());
  std::vector<SpaceBitmap> local_cov;
  if (coverage_mode) {
    local_cov.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) local_cov.emplace_back(set.dim());
  }

  std::atomic<std::size_t> next_chunk{0};
  std::atomic<std::size_t> first_violation_chunk{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> done_pairs{0};

  auto work = [&](unsigned w) {
    for (;;) {
      const std::size_t c = next_chunk.fetch_add(1, std::memory_order_relaxed);
      if (c >= chunks.size()) return;
      if (coverage_mode) {
        scan_coverage(packed, local_cov[w].words().data(), chunks[c]);
      } else {
        if (first_violation_chunk.load(std::memory_order_relaxed) < c) continue;
        results[c] = scan_cap(packed, member, chunks[c], first_violation_chunk, c);
        if (results[c].violation) {
          std::size_t prev = first_violation_chunk.load();
          while (c < prev && !first_violation_chunk.compare_exchange_weak(prev, c)) {
          }
        }
      }
      done_pairs.fetch_add(chunks[c].pairs, std::memory_order_relaxed);
    }
  };

  const ProgressPrinter printer(task.progress, out.pairs_total);
  if (workers == 1) {
    auto last = std::chrono::steady_clock::now();
    for (std::size_t c = 0; c < chunks.size(); ++c) {
      if (coverage_mode) {
        scan_coverage(packed, local_cov[0].words().data(), chunks[c]);
      } else {
        results[c] = scan_cap(packed, member, chunks[c], first_violation_chunk, c);
        if (results[c].violation) {
          first_violation_chunk = c;
          break;
        }
      }
      done_pairs += chunks[c].pairs;
      if (task.progress) {
        const auto now = std::chrono::steady_clock::now();
        if (now - last >= task.progress_interval) {
          printer.print(done_pairs.load());
          last = now;
        }
      }
    }
  } else {
    std::mutex mu;
    std::condition_variable cv;
    unsigned remaining = workers;
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          work(w);
          std::lock_guard lock(mu);
          --remaining;
          cv.notify_all();
        });
      }
      std::unique_lock lock(mu);
      while (!cv.wait_for(lock, task.progress_interval, [&] { return remaining == 0; })) {
        printer.print(done_pairs.load());
      }
    }
  }

  if (coverage_mode) {
    SpaceBitmap merged = std::move(local_cov[0]);
    for (unsigned w = 1; w < workers; ++w) merged |= local_cov[w];
    out.pairs_examined = out.pairs_total;
    // A member that is also covered means some pair completes to a line
    // inside the set; find the canonical first such pair with a cap scan.
    bool hit = false;
    const auto mw = set.membership()->words();
    const auto cw = merged.words();
    for (std::size_t k = 0; k < mw.size() && !hit; ++k) hit = (mw[k] & cw[k]) != 0;
    if (hit) {
      SweepTask again = task;
      again.set = &set;
      again.mode = SweepMode::kCapOnly;
      again.progress = nullptr;
      out.violation = run_sweep(again).violation;
    }
    out.coverage = std::move(merged);
  } else {
    const std::size_t vc = first_violation_chunk.load();
    if (vc < chunks.size()) {
      const auto [i, j] = *results[vc].violation;
      Violation v;
      v.first = i;
      v.second = j;
      v.a = set[i];
      v.b = set[j];
      v.third = third_point(v.a, v.b);
      v.pair_index = pair_index(n, i, j);
      out.violation = v;
      out.pairs_examined = v.pair_index + 1;
    } else {
      out.pairs_examined = out.pairs_total;
    }
  }
  if (task.progress) printer.print(out.pairs_examined);
  return out;
}

VerifyReport coverage_complete(const PointSet& set, const SpaceBitmap& coverage) {
  const auto start = std::chrono::steady_clock::now();
  if (set.dim() != coverage.dim()) {
    throw DimensionError("coverage bitmap dimension " + std::to_string(coverage.dim()) +
                         " does not match set dimension " + std::to_string(set.dim()));
  }
  SpaceBitmap filled = coverage;
  for (const auto& p : set) filled.set(rank(p));
  VerifyReport r;
  r.property = "complete";
  r.unit = "points";
  r.examined = filled.size();
  if (auto gap = filled.first_unset()) {
    r.passed = false;
    r.witness.push_back(unrank(*gap, set.dim()));
  } else {
    r.passed = true;
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

Rank third_rank_packed(const Point& a, const Point& b) noexcept {
  const auto t = planes::third(a.ones(), a.twos(), b.ones(), b.twos());
  return ranker()(t.ones, t.twos);
}

Rank third_rank_reference(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw DimensionError("dimension mismatch");
  Rank r = 0;
  for (int i = 1; i <= a.dim(); ++i) {
    const int digit = (6 - a.coord(i) - b.coord(i)) % 3;
    r = r * 3 + static_cast<Rank>(digit);
  }
  return r;
}

}  // namespace capset
