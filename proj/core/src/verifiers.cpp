#include "capset/verifiers.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <unordered_set>
#include <vector>

#include "capset/errors.hpp"
#include "capset/sweep.hpp"

namespace capset {
namespace {

using Clock = std::chrono::steady_clock;

class Timed {
 public:
  Timed(VerifyReport& r) : r_(r), start_(Clock::now()) {}
  ~Timed() { r_.elapsed = Clock::now() - start_; }
  Timed(const Timed&) = delete;
  Timed& operator=(const Timed&) = delete;

 private:
  VerifyReport& r_;
  Clock::time_point start_;
};

VerifyReport make_report(std::string property, std::string unit = "pairs") {
  VerifyReport r;
  r.property = std::move(property);
  r.unit = std::move(unit);
  return r;
}

void fail(VerifyReport& r, std::vector<Point> witness, std::string detail = {}) {
  r.passed = false;
  r.witness = std::move(witness);
  r.detail = std::move(detail);
}

void require_same_dim(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

unsigned resolve_workers(unsigned w) { return w ? w : default_workers(); }

bool use_naive(const PointSet& s, const VerifyOptions& opts) {
  switch (opts.path) {
    case CheckPath::kNaive:
      return true;
    case CheckPath::kFast:
      return false;
    case CheckPath::kAuto:
      break;
  }
  return s.size() <= kNaiveCapThreshold || s.dim() > kMaxBitmapDim;
}

// Calls fn(rank, ones, twos) for every point of F_3^dim in rank order.
template <typename Fn>
void for_each_point(int dim, Fn&& fn) {
  const Rank total = pow3(dim);
  Mask ones = 0;
  Mask twos = 0;
  for (Rank r = 0; r < total; ++r) {
    fn(r, ones, twos);
    for (int j = 0; j < dim; ++j) {
      const Mask bit = Mask{1} << j;
      if (twos & bit) {
        twos &= ~bit;  // 2 -> 0, carry
        continue;
      }
      if (ones & bit) {
        ones &= ~bit;
        twos |= bit;
      } else {
        ones |= bit;
      }
      break;
    }
  }
}

// hits[z] is true when zero mask z meets the zero mask of every member.
std::vector<bool> hitting_masks(const PointSet& s) {
  std::vector<Mask> distinct;
  {
    std::unordered_set<Mask> seen;
    for (const auto& p : s) {
      if (seen.insert(p.zero_mask()).second) distinct.push_back(p.zero_mask());
    }
  }
  const std::size_t masks = std::size_t{1} << s.dim();
  std::vector<bool> hits(masks);
  for (std::size_t z = 0; z < masks; ++z) {
    const auto zm = static_cast<Mask>(z);
    hits[z] = std::all_of(distinct.begin(), distinct.end(),
                          [zm](Mask m) { return (m & zm) != 0; });
  }
  return hits;
}

}  // namespace

VerifyReport is_cap_naive(const PointSet& s) {
  auto r = make_report("cap", "triples");
  Timed t(r);
  r.workers = 1;
  const auto pts = s.points();
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        ++r.examined;
        if (sums_to_zero(pts[i], pts[j], pts[k])) {
          fail(r, {pts[i], pts[j], pts[k]});
          return r;
        }
      }
    }
  }
  r.passed = true;
  return r;
}

VerifyReport is_cap_sweep(const PointSet& s, const VerifyOptions& opts) {
  auto r = make_report("cap", "pairs");
  Timed t(r);
  SweepTask task;
  task.set = &s;
  task.mode = SweepMode::kCapOnly;
  task.workers = resolve_workers(opts.workers);
  task.progress = opts.progress;
  const auto out = run_sweep(task);
  r.examined = out.pairs_examined;
  r.workers = out.workers;
  if (out.violation) {
    std::vector<Point> w{out.violation->a, out.violation->b, out.violation->third};
    std::sort(w.begin(), w.end());
    fail(r, std::move(w));
  } else {
    r.passed = true;
  }
  return r;
}

VerifyReport is_cap(const PointSet& s, const VerifyOptions& opts) {
  return use_naive(s, opts) ? is_cap_naive(s) : is_cap_sweep(s, opts);
}

VerifyReport is_complete_cap(const PointSet& s, const VerifyOptions& opts) {
  auto r = make_report("complete", "pairs");
  Timed t(r);
  if (s.dim() > kMaxBitmapDim) {
    throw CapacityError("completeness check needs dimension <= " +
                        std::to_string(kMaxBitmapDim));
  }
  if (opts.path == CheckPath::kNaive) {
    // Per-point oracle: x is blocked iff some member y has -(x+y) in s.
    const auto cap = is_cap_naive(s);
    if (!cap.passed) throw InvalidInputError("completeness requires a cap set");
    r.workers = 1;
    r.unit = "points";
    bool found_gap = false;
    for_each_point(s.dim(), [&](Rank, Mask ones, Mask twos) {
      if (found_gap) return;
      const Point x = Point::from_planes(s.dim(), ones, twos);
      ++r.examined;
      if (s.contains(x)) return;
      const bool blocked = std::any_of(s.begin(), s.end(), [&](const Point& y) {
        return s.contains(third_point(x, y));
      });
      if (!blocked) {
        fail(r, {x});
        found_gap = true;
      }
    });
    if (!found_gap) r.passed = true;
    return r;
  }
  SweepTask task;
  task.set = &s;
  task.mode = SweepMode::kCapAndCoverage;
  task.workers = resolve_workers(opts.workers);
  task.progress = opts.progress;
  const auto out = run_sweep(task);
  if (out.violation) throw InvalidInputError("completeness requires a cap set");
  auto cov = coverage_complete(s, *out.coverage);
  r.passed = cov.passed;
  r.witness = std::move(cov.witness);
  r.examined = out.pairs_examined;
  r.workers = out.workers;
  return r;
}

CapCompleteReports verify_cap_complete(const PointSet& s, const VerifyOptions& opts) {
  if (s.dim() > kMaxBitmapDim) {
    throw CapacityError("completeness check needs dimension <= " +
                        std::to_string(kMaxBitmapDim));
  }
  CapCompleteReports out;
  if (opts.path == CheckPath::kNaive) {
    out.cap = is_cap_naive(s);
    if (out.cap.passed) {
      out.complete = is_complete_cap(s, opts);
    } else {
      out.complete = make_report("complete", "points");
      fail(out.complete, out.cap.witness, "not a cap");
    }
    return out;
  }
  out.cap = make_report("cap", "pairs");
  out.complete = make_report("complete", "pairs");
  const auto start = Clock::now();
  SweepTask task;
  task.set = &s;
  task.mode = SweepMode::kCapAndCoverage;
  task.workers = resolve_workers(opts.workers);
  task.progress = opts.progress;
  const auto sw = run_sweep(task);
  for (auto* r : {&out.cap, &out.complete}) {
    r->examined = sw.pairs_examined;
    r->workers = sw.workers;
  }
  if (sw.violation) {
    std::vector<Point> w{sw.violation->a, sw.violation->b, sw.violation->third};
    std::sort(w.begin(), w.end());
    fail(out.cap, w);
    fail(out.complete, std::move(w), "not a cap");
  } else {
    out.cap.passed = true;
    auto cov = coverage_complete(s, *sw.coverage);
    out.complete.passed = cov.passed;
    out.complete.witness = std::move(cov.witness);
  }
  const auto elapsed = Clock::now() - start;
  out.cap.elapsed = out.complete.elapsed = elapsed;
  return out;
}

VerifyReport pset_pair_condition(const PointSet& s) {
  auto r = make_report("pset-pairs", "pairs");
  Timed t(r);
  const auto pts = s.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Mask zi = pts[i].zero_mask();
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      ++r.examined;
      if ((zi & pts[j].zero_mask()) == 0) {
        fail(r, {pts[i], pts[j]}, "condition (i)");
        return r;
      }
    }
  }
  r.passed = true;
  return r;
}

VerifyReport is_pset(const PointSet& s, const VerifyOptions& opts) {
  auto r = make_report("pset", "pairs");
  Timed t(r);
  auto pairs = pset_pair_condition(s);
  r.examined = pairs.examined;
  if (!pairs.passed) {
    fail(r, std::move(pairs.witness), "condition (i)");
    return r;
  }
  auto cap = is_cap(s, opts);
  r.examined += cap.examined;
  r.workers = cap.workers;
  if (!cap.passed) {
    fail(r, std::move(cap.witness), "condition (ii)");
    return r;
  }
  r.passed = true;
  return r;
}

VerifyReport is_odd_pset(const PointSet& s) {
  auto r = make_report("odd", "points");
  Timed t(r);
  for (const auto& p : s) {
    ++r.examined;
    if (p.zero_count() % 2 == 0) {
      fail(r, {p}, "even zero count " + std::to_string(p.zero_count()));
      return r;
    }
  }
  r.passed = true;
  return r;
}

VerifyReport is_b_saturated(const PointSet& s) {
  auto r = make_report("saturated", "points");
  Timed t(r);
  for (const auto& p : s) {
    for (const auto& q : support_class(p)) {
      ++r.examined;
      if (!s.contains(q)) {
        fail(r, {q, p}, "support class of " + p.to_string() + " incomplete");
        return r;
      }
    }
  }
  r.passed = true;
  return r;
}

VerifyReport is_complete_pset(const PointSet& s, const VerifyOptions& opts) {
  auto r = make_report("pset-complete", "points");
  Timed t(r);
  if (s.dim() > kMaxBitmapDim) {
    throw CapacityError("P-set completeness needs dimension <= " +
                        std::to_string(kMaxBitmapDim));
  }
  if (!is_pset(s, opts).passed) {
    throw InvalidInputError("P-set completeness requires a P-set");
  }
  const auto hits = hitting_masks(s);
  SweepTask task;
  task.set = &s;
  task.mode = SweepMode::kCapAndCoverage;
  task.workers = resolve_workers(opts.workers);
  const auto out = run_sweep(task);
  r.workers = out.workers;
  const SpaceBitmap& cov = *out.coverage;
  const PointSet indexed = s.with_membership();
  const SpaceBitmap& member = *indexed.membership();
  const Mask full = dim_mask(s.dim());
  bool extended = false;
  for_each_point(s.dim(), [&](Rank rk, Mask ones, Mask twos) {
    if (extended) return;
    ++r.examined;
    if (member.test(rk)) return;
    // Condition (i) against every member, then no pair of members completes
    // x to a line.
    if (!hits[~(ones | twos) & full]) return;
    if (cov.test(rk)) return;
    fail(r, {Point::from_planes(s.dim(), ones, twos)});
    extended = true;
  });
  if (!extended) r.passed = true;
  return r;
}

VerifyReport theoremC_characterization(const PointSet& s) {
  auto r = make_report("thmC", "triples");
  Timed t(r);
  auto pairs = pset_pair_condition(s);
  if (!pairs.passed) {
    fail(r, std::move(pairs.witness), "condition (i)");
    return r;
  }
  const auto pts = s.points();
  const std::size_t n = pts.size();
  std::vector<Mask> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = pts[i].zero_mask();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Mask zij = z[i] & z[j];
      for (std::size_t k = j + 1; k < n; ++k) {
        ++r.examined;
        if (z[i] == z[j] && z[j] == z[k]) continue;
        const Mask sep = (zij & ~z[k]) | (z[i] & z[k] & ~z[j]) | (z[j] & z[k] & ~z[i]);
        if (sep == 0) {
          fail(r, {pts[i], pts[j], pts[k]}, "condition (iii)");
          return r;
        }
      }
    }
  }
  r.passed = true;
  return r;
}

VerifyReport check_condition1(const PointSet& p1, const PointSet& p2, const PointSet& p3) {
  require_same_dim(p1, p2);
  require_same_dim(p1, p3);
  auto r = make_report("condition1", "triples");
  Timed t(r);
  for (const auto& x : p1) {
    for (const auto& y : p2) {
      for (const auto& z : p3) {
        ++r.examined;
        if (sums_to_zero(x, y, z)) {
          fail(r, {x, y, z});
          return r;
        }
      }
    }
  }
  r.passed = true;
  return r;
}

VerifyReport check_condition2(const PointSet& p1, const PointSet& p3) {
  require_same_dim(p1, p3);
  auto r = make_report("condition2", "triples");
  Timed t(r);
  const auto q = p3.points();
  for (const auto& x : p1) {
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = i + 1; j < q.size(); ++j) {
        ++r.examined;
        if (sums_to_zero(x, q[i], q[j])) {
          fail(r, {x, q[i], q[j]});
          return r;
        }
      }
    }
  }
  r.passed = true;
  return r;
}

VerifyReport check_condition3(const PointSet& p12, const PointSet& p3) {
  require_same_dim(p12, p3);
  auto r = make_report("condition3", "pairs");
  Timed t(r);
  for (const auto& x : p12) {
    for (const auto& y : p3) {
      ++r.examined;
      if ((x.zero_mask() & y.zero_mask()) == 0) {
        fail(r, {x, y});
        return r;
      }
    }
  }
  r.passed = true;
  return r;
}

int rank_mod3(std::span<const Point> vectors) {
  if (vectors.empty()) return 0;
  const int dim = vectors.front().dim();
  std::vector<std::vector<int>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.dim() != dim) throw DimensionError("rank_mod3: mixed dimensions");
    std::vector<int> row(dim);
    for (int i = 0; i < dim; ++i) row[i] = v.coord(i + 1);
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < dim && rank < static_cast<int>(rows.size()); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [col](const auto& row) { return row[col] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    auto& prow = rows[rank];
    // 1 and 2 are their own inverses mod 3.
    const int inv = prow[col];
    for (int& v : prow) v = (v * inv) % 3;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (static_cast<int>(k) == rank || rows[k][col] == 0) continue;
      const int f = rows[k][col];
      for (int c = 0; c < dim; ++c) rows[k][c] = ((rows[k][c] - f * prow[c]) % 3 + 3) % 3;
    }
    ++rank;
  }
  return rank;
}

VerifyReport is_projective_cap(const ProjectiveCap& a) {
  auto r = make_report("projective-cap", "triples");
  Timed t(r);
  const auto pts = a.members().points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        ++r.examined;
        const std::array<Point, 3> triple{pts[i], pts[j], pts[k]};
        if (rank_mod3(triple) < 3) {
          fail(r, {pts[i], pts[j], pts[k]}, "linearly dependent");
          return r;
        }
      }
    }
  }
  r.passed = true;
  return r;
}

}  // namespace capset
