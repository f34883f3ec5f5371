#pragma once

// Point algebra over F_3^n.
//
// A point is stored as two bit planes: bit j of `ones` is set when the trit at
// weight 3^j equals 1, bit j of `twos` when it equals 2. Coordinate 1 (the
// leftmost) sits at bit n-1, so lexicographic order, rank order and the
// integer order of (ones, twos) read from the top bit all coincide. Whole-point
// addition mod 3 is a handful of bitwise operations on the planes.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace capset {

using Trit = std::uint8_t;
using Rank = std::uint64_t;
using Mask = std::uint32_t;

// Widest point the packed representation holds.
inline constexpr int kMaxPointDim = 32;
// Widest space a dense rank bitmap is allowed to cover (3^20 bits ~ 436 MB).
inline constexpr int kMaxBitmapDim = 20;

constexpr Mask dim_mask(int dim) noexcept {
  return dim >= 32 ? ~Mask{0} : ((Mask{1} << dim) - 1);
}

constexpr Rank pow3(int e) noexcept {
  Rank r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

class Point {
 public:
  constexpr Point() = default;

  // Throws DimensionError if dim is out of [1, kMaxPointDim] and
  // InvalidInputError if a trit is not in {0,1,2}.
  static Point from_trits(std::span<const Trit> trits);
  static Point from_trits(std::initializer_list<int> trits);

  // Parses a string of '0'/'1'/'2' characters, most significant first.
  static Point parse(std::string_view text);

  // Unchecked constructor for hot paths: planes must be disjoint and fit dim.
  static constexpr Point from_planes(int dim, Mask ones, Mask twos) noexcept {
    Point p;
    p.dim_ = static_cast<std::uint8_t>(dim);
    p.ones_ = ones;
    p.twos_ = twos;
    return p;
  }

  static Point zero(int dim);

  constexpr int dim() const noexcept { return dim_; }
  constexpr Mask ones() const noexcept { return ones_; }
  constexpr Mask twos() const noexcept { return twos_; }
  constexpr Mask nonzero_mask() const noexcept { return ones_ | twos_; }
  constexpr Mask zero_mask() const noexcept {
    return ~(ones_ | twos_) & dim_mask(dim_);
  }
  constexpr int zero_count() const noexcept { return std::popcount(zero_mask()); }
  constexpr bool is_zero() const noexcept { return (ones_ | twos_) == 0; }

  // Trit at 1-based coordinate i (coordinate 1 is leftmost).
  Trit coord(int i) const;
  std::vector<Trit> trits() const;
  std::string to_string() const;

  friend constexpr bool operator==(const Point&, const Point&) = default;

  // Lexicographic on coordinates (equivalently, rank order). Points of
  // different dimension order by dimension first.
  friend constexpr std::strong_ordering operator<=>(const Point& a,
                                                    const Point& b) noexcept {
    if (a.dim_ != b.dim_) return a.dim_ <=> b.dim_;
    const Mask diff = (a.ones_ ^ b.ones_) | (a.twos_ ^ b.twos_);
    if (diff == 0) return std::strong_ordering::equal;
    const Mask top = Mask{1} << (31 - std::countl_zero(diff));
    const int va = (a.ones_ & top) ? 1 : (a.twos_ & top) ? 2 : 0;
    const int vb = (b.ones_ & top) ? 1 : (b.twos_ & top) ? 2 : 0;
    return va <=> vb;
  }

 private:
  std::uint8_t dim_ = 0;
  Mask ones_ = 0;
  Mask twos_ = 0;
};

namespace planes {

// Trit-plane arithmetic shared by the Point API and the sweep kernel.
struct Pair {
  Mask ones;
  Mask twos;
};

constexpr Pair add(Mask a1, Mask a2, Mask b1, Mask b2) noexcept {
  const Mask az = ~(a1 | a2);
  const Mask bz = ~(b1 | b2);
  return {(a1 & bz) | (az & b1) | (a2 & b2), (a2 & bz) | (az & b2) | (a1 & b1)};
}

// -(a + b): the unique point completing {a, b} to a line.
constexpr Pair third(Mask a1, Mask a2, Mask b1, Mask b2) noexcept {
  const Pair s = add(a1, a2, b1, b2);
  return {s.twos, s.ones};
}

}  // namespace planes

namespace detail {

struct RankTables {
  // Sum of 3^j over set bits j, split into four byte lookups.
  std::array<std::array<std::uint64_t, 256>, 4> byte_weight{};
};

inline constexpr RankTables make_rank_tables() {
  RankTables t;
  for (int chunk = 0; chunk < 4; ++chunk) {
    for (int v = 0; v < 256; ++v) {
      std::uint64_t w = 0;
      for (int b = 0; b < 8; ++b) {
        if (v & (1 << b)) w += pow3(chunk * 8 + b);
      }
      t.byte_weight[chunk][v] = w;
    }
  }
  return t;
}

inline constexpr RankTables kRankTables = make_rank_tables();

constexpr std::uint64_t mask_weight(Mask m) noexcept {
  const auto& w = kRankTables.byte_weight;
  return w[0][m & 0xFF] + w[1][(m >> 8) & 0xFF] + w[2][(m >> 16) & 0xFF] +
         w[3][m >> 24];
}

}  // namespace detail

constexpr Rank rank(const Point& p) noexcept {
  return detail::mask_weight(p.ones()) + 2 * detail::mask_weight(p.twos());
}

// Throws RangeError when r >= 3^n and DimensionError for a bad n.
Point unrank(Rank r, int dim);

// Coordinatewise sum mod 3. Throws DimensionError on mismatched dims.
Point add_mod3(const Point& p, const Point& q);
Point negate(const Point& p);

// -(p + q). Throws DegenerateError when p == q.
Point third_point(const Point& p, const Point& q);

// p + q + r == 0 (mod 3). Throws DegenerateError unless pairwise distinct.
bool collinear(const Point& p, const Point& q, const Point& r);

// Same as collinear() without the distinctness check.
constexpr bool sums_to_zero(const Point& p, const Point& q,
                            const Point& r) noexcept {
  const auto s = planes::add(p.ones(), p.twos(), q.ones(), q.twos());
  const auto t = planes::add(s.ones, s.twos, r.ones(), r.twos());
  return (t.ones | t.twos) == 0;
}

// x + y + z == 0 (mod 3) for single trits. Throws RangeError on a non-trit.
bool scalar_zero_sum(Trit x, Trit y, Trit z);

// Indices (1-based) of the zero coordinates of a point.
class ZeroSupport {
 public:
  ZeroSupport(int dim, Mask mask) : dim_(dim), mask_(mask) {}

  int dim() const noexcept { return dim_; }
  Mask mask() const noexcept { return mask_; }
  int size() const noexcept { return std::popcount(mask_); }
  bool empty() const noexcept { return mask_ == 0; }
  bool contains(int index) const;
  bool intersects(const ZeroSupport& other) const noexcept {
    return (mask_ & other.mask_) != 0;
  }
  std::vector<int> indices() const;

  friend bool operator==(const ZeroSupport&, const ZeroSupport&) = default;

 private:
  int dim_;
  Mask mask_;
};

ZeroSupport zero_support(const Point& p);

// Coordinates reversed.
Point mirror_point(const Point& p);

// Concatenation: p's coordinates followed by q's.
Point concat(const Point& p, const Point& q);

}  // namespace capset
