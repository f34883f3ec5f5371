#include "capset/f3.hpp"

#include <algorithm>

#include "capset/errors.hpp"

namespace capset {
namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxPointDim) {
    throw DimensionError("dimension " + std::to_string(dim) +
                         " outside [1, " + std::to_string(kMaxPointDim) + "]");
  }
}

void check_same_dim(const Point& p, const Point& q) {
  if (p.dim() != q.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(p.dim()) +
                         " vs " + std::to_string(q.dim()));
  }
}

}  // namespace

Point Point::from_trits(std::span<const Trit> trits) {
  const int dim = static_cast<int>(trits.size());
  check_dim(dim);
  Mask ones = 0;
  Mask twos = 0;
  for (int i = 0; i < dim; ++i) {
    const Mask bit = Mask{1} << (dim - 1 - i);
    switch (trits[i]) {
      case 0:
        break;
      case 1:
        ones |= bit;
        break;
      case 2:
        twos |= bit;
        break;
      default:
        throw InvalidInputError("coordinate " + std::to_string(i + 1) +
                                " is not a trit");
    }
  }
  return from_planes(dim, ones, twos);
}

Point Point::from_trits(std::initializer_list<int> trits) {
  std::vector<Trit> t;
  t.reserve(trits.size());
  for (int v : trits) {
    if (v < 0 || v > 2) throw InvalidInputError("value is not a trit");
    t.push_back(static_cast<Trit>(v));
  }
  return from_trits(std::span<const Trit>(t));
}

Point Point::parse(std::string_view text) {
  std::vector<Trit> t;
  t.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '2') {
      throw InvalidInputError("not a trit string: '" + std::string(text) + "'");
    }
    t.push_back(static_cast<Trit>(c - '0'));
  }
  return from_trits(std::span<const Trit>(t));
}

Point Point::zero(int dim) {
  check_dim(dim);
  return from_planes(dim, 0, 0);
}

Trit Point::coord(int i) const {
  if (i < 1 || i > dim_) {
    throw RangeError("coordinate index " + std::to_string(i) + " out of range");
  }
  const Mask bit = Mask{1} << (dim_ - i);
  return (ones_ & bit) ? 1 : (twos_ & bit) ? 2 : 0;
}

std::vector<Trit> Point::trits() const {
  std::vector<Trit> out(dim_);
  for (int i = 0; i < dim_; ++i) out[i] = coord(i + 1);
  return out;
}

std::string Point::to_string() const {
  std::string s(dim_, '0');
  for (int i = 0; i < dim_; ++i) {
    const Mask bit = Mask{1} << (dim_ - 1 - i);
    if (ones_ & bit) s[i] = '1';
    if (twos_ & bit) s[i] = '2';
  }
  return s;
}

Point unrank(Rank r, int dim) {
  check_dim(dim);
  if (r >= pow3(dim)) {
    throw RangeError("rank " + std::to_string(r) + " >= 3^" +
                     std::to_string(dim));
  }
  Mask ones = 0;
  Mask twos = 0;
  for (int j = 0; j < dim; ++j) {
    const auto digit = r % 3;
    r /= 3;
    if (digit == 1) ones |= Mask{1} << j;
    if (digit == 2) twos |= Mask{1} << j;
  }
  return Point::from_planes(dim, ones, twos);
}

Point add_mod3(const Point& p, const Point& q) {
  check_same_dim(p, q);
  const auto s = planes::add(p.ones(), p.twos(), q.ones(), q.twos());
  return Point::from_planes(p.dim(), s.ones, s.twos);
}

Point negate(const Point& p) {
  return Point::from_planes(p.dim(), p.twos(), p.ones());
}

Point third_point(const Point& p, const Point& q) {
  check_same_dim(p, q);
  if (p == q) throw DegenerateError("third_point of a repeated point " + p.to_string());
  const auto t = planes::third(p.ones(), p.twos(), q.ones(), q.twos());
  return Point::from_planes(p.dim(), t.ones, t.twos);
}

bool collinear(const Point& p, const Point& q, const Point& r) {
  check_same_dim(p, q);
  check_same_dim(p, r);
  if (p == q || p == r || q == r) {
    throw DegenerateError("collinear needs three distinct points");
  }
  return sums_to_zero(p, q, r);
}

bool scalar_zero_sum(Trit x, Trit y, Trit z) {
  if (x > 2 || y > 2 || z > 2) throw RangeError("value is not a trit");
  return (x + y + z) % 3 == 0;
}

bool ZeroSupport::contains(int index) const {
  if (index < 1 || index > dim_) return false;
  return (mask_ >> (dim_ - index)) & 1U;
}

std::vector<int> ZeroSupport::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= dim_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

ZeroSupport zero_support(const Point& p) {
  return ZeroSupport(p.dim(), p.zero_mask());
}

Point mirror_point(const Point& p) {
  const int n = p.dim();
  auto reverse = [n](Mask m) {
    Mask out = 0;
    for (int j = 0; j < n; ++j) {
      if (m & (Mask{1} << j)) out |= Mask{1} << (n - 1 - j);
    }
    return out;
  };
  return Point::from_planes(n, reverse(p.ones()), reverse(p.twos()));
}

Point concat(const Point& p, const Point& q) {
  const int n = p.dim() + q.dim();
  check_dim(n);
  const int shift = q.dim();
  return Point::from_planes(n, (p.ones() << shift) | q.ones(),
                            (p.twos() << shift) | q.twos());
}

}  // namespace capset
