#include "capset/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "capset/errors.hpp"
#include "capset/verifiers.hpp"

namespace capset {
namespace {

std::string witness_text(const VerifyReport& r) {
  std::string s;
  for (const auto& p : r.witness) {
    if (!s.empty()) s += ' ';
    s += p.to_string();
  }
  return s;
}

void require_pset(const PointSet& s, const std::string& what) {
  const auto r = is_pset(s);
  if (!r.passed) {
    throw InvalidInputError(what + " is not a P-set (" + r.detail + ", witness " +
                            witness_text(r) + ")");
  }
}

void require(const VerifyReport& r, const std::string& condition) {
  if (!r.passed) {
    std::string msg = "hypothesis " + condition + " failed";
    if (!r.detail.empty()) msg += " (" + r.detail + ")";
    msg += ": witness " + witness_text(r);
    throw PreconditionError(condition, msg);
  }
}

void check_dim_range(int n, int min, const char* what) {
  if (n < min || n > kMaxPointDim) {
    throw DimensionError(std::string(what) + ": dimension " + std::to_string(n) +
                         " outside [" + std::to_string(min) + ", " +
                         std::to_string(kMaxPointDim) + "]");
  }
}

PointSet disjoint_union(int dim, std::vector<PointSet> parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<Point> all;
  all.reserve(total);
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return PointSet::from_unsorted(dim, std::move(all));
}

}  // namespace

std::string to_string(Parity p) { return p == Parity::kEven ? "even" : "odd"; }

PointSet gen_B(int n) {
  check_dim_range(n, 1, "gen_B");
  const Mask full = dim_mask(n);
  std::vector<Point> pts;
  pts.reserve(std::size_t{1} << n);
  for (Mask twos = 0;; ++twos) {
    pts.push_back(Point::from_planes(n, full & ~twos, twos));
    if (twos == full) break;
  }
  return PointSet::from_unsorted(n, std::move(pts));
}

PointSet gen_B_parity(int n, Parity parity) {
  const PointSet b = gen_B(n);
  const int want = parity == Parity::kEven ? 0 : 1;
  std::vector<Point> pts;
  pts.reserve(b.size() / 2);
  for (const auto& p : b) {
    if (std::popcount(p.twos()) % 2 == want) pts.push_back(p);
  }
  return PointSet::from_sorted(n, std::move(pts));
}

PointSet seed_P(int n) {
  switch (n) {
    case 1:
      return PointSet::from_strings({"0"});
    case 2:
      return PointSet::from_strings({"01", "02"});
    default:
      throw InvalidInputError("no seed P-set of dimension " + std::to_string(n) +
                              " (seeds exist for 1 and 2)");
  }
}

PointSet product(std::span<const PointSet> factors) {
  if (factors.size() < 2) throw InvalidInputError("product needs at least two factors");
  int dim = 0;
  for (const auto& f : factors) {
    if (f.empty()) throw InvalidInputError("product of an empty factor");
    dim += f.dim();
  }
  check_dim_range(dim, 1, "product");
  // Nested enumeration with the first factor outermost yields rank order
  // directly, since every factor is itself rank-ordered.
  std::vector<Point> acc(factors[0].begin(), factors[0].end());
  for (std::size_t f = 1; f < factors.size(); ++f) {
    std::vector<Point> next;
    next.reserve(acc.size() * factors[f].size());
    for (const auto& a : acc) {
      for (const auto& b : factors[f]) next.push_back(concat(a, b));
    }
    acc = std::move(next);
  }
  return PointSet::from_sorted(dim, std::move(acc));
}

PointSet product(std::initializer_list<PointSet> factors) {
  return product(std::span<const PointSet>(factors.begin(), factors.size()));
}

BlockPattern::BlockPattern(std::string_view text) {
  if (text.empty()) throw InvalidInputError("empty block pattern");
  for (char c : text) {
    if (c == 'P') {
      slots_.push_back(Slot::kP);
    } else if (c == 'B') {
      slots_.push_back(Slot::kB);
    } else {
      throw InvalidInputError("block pattern '" + std::string(text) +
                              "' must contain only P and B");
    }
  }
}

int BlockPattern::p_count() const noexcept {
  return static_cast<int>(std::count(slots_.begin(), slots_.end(), Slot::kP));
}

std::string BlockPattern::to_string() const {
  std::string s;
  for (auto slot : slots_) s += slot == Slot::kP ? 'P' : 'B';
  return s;
}

BlockPattern BlockPattern::reversed() const {
  std::string s = to_string();
  std::reverse(s.begin(), s.end());
  return BlockPattern(s);
}

const std::array<BlockPattern, 3>& three_patterns() {
  static const std::array<BlockPattern, 3> k{
      BlockPattern("PPB"), BlockPattern("PBP"), BlockPattern("BPP")};
  return k;
}

const std::array<BlockPattern, 10>& six_patterns() {
  // A1..A10 in order.
  static const std::array<BlockPattern, 10> k{
      BlockPattern("PPPBBB"), BlockPattern("PPBBBP"), BlockPattern("PBPBPB"),
      BlockPattern("BPPPBB"), BlockPattern("BBPPBP"), BlockPattern("BBPBPP"),
      BlockPattern("BPBPPB"), BlockPattern("BPBBPP"), BlockPattern("PBBPBP"),
      BlockPattern("PBBPPB")};
  return k;
}

PointSet block_product(const BlockPattern& pattern, std::span<const PointSet> psets) {
  if (pattern.size() != psets.size()) {
    throw InvalidInputError("pattern " + pattern.to_string() + " needs " +
                            std::to_string(pattern.size()) + " operands, got " +
                            std::to_string(psets.size()));
  }
  std::vector<PointSet> factors;
  factors.reserve(psets.size());
  for (std::size_t i = 0; i < psets.size(); ++i) {
    factors.push_back(pattern[i] == Slot::kP ? psets[i] : gen_B(psets[i].dim()));
  }
  return product(factors);
}

PointSet three_construction(const PointSet& pa, const PointSet& pb, const PointSet& pc) {
  require_pset(pa, "three: operand 1");
  require_pset(pb, "three: operand 2");
  require_pset(pc, "three: operand 3");
  const std::array<PointSet, 3> ps{pa, pb, pc};
  std::vector<PointSet> parts;
  for (const auto& pat : three_patterns()) parts.push_back(block_product(pat, ps));
  return disjoint_union(pa.dim() + pb.dim() + pc.dim(), std::move(parts));
}

PointSet six_construction(std::span<const PointSet> psets) {
  if (psets.size() != 6) throw InvalidInputError("six needs exactly six operands");
  int dim = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    require_pset(psets[i], "six: operand " + std::to_string(i + 1));
    dim += psets[i].dim();
  }
  std::vector<PointSet> parts;
  for (const auto& pat : six_patterns()) parts.push_back(block_product(pat, psets));
  return disjoint_union(dim, std::move(parts));
}

PointSet mirror_set(const PointSet& s) {
  std::vector<Point> pts;
  pts.reserve(s.size());
  for (const auto& p : s) pts.push_back(mirror_point(p));
  return PointSet::from_unsorted(s.dim(), std::move(pts));
}

PointSet unit_pset(int n) {
  check_dim_range(n, 2, "unit_pset");
  std::vector<Point> pts;
  for (int j = 0; j < n; ++j) {
    pts.push_back(Point::from_planes(n, Mask{1} << j, 0));
    pts.push_back(Point::from_planes(n, 0, Mask{1} << j));
  }
  return PointSet::from_unsorted(n, std::move(pts));
}

FiveBlockResult five_block_blocks(const FiveBlockInputs& in, const HypothesisChecks& checks) {
  const int n = in.pn1.dim();
  const int k = in.pk.dim();
  const int m = in.pm1.dim();
  if (n < 1 || k < 1 || m < 1) throw DimensionError("five: every input needs dimension >= 1");
  if (in.pn2.dim() != n || in.pn3.dim() != n) throw DimensionError("five: n-side dimensions differ");
  if (in.pm2.dim() != m || in.pm3.dim() != m) throw DimensionError("five: m-side dimensions differ");
  check_dim_range(n + k + m, 1, "five");

  const std::array<std::pair<const PointSet*, const char*>, 7> named{{
      {&in.pn1, "pn1"}, {&in.pn2, "pn2"}, {&in.pn3, "pn3"}, {&in.pk, "pk"},
      {&in.pm1, "pm1"}, {&in.pm2, "pm2"}, {&in.pm3, "pm3"}}};
  for (const auto& [set, name] : named) {
    if (checks.pset) require(is_pset(*set), std::string("pset:") + name);
    if (checks.saturation) require(is_b_saturated(*set), std::string("saturated:") + name);
    if (checks.completeness) require(is_complete_pset(*set), std::string("complete:") + name);
  }
  if (checks.conditions) {
    require(check_condition1(in.pn1, in.pn2, in.pn3), "condition1:n");
    require(check_condition2(in.pn1, in.pn3), "condition2:n");
    require(check_condition3(set_union(in.pn1, in.pn2), in.pn3), "condition3:n");
    require(check_condition1(in.pm1, in.pm2, in.pm3), "condition1:m");
    require(check_condition2(in.pm1, in.pm3), "condition2:m");
    require(check_condition3(set_union(in.pm1, in.pm2), in.pm3), "condition3:m");
  }

  const PointSet bn = gen_B(n);
  const PointSet bk = gen_B(k);
  const PointSet bm = gen_B(m);
  FiveBlockResult out;
  out.blocks = {product({in.pn1, in.pk, bm}), product({bn, in.pk, in.pm1}),
                product({in.pn2, bk, in.pm2}), product({in.pn3, bk, bm}),
                product({bn, bk, in.pm3})};
  out.set = disjoint_union(n + k + m, {out.blocks.begin(), out.blocks.end()});
  std::size_t total = 0;
  for (const auto& b : out.blocks) total += b.size();
  if (out.set.size() != total) {
    throw InvalidInputError("five: blocks overlap (" + std::to_string(total - out.set.size()) +
                            " shared points)");
  }
  return out;
}

PointSet five_block(const FiveBlockInputs& in, const HypothesisChecks& checks) {
  return five_block_blocks(in, checks).set;
}

PointSet theoremD_cap(const PointSet& p, Parity parity, const HypothesisChecks& checks) {
  if (checks.pset) require(is_pset(p), "pset");
  if (checks.saturation) require(is_b_saturated(p), "saturated");
  if (checks.completeness) require(is_complete_pset(p), "complete");
  if (checks.oddness) require(is_odd_pset(p), "odd");
  const PointSet b = gen_B_parity(p.dim(), parity);
  if (!disjoint(p, b)) {
    throw PreconditionError("disjoint", "tD: operand contains points without zero coordinates");
  }
  return set_union(p, b);
}

ProjectiveCap::ProjectiveCap(PointSet members) : members_(std::move(members)) {
  for (const auto& v : members_) {
    if (v.is_zero()) throw InvalidInputError("projective cap contains the zero vector");
    if (members_.contains(negate(v))) {
      throw InvalidInputError("projective cap contains proportional vectors " + v.to_string() +
                              " and " + negate(v).to_string());
    }
  }
}

PointSet doubling(const ProjectiveCap& a) {
  const auto r = is_projective_cap(a);
  if (!r.passed) {
    throw InvalidInputError("double: not a projective cap (dependent triple " +
                            witness_text(r) + ")");
  }
  std::vector<Point> pts;
  pts.reserve(2 * a.size());
  for (const auto& v : a.members()) {
    pts.push_back(v);
    pts.push_back(negate(v));  // 2v
  }
  return PointSet::from_unsorted(a.dim(), std::move(pts));
}

FiveBlockInputs Ag15Parts::inputs() const {
  return FiveBlockInputs{p6_1, p6_2, p6_3, p3, p6_1, p6_2, p6_3};
}

Ag15Parts ag15_parts() {
  const PointSet p1 = seed_P(1);
  Ag15Parts parts;
  parts.p3 = three_construction(p1, p1, p1);
  const std::array<PointSet, 6> six_in{p1, p1, p1, p1, p1, p1};
  parts.p6_1 = six_construction(six_in);
  parts.p6_2 = mirror_set(parts.p6_1);
  parts.p6_3 = unit_pset(6);
  return parts;
}

FiveBlockResult preset_ag15_blocks() {
  HypothesisChecks checks;
  checks.completeness = false;
  return five_block_blocks(ag15_parts().inputs(), checks);
}

PointSet preset_ag15() { return preset_ag15_blocks().set; }

PointSet preset_ag6_112(Parity parity) {
  const PointSet p1 = seed_P(1);
  const std::array<PointSet, 6> six_in{p1, p1, p1, p1, p1, p1};
  return theoremD_cap(six_construction(six_in), parity);
}

}  // namespace capset
