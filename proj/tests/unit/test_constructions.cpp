#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include <capset/constructions.hpp>
#include <capset/errors.hpp>
#include <capset/verifiers.hpp>

#include "bridge.hpp"
#include "oracle.hpp"

using namespace capset;

namespace {

PointSet S(std::initializer_list<const char*> rows) { return PointSet::from_strings(rows); }

const PointSet& p6() {
  static const PointSet s = [] {
    const PointSet p1 = seed_P(1);
    const std::array<PointSet, 6> in{p1, p1, p1, p1, p1, p1};
    return six_construction(in);
  }();
  return s;
}

// Random cap in AG(n,3), grown greedily from a shuffled point order.
oracle::Set random_cap(int n, std::mt19937& rng) {
  auto pts = oracle::all_points(n);
  std::shuffle(pts.begin(), pts.end(), rng);
  const std::size_t limit = 1 + rng() % pts.size();
  oracle::Set cap;
  for (const auto& p : pts) {
    if (cap.size() == limit) break;
    auto next = cap;
    next.push_back(p);
    next = oracle::normalize(next);
    if (oracle::is_cap(next)) cap = next;
  }
  return cap;
}

// Which of the pattern's slots each block of the point has zeros in.
std::string signature(const Point& p, const std::vector<int>& widths) {
  std::string sig;
  int pos = 1;
  for (int w : widths) {
    bool has_zero = false;
    for (int i = 0; i < w; ++i) has_zero |= p.coord(pos + i) == 0;
    sig += has_zero ? 'P' : 'B';
    pos += w;
  }
  return sig;
}

}  // namespace

TEST_CASE("gen_B") {
  CHECK(gen_B(1) == S({"1", "2"}));
  CHECK(gen_B(2) == S({"11", "12", "21", "22"}));
  CHECK(gen_B(3).size() == 8);
  CHECK_THROWS_AS(gen_B(0), DimensionError);
  for (int n = 1; n <= 4; ++n) CHECK(oracle::is_cap(bridge::to_oracle(gen_B(n))));
}

TEST_CASE("gen_B_parity") {
  CHECK(gen_B_parity(1, Parity::kEven) == S({"1"}));
  CHECK(gen_B_parity(2, Parity::kEven) == S({"11", "22"}));
  CHECK(gen_B_parity(6, Parity::kEven).size() == 32);
  CHECK(gen_B_parity(6, Parity::kOdd).size() == 32);
  for (int n = 1; n <= 6; ++n) {
    const auto e = gen_B_parity(n, Parity::kEven);
    const auto o = gen_B_parity(n, Parity::kOdd);
    CHECK(disjoint(e, o));
    CHECK(set_union(e, o) == gen_B(n));
  }
  CHECK_THROWS_AS(gen_B_parity(0, Parity::kOdd), DimensionError);
}

TEST_CASE("seed_P") {
  CHECK(seed_P(1) == S({"0"}));
  CHECK(seed_P(2) == S({"01", "02"}));
  CHECK(is_pset(seed_P(2)).passed);
  CHECK(is_b_saturated(seed_P(2)).passed);
  CHECK_THROWS_AS(seed_P(3), InvalidInputError);
}

TEST_CASE("product") {
  CHECK(product({S({"0"}), S({"1", "2"})}) == seed_P(2));
  CHECK_THROWS(product(std::span<const PointSet>{}));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int na = 1 + static_cast<int>(rng() % 3);
    const int nb = 1 + static_cast<int>(rng() % 3);
    const auto a = random_cap(na, rng);
    const auto b = random_cap(nb, rng);
    const auto prod = product({bridge::to_lib(na, a), bridge::to_lib(nb, b)});
    CHECK(prod.dim() == na + nb);
    CHECK(prod.size() == a.size() * b.size());
    CHECK(bridge::to_oracle(prod) == oracle::product(a, b));
    CHECK(oracle::is_cap(bridge::to_oracle(prod)));
  }
}

TEST_CASE("block patterns") {
  std::set<std::string> seen;
  for (const auto& p : six_patterns()) {
    CHECK(p.size() == 6);
    CHECK(p.p_count() == 3);
    seen.insert(p.to_string());
  }
  CHECK(seen.size() == 10);
  CHECK(six_patterns()[0].to_string() == "PPPBBB");
  CHECK(three_patterns()[0].to_string() == "PPB");
  CHECK(BlockPattern("PPB").reversed() == BlockPattern("BPP"));
  CHECK_THROWS(BlockPattern("PXB"));
}

TEST_CASE("three_construction") {
  const auto p1 = seed_P(1);
  const auto p3 = three_construction(p1, p1, p1);
  CHECK(p3 == S({"001", "002", "010", "020", "100", "200"}));

  const auto p9 = three_construction(p3, p3, p3);
  CHECK(p9.dim() == 9);
  CHECK(p9.size() == 864);

  const auto p4 = three_construction(p1, seed_P(2), p1);
  CHECK(p4.dim() == 4);
  CHECK(p4.size() == 12);
  CHECK(is_pset(p4).passed);

  CHECK_THROWS_AS(three_construction(gen_B(1), p1, p1), InvalidInputError);
}

TEST_CASE("three_construction matches the oracle recursion") {
  const std::vector<PointSet> seeds{seed_P(1), seed_P(2)};
  for (const auto& a : seeds)
    for (const auto& b : seeds)
      for (const auto& c : seeds) {
        const auto got = three_construction(a, b, c);
        const auto want = oracle::three(bridge::to_oracle(a), bridge::to_oracle(b),
                                        bridge::to_oracle(c));
        CHECK(bridge::to_oracle(got) == want);
        const int n = got.dim();
        const std::size_t size =
            a.size() * b.size() * (std::size_t{1} << c.dim()) +
            a.size() * (std::size_t{1} << b.dim()) * c.size() +
            (std::size_t{1} << a.dim()) * b.size() * c.size();
        CHECK(got.size() == size);
        CHECK(oracle::is_pset(want));
        CHECK(oracle::is_saturated(want, n));
        CHECK(oracle::is_complete_pset(want, n));
        CHECK(theoremC_characterization(got).passed);
      }
}

TEST_CASE("six_construction") {
  const auto& s = p6();
  CHECK(s.dim() == 6);
  CHECK(s.size() == 80);
  for (const auto& p : s) CHECK(p.zero_count() == 3);

  // Every point belongs to exactly one pattern block, eight per block.
  std::map<std::string, int> per_block;
  for (const auto& p : s) ++per_block[signature(p, {1, 1, 1, 1, 1, 1})];
  CHECK(per_block.size() == 10);
  for (const auto& pat : six_patterns()) CHECK(per_block[pat.to_string()] == 8);

  const auto o = bridge::to_oracle(s);
  CHECK(oracle::is_pset(o));
  CHECK(oracle::is_saturated(o, 6));
  CHECK(oracle::is_complete_pset(o, 6));
  CHECK(oracle::is_odd(o));
  CHECK(theoremC_characterization(s).passed);

  std::array<PointSet, 6> bad{gen_B(1), seed_P(1), seed_P(1), seed_P(1), seed_P(1), seed_P(1)};
  CHECK_THROWS_AS(six_construction(bad), InvalidInputError);
}

TEST_CASE("three and six outputs are disjoint unions of their blocks") {
  const auto p1 = seed_P(1);
  const auto p2 = seed_P(2);
  const auto t = three_construction(p2, p1, p2);
  for (const auto& p : t) {
    const auto sig = signature(p, {2, 1, 2});
    CHECK((sig == "PPB" || sig == "PBP" || sig == "BPP"));
  }
  const std::array<PointSet, 6> mixed{p1, p2, p1, p1, p2, p1};
  const auto s = six_construction(mixed);
  std::size_t expected = 0;
  for (const auto& pat : six_patterns()) expected += block_product(pat, mixed).size();
  CHECK(s.size() == expected);
  const auto o = bridge::to_oracle(s);
  CHECK(oracle::is_pset(o));
  CHECK(theoremC_characterization(s).passed);
  CHECK(is_b_saturated(s).passed);
  CHECK(is_complete_pset(s).passed);
}

TEST_CASE("mirror_set") {
  const auto& s = p6();
  const auto m = mirror_set(s);
  CHECK(m.size() == s.size());
  CHECK(mirror_set(m) == s);
  CHECK(is_pset(m).passed);
  std::vector<PointSet> ones(6, seed_P(1));
  PointSet reversed(6);
  for (const auto& pat : six_patterns()) {
    reversed = set_union(reversed, block_product(pat.reversed(), ones));
  }
  CHECK(m == reversed);
  CHECK(mirror_set(gen_B(4)) == gen_B(4));
  const auto p3 = three_construction(seed_P(1), seed_P(1), seed_P(1));
  CHECK(mirror_set(p3) == p3);
  CHECK(mirror_set(S({"012", "100"})) == S({"001", "210"}));
}

TEST_CASE("unit_pset") {
  CHECK(unit_pset(2) == S({"01", "02", "10", "20"}));
  CHECK(unit_pset(6).size() == 12);
  CHECK(is_pset(unit_pset(6)).passed);
  CHECK(is_b_saturated(unit_pset(6)).passed);
  CHECK_THROWS_AS(unit_pset(1), DimensionError);
}

TEST_CASE("five_block on the AG(15,3) inputs") {
  const auto res = preset_ag15_blocks();
  CHECK(res.set.dim() == 15);
  CHECK(res.set.size() == 124928);
  const std::array<std::size_t, 5> sizes{30720, 30720, 51200, 6144, 6144};
  std::size_t total = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(res.blocks[i].size() == sizes[i]);
    total += res.blocks[i].size();
    for (std::size_t j = i + 1; j < 5; ++j) CHECK(disjoint(res.blocks[i], res.blocks[j]));
  }
  CHECK(total == res.set.size());
  CHECK(2 * 80 * 6 * 64 + 80 * 8 * 80 + 2 * 12 * 8 * 64 == 124928);
}

TEST_CASE("five_block enforces its hypotheses") {
  const auto parts = ag15_parts();
  auto in = parts.inputs();
  // The unit set is not a complete P-set, so the default checks refuse.
  try {
    five_block(in);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(e.condition() == "complete:pn3");
  }
  in.pk = gen_B(3);
  HypothesisChecks only_pset = HypothesisChecks::none();
  only_pset.pset = true;
  CHECK_THROWS_AS(five_block(in, only_pset), PreconditionError);
}

TEST_CASE("five_block with unequal sides") {
  // n = 3, k = 1, m = 6: independent triples on each side.
  const auto p1 = seed_P(1);
  const auto p3 = three_construction(p1, p1, p1);
  const auto parts = ag15_parts();
  FiveBlockInputs in{p3, p3, p3, p1, parts.p6_1, parts.p6_2, parts.p6_3};
  auto checks = HypothesisChecks::none();
  const auto res = five_block_blocks(in, checks);
  CHECK(res.set.dim() == 10);
  std::size_t total = 0;
  for (const auto& b : res.blocks) total += b.size();
  CHECK(res.set.size() == total);
  CHECK_THROWS_AS(five_block(FiveBlockInputs{p3, parts.p6_1, p3, p1, p3, p3, p3}, checks),
                  DimensionError);
}

TEST_CASE("theoremD_cap") {
  for (auto parity : {Parity::kEven, Parity::kOdd}) {
    const auto c = theoremD_cap(p6(), parity);
    CHECK(c.size() == 112);
    CHECK(c == preset_ag6_112(parity));
    for (const auto& p : c) {
      if (p.zero_count() == 0) continue;
      CHECK(p.zero_count() % 2 == 1);
    }
    const auto small = theoremD_cap(seed_P(1), parity);
    CHECK(small.size() == 2);
    CHECK(oracle::is_complete_cap(bridge::to_oracle(small), 1));
  }
  CHECK_THROWS_AS(theoremD_cap(unit_pset(5), Parity::kEven), PreconditionError);
}

TEST_CASE("doubling") {
  const ProjectiveCap a(S({"100", "010", "001", "111"}));
  const auto d = doubling(a);
  CHECK(d.size() == 8);
  CHECK(oracle::is_cap(bridge::to_oracle(d)));
  for (const auto& v : d) {
    CHECK_FALSE(v.is_zero());
    CHECK(d.contains(negate(v)));
  }
  CHECK(doubling(ProjectiveCap(S({"12"}))) == S({"12", "21"}));
  CHECK_THROWS_AS(ProjectiveCap(S({"00", "01"})), InvalidInputError);
  CHECK_THROWS_AS(ProjectiveCap(S({"01", "02"})), InvalidInputError);
  // Three collinear projective points.
  CHECK_THROWS_AS(doubling(ProjectiveCap(S({"100", "010", "110"}))), InvalidInputError);
}
