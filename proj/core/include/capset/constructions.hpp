#pragma once

// Builders for caps and P-sets: generators, concatenation products, the
// three- and six-factor recursions, the five-block construction and the
// AG(15,3) preset built from it.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "capset/point_set.hpp"
#include "capset/projective.hpp"

namespace capset {

enum class Parity { kEven, kOdd };

std::string to_string(Parity p);

// All 2^n points with no zero coordinate.
PointSet gen_B(int n);

// Points of B_n whose number of 2-coordinates has the given parity.
PointSet gen_B_parity(int n, Parity parity);

// The initial P-sets {(0)} and {(0,1),(0,2)}. Throws InvalidInputError for
// any other n.
PointSet seed_P(int n);

// All concatenations a1 a2 ... ak, first factor most significant.
PointSet product(std::span<const PointSet> factors);
PointSet product(std::initializer_list<PointSet> factors);

enum class Slot : std::uint8_t { kP, kB };

// Sequence of P/B slots; a block of a recursion is the product taking the
// i-th P-set in a P slot and B of the same dimension in a B slot.
class BlockPattern {
 public:
  explicit BlockPattern(std::string_view text);  // e.g. "PPBBBP"

  std::size_t size() const noexcept { return slots_.size(); }
  Slot operator[](std::size_t i) const noexcept { return slots_[i]; }
  int p_count() const noexcept;
  std::string to_string() const;
  BlockPattern reversed() const;

  friend bool operator==(const BlockPattern&, const BlockPattern&) = default;

 private:
  std::vector<Slot> slots_;
};

const std::array<BlockPattern, 3>& three_patterns();
const std::array<BlockPattern, 10>& six_patterns();

PointSet block_product(const BlockPattern& pattern, std::span<const PointSet> psets);

// P_{n1}P_{n2}B_{n3} u P_{n1}B_{n2}P_{n3} u B_{n1}P_{n2}P_{n3}.
// Throws InvalidInputError if an operand is not a P-set.
PointSet three_construction(const PointSet& pa, const PointSet& pb, const PointSet& pc);

// Union of the ten six-slot block products. Throws InvalidInputError if an
// operand is not a P-set.
PointSet six_construction(std::span<const PointSet> psets);

PointSet mirror_set(const PointSet& s);

// The 2n points with exactly one nonzero coordinate.
PointSet unit_pset(int n);

// Which hypotheses five_block and theoremD_cap verify before building.
struct HypothesisChecks {
  bool pset = true;
  bool saturation = true;
  bool completeness = true;
  bool oddness = true;      // theoremD_cap only
  bool conditions = true;   // five_block conditions 1-3 on both sides

  static HypothesisChecks none() { return {false, false, false, false, false}; }
};

struct FiveBlockInputs {
  PointSet pn1, pn2, pn3;  // dim n
  PointSet pk;             // dim k
  PointSet pm1, pm2, pm3;  // dim m
};

struct FiveBlockResult {
  PointSet set;
  std::array<PointSet, 5> blocks;  // C1..C5
};

// C1 = Pn1 Pk Bm, C2 = Bn Pk Pm1, C3 = Pn2 Bk Pm2, C4 = Pn3 Bk Bm,
// C5 = Bn Bk Pm3. Throws PreconditionError naming the failed hypothesis.
FiveBlockResult five_block_blocks(const FiveBlockInputs& in,
                                  const HypothesisChecks& checks = {});
PointSet five_block(const FiveBlockInputs& in, const HypothesisChecks& checks = {});

// P u B'_n (even) or P u B''_n (odd). Throws PreconditionError unless P is a
// b-saturated, complete, odd P-set (each check individually skippable).
PointSet theoremD_cap(const PointSet& p, Parity parity,
                      const HypothesisChecks& checks = {});

// {v, 2v : v in a}. Throws InvalidInputError if a is not a projective cap.
PointSet doubling(const ProjectiveCap& a);

// Inputs of the AG(15,3) instance: k = 3, n = m = 6.
struct Ag15Parts {
  PointSet p3;    // three(P1,P1,P1)
  PointSet p6_1;  // six(P1 x6)
  PointSet p6_2;  // mirror of p6_1
  PointSet p6_3;  // unit_pset(6)
  FiveBlockInputs inputs() const;
};

Ag15Parts ag15_parts();

// Five-block result for the AG(15,3) instance. Every hypothesis except
// completeness is checked; the unit set fails the completeness hypothesis,
// which callers report separately.
FiveBlockResult preset_ag15_blocks();
PointSet preset_ag15();

// theoremD_cap(six(P1 x6), parity): a 112-point cap in AG(6,3).
PointSet preset_ag6_112(Parity parity = Parity::kEven);

}  // namespace capset
