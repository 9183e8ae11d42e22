#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "torschain/rational.hpp"
#include "torschain/torsion.hpp"

namespace torschain {

struct ChainSpec {
  Rational end;          // right end of the piece
  IndexSet members;      // explicit class, or generators when `generators` is set
  bool generators = false;
};

class StepChain;
// Validates and normalises: ends strictly increasing in (0, 1] with the last
// equal to 1, every class a torsion class, classes non-increasing; equal
// neighbours are merged.
StepChain make_step_chain(const std::vector<ChainSpec>& spec, const Universe& u);

// A chain of torsion classes with finitely many values: breakpoints
// 0 = b_0 < ... < b_m = 1 and a strictly decreasing sequence of torsion classes
// X_1 > ... > X_m on the open intervals (b_{i-1}, b_i). The values at 0 and 1
// are pinned to the whole category and to {0} and never stored.
class StepChain {
 public:
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<TorsionClass>& pieces() const { return pieces_; }
  int piece_count() const { return static_cast<int>(pieces_.size()); }
  IndexSet whole() const { return whole_; }

  // Value on the interval ending at t (whole category at t = 0) and on the
  // interval starting at t ({0} at t = 1).
  TorsionClass value_left(const Rational& t) const;
  TorsionClass value_right(const Rational& t) const;
  // The piece containing an interior point t.
  TorsionClass value_at(const Rational& t) const;

  friend bool operator==(const StepChain&, const StepChain&) = default;

 private:
  friend StepChain make_step_chain(const std::vector<ChainSpec>& spec, const Universe& u);
  std::vector<Rational> breakpoints_;
  std::vector<TorsionClass> pieces_;
  IndexSet whole_;
};

StepChain trivial_chain(const Universe& u);
// Whole category on (0, r1), t on (r1, r2), {0} on (r2, 1).
StepChain chain_from_torsion_pair(TorsionClass t, const Rational& r1, const Rational& r2, const Universe& u);

std::string describe(const StepChain& chain, const Universe& u);

// Quasisemistable objects of phase t.
IndexSet phase_category(const StepChain& chain, const Rational& t, const Universe& u);

struct Phase {
  Rational phase;
  IndexSet members;
};
// The nonzero phase categories, by increasing phase.
std::vector<Phase> nonzero_phases(const StepChain& chain, const Universe& u);

// M_1 < ... < M_n = M with phases r_1 > ... > r_n.
struct HNFiltration {
  std::vector<Subrep> steps;
  std::vector<Rational> phases;
  std::vector<ModClass> factors;
};

HNFiltration hn_filtration(const StepChain& chain, const Rep& m, const Universe& u);

// The filtration depends on the pieces only; breakpoints merely name the
// phases. slots[k] indexes the breakpoint that is the phase of factor k.
struct HNSkeleton {
  std::vector<Subrep> steps;
  std::vector<std::size_t> slots;
  std::vector<ModClass> factors;
};
HNSkeleton hn_skeleton(const std::vector<TorsionClass>& pieces, const Rep& m, const Universe& u);

// (phase, factor class) from M_1/M_0 upwards; what "unique up to isomorphism" compares.
using HNShape = std::vector<std::pair<Rational, ModClass>>;
HNShape shape_of(const HNFiltration& f);
std::string describe(const HNShape& shape, const Universe& u);

struct PhaseWord {
  std::vector<Rational> letters;  // strictly increasing
  friend bool operator==(const PhaseWord&, const PhaseWord&) = default;
};

PhaseWord phase_word(const StepChain& chain, const Rep& m, const Universe& u);
std::string describe(const PhaseWord& w);
// Lexicographic, a strict prefix is smaller.
std::strong_ordering compare_words(const PhaseWord& a, const PhaseWord& b);
std::strong_ordering compare(const StepChain& chain, const Rep& m, const Rep& n, const Universe& u);

struct MaxDestab {
  Rep minus;  // last HN factor, a quotient of M
  Rep plus;   // first HN term, a submodule of M
};
MaxDestab max_destab(const StepChain& chain, const Rep& m, const Universe& u);

// Exhaustive count of filtrations 0 = M_0 < ... < M_n = M (as actual submodule
// chains of the direct-sum representative) with nonzero factors in phase
// categories and strictly decreasing phases. Independent of hn_filtration.
struct FiltrationCount {
  std::int64_t count = 0;
  std::vector<HNShape> shapes;  // distinct shapes seen
};
FiltrationCount count_hn_filtrations(const StepChain& chain, const ModClass& m, const Universe& u,
                                     CensusCache& cache);

struct SlicingReport {
  bool ok = true;
  std::vector<std::string> violations;
  int modules_checked = 0;
};
// Axiom 1 (downward Hom vanishing) on every pair of indecomposables and axiom 2
// (existence and uniqueness of the filtration, against the exhaustive count) on
// every class of total dimension <= max_total.
SlicingReport verify_slicing(const StepChain& chain, const Universe& u, CensusCache& cache, int max_total);

// Pieces Filt(union of assignments with phase >= b_i); checks axiom 1 and the
// round trip through phase_category.
StepChain chain_from_slicing(const std::vector<Phase>& assignments, const Universe& u);

}  // namespace torschain
