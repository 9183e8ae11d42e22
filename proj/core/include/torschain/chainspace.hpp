#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torschain/chains.hpp"

namespace torschain {

// Smallest and largest HN phase of every indecomposable; all the distance
// needs from a chain.
struct PhaseProfile {
  std::vector<Rational> min_phase;  // phase of the maximally destabilising quotient
  std::vector<Rational> max_phase;  // phase of the maximally destabilising submodule
};
PhaseProfile phase_profile(const StepChain& chain, const Universe& u);

struct DistanceResult {
  Rational value;
  int witness = -1;         // indecomposable attaining the value; -1 when value is 0
  bool quotient_term = true; // which of the two differences attains it
};

// Sup over indecomposables of the min/max phase differences, checked against
// inf{eps : P'_r within P_[r-eps, r+eps] for all r}; disagreement is an InternalError.
DistanceResult distance(const StepChain& a, const StepChain& b, const Universe& u);
// The sup formula alone, from precomputed profiles.
DistanceResult profile_distance(const PhaseProfile& a, const PhaseProfile& b);
// The inf formula alone.
Rational inf_distance(const StepChain& a, const StepChain& b, const Universe& u);

bool ball_contains(const StepChain& center, const Rational& eps, const StepChain& candidate, const Universe& u);

// Same ordered sequence of nonzero phase categories, with phase 0 and phase 1
// entries matched to each other (a reparametrisation of [0, 1] fixes both ends).
bool equivalent(const StepChain& a, const StepChain& b, const Universe& u);

bool is_chamber_point(const StepChain& a, const TorsionLattice& lattice, const Universe& u);

struct PerturbationWitness {
  StepChain perturbed;
  std::string change;  // what was done to the chain
  ModClass module;
  HNShape before;
  HNShape after;
};

struct PerturbationReport {
  bool invariant = true;
  std::size_t perturbations = 0;
  std::size_t modules = 0;
  std::optional<PerturbationWitness> witness;
};

// Shifts every interior breakpoint by k*eps/4 (k in -3..3, all combinations)
// and inserts single lattice classes between neighbouring values on
// intervals of length eps/2 at each breakpoint; compares the HN filtrations of
// every indecomposable and every sum of two. Requires eps < half the smallest
// breakpoint gap. Stops at the first witness whose HN factors change; a
// change that only moves a phase onto or off 0 or 1 is reported if nothing
// stronger turns up.
PerturbationReport perturb_invariance_test(const StepChain& a, const Rational& eps, const TorsionLattice& lattice,
                                          const Universe& u);

}  // namespace torschain
