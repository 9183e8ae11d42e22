#pragma once

#include <vector>

#include "torschain/chains.hpp"

namespace torschain {

// A = T_0 > T_1 > ... > T_t = {0}, every step a cover in the torsion lattice.
using GreenSequence = std::vector<TorsionClass>;

std::vector<GreenSequence> enumerate_mgs(const TorsionLattice& lattice, const Universe& u);
bool is_maximal_green(const GreenSequence& g, const TorsionLattice& lattice, const Universe& u);

// T_i on (i/(t+1), (i+1)/(t+1)); normalisation keeps every piece since the
// sequence is strictly decreasing.
StepChain mgs_to_chain(const GreenSequence& g, const Universe& u);

// One brick per cover, listed in cover order (increasing phase along
// mgs_to_chain). Morphisms only go from lower to higher phase, so
// Hom(B_k, B_j) = 0 whenever k > j.
struct BrickLabels {
  std::vector<int> bricks;
  std::vector<Rational> phases;
  std::vector<DimVector> c_vectors;
};

// Throws ViolationError if a cover's quasisemistable category does not have
// exactly one relatively simple member, or that member is not a brick whose
// extension closure is the whole category.
BrickLabels brick_labels(const GreenSequence& g, const Universe& u);
std::vector<DimVector> c_vectors(const GreenSequence& g, const Universe& u);

// Indecomposables of p with no proper nonzero submodule L such that L and the
// quotient both lie in p.
IndexSet relatively_simple(IndexSet p, const Universe& u);

bool hom_orthogonal(const BrickLabels& labels, const Universe& u);

}  // namespace torschain
