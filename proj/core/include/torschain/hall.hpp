#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "torschain/chains.hpp"

namespace torschain {

using HallCoeff = boost::multiprecision::cpp_int;

// A formal sum over isomorphism classes with dimension vector <= bound.
// Only nonzero coefficients are stored.
struct HallElem {
  DimVector bound;
  std::map<ModClass, HallCoeff> coeffs;

  HallCoeff coefficient(const ModClass& c) const;
  friend bool operator==(const HallElem&, const HallElem&) = default;
};

// Number of submodules L' of the direct-sum representative of m with
// L' ~ l and m/L' ~ n.
std::int64_t hall_number(const ModClass& l, const ModClass& n, const ModClass& m, const Universe& u);

// The Hall algebra truncated at a dimension bound. The product is graded by
// dimension vector, so truncation commutes with it.
class HallAlgebra {
 public:
  HallAlgebra(const Universe& u, DimVector bound);
  HallAlgebra(const HallAlgebra&) = delete;
  HallAlgebra& operator=(const HallAlgebra&) = delete;

  const Universe& universe() const { return *u_; }
  const DimVector& bound() const { return bound_; }
  const std::vector<ModClass>& classes() const { return classes_; }

  HallElem zero() const { return HallElem{bound_, {}}; }
  HallElem unit() const;
  HallElem basis(const ModClass& c) const;
  HallElem e_subcategory(IndexSet members) const;

  // [L].[N] = sum_M c^M_{LN} [M], L the submodule and N the quotient.
  HallElem product(const HallElem& a, const HallElem& b) const;
  std::int64_t hall_number(const ModClass& l, const ModClass& n, const ModClass& m) const;

  std::string describe(const HallElem& e) const;

 private:
  bool within(const ModClass& c) const;

  const Universe* u_;
  DimVector bound_;
  std::vector<ModClass> classes_;
  mutable CensusCache cache_;
};

struct WallCrossingReport {
  bool ok = true;
  std::vector<std::string> mismatches;
  int factors = 0;
  std::size_t classes_checked = 0;
  HallCoeff max_coefficient = 0;
};

// e_A against the product of e_{P_t} over nonzero P_t, decreasing t from left
// to right.
WallCrossingReport verify_wallcrossing(const StepChain& chain, const HallAlgebra& algebra);
// e_A against e_T . e_F with F = perp(T).
WallCrossingReport verify_torsion_pair_identity(TorsionClass t, const HallAlgebra& algebra);

}  // namespace torschain
