#pragma once

#include <random>
#include <string>
#include <vector>

#include "torschain/chains.hpp"

namespace torschain {

// phi(M) = theta . dim M / rho . dim M. The mediant inequality gives the
// see-saw property on short exact sequences.
struct StabilityForm {
  std::vector<int> theta;
  std::vector<int> rho;
};

// Checks rho > 0 and 0 <= theta.d <= rho.d on every table entry, so phi lands in [0, 1].
StabilityForm make_form(std::vector<int> theta, std::vector<int> rho, const Universe& u);
// rho_v uniform in [1, 4], theta_v uniform in [0, rho_v].
StabilityForm random_form(const Universe& u, std::mt19937& rng);
std::string describe(const StabilityForm& f);

Rational phi_value(const StabilityForm& f, const DimVector& d);
Rational phi_value(const StabilityForm& f, const Rep& m);

struct Semistability {
  bool semistable = false;
  bool stable = false;
};
Semistability semistability(const StabilityForm& f, const Rep& m);
inline bool is_semistable(const StabilityForm& f, const Rep& m) { return semistability(f, m).semistable; }

// The four classes of the torsion pairs a form induces at s, as sets of
// indecomposables: T_{>=s}, T_{>s} (all quotients of phase >= s / > s) and
// F_{<=s}, F_{<s} (all submodules of phase <= s / < s).
IndexSet t_geq(const StabilityForm& f, const Rational& s, const Universe& u);
IndexSet t_gt(const StabilityForm& f, const Rational& s, const Universe& u);
IndexSet f_leq(const StabilityForm& f, const Rational& s, const Universe& u);
IndexSet f_lt(const StabilityForm& f, const Rational& s, const Universe& u);

// The phases phi takes on indecomposables, increasing.
std::vector<Rational> realized_phases(const StabilityForm& f, const Universe& u);

StepChain chain_from_stability(const StabilityForm& f, const Universe& u);

struct StabilityReport {
  bool ok = true;
  std::vector<std::string> violations;
  int phases_checked = 0;
  int modules_checked = 0;
};
// Phase categories of the induced chain against semistables of each phase,
// and HN factors (classes of total dimension <= max_total) against
// semistability with strictly decreasing phi.
StabilityReport verify_semistable_equality(const StabilityForm& f, const Universe& u, int max_total);

}  // namespace torschain
