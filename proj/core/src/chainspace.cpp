#include "torschain/chainspace.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "torschain/errors.hpp"

namespace torschain {

PhaseProfile phase_profile(const StepChain& chain, const Universe& u) {
  PhaseProfile p;
  for (int x = 0; x < u.size(); ++x) {
    const auto f = hn_filtration(chain, u.table().entry(x).rep, u);
    p.min_phase.push_back(f.phases.back());
    p.max_phase.push_back(f.phases.front());
  }
  return p;
}

DistanceResult profile_distance(const PhaseProfile& a, const PhaseProfile& b) {
  if (a.min_phase.size() != b.min_phase.size()) throw InputError("profiles over different tables");
  DistanceResult r{Rational(0), -1, true};
  for (std::size_t x = 0; x < a.min_phase.size(); ++x) {
    const Rational dq = abs_diff(a.min_phase[x], b.min_phase[x]);
    const Rational ds = abs_diff(a.max_phase[x], b.max_phase[x]);
    if (dq > r.value) r = {dq, static_cast<int>(x), true};
    if (ds > r.value) r = {ds, static_cast<int>(x), false};
  }
  return r;
}

Rational inf_distance(const StepChain& a, const StepChain& b, const Universe& u) {
  // Smallest eps such that every object of every nonzero P'_r has all of its
  // a-phases within eps of r.
  Rational needed(0);
  for (const auto& p : nonzero_phases(b, u)) {
    for (int x : p.members.indices()) {
      for (const auto& phase : hn_filtration(a, u.table().entry(x).rep, u).phases) {
        needed = std::max(needed, abs_diff(phase, p.phase));
      }
    }
  }
  std::set<Rational> candidates{Rational(0)};
  for (const auto& s : a.breakpoints()) {
    for (const auto& t : b.breakpoints()) candidates.insert(abs_diff(s, t));
  }
  auto it = candidates.lower_bound(needed);
  if (it == candidates.end() || *it != needed) {
    throw InternalError("infimum " + to_string(needed) + " is not a breakpoint difference");
  }
  return *it;
}

DistanceResult distance(const StepChain& a, const StepChain& b, const Universe& u) {
  if (a.whole() != b.whole()) throw InputError("chains over different tables");
  DistanceResult r = profile_distance(phase_profile(a, u), phase_profile(b, u));
  const Rational inf = inf_distance(a, b, u);
  if (inf != r.value) {
    throw InternalError("distance formulas disagree: sup gives " + to_string(r.value) + ", inf gives " +
                        to_string(inf));
  }
  return r;
}

bool ball_contains(const StepChain& center, const Rational& eps, const StepChain& candidate, const Universe& u) {
  if (eps <= Rational(0)) throw InputError("ball radius must be positive");
  return distance(center, candidate, u).value < eps;
}

namespace {

int endpoint_tag(const Rational& t) {
  if (t == Rational(0)) return 0;
  if (t == Rational(1)) return 2;
  return 1;
}

std::vector<std::pair<int, IndexSet>> phase_signature(const StepChain& c, const Universe& u) {
  std::vector<std::pair<int, IndexSet>> out;
  for (const auto& p : nonzero_phases(c, u)) out.emplace_back(endpoint_tag(p.phase), p.members);
  return out;
}

}  // namespace

bool equivalent(const StepChain& a, const StepChain& b, const Universe& u) {
  return phase_signature(a, u) == phase_signature(b, u);
}

bool is_chamber_point(const StepChain& a, const TorsionLattice& lattice, const Universe& u) {
  const auto& pieces = a.pieces();
  if (pieces.front() != u.all() || !pieces.back().empty()) return false;
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (!lattice.is_cover(pieces[i - 1], pieces[i])) return false;
  }
  return true;
}

namespace {

inline constexpr std::size_t kPerturbationLimit = std::size_t{1} << 20;

using TaggedShape = std::vector<std::pair<ModClass, int>>;

struct Skeleton {
  std::vector<std::size_t> slots;
  std::vector<ModClass> factors;
};

class ShapeOracle {
 public:
  ShapeOracle(const Universe& u, std::vector<ModClass> modules) : u_(u), modules_(std::move(modules)) {
    for (const auto& m : modules_) reps_.push_back(u.realize(m));
  }

  const std::vector<ModClass>& modules() const { return modules_; }

  const std::vector<Skeleton>& skeletons(const std::vector<TorsionClass>& pieces) {
    auto it = memo_.find(pieces);
    if (it != memo_.end()) return it->second;
    std::vector<Skeleton> all;
    for (const auto& rep : reps_) {
      auto sk = hn_skeleton(pieces, rep, u_);
      all.push_back({std::move(sk.slots), std::move(sk.factors)});
    }
    return memo_.emplace(pieces, std::move(all)).first->second;
  }

 private:
  const Universe& u_;
  std::vector<ModClass> modules_;
  std::vector<Rep> reps_;
  std::map<std::vector<TorsionClass>, std::vector<Skeleton>> memo_;
};

HNShape shape_with(const Skeleton& sk, const std::vector<Rational>& breakpoints) {
  HNShape out;
  for (std::size_t k = 0; k < sk.slots.size(); ++k) out.emplace_back(breakpoints[sk.slots[k]], sk.factors[k]);
  return out;
}

TaggedShape tagged(const HNShape& s) {
  TaggedShape out;
  for (const auto& [phase, factor] : s) out.emplace_back(factor, endpoint_tag(phase));
  return out;
}

StepChain rebuild(const std::vector<Rational>& breakpoints, const std::vector<TorsionClass>& pieces,
                  const Universe& u) {
  std::vector<ChainSpec> spec;
  for (std::size_t i = 0; i < pieces.size(); ++i) spec.push_back({breakpoints[i + 1], pieces[i], false});
  return make_step_chain(spec, u);
}

}  // namespace

PerturbationReport perturb_invariance_test(const StepChain& a, const Rational& eps, const TorsionLattice& lattice,
                                          const Universe& u) {
  const auto& bps = a.breakpoints();
  const auto& pieces = a.pieces();
  if (eps <= Rational(0)) throw InputError("perturbation radius must be positive");
  for (std::size_t i = 1; i < bps.size(); ++i) {
    if (!(eps * 2 < bps[i] - bps[i - 1])) {
      throw InputError("perturbation radius " + to_string(eps) + " is not below half the smallest breakpoint gap");
    }
  }

  const std::size_t interior = pieces.size() - 1;
  std::size_t combos = 1;
  for (std::size_t i = 0; i < interior; ++i) {
    combos *= 7;
    if (combos > kPerturbationLimit) throw ResourceError("breakpoint-shift family exceeds the guard");
  }

  std::vector<ModClass> modules;
  for (int x = 0; x < u.size(); ++x) modules.push_back(ModClass::of(u.size(), x));
  for (int x = 0; x < u.size(); ++x) {
    for (int y = x; y < u.size(); ++y) modules.push_back(ModClass::of(u.size(), x) + ModClass::of(u.size(), y));
  }
  ShapeOracle oracle(u, modules);
  PerturbationReport report;
  report.modules = modules.size();

  std::vector<TaggedShape> reference;
  std::vector<HNShape> reference_full;
  std::vector<std::vector<ModClass>> reference_factors;
  for (const auto& sk : oracle.skeletons(pieces)) {
    reference_factors.push_back(sk.factors);
    reference_full.push_back(shape_with(sk, bps));
    reference.push_back(tagged(reference_full.back()));
  }

  // A witness whose factor classes change beats one where only a phase moves
  // onto or off an endpoint; keep looking for the former.
  std::optional<PerturbationWitness> endpoint_only;
  auto check = [&](const std::vector<Rational>& new_bps, const std::vector<TorsionClass>& new_pieces,
                   const std::string& change) {
    ++report.perturbations;
    const auto& sks = oracle.skeletons(new_pieces);
    for (std::size_t k = 0; k < sks.size(); ++k) {
      HNShape after = shape_with(sks[k], new_bps);
      if (tagged(after) == reference[k]) continue;
      PerturbationWitness w{rebuild(new_bps, new_pieces, u), change, oracle.modules()[k], reference_full[k],
                            std::move(after)};
      if (sks[k].factors != reference_factors[k]) {
        report.invariant = false;
        report.witness = std::move(w);
        return false;
      }
      if (!endpoint_only) endpoint_only = std::move(w);
    }
    return true;
  };

  // Refinements: a lattice class strictly between the values on either side
  // of a breakpoint (the pinned whole category at 0 and {0} at 1 count as
  // values), held on an interval of length eps/2 next to it.
  const Rational delta = eps / 2;
  const std::size_t m = pieces.size();
  for (std::size_t i = 0; i <= m; ++i) {
    const TorsionClass left = i == 0 ? u.all() : pieces[i - 1];
    const TorsionClass right = i == m ? IndexSet{} : pieces[i];
    for (const auto& y : lattice.classes) {
      if (!right.subset_of(y) || !y.subset_of(left)) continue;
      if ((i > 0 && y == pieces[i - 1]) || (i < m && y == pieces[i])) continue;
      for (int side : {-1, 1}) {
        if ((side < 0 && i == 0) || (side > 0 && i == m)) continue;
        std::vector<Rational> nb(bps.begin(), bps.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        std::vector<TorsionClass> np(pieces.begin(), pieces.begin() + static_cast<std::ptrdiff_t>(i));
        if (side < 0) {
          nb.back() = bps[i] - delta;
          nb.push_back(bps[i]);
        } else {
          nb.push_back(bps[i] + delta);
        }
        np.push_back(y);
        nb.insert(nb.end(), bps.begin() + static_cast<std::ptrdiff_t>(i) + 1, bps.end());
        np.insert(np.end(), pieces.begin() + static_cast<std::ptrdiff_t>(i), pieces.end());
        const std::string change = "insert " + u.format(y) + " on " +
                                   (side < 0 ? "(" + to_string(bps[i] - delta) + "," + to_string(bps[i]) + ")"
                                             : "(" + to_string(bps[i]) + "," + to_string(bps[i] + delta) + ")");
        if (!check(nb, np, change)) return report;
      }
    }
  }

  // Shifts of the interior breakpoints on the eps/4 grid.
  std::vector<int> k(interior, -3);
  for (std::size_t c = 0; c < combos; ++c) {
    std::vector<Rational> nb = bps;
    bool moved = false;
    for (std::size_t i = 0; i < interior; ++i) {
      nb[i + 1] += eps * k[i] / 4;
      moved = moved || k[i] != 0;
    }
    if (moved) {
      std::string change = "shift interior breakpoints by eps/4 x (";
      for (std::size_t i = 0; i < interior; ++i) change += (i ? "," : "") + std::to_string(k[i]);
      if (!check(nb, pieces, change + ")")) return report;
    }
    for (std::size_t i = 0; i < interior; ++i) {
      if (++k[i] <= 3) break;
      k[i] = -3;
    }
  }
  if (endpoint_only) {
    report.invariant = false;
    report.witness = std::move(endpoint_only);
  }
  return report;
}

}  // namespace torschain
