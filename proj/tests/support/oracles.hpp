#pragma once

// Brute-force reference computations. Each one goes through a different
// route from the library: Hom tables instead of closure algorithms, actual
// submodule scans instead of census tables, sampling instead of breakpoint
// formulas.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include <torschain/torschain.hpp>

namespace oracles {

using namespace torschain;

inline IndexSet hom_perp(IndexSet s, const Universe& u) {
  IndexSet out;
  for (int y = 0; y < u.size(); ++y) {
    bool zero = true;
    for (int x : s.indices()) zero = zero && u.table().hom_dim(x, y) == 0;
    if (zero) out.insert(y);
  }
  return out;
}

inline IndexSet hom_left_perp(IndexSet s, const Universe& u) {
  IndexSet out;
  for (int x = 0; x < u.size(); ++x) {
    bool zero = true;
    for (int y : s.indices()) zero = zero && u.table().hom_dim(x, y) == 0;
    if (zero) out.insert(x);
  }
  return out;
}

// In a representation-finite category the torsion classes are exactly the
// sets with S = left_perp(perp(S)).
inline IndexSet double_perp(IndexSet s, const Universe& u) { return hom_left_perp(hom_perp(s, u), u); }

inline std::vector<IndexSet> torsion_classes_by_subsets(const Universe& u) {
  std::vector<IndexSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << u.size()); ++bits) {
    if (double_perp(IndexSet(bits), u) == IndexSet(bits)) out.push_back(IndexSet(bits));
  }
  return out;
}

// Second traversal: grow from {0} by adjoining one indecomposable and closing.
inline std::set<IndexSet> torsion_classes_by_growth(const Universe& u) {
  std::set<IndexSet> seen{IndexSet{}};
  std::vector<IndexSet> frontier{IndexSet{}};
  while (!frontier.empty()) {
    const IndexSet t = frontier.back();
    frontier.pop_back();
    for (int x = 0; x < u.size(); ++x) {
      if (t.contains(x)) continue;
      IndexSet grown = t;
      grown.insert(x);
      grown = double_perp(grown, u);
      if (seen.insert(grown).second) frontier.push_back(grown);
    }
  }
  return seen;
}

inline bool covers(const std::vector<IndexSet>& classes, IndexSet hi, IndexSet lo) {
  if (!lo.proper_subset_of(hi)) return false;
  for (const auto& m : classes) {
    if (lo.proper_subset_of(m) && m.proper_subset_of(hi)) return false;
  }
  return true;
}

inline std::int64_t maximal_chain_count(const std::vector<IndexSet>& classes) {
  std::map<IndexSet, std::int64_t> memo;
  std::function<std::int64_t(IndexSet)> paths = [&](IndexSet t) -> std::int64_t {
    if (t.empty()) return 1;
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    std::int64_t n = 0;
    for (const auto& c : classes) {
      if (covers(classes, t, c)) n += paths(c);
    }
    return memo[t] = n;
  };
  IndexSet top;
  for (const auto& c : classes) top = top | c;
  return paths(top);
}

// P_t = (meet of T_s, s < t) cap (meet of T_s^perp, s > t), with each piece
// sampled at its midpoint, at points just either side of t, and the pinned
// values at 0 and 1.
inline IndexSet sampled_phase_category(const StepChain& c, const Rational& t, const Universe& u) {
  std::vector<std::pair<Rational, IndexSet>> samples{{Rational(0), u.all()}, {Rational(1), IndexSet{}}};
  const auto& b = c.breakpoints();
  Rational delta(1);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] != t) delta = std::min(delta, abs_diff(b[i], t) / 2);
    if (i + 1 < b.size()) delta = std::min(delta, (b[i + 1] - b[i]) / 2);
  }
  auto value = [&](const Rational& s) {
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      if (b[i] < s && s < b[i + 1]) return c.pieces()[i];
    }
    return s <= Rational(0) ? u.all() : IndexSet{};
  };
  for (std::size_t i = 0; i + 1 < b.size(); ++i) samples.emplace_back((b[i] + b[i + 1]) / 2, c.pieces()[i]);
  if (t - delta > Rational(0)) samples.emplace_back(t - delta, value(t - delta));
  if (t + delta < Rational(1)) samples.emplace_back(t + delta, value(t + delta));
  IndexSet out = u.all();
  for (const auto& [s, v] : samples) {
    if (s < t) out = out & v;
    if (s > t) out = out & hom_perp(v, u);
  }
  return out;
}

// (sub class, quotient class) -> number of submodules, from a scan of all submodules.
class SubmoduleCensus {
 public:
  explicit SubmoduleCensus(const Universe& u) : u_(u) {}

  const std::map<std::pair<ModClass, ModClass>, std::int64_t>& of(const ModClass& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    std::map<std::pair<ModClass, ModClass>, std::int64_t> out;
    const Rep rep = u_.realize(m);
    for (const auto& s : submodules(rep)) ++out[{u_.decompose(s.rep), u_.decompose(quotient(rep, s))}];
    return memo_.emplace(m, std::move(out)).first->second;
  }

 private:
  const Universe& u_;
  std::map<ModClass, std::map<std::pair<ModClass, ModClass>, std::int64_t>> memo_;
};

struct FiltrationSet {
  std::int64_t count = 0;
  std::set<HNShape> shapes;
};

// Every filtration 0 = M_0 < ... < M_n = M with factors in the sampled phase
// categories and strictly decreasing phases.
class HNFiltrations {
 public:
  HNFiltrations(const StepChain& c, const Universe& u, SubmoduleCensus& census) : census_(census) {
    for (const auto& b : c.breakpoints()) {
      const IndexSet p = sampled_phase_category(c, b, u);
      if (!p.empty()) phases_.push_back({b, p});
    }
  }

  const FiltrationSet& of(const ModClass& m, const Rational& lower = Rational(-1)) {
    if (auto it = memo_.find({m, lower}); it != memo_.end()) return it->second;
    FiltrationSet out;
    for (const auto& [pair, n] : census_.of(m)) {
      const auto& [sub, quot] = pair;
      if (quot.is_zero()) continue;
      const Phase* ph = nullptr;
      for (const auto& p : phases_) {
        if (class_in(quot, p.members)) ph = &p;
      }
      if (ph == nullptr || !(lower < ph->phase)) continue;
      if (sub.is_zero()) {
        out.count += n;
        out.shapes.insert(HNShape{{ph->phase, quot}});
        continue;
      }
      const FiltrationSet& below = of(sub, ph->phase);
      out.count += n * below.count;
      for (HNShape shape : below.shapes) {
        shape.emplace_back(ph->phase, quot);
        out.shapes.insert(shape);
      }
    }
    return memo_.emplace(std::make_pair(m, lower), std::move(out)).first->second;
  }

 private:
  SubmoduleCensus& census_;
  std::vector<Phase> phases_;
  std::map<std::pair<ModClass, Rational>, FiltrationSet> memo_;
};

inline Rational phi(const StabilityForm& f, const DimVector& d) {
  std::int64_t t = 0, r = 0;
  for (std::size_t v = 0; v < d.size(); ++v) {
    t += f.theta[v] * d[v];
    r += f.rho[v] * d[v];
  }
  return Rational(t, r);
}

inline bool semistable(const StabilityForm& f, const Rep& m) {
  for (const auto& s : submodules(m)) {
    if (s.rep.total_dim() > 0 && phi(f, s.dims()) > phi(f, m.dims())) return false;
  }
  return true;
}

// Does every object of each nonzero P'_r (chain b) lie in Filt(P_s : |s - r| <= eps) (chain a)?
inline bool filt_within(const StepChain& a, const StepChain& b, const Rational& eps, const Universe& u) {
  const auto pa = nonzero_phases(a, u);
  for (const auto& p : nonzero_phases(b, u)) {
    IndexSet gens;
    for (const auto& s : pa) {
      if (abs_diff(s.phase, p.phase) <= eps) gens |= s.members;
    }
    if (!p.members.subset_of(filt_closure(gens, u))) return false;
  }
  return true;
}

// The infimum of the eps above: the least breakpoint difference that works,
// confirmed to fail just below. Returns -1 if the search breaks down.
inline Rational filt_distance(const StepChain& a, const StepChain& b, const Universe& u) {
  std::set<Rational> candidates{Rational(0)};
  for (const auto& s : a.breakpoints()) {
    for (const auto& t : b.breakpoints()) candidates.insert(abs_diff(s, t));
  }
  for (const auto& eps : candidates) {
    if (!filt_within(a, b, eps, u)) continue;
    if (eps > Rational(0) && filt_within(a, b, eps - Rational(1, 1000), u)) return Rational(-1);
    return eps;
  }
  return Rational(-1);
}

}  // namespace oracles
