#include "torschain/chains.hpp"

#include <algorithm>
#include <map>

#include "torschain/errors.hpp"

namespace torschain {

TorsionClass StepChain::value_left(const Rational& t) const {
  if (t <= Rational(0)) return whole_;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (breakpoints_[i] < t && t <= breakpoints_[i + 1]) return pieces_[i];
  }
  throw InputError("phase " + to_string(t) + " outside [0, 1]");
}

TorsionClass StepChain::value_right(const Rational& t) const {
  if (t >= Rational(1)) return IndexSet{};
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (breakpoints_[i] <= t && t < breakpoints_[i + 1]) return pieces_[i];
  }
  throw InputError("phase " + to_string(t) + " outside [0, 1]");
}

TorsionClass StepChain::value_at(const Rational& t) const {
  if (t <= Rational(0) || t >= Rational(1)) throw InputError("value_at needs an interior point");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (breakpoints_[i] < t && t < breakpoints_[i + 1]) return pieces_[i];
  }
  throw InputError(to_string(t) + " is a breakpoint");
}

StepChain make_step_chain(const std::vector<ChainSpec>& spec, const Universe& u) {
  if (spec.empty()) throw InputError("a chain needs at least one piece");
  StepChain out;
  out.whole_ = u.all();
  out.breakpoints_.push_back(Rational(0));
  Rational previous(0);
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const Rational& end = spec[i].end;
    if (end <= previous || end > Rational(1)) {
      throw InputError("piece " + std::to_string(i + 1) + ": breakpoints must increase strictly within (0, 1]");
    }
    previous = end;
    if (!spec[i].members.subset_of(u.all())) throw InputError("piece " + std::to_string(i + 1) + ": unknown members");
    TorsionClass cls = spec[i].generators ? tors_closure(spec[i].members, u) : spec[i].members;
    if (!is_torsion_class(cls, u)) {
      throw InputError("piece " + std::to_string(i + 1) + ": " + u.format(cls) + " is not a torsion class");
    }
    if (!out.pieces_.empty() && !cls.subset_of(out.pieces_.back())) {
      throw InputError("piece " + std::to_string(i + 1) + ": classes must decrease along the chain");
    }
    if (!out.pieces_.empty() && cls == out.pieces_.back()) {
      out.breakpoints_.back() = end;
    } else {
      out.pieces_.push_back(cls);
      out.breakpoints_.push_back(end);
    }
  }
  if (out.breakpoints_.back() != Rational(1)) throw InputError("the last piece must end at 1");
  return out;
}

StepChain trivial_chain(const Universe& u) { return make_step_chain({{Rational(1), u.all(), false}}, u); }

StepChain chain_from_torsion_pair(TorsionClass t, const Rational& r1, const Rational& r2, const Universe& u) {
  if (!(Rational(0) < r1 && r1 < r2 && r2 <= Rational(1))) {
    throw InputError("torsion-pair chain needs 0 < r1 < r2 <= 1");
  }
  std::vector<ChainSpec> spec{{r1, u.all(), false}, {r2, t, false}};
  if (r2 < Rational(1)) spec.push_back({Rational(1), IndexSet{}, false});
  return make_step_chain(spec, u);
}

std::string describe(const StepChain& chain, const Universe& u) {
  std::string out;
  for (int i = 0; i < chain.piece_count(); ++i) {
    if (i > 0) out += ", ";
    out += "(" + to_string(chain.breakpoints()[i]) + "," + to_string(chain.breakpoints()[i + 1]) + ") " +
           u.format(chain.pieces()[static_cast<std::size_t>(i)]);
  }
  return out;
}

IndexSet phase_category(const StepChain& chain, const Rational& t, const Universe& u) {
  if (t < Rational(0) || t > Rational(1)) throw InputError("phase " + to_string(t) + " outside [0, 1]");
  return chain.value_left(t) & perp(chain.value_right(t), u);
}

std::vector<Phase> nonzero_phases(const StepChain& chain, const Universe& u) {
  std::vector<Phase> out;
  for (const auto& b : chain.breakpoints()) {
    IndexSet p = phase_category(chain, b, u);
    if (!p.empty()) out.push_back({b, p});
  }
  return out;
}

HNSkeleton hn_skeleton(const std::vector<TorsionClass>& pieces, const Rep& m, const Universe& u) {
  if (m.is_zero()) throw InputError("the zero module has no Harder-Narasimhan filtration");
  HNSkeleton out;
  Subrep current = full_subrep(m);
  // Peel off the lowest-phase factor: the least piece not containing the
  // current module fixes the phase, its torsion part is what remains.
  while (!current.rep.is_zero()) {
    const ModClass c = u.decompose(current.rep);
    std::size_t i = 0;
    while (i < pieces.size() && class_in(c, pieces[i])) ++i;
    out.steps.push_back(current);
    out.slots.push_back(i);
    if (i == pieces.size()) {
      out.factors.push_back(c);
      current = zero_subrep(m);
    } else {
      CanonicalSES ses = torsion_subobject(current.rep, pieces[i], u);
      out.factors.push_back(u.decompose(ses.quotient_part));
      current = push_forward(m, current, ses.torsion_part);
    }
  }
  std::reverse(out.steps.begin(), out.steps.end());
  std::reverse(out.slots.begin(), out.slots.end());
  std::reverse(out.factors.begin(), out.factors.end());
  return out;
}

HNFiltration hn_filtration(const StepChain& chain, const Rep& m, const Universe& u) {
  HNSkeleton sk = hn_skeleton(chain.pieces(), m, u);
  HNFiltration out{std::move(sk.steps), {}, std::move(sk.factors)};
  for (std::size_t slot : sk.slots) out.phases.push_back(chain.breakpoints()[slot]);
  return out;
}

HNShape shape_of(const HNFiltration& f) {
  HNShape out;
  for (std::size_t k = 0; k < f.phases.size(); ++k) out.emplace_back(f.phases[k], f.factors[k]);
  return out;
}

std::string describe(const HNShape& shape, const Universe& u) {
  std::string out = "[";
  for (std::size_t k = 0; k < shape.size(); ++k) {
    if (k > 0) out += ", ";
    out += u.format(shape[k].second) + " @ " + to_string(shape[k].first);
  }
  return out + "]";
}

PhaseWord phase_word(const StepChain& chain, const Rep& m, const Universe& u) {
  auto f = hn_filtration(chain, m, u);
  return PhaseWord{std::vector<Rational>(f.phases.rbegin(), f.phases.rend())};
}

std::string describe(const PhaseWord& w) {
  std::string out = "(";
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k > 0) out += ", ";
    out += to_string(w.letters[k]);
  }
  return out + ")";
}

std::strong_ordering compare_words(const PhaseWord& a, const PhaseWord& b) {
  const std::size_t n = std::min(a.letters.size(), b.letters.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a.letters[k] < b.letters[k]) return std::strong_ordering::less;
    if (b.letters[k] < a.letters[k]) return std::strong_ordering::greater;
  }
  return a.letters.size() <=> b.letters.size();
}

std::strong_ordering compare(const StepChain& chain, const Rep& m, const Rep& n, const Universe& u) {
  return compare_words(phase_word(chain, m, u), phase_word(chain, n, u));
}

MaxDestab max_destab(const StepChain& chain, const Rep& m, const Universe& u) {
  auto f = hn_filtration(chain, m, u);
  const std::size_t n = f.steps.size();
  Rep minus = n >= 2 ? quotient(m, f.steps[n - 2]) : m;
  return {std::move(minus), f.steps.front().rep};
}

namespace {

class FiltrationCounter {
 public:
  FiltrationCounter(const StepChain& chain, const Universe& u, CensusCache& cache)
      : phases_(nonzero_phases(chain, u)), cache_(cache) {}

  // Filtrations of m whose phases all exceed `lower` (-1 for no bound).
  const FiltrationCount& count(const ModClass& m, const Rational& lower) {
    auto key = std::make_pair(m, lower);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    FiltrationCount result;
    for (const auto& [pair, multiplicity] : cache_.census(m)) {
      const auto& [sub, quot] = pair;
      if (quot.is_zero()) continue;
      const Phase* ph = phase_of(quot);
      if (ph == nullptr || !(lower < ph->phase)) continue;
      if (sub.is_zero()) {
        result.count += multiplicity;
        add_shape(result, HNShape{{ph->phase, quot}});
        continue;
      }
      const FiltrationCount& below = count(sub, ph->phase);
      result.count += multiplicity * below.count;
      for (HNShape shape : below.shapes) {
        shape.emplace_back(ph->phase, quot);
        add_shape(result, std::move(shape));
      }
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

 private:
  const Phase* phase_of(const ModClass& c) const {
    for (const auto& p : phases_) {
      if (class_in(c, p.members)) return &p;
    }
    return nullptr;
  }

  static void add_shape(FiltrationCount& r, HNShape shape) {
    if (std::find(r.shapes.begin(), r.shapes.end(), shape) == r.shapes.end()) r.shapes.push_back(std::move(shape));
  }

  std::vector<Phase> phases_;
  CensusCache& cache_;
  std::map<std::pair<ModClass, Rational>, FiltrationCount> memo_;
};

}  // namespace

FiltrationCount count_hn_filtrations(const StepChain& chain, const ModClass& m, const Universe& u,
                                     CensusCache& cache) {
  if (m.is_zero()) throw InputError("the zero module has no Harder-Narasimhan filtration");
  FiltrationCounter counter(chain, u, cache);
  return counter.count(m, Rational(-1));
}

SlicingReport verify_slicing(const StepChain& chain, const Universe& u, CensusCache& cache, int max_total) {
  SlicingReport report;
  const auto phases = nonzero_phases(chain, u);
  for (const auto& hi : phases) {
    for (const auto& lo : phases) {
      if (!(lo.phase < hi.phase)) continue;
      for (int x : hi.members.indices()) {
        for (int y : lo.members.indices()) {
          if (u.table().hom_dim(x, y) != 0) {
            report.ok = false;
            report.violations.push_back("Hom(" + u.table().name(x) + " @ " + to_string(hi.phase) + ", " +
                                        u.table().name(y) + " @ " + to_string(lo.phase) + ") != 0");
          }
        }
      }
    }
  }

  FiltrationCounter counter(chain, u, cache);
  for (const auto& c : classes_up_to_total(u.table(), max_total)) {
    ++report.modules_checked;
    const HNShape shape = shape_of(hn_filtration(chain, u.realize(c), u));
    const FiltrationCount& oracle = counter.count(c, Rational(-1));
    bool good = oracle.count == 1 && oracle.shapes.size() == 1 && oracle.shapes.front() == shape;
    for (std::size_t k = 0; k < shape.size() && good; ++k) {
      good = class_in(shape[k].second, phase_category(chain, shape[k].first, u)) &&
             (k == 0 || shape[k].first < shape[k - 1].first);
    }
    if (!good) {
      report.ok = false;
      report.violations.push_back(u.format(c) + ": filtration " + describe(shape, u) + ", exhaustive search found " +
                                  std::to_string(oracle.count));
    }
  }
  return report;
}

StepChain chain_from_slicing(const std::vector<Phase>& assignments, const Universe& u) {
  std::vector<Phase> sorted;
  for (const auto& a : assignments) {
    if (a.phase < Rational(0) || a.phase > Rational(1)) throw InputError("slice phase " + to_string(a.phase) + " outside [0, 1]");
    if (!a.members.subset_of(u.all())) throw InputError("slice at " + to_string(a.phase) + " has unknown members");
    for (const auto& b : sorted) {
      if (b.phase == a.phase) throw InputError("slice phase " + to_string(a.phase) + " given twice");
    }
    if (!a.members.empty()) sorted.push_back(a);
  }
  std::sort(sorted.begin(), sorted.end(), [](const Phase& a, const Phase& b) { return a.phase < b.phase; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (int x : sorted[i].members.indices()) {
        for (int y : sorted[j].members.indices()) {
          if (u.table().hom_dim(x, y) != 0) {
            throw InputError("slices are not Hom-orthogonal: Hom(" + u.table().name(x) + ", " + u.table().name(y) +
                             ") != 0 with phases " + to_string(sorted[i].phase) + " > " + to_string(sorted[j].phase));
          }
        }
      }
    }
  }

  std::vector<Rational> ends;
  for (const auto& s : sorted) {
    if (s.phase > Rational(0)) ends.push_back(s.phase);
  }
  if (ends.empty() || ends.back() != Rational(1)) ends.push_back(Rational(1));
  std::vector<ChainSpec> spec;
  for (const auto& end : ends) {
    IndexSet gens;
    for (const auto& s : sorted) {
      if (s.phase >= end) gens |= s.members;
    }
    IndexSet piece = filt_closure(gens, u);
    if (!is_torsion_class(piece, u)) {
      throw InputError("slices above " + to_string(end) + " do not filter a torsion class");
    }
    spec.push_back({end, piece, false});
  }
  StepChain chain = make_step_chain(spec, u);

  for (const auto& p : nonzero_phases(chain, u)) {
    auto it = std::find_if(sorted.begin(), sorted.end(), [&](const Phase& s) { return s.phase == p.phase; });
    if (it == sorted.end() || it->members != p.members) {
      throw InputError("slices do not round-trip: phase " + to_string(p.phase) + " recovers " + u.format(p.members));
    }
  }
  if (nonzero_phases(chain, u).size() != sorted.size()) throw InputError("slices do not round-trip");
  return chain;
}

}  // namespace torschain
