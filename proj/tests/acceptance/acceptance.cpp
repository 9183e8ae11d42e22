// Acceptance gate: one PASS/FAIL line per criterion, each with its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace torschain;
using fixtures::members;
using fixtures::q;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) first_failure = what;
    pass = pass && ok;
  }
};

const std::vector<const Universe*>& hn_universes() {
  static const std::vector<const Universe*> us{&fixtures::a2(), &fixtures::a3()};
  return us;
}

std::vector<fixtures::NamedChain> family(const Universe& u) { return fixtures::chain_family(u, u.size() == 6); }

// --- 1 ---------------------------------------------------------------------
Verdict example_reproduction() {
  Verdict v;
  const auto& u = fixtures::a3();
  const auto c = fixtures::nowide_chain(u);
  const IndexSet p0 = members(u, {"S3"});
  const IndexSet p13 = members(u, {"S2", "M[2..3]", "M[1..2]", "M[1..3]"});
  const IndexSet p23 = members(u, {"S1"});
  v.require(phase_category(c, q(0), u) == p0, "P_0");
  v.require(phase_category(c, q(1, 3), u) == p13, "P_1/3");
  v.require(phase_category(c, q(2, 3), u) == p23, "P_2/3");
  v.require(oracles::sampled_phase_category(c, q(1, 3), u) == p13, "P_1/3 oracle");
  // {0} everywhere else: scan a fine grid.
  for (int k = 0; k <= 60; ++k) {
    const Rational t(k, 60);
    if (t == q(0) || t == q(1, 3) || t == q(2, 3)) continue;
    v.require(phase_category(c, t, u).empty(), "P_" + to_string(t) + " nonzero");
  }
  const auto np = nonzero_phases(c, u);
  v.require(np.size() == 3, "three nonzero phases");

  // Non-wideness witnesses, found by scanning submodules.
  const Rep m13 = u.realize(u.parse("M[1..3]"));
  bool coker = false, ker = false;
  for (const auto& s : submodules(m13)) {
    const ModClass sub = u.decompose(s.rep), quot = u.decompose(quotient(m13, s));
    if (sub == u.parse("M[2..3]") && quot == u.parse("S1")) coker = true;
    if (sub == u.parse("S3") && quot == u.parse("M[1..2]")) ker = true;
  }
  v.require(coker && !p13.contains(0), "cokernel S1 outside P_1/3");
  v.require(ker && !p13.contains(2), "kernel S3 outside P_1/3");
  v.detail = "P_0 = " + u.format(p0) + ", P_1/3 = " + u.format(p13) + ", P_2/3 = " + u.format(p23);
  return v;
}

// --- 2 ---------------------------------------------------------------------
Verdict hn_existence_uniqueness() {
  Verdict v;
  std::size_t chains = 0, checks = 0, mgs_chains = 0;
  for (const auto* u : hn_universes()) {
    const auto fam = family(*u);
    chains += fam.size();
    v.require(fam.size() >= 20, "family size");
    oracles::SubmoduleCensus census(*u);
    const auto modules = classes_up_to_total(u->table(), 5);
    for (const auto& [name, c] : fam) {
      if (name.rfind("mgs:", 0) == 0) ++mgs_chains;
      oracles::HNFiltrations oracle(c, *u, census);
      for (const auto& mc : modules) {
        ++checks;
        const Rep m = u->realize(mc);
        const auto f = hn_filtration(c, m, *u);
        const auto shape = shape_of(f);
        const auto& o = oracle.of(mc);
        const std::string where = name + " / " + u->format(mc);
        v.require(o.count == 1 && o.shapes.size() == 1 && *o.shapes.begin() == shape, where + " oracle");
        // 1. a chain of submodules ending at M
        v.require(f.steps.front().rep.total_dim() > 0, where + " M_1 nonzero");
        for (std::size_t k = 1; k < f.steps.size(); ++k) {
          v.require(f.steps[k].contains(f.steps[k - 1]) && f.steps[k].rep.total_dim() > f.steps[k - 1].rep.total_dim(),
                    where + " strict chain");
        }
        v.require(f.steps.back().rep.dims() == m.dims(), where + " ends at M");
        // 2. factors in the phase categories; 3. phases strictly decreasing
        for (std::size_t k = 0; k < f.factors.size(); ++k) {
          v.require(class_in(f.factors[k], oracles::sampled_phase_category(c, f.phases[k], *u)), where + " factor");
          if (k > 0) v.require(f.phases[k] < f.phases[k - 1], where + " decreasing");
        }
      }
    }
  }
  v.detail = std::to_string(chains) + " chains (" + std::to_string(mgs_chains) + " MGS), " + std::to_string(checks) +
             " module/chain pairs, total dim <= 5, A2 and A3 over F_2";
  return v;
}

// --- 3 ---------------------------------------------------------------------
Verdict stability_equivalence() {
  Verdict v;
  int forms = 0, phases = 0, modules = 0;
  for (const auto* u : {&fixtures::a2(), &fixtures::a3()}) {
    std::mt19937 rng(911);
    const auto classes = classes_up_to_total(u->table(), 4);
    for (int i = 0; i < 24; ++i) {
      const auto f = random_form(*u, rng);
      ++forms;
      const StepChain c = chain_from_stability(f, *u);
      std::set<Rational> ts(c.breakpoints().begin(), c.breakpoints().end());
      for (int x = 0; x < u->size(); ++x) ts.insert(oracles::phi(f, u->table().dims(x)));
      for (const auto& t : ts) {
        ++phases;
        IndexSet semis;
        for (int x = 0; x < u->size(); ++x) {
          if (oracles::phi(f, u->table().dims(x)) == t && oracles::semistable(f, u->table().entry(x).rep)) semis.insert(x);
        }
        v.require(phase_category(c, t, *u) == semis, describe(f) + " P_" + to_string(t));
      }
      for (const auto& mc : classes) {
        ++modules;
        const auto hn = hn_filtration(c, u->realize(mc), *u);
        for (std::size_t k = 0; k < hn.factors.size(); ++k) {
          const Rep factor = u->realize(hn.factors[k]);
          v.require(oracles::semistable(f, factor), describe(f) + " " + u->format(mc) + " factor semistable");
          v.require(oracles::phi(f, factor.dims()) == hn.phases[k], describe(f) + " factor phase");
          if (k > 0) {
            v.require(oracles::phi(f, factor.dims()) < oracles::phi(f, dims_of(hn.factors[k - 1], u->table())),
                      describe(f) + " phi decreasing");
          }
        }
      }
    }
  }
  // Not every chain comes from a form: the non-wide example is equivalent to
  // no stability chain, over every form with rho <= 3 on linear A3.
  const auto& u = fixtures::a3();
  const auto nowide = fixtures::nowide_chain(u);
  int grid = 0;
  bool matched = false;
  for (int r1 = 1; r1 <= 3; ++r1) {
    for (int r2 = 1; r2 <= 3; ++r2) {
      for (int r3 = 1; r3 <= 3; ++r3) {
        for (int t1 = 0; t1 <= r1; ++t1) {
          for (int t2 = 0; t2 <= r2; ++t2) {
            for (int t3 = 0; t3 <= r3; ++t3) {
              ++grid;
              const auto f = make_form({t1, t2, t3}, {r1, r2, r3}, u);
              matched = matched || equivalent(chain_from_stability(f, u), nowide, u);
            }
          }
        }
      }
    }
  }
  v.require(!matched, "example chain realised by a form");
  v.detail = std::to_string(forms) + " forms, " + std::to_string(phases) + " phases, " + std::to_string(modules) +
             " HN checks; example chain matches none of " + std::to_string(grid) + " grid forms";
  return v;
}

// --- 4 ---------------------------------------------------------------------
Verdict slicing_round_trip() {
  Verdict v;
  std::size_t chains = 0;
  int modules = 0;
  for (const auto* u : hn_universes()) {
    CensusCache cache(u->table());
    for (const auto& [name, c] : family(*u)) {
      ++chains;
      const StepChain back = chain_from_slicing(nonzero_phases(c, *u), *u);
      v.require(equivalent(c, back, *u), name + " round trip");
      const auto rep = verify_slicing(c, *u, cache, 5);
      modules += rep.modules_checked;
      v.require(rep.ok, name + " slicing axioms");
      // Axiom 1 from the Hom table directly.
      const auto np = nonzero_phases(c, *u);
      for (const auto& hi : np) {
        for (const auto& lo : np) {
          if (!(lo.phase < hi.phase)) continue;
          for (int x : hi.members.indices()) {
            for (int y : lo.members.indices()) v.require(u->table().hom_dim(x, y) == 0, name + " Hom vanishing");
          }
        }
      }
    }
  }
  v.detail = std::to_string(chains) + " chains round-trip to equivalent chains; slicing axioms on " +
             std::to_string(modules) + " module checks";
  return v;
}

// --- 5 ---------------------------------------------------------------------
Verdict lattice_and_mgs() {
  Verdict v;
  std::ostringstream d;
  struct Expect {
    const Universe* u;
    std::size_t classes;
    std::int64_t mgs;  // -1: no fixed expectation
  };
  for (const auto& [u, want_classes, want_mgs] :
       {Expect{&fixtures::a2(), 5, 2}, Expect{&fixtures::a3(), 14, -1}, Expect{&fixtures::universe(3, "<>", 2), 14, -1}}) {
    const auto lat = enumerate_lattice(*u);
    const auto by_subsets = oracles::torsion_classes_by_subsets(*u);
    const auto by_growth = oracles::torsion_classes_by_growth(*u);
    v.require(lat.classes.size() == want_classes, u->table().label() + " class count");
    v.require(by_subsets.size() == want_classes && by_growth.size() == want_classes,
              u->table().label() + " oracle class counts");
    const auto mgs = enumerate_mgs(lat, *u);
    const auto oracle_mgs = oracles::maximal_chain_count(by_subsets);
    v.require(static_cast<std::int64_t>(mgs.size()) == oracle_mgs, u->table().label() + " MGS count");
    if (want_mgs >= 0) v.require(static_cast<std::int64_t>(mgs.size()) == want_mgs, u->table().label() + " MGS");
    std::set<std::vector<DimVector>> c_lists;
    for (const auto& g : mgs) {
      BrickLabels labels;
      try {
        labels = brick_labels(g, *u);
      } catch (const ViolationError& e) {
        v.require(false, e.what());
        continue;
      }
      for (std::size_t i = 0; i < labels.bricks.size(); ++i) {
        const Rep& b = u->table().entry(labels.bricks[i]).rep;
        v.require(is_brick(b) && hom_dim(b, b) == 1, "brick");
        const IndexSet p = g[i] & oracles::hom_perp(g[i + 1], *u);
        v.require(filt_closure(IndexSet::single(labels.bricks[i]), *u) == p, "P = Filt(B)");
        for (std::size_t j = 0; j < i; ++j) {
          v.require(u->table().hom_dim(labels.bricks[i], labels.bricks[j]) == 0, "Hom-orthogonality");
        }
      }
      v.require(c_lists.insert(labels.c_vectors).second, "distinct c-vector lists");
    }
    d << u->table().label() << ": " << lat.classes.size() << " classes, " << mgs.size() << " MGS; ";
  }
  v.detail = d.str() + "bricks, orthogonality, Filt regeneration and c-vectors checked";
  return v;
}

// --- 6 ---------------------------------------------------------------------
Verdict wall_crossing() {
  Verdict v;
  struct Case {
    const Universe* u;
    DimVector bound;
  };
  std::size_t chains = 0, classes = 0;
  for (const auto& [u, bound] :
       {Case{&fixtures::a2(), {2, 2}}, Case{&fixtures::a2(3), {2, 2}}, Case{&fixtures::a3(), {1, 1, 1}}}) {
    HallAlgebra h(*u, bound);
    auto all_01 = [&](const HallElem& e) {
      for (const auto& [c, x] : e.coeffs) {
        if (x != 0 && x != 1) return false;
      }
      return true;
    };
    const HallElem whole = h.e_subcategory(u->all());
    for (const auto& [name, c] : family(*u)) {
      ++chains;
      HallElem prod = h.unit();
      const auto np = nonzero_phases(c, *u);
      for (auto it = np.rbegin(); it != np.rend(); ++it) {
        prod = h.product(prod, h.e_subcategory(it->members));
        v.require(all_01(prod), name + " partial product coefficients");
      }
      v.require(prod == whole, u->table().label() + " " + name + " e_A");
      const auto rep = verify_wallcrossing(c, h);
      v.require(rep.ok && rep.max_coefficient <= 1, name + " report");
      classes += rep.classes_checked;
    }
    for (const auto& t : fixtures::lattice(*u).classes) {
      const HallElem prod = h.product(h.e_subcategory(t), h.e_subcategory(oracles::hom_perp(t, *u)));
      v.require(prod == whole && all_01(prod), "torsion pair " + u->format(t));
    }
  }
  v.detail = std::to_string(chains) + " chains on A2 (2,2) p=2,3 and A3 (1,1,1) p=2, " + std::to_string(classes) +
             " coefficients compared; torsion-pair identity on every lattice class";
  return v;
}

// --- 7 ---------------------------------------------------------------------
Verdict metric_suite() {
  Verdict v;
  std::size_t triples = 0, pairs = 0, ball_checks = 0;
  for (const auto* u : hn_universes()) {
    auto fam = family(*u);
    std::mt19937 rng(4242);
    for (int i = 0; fam.size() < 32; ++i) fam.push_back({"extra " + std::to_string(i), fixtures::random_lattice_chain(*u, rng)});
    std::vector<PhaseProfile> prof;
    for (const auto& f : fam) prof.push_back(phase_profile(f.chain, *u));
    const std::size_t n = fam.size();
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ++pairs;
        try {
          d[i][j] = distance(fam[i].chain, fam[j].chain, *u).value;  // throws if the two formulas disagree
        } catch (const InternalError& e) {
          v.require(false, e.what());
        }
        v.require(d[i][j] == profile_distance(prof[i], prof[j]).value, "profile");
        v.require(d[i][j] == oracles::filt_distance(fam[i].chain, fam[j].chain, *u),
                  fam[i].name + " / " + fam[j].name + " Filt oracle");
      }
      v.require(d[i][i] == q(0), "d(a,a) = 0");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        v.require(d[i][j] == d[j][i] && d[i][j] >= q(0), "symmetry");
        for (std::size_t k = 0; k < n; ++k) {
          ++triples;
          v.require(d[i][j] <= d[i][k] + d[k][j], "triangle inequality");
        }
      }
    }
  }

  // Balls around constant chains on A2: every chain with breakpoints on the
  // 1/8 grid.
  const auto& u = fixtures::a2();
  const auto& lat = fixtures::lattice(u);
  std::vector<StepChain> grid;
  std::function<void(std::vector<ChainSpec>&, int)> grow = [&](std::vector<ChainSpec>& spec, int from) {
    // close the chain at 1 with any class below the last
    for (const auto& c : lat.classes) {
      if (!spec.empty() && !c.proper_subset_of(spec.back().members)) continue;
      spec.push_back({q(1), c, false});
      grid.push_back(make_step_chain(spec, u));
      spec.pop_back();
    }
    for (int k = from; k < 8; ++k) {
      for (const auto& c : lat.classes) {
        if (!spec.empty() && !c.proper_subset_of(spec.back().members)) continue;
        spec.push_back({q(k, 8), c, false});
        grow(spec, k + 1);
        spec.pop_back();
      }
    }
  };
  std::vector<ChainSpec> spec;
  grow(spec, 1);
  for (const auto& x : lat.classes) {
    const StepChain center = make_step_chain({{q(1), x, false}}, u);
    const auto cp = phase_profile(center, u);
    for (const auto& eps : {q(1, 8), q(3, 16), q(1, 4), q(5, 16), q(3, 8), q(7, 16)}) {
      for (const auto& cand : grid) {
        ++ball_checks;
        bool expected = false;
        const auto& bp = cand.breakpoints();
        for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
          if (bp[i] < eps && q(1) - eps < bp[i + 1]) expected = cand.pieces()[i] == x;
        }
        v.require((profile_distance(cp, phase_profile(cand, u)).value < eps) == expected,
                  "ball " + u.format(x) + " eps " + to_string(eps) + " at " + describe(cand, u));
      }
    }
  }
  v.detail = std::to_string(pairs) + " pairs (sup = inf = Filt oracle), " + std::to_string(triples) +
             " triangle checks, " + std::to_string(ball_checks) + " ball memberships on " + std::to_string(grid.size()) +
             " grid chains";
  return v;
}

// --- 8 ---------------------------------------------------------------------
Verdict chamber_audit() {
  Verdict v;
  int chambers = 0, walls = 0;
  std::size_t perturbations = 0;
  for (const auto* u : hn_universes()) {
    const auto& lat = fixtures::lattice(*u);
    for (const auto& [name, c] : family(*u)) {
      Rational gap(1);
      for (std::size_t i = 1; i < c.breakpoints().size(); ++i) gap = std::min(gap, c.breakpoints()[i] - c.breakpoints()[i - 1]);
      const Rational eps = gap / 4;
      const bool chamber = is_chamber_point(c, lat, *u);
      const auto rep = perturb_invariance_test(c, eps, lat, *u);
      perturbations += rep.perturbations;
      const bool is_mgs = name.rfind("mgs:", 0) == 0;
      if (is_mgs) v.require(chamber, name + " is a chamber point");
      if (chamber) {
        ++chambers;
        v.require(rep.invariant, name + " invariant");
        continue;
      }
      ++walls;
      v.require(!rep.invariant && rep.witness.has_value(), u->table().label() + " " + name + " witness");
      if (!rep.witness) continue;
      const auto& w = *rep.witness;
      const Rep m = u->realize(w.module);
      v.require(shape_of(hn_filtration(c, m, *u)) == w.before, name + " witness before");
      v.require(shape_of(hn_filtration(w.perturbed, m, *u)) == w.after, name + " witness after");
      v.require(w.before != w.after, name + " witness changes");
      v.require(distance(c, w.perturbed, *u).value < eps, name + " witness inside the ball");
    }
  }
  v.detail = std::to_string(chambers) + " chamber chains invariant, " + std::to_string(walls) +
             " wall chains with verified witnesses, " + std::to_string(perturbations) + " perturbations";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "example reproduction", 1.0, example_reproduction},
      {2, "HN existence and uniqueness", 120.0, hn_existence_uniqueness},
      {3, "stability equivalence", 120.0, stability_equivalence},
      {4, "slicing round trip", 120.0, slicing_round_trip},
      {5, "lattice and MGS counts, brick labels", 60.0, lattice_and_mgs},
      {6, "wall-crossing and torsion-pair identities", 300.0, wall_crossing},
      {7, "metric suite", 300.0, metric_suite},
      {8, "chamber audit", 300.0, chamber_audit},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    // Criterion 1's budget excludes building the shared A3 table.
    if (c.id == 1) fixtures::a3();
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(secs <= c.budget_s, "time budget exceeded");
    if (!v.pass) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.budget_s);
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << ") [" << timing << "] "
              << v.detail;
    if (!v.pass) std::cout << " -- first failure: " << v.first_failure;
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
