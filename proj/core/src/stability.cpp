#include "torschain/stability.hpp"

#include <algorithm>
#include <set>

#include "torschain/errors.hpp"

namespace torschain {
namespace {

int dot(const std::vector<int>& a, const DimVector& d) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * d[i];
  return s;
}

std::string join(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

// Extremal phase among the indecomposables of `candidates`.
Rational min_phase(const StabilityForm& f, IndexSet candidates, const Universe& u) {
  Rational best(2);
  for (int y : candidates.indices()) best = std::min(best, phi_value(f, u.table().dims(y)));
  return best;
}

Rational max_phase(const StabilityForm& f, IndexSet candidates, const Universe& u) {
  Rational best(-1);
  for (int y : candidates.indices()) best = std::max(best, phi_value(f, u.table().dims(y)));
  return best;
}

}  // namespace

StabilityForm make_form(std::vector<int> theta, std::vector<int> rho, const Universe& u) {
  const auto n = static_cast<std::size_t>(u.table().quiver().vertex_count());
  if (theta.size() != n || rho.size() != n) {
    throw InputError("stability form needs " + std::to_string(n) + " entries in theta and rho");
  }
  if (std::any_of(rho.begin(), rho.end(), [](int r) { return r <= 0; })) {
    throw InputError("rho entries must be positive");
  }
  for (int x = 0; x < u.size(); ++x) {
    const int t = dot(theta, u.table().dims(x)), r = dot(rho, u.table().dims(x));
    if (t < 0 || t > r) {
      throw InputError("form " + join(theta) + "/" + join(rho) + " sends " + u.table().name(x) + " outside [0, 1]");
    }
  }
  return StabilityForm{std::move(theta), std::move(rho)};
}

StabilityForm random_form(const Universe& u, std::mt19937& rng) {
  const int n = u.table().quiver().vertex_count();
  std::vector<int> theta, rho;
  for (int v = 0; v < n; ++v) {
    int r = std::uniform_int_distribution<int>(1, 4)(rng);
    rho.push_back(r);
    theta.push_back(std::uniform_int_distribution<int>(0, r)(rng));
  }
  return make_form(std::move(theta), std::move(rho), u);
}

std::string describe(const StabilityForm& f) { return "theta=" + join(f.theta) + " rho=" + join(f.rho); }

Rational phi_value(const StabilityForm& f, const DimVector& d) {
  const int r = dot(f.rho, d);
  if (r == 0) throw InputError("phase of the zero module is undefined");
  return Rational(dot(f.theta, d), r);
}

Rational phi_value(const StabilityForm& f, const Rep& m) { return phi_value(f, m.dims()); }

Semistability semistability(const StabilityForm& f, const Rep& m) {
  const Rational phase = phi_value(f, m);
  Semistability out{true, true};
  for (const auto& sub : submodules(m)) {
    if (sub.rep.is_zero() || sub.dims() == m.dims()) continue;
    const Rational ps = phi_value(f, sub.dims());
    if (ps > phase) out.semistable = false;
    if (ps >= phase) out.stable = false;
  }
  return out;
}

IndexSet t_geq(const StabilityForm& f, const Rational& s, const Universe& u) {
  IndexSet out;
  for (int x = 0; x < u.size(); ++x) {
    if (min_phase(f, u.quotient_summands(x), u) >= s) out.insert(x);
  }
  return out;
}

IndexSet t_gt(const StabilityForm& f, const Rational& s, const Universe& u) {
  IndexSet out;
  for (int x = 0; x < u.size(); ++x) {
    if (min_phase(f, u.quotient_summands(x), u) > s) out.insert(x);
  }
  return out;
}

IndexSet f_leq(const StabilityForm& f, const Rational& s, const Universe& u) {
  IndexSet out;
  for (int x = 0; x < u.size(); ++x) {
    if (max_phase(f, u.sub_summands(x), u) <= s) out.insert(x);
  }
  return out;
}

IndexSet f_lt(const StabilityForm& f, const Rational& s, const Universe& u) {
  IndexSet out;
  for (int x = 0; x < u.size(); ++x) {
    if (max_phase(f, u.sub_summands(x), u) < s) out.insert(x);
  }
  return out;
}

std::vector<Rational> realized_phases(const StabilityForm& f, const Universe& u) {
  std::set<Rational> values;
  for (int x = 0; x < u.size(); ++x) values.insert(phi_value(f, u.table().dims(x)));
  return {values.begin(), values.end()};
}

StepChain chain_from_stability(const StabilityForm& f, const Universe& u) {
  // T_{>=s} only changes when s crosses a realised phase, so on (v_{i-1}, v_i)
  // it equals T_{>=v_i}.
  std::vector<Rational> ends;
  for (const auto& v : realized_phases(f, u)) {
    if (v > Rational(0)) ends.push_back(v);
  }
  if (ends.empty() || ends.back() != Rational(1)) ends.push_back(Rational(1));
  std::vector<ChainSpec> spec;
  for (const auto& end : ends) {
    IndexSet piece = t_geq(f, end, u);
    if (!is_torsion_class(piece, u)) {
      throw InternalError("T_{>=" + to_string(end) + "} of " + describe(f) + " is not a torsion class");
    }
    spec.push_back({end, piece, false});
  }
  return make_step_chain(spec, u);
}

StabilityReport verify_semistable_equality(const StabilityForm& f, const Universe& u, int max_total) {
  StabilityReport report;
  const StepChain chain = chain_from_stability(f, u);

  std::set<Rational> phases(chain.breakpoints().begin(), chain.breakpoints().end());
  for (const auto& v : realized_phases(f, u)) phases.insert(v);
  std::vector<Semistability> indec_ss;
  for (int x = 0; x < u.size(); ++x) indec_ss.push_back(semistability(f, u.table().entry(x).rep));
  for (const auto& t : phases) {
    ++report.phases_checked;
    IndexSet semistables;
    for (int x = 0; x < u.size(); ++x) {
      if (indec_ss[static_cast<std::size_t>(x)].semistable && phi_value(f, u.table().dims(x)) == t) semistables.insert(x);
    }
    const IndexSet p = phase_category(chain, t, u);
    if (p != semistables) {
      report.ok = false;
      report.violations.push_back("phase " + to_string(t) + ": chain gives " + u.format(p) + ", semistables are " +
                                  u.format(semistables));
    }
  }

  for (const auto& c : classes_up_to_total(u.table(), max_total)) {
    ++report.modules_checked;
    const Rep m = u.realize(c);
    const auto hn = hn_filtration(chain, m, u);
    for (std::size_t k = 0; k < hn.factors.size(); ++k) {
      const Rep factor = u.realize(hn.factors[k]);
      const Rational phase = phi_value(f, factor);
      bool good = is_semistable(f, factor) && phase == hn.phases[k];
      if (k > 0) good = good && phase < phi_value(f, u.realize(hn.factors[k - 1]));
      if (!good) {
        report.ok = false;
        report.violations.push_back(u.format(c) + ": factor " + u.format(hn.factors[k]) + " @ " +
                                    to_string(hn.phases[k]) + " breaks semistability or phase order");
      }
    }
  }
  return report;
}

}  // namespace torschain
