#include "torschain/hall.hpp"

#include "torschain/errors.hpp"

namespace torschain {

HallCoeff HallElem::coefficient(const ModClass& c) const {
  auto it = coeffs.find(c);
  return it == coeffs.end() ? HallCoeff(0) : it->second;
}

std::int64_t hall_number(const ModClass& l, const ModClass& n, const ModClass& m, const Universe& u) {
  const Rep rep = u.realize(m);
  if (dims_of(l, u.table()) + dims_of(n, u.table()) != rep.dims()) return 0;
  std::int64_t count = 0;
  for (const auto& sub : submodules_of_dims(rep, dims_of(l, u.table()))) {
    if (u.decompose(sub.rep) == l && u.decompose(quotient(rep, sub)) == n) ++count;
  }
  return count;
}

HallAlgebra::HallAlgebra(const Universe& u, DimVector bound)
    : u_(&u), bound_(std::move(bound)), cache_(u.table()) {
  if (static_cast<int>(bound_.size()) != u.table().quiver().vertex_count()) {
    throw InputError("bound needs one entry per vertex");
  }
  for (int b : bound_) {
    if (b < 0) throw InputError("bound entries must be non-negative");
  }
  classes_ = classes_within(u.table(), bound_);
}

bool HallAlgebra::within(const ModClass& c) const {
  const DimVector d = dims_of(c, u_->table());
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (d[v] > bound_[v]) return false;
  }
  return true;
}

HallElem HallAlgebra::unit() const { return basis(ModClass::zero(u_->size())); }

HallElem HallAlgebra::basis(const ModClass& c) const {
  HallElem e = zero();
  if (within(c)) e.coeffs[c] = 1;
  return e;
}

HallElem HallAlgebra::e_subcategory(IndexSet members) const {
  HallElem e = zero();
  for (const auto& c : classes_) {
    if (class_in(c, members)) e.coeffs[c] = 1;
  }
  return e;
}

HallElem HallAlgebra::product(const HallElem& a, const HallElem& b) const {
  if (a.bound != bound_ || b.bound != bound_) throw InputError("Hall elements truncated at different bounds");
  HallElem out = zero();
  for (const auto& m : classes_) {
    HallCoeff sum = 0;
    for (const auto& [pair, count] : cache_.census(m)) {
      auto la = a.coeffs.find(pair.first);
      if (la == a.coeffs.end()) continue;
      auto nb = b.coeffs.find(pair.second);
      if (nb == b.coeffs.end()) continue;
      sum += la->second * nb->second * count;
    }
    if (sum != 0) out.coeffs[m] = sum;
  }
  return out;
}

std::int64_t HallAlgebra::hall_number(const ModClass& l, const ModClass& n, const ModClass& m) const {
  const auto& census = cache_.census(m);
  auto it = census.find({l, n});
  return it == census.end() ? 0 : it->second;
}

std::string HallAlgebra::describe(const HallElem& e) const {
  if (e.coeffs.empty()) return "0";
  std::string out;
  for (const auto& [c, x] : e.coeffs) {
    if (!out.empty()) out += " + ";
    if (x != 1) out += x.str() + "*";
    out += "[" + u_->format(c) + "]";
  }
  return out;
}

namespace {

WallCrossingReport compare_with_whole(const HallElem& product, int factors, const HallAlgebra& algebra) {
  WallCrossingReport report;
  report.factors = factors;
  const HallElem whole = algebra.e_subcategory(algebra.universe().all());
  for (const auto& c : algebra.classes()) {
    ++report.classes_checked;
    const HallCoeff got = product.coefficient(c);
    if (got > report.max_coefficient) report.max_coefficient = got;
    if (got != whole.coefficient(c)) {
      report.ok = false;
      report.mismatches.push_back("[" + algebra.universe().format(c) + "]: product has " + got.str() + ", e_A has " +
                                  whole.coefficient(c).str());
    }
  }
  return report;
}

}  // namespace

WallCrossingReport verify_wallcrossing(const StepChain& chain, const HallAlgebra& algebra) {
  const auto phases = nonzero_phases(chain, algebra.universe());
  HallElem product = algebra.unit();
  for (auto it = phases.rbegin(); it != phases.rend(); ++it) {
    product = algebra.product(product, algebra.e_subcategory(it->members));
  }
  return compare_with_whole(product, static_cast<int>(phases.size()), algebra);
}

WallCrossingReport verify_torsion_pair_identity(TorsionClass t, const HallAlgebra& algebra) {
  const Universe& u = algebra.universe();
  if (!is_torsion_class(t, u)) throw InputError(u.format(t) + " is not a torsion class");
  const HallElem product = algebra.product(algebra.e_subcategory(t), algebra.e_subcategory(perp(t, u)));
  return compare_with_whole(product, 2, algebra);
}

}  // namespace torschain
