#include "torschain/torsion.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "torschain/errors.hpp"

namespace torschain {

IndexSet support(const ModClass& c) {
  IndexSet s;
  for (std::size_t i = 0; i < c.multiplicity.size(); ++i) {
    if (c.multiplicity[i] > 0) s.insert(static_cast<int>(i));
  }
  return s;
}

namespace {

std::optional<int> single_summand(const ModClass& c) {
  if (c.summand_count() != 1) return std::nullopt;
  for (std::size_t i = 0; i < c.multiplicity.size(); ++i) {
    if (c.multiplicity[i] == 1) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool leq(const DimVector& a, const DimVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace

Universe::Universe(IndecTable table) : table_(std::move(table)) {
  const int n = table_.size();
  const auto un = static_cast<std::size_t>(n);
  quotient_summands_.assign(un, IndexSet{});
  sub_summands_.assign(un, IndexSet{});
  extension_summands_.assign(un, std::vector<IndexSet>(un));
  extension_middles_.assign(un, std::vector<std::vector<ModClass>>(un));

  for (int x = 0; x < n; ++x) {
    const Rep& rep = table_.entry(x).rep;
    for (const auto& sub : submodules(rep)) {
      sub_summands_[static_cast<std::size_t>(x)] |= support(decompose(sub.rep));
      quotient_summands_[static_cast<std::size_t>(x)] |= support(decompose(quotient(rep, sub)));
    }
  }

  // Every middle term of 0 -> X -> E -> Z -> 0 has dims(X) + dims(Z). Scan each
  // candidate class E once and read off which (X, Z) it realises.
  std::set<ModClass> candidates;
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      for (auto& c : classes_with_dims(table_, table_.dims(x) + table_.dims(z))) candidates.insert(std::move(c));
    }
  }
  for (const auto& e_class : candidates) {
    const Rep e = realize(e_class);
    std::set<std::pair<int, int>> realised;
    for (int x = 0; x < n; ++x) {
      if (!leq(table_.dims(x), e.dims()) || table_.dims(x) == e.dims()) continue;
      for (const auto& sub : submodules_of_dims(e, table_.dims(x))) {
        auto xs = single_summand(decompose(sub.rep));
        if (!xs || *xs != x) continue;
        auto zs = single_summand(decompose(quotient(e, sub)));
        if (zs) realised.insert({x, *zs});
      }
    }
    for (auto [x, z] : realised) {
      extension_summands_[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] |= support(e_class);
      extension_middles_[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)].push_back(e_class);
    }
  }
}

std::string Universe::format(IndexSet s) const {
  if (s.empty()) return "{0}";
  std::string out = "add{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ", ";
    out += table_.name(i);
    first = false;
  }
  return out + "}";
}

IndexSet Universe::parse_members(const std::vector<std::string>& names) const {
  IndexSet s;
  for (const auto& name : names) {
    auto idx = table_.index_of(name);
    if (!idx) throw InputError("unknown indecomposable '" + name + "'");
    s.insert(*idx);
  }
  return s;
}

bool is_extension_closed(IndexSet s, const Universe& u) {
  for (int x : s.indices()) {
    for (int z : s.indices()) {
      if (!u.extension_summands(x, z).subset_of(s)) return false;
    }
  }
  return true;
}

bool is_torsion_class(IndexSet s, const Universe& u) {
  for (int x : s.indices()) {
    if (!u.quotient_summands(x).subset_of(s)) return false;
  }
  return is_extension_closed(s, u);
}

bool is_torsion_free_class(IndexSet s, const Universe& u) {
  for (int x : s.indices()) {
    if (!u.sub_summands(x).subset_of(s)) return false;
  }
  return is_extension_closed(s, u);
}

IndexSet perp(IndexSet s, const Universe& u) {
  IndexSet out;
  for (int y = 0; y < u.size(); ++y) {
    bool orthogonal = true;
    for (int x : s.indices()) orthogonal = orthogonal && u.table().hom_dim(x, y) == 0;
    if (orthogonal) out.insert(y);
  }
  return out;
}

IndexSet left_perp(IndexSet s, const Universe& u) {
  IndexSet out;
  for (int x = 0; x < u.size(); ++x) {
    bool orthogonal = true;
    for (int y : s.indices()) orthogonal = orthogonal && u.table().hom_dim(x, y) == 0;
    if (orthogonal) out.insert(x);
  }
  return out;
}

TorsionClass tors_closure(IndexSet gens, const Universe& u) {
  IndexSet cur = gens;
  while (true) {
    IndexSet next = cur;
    for (int x : cur.indices()) {
      next |= u.quotient_summands(x);
      for (int z : cur.indices()) next |= u.extension_summands(x, z);
    }
    if (next == cur) return cur;
    cur = next;
  }
}

IndexSet filt_closure(IndexSet gens, const Universe& u) {
  IndexSet cur = gens;
  while (true) {
    IndexSet next = cur;
    for (int x : cur.indices()) {
      for (int z : cur.indices()) next |= u.extension_summands(x, z);
    }
    if (next == cur) return cur;
    cur = next;
  }
}

Subrep trace(const Rep& m, const std::vector<Rep>& sources) {
  const int n = m.quiver().vertex_count();
  std::vector<std::vector<FpVector>> gens(static_cast<std::size_t>(n));
  for (const auto& src : sources) {
    for (const auto& f : hom_basis(src, m)) {
      for (int v = 0; v < n; ++v) {
        const FpMatrix& c = f.components[static_cast<std::size_t>(v)];
        for (int k = 0; k < c.cols(); ++k) gens[static_cast<std::size_t>(v)].push_back(c.column(k));
      }
    }
  }
  return generated_subrep(m, gens);
}

Subrep trace(const Rep& m, IndexSet s, const Universe& u) {
  std::vector<Rep> sources;
  for (int x : s.indices()) sources.push_back(u.table().entry(x).rep);
  return trace(m, sources);
}

CanonicalSES torsion_subobject(const Rep& m, TorsionClass t, const Universe& u) {
  Subrep tm = trace(m, t, u);
  Rep q = quotient(m, tm);
  if (!class_in(u.decompose(tm.rep), t) || !class_in(u.decompose(q), perp(t, u))) {
    throw InternalError("trace does not give a torsion/torsion-free splitting of " + u.format(u.decompose(m)));
  }
  return {std::move(tm), std::move(q)};
}

IndexSet fac_closure(const ModClass& m, const Universe& u) {
  std::vector<Rep> sources;
  for (int x : support(m).indices()) sources.push_back(u.table().entry(x).rep);
  IndexSet out;
  if (sources.empty()) return out;
  for (int y = 0; y < u.size(); ++y) {
    const Rep& target = u.table().entry(y).rep;
    if (trace(target, sources).dims() == target.dims()) out.insert(y);
  }
  return out;
}

int TorsionLattice::index_of(TorsionClass t) const {
  auto it = std::find(classes.begin(), classes.end(), t);
  return it == classes.end() ? -1 : static_cast<int>(it - classes.begin());
}

bool TorsionLattice::is_cover(TorsionClass upper, TorsionClass lower) const {
  const int a = index_of(upper), b = index_of(lower);
  if (a < 0 || b < 0) return false;
  return std::find(covers.begin(), covers.end(), std::make_pair(a, b)) != covers.end();
}

std::vector<int> TorsionLattice::lower_covers(int upper) const {
  std::vector<int> out;
  for (auto [a, b] : covers) {
    if (a == upper) out.push_back(b);
  }
  return out;
}

TorsionLattice enumerate_lattice(const Universe& u) {
  if (u.size() > kLatticeEnumerationLimit) {
    throw ResourceError("torsion lattice enumeration is limited to " + std::to_string(kLatticeEnumerationLimit) +
                        " indecomposables, table has " + std::to_string(u.size()));
  }
  TorsionLattice lat;
  const std::uint64_t count = std::uint64_t{1} << u.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if (is_torsion_class(IndexSet(bits), u)) lat.classes.emplace_back(bits);
  }
  std::sort(lat.classes.begin(), lat.classes.end(), [](IndexSet a, IndexSet b) {
    return std::make_pair(a.size(), a.bits()) < std::make_pair(b.size(), b.bits());
  });
  const int n = static_cast<int>(lat.classes.size());
  for (int hi = 0; hi < n; ++hi) {
    for (int lo = 0; lo < n; ++lo) {
      if (!lat.classes[lo].proper_subset_of(lat.classes[hi])) continue;
      bool cover = true;
      for (int mid = 0; mid < n && cover; ++mid) {
        cover = !(lat.classes[lo].proper_subset_of(lat.classes[mid]) &&
                  lat.classes[mid].proper_subset_of(lat.classes[hi]));
      }
      if (cover) lat.covers.emplace_back(hi, lo);
    }
  }
  return lat;
}

}  // namespace torschain
