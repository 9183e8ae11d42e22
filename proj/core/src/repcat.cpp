#include "torschain/repcat.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "torschain/errors.hpp"

namespace torschain {
namespace {

void check_compatible(const Rep& a, const Rep& b) {
  if (!(a.quiver() == b.quiver())) throw InputError("representations over different quivers");
  if (a.p() != b.p()) throw InputError("representations over different fields");
}

std::int64_t power_capped(int base, int exp, std::int64_t cap) {
  std::int64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > cap) return cap + 1;
  }
  return v;
}

// Steps a little-endian base-p counter; false once it wraps to all zeros.
bool next_coefficients(FpVector& digits, int p) {
  for (int& d : digits) {
    if (++d < p) return true;
    d = 0;
  }
  return false;
}

enum class SearchOutcome { found, absent, undecided };

// Looks for an invertible element of the space spanned by `basis`. Random
// sampling certifies positives cheaply; exhaustive enumeration certifies
// negatives when the space fits under the guard.
SearchOutcome search_invertible(const std::vector<Morphism>& basis, const Rep& from, const Rep& to,
                                int samples, bool exhaustive) {
  const int p = from.p();
  const int h = static_cast<int>(basis.size());
  if (from.is_zero() && to.is_zero()) return SearchOutcome::found;
  if (h == 0) return SearchOutcome::absent;

  std::mt19937 rng(0x7A11C0DEu);
  std::uniform_int_distribution<int> digit(0, p - 1);
  FpVector coeffs(static_cast<std::size_t>(h));
  for (int s = 0; s < samples; ++s) {
    for (int& c : coeffs) c = digit(rng);
    if (linear_combination(basis, coeffs, from, to).is_invertible()) return SearchOutcome::found;
  }
  if (!exhaustive || power_capped(p, h, kHomSearchLimit) > kHomSearchLimit) {
    return SearchOutcome::undecided;
  }
  std::fill(coeffs.begin(), coeffs.end(), 0);
  while (next_coefficients(coeffs, p)) {
    if (linear_combination(basis, coeffs, from, to).is_invertible()) return SearchOutcome::found;
  }
  return SearchOutcome::absent;
}

FpMatrix power(const FpMatrix& m, int k) {
  FpMatrix out = FpMatrix::identity(m.p(), m.rows());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

bool is_nilpotent(const Morphism& f, int total) {
  return std::all_of(f.components.begin(), f.components.end(),
                     [total](const FpMatrix& c) { return power(c, total).is_zero(); });
}

// Calls `visit` on every nonzero element of the span of `basis`; refuses spaces
// beyond the guard.
template <typename Visit>
bool for_each_nonzero_element(const std::vector<Morphism>& basis, const Rep& from, const Rep& to,
                              Visit visit) {
  const int h = static_cast<int>(basis.size());
  if (power_capped(from.p(), h, kHomSearchLimit) > kHomSearchLimit) {
    throw ResourceError("Hom-space enumeration guard exceeded: " + std::to_string(from.p()) + "^" +
                        std::to_string(h));
  }
  FpVector coeffs(static_cast<std::size_t>(h), 0);
  while (next_coefficients(coeffs, from.p())) {
    if (!visit(linear_combination(basis, coeffs, from, to))) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> invert_transpose(const std::vector<std::vector<int>>& h) {
  const std::size_t n = h.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(h[j][i]);
    a[i][n + i] = Rational(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col].numerator() == 0) ++sel;
    if (sel == n) throw InputError("Hom-dimension matrix is singular; table cannot decompose");
    std::swap(a[sel], a[col]);
    Rational inv = Rational(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].numerator() == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  }
  return out;
}

void check_subspaces_fit(const Rep& ambient, const std::vector<Subspace>& spaces) {
  if (static_cast<int>(spaces.size()) != ambient.quiver().vertex_count()) {
    throw InputError("subrepresentation has wrong number of vertex spaces");
  }
  for (int v = 0; v < ambient.quiver().vertex_count(); ++v) {
    if (spaces[v].ambient() != ambient.dim(v) || spaces[v].p() != ambient.p()) {
      throw InputError("subspace at vertex " + std::to_string(v + 1) + " does not fit");
    }
  }
}

bool arrow_compatible(const FpMatrix& map, const Subspace& src, const Subspace& dst) {
  return std::all_of(src.basis().begin(), src.basis().end(),
                     [&](const FpVector& u) { return dst.contains(map.apply(u)); });
}

}  // namespace

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  if (vertex_count < 1) throw InputError("quiver needs at least one vertex");
  for (const auto& a : arrows_) {
    if (a.source < 0 || a.source >= vertex_count || a.target < 0 || a.target >= vertex_count) {
      throw InputError("arrow endpoint out of range");
    }
  }
}

Quiver Quiver::type_a(int n, std::string_view orientation) {
  if (n < 1) throw InputError("type A quiver needs n >= 1");
  if (static_cast<int>(orientation.size()) != n - 1) {
    throw InputError("orientation for A" + std::to_string(n) + " needs " + std::to_string(n - 1) +
                     " characters");
  }
  std::vector<Arrow> arrows;
  for (int i = 0; i + 1 < n; ++i) {
    char c = orientation[static_cast<std::size_t>(i)];
    if (c == '>') {
      arrows.push_back({i, i + 1});
    } else if (c == '<') {
      arrows.push_back({i + 1, i});
    } else {
      throw InputError(std::string("orientation character must be '<' or '>', got '") + c + "'");
    }
  }
  return Quiver(n, std::move(arrows));
}

int total_dim(const DimVector& d) {
  int s = 0;
  for (int x : d) s += x;
  return s;
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw InputError("dimension vectors of different length");
  DimVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Rep::Rep(Quiver quiver, int p, DimVector dims, std::vector<FpMatrix> maps)
    : quiver_(std::move(quiver)), p_(p), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!is_supported_prime(p_)) throw InputError("unsupported prime " + std::to_string(p_));
  if (static_cast<int>(dims_.size()) != quiver_.vertex_count()) {
    throw InputError("dimension vector length does not match the quiver");
  }
  if (std::any_of(dims_.begin(), dims_.end(), [](int d) { return d < 0; })) {
    throw InputError("negative dimension");
  }
  if (maps_.size() != quiver_.arrows().size()) throw InputError("one matrix per arrow required");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const Arrow& arrow = quiver_.arrows()[a];
    if (maps_[a].p() != p_ || maps_[a].rows() != dims_[static_cast<std::size_t>(arrow.target)] ||
        maps_[a].cols() != dims_[static_cast<std::size_t>(arrow.source)]) {
      throw InputError("matrix for arrow " + std::to_string(a) + " has the wrong shape or field");
    }
  }
}

Rep Rep::zero(const Quiver& quiver, int p) {
  std::vector<FpMatrix> maps;
  for (std::size_t a = 0; a < quiver.arrows().size(); ++a) maps.emplace_back(p, 0, 0);
  return Rep(quiver, p, DimVector(static_cast<std::size_t>(quiver.vertex_count()), 0), std::move(maps));
}

Rep direct_sum(const Rep& a, const Rep& b) {
  check_compatible(a, b);
  DimVector dims = a.dims() + b.dims();
  std::vector<FpMatrix> maps;
  const auto& arrows = a.quiver().arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    int s = arrows[k].source, t = arrows[k].target;
    FpMatrix m(a.p(), dims[static_cast<std::size_t>(t)], dims[static_cast<std::size_t>(s)]);
    const FpMatrix& ma = a.map(static_cast<int>(k));
    const FpMatrix& mb = b.map(static_cast<int>(k));
    for (int r = 0; r < ma.rows(); ++r)
      for (int c = 0; c < ma.cols(); ++c) m.set(r, c, ma(r, c));
    for (int r = 0; r < mb.rows(); ++r)
      for (int c = 0; c < mb.cols(); ++c) m.set(ma.rows() + r, ma.cols() + c, mb(r, c));
    maps.push_back(std::move(m));
  }
  return Rep(a.quiver(), a.p(), std::move(dims), std::move(maps));
}

bool Morphism::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const FpMatrix& m) { return m.is_zero(); });
}

bool Morphism::is_invertible() const {
  return std::all_of(components.begin(), components.end(),
                     [](const FpMatrix& m) { return torschain::is_invertible(m); });
}

std::vector<Morphism> hom_basis(const Rep& from, const Rep& to) {
  check_compatible(from, to);
  const int n = from.quiver().vertex_count();
  const int p = from.p();
  std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + to.dim(v) * from.dim(v);
  const int unknowns = offset[n];
  auto var = [&](int v, int r, int c) { return offset[v] + r * from.dim(v) + c; };

  std::vector<std::vector<int>> rows;
  const auto& arrows = from.quiver().arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const int s = arrows[k].source, t = arrows[k].target;
    const FpMatrix& fa = from.map(static_cast<int>(k));
    const FpMatrix& ta = to.map(static_cast<int>(k));
    // (f_t * from_a - to_a * f_s)[r][c] = 0
    for (int r = 0; r < to.dim(t); ++r) {
      for (int c = 0; c < from.dim(s); ++c) {
        std::vector<int> eq(static_cast<std::size_t>(unknowns), 0);
        for (int q = 0; q < from.dim(t); ++q) eq[var(t, r, q)] += fa(q, c);
        for (int q = 0; q < to.dim(s); ++q) eq[var(s, q, c)] -= ta(r, q);
        rows.push_back(std::move(eq));
      }
    }
  }

  std::vector<FpVector> kernel;
  if (unknowns > 0) {
    std::vector<int> flat;
    for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
    FpMatrix system(p, static_cast<int>(rows.size()), unknowns, std::move(flat));
    kernel = kernel_basis(system);
  }

  std::vector<Morphism> basis;
  for (const auto& vec : kernel) {
    Morphism f;
    for (int v = 0; v < n; ++v) {
      FpMatrix comp(p, to.dim(v), from.dim(v));
      for (int r = 0; r < to.dim(v); ++r)
        for (int c = 0; c < from.dim(v); ++c) comp.set(r, c, vec[var(v, r, c)]);
      f.components.push_back(std::move(comp));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

int hom_dim(const Rep& from, const Rep& to) { return static_cast<int>(hom_basis(from, to).size()); }

bool is_morphism(const Morphism& f, const Rep& from, const Rep& to) {
  const auto& arrows = from.quiver().arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const auto& ft = f.components[static_cast<std::size_t>(arrows[k].target)];
    const auto& fs = f.components[static_cast<std::size_t>(arrows[k].source)];
    if (!(ft * from.map(static_cast<int>(k)) == to.map(static_cast<int>(k)) * fs)) return false;
  }
  return true;
}

Morphism linear_combination(const std::vector<Morphism>& basis, const FpVector& coeffs, const Rep& from,
                            const Rep& to) {
  Morphism out;
  for (int v = 0; v < from.quiver().vertex_count(); ++v) out.components.emplace_back(from.p(), to.dim(v), from.dim(v));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t v = 0; v < out.components.size(); ++v) {
      out.components[v] = out.components[v] + basis[i].components[v].scaled(coeffs[i]);
    }
  }
  return out;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism out;
  for (std::size_t v = 0; v < f.components.size(); ++v) out.components.push_back(g.components[v] * f.components[v]);
  return out;
}

bool is_iso(const Rep& a, const Rep& b) {
  check_compatible(a, b);
  if (a.dims() != b.dims()) return false;
  if (a.is_zero()) return true;
  auto basis = hom_basis(a, b);
  // An isomorphism identifies Hom(a, b) with End(a) and with End(b).
  const int h = static_cast<int>(basis.size());
  if (h != hom_dim(a, a) || h != hom_dim(b, b)) return false;
  switch (search_invertible(basis, a, b, 64, true)) {
    case SearchOutcome::found:
      return true;
    case SearchOutcome::absent:
      return false;
    case SearchOutcome::undecided:
      break;
  }
  throw ResourceError("isomorphism search guard exceeded: " + std::to_string(a.p()) + "^" + std::to_string(h));
}

bool Subrep::contains(const Subrep& other) const {
  if (spaces.size() != other.spaces.size()) return false;
  for (std::size_t v = 0; v < spaces.size(); ++v) {
    if (!spaces[v].contains(other.spaces[v])) return false;
  }
  return true;
}

Subrep make_subrep(const Rep& ambient, std::vector<Subspace> spaces) {
  check_subspaces_fit(ambient, spaces);
  const auto& arrows = ambient.quiver().arrows();
  std::vector<FpMatrix> maps;
  DimVector dims;
  for (const auto& s : spaces) dims.push_back(s.dim());
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const Subspace& src = spaces[static_cast<std::size_t>(arrows[k].source)];
    const Subspace& dst = spaces[static_cast<std::size_t>(arrows[k].target)];
    std::vector<FpVector> cols;
    for (const auto& u : src.basis()) {
      FpVector image = ambient.map(static_cast<int>(k)).apply(u);
      if (!dst.contains(image)) throw InputError("subspaces are not closed under the arrow maps");
      cols.push_back(dst.coordinates(image));
    }
    maps.push_back(FpMatrix::from_columns(ambient.p(), dst.dim(), cols));
  }
  Rep induced(ambient.quiver(), ambient.p(), std::move(dims), std::move(maps));
  return Subrep{std::move(spaces), std::move(induced)};
}

Subrep zero_subrep(const Rep& ambient) {
  std::vector<Subspace> spaces;
  for (int v = 0; v < ambient.quiver().vertex_count(); ++v) spaces.push_back(Subspace::zero(ambient.p(), ambient.dim(v)));
  return make_subrep(ambient, std::move(spaces));
}

Subrep full_subrep(const Rep& ambient) {
  std::vector<Subspace> spaces;
  for (int v = 0; v < ambient.quiver().vertex_count(); ++v) spaces.push_back(Subspace::full(ambient.p(), ambient.dim(v)));
  return make_subrep(ambient, std::move(spaces));
}

Subrep generated_subrep(const Rep& ambient, const std::vector<std::vector<FpVector>>& generators) {
  const int n = ambient.quiver().vertex_count();
  if (static_cast<int>(generators.size()) != n) throw InputError("one generator list per vertex required");
  std::vector<Subspace> spaces;
  for (int v = 0; v < n; ++v) spaces.push_back(Subspace::span(ambient.p(), ambient.dim(v), generators[v]));
  const auto& arrows = ambient.quiver().arrows();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      auto& src = spaces[static_cast<std::size_t>(arrows[k].source)];
      auto& dst = spaces[static_cast<std::size_t>(arrows[k].target)];
      std::vector<FpVector> vecs = dst.basis();
      for (const auto& u : src.basis()) vecs.push_back(ambient.map(static_cast<int>(k)).apply(u));
      Subspace grown = Subspace::span(ambient.p(), dst.ambient(), vecs);
      if (grown.dim() != dst.dim()) {
        dst = std::move(grown);
        changed = true;
      }
    }
  }
  return make_subrep(ambient, std::move(spaces));
}

Subrep push_forward(const Rep& ambient, const Subrep& inner, const Subrep& sub_of_inner) {
  std::vector<Subspace> spaces;
  for (std::size_t v = 0; v < inner.spaces.size(); ++v) {
    std::vector<FpVector> vecs;
    for (const auto& coords : sub_of_inner.spaces[v].basis()) vecs.push_back(inner.spaces[v].combine(coords));
    spaces.push_back(Subspace::span(ambient.p(), ambient.dim(static_cast<int>(v)), vecs));
  }
  return make_subrep(ambient, std::move(spaces));
}

namespace {

std::vector<Subrep> enumerate_subreps(const Rep& m, const std::vector<std::vector<Subspace>>& candidates) {
  const int n = m.quiver().vertex_count();
  const auto& arrows = m.quiver().arrows();
  std::vector<Subrep> out;
  std::vector<Subspace> chosen(static_cast<std::size_t>(n));
  std::function<void(int)> assign = [&](int v) {
    if (v == n) {
      out.push_back(make_subrep(m, chosen));
      return;
    }
    for (const auto& s : candidates[static_cast<std::size_t>(v)]) {
      chosen[static_cast<std::size_t>(v)] = s;
      bool ok = true;
      for (std::size_t k = 0; k < arrows.size() && ok; ++k) {
        int a = arrows[k].source, b = arrows[k].target;
        if (std::max(a, b) != v) continue;
        ok = arrow_compatible(m.map(static_cast<int>(k)), chosen[static_cast<std::size_t>(a)],
                              chosen[static_cast<std::size_t>(b)]);
      }
      if (ok) assign(v + 1);
    }
  };
  assign(0);
  return out;
}

}  // namespace

std::vector<Subrep> submodules(const Rep& m) {
  std::vector<std::vector<Subspace>> candidates;
  for (int v = 0; v < m.quiver().vertex_count(); ++v) candidates.push_back(enumerate_all_subspaces(m.dim(v), m.p()));
  return enumerate_subreps(m, candidates);
}

std::vector<Subrep> submodules_of_dims(const Rep& m, const DimVector& dims) {
  if (static_cast<int>(dims.size()) != m.quiver().vertex_count()) throw InputError("dimension vector length mismatch");
  std::vector<std::vector<Subspace>> candidates;
  for (int v = 0; v < m.quiver().vertex_count(); ++v) {
    if (dims[v] < 0 || dims[v] > m.dim(v)) return {};
    candidates.push_back(enumerate_subspaces(m.dim(v), dims[v], m.p()));
  }
  return enumerate_subreps(m, candidates);
}

Rep quotient(const Rep& m, const Subrep& sub) {
  check_subspaces_fit(m, sub.spaces);
  const auto& arrows = m.quiver().arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (!arrow_compatible(m.map(static_cast<int>(k)), sub.spaces[static_cast<std::size_t>(arrows[k].source)],
                          sub.spaces[static_cast<std::size_t>(arrows[k].target)])) {
      throw InputError("not a subrepresentation: subspaces are not closed under the arrow maps");
    }
  }
  DimVector dims;
  std::vector<std::vector<int>> complement;
  for (const auto& s : sub.spaces) {
    complement.push_back(s.complement_coordinates());
    dims.push_back(static_cast<int>(complement.back().size()));
  }
  std::vector<FpMatrix> maps;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const auto s = static_cast<std::size_t>(arrows[k].source);
    const auto t = static_cast<std::size_t>(arrows[k].target);
    FpMatrix q(m.p(), dims[t], dims[s]);
    for (std::size_t j = 0; j < complement[s].size(); ++j) {
      FpVector e(static_cast<std::size_t>(m.dim(static_cast<int>(s))), 0);
      e[static_cast<std::size_t>(complement[s][j])] = 1;
      FpVector image = sub.spaces[t].reduce(m.map(static_cast<int>(k)).apply(e));
      for (std::size_t i = 0; i < complement[t].size(); ++i) {
        q.set(static_cast<int>(i), static_cast<int>(j), image[static_cast<std::size_t>(complement[t][i])]);
      }
    }
    maps.push_back(std::move(q));
  }
  return Rep(m.quiver(), m.p(), std::move(dims), std::move(maps));
}

bool is_brick(const Rep& m) {
  if (m.is_zero()) return false;
  auto basis = hom_basis(m, m);
  return for_each_nonzero_element(basis, m, m, [](const Morphism& f) { return f.is_invertible(); });
}

bool is_indecomposable(const Rep& m) {
  if (m.is_zero()) return false;
  auto basis = hom_basis(m, m);
  const int total = m.total_dim();
  return for_each_nonzero_element(basis, m, m, [total](const Morphism& f) {
    return f.is_invertible() || is_nilpotent(f, total);
  });
}

IndecTable::IndecTable(Quiver quiver, int p, std::vector<IndecEntry> entries, std::string label)
    : quiver_(std::move(quiver)), p_(p), entries_(std::move(entries)), label_(std::move(label)) {
  if (entries_.empty()) throw InputError("indecomposable table is empty");
  if (static_cast<int>(entries_.size()) > 64) throw InputError("indecomposable table exceeds 64 entries");
  const std::size_t n = entries_.size();
  hom_dims_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hom_dims_[i][j] = torschain::hom_dim(entries_[i].rep, entries_[j].rep);
  solver_ = invert_transpose(hom_dims_);
}

IndecTable IndecTable::type_a(int n, std::string_view orientation, int p) {
  if (!is_supported_prime(p)) throw InputError("unsupported prime " + std::to_string(p));
  Quiver q = Quiver::type_a(n, orientation);
  std::vector<IndecEntry> entries;
  for (int len = 1; len <= n; ++len) {
    for (int i = 0; i + len <= n; ++i) {
      const int j = i + len - 1;
      DimVector dims(static_cast<std::size_t>(n), 0);
      for (int v = i; v <= j; ++v) dims[static_cast<std::size_t>(v)] = 1;
      std::vector<FpMatrix> maps;
      for (const auto& a : q.arrows()) {
        FpMatrix m(p, dims[static_cast<std::size_t>(a.target)], dims[static_cast<std::size_t>(a.source)]);
        if (m.rows() == 1 && m.cols() == 1) m.set(0, 0, 1);
        maps.push_back(std::move(m));
      }
      std::string name = len == 1 ? "S" + std::to_string(i + 1)
                                  : "M[" + std::to_string(i + 1) + ".." + std::to_string(j + 1) + "]";
      entries.push_back({std::move(name), Rep(q, p, std::move(dims), std::move(maps))});
    }
  }
  std::string label = "A" + std::to_string(n) + (n > 1 ? ":" + std::string(orientation) : "");
  return IndecTable(std::move(q), p, std::move(entries), std::move(label));
}

IndecTable IndecTable::from_entries(Quiver quiver, int p, std::vector<IndecEntry> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Rep& r = entries[i].rep;
    if (!(r.quiver() == quiver) || r.p() != p) throw InputError("entry '" + entries[i].name + "' is over a different quiver or field");
    if (!is_indecomposable(r)) throw InputError("entry '" + entries[i].name + "' is not indecomposable");
    for (std::size_t j = 0; j < i; ++j) {
      if (entries[j].name == entries[i].name) throw InputError("duplicate entry name '" + entries[i].name + "'");
      if (is_iso(entries[j].rep, r)) {
        throw InputError("entries '" + entries[j].name + "' and '" + entries[i].name + "' are isomorphic");
      }
    }
  }
  return IndecTable(std::move(quiver), p, std::move(entries), "custom");
}

std::optional<int> IndecTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

ModClass ModClass::of(int table_size, int index, int count) {
  ModClass c = zero(table_size);
  c.multiplicity[static_cast<std::size_t>(index)] = count;
  return c;
}

bool ModClass::is_zero() const {
  return std::all_of(multiplicity.begin(), multiplicity.end(), [](int m) { return m == 0; });
}

int ModClass::summand_count() const {
  int s = 0;
  for (int m : multiplicity) s += m;
  return s;
}

ModClass ModClass::operator+(const ModClass& other) const {
  if (multiplicity.size() != other.multiplicity.size()) throw InputError("classes over different tables");
  ModClass out = *this;
  for (std::size_t i = 0; i < multiplicity.size(); ++i) out.multiplicity[i] += other.multiplicity[i];
  return out;
}

ModClass decompose(const Rep& m, const IndecTable& table) {
  if (!(m.quiver() == table.quiver()) || m.p() != table.p()) {
    throw InputError("representation does not belong to the table's category");
  }
  const int n = table.size();
  ModClass out = ModClass::zero(n);
  if (m.is_zero()) return out;

  std::vector<int> h(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) h[j] = hom_dim(m, table.entry(j).rep);
  const auto& solver = table.decomposition_solver();
  for (int i = 0; i < n; ++i) {
    Rational acc(0);
    for (int j = 0; j < n; ++j) acc += solver[i][j] * h[j];
    if (acc.denominator() != 1 || acc.numerator() < 0) {
      throw InternalError("Hom counts do not decompose into non-negative multiplicities");
    }
    out.multiplicity[static_cast<std::size_t>(i)] = static_cast<int>(acc.numerator());
  }

  Rep sum = realize(out, table);
  if (sum.dims() != m.dims()) throw InternalError("decomposition has the wrong dimension vector");
  auto basis = hom_basis(m, sum);
  auto outcome = search_invertible(basis, m, sum, 256, true);
  if (outcome == SearchOutcome::undecided) outcome = search_invertible(basis, m, sum, 1 << 15, false);
  if (outcome != SearchOutcome::found) {
    throw InternalError("no isomorphism between the module and its computed decomposition");
  }
  return out;
}

Rep realize(const ModClass& c, const IndecTable& table) {
  if (static_cast<int>(c.multiplicity.size()) != table.size()) throw InputError("class does not match the table");
  Rep out = Rep::zero(table.quiver(), table.p());
  for (int i = 0; i < table.size(); ++i) {
    for (int k = 0; k < c.multiplicity[static_cast<std::size_t>(i)]; ++k) out = direct_sum(out, table.entry(i).rep);
  }
  return out;
}

DimVector dims_of(const ModClass& c, const IndecTable& table) {
  DimVector d(static_cast<std::size_t>(table.quiver().vertex_count()), 0);
  for (int i = 0; i < table.size(); ++i) {
    const int mult = c.multiplicity[static_cast<std::size_t>(i)];
    for (std::size_t v = 0; v < d.size(); ++v) d[v] += mult * table.dims(i)[v];
  }
  return d;
}

std::string format_class(const ModClass& c, const IndecTable& table) {
  std::string out;
  for (int i = 0; i < table.size(); ++i) {
    for (int k = 0; k < c.multiplicity[static_cast<std::size_t>(i)]; ++k) {
      if (!out.empty()) out += '+';
      out += table.name(i);
    }
  }
  return out.empty() ? "0" : out;
}

ModClass parse_class(std::string_view text, const IndecTable& table) {
  ModClass out = ModClass::zero(table.size());
  std::string token;
  auto flush = [&] {
    auto first = token.find_first_not_of(' ');
    auto last = token.find_last_not_of(' ');
    std::string name = first == std::string::npos ? "" : token.substr(first, last - first + 1);
    token.clear();
    if (name == "0") return;
    auto idx = table.index_of(name);
    if (!idx) throw InputError("unknown indecomposable '" + name + "'");
    ++out.multiplicity[static_cast<std::size_t>(*idx)];
  };
  if (text.empty()) throw InputError("empty module expression");
  for (char ch : text) {
    if (ch == '+') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  return out;
}

namespace {

void enumerate_classes(const IndecTable& table, int index, DimVector& room, ModClass& current,
                       const std::function<bool(const DimVector&)>& accept, std::vector<ModClass>& out) {
  if (index == table.size()) {
    if (accept(room)) out.push_back(current);
    return;
  }
  const DimVector& d = table.dims(index);
  int count = 0;
  while (true) {
    current.multiplicity[static_cast<std::size_t>(index)] = count;
    enumerate_classes(table, index + 1, room, current, accept, out);
    bool fits = true;
    for (std::size_t v = 0; v < room.size(); ++v) fits = fits && room[v] >= d[v];
    if (!fits) break;
    for (std::size_t v = 0; v < room.size(); ++v) room[v] -= d[v];
    ++count;
  }
  for (std::size_t v = 0; v < room.size(); ++v) room[v] += count * d[v];
  current.multiplicity[static_cast<std::size_t>(index)] = 0;
}

}  // namespace

std::vector<ModClass> classes_with_dims(const IndecTable& table, const DimVector& dims) {
  DimVector room = dims;
  ModClass current = ModClass::zero(table.size());
  std::vector<ModClass> out;
  enumerate_classes(table, 0, room, current,
                    [](const DimVector& r) { return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; }); },
                    out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ModClass> classes_within(const IndecTable& table, const DimVector& bound) {
  DimVector room = bound;
  ModClass current = ModClass::zero(table.size());
  std::vector<ModClass> out;
  enumerate_classes(table, 0, room, current, [](const DimVector&) { return true; }, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ModClass> classes_up_to_total(const IndecTable& table, int max_total) {
  std::vector<ModClass> out;
  ModClass current = ModClass::zero(table.size());
  std::function<void(int, int)> rec = [&](int index, int room) {
    if (index == table.size()) {
      if (!current.is_zero()) out.push_back(current);
      return;
    }
    const int d = total_dim(table.dims(index));
    for (int count = 0; count * d <= room; ++count) {
      current.multiplicity[static_cast<std::size_t>(index)] = count;
      rec(index + 1, room - count * d);
    }
    current.multiplicity[static_cast<std::size_t>(index)] = 0;
  };
  rec(0, max_total);
  std::sort(out.begin(), out.end());
  return out;
}

SubobjectCensus subobject_census(const Rep& m, const IndecTable& table) {
  SubobjectCensus census;
  for (const auto& sub : submodules(m)) {
    ++census[{decompose(sub.rep, table), decompose(quotient(m, sub), table)}];
  }
  return census;
}

const SubobjectCensus& CensusCache::census(const ModClass& m) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
  }
  SubobjectCensus fresh = subobject_census(realize(m, *table_), *table_);
  std::lock_guard lock(mutex_);
  // std::map never moves nodes, so the reference stays valid.
  return memo_.emplace(m, std::move(fresh)).first->second;
}

}  // namespace torschain
