#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torschain/ff_linalg.hpp"
#include "torschain/rational.hpp"

namespace torschain {

// Vertices are 0-based internally and 1-based in every printed name.
struct Arrow {
  int source = 0;
  int target = 0;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  // Type A_n; orientation has n-1 characters, '>' for i -> i+1 and '<' for i+1 -> i.
  static Quiver type_a(int n, std::string_view orientation);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Arrow> arrows_;
};

using DimVector = std::vector<int>;

int total_dim(const DimVector& d);
DimVector operator+(const DimVector& a, const DimVector& b);

// A representation: one F_p-vector space per vertex and one matrix of shape
// dims[target] x dims[source] per arrow.
class Rep {
 public:
  Rep() = default;
  Rep(Quiver quiver, int p, DimVector dims, std::vector<FpMatrix> maps);

  static Rep zero(const Quiver& quiver, int p);

  const Quiver& quiver() const { return quiver_; }
  int p() const { return p_; }
  const DimVector& dims() const { return dims_; }
  int dim(int vertex) const { return dims_[static_cast<std::size_t>(vertex)]; }
  const std::vector<FpMatrix>& maps() const { return maps_; }
  const FpMatrix& map(int arrow) const { return maps_[static_cast<std::size_t>(arrow)]; }
  int total_dim() const { return torschain::total_dim(dims_); }
  bool is_zero() const { return total_dim() == 0; }

 private:
  Quiver quiver_;
  int p_ = 2;
  DimVector dims_;
  std::vector<FpMatrix> maps_;
};

Rep direct_sum(const Rep& a, const Rep& b);

// Per-vertex linear maps; component v has shape dims_to[v] x dims_from[v].
struct Morphism {
  std::vector<FpMatrix> components;

  bool is_zero() const;
  bool is_invertible() const;
};

std::vector<Morphism> hom_basis(const Rep& from, const Rep& to);
int hom_dim(const Rep& from, const Rep& to);
bool is_morphism(const Morphism& f, const Rep& from, const Rep& to);
Morphism linear_combination(const std::vector<Morphism>& basis, const FpVector& coeffs,
                            const Rep& from, const Rep& to);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f

// Exhaustive searches over a Hom space are refused beyond p^dim > this.
inline constexpr std::int64_t kHomSearchLimit = std::int64_t{1} << 16;

bool is_iso(const Rep& a, const Rep& b);

// A subrepresentation as per-vertex subspaces of the ambient representation,
// together with the induced representation in the echelon bases.
struct Subrep {
  std::vector<Subspace> spaces;
  Rep rep;

  DimVector dims() const { return rep.dims(); }
  bool contains(const Subrep& other) const;
  friend bool operator==(const Subrep& a, const Subrep& b) { return a.spaces == b.spaces; }
};

Subrep make_subrep(const Rep& ambient, std::vector<Subspace> spaces);
Subrep zero_subrep(const Rep& ambient);
Subrep full_subrep(const Rep& ambient);
// Smallest subrepresentation containing the given per-vertex vectors.
Subrep generated_subrep(const Rep& ambient, const std::vector<std::vector<FpVector>>& generators);
// Re-expresses a subrepresentation of `inner.rep` as a subrepresentation of the ambient.
Subrep push_forward(const Rep& ambient, const Subrep& inner, const Subrep& sub_of_inner);

std::vector<Subrep> submodules(const Rep& m);
std::vector<Subrep> submodules_of_dims(const Rep& m, const DimVector& dims);

Rep quotient(const Rep& m, const Subrep& sub);

bool is_brick(const Rep& m);
bool is_indecomposable(const Rep& m);

struct IndecEntry {
  std::string name;
  Rep rep;
};

// One representative per isomorphism class of indecomposable, with the matrix
// of Hom dimensions between them.
class IndecTable {
 public:
  static IndecTable type_a(int n, std::string_view orientation, int p);
  // Validates pairwise non-isomorphism and indecomposability of every entry.
  static IndecTable from_entries(Quiver quiver, int p, std::vector<IndecEntry> entries);

  const Quiver& quiver() const { return quiver_; }
  int p() const { return p_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const IndecEntry& entry(int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<IndecEntry>& entries() const { return entries_; }
  const std::string& name(int i) const { return entry(i).name; }
  const DimVector& dims(int i) const { return entry(i).rep.dims(); }
  int hom_dim(int from, int to) const {
    return hom_dims_[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)];
  }
  const std::vector<std::vector<int>>& hom_dims() const { return hom_dims_; }
  std::optional<int> index_of(std::string_view name) const;
  const std::string& label() const { return label_; }

  // m_i = sum_j solver[i][j] * dim Hom(M, X_j).
  const std::vector<std::vector<Rational>>& decomposition_solver() const { return solver_; }

 private:
  IndecTable(Quiver quiver, int p, std::vector<IndecEntry> entries, std::string label);

  Quiver quiver_;
  int p_ = 2;
  std::vector<IndecEntry> entries_;
  std::vector<std::vector<int>> hom_dims_;
  std::vector<std::vector<Rational>> solver_;
  std::string label_;
};

// An isomorphism class: a multiplicity for every table entry.
struct ModClass {
  std::vector<int> multiplicity;

  static ModClass zero(int table_size) { return ModClass{std::vector<int>(table_size, 0)}; }
  static ModClass of(int table_size, int index, int count = 1);

  bool is_zero() const;
  int summand_count() const;
  ModClass operator+(const ModClass& other) const;
  friend auto operator<=>(const ModClass&, const ModClass&) = default;
};

ModClass decompose(const Rep& m, const IndecTable& table);
Rep realize(const ModClass& c, const IndecTable& table);
DimVector dims_of(const ModClass& c, const IndecTable& table);

// "0", "S1", "S1+S1+M[2..3]".
std::string format_class(const ModClass& c, const IndecTable& table);
ModClass parse_class(std::string_view text, const IndecTable& table);

std::vector<ModClass> classes_with_dims(const IndecTable& table, const DimVector& dims);
// Every class whose dimension vector is componentwise <= bound (zero included).
std::vector<ModClass> classes_within(const IndecTable& table, const DimVector& bound);
// Every nonzero class of total dimension <= max_total.
std::vector<ModClass> classes_up_to_total(const IndecTable& table, int max_total);

// For each (class of L, class of M/L) the number of subrepresentations L of m
// realising that pair.
using SubobjectCensus = std::map<std::pair<ModClass, ModClass>, std::int64_t>;
SubobjectCensus subobject_census(const Rep& m, const IndecTable& table);

// Memoises subobject_census by class. The only mutable object in the library;
// lookups are serialised internally so one cache may be shared across threads.
class CensusCache {
 public:
  explicit CensusCache(const IndecTable& table) : table_(&table) {}

  const SubobjectCensus& census(const ModClass& m);
  const IndecTable& table() const { return *table_; }

 private:
  const IndecTable* table_;
  std::mutex mutex_;
  std::map<ModClass, SubobjectCensus> memo_;
};

}  // namespace torschain
