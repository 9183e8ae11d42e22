#pragma once

#include <string>
#include <utility>
#include <vector>

#include "torschain/index_set.hpp"
#include "torschain/repcat.hpp"

namespace torschain {

// A torsion class is stored as the set of its indecomposable members.
using TorsionClass = IndexSet;

// The indecomposable table together with everything torsion theory needs to
// know about it: which indecomposables occur as summands of quotients,
// submodules and middle terms of extensions of other indecomposables. Built
// eagerly, immutable afterwards.
class Universe {
 public:
  explicit Universe(IndecTable table);

  const IndecTable& table() const { return table_; }
  int size() const { return table_.size(); }
  IndexSet all() const { return IndexSet::first_n(size()); }

  // Indecomposable summands of all quotients (resp. submodules) of X, X included.
  IndexSet quotient_summands(int x) const { return quotient_summands_[static_cast<std::size_t>(x)]; }
  IndexSet sub_summands(int x) const { return sub_summands_[static_cast<std::size_t>(x)]; }
  // Indecomposable summands of every E in some 0 -> X -> E -> Z -> 0.
  IndexSet extension_summands(int x, int z) const {
    return extension_summands_[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
  }
  // Middle-term classes of all such sequences.
  const std::vector<ModClass>& extension_middles(int x, int z) const {
    return extension_middles_[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
  }

  ModClass decompose(const Rep& m) const { return torschain::decompose(m, table_); }
  Rep realize(const ModClass& c) const { return torschain::realize(c, table_); }
  std::string format(const ModClass& c) const { return format_class(c, table_); }
  ModClass parse(std::string_view text) const { return parse_class(text, table_); }

  // "add{S1, M[1..2]}" or "{0}".
  std::string format(IndexSet s) const;
  IndexSet parse_members(const std::vector<std::string>& names) const;

 private:
  IndecTable table_;
  std::vector<IndexSet> quotient_summands_;
  std::vector<IndexSet> sub_summands_;
  std::vector<std::vector<IndexSet>> extension_summands_;
  std::vector<std::vector<std::vector<ModClass>>> extension_middles_;
};

IndexSet support(const ModClass& c);
inline bool class_in(const ModClass& c, IndexSet s) { return support(c).subset_of(s); }

bool is_torsion_class(IndexSet s, const Universe& u);
bool is_torsion_free_class(IndexSet s, const Universe& u);
// Closed under extensions (and summands): every indecomposable summand of a
// middle term of an extension between members is a member.
bool is_extension_closed(IndexSet s, const Universe& u);

// {Y : Hom(X, Y) = 0 for all X in s} and {X : Hom(X, Y) = 0 for all Y in s}.
IndexSet perp(IndexSet s, const Universe& u);
IndexSet left_perp(IndexSet s, const Universe& u);

TorsionClass tors_closure(IndexSet gens, const Universe& u);
// Smallest extension-closed set of indecomposables containing gens.
IndexSet filt_closure(IndexSet gens, const Universe& u);

// Sum of the images of all morphisms from members of s into m.
Subrep trace(const Rep& m, IndexSet s, const Universe& u);
Subrep trace(const Rep& m, const std::vector<Rep>& sources);

struct CanonicalSES {
  Subrep torsion_part;  // as a subrepresentation of the input
  Rep quotient_part;
};

CanonicalSES torsion_subobject(const Rep& m, TorsionClass t, const Universe& u);

// Indecomposables N that are quotients of a finite power of m.
IndexSet fac_closure(const ModClass& m, const Universe& u);

// Guard for the subset scan.
inline constexpr int kLatticeEnumerationLimit = 12;

struct TorsionLattice {
  std::vector<TorsionClass> classes;  // sorted by size, then by mask
  std::vector<std::pair<int, int>> covers;  // (upper, lower) indices into classes

  int index_of(TorsionClass t) const;  // -1 when absent
  bool is_cover(TorsionClass upper, TorsionClass lower) const;
  std::vector<int> lower_covers(int upper) const;
};

TorsionLattice enumerate_lattice(const Universe& u);

}  // namespace torschain
