#pragma once

// Shared universes and the chain family used across the test binaries.

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <torschain/torschain.hpp>

namespace fixtures {

using namespace torschain;

inline const Universe& universe(int n, const std::string& orientation, int p) {
  static std::map<std::tuple<int, std::string, int>, std::unique_ptr<Universe>> cache;
  auto& slot = cache[{n, orientation, p}];
  if (!slot) slot = std::make_unique<Universe>(IndecTable::type_a(n, orientation, p));
  return *slot;
}
inline const Universe& a2(int p = 2) { return universe(2, ">", p); }
inline const Universe& a3(int p = 2) { return universe(3, ">>", p); }

inline const TorsionLattice& lattice(const Universe& u) {
  static std::map<const Universe*, TorsionLattice> cache;
  auto it = cache.find(&u);
  if (it == cache.end()) it = cache.emplace(&u, enumerate_lattice(u)).first;
  return it->second;
}

inline IndexSet members(const Universe& u, std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return u.parse_members(v);
}

inline Rational q(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

// Linear A3: add{S1..M[1..3]} \ {S3} on (0,1/3), add{S1} on (1/3,2/3).
inline StepChain nowide_chain(const Universe& u) {
  return make_step_chain({{q(1, 3), members(u, {"S1", "S2", "M[1..2]", "M[2..3]", "M[1..3]"}), false},
                          {q(2, 3), members(u, {"S1"}), false},
                          {q(1), IndexSet{}, false}},
                         u);
}

// A strictly decreasing run of lattice classes on random twelfths.
inline StepChain random_lattice_chain(const Universe& u, std::mt19937& rng) {
  const auto& lat = lattice(u);
  std::vector<TorsionClass> run;
  std::uniform_int_distribution<std::size_t> pick(0, lat.classes.size() - 1);
  TorsionClass cur = lat.classes[pick(rng)];
  run.push_back(cur);
  std::uniform_int_distribution<int> coin(0, 2);
  while (!cur.empty() && coin(rng) != 0 && run.size() < 5) {
    std::vector<TorsionClass> below;
    for (const auto& c : lat.classes) {
      if (c.proper_subset_of(cur)) below.push_back(c);
    }
    cur = below[std::uniform_int_distribution<std::size_t>(0, below.size() - 1)(rng)];
    run.push_back(cur);
  }
  std::vector<int> cuts(11);
  for (int i = 0; i < 11; ++i) cuts[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(run.size() - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<ChainSpec> spec;
  for (std::size_t i = 0; i < run.size(); ++i) {
    spec.push_back({i + 1 < run.size() ? q(cuts[i], 12) : q(1), run[i], false});
  }
  return make_step_chain(spec, u);
}

struct NamedChain {
  std::string name;
  StepChain chain;
};

// All MGS chains, torsion-pair chains of every lattice class, the trivial
// chain, seeded stability chains and random lattice chains; duplicates dropped.
inline std::vector<NamedChain> chain_family(const Universe& u, bool with_example = false) {
  std::vector<NamedChain> out;
  auto add = [&](std::string name, StepChain c) {
    for (const auto& e : out) {
      if (e.chain == c) return;
    }
    out.push_back({std::move(name), std::move(c)});
  };
  const auto mgs = enumerate_mgs(lattice(u), u);
  for (std::size_t k = 0; k < mgs.size(); ++k) add("mgs:" + std::to_string(k + 1), mgs_to_chain(mgs[k], u));
  if (with_example) add("nowide", nowide_chain(u));
  add("trivial", trivial_chain(u));
  for (const auto& t : lattice(u).classes) {
    add("pair " + u.format(t), chain_from_torsion_pair(t, q(1, 3), q(2, 3), u));
  }
  std::mt19937 rng(20240611);
  for (int i = 0; i < 6; ++i) add("stability " + std::to_string(i), chain_from_stability(random_form(u, rng), u));
  for (int i = 0; out.size() < 24 || i < 6; ++i) add("random " + std::to_string(i), random_lattice_chain(u, rng));
  return out;
}

}  // namespace fixtures
