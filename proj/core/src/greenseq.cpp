#include "torschain/greenseq.hpp"

#include <functional>

#include "torschain/errors.hpp"

namespace torschain {

std::vector<GreenSequence> enumerate_mgs(const TorsionLattice& lattice, const Universe& u) {
  const int top = lattice.index_of(u.all());
  const int bottom = lattice.index_of(IndexSet{});
  if (top < 0 || bottom < 0) throw InputError("lattice does not belong to this universe");
  std::vector<GreenSequence> out;
  GreenSequence path{lattice.classes[static_cast<std::size_t>(top)]};
  std::function<void(int)> walk = [&](int node) {
    if (node == bottom) {
      out.push_back(path);
      return;
    }
    for (int next : lattice.lower_covers(node)) {
      path.push_back(lattice.classes[static_cast<std::size_t>(next)]);
      walk(next);
      path.pop_back();
    }
  };
  walk(top);
  return out;
}

bool is_maximal_green(const GreenSequence& g, const TorsionLattice& lattice, const Universe& u) {
  if (g.size() < 2 || g.front() != u.all() || !g.back().empty()) return false;
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (!lattice.is_cover(g[i - 1], g[i])) return false;
  }
  return true;
}

StepChain mgs_to_chain(const GreenSequence& g, const Universe& u) {
  if (g.size() < 2) throw InputError("a green sequence has at least two terms");
  const auto slots = static_cast<std::int64_t>(g.size());
  std::vector<ChainSpec> spec;
  for (std::int64_t i = 0; i < slots; ++i) spec.push_back({Rational(i + 1, slots), g[static_cast<std::size_t>(i)], false});
  return make_step_chain(spec, u);
}

IndexSet relatively_simple(IndexSet p, const Universe& u) {
  IndexSet out;
  for (int x : p.indices()) {
    bool simple = true;
    for (const auto& [pair, count] : subobject_census(u.table().entry(x).rep, u.table())) {
      const auto& [sub, quot] = pair;
      if (!sub.is_zero() && !quot.is_zero() && class_in(sub, p) && class_in(quot, p)) simple = false;
    }
    if (simple) out.insert(x);
  }
  return out;
}

BrickLabels brick_labels(const GreenSequence& g, const Universe& u) {
  const StepChain chain = mgs_to_chain(g, u);
  BrickLabels out;
  for (std::size_t i = 1; i < g.size(); ++i) {
    const Rational b = chain.breakpoints()[i];
    const IndexSet p = phase_category(chain, b, u);
    const IndexSet simples = relatively_simple(p, u);
    if (simples.size() != 1) {
      throw ViolationError("cover " + u.format(g[i - 1]) + " > " + u.format(g[i]) + " has " +
                           std::to_string(simples.size()) + " relatively simple objects in " + u.format(p));
    }
    const int brick = simples.indices().front();
    if (!is_brick(u.table().entry(brick).rep)) {
      throw ViolationError(u.table().name(brick) + " labels a cover but is not a brick");
    }
    if (filt_closure(IndexSet::single(brick), u) != p) {
      throw ViolationError(u.format(p) + " is not filtered by " + u.table().name(brick));
    }
    out.bricks.push_back(brick);
    out.phases.push_back(b);
    out.c_vectors.push_back(u.table().dims(brick));
  }
  return out;
}

std::vector<DimVector> c_vectors(const GreenSequence& g, const Universe& u) { return brick_labels(g, u).c_vectors; }

bool hom_orthogonal(const BrickLabels& labels, const Universe& u) {
  for (std::size_t k = 0; k < labels.bricks.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (u.table().hom_dim(labels.bricks[k], labels.bricks[j]) != 0) return false;
    }
  }
  return true;
}

}  // namespace torschain
