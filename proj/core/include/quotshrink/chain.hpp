#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "quotshrink/order.hpp"
#include "quotshrink/perm.hpp"

namespace quotshrink {

// Base selection policy for the optional base hint.
//   kPrefer: hint points are preferred when a new base point is needed.
//   kPin:    every hint point becomes a base point up front, in hint order,
//            so the hint is guaranteed to be a prefix of the base. Used to
//            extract pointwise stabilizers of a prescribed point set.
enum class BaseHintMode { kPrefer, kPin };

// Deterministic Schreier-Sims stabilizer chain: base points, per-level
// strong generators, orbits and transversals. All construction choices
// (base point selection, orbit traversal, generator processing) are fixed,
// so identical inputs produce identical chains.
class StabilizerChain {
public:
  StabilizerChain(unsigned degree, std::vector<Perm> generators,
                  std::vector<unsigned> base_hint = {},
                  BaseHintMode hint_mode = BaseHintMode::kPrefer);

  unsigned degree() const { return degree_; }
  const Order& order() const { return order_; }
  std::size_t length() const { return levels_.size(); }

  unsigned base_point(std::size_t i) const { return levels_[i].base; }
  std::vector<unsigned> base() const;

  // Orbit of base_point(i) under the i-th stabilizer subgroup, ascending.
  const std::vector<unsigned>& orbit(std::size_t i) const {
    return levels_[i].orbit_sorted;
  }
  bool in_orbit(std::size_t i, unsigned point) const;

  // Transversal element mapping base_point(i) to point.
  Perm transversal(std::size_t i, unsigned point) const;
  Perm transversal_inverse(std::size_t i, unsigned point) const;

  // Generators of the i-th stabilizer subgroup (i = 0: the whole group).
  const std::vector<Perm>& level_generators(std::size_t i) const {
    return levels_[i].gens;
  }

  // Generators of the pointwise stabilizer of base_point(0..k-1).
  std::vector<Perm> generators_fixing_prefix(std::size_t k) const;

  // Strips p through the chain. Returns the residue and the number of levels
  // passed; p is a member iff the residue is the identity after all levels.
  std::pair<Perm, std::size_t> sift(const Perm& p) const;
  bool contains(const Perm& p) const;

  // Extends the group by g. Returns true if the group grew.
  bool add_generator(const Perm& g);

  // Visits every element exactly once in the chain's canonical order
  // (lexicographic over transversal point tuples, orbit points ascending).
  // Stops early if the visitor returns false; returns false in that case.
  bool for_each_element(const std::function<bool(const Perm&)>& visit) const;

  // First non-identity element in the canonical enumeration order; empty for
  // the trivial group.
  std::optional<Perm> first_nontrivial() const;

private:
  struct Level {
    unsigned base = 0;
    std::vector<Perm> gens;
    std::vector<unsigned> orbit_sorted;
    std::vector<unsigned> orbit_bfs;
    // Schreier vector: for each point p (index p-1), the parent point and the
    // index of the generator leading from parent to p; parent == p marks the
    // base point, parent == 0 marks points outside the orbit.
    std::vector<unsigned> sv_parent;
    std::vector<int> sv_label;
    bool explicit_transversals = false;
    std::vector<std::optional<Perm>> trans;
    std::vector<std::optional<Perm>> trans_inv;
  };

  void seed_generator(const Perm& g);
  void append_level(unsigned base);
  unsigned pick_base_point(const Perm& g) const;
  void rebuild_orbit(std::size_t i);
  // Scans Schreier generators of level i; on the first new strong generator
  // returns the level it was added at, otherwise an empty optional.
  std::optional<std::size_t> process_level(std::size_t i);
  std::pair<Perm, std::size_t> sift_from(Perm p, std::size_t start) const;
  void complete();
  void recompute_order();

  bool for_each_element_rec(std::size_t level, const Perm& prefix,
                            const std::function<bool(const Perm&)>& visit) const;

  unsigned degree_;
  std::vector<unsigned> base_hint_;
  std::vector<Level> levels_;
  std::vector<bool> in_base_;
  std::vector<bool> dirty_;
  Order order_ = 1;
};

}  // namespace quotshrink
