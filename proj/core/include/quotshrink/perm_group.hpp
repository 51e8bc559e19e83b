#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quotshrink/chain.hpp"
#include "quotshrink/order.hpp"
#include "quotshrink/perm.hpp"

namespace quotshrink {

// A permutation group on {1..degree}, given by generators, with a stabilizer
// chain computed at construction. Immutable after construction; copies share
// the underlying data and are safe to use from multiple threads.
class PermGroup {
public:
  // The trivial group when generators is empty.
  PermGroup(unsigned degree, std::vector<Perm> generators);

  static PermGroup trivial(unsigned degree);

  unsigned degree() const { return data_->degree; }
  const std::vector<Perm>& generators() const { return data_->generators; }
  const Order& order() const { return data_->chain.order(); }
  bool is_trivial() const { return order() == 1; }
  const StabilizerChain& chain() const { return data_->chain; }

  bool contains(const Perm& p) const;

  // Orbit of x as a sorted point set.
  std::vector<unsigned> orbit(unsigned x) const;
  // All orbits, sorted by smallest element; each orbit sorted.
  std::vector<std::vector<unsigned>> orbits() const;
  bool is_transitive() const;
  std::vector<unsigned> moved_points() const;

  // Point stabilizer, as a group on the same degree.
  PermGroup stabilizer(unsigned x) const;

  // Pointwise stabilizer of a set of points.
  PermGroup pointwise_stabilizer(const std::vector<unsigned>& points) const;

  // Deterministic enumeration in chain order; stops early when the visitor
  // returns false.
  void for_each_element(const std::function<bool(const Perm&)>& visit) const;
  // All elements in chain order; throws OrderCapExceeded if |G| > cap.
  std::vector<Perm> elements(std::size_t cap) const;
  Perm first_nontrivial_element() const;

  bool is_abelian() const;

  // Structural equality as subgroups of Sym(degree).
  friend bool operator==(const PermGroup& a, const PermGroup& b);
  friend bool operator!=(const PermGroup& a, const PermGroup& b) {
    return !(a == b);
  }

private:
  struct Data {
    unsigned degree;
    std::vector<Perm> generators;
    StabilizerChain chain;
  };
  explicit PermGroup(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

// H <= G as subgroups of the same symmetric group.
bool is_subgroup(const PermGroup& sub, const PermGroup& super);

// N <= G and N is normalized by G.
bool is_normal(const PermGroup& normal, const PermGroup& ambient);

// Conjugate subgroup H^g.
PermGroup conjugate_group(const PermGroup& h, const Perm& g);

// Smallest normal subgroup of G containing the seeds. Seeds must lie in G.
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds);

// Subgroup of G commuting elementwise with every generator of N.
PermGroup centralizer(const PermGroup& g, const PermGroup& n);

// Subgroup of G whose elements conjugate H onto itself.
PermGroup normalizer(const PermGroup& g, const PermGroup& h);

// Derived subgroup [G, G].
PermGroup derived_subgroup(const PermGroup& g);

// Limit of the derived series (the solvable residual).
PermGroup solvable_residual(const PermGroup& g);

// Intersection of two subgroups of the same symmetric group, computed by
// enumerating the smaller side. Throws OrderCapExceeded beyond the cap.
PermGroup intersection(const PermGroup& a, const PermGroup& b,
                       std::size_t cap = 1u << 22);

// Largest normal subgroup of G contained in H. H must be a subgroup of G.
PermGroup core_of_subgroup(const PermGroup& g, const PermGroup& h);

}  // namespace quotshrink
