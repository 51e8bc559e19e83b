#pragma once

#include <memory>
#include <vector>

#include "quotshrink/perm_group.hpp"

namespace quotshrink {

// A homomorphism from a permutation group into Sym(codomain_degree), given
// by one image per domain generator. Construction verifies that the
// generator map extends to a homomorphism (throws NotAHomomorphism
// otherwise); evaluation, preimages and the kernel are computed through the
// graph group, the diagonal action on the disjoint union of the domain and
// codomain point sets.
//
// Immutable and cheap to copy. The kernel is computed on first access and
// requires codomain_degree <= 2048 (larger kernels do not arise in this
// library; core_of_subgroup covers the large-index coset case).
class GroupHom {
public:
  GroupHom(PermGroup domain, unsigned codomain_degree,
           std::vector<Perm> gen_images);

  const PermGroup& domain() const;
  unsigned codomain_degree() const;
  const std::vector<Perm>& gen_images() const;
  const PermGroup& image() const;

  const PermGroup& kernel() const;
  // |domain| / |image|, computed without building the kernel.
  Order kernel_order() const;
  bool is_injective() const { return kernel_order() == 1; }

  // Image of an arbitrary element of the domain group.
  Perm apply(const Perm& g) const;
  // Some preimage of an element of the image group.
  Perm preimage(const Perm& h) const;

  // Preimage of the stabilizer of a codomain point, as a subgroup of the
  // domain group.
  PermGroup preimage_of_point_stabilizer(unsigned codomain_point) const;

private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

// Identity map of G onto itself.
GroupHom identity_hom(const PermGroup& g);

// Restriction of G to an invariant point set, relabeled 1..|points| in
// ascending point order.
GroupHom restriction_hom(const PermGroup& g, const std::vector<unsigned>& points);

// first, then second: g |-> second.apply(first.apply(g)).
GroupHom compose_homs(const GroupHom& first, const GroupHom& second);

// Homomorphisms with a common domain, acting on the disjoint union of their
// codomains.
GroupHom direct_sum_homs(const std::vector<GroupHom>& homs);

// Action of G on the right cosets of H by right multiplication. Cosets are
// numbered deterministically (breadth-first from H, generators in order).
// The kernel of the returned map is the core of H in G.
GroupHom coset_action(const PermGroup& g, const PermGroup& h);

PermGroup kernel_of(const GroupHom& hom);

// Image of a subgroup of the domain under the map.
PermGroup image_of_subgroup(const GroupHom& hom, const PermGroup& sub);

// Largest normal subgroup of G contained in H.
PermGroup core_of_subgroup(const PermGroup& g, const PermGroup& h);

}  // namespace quotshrink
