#pragma once

#include <cstddef>
#include <vector>

#include "quotshrink/group_hom.hpp"
#include "quotshrink/normal_structure.hpp"
#include "quotshrink/perm_group.hpp"

namespace quotshrink {

// All subgroups of Q up to conjugacy, found by closure extension from the
// cyclic subgroups with conjugation-orbit deduplication. Deterministic:
// results sorted by (order, canonical element key). Throws OrderCapExceeded
// when |Q| > order_cap.
std::vector<PermGroup> enumerate_subgroups(
    const PermGroup& q, std::size_t order_cap = kDefaultOrderCap);

struct MinDegResult {
  unsigned degree = 0;
  GroupHom witness;
  std::vector<PermGroup> subgroup_family;
};

// Exact minimal faithful permutation degree with a witnessing action:
// branch and bound over families of subgroup classes ordered by descending
// order, minimizing the sum of indices subject to a trivial joint core. The
// witness is the direct sum of the coset actions on the chosen family; the
// reported family is the first optimum in search order. The trivial group
// has degree 1 by convention.
MinDegResult min_faithful_rep(const PermGroup& q,
                              std::size_t order_cap = kDefaultOrderCap);

bool verify_faithful(const GroupHom& hom);

}  // namespace quotshrink
