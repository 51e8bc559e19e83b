#include <doctest.h>

#include "quotshrink/mindeg.hpp"
#include "quotshrink/standard_groups.hpp"
#include "quotshrink/wreath.hpp"
#include "support/oracles.hpp"

using namespace quotshrink;
namespace oracle = quotshrink::testing;

TEST_CASE("subgroup enumeration up to conjugacy") {
  CHECK(enumerate_subgroups(symmetric_group(3)).size() == 4);
  CHECK(enumerate_subgroups(klein_four_group()).size() == 5);
  CHECK(enumerate_subgroups(PermGroup::trivial(2)).size() == 1);
  CHECK(enumerate_subgroups(symmetric_group(4)).size() == 11);
  CHECK(enumerate_subgroups(alternating_group(5)).size() == 9);
  CHECK_THROWS_AS(enumerate_subgroups(symmetric_group(5), 100),
                  OrderCapExceeded);
}

TEST_CASE("minimal degree spot values") {
  CHECK(min_faithful_rep(PermGroup::trivial(3)).degree == 1);
  CHECK(min_faithful_rep(cyclic_group(2)).degree == 2);
  CHECK(min_faithful_rep(klein_four_group()).degree == 4);
  CHECK(min_faithful_rep(dihedral_group(4)).degree == 4);
  CHECK(min_faithful_rep(cyclic_group(6)).degree == 5);
  CHECK(min_faithful_rep(alternating_group(5)).degree == 5);
  CHECK(min_faithful_rep(symmetric_group(5)).degree == 5);
}

TEST_CASE("witness structure") {
  for (const PermGroup& q :
       {klein_four_group(), dihedral_group(4), cyclic_group(6),
        symmetric_group(4)}) {
    MinDegResult result = min_faithful_rep(q);
    CHECK(verify_faithful(result.witness));
    // degree is the sum of the family indices
    Order sum = 0;
    for (const PermGroup& h : result.subgroup_family)
      sum += q.order() / h.order();
    CHECK(Order(result.degree) == sum);
    // joint core of the family is trivial
    PermGroup meet = q;
    for (const PermGroup& h : result.subgroup_family)
      meet = intersection(meet, core_of_subgroup(q, h));
    CHECK(meet.is_trivial());
  }
}

TEST_CASE("verify_faithful") {
  PermGroup s4 = symmetric_group(4);
  CHECK(verify_faithful(identity_hom(s4)));
  CHECK_FALSE(verify_faithful(coset_action(s4, s4)));
}

TEST_CASE("agreement with the exhaustive family search") {
  // the full order <= 48 catalog; the oracle enumerates every subgroup with
  // no conjugacy reduction and searches all families
  std::vector<PermGroup> catalog{
      cyclic_group(2),
      cyclic_group(3),
      cyclic_group(4),
      klein_four_group(),
      cyclic_group(6),
      symmetric_group(3),
      dihedral_group(4),
      PermGroup(8, {parse_cycles("(1 2 3 4)(5 6 7 8)", 8),
                    parse_cycles("(1 5 3 7)(2 8 4 6)", 8)}),  // quaternion
      alternating_group(4),
      dihedral_group(6),
      cyclic_group(12),
      direct_product(cyclic_group(2), cyclic_group(6)),
      symmetric_group(4),
      direct_product(cyclic_group(2), alternating_group(4)),
      direct_product(symmetric_group(3), symmetric_group(3)),
      wreath_product_action(symmetric_group(2), symmetric_group(3)).group,
      direct_product(cyclic_group(2), symmetric_group(4))};
  for (const PermGroup& q : catalog) {
    auto elements = oracle::brute_closure(q.degree(), q.generators());
    REQUIRE(elements.size() <= 48);
    unsigned expected = oracle::exhaustive_min_faithful_degree(elements);
    CHECK(min_faithful_rep(q).degree == expected);
  }
}

TEST_CASE("monotone and subadditive sanity") {
  std::vector<PermGroup> sample{cyclic_group(5), symmetric_group(3),
                                dihedral_group(4), alternating_group(4)};
  for (const PermGroup& q : sample)
    CHECK(Order(min_faithful_rep(q).degree) <= q.order());
  for (const PermGroup& a : sample)
    for (const PermGroup& b : sample) {
      unsigned pa = min_faithful_rep(a).degree;
      unsigned pb = min_faithful_rep(b).degree;
      CHECK(min_faithful_rep(direct_product(a, b)).degree <= pa + pb);
    }
}
