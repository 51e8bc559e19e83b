#include <doctest.h>

#include "quotshrink/blocks.hpp"
#include "quotshrink/standard_groups.hpp"
#include "quotshrink/wreath.hpp"
#include "support/oracles.hpp"

using namespace quotshrink;
namespace oracle = quotshrink::testing;

namespace {

// class-index vector of a BlockSystem, for comparison with the brute oracle
std::vector<unsigned> classes_of(const BlockSystem& b) {
  std::vector<unsigned> cls(b.degree);
  // normalize labels to first-occurrence order, as the oracle does
  std::vector<int> relabel(b.blocks.size(), -1);
  unsigned next = 0;
  for (unsigned x = 1; x <= b.degree; ++x) {
    unsigned blk = b.block_of[x];
    if (relabel[blk] == -1) relabel[blk] = static_cast<int>(next++);
    cls[x - 1] = static_cast<unsigned>(relabel[blk]);
  }
  return cls;
}

}  // namespace

TEST_CASE("minimal blocks") {
  PermGroup c4 = cyclic_group(4);
  BlockSystem b = minimal_block(c4, 1, 3);
  CHECK(b.size() == 2);
  CHECK(b.blocks[0] == std::vector<unsigned>{1, 3});
  CHECK(b.blocks[1] == std::vector<unsigned>{2, 4});

  CHECK(minimal_block(symmetric_group(4), 1, 3).size() == 1);

  auto w = wreath_imprimitive(symmetric_group(2), symmetric_group(2));
  BlockSystem bw = minimal_block(w.group, 1, 2);
  CHECK(bw.size() == 2);
  CHECK(bw.blocks[0] == std::vector<unsigned>{1, 2});

  CHECK_THROWS_AS(minimal_block(c4, 1, 1), PreconditionFailed);
  CHECK_THROWS_AS(minimal_block(klein_four_group(), 1, 2), NotTransitive);
}

TEST_CASE("minimal blocks agree with the exhaustive partition search") {
  std::vector<PermGroup> sample{
      cyclic_group(4), cyclic_group(6), dihedral_group(4), dihedral_group(6),
      wreath_imprimitive(symmetric_group(2), symmetric_group(3)).group,
      alternating_group(5)};
  for (const PermGroup& g : sample) {
    for (unsigned b = 2; b <= g.degree(); ++b) {
      BlockSystem fast = minimal_block(g, 1, b);
      CHECK(classes_of(fast) == oracle::brute_minimal_block(g, 1, b));
    }
  }
}

TEST_CASE("minimal blocks at degree twelve against the partition oracle") {
  auto w = wreath_imprimitive(symmetric_group(3), symmetric_group(4));
  CHECK(w.group.degree() == 12);
  BlockSystem fast = minimal_block(w.group, 1, 2);
  CHECK(fast.size() == 4);
  CHECK(classes_of(fast) == oracle::brute_minimal_block(w.group, 1, 2));
}

TEST_CASE("orbit block systems") {
  auto w = wreath_imprimitive(symmetric_group(5), symmetric_group(2));
  PermGroup n = direct_product(alternating_group(5), alternating_group(5));
  BlockSystem b = orbits_block_system(w.group, n);
  CHECK(b.size() == 2);
  CHECK(b.blocks[0].size() == 5);

  // transitive N: one block
  CHECK(orbits_block_system(symmetric_group(5), alternating_group(5)).size() ==
        1);
  // trivial N: singletons
  CHECK(orbits_block_system(symmetric_group(4), PermGroup::trivial(4)).size() ==
        4);
  CHECK_THROWS_AS(
      orbits_block_system(symmetric_group(5),
                          PermGroup(5, {parse_cycles("(1 2)", 5)})),
      NotNormal);
}

TEST_CASE("block actions") {
  auto w = wreath_imprimitive(symmetric_group(2), symmetric_group(2));
  BlockSystem b = minimal_block(w.group, 1, 2);
  GroupHom action = block_action(w.group, b);
  CHECK(action.codomain_degree() == 2);
  CHECK(action.image().order() == 2);
  CHECK(action.kernel().order() == 4);
  // the kernel fixes every block setwise
  for (const Perm& k : action.kernel().generators())
    for (const auto& block : b.blocks)
      for (unsigned x : block)
        CHECK(b.block_of[k[x]] == b.block_of[x]);

  // singleton blocks: isomorphism
  std::vector<std::vector<unsigned>> singletons;
  for (unsigned x = 1; x <= 4; ++x) singletons.push_back({x});
  GroupHom iso = block_action(
      w.group, block_system_from_classes(4, std::move(singletons)));
  CHECK(iso.kernel_order() == 1);
  CHECK(iso.image().order() == w.group.order());

  // one block: trivial image
  GroupHom collapse = block_action(
      w.group, block_system_from_classes(4, {{1, 2, 3, 4}}));
  CHECK(collapse.image().order() == 1);
  CHECK(collapse.kernel().order() == w.group.order());

  // non-invariant partition
  CHECK_THROWS_AS(
      block_action(w.group, block_system_from_classes(4, {{1, 3}, {2, 4}})),
      NotInvariant);
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(alternating_group(5)));
  CHECK_FALSE(
      is_primitive(wreath_imprimitive(symmetric_group(2), symmetric_group(2))
                       .group));
  CHECK(is_primitive(symmetric_group(2)));
  CHECK_THROWS_AS(is_primitive(klein_four_group()), NotTransitive);
}

TEST_CASE("orbit blocks are permuted transitively for transitive groups") {
  auto w = wreath_imprimitive(alternating_group(5), cyclic_group(3));
  std::vector<Perm> base(w.group.generators().begin(),
                         w.group.generators().end() - 1);
  PermGroup n(15, base);
  BlockSystem b = orbits_block_system(w.group, n);
  CHECK(b.size() == 3);
  GroupHom action = block_action(w.group, b);
  CHECK(action.image().is_transitive());
}
