#pragma once

#include <vector>

#include "quotshrink/group_hom.hpp"
#include "quotshrink/perm_group.hpp"

namespace quotshrink {

// A partition of {1..degree} into blocks, numbered by smallest element in
// ascending order. block_of maps each point to its 0-based block index.
struct BlockSystem {
  unsigned degree = 0;
  std::vector<std::vector<unsigned>> blocks;
  std::vector<unsigned> block_of;  // index 0 unused; points are 1-based

  std::size_t size() const { return blocks.size(); }
};

// Builds a BlockSystem from a partition given as classes (validated).
BlockSystem block_system_from_classes(unsigned degree,
                                      std::vector<std::vector<unsigned>> classes);

// True iff every generator of G maps every block onto a block.
bool is_invariant_partition(const PermGroup& g, const BlockSystem& b);

// The N-orbit partition, which is G-invariant when N is normal in G.
BlockSystem orbits_block_system(const PermGroup& g, const PermGroup& n);

// The finest G-invariant partition in which a and b share a block
// (union-find refinement; merges resolve with the smaller root winning).
BlockSystem minimal_block(const PermGroup& g, unsigned a, unsigned b);

// Action of G on the blocks of an invariant partition.
GroupHom block_action(const PermGroup& g, const BlockSystem& b);

// True iff the transitive group G preserves no proper nontrivial partition.
bool is_primitive(const PermGroup& g);

}  // namespace quotshrink
