#include "quotshrink/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "quotshrink/errors.hpp"

namespace quotshrink {

BlockSystem block_system_from_classes(
    unsigned degree, std::vector<std::vector<unsigned>> classes) {
  std::vector<bool> seen(degree + 1, false);
  for (auto& cls : classes) {
    std::sort(cls.begin(), cls.end());
    for (unsigned x : cls) {
      if (x < 1 || x > degree)
        throw PointOutOfRange("block point " + std::to_string(x));
      if (seen[x])
        throw PreconditionFailed("point " + std::to_string(x) +
                                 " lies in two blocks");
      seen[x] = true;
    }
  }
  for (unsigned x = 1; x <= degree; ++x)
    if (!seen[x])
      throw PreconditionFailed("point " + std::to_string(x) +
                               " lies in no block");
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  BlockSystem b;
  b.degree = degree;
  b.blocks = std::move(classes);
  b.block_of.assign(degree + 1, 0);
  for (std::size_t i = 0; i < b.blocks.size(); ++i)
    for (unsigned x : b.blocks[i]) b.block_of[x] = static_cast<unsigned>(i);
  return b;
}

bool is_invariant_partition(const PermGroup& g, const BlockSystem& b) {
  if (g.degree() != b.degree) return false;
  for (const Perm& gen : g.generators())
    for (const auto& block : b.blocks) {
      unsigned target = b.block_of[gen[block.front()]];
      for (unsigned x : block)
        if (b.block_of[gen[x]] != target) return false;
    }
  return true;
}

BlockSystem orbits_block_system(const PermGroup& g, const PermGroup& n) {
  if (!is_normal(n, g))
    throw NotNormal("orbit block system needs N normal in G");
  return block_system_from_classes(g.degree(), n.orbits());
}

BlockSystem minimal_block(const PermGroup& g, unsigned a, unsigned b) {
  if (!g.is_transitive())
    throw NotTransitive("minimal blocks are defined for transitive groups");
  unsigned degree = g.degree();
  if (a < 1 || a > degree || b < 1 || b > degree)
    throw PointOutOfRange("minimal block seed points");
  if (a == b)
    throw PreconditionFailed("minimal block needs two distinct points");

  std::vector<unsigned> parent(degree + 1);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](unsigned x) {
    unsigned root = x;
    while (parent[root] != root) root = parent[root];
    while (parent[x] != root) {
      unsigned next = parent[x];
      parent[x] = root;
      x = next;
    }
    return root;
  };
  // Smaller root wins, so each class representative is its smallest point.
  auto merge = [&](unsigned x, unsigned y) {
    unsigned rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (ry < rx) std::swap(rx, ry);
    parent[ry] = rx;
    return true;
  };

  std::vector<std::pair<unsigned, unsigned>> queue;
  merge(a, b);
  queue.emplace_back(a, b);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [x, y] = queue[head];
    for (const Perm& gen : g.generators()) {
      unsigned u = gen[x], v = gen[y];
      if (merge(u, v)) queue.emplace_back(u, v);
    }
  }

  std::vector<std::vector<unsigned>> classes(degree + 1);
  for (unsigned x = 1; x <= degree; ++x) classes[find(x)].push_back(x);
  std::vector<std::vector<unsigned>> nonempty;
  for (auto& cls : classes)
    if (!cls.empty()) nonempty.push_back(std::move(cls));
  return block_system_from_classes(degree, std::move(nonempty));
}

GroupHom block_action(const PermGroup& g, const BlockSystem& b) {
  if (g.degree() != b.degree)
    throw DegreeMismatch("block action: partition of degree " +
                         std::to_string(b.degree) + " for group of degree " +
                         std::to_string(g.degree()));
  if (!is_invariant_partition(g, b))
    throw NotInvariant("partition is not preserved by the group");
  unsigned t = static_cast<unsigned>(b.blocks.size());
  std::vector<Perm> images;
  images.reserve(g.generators().size());
  for (const Perm& gen : g.generators()) {
    std::vector<unsigned> im(t);
    for (unsigned i = 0; i < t; ++i)
      im[i] = b.block_of[gen[b.blocks[i].front()]] + 1;
    images.emplace_back(std::move(im));
  }
  return GroupHom(g, t, std::move(images));
}

bool is_primitive(const PermGroup& g) {
  if (!g.is_transitive())
    throw NotTransitive("primitivity is defined for transitive groups");
  for (unsigned b = 2; b <= g.degree(); ++b)
    if (minimal_block(g, 1, b).size() != 1) return false;
  return true;
}

}  // namespace quotshrink
