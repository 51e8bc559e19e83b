#include "quotshrink/perm_group.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "quotshrink/errors.hpp"

namespace quotshrink {

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators)
    : data_(std::make_shared<const Data>(Data{
          degree, generators, StabilizerChain(degree, generators)})) {}

PermGroup PermGroup::trivial(unsigned degree) {
  return PermGroup(degree, {});
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree())
    throw DegreeMismatch("membership test: element degree " +
                         std::to_string(p.degree()) + " in group of degree " +
                         std::to_string(degree()));
  return data_->chain.contains(p);
}

std::vector<unsigned> PermGroup::orbit(unsigned x) const {
  if (x < 1 || x > degree())
    throw PointOutOfRange("orbit of point " + std::to_string(x));
  std::vector<bool> seen(degree() + 1, false);
  std::vector<unsigned> bfs{x};
  seen[x] = true;
  for (std::size_t head = 0; head < bfs.size(); ++head)
    for (const Perm& g : generators()) {
      unsigned y = g[bfs[head]];
      if (!seen[y]) {
        seen[y] = true;
        bfs.push_back(y);
      }
    }
  std::sort(bfs.begin(), bfs.end());
  return bfs;
}

std::vector<std::vector<unsigned>> PermGroup::orbits() const {
  std::vector<bool> seen(degree() + 1, false);
  std::vector<std::vector<unsigned>> result;
  for (unsigned x = 1; x <= degree(); ++x) {
    if (seen[x]) continue;
    std::vector<unsigned> orb = orbit(x);
    for (unsigned y : orb) seen[y] = true;
    result.push_back(std::move(orb));
  }
  return result;
}

bool PermGroup::is_transitive() const {
  return orbit(1).size() == degree();
}

std::vector<unsigned> PermGroup::moved_points() const {
  std::vector<bool> moved(degree() + 1, false);
  for (const Perm& g : generators())
    for (unsigned x : g.moved_points()) moved[x] = true;
  std::vector<unsigned> result;
  for (unsigned x = 1; x <= degree(); ++x)
    if (moved[x]) result.push_back(x);
  return result;
}

PermGroup PermGroup::stabilizer(unsigned x) const {
  return pointwise_stabilizer({x});
}

PermGroup PermGroup::pointwise_stabilizer(
    const std::vector<unsigned>& points) const {
  for (unsigned x : points)
    if (x < 1 || x > degree())
      throw PointOutOfRange("stabilizer of point " + std::to_string(x));
  StabilizerChain pinned(degree(), generators(), points, BaseHintMode::kPin);
  std::vector<unsigned> distinct = points;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  return PermGroup(degree(), pinned.generators_fixing_prefix(distinct.size()));
}

void PermGroup::for_each_element(
    const std::function<bool(const Perm&)>& visit) const {
  data_->chain.for_each_element(visit);
}

std::vector<Perm> PermGroup::elements(std::size_t cap) const {
  if (order() > cap)
    throw OrderCapExceeded("group of order " + order().str() +
                           " exceeds enumeration cap " + std::to_string(cap));
  std::vector<Perm> result;
  result.reserve(static_cast<std::size_t>(order()));
  for_each_element([&](const Perm& p) {
    result.push_back(p);
    return true;
  });
  return result;
}

Perm PermGroup::first_nontrivial_element() const {
  auto p = data_->chain.first_nontrivial();
  if (!p) throw PreconditionFailed("trivial group has no nontrivial element");
  return *p;
}

bool PermGroup::is_abelian() const {
  const auto& gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!commutes(gens[i], gens[j])) return false;
  return true;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  for (const Perm& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

bool is_subgroup(const PermGroup& sub, const PermGroup& super) {
  if (sub.degree() != super.degree()) return false;
  for (const Perm& g : sub.generators())
    if (!super.contains(g)) return false;
  return true;
}

bool is_normal(const PermGroup& normal, const PermGroup& ambient) {
  if (!is_subgroup(normal, ambient)) return false;
  for (const Perm& n : normal.generators())
    for (const Perm& g : ambient.generators())
      if (!normal.contains(conjugate(n, g))) return false;
  return true;
}

PermGroup conjugate_group(const PermGroup& h, const Perm& g) {
  std::vector<Perm> gens;
  gens.reserve(h.generators().size());
  for (const Perm& x : h.generators()) gens.push_back(conjugate(x, g));
  return PermGroup(h.degree(), std::move(gens));
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds) {
  for (const Perm& s : seeds)
    if (!g.contains(s))
      throw NotInGroup("normal closure seed " + format_cycles(s) +
                       " lies outside the group");
  StabilizerChain closure(g.degree(), {});
  std::vector<Perm> closure_gens;
  std::vector<Perm> queue;
  for (const Perm& s : seeds)
    if (!s.is_identity()) queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Perm x = queue[head];
    if (closure.contains(x)) continue;
    closure.add_generator(x);
    closure_gens.push_back(x);
    for (const Perm& gen : g.generators()) queue.push_back(conjugate(x, gen));
  }
  return PermGroup(g.degree(), std::move(closure_gens));
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> seeds;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      Perm c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) seeds.push_back(c);
    }
  return normal_closure(g, seeds);
}

PermGroup solvable_residual(const PermGroup& g) {
  PermGroup current = g;
  while (true) {
    PermGroup next = derived_subgroup(current);
    if (next.order() == current.order()) return current;
    current = std::move(next);
  }
}

PermGroup intersection(const PermGroup& a, const PermGroup& b,
                       std::size_t cap) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("intersection of groups of degrees " +
                         std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()));
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  if (small.order() > cap)
    throw OrderCapExceeded("intersection via enumeration needs order <= " +
                           std::to_string(cap) + ", got " +
                           small.order().str());
  StabilizerChain meet(a.degree(), {});
  std::vector<Perm> gens;
  small.for_each_element([&](const Perm& p) {
    if (!p.is_identity() && large.contains(p) && !meet.contains(p)) {
      meet.add_generator(p);
      gens.push_back(p);
    }
    return true;
  });
  return PermGroup(a.degree(), std::move(gens));
}

}  // namespace quotshrink
