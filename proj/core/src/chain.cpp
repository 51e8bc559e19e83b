#include "quotshrink/chain.hpp"

#include <algorithm>
#include <string>

#include "quotshrink/errors.hpp"

namespace quotshrink {

namespace {

// Per-level budget (in ints) below which transversals are stored explicitly;
// larger orbits fall back to Schreier-vector walks.
constexpr std::size_t kExplicitTransversalBudget = std::size_t{1} << 21;

}  // namespace

StabilizerChain::StabilizerChain(unsigned degree, std::vector<Perm> generators,
                                 std::vector<unsigned> base_hint,
                                 BaseHintMode hint_mode)
    : degree_(degree), base_hint_(std::move(base_hint)),
      in_base_(degree + 1, false) {
  if (degree == 0)
    throw InvalidPermutation("group degree must be at least 1");
  for (unsigned b : base_hint_)
    if (b < 1 || b > degree_)
      throw PointOutOfRange("base hint point " + std::to_string(b));

  if (hint_mode == BaseHintMode::kPin) {
    for (unsigned b : base_hint_)
      if (!in_base_[b]) append_level(b);
  }

  for (const Perm& g : generators) {
    if (g.degree() != degree_)
      throw DegreeMismatch("generator of degree " +
                           std::to_string(g.degree()) + " in group of degree " +
                           std::to_string(degree_));
    if (!g.is_identity()) seed_generator(g);
  }
  complete();
  recompute_order();
}

std::vector<unsigned> StabilizerChain::base() const {
  std::vector<unsigned> b;
  b.reserve(levels_.size());
  for (const Level& lvl : levels_) b.push_back(lvl.base);
  return b;
}

bool StabilizerChain::in_orbit(std::size_t i, unsigned point) const {
  const Level& lvl = levels_[i];
  return point >= 1 && point <= degree_ && lvl.sv_parent[point - 1] != 0;
}

Perm StabilizerChain::transversal(std::size_t i, unsigned point) const {
  const Level& lvl = levels_[i];
  if (!in_orbit(i, point))
    throw PointOutOfRange("point " + std::to_string(point) +
                          " not in orbit of level " + std::to_string(i));
  if (lvl.explicit_transversals) return *lvl.trans[point - 1];
  // Walk the Schreier vector back to the base, then compose forward.
  std::vector<int> labels;
  unsigned p = point;
  while (lvl.sv_parent[p - 1] != p) {
    labels.push_back(lvl.sv_label[p - 1]);
    p = lvl.sv_parent[p - 1];
  }
  Perm u(degree_);
  for (auto it = labels.rbegin(); it != labels.rend(); ++it)
    u = compose(u, lvl.gens[static_cast<std::size_t>(*it)]);
  return u;
}

Perm StabilizerChain::transversal_inverse(std::size_t i, unsigned point) const {
  const Level& lvl = levels_[i];
  if (!in_orbit(i, point))
    throw PointOutOfRange("point " + std::to_string(point) +
                          " not in orbit of level " + std::to_string(i));
  if (lvl.explicit_transversals) return *lvl.trans_inv[point - 1];
  return inverse(transversal(i, point));
}

std::vector<Perm> StabilizerChain::generators_fixing_prefix(
    std::size_t k) const {
  if (k >= levels_.size()) return {};
  return levels_[k].gens;
}

std::pair<Perm, std::size_t> StabilizerChain::sift(const Perm& p) const {
  if (p.degree() != degree_)
    throw DegreeMismatch("sift: element degree " + std::to_string(p.degree()) +
                         " in group of degree " + std::to_string(degree_));
  return sift_from(p, 0);
}

std::pair<Perm, std::size_t> StabilizerChain::sift_from(
    Perm p, std::size_t start) const {
  for (std::size_t i = start; i < levels_.size(); ++i) {
    unsigned x = p[levels_[i].base];
    if (!in_orbit(i, x)) return {std::move(p), i};
    p = compose(p, transversal_inverse(i, x));
  }
  return {std::move(p), levels_.size()};
}

bool StabilizerChain::contains(const Perm& p) const {
  auto [residue, level] = sift(p);
  return level == levels_.size() && residue.is_identity();
}

bool StabilizerChain::add_generator(const Perm& g) {
  if (g.degree() != degree_)
    throw DegreeMismatch("add_generator: degree " +
                         std::to_string(g.degree()));
  if (g.is_identity() || contains(g)) return false;
  seed_generator(g);
  complete();
  recompute_order();
  return true;
}

void StabilizerChain::append_level(unsigned base) {
  Level lvl;
  lvl.base = base;
  lvl.sv_parent.assign(degree_, 0);
  lvl.sv_label.assign(degree_, -1);
  levels_.push_back(std::move(lvl));
  in_base_[base] = true;
  dirty_.push_back(true);
  rebuild_orbit(levels_.size() - 1);
  dirty_.back() = false;
}

unsigned StabilizerChain::pick_base_point(const Perm& g) const {
  for (unsigned b : base_hint_)
    if (!in_base_[b] && g[b] != b) return b;
  for (unsigned x = 1; x <= degree_; ++x)
    if (!in_base_[x] && g[x] != x) return x;
  throw InternalCheckFailed("no base point available for a non-identity element");
}

void StabilizerChain::seed_generator(const Perm& g) {
  // g belongs to every level whose base prefix it fixes.
  std::size_t j = 0;
  while (j < levels_.size() && g[levels_[j].base] == levels_[j].base) ++j;
  if (j == levels_.size()) append_level(pick_base_point(g));
  for (std::size_t lev = 0; lev <= j && lev < levels_.size(); ++lev) {
    levels_[lev].gens.push_back(g);
    dirty_[lev] = true;
  }
}

void StabilizerChain::rebuild_orbit(std::size_t i) {
  Level& lvl = levels_[i];
  std::fill(lvl.sv_parent.begin(), lvl.sv_parent.end(), 0u);
  std::fill(lvl.sv_label.begin(), lvl.sv_label.end(), -1);
  lvl.orbit_bfs.clear();
  lvl.orbit_bfs.push_back(lvl.base);
  lvl.sv_parent[lvl.base - 1] = lvl.base;

  for (std::size_t head = 0; head < lvl.orbit_bfs.size(); ++head) {
    unsigned p = lvl.orbit_bfs[head];
    for (std::size_t s = 0; s < lvl.gens.size(); ++s) {
      unsigned q = lvl.gens[s][p];
      if (lvl.sv_parent[q - 1] == 0) {
        lvl.sv_parent[q - 1] = p;
        lvl.sv_label[q - 1] = static_cast<int>(s);
        lvl.orbit_bfs.push_back(q);
      }
    }
  }

  lvl.orbit_sorted = lvl.orbit_bfs;
  std::sort(lvl.orbit_sorted.begin(), lvl.orbit_sorted.end());

  lvl.explicit_transversals =
      lvl.orbit_bfs.size() * degree_ <= kExplicitTransversalBudget;
  lvl.trans.assign(lvl.explicit_transversals ? degree_ : 0, std::nullopt);
  lvl.trans_inv.assign(lvl.explicit_transversals ? degree_ : 0, std::nullopt);
  if (lvl.explicit_transversals) {
    lvl.trans[lvl.base - 1] = Perm(degree_);
    lvl.trans_inv[lvl.base - 1] = Perm(degree_);
    for (std::size_t head = 1; head < lvl.orbit_bfs.size(); ++head) {
      unsigned q = lvl.orbit_bfs[head];
      unsigned p = lvl.sv_parent[q - 1];
      const Perm& s = lvl.gens[static_cast<std::size_t>(lvl.sv_label[q - 1])];
      lvl.trans[q - 1] = compose(*lvl.trans[p - 1], s);
      lvl.trans_inv[q - 1] = inverse(*lvl.trans[q - 1]);
    }
  }
}

std::optional<std::size_t> StabilizerChain::process_level(std::size_t i) {
  Level& lvl = levels_[i];
  for (unsigned p : lvl.orbit_bfs) {
    Perm u_p = transversal(i, p);
    for (const Perm& s : lvl.gens) {
      Perm w = compose(u_p, s);
      unsigned q = w[lvl.base];
      Perm schreier = compose(w, transversal_inverse(i, q));
      if (schreier.is_identity()) continue;
      auto [h, j] = sift_from(std::move(schreier), i + 1);
      if (h.is_identity()) continue;
      if (j == levels_.size()) append_level(pick_base_point(h));
      for (std::size_t lev = i + 1; lev <= j; ++lev) {
        levels_[lev].gens.push_back(h);
        dirty_[lev] = true;
      }
      return j;
    }
  }
  return std::nullopt;
}

void StabilizerChain::complete() {
  if (levels_.empty()) return;
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    std::size_t lev = static_cast<std::size_t>(i);
    if (dirty_[lev]) {
      rebuild_orbit(lev);
      dirty_[lev] = false;
    }
    auto added_at = process_level(lev);
    if (added_at) {
      i = static_cast<std::ptrdiff_t>(*added_at);
    } else {
      --i;
    }
  }
}

void StabilizerChain::recompute_order() {
  order_ = 1;
  for (const Level& lvl : levels_) order_ *= lvl.orbit_bfs.size();
}

bool StabilizerChain::for_each_element_rec(
    std::size_t level, const Perm& prefix,
    const std::function<bool(const Perm&)>& visit) const {
  if (level == levels_.size()) return visit(prefix);
  for (unsigned d : levels_[level].orbit_sorted) {
    Perm next = compose(transversal(level, d), prefix);
    if (!for_each_element_rec(level + 1, next, visit)) return false;
  }
  return true;
}

bool StabilizerChain::for_each_element(
    const std::function<bool(const Perm&)>& visit) const {
  // Element for transversal tuple (d_0, ..., d_{l-1}) is
  // u_{l-1,d_{l-1}} * ... * u_{0,d_0}; the recursion accumulates the product
  // from the shallow end, so each level composes on the left.
  return for_each_element_rec(0, Perm(degree_), visit);
}

std::optional<Perm> StabilizerChain::first_nontrivial() const {
  std::optional<Perm> found;
  for_each_element([&](const Perm& p) {
    if (p.is_identity()) return true;
    found = p;
    return false;
  });
  return found;
}

}  // namespace quotshrink
