// Backtrack searches over the stabilizer chain: centralizers and
// normalizers. Both walk the tree of base-image choices, carrying the
// partial product and its inverse, and prune with condition-specific
// constraints; every element found is added to the result group, and the
// first-level choices are restricted to minima of their orbits under the
// group found so far.

#include <algorithm>
#include <vector>

#include "quotshrink/errors.hpp"
#include "quotshrink/perm.hpp"
#include "quotshrink/perm_group.hpp"

namespace quotshrink {

namespace {

std::vector<unsigned> orbit_under(const std::vector<Perm>& gens, unsigned x) {
  std::vector<unsigned> bfs{x};
  std::vector<bool> seen;
  if (!gens.empty()) seen.assign(gens[0].degree() + 1, false);
  if (gens.empty()) return bfs;
  seen[x] = true;
  for (std::size_t head = 0; head < bfs.size(); ++head)
    for (const Perm& g : gens) {
      unsigned y = g[bfs[head]];
      if (!seen[y]) {
        seen[y] = true;
        bfs.push_back(y);
      }
    }
  return bfs;
}

unsigned min_in_orbit_under(const std::vector<Perm>& gens, unsigned x) {
  auto orb = orbit_under(gens, x);
  return *std::min_element(orb.begin(), orb.end());
}

class CentralizerSearch {
public:
  CentralizerSearch(const PermGroup& g, std::vector<Perm> targets)
      : g_(g), targets_(std::move(targets)), result_chain_(g.degree(), {}),
        pimg_(g.degree() + 1, 0), pinv_(g.degree() + 1, 0) {}

  PermGroup run() {
    dfs(0, Perm(g_.degree()), Perm(g_.degree()));
    return PermGroup(g_.degree(), result_gens_);
  }

private:
  // Sets pimg_[x] = y plus everything forced by commutation with the
  // targets; records assignments on the trail. Returns false on conflict.
  bool assign(unsigned x, unsigned y, std::vector<unsigned>& trail) {
    std::vector<std::pair<unsigned, unsigned>> queue{{x, y}};
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      if (pimg_[a] != 0) {
        if (pimg_[a] != b) return false;
        continue;
      }
      if (pinv_[b] != 0) return false;
      pimg_[a] = b;
      pinv_[b] = a;
      trail.push_back(a);
      for (const Perm& s : targets_) queue.emplace_back(s[a], s[b]);
    }
    return true;
  }

  void unwind(const std::vector<unsigned>& trail) {
    for (unsigned a : trail) {
      pinv_[pimg_[a]] = 0;
      pimg_[a] = 0;
    }
  }

  void dfs(std::size_t level, const Perm& t, const Perm& tinv) {
    const StabilizerChain& chain = g_.chain();
    if (level == chain.length()) {
      if (t.is_identity()) return;
      for (const Perm& s : targets_)
        if (!commutes(t, s)) return;
      if (result_chain_.add_generator(t)) result_gens_.push_back(t);
      return;
    }
    unsigned b = chain.base_point(level);
    if (pimg_[b] != 0) {
      // Image of this base point is already forced.
      unsigned d = tinv[pimg_[b]];
      if (!chain.in_orbit(level, d)) return;
      descend(level, d, t, tinv);
      return;
    }
    for (unsigned d : chain.orbit(level)) {
      unsigned e = t[d];
      if (level == 0 && e != min_in_orbit_under(result_gens_, e)) continue;
      std::vector<unsigned> trail;
      if (assign(b, e, trail)) descend(level, d, t, tinv);
      unwind(trail);
    }
  }

  void descend(std::size_t level, unsigned d, const Perm& t,
               const Perm& tinv) {
    const StabilizerChain& chain = g_.chain();
    Perm next = compose(chain.transversal(level, d), t);
    Perm next_inv = compose(tinv, chain.transversal_inverse(level, d));
    dfs(level + 1, next, next_inv);
  }

  const PermGroup& g_;
  std::vector<Perm> targets_;
  StabilizerChain result_chain_;
  std::vector<Perm> result_gens_;
  std::vector<unsigned> pimg_, pinv_;
};

class NormalizerSearch {
public:
  NormalizerSearch(const PermGroup& g, const PermGroup& h)
      : g_(g), h_(h), result_chain_(g.degree(), {}),
        orbit_id_(g.degree() + 1, 0), orbit_size_(g.degree() + 1, 0) {
    auto orbits = h.orbits();
    for (std::size_t i = 0; i < orbits.size(); ++i)
      for (unsigned x : orbits[i]) {
        orbit_id_[x] = static_cast<unsigned>(i + 1);
        orbit_size_[x] = static_cast<unsigned>(orbits[i].size());
      }
    omap_.assign(orbits.size() + 1, 0);
    oinv_.assign(orbits.size() + 1, 0);
    // The result contains every generator of H that lies in G.
    for (const Perm& x : h.generators())
      if (!x.is_identity() && g.contains(x) && result_chain_.add_generator(x))
        result_gens_.push_back(x);
  }

  PermGroup run() {
    dfs(0, Perm(g_.degree()));
    return PermGroup(g_.degree(), result_gens_);
  }

private:
  bool assign(unsigned x, unsigned y, std::vector<unsigned>& trail) {
    if (orbit_size_[x] != orbit_size_[y]) return false;
    unsigned o1 = orbit_id_[x], o2 = orbit_id_[y];
    if (omap_[o1] != 0) return omap_[o1] == o2;
    if (oinv_[o2] != 0) return false;
    omap_[o1] = o2;
    oinv_[o2] = o1;
    trail.push_back(o1);
    return true;
  }

  void unwind(const std::vector<unsigned>& trail) {
    for (unsigned o1 : trail) {
      oinv_[omap_[o1]] = 0;
      omap_[o1] = 0;
    }
  }

  void dfs(std::size_t level, const Perm& t) {
    const StabilizerChain& chain = g_.chain();
    if (level == chain.length()) {
      if (t.is_identity()) return;
      for (const Perm& x : h_.generators())
        if (!h_.contains(conjugate(x, t))) return;
      if (result_chain_.add_generator(t)) result_gens_.push_back(t);
      return;
    }
    unsigned b = chain.base_point(level);
    for (unsigned d : chain.orbit(level)) {
      unsigned e = t[d];
      if (level == 0 && e != min_in_orbit_under(result_gens_, e)) continue;
      std::vector<unsigned> trail;
      if (assign(b, e, trail))
        dfs(level + 1, compose(chain.transversal(level, d), t));
      unwind(trail);
    }
  }

  const PermGroup& g_;
  const PermGroup& h_;
  StabilizerChain result_chain_;
  std::vector<Perm> result_gens_;
  std::vector<unsigned> orbit_id_, orbit_size_;
  std::vector<unsigned> omap_, oinv_;
};

}  // namespace

PermGroup centralizer(const PermGroup& g, const PermGroup& n) {
  if (g.degree() != n.degree())
    throw DegreeMismatch("centralizer: degrees " + std::to_string(g.degree()) +
                         " and " + std::to_string(n.degree()));
  std::vector<Perm> targets;
  for (const Perm& s : n.generators())
    if (!s.is_identity()) targets.push_back(s);
  if (targets.empty()) return g;
  return CentralizerSearch(g, std::move(targets)).run();
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree())
    throw DegreeMismatch("normalizer: degrees " + std::to_string(g.degree()) +
                         " and " + std::to_string(h.degree()));
  if (h.is_trivial()) return g;
  return NormalizerSearch(g, h).run();
}

}  // namespace quotshrink
