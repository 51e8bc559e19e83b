#include "quotshrink/mindeg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>

#include "quotshrink/errors.hpp"

namespace quotshrink {

namespace {

struct SubgroupKey {
  std::uint64_t a = 0, b = 0;
  std::size_t count = 0;
  friend bool operator==(const SubgroupKey&, const SubgroupKey&) = default;
  friend bool operator<(const SubgroupKey& x, const SubgroupKey& y) {
    return std::tie(x.count, x.a, x.b) < std::tie(y.count, y.a, y.b);
  }
};

struct SubgroupKeyHash {
  std::size_t operator()(const SubgroupKey& k) const {
    return k.a ^ (k.b * 0x9e3779b97f4a7c15ull) ^ k.count;
  }
};

SubgroupKey key_of_elements(std::vector<std::uint64_t> hashes) {
  std::sort(hashes.begin(), hashes.end());
  SubgroupKey key;
  key.count = hashes.size();
  for (std::uint64_t h : hashes) {
    key.a = (key.a ^ h) * 1099511628211ull;
    key.b = key.b * 0x100000001b3ull + (h ^ 0x2545f4914f6cdd1dull);
  }
  return key;
}

std::vector<Perm> subgroup_elements(const PermGroup& h) {
  std::vector<Perm> els;
  els.reserve(static_cast<std::size_t>(h.order()));
  h.for_each_element([&](const Perm& p) {
    els.push_back(p);
    return true;
  });
  return els;
}

SubgroupKey key_of_subgroup_elements(const std::vector<Perm>& els) {
  std::vector<std::uint64_t> hashes;
  hashes.reserve(els.size());
  for (const Perm& p : els) hashes.push_back(p.hash());
  return key_of_elements(std::move(hashes));
}

// Right coset representatives of H in Q, one per coset, deterministic.
std::vector<Perm> coset_representatives(const PermGroup& q,
                                        const PermGroup& h) {
  GroupHom action = coset_action(q, h);
  std::vector<Perm> reps;
  reps.push_back(Perm(q.degree()));
  // walk the coset graph: rep of the image of coset i under generator s is
  // rep_i * gen_s; BFS from the trivial coset.
  unsigned t = action.codomain_degree();
  std::vector<bool> seen(t + 1, false);
  seen[1] = true;
  std::vector<std::pair<unsigned, Perm>> bfs{{1u, Perm(q.degree())}};
  reps.clear();
  reps.resize(t, Perm(q.degree()));
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    auto [pt, rep] = bfs[head];
    reps[pt - 1] = rep;
    for (std::size_t s = 0; s < q.generators().size(); ++s) {
      unsigned next = action.gen_images()[s][pt];
      if (!seen[next]) {
        seen[next] = true;
        bfs.emplace_back(next, compose(rep, q.generators()[s]));
      }
    }
  }
  return reps;
}

}  // namespace

std::vector<PermGroup> enumerate_subgroups(const PermGroup& q,
                                           std::size_t order_cap) {
  if (q.order() > order_cap)
    throw OrderCapExceeded("subgroup enumeration for a group of order " +
                           q.order().str() + " (cap " +
                           std::to_string(order_cap) + ")");

  std::unordered_set<SubgroupKey, SubgroupKeyHash> known;
  std::vector<PermGroup> reps;

  // Registers a class representative and marks its whole conjugation orbit
  // as known. Returns true if the class is new.
  auto register_class = [&](const PermGroup& h,
                            std::vector<Perm> elements) -> bool {
    SubgroupKey key = key_of_subgroup_elements(elements);
    if (known.count(key)) return false;
    reps.push_back(h);
    known.insert(key);
    std::vector<std::vector<Perm>> orbit{std::move(elements)};
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      // copy: conjugation appends to orbit and may reallocate
      std::vector<Perm> current = orbit[head];
      for (const Perm& g : q.generators()) {
        std::vector<Perm> conj;
        conj.reserve(current.size());
        for (const Perm& x : current) conj.push_back(conjugate(x, g));
        SubgroupKey ck = key_of_subgroup_elements(conj);
        if (!known.count(ck)) {
          known.insert(ck);
          orbit.push_back(std::move(conj));
        }
      }
    }
    return true;
  };

  // the trivial subgroup
  PermGroup trivial = PermGroup::trivial(q.degree());
  register_class(trivial, {Perm(q.degree())});

  // cyclic subgroups from all elements
  std::vector<Perm> all_elements = subgroup_elements(q);
  for (const Perm& x : all_elements) {
    if (x.is_identity()) continue;
    std::vector<Perm> cyc{Perm(q.degree())};
    Perm p = x;
    while (!p.is_identity()) {
      cyc.push_back(p);
      p = compose(p, x);
    }
    SubgroupKey key = key_of_subgroup_elements(cyc);
    if (known.count(key)) continue;
    register_class(PermGroup(q.degree(), {x}), std::move(cyc));
  }

  // extend representatives by coset representatives
  for (std::size_t head = 1; head < reps.size(); ++head) {
    PermGroup h = reps[head];
    if (h.order() == q.order()) continue;
    for (const Perm& x : coset_representatives(q, h)) {
      if (h.contains(x)) continue;
      std::vector<Perm> gens = h.generators();
      gens.push_back(x);
      PermGroup ext(q.degree(), std::move(gens));
      if (ext.order() > order_cap) continue;  // cannot happen below the cap
      register_class(ext, subgroup_elements(ext));
    }
  }

  std::stable_sort(reps.begin(), reps.end(),
                   [](const PermGroup& a, const PermGroup& b) {
                     return a.order() < b.order();
                   });
  return reps;
}

MinDegResult min_faithful_rep(const PermGroup& q, std::size_t order_cap) {
  if (q.is_trivial()) {
    GroupHom witness = coset_action(q, q);
    return MinDegResult{1, witness, {q}};
  }

  std::vector<PermGroup> classes = enumerate_subgroups(q, order_cap);

  // Interned normal subgroups: distinct cores and their pairwise
  // intersections, identified by element keys.
  std::vector<PermGroup> normals;
  std::map<SubgroupKey, std::size_t> normal_ids;
  auto intern = [&](const PermGroup& n) -> std::size_t {
    SubgroupKey key = key_of_subgroup_elements(subgroup_elements(n));
    auto it = normal_ids.find(key);
    if (it != normal_ids.end()) return it->second;
    normals.push_back(n);
    normal_ids.emplace(key, normals.size() - 1);
    return normals.size() - 1;
  };
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> meet_memo;
  auto meet = [&](std::size_t a, std::size_t b) -> std::size_t {
    if (a > b) std::swap(a, b);
    if (a == b) return a;
    auto it = meet_memo.find({a, b});
    if (it != meet_memo.end()) return it->second;
    std::size_t id = intern(intersection(normals[a], normals[b]));
    meet_memo.emplace(std::make_pair(a, b), id);
    return id;
  };

  struct Candidate {
    std::size_t class_index;
    std::uint64_t index;  // |Q : H|
    std::size_t core_id;
  };
  std::vector<Candidate> candidates;
  std::size_t full_id = intern(q);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::uint64_t index =
        static_cast<std::uint64_t>(q.order() / classes[i].order());
    if (index == 1) continue;  // the full group never reduces the core
    candidates.push_back(
        {i, index, intern(core_of_subgroup(q, classes[i]))});
  }
  // descending subgroup order == ascending index; deterministic tie-break by
  // enumeration position (stable)
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.index < b.index;
                   });

  std::uint64_t best = static_cast<std::uint64_t>(q.order());
  std::vector<std::size_t> best_family;  // candidate positions
  {
    // the regular representation is always feasible
    for (std::size_t pos = 0; pos < candidates.size(); ++pos)
      if (classes[candidates[pos].class_index].is_trivial()) {
        best_family = {pos};
        break;
      }
  }

  std::vector<std::size_t> chosen;
  auto dfs = [&](auto&& self, std::size_t pos, std::size_t core_id,
                 std::uint64_t sum) -> void {
    if (normals[core_id].is_trivial()) {
      if (sum < best) {
        best = sum;
        best_family = chosen;
      }
      return;
    }
    for (std::size_t i = pos; i < candidates.size(); ++i) {
      if (sum + candidates[i].index >= best) break;
      std::size_t next = meet(core_id, candidates[i].core_id);
      if (normals[next].order() == normals[core_id].order()) continue;
      chosen.push_back(i);
      self(self, i + 1, next, sum + candidates[i].index);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, full_id, 0);

  std::vector<GroupHom> actions;
  std::vector<PermGroup> family;
  for (std::size_t pos : best_family) {
    family.push_back(classes[candidates[pos].class_index]);
    actions.push_back(coset_action(q, family.back()));
  }
  GroupHom witness = actions.size() == 1 ? actions.front()
                                         : direct_sum_homs(actions);
  if (witness.kernel_order() != 1)
    throw InternalCheckFailed("minimal-degree witness is not faithful");
  if (witness.codomain_degree() != best)
    throw InternalCheckFailed("minimal-degree bookkeeping failed");
  return MinDegResult{static_cast<unsigned>(best), std::move(witness),
                      std::move(family)};
}

bool verify_faithful(const GroupHom& hom) { return hom.kernel_order() == 1; }

}  // namespace quotshrink
