#include "quotshrink/normal_structure.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

#include "quotshrink/errors.hpp"

namespace quotshrink {

namespace {

// Representatives of the orbits of conjugation by conj_gens on the elements
// of m (which must be closed under that conjugation). Deterministic: the
// representative of each orbit is its first element in chain enumeration
// order.
std::vector<Perm> conjugacy_class_reps(const PermGroup& m,
                                       const std::vector<Perm>& conj_gens,
                                       std::size_t cap) {
  std::vector<Perm> els = m.elements(cap);
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index;
  for (std::size_t i = 0; i < els.size(); ++i)
    index[els[i].hash()].push_back(i);
  auto locate = [&](const Perm& p) -> std::size_t {
    auto it = index.find(p.hash());
    if (it != index.end())
      for (std::size_t i : it->second)
        if (els[i] == p) return i;
    throw InternalCheckFailed("conjugate left the subgroup during class scan");
  };
  std::vector<bool> seen(els.size(), false);
  std::vector<Perm> reps;
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (seen[i]) continue;
    reps.push_back(els[i]);
    std::vector<std::size_t> bfs{i};
    seen[i] = true;
    for (std::size_t head = 0; head < bfs.size(); ++head)
      for (const Perm& g : conj_gens) {
        std::size_t j = locate(conjugate(els[bfs[head]], g));
        if (!seen[j]) {
          seen[j] = true;
          bfs.push_back(j);
        }
      }
  }
  return reps;
}

}  // namespace

PermGroup minimal_normal_subgroup_from(const PermGroup& ambient,
                                       const Perm& seed, std::size_t cap) {
  PermGroup m = normal_closure(ambient, {seed});
  auto try_descend = [&](const Perm& y, PermGroup& out) {
    if (y.is_identity()) return false;
    PermGroup c = normal_closure(ambient, {y});
    if (c.order() < m.order()) {
      out = std::move(c);
      return true;
    }
    return false;
  };

  while (true) {
    PermGroup smaller = m;
    bool improved = false;

    for (std::size_t i = 0; i < m.generators().size() && !improved; ++i)
      for (std::size_t j = 0; j < m.generators().size() && !improved; ++j)
        improved =
            try_descend(commutator(m.generators()[i], m.generators()[j]),
                        smaller);
    for (std::size_t i = 0; i < m.generators().size() && !improved; ++i)
      for (const Perm& g : ambient.generators()) {
        const Perm& a = m.generators()[i];
        if (try_descend(commutator(a, conjugate(a, g)), smaller)) {
          improved = true;
          break;
        }
      }
    if (!improved) {
      // Elements commuting with a generator include the single-factor
      // components of direct decompositions; their closures descend.
      PermGroup z =
          centralizer(m, PermGroup(m.degree(), {m.generators()[0]}));
      for (const Perm& y : z.generators())
        if (try_descend(y, smaller)) {
          improved = true;
          break;
        }
    }
    if (improved) {
      m = std::move(smaller);
      continue;
    }

    if (m.order() > cap)
      throw OrderCapExceeded(
          "minimal normal subgroup certification needs order <= " +
          std::to_string(cap) + ", descent stalled at " + m.order().str());
    for (const Perm& rep : conjugacy_class_reps(m, ambient.generators(), cap))
      if (try_descend(rep, smaller)) {
        improved = true;
        break;
      }
    if (!improved) return m;  // every class closure is all of m
    m = std::move(smaller);
  }
}

namespace {

GroupHom make_factor_action(const PermGroup& g,
                            const std::vector<PermGroup>& factors) {
  unsigned k = static_cast<unsigned>(factors.size());
  std::vector<Perm> images;
  images.reserve(g.generators().size());
  for (const Perm& gen : g.generators()) {
    std::vector<unsigned> im(k, 0);
    for (unsigned i = 0; i < k; ++i) {
      Perm probe = conjugate(factors[i].generators().front(), gen);
      unsigned target = 0;
      for (unsigned j = 0; j < k; ++j)
        if (factors[j].contains(probe)) {
          target = j + 1;
          break;
        }
      if (target == 0)
        throw InternalCheckFailed(
            "conjugation does not permute the simple factors");
      for (const Perm& u : factors[i].generators())
        if (!factors[target - 1].contains(conjugate(u, gen)))
          throw InternalCheckFailed(
              "conjugation maps a factor across two factors");
      im[i] = target;
    }
    images.emplace_back(std::move(im));
  }
  return GroupHom(g, k, std::move(images));
}

}  // namespace

FactorProjector::FactorProjector(PermGroup factor, std::size_t cap)
    : factor_(std::move(factor)) {
  elements_ = factor_.elements(cap);
  fingerprints_.reserve(elements_.size());
  for (const Perm& s : elements_) {
    std::vector<unsigned> fp;
    for (const Perm& u : factor_.generators()) {
      Perm c = conjugate(u, s);
      fp.insert(fp.end(), c.images().begin(), c.images().end());
    }
    fingerprints_.push_back(std::move(fp));
  }
  order_.resize(elements_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
  std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
    return fingerprints_[a] < fingerprints_[b];
  });
}

Perm FactorProjector::project(const Perm& x) const {
  std::vector<unsigned> fp;
  for (const Perm& u : factor_.generators()) {
    Perm c = conjugate(u, x);
    fp.insert(fp.end(), c.images().begin(), c.images().end());
  }
  auto it = std::lower_bound(
      order_.begin(), order_.end(), fp,
      [&](std::size_t i, const std::vector<unsigned>& key) {
        return fingerprints_[i] < key;
      });
  if (it == order_.end() || fingerprints_[*it] != fp)
    throw NotInGroup(
        "element does not act on the factor as conjugation by a factor "
        "element");
  return elements_[*it];
}

std::vector<PermGroup> simple_factors(const PermGroup& n, std::size_t cap) {
  if (n.is_trivial())
    throw NotSemisimple("the trivial group has no simple factors");

  std::vector<PermGroup> factors;
  Order found_order = 1;
  PermGroup seeds = n;
  while (true) {
    const Perm* seed = nullptr;
    for (const Perm& g : seeds.generators())
      if (!g.is_identity() && (seed == nullptr || g < *seed)) seed = &g;
    if (seed == nullptr)
      throw NotSemisimple("factors found so far do not span the group");
    PermGroup m = minimal_normal_subgroup_from(n, *seed, cap);
    if (m.is_abelian())
      throw NotSemisimple("abelian minimal normal subgroup of order " +
                          m.order().str());
    found_order *= m.order();
    factors.push_back(std::move(m));
    if (found_order == n.order()) break;
    if (found_order > n.order())
      throw NotSemisimple("factor orders exceed the group order");
    std::vector<Perm> all_gens;
    for (const PermGroup& f : factors)
      all_gens.insert(all_gens.end(), f.generators().begin(),
                      f.generators().end());
    seeds = centralizer(n, PermGroup(n.degree(), all_gens));
  }

  std::vector<Perm> all_gens;
  for (const PermGroup& f : factors)
    all_gens.insert(all_gens.end(), f.generators().begin(),
                    f.generators().end());
  if (PermGroup(n.degree(), all_gens).order() != n.order())
    throw NotSemisimple("factors do not generate the group");
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      for (const Perm& a : factors[i].generators())
        for (const Perm& b : factors[j].generators())
          if (!commutes(a, b))
            throw NotSemisimple("factors do not commute elementwise");

  std::stable_sort(factors.begin(), factors.end(),
                   [](const PermGroup& a, const PermGroup& b) {
                     return a.moved_points().front() <
                            b.moved_points().front();
                   });
  return factors;
}

SocleDecomposition socle_decomposition(const PermGroup& g, const PermGroup& n,
                                       std::size_t cap) {
  if (!is_normal(n, g))
    throw NotNormal("socle decomposition needs N normal in G");
  std::vector<PermGroup> factors = simple_factors(n, cap);
  GroupHom action = make_factor_action(g, factors);
  auto projectors = std::make_shared<std::vector<FactorProjector>>();
  projectors->reserve(factors.size());
  for (const PermGroup& f : factors) projectors->emplace_back(f, cap);
  return SocleDecomposition{n, std::move(factors), std::move(action),
                            std::move(projectors)};
}

bool is_minimal_normal(const PermGroup& g, const PermGroup& n,
                       std::size_t cap) {
  if (!is_normal(n, g))
    throw NotNormal("minimal normality needs N normal in G");
  if (n.is_trivial()) return false;
  try {
    std::vector<PermGroup> factors = simple_factors(n, cap);
    GroupHom action = make_factor_action(g, factors);
    if (!action.image().is_transitive()) return false;
    return normal_closure(g, {factors.front().generators().front()})
               .order() == n.order();
  } catch (const NotSemisimple&) {
    // Exact fallback: N is minimal normal iff every nontrivial element has
    // full normal closure; the closure is constant on G-classes.
    for (const Perm& rep : conjugacy_class_reps(n, g.generators(), cap)) {
      if (rep.is_identity()) continue;
      if (normal_closure(g, {rep}).order() != n.order()) return false;
    }
    return true;
  }
}

Perm projection_onto_factor(const SocleDecomposition& dec, const Perm& x,
                            std::size_t factor_index) {
  if (factor_index >= dec.factors.size())
    throw PointOutOfRange("factor index " + std::to_string(factor_index));
  if (!dec.n.contains(x))
    throw NotInGroup("projection of an element outside N");
  return (*dec.projectors)[factor_index].project(x);
}

bool is_subdirect(const SocleDecomposition& dec, const PermGroup& h) {
  if (!is_subgroup(h, dec.n))
    throw NotInGroup("subdirectness is defined for subgroups of N");
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    std::vector<Perm> projected;
    for (const Perm& x : h.generators())
      projected.push_back((*dec.projectors)[i].project(x));
    if (PermGroup(dec.n.degree(), std::move(projected)).order() !=
        dec.factors[i].order())
      return false;
  }
  return true;
}

InducedT induced_T(const PermGroup& g, const SocleDecomposition& dec,
                   std::size_t cap) {
  const PermGroup& s1 = dec.factors.front();
  PermGroup ns1 = dec.factors.size() == 1
                      ? g
                      : dec.factor_action.preimage_of_point_stabilizer(1);

  std::vector<Perm> els;
  s1.for_each_element([&](const Perm& p) {
    if (!p.is_identity()) els.push_back(p);
    return true;
  });
  if (els.size() + 1 > cap)
    throw OrderCapExceeded("factor of order " + s1.order().str() +
                           " exceeds the enumeration cap");
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index;
  for (std::size_t i = 0; i < els.size(); ++i)
    index[els[i].hash()].push_back(i);
  auto locate = [&](const Perm& p) -> std::size_t {
    for (std::size_t i : index.at(p.hash()))
      if (els[i] == p) return i;
    throw InternalCheckFailed("conjugation left the factor");
  };

  unsigned full_degree = static_cast<unsigned>(els.size());
  std::vector<Perm> full_images;
  for (const Perm& gen : ns1.generators()) {
    std::vector<unsigned> im(full_degree);
    for (std::size_t i = 0; i < els.size(); ++i)
      im[i] = static_cast<unsigned>(locate(conjugate(els[i], gen))) + 1;
    full_images.emplace_back(std::move(im));
  }
  PermGroup full_image(full_degree, full_images);
  const Order& target = full_image.order();

  // Restrict to a faithful union of orbits, preferring small orbits.
  auto orbs = full_image.orbits();
  std::stable_sort(orbs.begin(), orbs.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a.front() < b.front();
                   });
  std::vector<unsigned> support;
  std::vector<Perm> restricted;
  for (const auto& orb : orbs) {
    support.insert(support.end(), orb.begin(), orb.end());
    std::sort(support.begin(), support.end());
    std::vector<unsigned> pos(full_degree + 1, 0);
    for (std::size_t i = 0; i < support.size(); ++i)
      pos[support[i]] = static_cast<unsigned>(i + 1);
    restricted.clear();
    for (const Perm& im : full_images) {
      std::vector<unsigned> rim(support.size());
      for (std::size_t i = 0; i < support.size(); ++i)
        rim[i] = pos[im[support[i]]];
      restricted.emplace_back(std::move(rim));
    }
    if (PermGroup(static_cast<unsigned>(support.size()), restricted).order() ==
        target)
      break;
  }

  GroupHom conj_hom(ns1, static_cast<unsigned>(support.size()),
                    std::move(restricted));
  PermGroup socle_image = image_of_subgroup(conj_hom, s1);
  return InducedT{conj_hom.image(), std::move(socle_image), conj_hom,
                  std::move(ns1)};
}

std::vector<std::size_t> check_ntproj(const PermGroup& ambient,
                                      const PermGroup& k, const PermGroup& n,
                                      const PermGroup& l, std::size_t cap) {
  if (!is_normal(k, ambient))
    throw PreconditionFailed("K is not normal in the ambient group");
  if (!is_normal(n, ambient))
    throw PreconditionFailed("N is not normal in the ambient group");
  if (!is_normal(l, ambient))
    throw PreconditionFailed("L is not normal in the ambient group");
  if (!intersection(k, n).is_trivial())
    throw PreconditionFailed("K meets N nontrivially");
  std::vector<Perm> kn_gens = k.generators();
  kn_gens.insert(kn_gens.end(), n.generators().begin(), n.generators().end());
  PermGroup kn(ambient.degree(), std::move(kn_gens));
  for (const Perm& x : l.generators())
    if (!kn.contains(x)) throw PreconditionFailed("L is not contained in KN");

  std::vector<PermGroup> factors = simple_factors(n, cap);
  std::vector<FactorProjector> projectors;
  projectors.reserve(factors.size());
  for (const PermGroup& f : factors) projectors.emplace_back(f, cap);

  std::vector<std::size_t> hit;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    bool nontrivial = false;
    for (const Perm& x : l.generators())
      if (!projectors[i].project(x).is_identity()) {
        nontrivial = true;
        break;
      }
    if (nontrivial) hit.push_back(i);
  }
  for (std::size_t i : hit)
    for (const Perm& u : factors[i].generators())
      if (!l.contains(u))
        throw LemmaViolated(
            "a nontrivially-projected factor is not contained in L");
  return hit;
}

bool check_normsd(const SocleDecomposition& dec, const PermGroup& h) {
  if (!is_subdirect(dec, h))
    throw PreconditionFailed("H is not a subdirect subgroup of N");
  if (!(normalizer(dec.n, h) == h))
    throw LemmaViolated("the normalizer of a subdirect subgroup exceeds it");
  return true;
}

}  // namespace quotshrink
