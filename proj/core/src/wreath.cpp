#include "quotshrink/wreath.hpp"

#include <algorithm>
#include <string>

#include "quotshrink/errors.hpp"

namespace quotshrink {

namespace {

constexpr unsigned kMaxWreathDegree = 1u << 20;

unsigned checked_power_degree(unsigned base, unsigned exponent) {
  unsigned long long d = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    d *= base;
    if (d > kMaxWreathDegree)
      throw OrderCapExceeded("product action degree " + std::to_string(base) +
                             "^" + std::to_string(exponent) + " exceeds " +
                             std::to_string(kMaxWreathDegree));
  }
  return static_cast<unsigned>(d);
}

}  // namespace

unsigned WreathLabeling::degree() const {
  if (product_action) {
    unsigned d = 1;
    for (unsigned i = 0; i < outer_degree; ++i) d *= inner_degree;
    return d;
  }
  return inner_degree * outer_degree;
}

unsigned WreathLabeling::pair_point(unsigned delta, unsigned gamma) const {
  return (gamma - 1) * inner_degree + delta;
}

std::pair<unsigned, unsigned> WreathLabeling::pair_decode(
    unsigned point) const {
  unsigned delta = (point - 1) % inner_degree + 1;
  unsigned gamma = (point - 1) / inner_degree + 1;
  return {delta, gamma};
}

unsigned WreathLabeling::function_point(
    const std::vector<unsigned>& phi) const {
  unsigned point = 0;
  for (unsigned i = 0; i < outer_degree; ++i)
    point = point * inner_degree + (phi[i] - 1);
  return point + 1;
}

std::vector<unsigned> WreathLabeling::function_decode(unsigned point) const {
  std::vector<unsigned> phi(outer_degree);
  unsigned rest = point - 1;
  for (unsigned i = outer_degree; i-- > 0;) {
    phi[i] = rest % inner_degree + 1;
    rest /= inner_degree;
  }
  return phi;
}

WreathProduct wreath_imprimitive(const PermGroup& u, const PermGroup& v) {
  WreathLabeling lab{false, u.degree(), v.degree()};
  unsigned degree = lab.degree();
  std::vector<Perm> gens;
  // one copy of the base group per outer point
  for (unsigned gamma = 1; gamma <= v.degree(); ++gamma)
    for (const Perm& p : u.generators()) {
      std::vector<unsigned> im(degree);
      for (unsigned x = 1; x <= degree; ++x) im[x - 1] = x;
      for (unsigned delta = 1; delta <= u.degree(); ++delta)
        im[lab.pair_point(delta, gamma) - 1] = lab.pair_point(p[delta], gamma);
      gens.emplace_back(std::move(im));
    }
  std::vector<Perm> top_images;
  for (const Perm& p : v.generators()) {
    std::vector<unsigned> im(degree);
    for (unsigned gamma = 1; gamma <= v.degree(); ++gamma)
      for (unsigned delta = 1; delta <= u.degree(); ++delta)
        im[lab.pair_point(delta, gamma) - 1] = lab.pair_point(delta, p[gamma]);
    top_images.emplace_back(std::move(im));
    gens.push_back(top_images.back());
  }
  return WreathProduct{PermGroup(degree, std::move(gens)), lab, u, v,
                       std::move(top_images)};
}

Perm product_action_perm(const WreathLabeling& labeling,
                         const std::vector<Perm>& f, const Perm& v) {
  if (!labeling.product_action)
    throw PreconditionFailed("labeling is not a product action labeling");
  if (f.size() != labeling.outer_degree || v.degree() != labeling.outer_degree)
    throw DegreeMismatch("product action element has wrong shape");
  unsigned degree = labeling.degree();
  Perm v_inv = inverse(v);
  std::vector<unsigned> im(degree);
  for (unsigned point = 1; point <= degree; ++point) {
    std::vector<unsigned> phi = labeling.function_decode(point);
    std::vector<unsigned> out(labeling.outer_degree);
    for (unsigned gamma = 1; gamma <= labeling.outer_degree; ++gamma) {
      unsigned src = v_inv[gamma];
      out[gamma - 1] = f[src - 1][phi[src - 1]];
    }
    im[point - 1] = labeling.function_point(out);
  }
  return Perm(std::move(im));
}

WreathProduct wreath_product_action(const PermGroup& u, const PermGroup& v) {
  if (u.degree() < 2)
    throw DegenerateBase("product action needs a base domain of size > 1");
  checked_power_degree(u.degree(), v.degree());
  WreathLabeling lab{true, u.degree(), v.degree()};
  std::vector<Perm> gens;
  std::vector<Perm> identity_f(v.degree(), Perm(u.degree()));
  for (unsigned gamma = 1; gamma <= v.degree(); ++gamma)
    for (const Perm& p : u.generators()) {
      std::vector<Perm> f = identity_f;
      f[gamma - 1] = p;
      gens.push_back(product_action_perm(lab, f, Perm(v.degree())));
    }
  std::vector<Perm> top_images;
  for (const Perm& p : v.generators()) {
    top_images.push_back(product_action_perm(lab, identity_f, p));
    gens.push_back(top_images.back());
  }
  return WreathProduct{PermGroup(lab.degree(), std::move(gens)), lab, u, v,
                       std::move(top_images)};
}

namespace {

Perm restrict_to_points(const Perm& p, const std::vector<unsigned>& points,
                        const std::vector<unsigned>& pos) {
  std::vector<unsigned> im(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    unsigned y = p[points[i]];
    if (pos[y] == 0)
      throw NotInvariant("element does not stabilize the block setwise");
    im[i] = pos[y];
  }
  return Perm(std::move(im));
}

}  // namespace

CameronEmbedding cameron_embedding(const PermGroup& g, const BlockSystem& b) {
  if (!g.is_transitive())
    throw NotTransitive("the blocks embedding needs a transitive group");
  if (b.size() < 2 || b.size() >= g.degree())
    throw NotInvariant("the blocks embedding needs a proper nontrivial system");
  GroupHom ba = block_action(g, b);  // validates invariance

  // Deterministic transversal: breadth-first over blocks, generators in
  // order; block_transversal[i] maps block 0 onto block i.
  unsigned t = static_cast<unsigned>(b.size());
  std::vector<Perm> reps;
  std::vector<int> rep_of(t, -1);
  reps.push_back(Perm(g.degree()));
  rep_of[0] = 0;
  std::vector<unsigned> bfs{0};
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    unsigned i = bfs[head];
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      unsigned j = ba.gen_images()[s][i + 1] - 1;
      if (rep_of[j] < 0) {
        rep_of[j] = static_cast<int>(reps.size());
        reps.push_back(compose(reps[rep_of[i]], g.generators()[s]));
        bfs.push_back(j);
      }
    }
  }
  std::vector<Perm> transversal;
  transversal.reserve(t);
  for (unsigned i = 0; i < t; ++i) transversal.push_back(reps[rep_of[i]]);

  PermGroup g_block = ba.preimage_of_point_stabilizer(1);
  const std::vector<unsigned>& delta = b.blocks[0];
  unsigned d = static_cast<unsigned>(delta.size());
  std::vector<unsigned> pos(g.degree() + 1, 0);
  for (unsigned i = 0; i < d; ++i) pos[delta[i]] = i + 1;

  std::vector<Perm> u_gens;
  for (const Perm& x : g_block.generators())
    u_gens.push_back(restrict_to_points(x, delta, pos));
  PermGroup u(d, std::move(u_gens));
  WreathProduct w = wreath_imprimitive(u, ba.image());

  std::vector<Perm> images;
  images.reserve(g.generators().size());
  for (std::size_t s = 0; s < g.generators().size(); ++s) {
    const Perm& gen = g.generators()[s];
    const Perm& sigma = ba.gen_images()[s];
    std::vector<unsigned> im(w.labeling.degree());
    for (unsigned i = 0; i < t; ++i) {
      unsigned j = sigma[i + 1] - 1;
      Perm block_part = restrict_to_points(
          compose(compose(transversal[i], gen), inverse(transversal[j])),
          delta, pos);
      for (unsigned x = 1; x <= d; ++x)
        im[w.labeling.pair_point(x, i + 1) - 1] =
            w.labeling.pair_point(block_part[x], j + 1);
    }
    images.emplace_back(std::move(im));
  }
  GroupHom hom(g, w.labeling.degree(), std::move(images));
  if (hom.kernel_order() != 1)
    throw InternalCheckFailed("blocks embedding is not injective");
  return CameronEmbedding{std::move(hom), std::move(w),
                          std::move(transversal)};
}

GroupHom subembed(const PermGroup& g, const PermGroup& h,
                  const GroupHom& hom_h) {
  if (!is_subgroup(h, g))
    throw NotASubgroup("subembed needs H <= G");
  if (hom_h.domain().degree() != h.degree() ||
      hom_h.domain().generators() != h.generators())
    throw PreconditionFailed("the action is not an action of H");
  if (!hom_h.is_injective())
    throw NotInjective("subembed needs a faithful action of H");

  std::vector<GroupHom> parts;
  for (const auto& orb : hom_h.image().orbits()) {
    PermGroup stab = hom_h.preimage_of_point_stabilizer(orb.front());
    parts.push_back(coset_action(g, stab));
  }
  GroupHom result = direct_sum_homs(parts);
  Order expected = (g.order() / h.order()) * hom_h.codomain_degree();
  if (Order(result.codomain_degree()) != expected)
    throw InternalCheckFailed("subembed degree bookkeeping failed");
  if (result.kernel_order() != 1)
    throw InternalCheckFailed("subembed lost faithfulness");
  return result;
}

std::vector<unsigned> prodact_v_orbit(const WreathProduct& w, unsigned a,
                                      unsigned b) {
  if (!w.labeling.product_action)
    throw PreconditionFailed("the fixed set construction needs a product action");
  unsigned d = w.labeling.inner_degree, k = w.labeling.outer_degree;
  if (a < 1 || a > d || b < 1 || b > d || a == b)
    throw BadPoints("need two distinct base points");
  std::vector<unsigned> points(k);
  for (unsigned gamma = 1; gamma <= k; ++gamma) {
    std::vector<unsigned> phi(k, b);
    phi[gamma - 1] = a;
    points[gamma - 1] = w.labeling.function_point(phi);
  }
  // The embedded top group permutes these points exactly as it permutes the
  // outer domain: the image of the gamma-th point under v is the v(gamma)-th.
  for (std::size_t s = 0; s < w.outer.generators().size(); ++s) {
    const Perm& v = w.outer.generators()[s];
    const Perm& vw = w.top_gen_images[s];
    for (unsigned gamma = 1; gamma <= k; ++gamma)
      if (vw[points[gamma - 1]] != points[v[gamma] - 1])
        throw InternalCheckFailed(
            "top group does not act naturally on the fixed set");
  }
  return points;
}

}  // namespace quotshrink
