#include "quotshrink/group_hom.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

#include "quotshrink/errors.hpp"

namespace quotshrink {

namespace {

constexpr unsigned kKernelCodomainCap = 2048;
constexpr std::size_t kCoreEnumerationCap = 5000;

// Diagonal generator on the disjoint union of domain and codomain points.
Perm diagonal_perm(const Perm& g, const Perm& h) {
  unsigned n = g.degree(), m = h.degree();
  std::vector<unsigned> images(n + m);
  for (unsigned x = 1; x <= n; ++x) images[x - 1] = g[x];
  for (unsigned y = 1; y <= m; ++y) images[n + y - 1] = n + h[y];
  return Perm(std::move(images));
}

Perm domain_part(const Perm& d, unsigned n) {
  std::vector<unsigned> images(d.images().begin(), d.images().begin() + n);
  return Perm(std::move(images));
}

Perm codomain_part(const Perm& d, unsigned n, unsigned m) {
  std::vector<unsigned> images(m);
  for (unsigned y = 1; y <= m; ++y) images[y - 1] = d[n + y] - n;
  return Perm(std::move(images));
}

}  // namespace

struct GroupHom::Data {
  PermGroup domain;
  unsigned codomain_degree;
  std::vector<Perm> gen_images;
  StabilizerChain eval_chain;  // graph group with base inside domain points
  PermGroup image;

  mutable std::once_flag kernel_once;
  mutable std::unique_ptr<const PermGroup> kernel;

  Data(PermGroup dom, unsigned codeg, std::vector<Perm> images,
       StabilizerChain chain, PermGroup img)
      : domain(std::move(dom)), codomain_degree(codeg),
        gen_images(std::move(images)), eval_chain(std::move(chain)),
        image(std::move(img)) {}
};

const PermGroup& GroupHom::domain() const { return data_->domain; }
unsigned GroupHom::codomain_degree() const { return data_->codomain_degree; }
const std::vector<Perm>& GroupHom::gen_images() const {
  return data_->gen_images;
}
const PermGroup& GroupHom::image() const { return data_->image; }

GroupHom::GroupHom(PermGroup domain, unsigned codomain_degree,
                   std::vector<Perm> gen_images) {
  if (codomain_degree == 0)
    throw PreconditionFailed("codomain degree must be at least 1");
  if (gen_images.size() != domain.generators().size())
    throw PreconditionFailed(
        "generator image count " + std::to_string(gen_images.size()) +
        " does not match generator count " +
        std::to_string(domain.generators().size()));
  for (const Perm& h : gen_images)
    if (h.degree() != codomain_degree)
      throw DegreeMismatch("generator image of degree " +
                           std::to_string(h.degree()) +
                           " in codomain of degree " +
                           std::to_string(codomain_degree));

  unsigned n = domain.degree();
  std::vector<Perm> diag;
  diag.reserve(gen_images.size());
  for (std::size_t i = 0; i < gen_images.size(); ++i)
    diag.push_back(diagonal_perm(domain.generators()[i], gen_images[i]));

  std::vector<unsigned> hint(n);
  std::iota(hint.begin(), hint.end(), 1u);
  StabilizerChain chain(n + codomain_degree, std::move(diag), hint,
                        BaseHintMode::kPrefer);
  for (std::size_t i = 0; i < chain.length(); ++i)
    if (chain.base_point(i) > n)
      throw NotAHomomorphism(
          "generator images do not extend to a homomorphism");

  PermGroup image(codomain_degree, gen_images);
  data_ = std::make_shared<const Data>(std::move(domain), codomain_degree,
                                       std::move(gen_images), std::move(chain),
                                       std::move(image));
}

Perm GroupHom::apply(const Perm& g) const {
  unsigned n = domain().degree();
  if (g.degree() != n)
    throw DegreeMismatch("hom applied to element of degree " +
                         std::to_string(g.degree()));
  const StabilizerChain& chain = data_->eval_chain;
  // Sift (g, id) through the graph chain. All base points are domain points,
  // so the sift path depends only on the domain images and matches the path
  // of the true element (g, hom(g)); the transversal product then carries
  // the genuine codomain part.
  Perm residue = diagonal_perm(g, Perm(codomain_degree()));
  std::vector<Perm> factors;
  for (std::size_t i = 0; i < chain.length(); ++i) {
    unsigned x = residue[chain.base_point(i)];
    if (!chain.in_orbit(i, x))
      throw NotInGroup("element " + format_cycles(g) +
                       " is not in the domain group");
    factors.push_back(chain.transversal(i, x));
    residue = compose(residue, chain.transversal_inverse(i, x));
  }
  for (unsigned x = 1; x <= n; ++x)
    if (residue[x] != x)
      throw NotInGroup("element " + format_cycles(g) +
                       " is not in the domain group");
  Perm product(chain.degree());
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    product = compose(product, *it);
  return codomain_part(product, n, codomain_degree());
}

const PermGroup& GroupHom::kernel() const {
  std::call_once(data_->kernel_once, [this] {
    unsigned n = domain().degree();
    unsigned m = codomain_degree();
    if (m > kKernelCodomainCap)
      throw OrderCapExceeded("kernel computation for codomain degree " +
                             std::to_string(m) + " (cap " +
                             std::to_string(kKernelCodomainCap) + ")");
    std::vector<Perm> diag;
    for (std::size_t i = 0; i < gen_images().size(); ++i)
      diag.push_back(
          diagonal_perm(domain().generators()[i], gen_images()[i]));
    std::vector<unsigned> hint(m);
    std::iota(hint.begin(), hint.end(), n + 1);
    StabilizerChain pinned(n + m, std::move(diag), hint, BaseHintMode::kPin);
    std::vector<Perm> kernel_gens;
    for (const Perm& d : pinned.generators_fixing_prefix(m))
      kernel_gens.push_back(domain_part(d, n));
    data_->kernel =
        std::make_unique<const PermGroup>(n, std::move(kernel_gens));
  });
  return *data_->kernel;
}

Order GroupHom::kernel_order() const {
  Order q = domain().order() / image().order();
  if (q * image().order() != domain().order())
    throw InternalCheckFailed("image order does not divide group order");
  return q;
}

Perm GroupHom::preimage(const Perm& h) const {
  unsigned n = domain().degree();
  unsigned m = codomain_degree();
  if (h.degree() != m)
    throw DegreeMismatch("preimage of element of degree " +
                         std::to_string(h.degree()));
  if (m > kKernelCodomainCap)
    throw OrderCapExceeded("preimage computation for codomain degree " +
                           std::to_string(m));
  kernel();  // ensures the pinned chain exists via the same construction
  // Rebuild the pinned chain here; preimages are rare enough that sharing
  // the kernel chain is not worth the extra state.
  std::vector<Perm> diag;
  for (std::size_t i = 0; i < gen_images().size(); ++i)
    diag.push_back(diagonal_perm(domain().generators()[i], gen_images()[i]));
  std::vector<unsigned> hint(m);
  std::iota(hint.begin(), hint.end(), n + 1);
  StabilizerChain pinned(n + m, std::move(diag), hint, BaseHintMode::kPin);

  Perm residue = diagonal_perm(Perm(n), h);
  std::vector<Perm> factors;
  std::size_t prefix = std::min<std::size_t>(m, pinned.length());
  for (std::size_t i = 0; i < prefix; ++i) {
    unsigned x = residue[pinned.base_point(i)];
    if (!pinned.in_orbit(i, x))
      throw NotInGroup("element is not in the image group");
    factors.push_back(pinned.transversal(i, x));
    residue = compose(residue, pinned.transversal_inverse(i, x));
  }
  for (unsigned y = 1; y <= m; ++y)
    if (residue[n + y] != n + y)
      throw NotInGroup("element is not in the image group");
  Perm product(n + m);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    product = compose(product, *it);
  return domain_part(product, n);
}

PermGroup GroupHom::preimage_of_point_stabilizer(
    unsigned codomain_point) const {
  unsigned n = domain().degree();
  unsigned m = codomain_degree();
  if (codomain_point < 1 || codomain_point > m)
    throw PointOutOfRange("codomain point " + std::to_string(codomain_point));
  std::vector<Perm> diag;
  for (std::size_t i = 0; i < gen_images().size(); ++i)
    diag.push_back(diagonal_perm(domain().generators()[i], gen_images()[i]));
  StabilizerChain pinned(n + m, std::move(diag), {n + codomain_point},
                         BaseHintMode::kPin);
  std::vector<Perm> gens;
  for (const Perm& d : pinned.generators_fixing_prefix(1))
    gens.push_back(domain_part(d, n));
  return PermGroup(n, std::move(gens));
}

GroupHom identity_hom(const PermGroup& g) {
  return GroupHom(g, g.degree(), g.generators());
}

GroupHom restriction_hom(const PermGroup& g,
                         const std::vector<unsigned>& points) {
  if (points.empty())
    throw PreconditionFailed("restriction to an empty point set");
  std::vector<unsigned> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<unsigned> pos(g.degree() + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > g.degree())
      throw PointOutOfRange("restriction point " + std::to_string(sorted[i]));
    pos[sorted[i]] = static_cast<unsigned>(i + 1);
  }
  std::vector<Perm> images;
  images.reserve(g.generators().size());
  for (const Perm& gen : g.generators()) {
    std::vector<unsigned> im(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      unsigned y = gen[sorted[i]];
      if (pos[y] == 0)
        throw NotInvariant("point set is not invariant: " +
                           std::to_string(sorted[i]) + " maps to " +
                           std::to_string(y));
      im[i] = pos[y];
    }
    images.emplace_back(std::move(im));
  }
  return GroupHom(g, static_cast<unsigned>(sorted.size()), std::move(images));
}

GroupHom compose_homs(const GroupHom& first, const GroupHom& second) {
  std::vector<Perm> images;
  images.reserve(first.gen_images().size());
  for (const Perm& h : first.gen_images()) images.push_back(second.apply(h));
  return GroupHom(first.domain(), second.codomain_degree(), std::move(images));
}

GroupHom direct_sum_homs(const std::vector<GroupHom>& homs) {
  if (homs.empty()) throw PreconditionFailed("direct sum of no maps");
  const PermGroup& dom = homs[0].domain();
  unsigned total = 0;
  for (const GroupHom& h : homs) {
    if (h.domain().degree() != dom.degree() ||
        h.domain().generators() != dom.generators())
      throw PreconditionFailed("direct sum needs a common domain");
    total += h.codomain_degree();
  }
  std::vector<Perm> images;
  for (std::size_t i = 0; i < dom.generators().size(); ++i) {
    std::vector<unsigned> im(total);
    unsigned offset = 0;
    for (const GroupHom& h : homs) {
      const Perm& part = h.gen_images()[i];
      for (unsigned y = 1; y <= part.degree(); ++y)
        im[offset + y - 1] = offset + part[y];
      offset += h.codomain_degree();
    }
    images.emplace_back(std::move(im));
  }
  return GroupHom(dom, total, std::move(images));
}

namespace {

// Canonical representative of the coset H*x: the element of the coset whose
// image tuple on H's base points is lexicographically least.
Perm coset_canonical_rep(const StabilizerChain& hchain, Perm x) {
  for (std::size_t i = 0; i < hchain.length(); ++i) {
    unsigned best_point = 0, best_image = 0;
    for (unsigned o : hchain.orbit(i)) {
      unsigned image = x[o];
      if (best_point == 0 || image < best_image) {
        best_point = o;
        best_image = image;
      }
    }
    if (best_point != hchain.base_point(i))
      x = compose(hchain.transversal(i, best_point), x);
  }
  return x;
}

}  // namespace

GroupHom coset_action(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree())
    throw DegreeMismatch("coset action: degrees " +
                         std::to_string(g.degree()) + " and " +
                         std::to_string(h.degree()));
  for (const Perm& x : h.generators())
    if (!g.contains(x))
      throw NotASubgroup("coset action: generator " + format_cycles(x) +
                         " of H is outside G");

  const StabilizerChain& hchain = h.chain();
  std::vector<Perm> reps{coset_canonical_rep(hchain, Perm(g.degree()))};
  std::unordered_map<std::uint64_t, std::vector<unsigned>> index;
  index[reps[0].hash()].push_back(0);

  auto find_or_insert = [&](Perm rep) -> unsigned {
    auto& bucket = index[rep.hash()];
    for (unsigned i : bucket)
      if (reps[i] == rep) return i;
    unsigned id = static_cast<unsigned>(reps.size());
    bucket.push_back(id);
    reps.push_back(std::move(rep));
    return id;
  };

  std::vector<std::vector<unsigned>> action(g.generators().size());
  for (std::size_t head = 0; head < reps.size(); ++head) {
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      Perm moved =
          coset_canonical_rep(hchain, compose(reps[head], g.generators()[s]));
      action[s].push_back(find_or_insert(std::move(moved)) + 1);
    }
  }

  unsigned degree = static_cast<unsigned>(reps.size());
  std::vector<Perm> images;
  images.reserve(action.size());
  for (auto& row : action) images.emplace_back(std::move(row));
  return GroupHom(g, degree, std::move(images));
}

PermGroup kernel_of(const GroupHom& hom) { return hom.kernel(); }

PermGroup image_of_subgroup(const GroupHom& hom, const PermGroup& sub) {
  std::vector<Perm> images;
  images.reserve(sub.generators().size());
  for (const Perm& x : sub.generators()) images.push_back(hom.apply(x));
  return PermGroup(hom.codomain_degree(), std::move(images));
}

PermGroup core_of_subgroup(const PermGroup& g, const PermGroup& h) {
  if (!is_subgroup(h, g))
    throw NotASubgroup("core: H is not a subgroup of G");
  if (h.order() <= kCoreEnumerationCap) {
    PermGroup core = h;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Perm& gen : g.generators()) {
        PermGroup conj = conjugate_group(core, gen);
        if (conj == core) continue;
        core = intersection(core, conj);
        changed = true;
      }
    }
    return core;
  }
  return coset_action(g, h).kernel();
}

}  // namespace quotshrink
