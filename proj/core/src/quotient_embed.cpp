#include "quotshrink/quotient_embed.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "quotshrink/blocks.hpp"
#include "quotshrink/errors.hpp"
#include "quotshrink/mindeg.hpp"

namespace quotshrink {

namespace {

struct EmbedContext {
  std::size_t cap;
  const std::vector<TraceStep>* script = nullptr;
  std::size_t script_pos = 0;
  std::vector<TraceStep> trace;

  // In replay mode, consumes and returns the next scripted step, which must
  // carry the expected action.
  const TraceStep* scripted(const std::string& action) {
    if (!script) return nullptr;
    if (script_pos >= script->size())
      throw PreconditionFailed("trace replay: script exhausted before step " +
                               action);
    const TraceStep& step = (*script)[script_pos];
    if (step.action != action)
      throw PreconditionFailed("trace replay: expected step " + step.action +
                               ", derivation reached " + action);
    ++script_pos;
    return &step;
  }

  std::size_t begin(std::string action, unsigned degree_before) {
    trace.push_back(TraceStep{std::move(action), "", degree_before, 0, {}, {},
                              ""});
    return trace.size() - 1;
  }
};

void verify_kernel_equals(const GroupHom& rho, const PermGroup& n,
                          const char* where) {
  for (const Perm& x : n.generators())
    if (!rho.apply(x).is_identity())
      throw InternalCheckFailed(std::string(where) +
                                ": N does not lie in the kernel");
  if (rho.kernel_order() != n.order())
    throw InternalCheckFailed(std::string(where) + ": kernel order " +
                              rho.kernel_order().str() + " differs from |N| " +
                              n.order().str());
}

// Transversal for a transitive action hom: element i maps point 1 to
// point i+1 (breadth-first, generators in order).
std::vector<Perm> action_transversal(const GroupHom& action) {
  const PermGroup& g = action.domain();
  unsigned k = action.codomain_degree();
  std::vector<Perm> reps(k, Perm(g.degree()));
  std::vector<bool> seen(k + 1, false);
  seen[1] = true;
  std::vector<unsigned> bfs{1};
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    unsigned pt = bfs[head];
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      unsigned next = action.gen_images()[s][pt];
      if (!seen[next]) {
        seen[next] = true;
        reps[next - 1] = compose(reps[pt - 1], g.generators()[s]);
        bfs.push_back(next);
      }
    }
  }
  if (bfs.size() != k)
    throw InternalCheckFailed("transversal of an intransitive action");
  return reps;
}

GroupHom embed_recursive(const PermGroup& g, const PermGroup& n,
                         EmbedContext& ctx);
GroupHom radical_recursive(const PermGroup& g, const PermGroup& n,
                           EmbedContext& ctx);

GroupHom strip_step(const PermGroup& g, const PermGroup& n, EmbedContext& ctx,
                    const std::vector<unsigned>& moved) {
  const TraceStep* scripted = ctx.scripted("strip-fixed-points");
  if (scripted && scripted->points != moved)
    throw PreconditionFailed("trace replay: stripped point set differs");
  std::size_t step = ctx.begin("strip-fixed-points", g.degree());
  ctx.trace[step].points = moved;
  ctx.trace[step].detail = std::to_string(g.degree() - moved.size()) +
                           " fixed points dropped";
  GroupHom r = restriction_hom(g, moved);
  GroupHom sub = embed_recursive(r.image(), image_of_subgroup(r, n), ctx);
  GroupHom rho = compose_homs(r, sub);
  ctx.trace[step].degree_after = rho.codomain_degree();
  verify_kernel_equals(rho, n, "fixed-point strip");
  return rho;
}

GroupHom intransitive_step(const PermGroup& g, const PermGroup& n,
                           EmbedContext& ctx) {
  const TraceStep* scripted = ctx.scripted("orbit-split");
  auto orbits = g.orbits();
  std::vector<bool> moved_by_n(g.degree() + 1, false);
  for (const Perm& x : n.generators())
    for (unsigned p : x.moved_points()) moved_by_n[p] = true;
  auto n_acts_on = [&](const std::vector<unsigned>& orbit) {
    for (unsigned p : orbit)
      if (moved_by_n[p]) return true;
    return false;
  };

  const std::vector<unsigned>* delta = nullptr;
  if (scripted) {
    for (const auto& orbit : orbits)
      if (orbit == scripted->points) delta = &orbit;
    if (delta == nullptr || !n_acts_on(*delta))
      throw PreconditionFailed("trace replay: recorded orbit is invalid");
  } else {
    // largest orbit on which N acts (faithfully, by minimality); ties go to
    // the earlier orbit, which has the smaller least point
    for (const auto& orbit : orbits) {
      if (!n_acts_on(orbit)) continue;
      if (delta == nullptr || orbit.size() > delta->size()) delta = &orbit;
    }
    if (delta == nullptr)
      throw InternalCheckFailed("N acts trivially on every orbit");
  }

  std::size_t step = ctx.begin("orbit-split", g.degree());
  ctx.trace[step].points = *delta;
  std::vector<unsigned> gamma;
  {
    std::vector<bool> in_delta(g.degree() + 1, false);
    for (unsigned p : *delta) in_delta[p] = true;
    for (unsigned p = 1; p <= g.degree(); ++p)
      if (!in_delta[p]) gamma.push_back(p);
  }
  ctx.trace[step].detail = "orbit of size " +
                           std::to_string(delta->size()) + ", complement " +
                           std::to_string(gamma.size());

  GroupHom r_delta = restriction_hom(g, *delta);
  GroupHom hom_delta = compose_homs(
      r_delta,
      embed_recursive(r_delta.image(), image_of_subgroup(r_delta, n), ctx));

  GroupHom r_gamma = restriction_hom(g, gamma);
  PermGroup n_gamma = image_of_subgroup(r_gamma, n);
  GroupHom hom_gamma =
      n_gamma.is_trivial()
          ? r_gamma
          : compose_homs(r_gamma,
                         embed_recursive(r_gamma.image(), n_gamma, ctx));

  GroupHom rho = direct_sum_homs({hom_delta, hom_gamma});
  ctx.trace[step].degree_after = rho.codomain_degree();
  verify_kernel_equals(rho, n, "orbit split");
  return rho;
}

GroupHom block_step(const PermGroup& g, const PermGroup& n,
                    EmbedContext& ctx) {
  ctx.scripted("block-reduction");
  std::size_t step = ctx.begin("block-reduction", g.degree());

  BlockSystem blocks = orbits_block_system(g, n);
  GroupHom ba = block_action(g, blocks);
  unsigned t = static_cast<unsigned>(blocks.size());

  PermGroup g_block = ba.preimage_of_point_stabilizer(1);
  const std::vector<unsigned>& delta = blocks.blocks[0];
  unsigned d = static_cast<unsigned>(delta.size());
  GroupHom restr = restriction_hom(g_block, delta);
  PermGroup n_delta = image_of_subgroup(restr, n);

  GroupHom sub = radical_recursive(restr.image(), n_delta, ctx);
  unsigned d_reduced = sub.codomain_degree();

  std::vector<Perm> reps = action_transversal(ba);
  std::vector<Perm> images;
  images.reserve(g.generators().size());
  for (std::size_t s = 0; s < g.generators().size(); ++s) {
    const Perm& gen = g.generators()[s];
    const Perm& sigma = ba.gen_images()[s];
    std::vector<unsigned> im(static_cast<std::size_t>(d_reduced) * t);
    for (unsigned i = 0; i < t; ++i) {
      unsigned j = sigma[i + 1] - 1;
      Perm w = compose(compose(reps[i], gen), inverse(reps[j]));
      Perm c = sub.apply(restr.apply(w));
      for (unsigned x = 1; x <= d_reduced; ++x)
        im[static_cast<std::size_t>(i) * d_reduced + x - 1] =
            j * d_reduced + c[x];
    }
    images.emplace_back(std::move(im));
  }
  GroupHom rho(g, d_reduced * t, std::move(images));
  ctx.trace[step].detail = std::to_string(t) + " blocks of size " +
                           std::to_string(d) + ", block degree reduced to " +
                           std::to_string(d_reduced);
  ctx.trace[step].degree_after = rho.codomain_degree();
  verify_kernel_equals(rho, n, "block reduction");
  return rho;
}

GroupHom base_step(const PermGroup& g, const PermGroup& n, EmbedContext& ctx) {
  const TraceStep* scripted = ctx.scripted("transitive-base");
  std::size_t step = ctx.begin("transitive-base", g.degree());

  std::string skip;
  std::optional<GroupHom> regular_route;
  if (g.order() / n.order() <= Order(ctx.cap)) {
    GroupHom ca = coset_action(g, n);
    MinDegResult md = min_faithful_rep(ca.image(), ctx.cap);
    regular_route = compose_homs(ca, md.witness);
  } else {
    skip += "quotient order above cap, regular route skipped; ";
  }

  std::optional<GroupHom> outer_route;
  if (centralizer(g, n).is_trivial()) {
    try {
      SocleDecomposition dec = socle_decomposition(g, n, ctx.cap);
      InducedT it = induced_T(g, dec, ctx.cap);
      GroupHom reg = coset_action(it.t_rep, it.t_socle_image);
      unsigned k = static_cast<unsigned>(dec.factors.size());
      unsigned ts = reg.codomain_degree();
      std::vector<Perm> conj = action_transversal(dec.factor_action);
      std::vector<Perm> images;
      images.reserve(g.generators().size());
      for (std::size_t s = 0; s < g.generators().size(); ++s) {
        const Perm& gen = g.generators()[s];
        const Perm& sigma = dec.factor_action.gen_images()[s];
        std::vector<unsigned> im(static_cast<std::size_t>(k) * ts);
        for (unsigned i = 1; i <= k; ++i) {
          unsigned j = sigma[i];
          Perm carried =
              compose(compose(conj[i - 1], gen), inverse(conj[j - 1]));
          Perm u = reg.apply(it.conj_hom.apply(carried));
          for (unsigned y = 1; y <= ts; ++y)
            im[static_cast<std::size_t>(i - 1) * ts + y - 1] =
                (j - 1) * ts + u[y];
        }
        images.emplace_back(std::move(im));
      }
      GroupHom candidate(g, k * ts, std::move(images));
      verify_kernel_equals(candidate, n, "outer wreath route");
      outer_route = std::move(candidate);
    } catch (const OrderCapExceeded&) {
      skip += "socle machinery above cap, outer route skipped; ";
    }
  } else {
    skip += "centralizer nontrivial, outer route not applicable; ";
  }

  std::string choice;
  if (scripted) {
    choice = scripted->choice;
  } else if (regular_route &&
             (!outer_route || regular_route->codomain_degree() <=
                                  outer_route->codomain_degree())) {
    choice = "regular-mindeg";
  } else if (outer_route) {
    choice = "outer-wreath";
  } else {
    throw OrderCapExceeded("no base-case route feasible under the cap: " +
                           skip);
  }

  GroupHom rho = [&] {
    if (choice == "regular-mindeg") {
      if (!regular_route)
        throw PreconditionFailed("trace replay: regular route unavailable");
      return *regular_route;
    }
    if (choice == "outer-wreath") {
      if (!outer_route)
        throw PreconditionFailed("trace replay: outer route unavailable");
      return *outer_route;
    }
    throw PreconditionFailed("unknown base route '" + choice + "'");
  }();

  ctx.trace[step].choice = choice;
  ctx.trace[step].detail =
      skip +
      (regular_route ? "regular degree " +
                           std::to_string(regular_route->codomain_degree()) +
                           "; "
                     : "") +
      (outer_route ? "outer degree " +
                         std::to_string(outer_route->codomain_degree()) + "; "
                   : "");
  ctx.trace[step].degree_after = rho.codomain_degree();
  verify_kernel_equals(rho, n, "transitive base");
  return rho;
}

GroupHom embed_recursive(const PermGroup& g, const PermGroup& n,
                         EmbedContext& ctx) {
  if (n.is_trivial())
    throw InternalCheckFailed("recursion reached a trivial normal subgroup");
  std::vector<unsigned> moved = g.moved_points();
  if (moved.size() < g.degree()) return strip_step(g, n, ctx, moved);
  if (!g.is_transitive()) return intransitive_step(g, n, ctx);
  if (!n.is_transitive()) return block_step(g, n, ctx);
  return base_step(g, n, ctx);
}

GroupHom radical_recursive(const PermGroup& g, const PermGroup& n,
                           EmbedContext& ctx) {
  GroupHom total = identity_hom(g);
  PermGroup current_group = g;
  PermGroup current_n = n;
  while (!current_n.is_trivial()) {
    const TraceStep* scripted = ctx.scripted("radical-step");
    PermGroup piece = [&] {
      if (scripted) {
        std::vector<Perm> gens;
        for (const std::string& text : scripted->perms)
          gens.push_back(parse_cycles(text, current_group.degree()));
        PermGroup recorded(current_group.degree(), std::move(gens));
        if (!is_normal(recorded, current_group) ||
            !is_subgroup(recorded, current_n))
          throw PreconditionFailed(
              "trace replay: recorded subgroup is not a normal subgroup "
              "inside N");
        return recorded;
      }
      const Perm* seed = nullptr;
      for (const Perm& x : current_n.generators())
        if (!x.is_identity() && (seed == nullptr || x < *seed)) seed = &x;
      if (seed == nullptr)
        throw InternalCheckFailed("nontrivial subgroup without generators");
      return minimal_normal_subgroup_from(current_group, *seed, ctx.cap);
    }();
    if (piece.is_abelian())
      throw AbelianFactor(
          "normal subgroup has an abelian composition factor (minimal "
          "normal piece of order " +
          piece.order().str() + ")");

    std::size_t step = ctx.begin("radical-step", current_group.degree());
    for (const Perm& x : piece.generators())
      ctx.trace[step].perms.push_back(format_cycles(x));
    ctx.trace[step].detail =
        "peeling a minimal normal subgroup of order " + piece.order().str();

    GroupHom reduction = embed_recursive(current_group, piece, ctx);
    total = compose_homs(total, reduction);
    current_group = reduction.image();
    current_n = image_of_subgroup(reduction, current_n);
    ctx.trace[step].degree_after = current_group.degree();
  }
  verify_kernel_equals(total, n, "iterated reduction");
  return total;
}

QuotientRep finish(const PermGroup& g, const PermGroup& n, GroupHom rho,
                   EmbedContext& ctx) {
  unsigned m = rho.codomain_degree();
  unsigned degree = g.degree();

  PermGroup kernel = rho.kernel();
  bool matches = kernel.order() == n.order();
  if (matches)
    for (const Perm& x : kernel.generators())
      if (!n.contains(x)) matches = false;
  if (matches)
    for (const Perm& x : n.generators())
      if (!kernel.contains(x)) matches = false;
  if (!matches)
    throw InternalCheckFailed("kernel of the constructed map is not N");

  bool transitive = g.is_transitive();
  bool satisfied = transitive ? 5u * m <= 2u * degree : m < degree;
  if (!satisfied)
    throw BoundViolation("constructed degree " + std::to_string(m) +
                         " violates the bound for n = " +
                         std::to_string(degree) +
                         (transitive ? " (transitive)" : " (intransitive)"));
  return QuotientRep{std::move(rho),
                     m,
                     degree,
                     KernelCertificate{kernel.order(), true},
                     BoundCertificate{transitive,
                                      transitive ? "2n/5" : "n-1", true},
                     std::move(ctx.trace)};
}

void check_embed_preconditions(const PermGroup& g, const PermGroup& n,
                               std::size_t cap) {
  if (!is_normal(n, g)) throw NotNormal("N is not a normal subgroup of G");
  if (n.is_trivial()) throw NotMinimalNormal("N must be nontrivial");
  if (n.is_abelian()) throw AbelianFactor("N must be nonabelian");
  if (!is_minimal_normal(g, n, cap))
    throw NotMinimalNormal("N is not a minimal normal subgroup of G");
}

void check_radical_preconditions(const PermGroup& g, const PermGroup& n) {
  if (!is_normal(n, g)) throw NotNormal("N is not a normal subgroup of G");
  if (n.is_trivial())
    throw PreconditionFailed("N must be nontrivial");
  if (n.is_abelian()) throw AbelianFactor("N must be nonabelian");
}

}  // namespace

QuotientRep embed_quotient(const PermGroup& g, const PermGroup& n,
                           std::size_t order_cap) {
  check_embed_preconditions(g, n, order_cap);
  EmbedContext ctx{order_cap, nullptr, 0, {}};
  GroupHom rho = embed_recursive(g, n, ctx);
  return finish(g, n, std::move(rho), ctx);
}

QuotientRep embed_quotient_radical(const PermGroup& g, const PermGroup& n,
                                   std::size_t order_cap) {
  check_radical_preconditions(g, n);
  EmbedContext ctx{order_cap, nullptr, 0, {}};
  GroupHom rho = radical_recursive(g, n, ctx);
  return finish(g, n, std::move(rho), ctx);
}

QuotientRep replay_trace(const PermGroup& g, const PermGroup& n,
                         const std::vector<TraceStep>& trace, bool radical,
                         std::size_t order_cap) {
  if (radical)
    check_radical_preconditions(g, n);
  else
    check_embed_preconditions(g, n, order_cap);
  EmbedContext ctx{order_cap, nullptr, 0, {}};
  ctx.script = &trace;
  GroupHom rho = radical ? radical_recursive(g, n, ctx)
                         : embed_recursive(g, n, ctx);
  if (ctx.script_pos != trace.size())
    throw PreconditionFailed("trace replay: unused trailing steps");
  return finish(g, n, std::move(rho), ctx);
}

MinPrimDegReport check_minprimdeg(const PermGroup& g, const PermGroup& n,
                                  std::size_t order_cap) {
  if (!is_normal(n, g))
    throw PreconditionFailed("N is not a normal subgroup of G");
  if (n.is_trivial()) throw PreconditionFailed("N must be nontrivial");
  if (!n.is_transitive()) throw PreconditionFailed("N must be transitive");
  if (!centralizer(g, n).is_trivial())
    throw PreconditionFailed("the centralizer of N in G must be trivial");

  SocleDecomposition dec = socle_decomposition(g, n, order_cap);
  InducedT it = induced_T(g, dec, order_cap);
  unsigned p_t = min_faithful_rep(it.t_rep, order_cap).degree;

  MinPrimDegReport report;
  report.n = g.degree();
  report.k = static_cast<unsigned>(dec.factors.size());
  report.p_t = p_t;
  report.p_t_power_k = 1;
  for (unsigned i = 0; i < report.k; ++i) report.p_t_power_k *= p_t;
  report.degree_bound_holds = Order(report.n) >= report.p_t_power_k;
  report.socle_factor_order = dec.factors.front().order();
  report.almost_simple_degree_check =
      Order(p_t) * p_t < report.socle_factor_order;
  if (!report.degree_bound_holds)
    throw LemmaViolated("degree " + std::to_string(report.n) +
                        " is below P(T)^k = " + report.p_t_power_k.str());
  return report;
}

MinWpQuotReport check_minwpquot(const PermGroup& g, const PermGroup& n,
                                std::size_t order_cap) {
  if (!is_normal(n, g))
    throw PreconditionFailed("N is not a normal subgroup of G");
  if (n.is_trivial()) throw PreconditionFailed("N must be nontrivial");
  if (!centralizer(g, n).is_trivial())
    throw PreconditionFailed("the centralizer of N in G must be trivial");
  if (g.order() / n.order() > Order(order_cap))
    throw OrderCapExceeded("quotient order exceeds the cap");

  GroupHom ca = coset_action(g, n);
  unsigned p_quotient = min_faithful_rep(ca.image(), order_cap).degree;

  SocleDecomposition dec = socle_decomposition(g, n, order_cap);
  InducedT it = induced_T(g, dec, order_cap);
  unsigned p_t = min_faithful_rep(it.t_rep, order_cap).degree;

  MinWpQuotReport report;
  report.k = static_cast<unsigned>(dec.factors.size());
  report.p_quotient = p_quotient;
  report.outer_order = it.t_rep.order() / it.t_socle_image.order();
  report.k_times_outer = Order(report.k) * report.outer_order;
  report.p_t = p_t;
  report.first_holds = Order(p_quotient) <= report.k_times_outer;
  report.second_holds = 5 * report.outer_order <= 2 * Order(p_t);
  if (!report.first_holds)
    throw LemmaViolated("P(G/N) = " + std::to_string(p_quotient) +
                        " exceeds k|T/S| = " + report.k_times_outer.str());
  if (!report.second_holds)
    throw LemmaViolated("k|T/S| = " + report.k_times_outer.str() +
                        " exceeds 2kP(T)/5 with P(T) = " +
                        std::to_string(p_t));
  return report;
}

}  // namespace quotshrink
