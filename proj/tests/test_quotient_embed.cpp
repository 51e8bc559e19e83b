#include <doctest.h>

#include "quotshrink/mindeg.hpp"
#include "quotshrink/quotient_embed.hpp"
#include "quotshrink/standard_groups.hpp"
#include "quotshrink/wreath.hpp"
#include "support/oracles.hpp"

using namespace quotshrink;
namespace oracle = quotshrink::testing;

namespace {

PermGroup a5_power(unsigned k) {
  PermGroup result = alternating_group(5);
  for (unsigned i = 1; i < k; ++i)
    result = direct_product(result, alternating_group(5));
  return result;
}

void check_certificates(const QuotientRep& rep, const PermGroup& g,
                        const PermGroup& n) {
  CHECK(rep.kernel_certificate.matches_n);
  CHECK(rep.kernel_certificate.kernel_order == n.order());
  CHECK(rep.bound_certificate.satisfied);
  CHECK(rep.m == rep.rho.codomain_degree());
  CHECK(rep.n == g.degree());
  CHECK_FALSE(rep.trace.empty());
  // kernel generators lie in N and vice versa
  PermGroup kernel = rep.rho.kernel();
  for (const Perm& x : kernel.generators()) CHECK(n.contains(x));
  for (const Perm& x : n.generators()) CHECK(kernel.contains(x));
  if (rep.bound_certificate.transitive)
    CHECK(5u * rep.m <= 2u * rep.n);
  else
    CHECK(rep.m < rep.n);
}

}  // namespace

TEST_CASE("tight pair: five points") {
  PermGroup g = symmetric_group(5), n = alternating_group(5);
  QuotientRep rep = embed_quotient(g, n);
  CHECK(rep.m == 2);
  CHECK(rep.rho.image().order() == 2);
  check_certificates(rep, g, n);
}

TEST_CASE("tight pair: ten points") {
  PermGroup g = pgamma_l2(9), n = psl2(9);
  REQUIRE(g.order() == 1440);
  REQUIRE(n.order() == 360);
  QuotientRep rep = embed_quotient(g, n);
  CHECK(rep.m == 4);
  PermGroup image = rep.rho.image();
  CHECK(image.order() == 4);
  // elementary abelian of exponent two
  image.for_each_element([](const Perm& p) {
    CHECK(compose(p, p).is_identity());
    return true;
  });
  check_certificates(rep, g, n);
}

TEST_CASE("trivial quotient") {
  PermGroup a5 = alternating_group(5);
  QuotientRep rep = embed_quotient(a5, a5);
  CHECK(rep.m == 1);
  CHECK(rep.rho.image().is_trivial());
  check_certificates(rep, a5, a5);
}

TEST_CASE("imprimitive wreath pair") {
  auto w = wreath_imprimitive(symmetric_group(5), symmetric_group(2));
  PermGroup n = a5_power(2);
  QuotientRep rep = embed_quotient(w.group, n);
  CHECK(rep.m == 4);
  CHECK(rep.rho.image().order() == 8);
  CHECK(min_faithful_rep(rep.rho.image()).degree == 4);
  check_certificates(rep, w.group, n);
}

TEST_CASE("iterated reduction") {
  // a minimal normal subgroup reduces in one step, identically
  {
    PermGroup g = symmetric_group(5), n = alternating_group(5);
    QuotientRep direct = embed_quotient(g, n);
    QuotientRep iterated = embed_quotient_radical(g, n);
    CHECK(iterated.m == direct.m);
    CHECK(iterated.rho.gen_images() == direct.rho.gen_images());
  }
  // the whole group: trivial image after two rounds
  {
    PermGroup n = a5_power(2);
    QuotientRep rep = embed_quotient_radical(n, n);
    CHECK(rep.m == 1);
    check_certificates(rep, n, n);
  }
  // intransitive direct product
  {
    PermGroup g = direct_product(symmetric_group(5), symmetric_group(5));
    PermGroup n = a5_power(2);
    QuotientRep rep = embed_quotient_radical(g, n);
    CHECK(rep.m <= 4);
    CHECK(rep.m < 10);
    CHECK(rep.rho.image().order() == 4);
    CHECK_FALSE(rep.bound_certificate.transitive);
    check_certificates(rep, g, n);
  }
}

TEST_CASE("product action pair") {
  auto w = wreath_product_action(alternating_group(5), symmetric_group(2));
  std::vector<Perm> base(w.group.generators().begin(),
                         w.group.generators().end() -
                             w.top_gen_images.size());
  PermGroup n(25, base);
  REQUIRE(n.order() == 3600);
  QuotientRep rep = embed_quotient(w.group, n);
  CHECK(rep.m == 2);
  check_certificates(rep, w.group, n);
}

TEST_CASE("precondition errors") {
  CHECK_THROWS_AS(
      embed_quotient(symmetric_group(5),
                     PermGroup(5, {parse_cycles("(1 2)", 5)})),
      NotNormal);
  CHECK_THROWS_AS(embed_quotient(symmetric_group(4), klein_four_group()),
                  AbelianFactor);
  PermGroup n = a5_power(2);
  CHECK_THROWS_AS(embed_quotient(n, n), NotMinimalNormal);
  CHECK_THROWS_AS(
      embed_quotient(symmetric_group(5), PermGroup::trivial(5)),
      NotMinimalNormal);
  CHECK_THROWS_AS(
      embed_quotient_radical(symmetric_group(4), alternating_group(4)),
      AbelianFactor);
}

TEST_CASE("trace replay reproduces the map") {
  struct Pair {
    PermGroup g, n;
    bool radical;
  };
  auto w = wreath_imprimitive(symmetric_group(5), symmetric_group(2));
  std::vector<Pair> pairs;
  pairs.push_back({symmetric_group(5), alternating_group(5), false});
  pairs.push_back({w.group, a5_power(2), false});
  pairs.push_back(
      {direct_product(symmetric_group(5), symmetric_group(5)), a5_power(2),
       true});
  for (const Pair& pair : pairs) {
    QuotientRep rep = pair.radical
                          ? embed_quotient_radical(pair.g, pair.n)
                          : embed_quotient(pair.g, pair.n);
    QuotientRep replayed = replay_trace(pair.g, pair.n, rep.trace,
                                        pair.radical);
    CHECK(replayed.rho.gen_images() == rep.rho.gen_images());
    CHECK(replayed.m == rep.m);
    // each step's degrees chain together
    for (const TraceStep& step : rep.trace) {
      CHECK(step.degree_before > 0);
      CHECK(step.degree_after > 0);
    }
  }
  // tampered traces are rejected
  QuotientRep rep = embed_quotient(symmetric_group(5), alternating_group(5));
  auto broken = rep.trace;
  broken[0].action = "orbit-split";
  CHECK_THROWS_AS(
      replay_trace(symmetric_group(5), alternating_group(5), broken),
      PreconditionFailed);
}

TEST_CASE("route consistency in the transitive base case") {
  // both routes give a faithful quotient representation; the derivation
  // picked the regular one, and replaying with the outer route forced must
  // still verify (same degree here, both tight)
  PermGroup g = symmetric_group(5), n = alternating_group(5);
  QuotientRep rep = embed_quotient(g, n);
  REQUIRE(rep.trace.back().action == "transitive-base");
  CHECK(rep.trace.back().choice == "regular-mindeg");
  auto forced = rep.trace;
  forced.back().choice = "outer-wreath";
  QuotientRep outer = replay_trace(g, n, forced);
  CHECK(outer.m == 2);
  CHECK(outer.kernel_certificate.matches_n);
}

TEST_CASE("two-step composability") {
  // reduce by one minimal normal subgroup, then reduce the image further;
  // the composite kernel is the preimage of the second kernel
  auto w = wreath_imprimitive(symmetric_group(5), symmetric_group(2));
  PermGroup g = direct_product(w.group, symmetric_group(5));
  PermGroup swap_pair = shifted_group(a5_power(2), 0, 15);
  PermGroup third = shifted_group(alternating_group(5), 10, 15);

  QuotientRep first = embed_quotient(g, swap_pair);
  PermGroup g1 = first.rho.image();
  PermGroup third_image = image_of_subgroup(first.rho, third);
  QuotientRep second = embed_quotient_radical(g1, third_image);

  GroupHom composite = compose_homs(first.rho, second.rho);
  // kernel = preimage of the second kernel = swap_pair * third
  std::vector<Perm> both = swap_pair.generators();
  for (const Perm& x : third.generators()) both.push_back(x);
  PermGroup full_socle(15, both);
  for (const Perm& x : full_socle.generators())
    CHECK(composite.apply(x).is_identity());
  CHECK(composite.kernel_order() == full_socle.order());
}

TEST_CASE("degree bound checks") {
  {
    auto report = check_minprimdeg(symmetric_group(5), alternating_group(5));
    CHECK(report.p_t == 5);
    CHECK(report.p_t_power_k == 5);
    CHECK(report.degree_bound_holds);
    CHECK(report.almost_simple_degree_check);
  }
  {
    auto w = wreath_product_action(alternating_group(5), symmetric_group(2));
    std::vector<Perm> base(w.group.generators().begin(),
                           w.group.generators().end() -
                               w.top_gen_images.size());
    PermGroup n(25, base);
    auto report = check_minprimdeg(w.group, n);
    CHECK(report.k == 2);
    CHECK(report.p_t == 5);
    CHECK(report.p_t_power_k == 25);  // the equality case
    CHECK(report.degree_bound_holds);
  }
  {
    // k = 1 with G = N: n >= P(T) holds since G acts faithfully
    PermGroup a5 = alternating_group(5);
    auto report = check_minprimdeg(a5, a5);
    CHECK(report.degree_bound_holds);
  }
  CHECK_THROWS_AS(
      check_minprimdeg(wreath_imprimitive(symmetric_group(5),
                                          symmetric_group(2))
                           .group,
                       a5_power(2)),
      PreconditionFailed);  // N intransitive
}

TEST_CASE("quotient degree bound checks") {
  {
    auto report = check_minwpquot(symmetric_group(5), alternating_group(5));
    CHECK(report.p_quotient == 2);
    CHECK(report.k_times_outer == 2);
    CHECK(report.p_t == 5);
    CHECK(report.first_holds);
    CHECK(report.second_holds);
  }
  {
    // trivial quotient: P(1) = 1 <= k|T/S| = 1
    PermGroup a5 = alternating_group(5);
    auto report = check_minwpquot(a5, a5);
    CHECK(report.p_quotient == 1);
    CHECK(report.k_times_outer == 1);
  }
  {
    auto w = wreath_imprimitive(symmetric_group(5), symmetric_group(2));
    auto report = check_minwpquot(w.group, a5_power(2));
    CHECK(report.p_quotient == 4);
    CHECK(report.k_times_outer == 4);
    CHECK(report.p_t == 5);
    CHECK(report.first_holds);
    CHECK(report.second_holds);
  }
}

TEST_CASE("reductions across a small catalog hold the contract") {
  struct Pair {
    PermGroup g, n;
  };
  std::vector<Pair> pairs;
  pairs.push_back({psigma_l2(9), psl2(9)});
  pairs.push_back({pgl2(9), psl2(9)});
  pairs.push_back({symmetric_group(6), alternating_group(6)});
  pairs.push_back({pgamma_l2(8), psl2(8)});
  auto wa = wreath_imprimitive(alternating_group(5), cyclic_group(3));
  {
    std::vector<Perm> base(wa.group.generators().begin(),
                           wa.group.generators().end() - 1);
    pairs.push_back({wa.group, PermGroup(15, base)});
  }
  pairs.push_back(
      {direct_product(symmetric_group(5), cyclic_group(2)),
       shifted_group(alternating_group(5), 0, 7)});
  for (const Pair& pair : pairs) {
    QuotientRep rep = embed_quotient(pair.g, pair.n);
    check_certificates(rep, pair.g, pair.n);
  }
}
