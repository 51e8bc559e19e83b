#include <doctest.h>

#include <random>

#include "quotshrink/normal_structure.hpp"
#include "quotshrink/standard_groups.hpp"
#include "quotshrink/wreath.hpp"
#include "support/oracles.hpp"

using namespace quotshrink;
namespace oracle = quotshrink::testing;

namespace {

PermGroup a5_squared() {
  return direct_product(alternating_group(5), alternating_group(5));
}

// base group A5 x A5 of the product-action wreath on 25 points
PermGroup a5_squared_product_action() {
  auto w = wreath_product_action(alternating_group(5), symmetric_group(2));
  std::vector<Perm> base(w.group.generators().begin(),
                         w.group.generators().end() -
                             w.top_gen_images.size());
  return PermGroup(25, base);
}

}  // namespace

TEST_CASE("simple factors") {
  auto factors = simple_factors(a5_squared());
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].order() == 60);
  CHECK(factors[1].order() == 60);
  // disjoint supports, sorted by smallest moved point
  CHECK(factors[0].moved_points().front() == 1);
  CHECK(factors[1].moved_points().front() == 6);

  auto single = simple_factors(alternating_group(5));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == alternating_group(5));

  CHECK_THROWS_AS(simple_factors(PermGroup(2, {parse_cycles("(1 2)", 2)})),
                  NotSemisimple);
  CHECK_THROWS_AS(simple_factors(symmetric_group(4)), NotSemisimple);
}

TEST_CASE("simple factors with entangled supports") {
  PermGroup n = a5_squared_product_action();
  REQUIRE(n.order() == 3600);
  auto factors = simple_factors(n);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].order() == 60);
  CHECK(factors[1].order() == 60);
  // both factors act on all 25 points
  CHECK(factors[0].moved_points().size() == 25);
  // elementwise commuting and full product
  for (const Perm& a : factors[0].generators())
    for (const Perm& b : factors[1].generators()) CHECK(commutes(a, b));
}

TEST_CASE("minimal normality") {
  CHECK(is_minimal_normal(symmetric_group(5), alternating_group(5)));
  PermGroup n = a5_squared();
  CHECK_FALSE(is_minimal_normal(n, n));
  auto w = wreath_imprimitive(symmetric_group(5), symmetric_group(2));
  CHECK(is_minimal_normal(w.group, a5_squared()));
  // abelian minimal normal subgroup, via the exact fallback
  CHECK(is_minimal_normal(symmetric_group(4), klein_four_group()));
  CHECK_FALSE(is_minimal_normal(symmetric_group(4), alternating_group(4)));
  CHECK_THROWS_AS(
      is_minimal_normal(symmetric_group(5),
                        PermGroup(5, {parse_cycles("(1 2)", 5)})),
      NotNormal);
}

TEST_CASE("factor projections") {
  PermGroup n = a5_squared();
  SocleDecomposition dec = socle_decomposition(n, n);

  Perm in_first = parse_cycles("(1 2 3)", 10);
  CHECK(projection_onto_factor(dec, in_first, 0) == in_first);
  CHECK(projection_onto_factor(dec, in_first, 1).is_identity());

  Perm s = parse_cycles("(1 2 3)", 10), t = parse_cycles("(6 7 8 9 10)", 10);
  Perm product = compose(s, t);
  CHECK(projection_onto_factor(dec, product, 0) == s);
  CHECK(projection_onto_factor(dec, product, 1) == t);

  // support-splitting oracle for the disjoint case: restriction to the
  // factor support must agree with the conjugation-based computation
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    Perm x = oracle::random_word(n, rng);
    Perm p0 = projection_onto_factor(dec, x, 0);
    Perm p1 = projection_onto_factor(dec, x, 1);
    for (unsigned pt = 1; pt <= 5; ++pt) {
      CHECK(p0[pt] == x[pt]);
      CHECK(p1[pt + 5] == x[pt + 5]);
    }
    // product reconstruction
    CHECK(compose(p0, p1) == x);
  }
  CHECK_THROWS_AS(projection_onto_factor(dec, parse_cycles("(1 6)", 10), 0),
                  NotInGroup);
}

TEST_CASE("product reconstruction with entangled supports") {
  PermGroup n = a5_squared_product_action();
  SocleDecomposition dec = socle_decomposition(n, n);
  std::mt19937 rng(17);
  for (int i = 0; i < 20; ++i) {
    Perm x = oracle::random_word(n, rng);
    Perm p0 = projection_onto_factor(dec, x, 0);
    Perm p1 = projection_onto_factor(dec, x, 1);
    CHECK(compose(p0, p1) == x);
    CHECK(dec.factors[0].contains(p0));
    CHECK(dec.factors[1].contains(p1));
  }
}

TEST_CASE("subdirect subgroups") {
  PermGroup n = a5_squared();
  SocleDecomposition dec = socle_decomposition(n, n);
  PermGroup diag = oracle::twisted_diagonal(alternating_group(5), Perm(5));
  CHECK(is_subdirect(dec, diag));
  CHECK_FALSE(is_subdirect(dec, dec.factors[0]));
  CHECK(is_subdirect(dec, n));
  CHECK_THROWS_AS(
      is_subdirect(dec, PermGroup(10, {parse_cycles("(1 6)", 10)})),
      NotInGroup);
}

TEST_CASE("self-normalizing subdirect subgroups") {
  // graphs of automorphisms: inner twists and outer twists by a
  // transposition
  PermGroup n = a5_squared();
  SocleDecomposition dec = socle_decomposition(n, n);
  std::vector<Perm> twists{
      Perm(5),
      parse_cycles("(1 2 3)", 5),
      parse_cycles("(1 2 3 4 5)", 5),
      parse_cycles("(1 2)", 5),
      parse_cycles("(1 2)(1 2 3 4 5)", 5),
      parse_cycles("(4 5)", 5)};
  for (const Perm& twist : twists) {
    PermGroup diag = oracle::twisted_diagonal(alternating_group(5), twist);
    CHECK(is_subdirect(dec, diag));
    CHECK(check_normsd(dec, diag));
  }
  CHECK_THROWS_AS(check_normsd(dec, dec.factors[0]), PreconditionFailed);
}

TEST_CASE("the induced almost simple group") {
  PermGroup s5 = symmetric_group(5), a5 = alternating_group(5);
  {
    SocleDecomposition dec = socle_decomposition(s5, a5);
    InducedT t = induced_T(s5, dec);
    CHECK(t.t_rep.order() == 120);
    CHECK(t.t_socle_image.order() == 60);
    CHECK(is_normal(t.t_socle_image, t.t_rep));
  }
  {
    SocleDecomposition dec = socle_decomposition(a5, a5);
    InducedT t = induced_T(a5, dec);
    CHECK(t.t_rep.order() == 60);
    CHECK(t.t_socle_image.order() == 60);
  }
  {
    auto w = wreath_imprimitive(symmetric_group(5), symmetric_group(2));
    PermGroup n = a5_squared();
    SocleDecomposition dec = socle_decomposition(w.group, n);
    InducedT t = induced_T(w.group, dec);
    CHECK(t.t_rep.order() == 120);
    // |N_G(S_1)| / |C_G(S_1)| = |T|
    PermGroup cent = centralizer(t.normalizer_of_factor, dec.factors[0]);
    CHECK(t.normalizer_of_factor.order() / cent.order() == t.t_rep.order());
  }
}

TEST_CASE("induced T bookkeeping across the catalog") {
  struct Fixture {
    PermGroup g, n;
    Order out_order;  // |Out(S)| for the factor
  };
  std::vector<Fixture> fixtures;
  fixtures.push_back({symmetric_group(5), alternating_group(5), 2});
  fixtures.push_back({pgamma_l2(9), psl2(9), 4});
  fixtures.push_back({psl2(7), psl2(7), 2});
  fixtures.push_back({pgamma_l2(8), psl2(8), 3});
  auto w = wreath_imprimitive(symmetric_group(5), symmetric_group(2));
  fixtures.push_back({w.group, a5_squared(), 2});
  for (const auto& fixture : fixtures) {
    SocleDecomposition dec =
        socle_decomposition(fixture.g, fixture.n);
    InducedT t = induced_T(fixture.g, dec);
    CHECK(t.t_rep.order() % t.t_socle_image.order() == 0);
    Order outer = t.t_rep.order() / t.t_socle_image.order();
    CHECK(fixture.out_order % outer == 0);  // |T/S| divides |Out(S)|
    // factor action is transitive for these minimal normal subgroups
    CHECK(dec.factor_action.image().is_transitive());
  }
}

TEST_CASE("factor containment under projections") {
  // K = 1 special case: a normal subgroup of G inside N is a product of
  // full factors
  auto w = wreath_imprimitive(symmetric_group(5), symmetric_group(2));
  PermGroup n = a5_squared();
  PermGroup trivial = PermGroup::trivial(10);
  auto hit = check_ntproj(w.group, trivial, n, n);
  CHECK(hit == std::vector<std::size_t>{0, 1});

  // L = K: no factor is hit
  PermGroup k12 = shifted_group(cyclic_group(2), 10, 12);
  PermGroup n12 = shifted_group(n, 0, 12);
  std::vector<Perm> ambient_gens = k12.generators();
  for (const Perm& x : n12.generators()) ambient_gens.push_back(x);
  PermGroup ambient(12, ambient_gens);
  CHECK(check_ntproj(ambient, k12, n12, k12).empty());

  // K = <(11 12)>, L = K x S_1: exactly the first factor, contained in L
  std::vector<Perm> l_gens = k12.generators();
  for (const Perm& x : shifted_group(alternating_group(5), 0, 12).generators())
    l_gens.push_back(x);
  PermGroup l(12, l_gens);
  auto hit2 = check_ntproj(ambient, k12, n12, l);
  CHECK(hit2 == std::vector<std::size_t>{0});

  // hypothesis violations are rejected
  CHECK_THROWS_AS(check_ntproj(ambient, n12, n12, l), PreconditionFailed);
}
