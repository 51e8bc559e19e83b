#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quotshrink/group_hom.hpp"
#include "quotshrink/normal_structure.hpp"
#include "quotshrink/order.hpp"
#include "quotshrink/perm_group.hpp"

namespace quotshrink {

// One derivation step of the reduction. Steps carry enough data to replay
// the construction without re-deciding:
//   strip-fixed-points: points = the moved points kept.
//   orbit-split:        points = the chosen orbit on which N acts faithfully.
//   block-reduction:    no choice (the block system is the N-orbit system).
//   transitive-base:    choice = "regular-mindeg" or "outer-wreath".
//   radical-step:       perms = generators of the chosen minimal normal
//                       subgroup.
struct TraceStep {
  std::string action;
  std::string detail;
  unsigned degree_before = 0;
  unsigned degree_after = 0;
  std::vector<unsigned> points;
  std::vector<std::string> perms;
  std::string choice;
};

struct KernelCertificate {
  Order kernel_order;
  bool matches_n = false;
};

struct BoundCertificate {
  bool transitive = false;
  std::string bound_kind;  // "2n/5" or "n-1"
  bool satisfied = false;
};

// A faithful representation of G/N: a map rho from G onto a group of degree
// m with kernel N, plus the verified certificates and the derivation trace.
struct QuotientRep {
  GroupHom rho;
  unsigned m = 0;
  unsigned n = 0;
  KernelCertificate kernel_certificate;
  BoundCertificate bound_certificate;
  std::vector<TraceStep> trace;
};

// The main reduction: N must be a nonabelian minimal normal subgroup of G.
// Returns rho with kernel exactly N and degree m < n, with 5m <= 2n whenever
// G is transitive. Throws NotNormal / NotMinimalNormal / AbelianFactor on
// bad inputs and BoundViolation if a constructed map ever exceeds the bound
// (an internal bug, never silently returned).
QuotientRep embed_quotient(const PermGroup& g, const PermGroup& n,
                           std::size_t order_cap = kDefaultOrderCap);

// Iterated reduction for a normal subgroup with no abelian composition
// factors: peels one minimal normal subgroup at a time and composes the
// maps. Same bound contract as embed_quotient.
QuotientRep embed_quotient_radical(const PermGroup& g, const PermGroup& n,
                                   std::size_t order_cap = kDefaultOrderCap);

// Re-runs a derivation following a recorded trace instead of making
// choices; the result must agree with the original generator-wise.
QuotientRep replay_trace(const PermGroup& g, const PermGroup& n,
                         const std::vector<TraceStep>& trace,
                         bool radical = false,
                         std::size_t order_cap = kDefaultOrderCap);

// Numeric check of the primitive-degree bound: for transitive semisimple N
// with trivial centralizer, n >= P(T)^k. Also evaluates the almost-simple
// degree inequality P(T)^2 < |S| on the instance. Throws LemmaViolated if
// the bound fails.
struct MinPrimDegReport {
  unsigned n = 0;
  unsigned k = 0;
  unsigned p_t = 0;
  Order p_t_power_k;
  bool degree_bound_holds = false;
  Order socle_factor_order;
  bool almost_simple_degree_check = false;  // P(T)^2 < |S|
};
MinPrimDegReport check_minprimdeg(const PermGroup& g, const PermGroup& n,
                                  std::size_t order_cap = kDefaultOrderCap);

// Numeric check of the quotient-degree bound: P(G/N) <= k|T/S| <= 2kP(T)/5.
// Throws LemmaViolated if either inequality fails.
struct MinWpQuotReport {
  unsigned k = 0;
  unsigned p_quotient = 0;
  Order outer_order;  // |T/S|
  Order k_times_outer;
  unsigned p_t = 0;
  bool first_holds = false;   // P(G/N) <= k|T/S|
  bool second_holds = false;  // 5|T/S| <= 2P(T)
};
MinWpQuotReport check_minwpquot(const PermGroup& g, const PermGroup& n,
                                std::size_t order_cap = kDefaultOrderCap);

}  // namespace quotshrink
