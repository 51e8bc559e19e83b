#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "quotshrink/group_hom.hpp"
#include "quotshrink/perm_group.hpp"

namespace quotshrink {

// Default cap on element enumeration inside structure computations
// (factor scans, projection tables, quotient searches). Overridable per call;
// the CLI maps QUOTSHRINK_ORDER_CAP onto it.
inline constexpr std::size_t kDefaultOrderCap = 20000;

// Recovers the projection onto one simple direct factor from conjugation:
// for centerless factors, the conjugation action on the factor pins the
// factor component uniquely.
class FactorProjector {
public:
  FactorProjector(PermGroup factor, std::size_t cap);

  // Component in the factor of any element whose conjugation action on the
  // factor agrees with conjugation by a factor element (every element of a
  // group of the form K x N with K centralizing the factor qualifies).
  Perm project(const Perm& x) const;

private:
  PermGroup factor_;
  std::vector<Perm> elements_;
  std::vector<std::vector<unsigned>> fingerprints_;  // flattened conj tuples
  std::vector<std::size_t> order_;                   // indices sorted by fingerprint
};

// The simple direct factors of a semisimple normal subgroup together with
// the conjugation action of the ambient group permuting them.
struct SocleDecomposition {
  PermGroup n;
  std::vector<PermGroup> factors;
  GroupHom factor_action;  // from G onto a subgroup of Sym(#factors)
  std::shared_ptr<const std::vector<FactorProjector>> projectors;
};

// The almost simple group T = N_G(S)/C_G(S) for the first factor S,
// realized as the conjugation action of N_G(S) on the nontrivial elements
// of S, restricted to a faithful union of orbits (orbits joined in order of
// ascending size, ties by smallest point, until faithful).
struct InducedT {
  PermGroup t_rep;
  PermGroup t_socle_image;
  GroupHom conj_hom;  // from N_G(S) onto t_rep
  PermGroup normalizer_of_factor;
};

// Simple direct factors of N, each certified minimal normal in N, sorted by
// the smallest moved point of their support. Throws NotSemisimple when a
// minimal normal subgroup of N is abelian or the factors do not multiply
// up to N.
std::vector<PermGroup> simple_factors(const PermGroup& n,
                                      std::size_t cap = kDefaultOrderCap);

// Smallest normal subgroup of the ambient group containing a conjugate-
// closure of some element of the seed: normal-closure descent from the
// least nontrivial generator, certified minimal by a conjugacy-class scan.
PermGroup minimal_normal_subgroup_from(const PermGroup& ambient,
                                       const Perm& seed,
                                       std::size_t cap = kDefaultOrderCap);

SocleDecomposition socle_decomposition(const PermGroup& g, const PermGroup& n,
                                       std::size_t cap = kDefaultOrderCap);

// True iff N is nontrivial and no proper nontrivial subgroup of N is normal
// in G. Uses the semisimple fast path when available, otherwise an exact
// conjugacy-class scan.
bool is_minimal_normal(const PermGroup& g, const PermGroup& n,
                       std::size_t cap = kDefaultOrderCap);

// The unique factor component s_i of x in N = S_1 x ... x S_k.
Perm projection_onto_factor(const SocleDecomposition& dec, const Perm& x,
                            std::size_t factor_index);

// True iff H <= N projects onto every simple factor.
bool is_subdirect(const SocleDecomposition& dec, const PermGroup& h);

InducedT induced_T(const PermGroup& g, const SocleDecomposition& dec,
                   std::size_t cap = kDefaultOrderCap);

// For K, N, L normal in the ambient group with K meeting N trivially and
// L <= KN: the set of factor indices onto which L projects nontrivially,
// verifying that each such factor lies inside L (LemmaViolated otherwise).
std::vector<std::size_t> check_ntproj(const PermGroup& ambient,
                                      const PermGroup& k, const PermGroup& n,
                                      const PermGroup& l,
                                      std::size_t cap = kDefaultOrderCap);

// For a subdirect H <= N: verifies that the normalizer of H in N is H
// itself (LemmaViolated otherwise). Returns the normalizer order check.
bool check_normsd(const SocleDecomposition& dec, const PermGroup& h);

}  // namespace quotshrink
