#pragma once

#include <vector>

#include "quotshrink/blocks.hpp"
#include "quotshrink/group_hom.hpp"
#include "quotshrink/perm_group.hpp"

namespace quotshrink {

// Point labelings for wreath products, fixed so constructions are bit-exact.
//
// Imprimitive action on pairs (delta, gamma): point = (gamma-1)*|D| + delta.
// Product action on functions gamma -> delta, encoded as mixed-radix tuples
// (phi(1), ..., phi(k)) with the first coordinate most significant:
// point = 1 + sum (phi(i)-1) * |D|^(k-i).
struct WreathLabeling {
  bool product_action = false;
  unsigned inner_degree = 0;  // |D|, the base domain
  unsigned outer_degree = 0;  // |Γ|, the copies / function domain

  unsigned degree() const;
  unsigned pair_point(unsigned delta, unsigned gamma) const;
  std::pair<unsigned, unsigned> pair_decode(unsigned point) const;
  unsigned function_point(const std::vector<unsigned>& phi) const;
  std::vector<unsigned> function_decode(unsigned point) const;
};

struct WreathProduct {
  PermGroup group;
  WreathLabeling labeling;
  PermGroup inner;  // the base group U on its own domain
  PermGroup outer;  // the top group V on its own domain
  // Embedded images of outer's generators, parallel to outer.generators().
  std::vector<Perm> top_gen_images;
};

// U wr V acting on |D|*|Γ| points, order |U|^|Γ| * |V|.
WreathProduct wreath_imprimitive(const PermGroup& u, const PermGroup& v);

// U wr V with product action on |D|^|Γ| points, order |U|^|Γ| * |V|.
// Requires |D| > 1 (DegenerateBase).
WreathProduct wreath_product_action(const PermGroup& u, const PermGroup& v);

// The product action of the wreath element (f, v): the image of the function
// phi satisfies phi'(gamma) = phi(gamma^(v^-1)) ^ f(gamma^(v^-1)).
// f has one entry per outer point; this is the displayed formula, evaluated
// pointwise.
Perm product_action_perm(const WreathLabeling& labeling,
                         const std::vector<Perm>& f, const Perm& v);

struct CameronEmbedding {
  GroupHom hom;           // injective map of G into the blocks wreath product
  WreathProduct wreath;   // the codomain wreath product
  std::vector<Perm> block_transversal;  // element mapping block 0 to block i
};

// Embedding of a transitive imprimitive group into (G_D on D) wr (G on
// blocks), built from a deterministic block transversal.
CameronEmbedding cameron_embedding(const PermGroup& g, const BlockSystem& b);

// Given H <= G and a faithful action of H of degree d, produces a faithful
// action of G of degree |G:H| * d: the direct sum of the coset actions of G
// on the preimages of the point stabilizers of hom_h's orbit
// representatives.
GroupHom subembed(const PermGroup& g, const PermGroup& h,
                  const GroupHom& hom_h);

// The |Γ| function points taking value a at one coordinate and b elsewhere;
// the embedded top group fixes this set and acts on it as it does on Γ
// (verified generator-wise).
std::vector<unsigned> prodact_v_orbit(const WreathProduct& w, unsigned a,
                                      unsigned b);

}  // namespace quotshrink
