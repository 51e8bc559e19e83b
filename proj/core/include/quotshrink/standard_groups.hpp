#pragma once

#include "quotshrink/perm.hpp"
#include "quotshrink/perm_group.hpp"

namespace quotshrink {

PermGroup symmetric_group(unsigned n);
PermGroup alternating_group(unsigned n);
PermGroup cyclic_group(unsigned n);
// Dihedral group of order 2n acting on the n vertices of a regular n-gon.
PermGroup dihedral_group(unsigned n);
PermGroup klein_four_group();

// A acting on {1..deg A}, B on {deg A + 1 .. deg A + deg B}.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

// Copy of p acting on points shifted by offset inside a domain of the given
// total degree.
Perm shifted_perm(const Perm& p, unsigned offset, unsigned total_degree);
// The same group acting on shifted points inside a larger domain.
PermGroup shifted_group(const PermGroup& g, unsigned offset,
                        unsigned total_degree);

// Projective groups on the projective line over GF(q), q a prime power
// <= 16. Points: field elements in encoding order are 1..q, infinity is
// q + 1.
PermGroup psl2(unsigned q);
PermGroup pgl2(unsigned q);
// PSL(2,q) extended by the Frobenius field automorphism.
PermGroup psigma_l2(unsigned q);
// PGL(2,q) extended by the Frobenius field automorphism.
PermGroup pgamma_l2(unsigned q);

}  // namespace quotshrink
