#include "quotshrink/standard_groups.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "quotshrink/errors.hpp"

namespace quotshrink {

PermGroup symmetric_group(unsigned n) {
  if (n == 0) throw PreconditionFailed("degree must be at least 1");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<unsigned> cycle(n);
  for (unsigned i = 0; i < n; ++i) cycle[i] = (i + 1) % n + 1;
  std::vector<unsigned> swap01(n);
  std::iota(swap01.begin(), swap01.end(), 1u);
  std::swap(swap01[0], swap01[1]);
  if (n == 2) return PermGroup(2, {Perm(std::move(swap01))});
  return PermGroup(n, {Perm(std::move(cycle)), Perm(std::move(swap01))});
}

PermGroup alternating_group(unsigned n) {
  if (n == 0) throw PreconditionFailed("degree must be at least 1");
  if (n <= 2) return PermGroup::trivial(n);
  std::vector<Perm> gens;
  for (unsigned i = 3; i <= n; ++i)
    gens.push_back(parse_cycles("(1 2 " + std::to_string(i) + ")", n));
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(unsigned n) {
  if (n == 0) throw PreconditionFailed("degree must be at least 1");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<unsigned> cycle(n);
  for (unsigned i = 0; i < n; ++i) cycle[i] = (i + 1) % n + 1;
  return PermGroup(n, {Perm(std::move(cycle))});
}

PermGroup dihedral_group(unsigned n) {
  if (n < 3) throw PreconditionFailed("dihedral group needs n >= 3");
  std::vector<unsigned> rotation(n), reflection(n);
  for (unsigned i = 0; i < n; ++i) {
    rotation[i] = (i + 1) % n + 1;
    reflection[i] = (n - i) % n + 1;
  }
  return PermGroup(n, {Perm(std::move(rotation)), Perm(std::move(reflection))});
}

PermGroup klein_four_group() {
  return PermGroup(4, {parse_cycles("(1 2)(3 4)", 4),
                       parse_cycles("(1 3)(2 4)", 4)});
}

Perm shifted_perm(const Perm& p, unsigned offset, unsigned total_degree) {
  if (offset + p.degree() > total_degree)
    throw DegreeMismatch("shifted permutation exceeds total degree");
  std::vector<unsigned> images(total_degree);
  std::iota(images.begin(), images.end(), 1u);
  for (unsigned x = 1; x <= p.degree(); ++x) images[offset + x - 1] = offset + p[x];
  return Perm(std::move(images));
}

PermGroup shifted_group(const PermGroup& g, unsigned offset,
                        unsigned total_degree) {
  std::vector<Perm> gens;
  gens.reserve(g.generators().size());
  for (const Perm& p : g.generators())
    gens.push_back(shifted_perm(p, offset, total_degree));
  return PermGroup(total_degree, std::move(gens));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  unsigned total = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm& p : a.generators())
    gens.push_back(shifted_perm(p, 0, total));
  for (const Perm& p : b.generators())
    gens.push_back(shifted_perm(p, a.degree(), total));
  return PermGroup(total, std::move(gens));
}

namespace {

// Arithmetic in GF(p^e) for small prime powers, elements encoded as
// 0..q-1 (polynomial coefficients little-endian base p).
class SmallField {
public:
  explicit SmallField(unsigned q) : q_(q) {
    switch (q) {
      case 2: case 3: case 5: case 7: case 11: case 13:
        p_ = q;
        e_ = 1;
        break;
      case 4:
        p_ = 2; e_ = 2; modulus_ = {1, 1, 1};
        break;
      case 8:
        p_ = 2; e_ = 3; modulus_ = {1, 1, 0, 1};
        break;
      case 9:
        p_ = 3; e_ = 2; modulus_ = {1, 0, 1};  // x^2 + 1
        break;
      case 16:
        p_ = 2; e_ = 4; modulus_ = {1, 1, 0, 0, 1};
        break;
      default:
        throw PreconditionFailed("unsupported field size " + std::to_string(q));
    }
    build_tables();
  }

  unsigned size() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned extension_degree() const { return e_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned inv(unsigned a) const {
    if (a == 0) throw PreconditionFailed("inverse of zero");
    return inv_[a];
  }
  unsigned frobenius(unsigned a) const { return frob_[a]; }

  // Smallest generator of the multiplicative group.
  unsigned primitive_element() const { return primitive_; }

private:
  std::vector<unsigned> decode(unsigned a) const {
    std::vector<unsigned> c(e_);
    for (unsigned i = 0; i < e_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  }
  unsigned encode(const std::vector<unsigned>& c) const {
    unsigned a = 0;
    for (unsigned i = e_; i-- > 0;) a = a * p_ + c[i];
    return a;
  }

  void build_tables() {
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
      auto ca = decode(a);
      for (unsigned b = 0; b < q_; ++b) {
        auto cb = decode(b);
        std::vector<unsigned> sum(e_);
        for (unsigned i = 0; i < e_; ++i) sum[i] = (ca[i] + cb[i]) % p_;
        add_[a * q_ + b] = encode(sum);
        // polynomial product reduced by the modulus
        std::vector<unsigned> prod(2 * e_, 0);
        for (unsigned i = 0; i < e_; ++i)
          for (unsigned j = 0; j < e_; ++j)
            prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        for (unsigned d = 2 * e_; d-- > e_;) {
          unsigned coeff = prod[d];
          if (coeff == 0) continue;
          prod[d] = 0;
          for (unsigned i = 0; i < e_; ++i) {
            unsigned sub = (coeff * modulus_[i]) % p_;
            prod[d - e_ + i] = (prod[d - e_ + i] + p_ - sub) % p_;
          }
        }
        prod.resize(e_);
        mul_[a * q_ + b] = encode(prod);
      }
      std::vector<unsigned> na(e_);
      for (unsigned i = 0; i < e_; ++i) na[i] = (p_ - ca[i]) % p_;
      neg_[a] = encode(na);
    }
    for (unsigned a = 1; a < q_; ++a)
      for (unsigned b = 1; b < q_; ++b)
        if (mul_[a * q_ + b] == 1) inv_[a] = b;
    frob_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
      unsigned r = a;
      for (unsigned i = 1; i < p_; ++i) r = mul_[r * q_ + a];
      frob_[a] = r;  // a^p
    }
    primitive_ = 0;
    for (unsigned g = 1; g < q_ && primitive_ == 0; ++g) {
      unsigned x = g, count = 1;
      while (x != 1) {
        x = mul_[x * q_ + g];
        ++count;
      }
      if (count == q_ - 1) primitive_ = g;
    }
  }

  unsigned q_, p_ = 0, e_ = 1;
  std::vector<unsigned> modulus_;  // monic irreducible, coefficient i of x^i
  std::vector<unsigned> add_, mul_, neg_, inv_, frob_;
  unsigned primitive_ = 0;
};

// Projective line point labels: field element a is point a+1, infinity is
// q+1.
constexpr unsigned kInfinityOffset = 1;

Perm moebius_perm(const SmallField& f, unsigned a, unsigned b, unsigned c,
                  unsigned d) {
  unsigned q = f.size();
  std::vector<unsigned> images(q + kInfinityOffset);
  for (unsigned z = 0; z < q; ++z) {
    unsigned num = f.add(f.mul(a, z), b);
    unsigned den = f.add(f.mul(c, z), d);
    images[z] = den == 0 ? q + 1 : f.mul(num, f.inv(den)) + 1;
  }
  // infinity maps to a/c, or stays at infinity when c == 0
  images[q] = c == 0 ? q + 1 : f.mul(a, f.inv(c)) + 1;
  return Perm(std::move(images));
}

Perm frobenius_perm(const SmallField& f) {
  unsigned q = f.size();
  std::vector<unsigned> images(q + kInfinityOffset);
  for (unsigned z = 0; z < q; ++z) images[z] = f.frobenius(z) + 1;
  images[q] = q + 1;
  return Perm(std::move(images));
}

std::vector<Perm> psl2_generators(const SmallField& f) {
  unsigned q = f.size();
  unsigned g = f.primitive_element();
  unsigned nu = q % 2 == 0 ? g : f.mul(g, g);
  std::vector<Perm> gens;
  gens.push_back(moebius_perm(f, 1, 1, 0, 1));           // z -> z + 1
  gens.push_back(moebius_perm(f, nu, 0, 0, 1));          // z -> nu z
  gens.push_back(moebius_perm(f, 0, f.neg(1), 1, 0));    // z -> -1/z
  return gens;
}

}  // namespace

PermGroup psl2(unsigned q) {
  SmallField f(q);
  return PermGroup(q + 1, psl2_generators(f));
}

PermGroup pgl2(unsigned q) {
  SmallField f(q);
  auto gens = psl2_generators(f);
  gens.push_back(moebius_perm(f, f.primitive_element(), 0, 0, 1));
  return PermGroup(q + 1, std::move(gens));
}

PermGroup psigma_l2(unsigned q) {
  SmallField f(q);
  auto gens = psl2_generators(f);
  gens.push_back(frobenius_perm(f));
  return PermGroup(q + 1, std::move(gens));
}

PermGroup pgamma_l2(unsigned q) {
  SmallField f(q);
  auto gens = psl2_generators(f);
  gens.push_back(moebius_perm(f, f.primitive_element(), 0, 0, 1));
  gens.push_back(frobenius_perm(f));
  return PermGroup(q + 1, std::move(gens));
}

}  // namespace quotshrink
