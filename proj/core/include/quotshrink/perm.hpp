#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "quotshrink/errors.hpp"

namespace quotshrink {

// A permutation of {1..degree}, stored as the image vector images()[i - 1] =
// image of point i. Values are immutable after construction.
//
// Composition is the right action throughout the library:
//   act(compose(p, q), x) == act(q, act(p, x)),
// i.e. compose(p, q) applies p first, then q. operator* is an alias for
// compose with the same left-to-right reading.
class Perm {
public:
  // Identity permutation on {1..degree}.
  explicit Perm(unsigned degree);

  // From a 1-based image vector; must be a bijection of {1..size}.
  explicit Perm(std::vector<unsigned> images);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }

  // Image of x, 1-based.
  unsigned act(unsigned x) const {
    if (x < 1 || x > degree())
      throw PointOutOfRange("point " + std::to_string(x) +
                            " not in 1.." + std::to_string(degree()));
    return images_[x - 1];
  }

  // Unchecked image lookup, 1-based.
  unsigned operator[](unsigned x) const { return images_[x - 1]; }

  const std::vector<unsigned>& images() const { return images_; }

  bool is_identity() const;
  std::vector<unsigned> moved_points() const;

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) {
    return a.images_ < b.images_;
  }

  std::uint64_t hash() const;

private:
  std::vector<unsigned> images_;
};

// Apply p, then q. Degrees must match.
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

Perm inverse(const Perm& p);

// q^-1 * p * q, i.e. the conjugate of p by q under the right action.
Perm conjugate(const Perm& p, const Perm& q);

// p^-1 * q^-1 * p * q.
Perm commutator(const Perm& p, const Perm& q);

bool commutes(const Perm& p, const Perm& q);

// Disjoint cycle notation. parse_cycles accepts whitespace- or comma-
// separated 1-based points, "()" or "id" for the identity. format_cycles
// prints the canonical form: cycles sorted by smallest element, each cycle
// rotated to start at its smallest element, fixed points omitted.
Perm parse_cycles(const std::string& text, unsigned degree);
std::string format_cycles(const Perm& p);

std::ostream& operator<<(std::ostream& os, const Perm& p);

}  // namespace quotshrink

template <>
struct std::hash<quotshrink::Perm> {
  std::size_t operator()(const quotshrink::Perm& p) const {
    return static_cast<std::size_t>(p.hash());
  }
};
