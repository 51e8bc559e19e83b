#include "quotshrink/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace quotshrink {

Perm::Perm(unsigned degree) : images_(degree) {
  if (degree == 0) throw InvalidPermutation("degree must be at least 1");
  std::iota(images_.begin(), images_.end(), 1u);
}

Perm::Perm(std::vector<unsigned> images) : images_(std::move(images)) {
  if (images_.empty()) throw InvalidPermutation("degree must be at least 1");
  std::vector<bool> seen(images_.size(), false);
  for (unsigned v : images_) {
    if (v < 1 || v > images_.size() || seen[v - 1])
      throw InvalidPermutation("image vector is not a bijection of 1.." +
                               std::to_string(images_.size()));
    seen[v - 1] = true;
  }
}

bool Perm::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

std::vector<unsigned> Perm::moved_points() const {
  std::vector<unsigned> moved;
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1) moved.push_back(i + 1);
  return moved;
}

std::uint64_t Perm::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned v : images_) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) +
                         " and " + std::to_string(q.degree()));
  std::vector<unsigned> images(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i) images[i] = q[p[i + 1]];
  return Perm(std::move(images));
}

Perm inverse(const Perm& p) {
  std::vector<unsigned> images(p.degree());
  for (unsigned i = 1; i <= p.degree(); ++i) images[p[i] - 1] = i;
  return Perm(std::move(images));
}

Perm conjugate(const Perm& p, const Perm& q) {
  // (q^-1 p q)[x] = q(p(q^-1(x))); build directly to avoid two passes.
  if (p.degree() != q.degree())
    throw DegreeMismatch("conjugate: degrees " + std::to_string(p.degree()) +
                         " and " + std::to_string(q.degree()));
  std::vector<unsigned> images(p.degree());
  for (unsigned x = 1; x <= p.degree(); ++x) images[q[x] - 1] = q[p[x]];
  return Perm(std::move(images));
}

Perm commutator(const Perm& p, const Perm& q) {
  return compose(inverse(compose(q, p)), compose(p, q));
}

bool commutes(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("commutes: degrees " + std::to_string(p.degree()) +
                         " and " + std::to_string(q.degree()));
  for (unsigned x = 1; x <= p.degree(); ++x)
    if (q[p[x]] != p[q[x]]) return false;
  return true;
}

Perm parse_cycles(const std::string& text, unsigned degree) {
  if (degree == 0) throw InvalidPermutation("degree must be at least 1");
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 1u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) ||
            text[i] == ','))
      ++i;
  };

  skip_ws();
  if (i < text.size() && text.compare(i, 2, "id") == 0) {
    i += 2;
    skip_ws();
    if (i != text.size()) throw MalformedCycles("trailing text after 'id'");
    return Perm(std::move(images));
  }

  bool any_cycle = false;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(')
      throw MalformedCycles("expected '(' at position " + std::to_string(i));
    ++i;
    std::vector<unsigned> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) throw MalformedCycles("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw MalformedCycles("expected point at position " +
                              std::to_string(i));
      unsigned long v = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        if (v > degree)
          throw PointOutOfRange("point " + std::to_string(v) +
                                " exceeds degree " + std::to_string(degree));
        ++i;
      }
      if (v == 0) throw PointOutOfRange("points are 1-based");
      if (used[v - 1])
        throw MalformedCycles("repeated point " + std::to_string(v));
      used[v - 1] = true;
      cycle.push_back(static_cast<unsigned>(v));
    }
    any_cycle = true;
    for (std::size_t j = 0; j < cycle.size(); ++j)
      images[cycle[j] - 1] = cycle[(j + 1) % cycle.size()];
  }
  if (!any_cycle) throw MalformedCycles("empty permutation text");
  return Perm(std::move(images));
}

std::string format_cycles(const Perm& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.degree(), false);
  bool any = false;
  for (unsigned start = 1; start <= p.degree(); ++start) {
    if (seen[start - 1] || p[start] == start) continue;
    os << '(';
    unsigned x = start;
    bool first = true;
    do {
      if (!first) os << ' ';
      os << x;
      seen[x - 1] = true;
      x = p[x];
      first = false;
    } while (x != start);
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Perm& p) {
  return os << format_cycles(p);
}

}  // namespace quotshrink
