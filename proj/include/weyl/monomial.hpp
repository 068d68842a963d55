#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "weyl/algebra.hpp"

namespace weyl {

// Exponent vector of fixed length n, entries >= 0. Sums are computed in
// long to keep |i| safe from overflow at any reachable scale.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(int n) : e_(n, 0) {}
  MultiIndex(std::initializer_list<int> e) : e_(e) {}

  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int v) const { return e_[v]; }
  int& operator[](int v) { return e_[v]; }

  long sum() const {
    long s = 0;
    for (int x : e_) s += x;
    return s;
  }

  bool divides(const MultiIndex& o) const {
    for (int v = 0; v < size(); ++v)
      if (e_[v] > o.e_[v]) return false;
    return true;
  }

  MultiIndex operator+(const MultiIndex& o) const {
    MultiIndex r = *this;
    for (int v = 0; v < size(); ++v) r.e_[v] += o.e_[v];
    return r;
  }
  // componentwise difference; caller guarantees divisibility
  MultiIndex operator-(const MultiIndex& o) const {
    MultiIndex r = *this;
    for (int v = 0; v < size(); ++v) r.e_[v] -= o.e_[v];
    return r;
  }
  static MultiIndex max(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r = a;
    for (int v = 0; v < r.size(); ++v)
      if (b.e_[v] > r.e_[v]) r.e_[v] = b.e_[v];
    return r;
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a,
                                          const MultiIndex& b) {
    return a.e_ <=> b.e_;
  }

 private:
  std::vector<int> e_;
};

// A module monomial e_{pos, x0, x, d} = (0,..,0, X0^x0 X^x D^d, 0,..,0).
// Plain Weyl monomials keep x0 = 0. Positions are 0-based internally.
struct Monomial {
  int pos = 0;
  int x0 = 0;
  MultiIndex x, d;

  Monomial() = default;
  explicit Monomial(int n) : x(n), d(n) {}

  long degree() const { return x0 + x.sum() + d.sum(); }

  // same position and componentwise <= on (x0, x, d)
  bool divides(const Monomial& o) const {
    return pos == o.pos && x0 <= o.x0 && x.divides(o.x) && d.divides(o.d);
  }

  // exponentwise quotient as a scalar monomial (position dropped)
  Monomial quotient_of(const Monomial& o) const {
    Monomial q;
    q.pos = 0;
    q.x0 = o.x0 - x0;
    q.x = o.x - x;
    q.d = o.d - d;
    return q;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.pos = a.pos;
    r.x0 = a.x0 > b.x0 ? a.x0 : b.x0;
    r.x = MultiIndex::max(a.x, b.x);
    r.d = MultiIndex::max(a.d, b.d);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Fixed structural order, independent of any admissible order; used only for
// canonical term storage so element equality is plain structural equality.
inline std::strong_ordering structural_compare(const Monomial& a,
                                               const Monomial& b) {
  if (auto c = a.pos <=> b.pos; c != 0) return c;
  if (auto c = a.x0 <=> b.x0; c != 0) return c;
  if (auto c = a.x <=> b.x; c != 0) return c;
  return a.d <=> b.d;
}

struct MonomialStructLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return structural_compare(a, b) < 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::size_t>(m.pos));
    mix(static_cast<std::size_t>(m.x0));
    for (int v = 0; v < m.x.size(); ++v) mix(static_cast<std::size_t>(m.x[v]));
    for (int v = 0; v < m.d.size(); ++v) mix(static_cast<std::size_t>(m.d[v]));
    return h;
  }
};

}  // namespace weyl
