#pragma once

#include <map>
#include <optional>
#include <vector>

#include "weyl/algebra.hpp"

namespace weyl {

// Monomial ideal of C_l, the disjoint union of l copies of Z_+^n; each
// generator is an exponent vector in one copy.
struct ConeIdeal {
  int n = 1;
  int l = 1;
  std::vector<std::pair<int, std::vector<int>>> generators;  // (copy, expo)
};

// An s-cone: one copy of Z_+^n with n - s coordinates pinned to values.
struct Cone {
  int copy = 0;
  std::vector<std::pair<int, int>> fixed;  // (coordinate, value), ascending

  int dim(int n) const { return n - static_cast<int>(fixed.size()); }
  long degree() const {
    long s = 0;
    for (auto& [c, v] : fixed) s += v;
    return s;
  }
  // set containment: every constraint of the outer cone is pinned
  // identically in the inner one
  bool contains(const Cone& inner) const;
  bool contains_point(int copy_idx, const std::vector<int>& point) const;

  friend bool operator==(const Cone&, const Cone&) = default;
  friend auto operator<=>(const Cone&, const Cone&) = default;
};

struct ConeDecomposition {
  ConeIdeal ideal;
  int m = 0;                          // degree of the Hilbert polynomial of T
  std::vector<Cone> cones;            // construction order
  std::vector<int> stage;             // dimension s at which each was added
  std::vector<long> t_count;          // t_s, indexed by s = 0..m
  std::vector<long> k_degree;         // k_s, max degree per stage (0 if none)
};

// Greedy cone decomposition of the complement T: for s = m down to 0 keep
// adding the least s-cone contained in T and not inside any earlier cone.
// The cone order is degree, then copy, then fixed coordinate set, then
// values, all lexicographic; every predecessor of an added cone is covered
// by a strictly earlier cone.
ConeDecomposition decompose(const ConeIdeal& ideal);

struct Semilattice {
  std::vector<Cone> pieces;        // closure under intersection, maximal first
  std::vector<long> epsilon;       // inclusion-exclusion coefficient per piece
  std::vector<int> piece_copy;     // copy index per piece
};

// Coefficients making the weighted multiset of pieces equal the union of the
// cones: maximal pieces get 1, every other piece completes the sum over its
// strict supersets to 1.
Semilattice epsilon_coefficients(const std::vector<Cone>& cones);

// number of points u of the decomposed set with |u| <= z, through the
// inclusion-exclusion identity; exact for every z >= 0
long hilbert_from_cones(const Semilattice& lattice, int n, long z);

// direct count of {u in T : |u| <= z} for cross-checks
long complement_count(const ConeIdeal& ideal, long z);

bool cone_in_complement(const ConeIdeal& ideal, const Cone& cone);

}  // namespace weyl
