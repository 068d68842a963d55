#pragma once

#include <vector>

#include "weyl/order.hpp"

namespace weyl {

struct CompletionLimits {
  int max_degree = 64;      // cap on the degree of any basis element
  int max_basis_size = 4096;
};

// A Janet basis of a submodule of A^l or hA^l: the leading monomials of a
// complete basis generate the leading-term module. A reduced basis is in
// addition minimal, sorted by strictly descending leading monomial, monic,
// and mutually irreducible; it is the unique such basis of the module.
class JanetBasis {
 public:
  JanetBasis(std::vector<Element> elements, MonomialOrder order, bool complete,
             bool reduced, bool homogeneous)
      : elements_(std::move(elements)),
        order_(std::move(order)),
        complete_(complete),
        reduced_(reduced),
        homogeneous_(homogeneous) {}

  const std::vector<Element>& elements() const { return elements_; }
  const MonomialOrder& order() const { return order_; }
  bool complete() const { return complete_; }
  bool reduced() const { return reduced_; }
  bool homogeneous() const { return homogeneous_; }
  int size() const { return static_cast<int>(elements_.size()); }

 private:
  std::vector<Element> elements_;
  MonomialOrder order_;
  bool complete_ = false;
  bool reduced_ = false;
  bool homogeneous_ = false;
};

// The unique representative of f modulo the module whose support avoids the
// leading-term module. Requires a complete basis.
Element normal_form(const Element& f, const JanetBasis& basis);

// Buchberger-style completion adapted to the Weyl commutation rule: pairs of
// elements with leading monomials at the same position are resolved through
// the exponentwise least common multiple; commutator corrections fall
// strictly below the product monomial, so vanishing of all pair remainders
// certifies completeness. Pair selection is lowest lcm degree first with a
// FIFO tie-break.
JanetBasis complete(std::vector<Element> generators, MonomialOrder order,
                    CompletionLimits limits = {});

// Minimal, monic, sorted, mutually irreducible basis of the same module.
JanetBasis autoreduce(const JanetBasis& basis);

}  // namespace weyl
