#pragma once

#include <span>
#include <vector>

#include "weyl/janet.hpp"
#include "weyl/linalg.hpp"

namespace weyl {

// z |-> hz: every term is padded with the X0 power that lifts it to the
// total degree of z; vectors pad across components against the maximum.
Element homogenize(const Element& z);
// joint homogenization of several vectors against their common degree
// (a matrix read as one long vector)
std::vector<Element> homogenize_jointly(std::span<const Element> rows);
// substitute X0 = 1
Element dehomogenize(const Element& z);

struct GradedPieceBasis {
  long degree = 0;
  std::vector<Element> basis;  // F-basis of the degree-m piece
  long dimension() const { return static_cast<long>(basis.size()); }
};

// F-basis of the degree-m homogeneous piece of the module generated by
// homogeneous elements: the row space of all monomial left multiples.
// Works over hA and over the commutative twin.
GradedPieceBasis graded_piece(std::span<const Element> generators, long m);

// top-degree forms of the dehomogenizations, as elements of the commutative
// polynomial module; input must generate the full homogenized module
// (take SaturationResult::generators).
std::vector<Element> gr_generators(std::span<const Element> saturated);

struct SaturationRound {
  int basis_size = 0;
  int stripped = 0;  // X0 power removed in this round, summed over elements
};

struct SaturationResult {
  int exponent;                      // N with J : X0^N stable = full module
  std::vector<Element> generators;   // reduced basis of the saturated module
  std::vector<SaturationRound> trace;
  // complete basis of the input module, kept for membership certificates
  JanetBasis input_basis;
};

// X0-saturation J0 : X0^infinity by the strip-and-recomplete fixpoint.
// The completion loop runs under a term-over-position twin of the given
// order (the divisibility argument that certifies the fixpoint needs the
// X0-degree of a leading monomial to equal the X0-order of its element,
// which holds exactly for term-over-position modes with a degree-compatible
// base); the returned generators generate the saturation as a module, which
// is order-free. The exponent is certified per generator by normal-form
// membership of generator * X0^nu in the input module.
SaturationResult saturate_x0(std::vector<Element> generators,
                             const MonomialOrder& order,
                             CompletionLimits limits = {});

}  // namespace weyl
