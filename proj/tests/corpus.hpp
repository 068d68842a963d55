#pragma once

#include <vector>

#include "weyl/text.hpp"

namespace weyl::testing {

struct CorpusInstance {
  const char* name;
  int n, l;
  const char* order;
  std::vector<const char*> generators;
};

// Fixed instance set: n <= 2, l <= 2, generator degrees <= 3, covering
// principal ideals, the unit ideal, inhomogeneous operators, rank-2 modules
// and both module modes.
inline const std::vector<CorpusInstance>& corpus() {
  static const std::vector<CorpusInstance> instances = {
      {"principal-d", 1, 1, "deglex", {"d1"}},
      {"principal-x", 1, 1, "deglex", {"x1"}},
      {"unit-ideal", 1, 1, "deglex", {"d1", "x1"}},
      {"euler-plus-one", 1, 1, "deglex", {"x1*d1 + 1"}},
      {"euler", 1, 1, "degrevlex", {"x1*d1"}},
      {"mixed-pair", 1, 1, "deglex", {"d1^2", "x1*d1 - 1"}},
      {"pushed-x", 1, 1, "degrevlex", {"x1^2*d1 + 2*x1"}},
      {"squares", 1, 1, "deglex", {"x1^2", "d1^2"}},
      {"rational-coef", 1, 1, "deglex", {"x1*d1 + 3/2"}},
      {"airy", 1, 1, "deglex", {"d1^2 - x1"}},
      {"wave-1d", 1, 1, "degrevlex", {"d1^2 - x1^2"}},
      {"degree-two-full", 1, 1, "deglex", {"x1^2", "x1*d1", "d1^2"}},
      {"zero-generator", 1, 1, "deglex", {"0", "d1"}},
      {"partials", 2, 1, "deglex", {"d1", "d2"}},
      {"skew-term", 2, 1, "deglex", {"x1*d2"}},
      {"laplace-euler", 2, 1, "degrevlex",
       {"d1^2 + d2^2", "x1*d1 + x2*d2"}},
      {"euler-2d", 2, 1, "deglex", {"x1*d1 + x2*d2 + 2"}},
      {"cross-terms", 2, 1, "deglex", {"x2*d1", "x1*d2"}},
      {"linear-pair", 2, 1, "degrevlex", {"d1 - d2", "x1 + x2"}},
      {"module-diag", 1, 2, "deglex;module=TOP", {"[d1, 0]", "[0, x1]"}},
      {"module-syzygy", 1, 2, "deglex;module=TOP", {"[d1, x1]"}},
      {"module-pot", 1, 2, "deglex;module=POT;pos=1>2", {"[x1*d1, 1]"}},
      {"module-tail", 1, 2, "degrevlex;module=TOP", {"[d1, 1]", "[0, d1^2]"}},
      {"module-2d", 2, 2, "deglex;module=TOP", {"[d1, d2]"}},
  };
  return instances;
}

inline Ambient corpus_ambient(const CorpusInstance& c) {
  return Ambient{Algebra::weyl, c.n, c.l};
}

inline std::vector<Element> corpus_generators(const CorpusInstance& c) {
  std::vector<Element> gens;
  Ambient amb = corpus_ambient(c);
  for (const char* g : c.generators) gens.push_back(parse_vector(g, amb));
  return gens;
}

inline MonomialOrder corpus_order(const CorpusInstance& c) {
  return parse_order_spec(c.order, c.n, c.l);
}

}  // namespace weyl::testing
