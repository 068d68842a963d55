#include <doctest.h>

#include "helpers.hpp"
#include "weyl/text.hpp"

using namespace weyl;

namespace {
const Ambient A1{Algebra::weyl, 1, 1};
const Ambient H1{Algebra::homogenized, 1, 1};
}  // namespace

TEST_CASE("documented parses") {
  CHECK(parse_element("x1*d1 + 1", A1) ==
        multiply(Element::x(A1, 0), Element::d(A1, 0)) +
            Element::constant(A1, 1));
  // normalization happens on parse
  CHECK(parse_element("d1*x1", A1) == parse_element("x1*d1 + 1", A1));
  CHECK(parse_element("x0^2 - x0^2", H1).is_zero());
}

TEST_CASE("parser errors carry positions") {
  CHECK_THROWS_AS(parse_element("x1 +", A1), ParseError);
  CHECK_THROWS_AS(parse_element("x3", Ambient{Algebra::weyl, 2, 1}),
                  ParseError);
  CHECK_THROWS_AS(parse_element("x0", A1), ParseError);  // no X0 in A
  CHECK_THROWS_AS(parse_element("d1^99999999", A1), ParseError);
  CHECK_THROWS_AS(parse_element("1/0", A1), ParseError);
  CHECK_THROWS_AS(parse_element("x1 x1", A1), ParseError);  // no juxtaposition
  CHECK_THROWS_AS(parse_vector("[x1, d1, 1]", Ambient{Algebra::weyl, 1, 2}),
                  ParseError);
}

TEST_CASE("print-parse round-trip") {
  SplitMix64 rng(71);
  for (int n : {1, 2})
    for (int l : {1, 2})
      for (Algebra kind : {Algebra::weyl, Algebra::homogenized}) {
        Ambient amb{kind, n, l};
        for (int rep = 0; rep < 40; ++rep) {
          Element e = testing::random_element(rng, amb, 4, 5);
          CHECK(parse_vector(to_text(e), amb) == e);
        }
      }
  CHECK(to_text(Element::zero(A1)) == "0");
  CHECK(to_text(parse_element("x1*d1 + 1", A1)) == "x1*d1 + 1");
  CHECK(to_text(parse_element("-x1 - 1/2", A1)) == "-x1 - 1/2");
}

TEST_CASE("problem files parse") {
  ProblemFile pf = parse_problem(
      "# sample\n"
      "algebra A\n"
      "n 1\n"
      "l 2\n"
      "order deglex;module=TOP\n"
      "gen [d1, 0]\n"
      "gen [0, x1]\n");
  CHECK(pf.ambient == Ambient{Algebra::weyl, 1, 2});
  REQUIRE(pf.generators.size() == 2);
  CHECK(pf.order.has_value());
  CHECK(!pf.digest.empty());
  CHECK_THROWS_AS(parse_problem("algebra A\nl 1\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("algebra Q\nn 1\nl 1\n"), ParseError);
}
