#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "weyl/order.hpp"

namespace weyl {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at offset " +
                           std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// Expression grammar: variables x0, x1..xn, d1..dn; rational literals a/b;
// operators + - * ^ with explicit multiplication only; parentheses.
// Multiplication is the noncommutative product, parsed left-associative and
// normalized immediately.
Element parse_element(std::string_view text, Ambient scalar_ambient);

// "[f1, ..., fl]"; a bare scalar expression is accepted when l = 1
Element parse_vector(std::string_view text, Ambient ambient);

// canonical text form; parse(to_text(e)) == e
std::string to_text(const Element& e);
std::string to_text(const Monomial& m, const Ambient& ambient);

// "degrevlex;vars=x1<x2<d1<d2;module=TOP;pos=1>2": base order, variable
// precedence (least first), module mode, position precedence (greatest
// first). Every component after the base is optional.
MonomialOrder parse_order_spec(std::string_view text, int n, int l);
std::string order_spec_text(const MonomialOrder& order);

struct ProblemFile {
  Ambient ambient;
  std::optional<MonomialOrder> order;
  std::vector<Element> generators;
  std::optional<Element> rhs;
  std::optional<std::vector<int>> row_shifts;
  std::optional<std::vector<int>> col_shifts;
  std::string digest;  // FNV-1a hash of the source text, hex
};

// Line-oriented problem format: "algebra A|hA", "n <int>", "l <int>",
// optional "order <spec>", repeated "gen <vector>", optional "rhs <vector>",
// optional "rowshifts ..."/"colshifts ...". '#' starts a comment.
ProblemFile parse_problem(const std::string& text);

std::string fnv1a_hex(std::string_view text);

}  // namespace weyl
