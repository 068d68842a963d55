#include "weyl/text.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace weyl {

namespace {

constexpr long kMaxExponent = 1000000;

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
      ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c))
      throw ParseError(std::string("expected '") + c + "'", pos);
  }
  long number() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected a number", pos);
    long value = 0;
    auto res = std::from_chars(text.data() + start, text.data() + pos, value);
    if (res.ec != std::errc() || value > kMaxExponent)
      throw ParseError("number out of range", start);
    return value;
  }
};

class ElementParser {
 public:
  ElementParser(std::string_view text, Ambient amb) : sc_{text}, amb_(amb) {}

  Element parse() {
    Element e = expression();
    if (!sc_.done()) throw ParseError("trailing input", sc_.pos);
    return e;
  }

  Element expression() {
    bool negative = sc_.consume('-');
    Element acc = term();
    if (negative) acc = -acc;
    for (;;) {
      if (sc_.consume('+'))
        acc = acc + term();
      else if (sc_.consume('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  std::size_t position() { return sc_.pos; }

 private:
  Element term() {
    Element acc = factor();
    while (sc_.consume('*')) acc = multiply(acc, factor());
    return acc;
  }

  Element factor() {
    Element base = atom();
    if (sc_.consume('^')) {
      long e = sc_.number();
      Element acc = Element::constant(amb_, 1);
      for (long i = 0; i < e; ++i) acc = multiply(acc, base);
      return acc;
    }
    return base;
  }

  Element atom() {
    char c = sc_.peek();
    if (c == '(') {
      sc_.expect('(');
      Element e = expression();
      sc_.expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = sc_.number();
      if (sc_.consume('/')) {
        std::size_t at = sc_.pos;
        long den = sc_.number();
        if (den == 0) throw ParseError("zero denominator", at);
        return Element::constant(amb_, rat(num, den));
      }
      return Element::constant(amb_, Rational(num));
    }
    if (c == 'x' || c == 'd') {
      std::size_t at = sc_.pos;
      ++sc_.pos;
      long idx = sc_.number();
      if (c == 'x') {
        if (idx == 0) {
          if (!amb_.uses_x0())
            throw ParseError("x0 is not a variable of this algebra", at);
          return Element::x0(amb_);
        }
        if (idx > amb_.n) throw ParseError("unknown variable", at);
        return Element::x(amb_, static_cast<int>(idx) - 1);
      }
      if (idx == 0 || idx > amb_.n) throw ParseError("unknown variable", at);
      return Element::d(amb_, static_cast<int>(idx) - 1);
    }
    throw ParseError("expected a term", sc_.pos);
  }

  Scanner sc_;
  Ambient amb_;
};

std::string coefficient_text(const Rational& c) { return c.get_str(); }

std::string monomial_body(const Monomial& m) {
  std::string out;
  auto append = [&out](const std::string& var, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  };
  append("x0", m.x0);
  for (int v = 0; v < m.x.size(); ++v)
    append("x" + std::to_string(v + 1), m.x[v]);
  for (int v = 0; v < m.d.size(); ++v)
    append("d" + std::to_string(v + 1), m.d[v]);
  return out;
}

std::string scalar_text(const Element& e) {
  if (e.is_zero()) return "0";
  // display order: degree descending, then structural descending
  std::vector<const Term*> terms;
  for (const auto& t : e.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(), [](const Term* a, const Term* b) {
    long da = a->monomial.degree(), db = b->monomial.degree();
    if (da != db) return da > db;
    return structural_compare(a->monomial, b->monomial) > 0;
  });
  std::string out;
  for (const Term* t : terms) {
    Rational c = t->coefficient;
    bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string body = monomial_body(t->monomial);
    if (body.empty())
      out += coefficient_text(c);
    else if (c == 1)
      out += body;
    else
      out += coefficient_text(c) + "*" + body;
  }
  return out;
}

}  // namespace

Element parse_element(std::string_view text, Ambient scalar_ambient) {
  if (scalar_ambient.l != 1)
    throw AmbientError("parse_element: ambient must be scalar");
  return ElementParser(text, scalar_ambient).parse();
}

Element parse_vector(std::string_view text, Ambient ambient) {
  Scanner sc{text};
  if (sc.peek() != '[') {
    if (ambient.l != 1)
      throw ParseError("expected '[' for a vector of rank > 1", sc.pos);
    return parse_element(text, ambient);
  }
  sc.expect('[');
  std::vector<Element> comps;
  Ambient scalar = ambient.scalar();
  if (sc.peek() != ']') {
    for (;;) {
      // parse the component up to the next ',' or ']' at depth zero
      std::size_t start = sc.pos;
      int depth = 0;
      std::size_t i = start;
      for (; i < text.size(); ++i) {
        if (text[i] == '(' || text[i] == '[') ++depth;
        if (text[i] == ')' || text[i] == ']') {
          if (text[i] == ']' && depth == 0) break;
          --depth;
        }
        if (text[i] == ',' && depth == 0) break;
      }
      if (i >= text.size()) throw ParseError("unterminated vector", start);
      comps.push_back(
          parse_element(text.substr(start, i - start), scalar));
      sc.pos = i;
      if (sc.consume(',')) continue;
      break;
    }
  }
  sc.expect(']');
  if (!sc.done()) throw ParseError("trailing input", sc.pos);
  if (static_cast<int>(comps.size()) != ambient.l)
    throw ParseError("vector length does not match l", 0);
  Element out(ambient);
  for (int p = 0; p < ambient.l; ++p)
    out = out + comps[p].at_position(p, ambient.l);
  return out;
}

std::string to_text(const Element& e) {
  if (e.ambient().l == 1) return scalar_text(e);
  std::string out = "[";
  for (int p = 0; p < e.ambient().l; ++p) {
    if (p) out += ", ";
    out += scalar_text(e.component(p));
  }
  return out + "]";
}

std::string to_text(const Monomial& m, const Ambient& ambient) {
  std::string body = monomial_body(m);
  if (body.empty()) body = "1";
  if (ambient.l == 1) return body;
  return body + "@" + std::to_string(m.pos + 1);
}

MonomialOrder parse_order_spec(std::string_view text, int n, int l) {
  std::vector<std::string> parts;
  std::size_t at = 0;
  while (at <= text.size()) {
    std::size_t semi = text.find(';', at);
    if (semi == std::string_view::npos) semi = text.size();
    parts.emplace_back(text.substr(at, semi - at));
    at = semi + 1;
  }
  if (parts.empty()) throw ParseError("empty order spec", 0);
  OrderBase base;
  if (parts[0] == "deglex")
    base = OrderBase::deglex;
  else if (parts[0] == "degrevlex")
    base = OrderBase::degrevlex;
  else
    throw ParseError("unknown order base '" + parts[0] + "'", 0);

  ModuleMode mode = ModuleMode::top;
  std::vector<int> precedence, positions;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    if (p.empty()) continue;
    auto eq = p.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected key=value in order spec", 0);
    std::string key = p.substr(0, eq), value = p.substr(eq + 1);
    if (key == "module") {
      if (value == "TOP")
        mode = ModuleMode::top;
      else if (value == "POT")
        mode = ModuleMode::pot;
      else
        throw ParseError("module must be TOP or POT", 0);
    } else if (key == "vars") {
      std::size_t v = 0;
      while (v <= value.size()) {
        std::size_t lt = value.find('<', v);
        if (lt == std::string::npos) lt = value.size();
        std::string var = value.substr(v, lt - v);
        if (var.size() < 2 || (var[0] != 'x' && var[0] != 'd'))
          throw ParseError("bad variable '" + var + "' in order spec", 0);
        int idx = std::stoi(var.substr(1));
        if (idx < 1 || idx > n)
          throw ParseError("variable index out of range in order spec", 0);
        precedence.push_back(var[0] == 'x' ? idx - 1 : n + idx - 1);
        v = lt + 1;
      }
    } else if (key == "pos") {
      std::size_t v = 0;
      while (v <= value.size()) {
        std::size_t gt = value.find('>', v);
        if (gt == std::string::npos) gt = value.size();
        int idx = std::stoi(value.substr(v, gt - v));
        if (idx < 1 || idx > l)
          throw ParseError("position out of range in order spec", 0);
        positions.push_back(idx - 1);
        v = gt + 1;
      }
    } else {
      throw ParseError("unknown order spec key '" + key + "'", 0);
    }
  }
  return MonomialOrder(base, n, l, mode, std::move(precedence),
                       std::move(positions));
}

std::string order_spec_text(const MonomialOrder& order) {
  std::string out =
      order.base() == OrderBase::deglex ? "deglex" : "degrevlex";
  out += ";vars=";
  for (std::size_t i = 0; i < order.precedence().size(); ++i) {
    int v = order.precedence()[i];
    if (i) out += "<";
    out += v < order.n() ? "x" + std::to_string(v + 1)
                         : "d" + std::to_string(v - order.n() + 1);
  }
  out += ";module=";
  out += order.module_mode() == ModuleMode::top ? "TOP" : "POT";
  out += ";pos=";
  for (std::size_t i = 0; i < order.positions_desc().size(); ++i) {
    if (i) out += ">";
    out += std::to_string(order.positions_desc()[i] + 1);
  }
  return out;
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ProblemFile parse_problem(const std::string& text) {
  ProblemFile pf;
  pf.digest = fnv1a_hex(text);
  std::optional<Algebra> algebra;
  std::optional<int> n, l;
  std::optional<std::string> order_spec;
  std::vector<std::string> gen_lines;
  std::optional<std::string> rhs_line;

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string rest;
    std::getline(ls, rest);
    auto first = rest.find_first_not_of(" \t");
    rest = first == std::string::npos ? "" : rest.substr(first);
    auto last = rest.find_last_not_of(" \t\r");
    if (last != std::string::npos) rest = rest.substr(0, last + 1);

    if (key == "algebra") {
      if (rest == "A")
        algebra = Algebra::weyl;
      else if (rest == "hA")
        algebra = Algebra::homogenized;
      else
        throw ParseError("algebra must be A or hA", 0);
    } else if (key == "n") {
      n = std::stoi(rest);
    } else if (key == "l") {
      l = std::stoi(rest);
    } else if (key == "order") {
      order_spec = rest;
    } else if (key == "gen") {
      gen_lines.push_back(rest);
    } else if (key == "rhs") {
      rhs_line = rest;
    } else if (key == "rowshifts" || key == "colshifts") {
      std::istringstream ss(rest);
      std::vector<int> shifts;
      int v;
      while (ss >> v) shifts.push_back(v);
      (key == "rowshifts" ? pf.row_shifts : pf.col_shifts) = shifts;
    } else {
      throw ParseError("unknown problem key '" + key + "'", 0);
    }
  }
  if (!algebra || !n || !l)
    throw ParseError("problem file needs algebra, n and l", 0);
  if (*n < 1 || *l < 1) throw ParseError("n and l must be positive", 0);
  pf.ambient = Ambient{*algebra, *n, *l};
  if (order_spec) pf.order = parse_order_spec(*order_spec, *n, *l);
  for (const auto& g : gen_lines)
    pf.generators.push_back(parse_vector(g, pf.ambient));
  if (rhs_line) pf.rhs = parse_vector(*rhs_line, pf.ambient);
  return pf;
}

}  // namespace weyl
