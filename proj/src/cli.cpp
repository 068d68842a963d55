#include "weyl/cli.hpp"

#include <chrono>
#include <ostream>

#include <json.hpp>

#include "weyl/cones.hpp"
#include "weyl/hilbert.hpp"
#include "weyl/linsolve.hpp"

namespace weyl::cli {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> element_texts(const std::vector<Element>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(to_text(e));
  return out;
}

// interreduction of the generators as given (no completion): drop zeros,
// make monic, reduce each against the leading terms of the others until
// nothing changes
std::vector<Element> interreduce(std::vector<Element> gens,
                                 const MonomialOrder& order) {
  auto monic = [&](Element e) {
    auto h = hdt(e, order);
    return h && h->coefficient != 1 ? e.scaled(1 / h->coefficient) : e;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Element> next;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Element g = gens[i];
      bool reduced_any = true;
      while (reduced_any && !g.is_zero()) {
        reduced_any = false;
        for (std::size_t j = 0; j < gens.size() && !reduced_any; ++j) {
          if (i == j || gens[j].is_zero()) continue;
          auto lead = hdt(gens[j], order);
          for (const auto& t : g.terms()) {
            if (!lead->monomial.divides(t.monomial)) continue;
            Monomial cof = lead->monomial.quotient_of(t.monomial);
            Element adj = multiply(
                Element::term(g.ambient().scalar(), cof, 1), gens[j]);
            g = g - adj.scaled(t.coefficient / lead->coefficient);
            reduced_any = true;
            changed = true;
            break;
          }
        }
      }
      if (!g.is_zero()) next.push_back(monic(g));
    }
    gens = std::move(next);
  }
  return gens;
}

ShiftedMatrix matrix_from_problem(const ProblemFile& pf) {
  std::vector<std::vector<Element>> entries;
  for (const auto& g : pf.generators) {
    std::vector<Element> row;
    for (int j = 0; j < pf.ambient.l; ++j) row.push_back(g.component(j));
    entries.push_back(std::move(row));
  }
  if (pf.row_shifts && pf.col_shifts)
    return ShiftedMatrix(std::move(entries), *pf.row_shifts, *pf.col_shifts);
  return ShiftedMatrix::infer(std::move(entries), pf.ambient.scalar());
}

struct CommandContext {
  const Options& options;
  ProblemFile problem;
  MonomialOrder order;
  CompletionLimits limits;
};

Json run_janet(CommandContext& ctx) {
  JanetBasis basis =
      autoreduce(complete(ctx.problem.generators, ctx.order, ctx.limits));
  Json out;
  out["basis"] = element_texts(basis.elements());
  out["complete"] = basis.complete();
  out["reduced"] = basis.reduced();
  out["homogeneous"] = basis.homogeneous();
  return out;
}

Json run_reduce(CommandContext& ctx) {
  Json out;
  out["generators"] =
      element_texts(interreduce(ctx.problem.generators, ctx.order));
  return out;
}

Json run_nf(CommandContext& ctx) {
  if (!ctx.options.element)
    throw ParseError("nf needs --element", 0);
  Element f = parse_vector(*ctx.options.element, ctx.problem.ambient);
  JanetBasis basis =
      complete(ctx.problem.generators, ctx.order, ctx.limits);
  Json out;
  out["normal_form"] = to_text(normal_form(f, basis));
  return out;
}

Json run_homogenize(CommandContext& ctx) {
  std::vector<Element> h;
  for (const auto& g : ctx.problem.generators) h.push_back(homogenize(g));
  Json out;
  out["generators"] = element_texts(h);
  return out;
}

std::vector<Element> homogenized_generators(const CommandContext& ctx) {
  if (ctx.problem.ambient.kind == Algebra::homogenized)
    return ctx.problem.generators;
  std::vector<Element> h;
  for (const auto& g : ctx.problem.generators)
    if (!g.is_zero()) h.push_back(homogenize(g));
  return h;
}

Json run_saturate(CommandContext& ctx) {
  SaturationResult sat =
      saturate_x0(homogenized_generators(ctx), ctx.order, ctx.limits);
  Json out;
  out["exponent"] = sat.exponent;
  out["generators"] = element_texts(sat.generators);
  Json trace = Json::array();
  for (const auto& r : sat.trace)
    trace.push_back(Json{{"basis_size", r.basis_size},
                         {"stripped", r.stripped}});
  out["trace"] = std::move(trace);
  return out;
}

Json run_gr(CommandContext& ctx) {
  SaturationResult sat =
      saturate_x0(homogenized_generators(ctx), ctx.order, ctx.limits);
  Json out;
  out["generators"] = element_texts(gr_generators(sat.generators));
  return out;
}

HilbertSource source_from_string(const std::string& s) {
  if (s == "affine") return HilbertSource::affine;
  if (s == "h") return HilbertSource::homogenized;
  if (s == "c") return HilbertSource::commutative_shadow;
  if (s == "gr") return HilbertSource::graded_associated;
  throw ParseError("source must be one of affine, h, c, gr", 0);
}

int default_mmax(const CommandContext& ctx) {
  long maxdeg = 1;
  for (const auto& g : ctx.problem.generators)
    if (auto d = g.degree()) maxdeg = std::max(maxdeg, *d);
  return static_cast<int>(4 * maxdeg * ctx.problem.ambient.l + 8);
}

Json run_hilbert(CommandContext& ctx, bool with_polynomial) {
  HilbertSource source = source_from_string(ctx.options.source);
  int mmax = ctx.options.mmax.value_or(default_mmax(ctx));
  HilbertData data =
      hilbert_function(ctx.problem.generators, ctx.problem.ambient, source,
                       mmax, ctx.order, ctx.limits);
  Json out;
  out["source"] = ctx.options.source;
  out["mmax"] = mmax;
  out["values"] = data.values;
  if (with_polynomial) {
    auto poly = hilbert_polynomial(data);
    if (poly) {
      std::vector<std::string> coeffs;
      for (const auto& c : poly->coefficients) coeffs.push_back(c.get_str());
      out["coefficients"] = coeffs;
      out["stabilization"] = poly->stabilization_index;
    } else {
      out["stabilization"] = "unstable";
    }
  }
  return out;
}

Json run_macaulay(CommandContext& ctx) {
  const Ambient& amb = ctx.problem.ambient;
  if (amb.kind != Algebra::homogenized)
    throw ParseError("macaulay expects algebra hA (variables x0..xn)", 0);
  // one monomial ideal per module position, in the X variables only
  std::vector<std::vector<std::vector<int>>> ideals(amb.l);
  for (const auto& g : ctx.problem.generators)
    for (int p = 0; p < amb.l; ++p) {
      Element comp = g.component(p);
      if (comp.is_zero()) continue;
      if (comp.term_count() != 1)
        throw ParseError("macaulay generators must be monomials", 0);
      const Monomial& m = comp.terms().front().monomial;
      for (int v = 0; v < amb.n; ++v)
        if (m.d[v] != 0)
          throw ParseError("macaulay generators live in F[x0..xn]", 0);
      std::vector<int> expo(amb.n + 1);
      expo[0] = m.x0;
      for (int v = 0; v < amb.n; ++v) expo[v + 1] = m.x[v];
      ideals[p].push_back(std::move(expo));
    }
  Json out;
  Json per = Json::array();
  for (int p = 0; p < amb.l; ++p) {
    MacaulayConstants c = macaulay_constants(ideals[p], amb.n + 1);
    per.push_back(Json{{"summand", p + 1}, {"constants", c.b}});
  }
  out["summands"] = std::move(per);
  return out;
}

Json run_kernel(CommandContext& ctx) {
  ShiftedMatrix b = matrix_from_problem(ctx.problem);
  DependenceQuery q;
  if (ctx.options.cap_degree) q.degree_cap = *ctx.options.cap_degree;
  Element z = graded_kernel(b, q);
  Json out;
  out["vector"] = to_text(z);
  return out;
}

Json run_solve(CommandContext& ctx, int& exit_code) {
  ShiftedMatrix b = matrix_from_problem(ctx.problem);
  if (!ctx.problem.rhs)
    throw ParseError("solve needs an rhs line in the problem file", 0);
  std::optional<long> cap;
  if (ctx.options.cap_degree) cap = *ctx.options.cap_degree;
  SolveOutcome outcome = solve_system(b, *ctx.problem.rhs, cap);
  Json out;
  if (auto* sol = std::get_if<SolutionSet>(&outcome)) {
    out["status"] = "solved";
    out["particular"] = to_text(sol->particular);
    out["kernel"] = element_texts(sol->kernel_generators);
    out["certified_degree"] = sol->certified_degree;
    out["ord_deficit"] = sol->ord_deficit;
  } else {
    auto& uns = std::get<Unsolvable>(outcome);
    out["status"] = "unsolvable";
    out["layer"] = uns.layer;
    out["certificate"] = uns.reason;
    exit_code = kExitUnsolvable;
  }
  return out;
}

Json run_cones(CommandContext& ctx) {
  const Ambient& amb = ctx.problem.ambient;
  ConeIdeal ideal;
  ideal.n = amb.n;
  ideal.l = amb.l;
  for (const auto& g : ctx.problem.generators)
    for (int p = 0; p < amb.l; ++p) {
      Element comp = g.component(p);
      if (comp.is_zero()) continue;
      if (comp.term_count() != 1)
        throw ParseError("cones generators must be monomials", 0);
      const Monomial& m = comp.terms().front().monomial;
      if (m.x0 != 0) throw ParseError("cones generators avoid x0", 0);
      for (int v = 0; v < amb.n; ++v)
        if (m.d[v] != 0)
          throw ParseError("cones generators live in F[x1..xn]", 0);
      std::vector<int> expo(amb.n);
      for (int v = 0; v < amb.n; ++v) expo[v] = m.x[v];
      ideal.generators.emplace_back(p, std::move(expo));
    }
  ConeDecomposition dec = decompose(ideal);
  Semilattice lat = epsilon_coefficients(dec.cones);
  long zmax = ctx.options.zmax.value_or(20);

  Json out;
  out["m"] = dec.m;
  out["t"] = dec.t_count;
  out["k"] = dec.k_degree;
  Json cones_json = Json::array();
  for (std::size_t i = 0; i < dec.cones.size(); ++i) {
    Json c;
    c["copy"] = dec.cones[i].copy + 1;
    Json fixed = Json::array();
    for (auto& [coord, value] : dec.cones[i].fixed)
      fixed.push_back(Json{{"x", coord + 1}, {"value", value}});
    c["fixed"] = std::move(fixed);
    c["stage"] = dec.stage[i];
    cones_json.push_back(std::move(c));
  }
  out["cones"] = std::move(cones_json);
  Json eps = Json::array();
  for (std::size_t i = 0; i < lat.pieces.size(); ++i) {
    Json p;
    p["copy"] = lat.pieces[i].copy + 1;
    Json fixed = Json::array();
    for (auto& [coord, value] : lat.pieces[i].fixed)
      fixed.push_back(Json{{"x", coord + 1}, {"value", value}});
    p["fixed"] = std::move(fixed);
    p["epsilon"] = lat.epsilon[i];
    eps.push_back(std::move(p));
  }
  out["pieces"] = std::move(eps);
  std::vector<long> hvals;
  for (long z = 0; z <= zmax; ++z)
    hvals.push_back(hilbert_from_cones(lat, amb.n, z));
  out["hilbert"] = hvals;
  return out;
}

void emit(const Json& doc, const Options& options, std::ostream& out) {
  if (options.format == "json") {
    out << doc.dump(2) << "\n";
    return;
  }
  // text format: flat key/value rendering
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    out << it.key() << ": ";
    if (it->is_string())
      out << it->get<std::string>();
    else
      out << it->dump();
    out << "\n";
  }
}

}  // namespace

int run_command(const Options& options, const std::string& problem_text,
                std::ostream& out, std::ostream& err) {
  auto started = std::chrono::steady_clock::now();
  try {
    ProblemFile pf = parse_problem(problem_text);
    MonomialOrder order =
        options.order_spec
            ? parse_order_spec(*options.order_spec, pf.ambient.n,
                               pf.ambient.l)
            : pf.order.value_or(
                  MonomialOrder::deglex(pf.ambient.n, pf.ambient.l));
    if (pf.ambient.kind == Algebra::homogenized) order = order.induced();
    CompletionLimits limits;
    if (options.cap_degree) limits.max_degree = *options.cap_degree;
    if (options.cap_size) limits.max_basis_size = *options.cap_size;

    CommandContext ctx{options, std::move(pf), order, limits};

    Json result;
    int exit_code = kExitOk;
    const std::string& cmd = options.command;
    if (cmd == "janet")
      result = run_janet(ctx);
    else if (cmd == "reduce")
      result = run_reduce(ctx);
    else if (cmd == "nf")
      result = run_nf(ctx);
    else if (cmd == "homogenize")
      result = run_homogenize(ctx);
    else if (cmd == "saturate")
      result = run_saturate(ctx);
    else if (cmd == "gr")
      result = run_gr(ctx);
    else if (cmd == "hilbert")
      result = run_hilbert(ctx, false);
    else if (cmd == "hpoly")
      result = run_hilbert(ctx, true);
    else if (cmd == "macaulay")
      result = run_macaulay(ctx);
    else if (cmd == "solve")
      result = run_solve(ctx, exit_code);
    else if (cmd == "kernel")
      result = run_kernel(ctx);
    else if (cmd == "cones")
      result = run_cones(ctx);
    else {
      err << "unknown command: " << cmd << "\n";
      return kExitUsage;
    }

    Json doc;
    doc["schema"] = "v1";
    doc["command"] = cmd;
    doc["input"] = Json{{"digest", ctx.problem.digest},
                        {"algebra", ctx.problem.ambient.kind ==
                                            Algebra::homogenized
                                        ? "hA"
                                        : "A"},
                        {"n", ctx.problem.ambient.n},
                        {"l", ctx.problem.ambient.l},
                        {"order", order_spec_text(ctx.order)}};
    doc["params"] = Json{{"seed", options.seed},
                         {"cap_degree", limits.max_degree},
                         {"cap_size", limits.max_basis_size}};
    doc["output"] = std::move(result);
    doc["status"] = exit_code == kExitUnsolvable ? "unsolvable" : "ok";
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    doc["timing_ms"] = elapsed;
    emit(doc, options, out);
    return exit_code;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace weyl::cli
