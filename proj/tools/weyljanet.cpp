#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "weyl/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "weyljanet: Janet bases, Hilbert functions and graded linear algebra "
      "over the Weyl algebra and its homogenization"};
  app.require_subcommand(1);

  weyl::cli::Options options;
  std::string problem_path;

  const std::vector<std::string> commands = {
      "janet", "reduce",   "nf",    "homogenize", "saturate", "gr",
      "hilbert", "hpoly", "macaulay", "solve",     "kernel",   "cones"};
  for (const auto& name : commands) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("problem", problem_path,
                    "problem file ('-' reads standard input)")
        ->required();
    sub->add_option("--order", options.order_spec, "order spec override");
    sub->add_option("--mmax", options.mmax, "largest tabulated degree");
    sub->add_option("--cap-degree", options.cap_degree, "degree budget");
    sub->add_option("--cap-size", options.cap_size, "basis size budget");
    sub->add_option("--seed", options.seed, "random seed");
    sub->add_option("--format", options.format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--element", options.element, "element for nf");
    sub->add_option("--source", options.source,
                    "hilbert source: affine|h|c|gr")
        ->check(CLI::IsMember({"affine", "h", "c", "gr"}));
    sub->add_option("--zmax", options.zmax, "largest z for cone counts");
    sub->callback([&options, name] { options.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : weyl::cli::kExitUsage;
  }

  std::string text;
  if (problem_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(problem_path);
    if (!in) {
      std::cerr << "cannot open " << problem_path << "\n";
      return weyl::cli::kExitUsage;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  return weyl::cli::run_command(options, text, std::cout, std::cerr);
}
