#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "weyl/text.hpp"

namespace weyl::cli {

// exit codes: 0 success, 1 usage or parse failure, 2 resource cap exceeded,
// 3 proven unsolvable
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitUnsolvable = 3;

struct Options {
  std::string command;
  std::optional<std::string> order_spec;  // overrides the problem file
  std::optional<int> mmax;
  std::optional<int> cap_degree;
  std::optional<int> cap_size;
  std::uint64_t seed = 0;
  std::string format = "json";  // "json" or "text"
  std::optional<std::string> element;  // for nf
  std::string source = "affine";       // for hilbert/hpoly
  std::optional<long> zmax;            // for cones
};

// Commands: janet, reduce, nf, homogenize, saturate, gr, hilbert, hpoly,
// macaulay, solve, kernel, cones. Deterministic for fixed inputs and seed.
int run_command(const Options& options, const std::string& problem_text,
                std::ostream& out, std::ostream& err);

}  // namespace weyl::cli
