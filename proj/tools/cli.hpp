#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <rzlmi/rational.hpp>

namespace rzlmi::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNotRz = 2, kConstruction = 3 };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  /// Raw `a,b,...` text; the origin when empty.
  std::string point;
  unsigned rays = 181;
  unsigned random_rays = 64;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  Rational resolution = Rational(1, 1 << 20);
  std::string factors;
  std::string out;
  std::string format = "json";
};

/// Runs one command; reports go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line into a RunConfig and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_check(const RunConfig& c, std::ostream& out, std::ostream& err);
int cmd_hyperbolic(const RunConfig& c, std::ostream& out, std::ostream& err);
int cmd_represent(const RunConfig& c, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err);
int cmd_det(const RunConfig& c, std::ostream& out, std::ostream& err);
int cmd_reduce_monic(const RunConfig& c, std::ostream& out, std::ostream& err);
int cmd_topology(const RunConfig& c, std::ostream& out, std::ostream& err);
int cmd_boundary(const RunConfig& c, std::ostream& out, std::ostream& err);

}  // namespace rzlmi::cli
