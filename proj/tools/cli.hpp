#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hardymin/minmod.hpp"

namespace hardymin::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInputError = 2, kUnsupported = 3 };

struct JobConfig {
  std::string command;
  std::string inner;   // JSON text or a path to a JSON file
  std::string symbol;  // same
  double tol = 1e-9;
  std::vector<int> truncations;
  std::string output;  // empty: stdout
  std::string format = "json";
  std::optional<Method> force_method;
  std::optional<std::string> perturb;
};

/// Picks the most informative applicable route: constant, unimodular,
/// analytic, then normal-form bounds.
MinModReport cmd_minmod(const JobConfig& config);
std::vector<MinModReport> cmd_sweep(const JobConfig& config);

std::string render_minmod(const MinModReport& r, const std::string& format);
std::string render_sweep(const std::vector<MinModReport>& rows, double tol, const std::string& format);

/// Full command line, returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hardymin::cli
