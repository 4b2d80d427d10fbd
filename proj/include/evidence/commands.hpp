// Command implementations behind the `evidence` executable. Each command
// writes its report to `out`, diagnostics to `err`, and returns the process
// exit code.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evidence/bayes.hpp"

namespace evidence {

enum ExitCode : int {
  kExitOk = 0,
  kExitOther = 1,
  kExitValidation = 2,
  kExitTotalConflict = 3,
};

/// One swept variable: "name=value" or "name=start:stop:step".
struct SweepAxis {
  char variable;  // 'r', 'p' or 'q'
  std::vector<double> values;
};

/// Parse "p=0:1:0.5,q=0.5". A range with start > stop is empty. Throws
/// ValidationError on bad syntax, non-positive steps, values outside [0, 1]
/// and repeated variables.
std::vector<SweepAxis> parse_sweep(std::string_view spec);

struct BayesFlags {
  std::optional<double> r;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<std::string> sweep;
};

/// Scenarios in lexicographic (r, p, q) order. r defaults to 0.8; p and q
/// must each come from a flag or the sweep, not both.
std::vector<ReliabilityScenario> build_grid(const BayesFlags& flags);

struct EvalOptions {
  std::filesystem::path model;
  std::vector<std::string> proposition;
};

struct CompareOptions {
  std::filesystem::path model;
  std::vector<std::string> proposition;
  BayesFlags flags;
};

int cmd_eval(const EvalOptions& options, std::ostream& out, std::ostream& err);
int cmd_bayes(const BayesFlags& flags, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareOptions& options, std::ostream& out, std::ostream& err);

/// Fixed four-decimal rendering used by every report.
std::string format_degree(double x);

}  // namespace evidence
