#pragma once

// Experiment harness behind the `ccheb` executable.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccheb/geometry.hpp"

namespace ccheb::cli {

enum ExitCode { kOk = 0, kSolverFailure = 2, kBadConfig = 3 };

struct RunConfig {
  std::string command;
  std::string family = "polygon";
  int m = 4;
  std::string alpha = "1";
  std::string r = "1";
  std::string coeffs;  ///< poly-lemniscate: comma separated, low to high, "re" or "re:im"
  std::vector<int> degrees;
  std::string threshold = "1e-10";
  int digits = 0;  ///< 0: 60, or 64 for faber-compare
  std::string symmetry = "auto";
  std::size_t grid = 0;
  int jobs = 1;
  std::string out;
  std::vector<std::string> formats;
  std::size_t samples = 1000;
  std::vector<std::string> r_grid;
  std::string r_min = "1.25";
  std::string r_max = "4";
  int r_count = 16;
  bool fit = false;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses argv (flags win over --config file entries). Throws ConfigError on
/// a bad command line; returns false when only help was requested.
bool parse_args(int argc, const char* const* argv, RunConfig& cfg, std::ostream& out);

/// Fills defaults and checks invariants (digits >= 15, threshold in
/// (10^-(digits-20), 1), positive degrees, ...). Throws ConfigError.
void validate(RunConfig& cfg);

CurveSpec curve_spec(const RunConfig& cfg);

int cmd_cheb(const RunConfig& cfg, std::ostream& out);
int cmd_widom_table(const RunConfig& cfg, std::ostream& out);
int cmd_faber_compare(const RunConfig& cfg, std::ostream& out);
int cmd_zeros(const RunConfig& cfg, std::ostream& out);
int cmd_curve_dump(const RunConfig& cfg, std::ostream& out);

/// Full pipeline: parse, validate, dispatch. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ccheb::cli
