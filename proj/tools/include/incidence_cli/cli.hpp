#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "incidence/algebra/rational.hpp"

namespace incidence::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kPartitionFailure = 3,
  kGenericityFailure = 4,
  kInvariantBreach = 5,
};

struct RunConfig {
  std::string command;  // generate | partition | count | audit | bounds | rich | fit
  std::string points;
  std::string curves;
  std::string samples;  // fit input
  std::string out;      // report file; output directory for generate
  std::string format;   // csv | json; empty selects the command default
  unsigned r = 8;
  Rational delta{1, 20};
  int depth_cap = 2;
  std::uint64_t seed = 0;
  Rational eps{1, 100};
  unsigned threads = 1;
  // bounds / fit
  std::string evaluator = "maind";
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  int d = 3;
  int k = 2;
  int s = 1;
  std::map<int, std::uint64_t> q;
  // generate
  std::string kind;
  int size = 1;
  std::size_t dimension = 0;
  // rich / audit
  unsigned threshold = 2;
  std::size_t budget = 100000;
  std::string surfaces = "hyperplanes";  // none | hyperplanes | spheres | both
  std::size_t max_surfaces = 64;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// `key = value` lines in a fixed key order; q_j entries as `qJ = value`.
std::string config_to_text(const RunConfig& config);
/// Parses `key = value` lines ('#' starts a comment). Unknown keys and
/// malformed values throw InputError.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Sets one key from its text value; shared by config files and flags.
void set_key(RunConfig& config, const std::string& key, const std::string& value);

/// Executes the command. Reports go to `config.out` when set, otherwise
/// to `out`; diagnostics go to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point: `incidence <command> [flags]`.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace incidence::cli
