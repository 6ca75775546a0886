#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace curvedisc::cli {

enum class OutputFormat { Text, Json };

struct JobConfig {
  std::string command;  // resultant, disc-hyp, disc-points, disc-curve, smooth, bench
  std::string ring = "z";
  std::optional<std::string> param;
  std::vector<std::string> inputs;  // polynomial text or a path to a file holding one
  int nvars = 0;                    // 0: inferred per command
  std::uint64_t seed = 0;
  int retries = 8;
  bool perturbation = true;  // last rung of the fallback ladder
  OutputFormat output = OutputFormat::Text;
  std::uint64_t prime_bound = 100;
  bool dump_matrices = false;
  std::string dump_dir = ".";
  bool factored = false;
  std::optional<std::string> grid;  // "2x2,3x2"; empty string is an empty grid
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitDegenerate = 2;

/// Parses argv into a config. On --help or a usage error returns the exit
/// code instead, after writing to out or err.
std::pair<std::optional<JobConfig>, int> parse_args(int argc, const char* const* argv, std::ostream& out,
                                                   std::ostream& err);

/// Runs one job. The report goes to out, diagnostics to err.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

struct BenchRow {
  int d1 = 0, d2 = 0;
  int critical_degree = 0;
  std::size_t matrix_size = 0;
  double millis = 0;
};

/// disc_curve on one seeded random pair over Z per grid cell.
std::vector<BenchRow> bench(const std::vector<std::pair<int, int>>& grid, std::uint64_t seed);

/// "2x2,3x2" -> {(2,2),(3,2)}; "" -> {}.
std::vector<std::pair<int, int>> parse_grid(const std::string& text);

}  // namespace curvedisc::cli
