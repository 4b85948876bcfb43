#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mpmorse/complex.hpp"
#include "mpmorse/gradient.hpp"
#include "mpmorse/morse.hpp"

namespace mpmorse::cli {

enum class InputFormat { off, generic };
enum class Mode { gradient, morse, space, rank_invariant, verify };

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitParse = 2,
  kExitInjectivity = 3,
  kExitVerification = 4,
};

struct PipelineConfig {
  std::filesystem::path input;
  InputFormat format = InputFormat::generic;
  /// Coordinate columns forming f for OFF input, e.g. "x,y".
  std::string coords = "x,y";
  /// Optional per-vertex filtration file; overrides coords and the values
  /// stored in a generic file.
  std::optional<std::filesystem::path> filtration;
  Mode mode = Mode::gradient;
  unsigned omega = 10;
  bool auto_perturb = false;
  unsigned workers = 0;
  std::filesystem::path out = ".";
  bool dump_decomposition = false;
  /// Run the oracle battery after the selected mode.
  bool verify = false;
};

Mode parse_mode(const std::string& s);
InputFormat parse_format(const std::string& s);

struct CheckResult {
  std::string name;
  enum class Status { pass, fail, skip } status = Status::skip;
  std::string note;
};

struct BatteryLimits {
  /// Largest |S| for the quadratic matching oracle.
  std::size_t matching = 3000;
  /// Largest |S| for exhaustive V-path enumeration.
  std::size_t separatrix = 40;
  /// Largest |S| for the rank invariant oracle.
  std::size_t rank_invariant = 60;
  unsigned omega = 3;
};

/// Every oracle that applies to the input, in a fixed order.
std::vector<CheckResult> run_oracle_battery(const SimplicialComplex& c, const MultiFiltration& mf,
                                            const DiscreteGradient& g, const LefschetzComplex& morse,
                                            const BatteryLimits& limits = {}, unsigned workers = 0);

/// `PASS <name>`, `FAIL <name>: <note>` or `SKIP <name>: <note>` per line.
void write_battery_report(std::ostream& out, const std::vector<CheckResult>& results);

/// Runs the configured pipeline and writes artifacts into cfg.out:
/// gradient.txt, stats.txt, decomposition.txt, morse.txt,
/// diagrams_original.csv, diagrams_morse.csv, timings.csv,
/// rank_invariant_original.csv, rank_invariant_morse.csv, verify.txt,
/// depending on the mode. Progress and the stats line go to `log`, errors
/// to `err`. Returns an ExitCode.
int run_pipeline(const PipelineConfig& cfg, std::ostream& log, std::ostream& err);

}  // namespace mpmorse::cli
