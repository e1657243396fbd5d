#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkinv/arith.hpp"
#include "linkinv/catalog.hpp"
#include "linkinv/survey.hpp"

namespace linkinv::cli {

enum class Subcommand { Invariants, Cover, Certify, Moduli, Scan, Ingest };
enum class ScanTarget { Euclidean, Theorem2, FermatCy, Hyperbolic, MixedCanonical, All };

enum ExitCode : int { kOk = 0, kUsage = 1, kIntegrity = 2, kIo = 3 };

struct Invocation {
  Subcommand subcommand = Subcommand::Invariants;
  std::optional<ScanTarget> scan_target;
  std::optional<std::vector<Int>> weights;
  std::optional<Int> degree;
  std::optional<Int> k;
  std::optional<std::vector<Int>> exponents;
  std::optional<std::pair<Int, Int>> k_range;
  std::optional<std::string> input_path;
  OutputFormat format = OutputFormat::Table;
  std::optional<std::string> output_path;
  bool expand_torsion = false;
  ScanConfig scan;
  /// Set when --help was requested; run() prints it and exits 0.
  std::optional<std::string> help_text;
};

/// argv without the program name. Throws UsageError naming the offending
/// token or missing flag.
Invocation parse_invocation(const std::vector<std::string>& args);

/// Executes a parsed invocation. Data goes to `out` (or --out FILE),
/// diagnostics to `err`. Library errors propagate.
void run(const Invocation& invocation, std::ostream& out, std::ostream& err);

/// parse_invocation + run with errors mapped to exit codes:
/// 0 success, 1 usage, 2 integrity, 3 I/O.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// --threads, then LINKINV_THREADS, then the hardware concurrency.
unsigned default_thread_budget();

} // namespace linkinv::cli
