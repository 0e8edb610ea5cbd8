#pragma once

// Command-line surface. `run` parses argv, executes one subcommand and
// returns the process exit code:
//   0   success
//   1   domain, convergence, numerical or I/O error (message on `err`)
//   2   `validate` ran but at least one check failed
//   64  usage error (unknown flag, missing subcommand, bad value)

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bentguide/geometry.hpp"
#include "bentguide/observables.hpp"

namespace bentguide::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitUsage = 64;

// Pass thresholds for `validate`; fixed so a pass means the same thing
// everywhere.
inline constexpr double kOracleTolerance = 1e-6;
inline constexpr double kExpectedSlope = 2.0;
inline constexpr double kSlopeTolerance = 0.05;
inline constexpr int kSlopeGrids[] = {1001, 2001, 4001, 8001};

enum class OutputFormat { csv, json, table };

OutputFormat parse_format(const std::string& text);

struct RunConfig {
  double radius = 2.0;
  double width = 1.0;
  int n_max = 2;
  int radial_count = 3;
  int n = 1;
  int l = 1;
  int w = 1;
  int samples = 101;
  int grid = 8001;
  std::optional<double> wavelength;
  Variant variant = Variant::paper_literal;
  PotentialKind kind = PotentialKind::effective;
  OutputFormat format = OutputFormat::table;
  UnitSystem units;
  std::optional<std::string> output_path;
};

/// Fixed 12-significant-digit rendering used by every text format.
std::string format_number(double value);

/// CSV (`xi,value,kind`), JSON, or a two-column gnuplot block. Values are
/// multiplied by `scale` (the energy scale of the unit system).
std::string emit_profile(OutputFormat format, const PotentialProfile& profile, double scale = 1.0);

struct ValidationRow {
  int n;
  int k;
  double closed_form;
  double exact;
  double fd_coarse;
  double fd_fine;
  double extrapolated;
  double rel_error_oracle;       // |exact - extrapolated| / extrapolated
  double rel_error_closed_form;  // |closed_form - exact| / exact
};

struct ValidationReport {
  double radius;
  double width;
  int coarse_grid;
  int fine_grid;
  std::vector<ValidationRow> rows;
  std::vector<int> slope_grids;
  std::vector<double> slope_errors;
  double slope;
  double max_rel_error;
  bool oracle_pass;
  bool slope_pass;
  bool pass() const { return oracle_pass && slope_pass; }
};

/// Exact Bessel modes against the extrapolated FD oracle for n = 1.
ValidationReport build_validation_report(const WaveguideGeometry& geom, int grid, int count);

std::string emit_validation(OutputFormat format, const ValidationReport& report);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bentguide::cli
