#include "bentguide/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "bentguide/errors.hpp"
#include "bentguide/oracle_fd.hpp"
#include "bentguide/spectrum.hpp"

namespace bentguide::cli {
namespace {

using json = nlohmann::ordered_json;
using std::numbers::pi;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string render() const {
    std::vector<std::size_t> widths(header.size(), 0);
    auto measure = [&widths](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size() && i < widths.size(); ++i) {
        widths[i] = std::max(widths[i], cells[i].size());
      }
    };
    measure(header);
    for (const auto& r : rows) measure(r);

    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        os << std::setw(static_cast<int>(widths[i])) << cells[i];
        if (i + 1 < cells.size()) os << "  ";
      }
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
  }

  std::string render_csv() const {
    std::ostringstream os;
    auto line = [&os](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) os << ',';
        os << cells[i];
      }
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
  }
};

std::string unit_label(const UnitSystem& units) {
  return (units.hbar == 1.0 && units.mass == 0.5) ? "spectral" : "physical";
}

json config_json(const RunConfig& cfg) {
  json c;
  c["radius"] = cfg.radius;
  c["width"] = cfg.width;
  c["hbar"] = cfg.units.hbar;
  c["mass"] = cfg.units.mass;
  c["energy_scale"] = cfg.units.energy_scale();
  c["units"] = unit_label(cfg.units);
  return c;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------- modes

std::string cmd_modes(const RunConfig& cfg) {
  const WaveguideGeometry geom = make_geometry(cfg.radius, cfg.width);
  const SpectrumResult spectrum = compute_spectrum(geom, cfg.n_max, cfg.radial_count);
  const double scale = cfg.units.energy_scale();
  const double kappa = geom.curvature();

  struct Record {
    const RadialSolution* exact;
    ModeIndex partner;
    double closed_form;
  };
  std::vector<Record> records;
  for (const RadialSolution& mode : spectrum.modes) {
    const ModeIndex partner = make_mode(mode.n, cfg.l, mode.radial_order);
    records.push_back({&mode, partner, energy_closed_form(geom, partner)});
  }

  if (cfg.format == OutputFormat::json) {
    json doc;
    doc["config"] = config_json(cfg);
    doc["config"]["nmax"] = cfg.n_max;
    doc["config"]["count"] = cfg.radial_count;
    doc["config"]["l"] = cfg.l;
    json results = json::array();
    for (const Record& r : records) {
      json row;
      row["n"] = r.exact->n;
      row["k"] = r.exact->radial_order;
      row["epsilon"] = r.exact->epsilon;
      row["radial_energy"] = scale * r.exact->epsilon * r.exact->epsilon * kappa * kappa;
      row["energy_exact"] = scale * r.exact->energy;
      row["energy_closed_form"] = scale * r.closed_form;
      row["closed_form_mode"] = {{"n", r.partner.n}, {"l", r.partner.l}, {"w", r.partner.w}};
      results.push_back(row);
    }
    doc["results"] = results;
    const double straight_threshold = transverse_z_energy(geom, 1);
    const double ground = spectrum.modes.front().energy - transverse_z_energy(geom, spectrum.modes.front().n);
    doc["summary"] = {{"mode_count", records.size()},
                      {"ground_energy", scale * spectrum.modes.front().energy},
                      {"anticentrifugal_binding", ground < straight_threshold},
                      {"anticentrifugal_force", scale * anticentrifugal_force(geom)}};
    return dump(doc);
  }

  Table t;
  t.header = {"n", "k", "epsilon", "energy_exact", "l", "w", "energy_closed_form"};
  for (const Record& r : records) {
    t.rows.push_back({std::to_string(r.exact->n), std::to_string(r.exact->radial_order),
                      format_number(r.exact->epsilon), format_number(scale * r.exact->energy),
                      std::to_string(r.partner.l), std::to_string(r.partner.w),
                      format_number(scale * r.closed_form)});
  }
  return cfg.format == OutputFormat::csv ? t.render_csv() : t.render();
}

// ------------------------------------------------------------ potential

std::string cmd_potential(const RunConfig& cfg) {
  const WaveguideGeometry geom = make_geometry(cfg.radius, cfg.width);
  const PotentialProfile profile =
      cfg.kind == PotentialKind::effective
          ? sample_effective_potential(geom, cfg.n, cfg.samples)
          : sample_bohm_potential(geom, make_mode(cfg.n, cfg.l, cfg.w), cfg.samples);
  check_profile(geom, profile);
  if (cfg.format != OutputFormat::json) return emit_profile(cfg.format, profile, cfg.units.energy_scale());

  json doc;
  doc["config"] = config_json(cfg);
  doc["config"]["kind"] = to_string(cfg.kind);
  doc["config"]["n"] = cfg.n;
  if (cfg.kind == PotentialKind::bohm) {
    doc["config"]["l"] = cfg.l;
    doc["config"]["w"] = cfg.w;
  }
  doc["config"]["samples"] = cfg.samples;
  const json body = json::parse(emit_profile(OutputFormat::json, profile, cfg.units.energy_scale()));
  doc["results"] = body["results"];
  doc["summary"] = body["summary"];
  if (cfg.kind == PotentialKind::bohm) {
    doc["summary"]["barrier_Q0"] = cfg.units.energy_scale() * bohm_barrier(geom, make_mode(cfg.n, cfg.l, cfg.w));
  }
  return dump(doc);
}

// ---------------------------------------------------------- phase-shift

std::string cmd_phase_shift(const RunConfig& cfg) {
  if (!cfg.wavelength) throw DomainError("phase-shift requires --wavelength");
  const WaveguideGeometry geom = make_geometry(cfg.radius, cfg.width);
  const double lambda = *cfg.wavelength;
  const double hbar = cfg.units.hbar;
  // p = h / lambda, so the spectral wavenumber is 2 pi / lambda for any hbar.
  const double wavenumber = 2.0 * pi / lambda;
  const double energy = wavenumber * wavenumber;

  struct Record {
    std::string label;
    int n;
    double barrier;
    std::optional<double> delta_p;
    std::optional<double> delta_phi;
    std::string note;
  };
  std::vector<Record> records;

  auto evaluate = [&](std::string label, int n, double barrier) {
    Record r{std::move(label), n, barrier, std::nullopt, std::nullopt, ""};
    try {
      const double dk = momentum_shift(energy, barrier, cfg.variant);
      r.delta_p = hbar * dk;
      r.delta_phi = phase_shift(geom, *r.delta_p, cfg.variant, hbar);
    } catch (const DomainError& e) {
      r.note = e.what();
    }
    records.push_back(std::move(r));
  };

  // Irreducible shift: no z confinement and no transverse zero gap.
  const double kappa = geom.curvature();
  evaluate("minimal", 0, kappa * kappa / 4.0);
  for (int n = 1; n <= cfg.n_max; ++n) {
    const ModeIndex mode = make_mode(n, cfg.l, cfg.w);
    evaluate("mode", n, bohm_barrier(geom, mode));
  }
  std::optional<double> closed_min;
  if (cfg.variant != Variant::exact) closed_min = min_phase_shift(lambda, kappa, cfg.variant, hbar);

  const double scale = cfg.units.energy_scale();
  if (cfg.format == OutputFormat::json) {
    json doc;
    doc["config"] = config_json(cfg);
    doc["config"]["wavelength"] = lambda;
    doc["config"]["variant"] = to_string(cfg.variant);
    doc["config"]["nmax"] = cfg.n_max;
    doc["config"]["l"] = cfg.l;
    doc["config"]["w"] = cfg.w;
    json results = json::array();
    for (const Record& r : records) {
      json row;
      row["label"] = r.label;
      row["n"] = r.n;
      if (r.label == "mode") {
        row["l"] = cfg.l;
        row["w"] = cfg.w;
      }
      row["barrier_Q0"] = scale * r.barrier;
      row["delta_p"] = r.delta_p ? json(*r.delta_p) : json(nullptr);
      row["delta_phi"] = r.delta_phi ? json(*r.delta_phi) : json(nullptr);
      if (!r.note.empty()) row["note"] = r.note;
      results.push_back(row);
    }
    doc["results"] = results;
    doc["summary"] = {{"energy", scale * energy},
                      {"momentum", hbar * wavenumber},
                      {"min_phase_shift_closed_form", closed_min ? json(*closed_min) : json(nullptr)}};
    return dump(doc);
  }

  Table t;
  t.header = {"label", "n", "barrier_Q0", "delta_p", "delta_phi"};
  for (const Record& r : records) {
    t.rows.push_back({r.label, std::to_string(r.n), format_number(scale * r.barrier),
                      r.delta_p ? format_number(*r.delta_p) : "nan",
                      r.delta_phi ? format_number(*r.delta_phi) : "nan"});
  }
  std::string text = cfg.format == OutputFormat::csv ? t.render_csv() : t.render();
  if (closed_min && cfg.format == OutputFormat::table) {
    text += "min_phase_shift_closed_form " + format_number(*closed_min) + "\n";
  }
  return text;
}

// ---------------------------------------------------------------- force

std::string cmd_force(const RunConfig& cfg, bool width_given) {
  if (!(cfg.radius > 0.0)) throw DomainError("radius must be positive");
  const WaveguideGeometry geom =
      width_given ? make_geometry(cfg.radius, cfg.width)
                  : make_geometry(cfg.radius, cfg.radius);  // force is independent of the width
  const double force = cfg.units.energy_scale() * anticentrifugal_force(geom);
  switch (cfg.format) {
    case OutputFormat::json: {
      json doc;
      doc["config"] = config_json(cfg);
      if (!width_given) doc["config"].erase("width");
      doc["results"] = json::array({{{"curvature", geom.curvature()}, {"force", force}}});
      doc["summary"] = {{"law", "kappa^3 / 2"}};
      return dump(doc);
    }
    case OutputFormat::csv:
      return "curvature,force\n" + format_number(geom.curvature()) + "," + format_number(force) + "\n";
    case OutputFormat::table:
      return format_number(force) + "\n";
  }
  return {};
}

// ------------------------------------------------------------- validate

std::string cmd_validate(const RunConfig& cfg, bool& passed) {
  const WaveguideGeometry geom = make_geometry(cfg.radius, cfg.width);
  const ValidationReport report = build_validation_report(geom, cfg.grid, cfg.radial_count);
  passed = report.pass();
  return emit_validation(cfg.format, report);
}

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  const std::string t = to_lower(text);
  if (t == "csv") return OutputFormat::csv;
  if (t == "json") return OutputFormat::json;
  if (t == "table") return OutputFormat::table;
  throw DomainError("unknown format '" + text + "'");
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::string emit_profile(OutputFormat format, const PotentialProfile& profile, double scale) {
  if (profile.empty()) throw DomainError("cannot emit an empty profile");
  if (profile.xi.size() != profile.values.size()) throw DomainError("profile sizes differ");
  const char* kind = to_string(profile.kind);
  std::ostringstream os;
  switch (format) {
    case OutputFormat::csv:
      os << "xi,value,kind\n";
      for (std::size_t i = 0; i < profile.size(); ++i) {
        os << format_number(profile.xi[i]) << ',' << format_number(scale * profile.values[i]) << ','
           << kind << '\n';
      }
      break;
    case OutputFormat::table:
      os << "# xi " << kind << "\n";
      for (std::size_t i = 0; i < profile.size(); ++i) {
        os << format_number(profile.xi[i]) << ' ' << format_number(scale * profile.values[i]) << '\n';
      }
      break;
    case OutputFormat::json: {
      json doc;
      json results = json::array();
      double lo = profile.values.front(), hi = profile.values.front();
      for (std::size_t i = 0; i < profile.size(); ++i) {
        results.push_back({{"xi", profile.xi[i]}, {"value", scale * profile.values[i]}});
        lo = std::min(lo, profile.values[i]);
        hi = std::max(hi, profile.values[i]);
      }
      doc["results"] = results;
      doc["summary"] = {{"kind", kind}, {"count", profile.size()}, {"min", scale * lo}, {"max", scale * hi}};
      os << dump(doc);
      break;
    }
  }
  return os.str();
}

ValidationReport build_validation_report(const WaveguideGeometry& geom, int grid, int count) {
  if (count < 1) throw DomainError("validation needs count >= 1");
  constexpr int n = 1;
  ValidationReport report{};
  report.radius = geom.bend_radius();
  report.width = geom.width();

  const std::vector<RadialSolution> exact = solve_exact_modes(geom, n, count);
  const fd::ExtrapolatedEigenvalues oracle = fd::extrapolated_eigenvalues(geom, n, grid, count);
  report.coarse_grid = oracle.coarse_N;
  report.fine_grid = oracle.fine_N;

  report.max_rel_error = 0.0;
  for (int k = 1; k <= count; ++k) {
    const std::size_t i = static_cast<std::size_t>(k - 1);
    ValidationRow row{};
    row.n = n;
    row.k = k;
    row.closed_form = energy_closed_form(geom, make_mode(n, 1, k));
    row.exact = exact[i].energy;
    row.fd_coarse = oracle.coarse[i];
    row.fd_fine = oracle.fine[i];
    row.extrapolated = oracle.extrapolated[i];
    row.rel_error_oracle = std::abs(row.exact - row.extrapolated) / std::abs(row.extrapolated);
    row.rel_error_closed_form = std::abs(row.closed_form - row.exact) / std::abs(row.exact);
    report.max_rel_error = std::max(report.max_rel_error, row.rel_error_oracle);
    report.rows.push_back(row);
  }
  report.oracle_pass = report.max_rel_error < kOracleTolerance;

  // Convergence order of the ground mode against the extrapolated value.
  const double reference = oracle.extrapolated.front();
  std::vector<double> spacings;
  for (int N : kSlopeGrids) {
    const fd::FDGrid g = fd::make_grid(geom, N);
    const double e = fd::fd_eigenvalues(geom, n, g, 1).front();
    report.slope_grids.push_back(N);
    report.slope_errors.push_back(std::abs(e - reference));
    spacings.push_back(g.h);
  }
  report.slope = fd::loglog_slope(spacings, report.slope_errors);
  report.slope_pass = std::abs(report.slope - kExpectedSlope) <= kSlopeTolerance;
  return report;
}

std::string emit_validation(OutputFormat format, const ValidationReport& report) {
  if (format == OutputFormat::json) {
    json doc;
    doc["config"] = {{"radius", report.radius},
                     {"width", report.width},
                     {"grid", report.coarse_grid},
                     {"fine_grid", report.fine_grid},
                     {"count", report.rows.size()}};
    json rows = json::array();
    for (const ValidationRow& r : report.rows) {
      rows.push_back({{"n", r.n},
                      {"k", r.k},
                      {"energy_closed_form", r.closed_form},
                      {"energy_exact", r.exact},
                      {"energy_fd_coarse", r.fd_coarse},
                      {"energy_fd_fine", r.fd_fine},
                      {"energy_fd_extrapolated", r.extrapolated},
                      {"rel_error_exact_vs_oracle", r.rel_error_oracle},
                      {"rel_error_closed_form_vs_exact", r.rel_error_closed_form}});
    }
    doc["results"] = rows;
    json slope_points = json::array();
    for (std::size_t i = 0; i < report.slope_grids.size(); ++i) {
      slope_points.push_back({{"N", report.slope_grids[i]}, {"abs_error", report.slope_errors[i]}});
    }
    doc["summary"] = {{"max_rel_error", report.max_rel_error},
                      {"oracle_tolerance", kOracleTolerance},
                      {"oracle_pass", report.oracle_pass},
                      {"convergence_slope", report.slope},
                      {"slope_target", kExpectedSlope},
                      {"slope_tolerance", kSlopeTolerance},
                      {"slope_points", slope_points},
                      {"slope_pass", report.slope_pass},
                      {"pass", report.pass()}};
    return dump(doc);
  }

  std::ostringstream os;
  os << "# radius=" << format_number(report.radius) << " width=" << format_number(report.width)
     << " grid=" << report.coarse_grid << "/" << report.fine_grid << '\n'
     << "# max_rel_error=" << format_number(report.max_rel_error)
     << " tolerance=" << format_number(kOracleTolerance) << " slope=" << format_number(report.slope)
     << " target=" << format_number(kExpectedSlope) << "+-" << format_number(kSlopeTolerance)
     << " result=" << (report.pass() ? "PASS" : "FAIL") << '\n';
  Table t;
  t.header = {"n", "k", "closed_form", "exact", "fd_fine", "fd_extrapolated", "rel_err_oracle",
              "rel_err_closed_form"};
  for (const ValidationRow& r : report.rows) {
    t.rows.push_back({std::to_string(r.n), std::to_string(r.k), format_number(r.closed_form),
                      format_number(r.exact), format_number(r.fd_fine), format_number(r.extrapolated),
                      format_number(r.rel_error_oracle), format_number(r.rel_error_closed_form)});
  }
  os << (format == OutputFormat::csv ? t.render_csv() : t.render());
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format_text = "table";
  std::string variant_text = "paper";
  std::string kind_text = "effective";
  double hbar = 1.0;
  double mass = 0.5;
  std::string output;
  double wavelength = 0.0;

  CLI::App app{"Bound modes, potentials and phase shifts of a bent rectangular waveguide", "bentguide"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "csv, json or table")
        ->check(CLI::IsMember({"csv", "json", "table"}, CLI::ignore_case));
    sub->add_option("--hbar", hbar, "hbar in user units (default 1)")->check(CLI::PositiveNumber);
    sub->add_option("--mass", mass, "particle mass in user units (default 1/2)")->check(CLI::PositiveNumber);
    sub->add_option("--output", output, "write to this path instead of standard output");
  };
  auto add_geometry = [&](CLI::App* sub, bool width_required) {
    sub->add_option("--radius", cfg.radius, "bend radius R")->required()->check(CLI::PositiveNumber);
    auto* w = sub->add_option("--width", cfg.width, "edge a of the square cross-section")
                  ->check(CLI::PositiveNumber);
    if (width_required) w->required();
  };

  CLI::App* modes = app.add_subcommand("modes", "exact and closed-form mode energies");
  add_geometry(modes, true);
  modes->add_option("--nmax", cfg.n_max, "largest z quantum number")->check(CLI::PositiveNumber);
  modes->add_option("--count", cfg.radial_count, "radial modes per n")->check(CLI::PositiveNumber);
  modes->add_option("--l", cfg.l, "lower J0 zero index of the closed-form partner")->check(CLI::PositiveNumber);
  add_common(modes);

  CLI::App* potential = app.add_subcommand("potential", "effective or Bohm potential profile");
  add_geometry(potential, true);
  potential->add_option("--kind", kind_text, "effective or bohm")
      ->check(CLI::IsMember({"effective", "bohm"}));
  potential->add_option("--samples", cfg.samples, "sample count across the width")
      ->check(CLI::Range(2, 10000000));
  potential->add_option("--n", cfg.n, "z quantum number")->check(CLI::PositiveNumber);
  potential->add_option("--l", cfg.l, "lower J0 zero index (bohm)")->check(CLI::PositiveNumber);
  potential->add_option("--w", cfg.w, "zero count across the width (bohm)")->check(CLI::PositiveNumber);
  add_common(potential);

  CLI::App* phase = app.add_subcommand("phase-shift", "momentum and interference phase shift");
  add_geometry(phase, true);
  phase->add_option("--wavelength", wavelength, "de Broglie wavelength")->required()->check(CLI::PositiveNumber);
  phase->add_option("--variant", variant_text, "partner, corrected or exact")
      ->check(CLI::IsMember({"paper", "corrected", "exact"}));
  phase->add_option("--nmax", cfg.n_max, "largest z quantum number")->check(CLI::PositiveNumber);
  phase->add_option("--l", cfg.l, "lower J0 zero index")->check(CLI::PositiveNumber);
  phase->add_option("--w", cfg.w, "zero count across the width")->check(CLI::PositiveNumber);
  add_common(phase);

  CLI::App* force = app.add_subcommand("force", "anticentrifugal force on the centerline");
  add_geometry(force, false);
  add_common(force);

  CLI::App* validate = app.add_subcommand("validate", "exact modes against the finite-difference oracle");
  add_geometry(validate, true);
  validate->add_option("--grid", cfg.grid, "odd interior point count of the coarse grid")
      ->check(CLI::Range(3, 100000001));
  validate->add_option("--count", cfg.radial_count, "radial modes to compare")->check(CLI::PositiveNumber);
  add_common(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.format = parse_format(format_text);
    cfg.variant = parse_variant(variant_text);
    cfg.kind = kind_text == "bohm" ? PotentialKind::bohm : PotentialKind::effective;
    cfg.units = make_unit_system(hbar, mass);
    if (!output.empty()) cfg.output_path = output;

    std::string text;
    int code = kExitOk;
    if (modes->parsed()) {
      text = cmd_modes(cfg);
    } else if (potential->parsed()) {
      text = cmd_potential(cfg);
    } else if (phase->parsed()) {
      if (phase->count("--nmax") == 0) cfg.n_max = 1;
      cfg.wavelength = wavelength;
      text = cmd_phase_shift(cfg);
    } else if (force->parsed()) {
      text = cmd_force(cfg, force->count("--width") > 0);
    } else if (validate->parsed()) {
      if (cfg.grid % 2 == 0) throw DomainError("--grid must be odd so xi = 0 is a grid point");
      bool passed = false;
      text = cmd_validate(cfg, passed);
      if (!passed) code = kExitValidation;
    }

    if (cfg.output_path) {
      std::ofstream file(*cfg.output_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file " + *cfg.output_path);
      file << text;
      if (!file) throw std::runtime_error("write failed for " + *cfg.output_path);
    } else {
      out << text;
    }
    return code;
  } catch (const std::exception& e) {
    err << "bentguide: " << e.what() << '\n';
    return kExitDomain;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("bentguide");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace bentguide::cli
