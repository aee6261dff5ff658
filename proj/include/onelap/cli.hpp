/**
 * @file  cli.hpp
 * @brief Run configuration and the modes of the `one-lap` command.
 *
 * Exit codes: 0 success, 1 configuration error, 2 solver failure,
 * 3 certificate outside its limits when --strict is set.
 */
#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "onelap/certificate.hpp"
#include "onelap/cheeger.hpp"
#include "onelap/eigenset.hpp"
#include "onelap/error.hpp"
#include "onelap/grid.hpp"
#include "onelap/io.hpp"
#include "onelap/solver.hpp"

namespace onelap {

enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitSolver = 2, kExitCertificate = 3 };

enum class Mode { solve, oracle, certify, sweep };

inline const char* mode_name(Mode m) {
  switch (m) {
    case Mode::solve: return "solve";
    case Mode::oracle: return "oracle";
    case Mode::certify: return "certify";
    case Mode::sweep: return "sweep";
  }
  return "?";
}

struct ShapeConfig {
  std::string kind = "disk";
  double radius = 1.0;
  double side = 1.0;
  double width = 2.0;
  double height = 1.0;
  std::string polygon_file;
  std::optional<ConvexPolygon> polygon;
};

struct RunConfig {
  Mode mode = Mode::solve;
  ShapeConfig shape;
  /// Cells per unit length.
  double resolution = 32.0;
  std::string schedule = "geometric";
  ScheduleOptions schedule_options;
  std::uint64_t seed = 1;
  std::string out = "one-lap-out";
  bool strict = false;
  int levels = 64;
  double tau_factor = 1e-3;
  /// Penalty weight for certify; 0 means the schedule's final n.
  double n = 0.0;
  std::string field;
  std::string sigma;
};

struct ParseResult {
  RunConfig config;
  /// Set when parsing already decided the outcome (help, --print-config, errors).
  std::optional<int> exit_code;
};

inline Shape make_shape(const ShapeConfig& s) {
  if (s.kind == "disk") return Disk{s.radius, {0.0, 0.0}};
  if (s.kind == "square") return Rectangle{s.side, s.side};
  if (s.kind == "rectangle") return Rectangle{s.width, s.height};
  if (s.kind == "polygon") {
    if (!s.polygon) throw InvalidArgument("--polygon-file is required for --shape polygon");
    return *s.polygon;
  }
  throw InvalidArgument("unknown shape '" + s.kind + "'");
}

inline CheegerResult oracle_for(const ShapeConfig& s) {
  if (s.kind == "disk") {
    const double r = s.radius / 2.0;
    return {cheeger_constant_disk(s.radius), r, std::numbers::pi * s.radius * s.radius, 2.0 * std::numbers::pi * s.radius};
  }
  if (s.kind == "square") return cheeger_constant(ConvexPolygon::rectangle(s.side, s.side));
  if (s.kind == "rectangle") return cheeger_constant(ConvexPolygon::rectangle(s.width, s.height));
  return cheeger_constant(std::get<ConvexPolygon>(make_shape(s)));
}

inline ContinuationSchedule make_schedule(const RunConfig& c) {
  return c.schedule == "sweep" ? ContinuationSchedule::penalty_sweep(c.schedule_options)
                               : ContinuationSchedule::geometric(c.schedule_options);
}

inline ParseResult parse_config(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ParseResult res;
  RunConfig& c = res.config;
  ScheduleOptions& so = c.schedule_options;
  bool print_config = false;

  CLI::App app{"First eigenvalue of the 1-Laplacian by penalized TV minimization", "one-lap"};
  app.set_config("--config", "", "Read options from a TOML or INI file");
  app.require_subcommand(1, 1);
  auto* solve = app.add_subcommand("solve", "Run the continuation solver and write all artifacts");
  auto* oracle = app.add_subcommand("oracle", "Print the Cheeger constant of a convex shape");
  auto* certify = app.add_subcommand("certify", "Certify a stored (u, sigma) pair");
  auto* sweep = app.add_subcommand("sweep", "Level-set ratio sweep of a stored field");
  for (auto* sub : {solve, oracle, certify, sweep}) sub->fallthrough();

  app.add_option("--shape", c.shape.kind, "disk, square, rectangle or polygon")
      ->check(CLI::IsMember({"disk", "square", "rectangle", "polygon"}))
      ->capture_default_str();
  app.add_option("--radius", c.shape.radius, "Disk radius")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--side", c.shape.side, "Square side")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--width", c.shape.width, "Rectangle width")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--height", c.shape.height, "Rectangle height")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--polygon-file", c.shape.polygon_file, "Convex polygon, one 'x y' vertex per line (CCW)");
  app.add_option("--resolution", c.resolution, "Cells per unit length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--schedule", c.schedule, "geometric or sweep")
      ->check(CLI::IsMember({"geometric", "sweep"}))
      ->capture_default_str();
  app.add_option("--eps-start", so.eps_start, "First eps")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  app.add_option("--eps-factor", so.eps_factor, "Geometric factor for eps")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--eps-stages", so.eps_stages, "Number of eps > 0 stages")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--n-start", so.n_start, "First penalty weight")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--n-factor", so.n_factor, "Geometric factor for n")
      ->check(CLI::Range(1.0, 1e12))
      ->capture_default_str();
  app.add_option("--delta-scale", so.delta_scale, "delta = scale * eps + floor")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--delta-floor", so.delta_floor, "delta at eps = 0")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-iter", so.max_iterations, "Iteration cap per stage")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol", so.tolerance, "Stage stopping tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", c.seed, "Seed for the initial-guess jitter")->capture_default_str();
  app.add_option("--out", c.out, "Output directory")->capture_default_str();
  app.add_flag("--strict", c.strict, "Exit 3 when the certificate is outside its limits");
  app.add_option("--levels", c.levels, "Levels in the eigenset sweep")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  app.add_option("--tau-factor", c.tau_factor, "Sign threshold as a fraction of max u")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--n", c.n, "Penalty weight for certify (0: final n of the schedule)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--field", c.field, "Stored u field (certify, sweep)");
  app.add_option("--sigma", c.sigma, "Stored sigma field (certify)");
  app.add_flag("--print-config", print_config, "Print the effective configuration and exit")->configurable(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    res.exit_code = app.exit(e, out, err);
    return res;
  } catch (const CLI::ParseError& e) {
    err << "one-lap: " << e.what() << "\n";
    res.exit_code = kExitConfig;
    return res;
  }

  if (solve->parsed()) c.mode = Mode::solve;
  if (oracle->parsed()) c.mode = Mode::oracle;
  if (certify->parsed()) c.mode = Mode::certify;
  if (sweep->parsed()) c.mode = Mode::sweep;

  auto fail = [&](const std::string& msg) {
    err << "one-lap: " << msg << "\n";
    res.exit_code = kExitConfig;
    return res;
  };
  if (c.shape.kind == "polygon") {
    if (c.shape.polygon_file.empty()) return fail("--polygon-file is required for --shape polygon");
    try {
      c.shape.polygon = read_polygon_file(c.shape.polygon_file);
    } catch (const Error& e) {
      return fail(std::string("--polygon-file: ") + e.what());
    }
  }
  if (c.mode == Mode::certify && (c.field.empty() || c.sigma.empty())) {
    return fail("certify needs --field and --sigma");
  }
  if (c.mode == Mode::sweep && c.field.empty()) return fail("sweep needs --field");
  if (c.mode != Mode::oracle) {
    try {
      make_schedule(c);
    } catch (const InvalidArgument& e) {
      return fail(std::string("schedule options: ") + e.what());
    }
  }
  if (print_config) {
    out << "mode = \"" << mode_name(c.mode) << "\"\n" << app.config_to_str(true, false);
    res.exit_code = kExitOk;
  }
  return res;
}

inline std::string fmt10(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

namespace detail {

inline DomainPtr build_domain(const RunConfig& c) {
  return rasterize(make_shape(c.shape), c.resolution);
}

inline std::optional<double> oracle_value(const RunConfig& c) {
  try {
    return oracle_for(c.shape).h;
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline nlohmann::json config_json(const RunConfig& c) {
  const ScheduleOptions& o = c.schedule_options;
  return {{"mode", mode_name(c.mode)},
          {"shape", c.shape.kind},
          {"radius", c.shape.radius},
          {"side", c.shape.side},
          {"width", c.shape.width},
          {"height", c.shape.height},
          {"polygon_file", c.shape.polygon_file},
          {"resolution", c.resolution},
          {"schedule", c.schedule},
          {"eps_start", o.eps_start},
          {"eps_factor", o.eps_factor},
          {"eps_stages", o.eps_stages},
          {"n_start", o.n_start},
          {"n_factor", o.n_factor},
          {"delta_scale", o.delta_scale},
          {"delta_floor", o.delta_floor},
          {"max_iterations", o.max_iterations},
          {"tolerance", o.tolerance},
          {"seed", c.seed},
          {"levels", c.levels},
          {"tau_factor", c.tau_factor}};
}

inline int run_oracle(const RunConfig& c, std::ostream& out) {
  const CheegerResult r = oracle_for(c.shape);
  out << "h=" << fmt10(r.h) << " r=" << fmt10(r.r) << " area=" << fmt10(r.area) << " perimeter=" << fmt10(r.perimeter)
      << "\n";
  return kExitOk;
}

inline int run_solve(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const DomainPtr dom = build_domain(c);
  const ContinuationSchedule schedule = make_schedule(c);
  const std::filesystem::path dir(c.out);
  std::filesystem::create_directories(dir);
  IterationLog log;
  std::optional<SolveReport> solved;
  try {
    solved = continuation_solve(dom, schedule, c.seed, log.observer());
  } catch (const SolveFailure& e) {
    atomic_write(dir / "iterations.csv", log.csv());
    err << "one-lap: solver failure: " << e.what() << "\n";
    return kExitSolver;
  }
  const SolveReport& rep = *solved;
  const Certificate cert = build_certificate(rep.u, rep.sigma, rep.final_n, c.tau_factor * rep.u.max());
  const LevelSetSweep sw = ratio_sweep(rep.u, c.levels);
  const std::optional<double> oracle = oracle_value(c);

  write_field(dir / "u.txt", rep.u);
  write_field(dir / "sigma.txt", rep.sigma);
  atomic_write(dir / "iterations.csv", log.csv());
  atomic_write(dir / "sweep.csv", sweep_csv(sw));

  nlohmann::json stages = nlohmann::json::array();
  for (const StageReport& s : rep.stages) stages.push_back(to_json(s));
  const bool ok = within_limits(cert);
  nlohmann::json report = {{"config", config_json(c)},
                           {"grid", {{"nx", dom->nx()}, {"ny", dom->ny()}, {"h", dom->h()}, {"cells", dom->mask_cells().size()}}},
                           {"stages", stages},
                           {"lambda_hat", rep.multiplier},
                           {"rayleigh", rep.rayleigh},
                           {"energy", rep.energy},
                           {"oracle", oracle ? nlohmann::json(*oracle) : nlohmann::json(nullptr)},
                           {"certificate", to_json(cert)},
                           {"certificate_ok", ok},
                           {"sweep", {{"best_level", sw.best_level}, {"best_ratio", sw.best_ratio}}}};
  atomic_write(dir / "report.json", report.dump(2) + "\n");

  out << "lambda_hat=" << fmt10(rep.multiplier) << " rayleigh=" << fmt10(rep.rayleigh)
      << " energy=" << fmt10(rep.energy) << " oracle=" << (oracle ? fmt10(*oracle) : std::string("n/a")) << "\n";
  if (c.strict && !ok) {
    err << "one-lap: certificate outside limits (sup_sigma=" << fmt10(cert.sup_sigma)
        << " gap=" << fmt10(cert.extremality_gap) << " residual=" << fmt10(cert.pde_residual)
        << " spread=" << fmt10(estimator_spread(cert)) << ")\n";
    return kExitCertificate;
  }
  return kExitOk;
}

inline int run_certify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const DomainPtr dom = build_domain(c);
  const ScalarField u = read_scalar_field(c.field, dom);
  const VectorField s = read_vector_field(c.sigma, dom);
  const double n = c.n > 0.0 ? c.n : make_schedule(c).stages().back().params.n;
  const Certificate cert = build_certificate(u, s, n, c.tau_factor * u.max());
  const std::filesystem::path dir(c.out);
  std::filesystem::create_directories(dir);
  const bool ok = within_limits(cert);
  nlohmann::json report = {{"certificate", to_json(cert)}, {"certificate_ok", ok}};
  atomic_write(dir / "certificate.json", report.dump(2) + "\n");
  out << "sup_sigma=" << fmt10(cert.sup_sigma) << " gap=" << fmt10(cert.extremality_gap)
      << " residual=" << fmt10(cert.pde_residual) << " lambda_hat=" << fmt10(cert.multiplier)
      << " rayleigh=" << fmt10(cert.rayleigh) << " energy=" << fmt10(cert.energy) << "\n";
  if (c.strict && !ok) {
    err << "one-lap: certificate outside limits\n";
    return kExitCertificate;
  }
  return kExitOk;
}

inline int run_sweep(const RunConfig& c, std::ostream& out) {
  const DomainPtr dom = build_domain(c);
  const ScalarField u = read_scalar_field(c.field, dom);
  const LevelSetSweep sw = ratio_sweep(u, c.levels);
  const std::filesystem::path dir(c.out);
  std::filesystem::create_directories(dir);
  atomic_write(dir / "sweep.csv", sweep_csv(sw));
  const std::optional<double> oracle = oracle_value(c);
  out << "best_level=" << fmt10(sw.best_level) << " best_ratio=" << fmt10(sw.best_ratio)
      << " oracle=" << (oracle ? fmt10(*oracle) : std::string("n/a")) << "\n";
  return kExitOk;
}

}  // namespace detail

inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    switch (c.mode) {
      case Mode::oracle: return detail::run_oracle(c, out);
      case Mode::solve: return detail::run_solve(c, out, err);
      case Mode::certify: return detail::run_certify(c, out, err);
      case Mode::sweep: return detail::run_sweep(c, out);
    }
  } catch (const NumericalError& e) {
    err << "one-lap: numerical failure: " << e.what() << "\n";
    return kExitSolver;
  } catch (const Error& e) {
    err << "one-lap: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "one-lap: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace onelap
