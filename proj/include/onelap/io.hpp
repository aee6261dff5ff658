/**
 * @file  io.hpp
 * @brief Text formats for fields, logs and reports.
 *
 * Field files start with a header line `# nx ny h ox oy` followed by ny rows
 * (j = 0 first) of nx values in %.17g, so a write/read cycle is exact.
 * Vector fields use the same header with interleaved `vx vy` pairs per cell.
 */
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "onelap/certificate.hpp"
#include "onelap/eigenset.hpp"
#include "onelap/error.hpp"
#include "onelap/geometry.hpp"
#include "onelap/grid.hpp"
#include "onelap/solver.hpp"

namespace onelap {

class IoError : public Error {
 public:
  using Error::Error;
};

inline constexpr const char* kIterationCsvHeader = "stage,iteration,energy,grad_norm,mass,multiplier";
inline constexpr const char* kSweepCsvHeader = "level,area,perimeter,ratio";

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Writes through a sibling temporary file and renames it into place.
inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

inline std::string field_header(const GridDomain& d) {
  return "# " + std::to_string(d.nx()) + " " + std::to_string(d.ny()) + " " + format_double(d.h()) + " " +
         format_double(d.origin().x) + " " + format_double(d.origin().y) + "\n";
}

/// Parses the header and checks it against the domain the values will live on.
inline void check_header(std::istream& in, const GridDomain& d, const std::string& what) {
  std::string line;
  if (!std::getline(in, line)) throw IoError(what + ": missing header");
  std::istringstream hs(line);
  std::string hash;
  int nx = 0, ny = 0;
  double h = 0, ox = 0, oy = 0;
  if (!(hs >> hash >> nx >> ny >> h >> ox >> oy) || hash != "#") {
    throw IoError(what + ": malformed header, expected '# nx ny h ox oy'");
  }
  if (nx != d.nx() || ny != d.ny() || h != d.h() || ox != d.origin().x || oy != d.origin().y) {
    throw IoError(what + ": grid header does not match the configured domain");
  }
}

inline std::vector<double> read_values(std::istream& in, std::size_t count, const std::string& what) {
  std::vector<double> v;
  v.reserve(count);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw IoError(what + ": bad value '" + tok + "'");
    }
    if (used != tok.size() || !std::isfinite(x)) throw IoError(what + ": bad value '" + tok + "'");
    v.push_back(x);
  }
  if (v.size() != count) {
    throw IoError(what + ": expected " + std::to_string(count) + " values, found " + std::to_string(v.size()));
  }
  return v;
}

}  // namespace detail

inline std::string field_to_string(const ScalarField& u) {
  const GridDomain& d = u.domain();
  std::string out = detail::field_header(d);
  for (int j = 0; j < d.ny(); ++j) {
    for (int i = 0; i < d.nx(); ++i) {
      if (i) out += ' ';
      out += format_double(u[d.index(i, j)]);
    }
    out += '\n';
  }
  return out;
}

inline std::string field_to_string(const VectorField& s) {
  const GridDomain& d = s.domain();
  std::string out = detail::field_header(d);
  const auto sx = s.vx();
  const auto sy = s.vy();
  for (int j = 0; j < d.ny(); ++j) {
    for (int i = 0; i < d.nx(); ++i) {
      const std::size_t k = d.index(i, j);
      if (i) out += ' ';
      out += format_double(sx[k]) + ' ' + format_double(sy[k]);
    }
    out += '\n';
  }
  return out;
}

inline void write_field(const std::filesystem::path& path, const ScalarField& u) { atomic_write(path, field_to_string(u)); }
inline void write_field(const std::filesystem::path& path, const VectorField& s) { atomic_write(path, field_to_string(s)); }

inline ScalarField read_scalar_field(const std::filesystem::path& path, const DomainPtr& domain) {
  std::istringstream in(read_text(path));
  const std::string what = path.string();
  detail::check_header(in, *domain, what);
  auto v = detail::read_values(in, domain->cell_count(), what);
  try {
    return ScalarField(domain, std::move(v));
  } catch (const InvalidArgument& e) {
    throw IoError(what + ": " + e.what());
  }
}

inline VectorField read_vector_field(const std::filesystem::path& path, const DomainPtr& domain) {
  std::istringstream in(read_text(path));
  const std::string what = path.string();
  detail::check_header(in, *domain, what);
  const auto v = detail::read_values(in, 2 * domain->cell_count(), what);
  std::vector<double> sx(domain->cell_count()), sy(domain->cell_count());
  for (std::size_t k = 0; k < sx.size(); ++k) {
    sx[k] = v[2 * k];
    sy[k] = v[2 * k + 1];
  }
  return VectorField(domain, std::move(sx), std::move(sy));
}

/// One `x y` vertex per line; blank lines and `#` comments are ignored.
inline ConvexPolygon parse_polygon(const std::string& text, const std::string& what = "polygon") {
  std::istringstream in(text);
  std::string line;
  std::vector<Point> pts;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double x, y;
    if (!(ls >> x)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw IoError(what + ":" + std::to_string(lineno) + ": expected 'x y'");
    }
    std::string rest;
    if (!(ls >> y) || (ls >> rest)) throw IoError(what + ":" + std::to_string(lineno) + ": expected 'x y'");
    pts.push_back({x, y});
  }
  try {
    return ConvexPolygon(std::move(pts));
  } catch (const InvalidArgument& e) {
    throw IoError(what + ": " + e.what());
  }
}

inline ConvexPolygon read_polygon_file(const std::filesystem::path& path) {
  return parse_polygon(read_text(path), path.string());
}

class IterationLog {
 public:
  void add(const IterationRecord& r) {
    text_ += std::to_string(r.stage) + ',' + std::to_string(r.iteration) + ',' + format_double(r.energy) + ',' +
             format_double(r.grad_norm) + ',' + format_double(r.mass) + ',' + format_double(r.multiplier) + '\n';
  }
  IterationObserver observer() {
    return [this](const IterationRecord& r) { add(r); };
  }
  std::string csv() const { return std::string(kIterationCsvHeader) + '\n' + text_; }

 private:
  std::string text_;
};

inline std::string sweep_csv(const LevelSetSweep& s) {
  std::string out = std::string(kSweepCsvHeader) + '\n';
  for (std::size_t i = 0; i < s.levels.size(); ++i) {
    out += format_double(s.levels[i]) + ',' + format_double(s.areas[i]) + ',' + format_double(s.perimeters[i]) +
           ',' + format_double(s.ratios[i]) + '\n';
  }
  return out;
}

inline nlohmann::json to_json(const Certificate& c) {
  return {{"sup_sigma", c.sup_sigma},
          {"extremality_gap", c.extremality_gap},
          {"pde_residual", c.pde_residual},
          {"mass", c.mass},
          {"multiplier", c.multiplier},
          {"rayleigh", c.rayleigh},
          {"energy", c.energy},
          {"sign_threshold", c.sign_threshold},
          {"n", c.n},
          {"estimator_spread", estimator_spread(c)}};
}

inline nlohmann::json to_json(const StageReport& r) {
  return {{"eps", r.params.eps},
          {"n", r.params.n},
          {"delta", r.params.delta},
          {"energy", r.energy},
          {"multiplier", r.multiplier},
          {"iterations", r.iterations},
          {"grad_norm", r.grad_norm},
          {"mass", r.mass},
          {"converged", r.converged}};
}

}  // namespace onelap
