#include "gaplab/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gaplab/atlas_json.hpp"
#include "gaplab/closed_forms.hpp"
#include "gaplab/curve_io.hpp"
#include "gaplab/empirical_sim.hpp"
#include "gaplab/general_numeric.hpp"
#include "gaplab/symbolic_atlas.hpp"

namespace gaplab {

Command parse_command(const std::string& s) {
  if (s == "simulate") return Command::simulate;
  if (s == "closed") return Command::closed;
  if (s == "general") return Command::general;
  if (s == "atlas") return Command::atlas;
  if (s == "compare") return Command::compare;
  if (s == "density") return Command::density;
  throw std::invalid_argument("unknown command '" + s + "'");
}

std::string to_string(Command c) {
  switch (c) {
    case Command::simulate: return "simulate";
    case Command::closed: return "closed";
    case Command::general: return "general";
    case Command::atlas: return "atlas";
    case Command::compare: return "compare";
    case Command::density: return "density";
  }
  return "?";
}

namespace {

double parse_double(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v))
    throw std::invalid_argument(std::string("invalid ") + what + " '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

LambdaGrid LambdaGrid::parse_range(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.size() != 3) throw std::invalid_argument("grid must be start:stop:step, got '" + spec + "'");
  LambdaGrid g;
  g.start = parse_double(parts[0], "grid start");
  g.stop = parse_double(parts[1], "grid stop");
  g.step = parse_double(parts[2], "grid step");
  if (!(g.step > 0)) throw std::invalid_argument("grid step must be > 0");
  if (!(g.start >= 0 && g.stop >= g.start)) throw std::invalid_argument("grid needs 0 <= start <= stop");
  return g;
}

LambdaGrid LambdaGrid::parse_list(const std::string& spec) {
  LambdaGrid g;
  for (const auto& p : split(spec, ',')) g.values.push_back(parse_double(p, "lambda"));
  if (g.values.empty()) throw std::invalid_argument("empty lambda list");
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    if (g.values[i] < 0) throw std::invalid_argument("lambda values must be >= 0");
    if (i > 0 && g.values[i] < g.values[i - 1]) throw std::invalid_argument("lambda list must be non-decreasing");
  }
  return g;
}

std::vector<double> expand_grid(const LambdaGrid& grid, std::optional<double> t) {
  if (!grid.is_range()) return grid.values;
  const double eps = 1e-9 * grid.step;
  const auto n = static_cast<std::int64_t>(std::floor((grid.stop - grid.start) / grid.step + 1e-9));
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(n) + 6);
  for (std::int64_t i = 0; i <= n; ++i) pts.push_back(grid.start + static_cast<double>(i) * grid.step);
  if (grid.stop - pts.back() > eps) pts.push_back(grid.stop);
  if (t) {
    for (double b : {1.0, 1 / *t, 2.0, 2 / *t}) {
      if (b < grid.start - eps || b > grid.stop + eps) continue;
      auto it = std::lower_bound(pts.begin(), pts.end(), b - eps);
      if (it != pts.end() && std::fabs(*it - b) <= eps) *it = b;
      else pts.insert(it, b);
    }
  }
  return pts;
}

void validate(const RunSpec& spec) {
  if (!(spec.tol > 0)) throw std::invalid_argument("tol must be > 0");
  if (spec.command == Command::atlas) {
    if (!spec.h) throw std::invalid_argument("atlas needs --h");
    if (*spec.h < 0) throw std::invalid_argument("--h must be >= 0");
    return;
  }
  if (spec.t.empty()) throw std::invalid_argument(to_string(spec.command) + " needs --t");
  RationalScale::parse(spec.t);
  if (!spec.lambda_grid) throw std::invalid_argument(to_string(spec.command) + " needs --grid or --lambdas");
  if (spec.command == Command::simulate || spec.command == Command::compare) {
    if (!spec.J) throw std::invalid_argument(to_string(spec.command) + " needs --J");
    if (*spec.J < 1) throw std::invalid_argument("--J must be >= 1");
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      os_ = &fallback;
    } else {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output '" + path + "'");
      os_ = &file_;
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

OutputMeta base_meta(const RunSpec& spec) {
  OutputMeta meta;
  meta.timestamp = spec.meta;
  meta.fields.emplace_back("command", to_string(spec.command));
  if (!spec.t.empty()) meta.fields.emplace_back("t", RationalScale::parse(spec.t).str());
  if (spec.J) meta.fields.emplace_back("J", std::to_string(*spec.J));
  return meta;
}

void emit_curve(const RunSpec& spec, const GapCurve& curve, std::ostream& out, const std::string& column) {
  Sink sink(spec.output, out);
  const OutputMeta meta = base_meta(spec);
  if (spec.format == OutputFormat::json) *sink << curve_to_json(curve, meta, column).dump(2) << '\n';
  else write_curve_csv(*sink, curve, meta, column);
}

GapCurve analytic_curve(const RationalScale& t, const std::vector<double>& lambdas, bool density) {
  GapCurve curve;
  curve.engine = density ? "density" : "closed";
  curve.t = t;
  curve.lambdas = lambdas;
  for (double l : lambdas) curve.values.push_back(density ? g_density(t.to_double(), l) : G_closed(t.to_double(), l));
  return curve;
}

double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
  return d;
}

int run_compare(const RunSpec& spec, const RationalScale& t, const std::vector<double>& lambdas,
                std::ostream& out, std::ostream& err) {
  const SceneConfig scene(t, *spec.J);
  auto t0 = Clock::now();
  const GapCurve emp = empirical_G(scene, lambdas);
  const double t_emp = seconds_since(t0);

  const bool has_closed = t.compare(make_rational(2, 3)) > 0;
  std::optional<GapCurve> closed;
  t0 = Clock::now();
  if (has_closed) closed = analytic_curve(t, lambdas, false);
  const double t_closed = seconds_since(t0);

  t0 = Clock::now();
  const GapCurve general = general_curve(t, lambdas, spec.tol);
  const double t_general = seconds_since(t0);

  const double emp_general = sup_diff(emp.values, general.values);
  const double emp_closed = closed ? sup_diff(emp.values, closed->values) : NAN;
  const double closed_general = closed ? sup_diff(closed->values, general.values) : NAN;
  const bool pass = emp_general <= spec.empirical_tol &&
                    (!closed || (emp_closed <= spec.empirical_tol && closed_general <= spec.engine_tol));

  std::vector<std::pair<std::string, std::string>> summary = {
      {"sup_emp_closed", format_number(emp_closed)},
      {"sup_emp_general", format_number(emp_general)},
      {"sup_closed_general", format_number(closed_general)},
      {"empirical_tol", format_number(spec.empirical_tol)},
      {"engine_tol", format_number(spec.engine_tol)},
      {"status", pass ? "pass" : "fail"},
  };
  if (spec.meta) {
    summary.emplace_back("runtime_empirical_s", format_number(t_emp));
    summary.emplace_back("runtime_closed_s", format_number(t_closed));
    summary.emplace_back("runtime_general_s", format_number(t_general));
  }

  Sink sink(spec.output, out);
  const OutputMeta meta = base_meta(spec);
  auto row_diff = [&](std::size_t i) {
    double d = std::fabs(emp.values[i] - general.values[i]);
    if (closed) {
      d = std::max(d, std::fabs(emp.values[i] - closed->values[i]));
      d = std::max(d, std::fabs(closed->values[i] - general.values[i]));
    }
    return d;
  };
  if (spec.format == OutputFormat::json) {
    nlohmann::json j;
    j["schema"] = kSchemaVersion;
    for (const auto& [k, v] : meta.fields) j["meta"][k] = v;
    if (meta.timestamp) j["generated"] = utc_timestamp();
    auto& rows = j["rows"] = nlohmann::json::array();
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      nlohmann::json r = {{"lambda", lambdas[i]}, {"G_emp", emp.values[i]}, {"G_general", general.values[i]},
                          {"diff_max", row_diff(i)}};
      r["G_closed"] = closed ? nlohmann::json(closed->values[i]) : nlohmann::json(nullptr);
      rows.push_back(std::move(r));
    }
    for (const auto& [k, v] : summary) j["summary"][k] = v;
    *sink << j.dump(2) << '\n';
  } else {
    write_csv_preamble(*sink, meta);
    *sink << "lambda,G_emp,G_closed,G_general,diff_max\n";
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      *sink << format_number(lambdas[i]) << ',' << format_number(emp.values[i]) << ','
            << (closed ? format_number(closed->values[i]) : std::string()) << ','
            << format_number(general.values[i]) << ',' << format_number(row_diff(i)) << '\n';
    }
    *sink << "# summary\n";
    for (const auto& [k, v] : summary) *sink << "# " << k << '=' << v << '\n';
  }
  if (!has_closed)
    err << "compare: no closed form for t <= 2/3, compared the empirical curve against 'general' only\n";
  if (!pass) err << "compare: tolerance exceeded\n";
  return pass ? 0 : 1;
}

int run_atlas(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  const RegionAtlas atlas = G_general_symbolic(*spec.h);
  const AtlasReport report = validate_atlas(atlas);
  nlohmann::json j = atlas_to_json(atlas);
  j["validation"] = report.to_json();
  if (spec.meta) j["generated"] = utc_timestamp();
  Sink sink(spec.output, out);
  *sink << j.dump(2) << '\n';
  for (const auto& f : report.failures) err << "atlas: " << f << '\n';
  return report.ok ? 0 : 1;
}

}  // namespace

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    validate(spec);
    if (spec.command == Command::atlas) return run_atlas(spec, out, err);

    const RationalScale t = RationalScale::parse(spec.t);
    const std::vector<double> lambdas = expand_grid(*spec.lambda_grid, t.to_double());
    switch (spec.command) {
      case Command::simulate: {
        const SceneConfig scene(t, *spec.J);
        const GapSequence gaps = gap_sequence(enumerate_and_sort(scene));
        GapCurve curve = empirical_G(gaps, scene.point_count(), lambdas);
        curve.scene = scene;
        curve.t = t;
        if (!spec.gap_dump.empty()) write_gap_dump(spec.gap_dump, gaps.gaps);
        emit_curve(spec, curve, out, "G");
        return 0;
      }
      case Command::closed:
        emit_curve(spec, analytic_curve(t, lambdas, false), out, "G");
        return 0;
      case Command::density:
        emit_curve(spec, analytic_curve(t, lambdas, true), out, "g");
        return 0;
      case Command::general:
        emit_curve(spec, general_curve(t, lambdas, spec.tol), out, "G");
        return 0;
      case Command::compare:
        return run_compare(spec, t, lambdas, out, err);
      case Command::atlas:
        break;
    }
    return 0;
  } catch (const UnsupportedClosedForm& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace gaplab
