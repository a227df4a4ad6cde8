#include "pfa/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pfa/ratiofit.hpp"

namespace pfa::cli {
namespace {

using nlohmann::json;

constexpr const char* kCsvHeader =
    "# gap,exact,pfa,ratio,abs_error,mode_cutoff,matrix_size,beta_cutoff,status";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string geometry;
  std::string sector = "both";
  std::string surface = "inner";
  std::string grid;
  bool electro = false;
  int matrix_size = 101;
  double tol = kDefaultRelTol;
  std::string format = "csv";
  std::string out_path;
  // fit only
  std::string model;
  std::string window;
  std::string input;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("cannot read ") + what + " from '" + text + "'");
  }
}

std::vector<double> parse_grid(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() < 3 || parts.size() > 4)
    throw UsageError("grid must look like min:max:count[:log|lin]");
  const double lo = parse_double(parts[0], "grid min");
  const double hi = parse_double(parts[1], "grid max");
  int count = 0;
  try {
    std::size_t used = 0;
    count = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
  } catch (const std::exception&) {
    throw UsageError("grid count must be an integer, got '" + parts[2] + "'");
  }
  bool log_spacing = false;
  if (parts.size() == 4) {
    if (parts[3] == "log") log_spacing = true;
    else if (parts[3] != "lin") throw UsageError("grid spacing must be 'log' or 'lin'");
  }
  try {
    return make_grid(lo, hi, count, log_spacing);
  } catch (const ConfigurationError& e) {
    throw UsageError(e.what());
  }
}

FitWindow parse_window(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() != 2) throw UsageError("window must look like min:max");
  FitWindow w{parse_double(parts[0], "window min"), parse_double(parts[1], "window max")};
  if (!(w.x_min <= w.x_max)) throw UsageError("window min exceeds max");
  return w;
}

SweepSpec make_spec(const RunConfig& cfg) {
  SweepSpec spec;
  if (cfg.geometry == "cc") spec.geometry = Geometry::ConcentricCylinders;
  else if (cfg.geometry == "cs") spec.geometry = Geometry::ConcentricSpheres;
  else if (cfg.geometry == "cp") spec.geometry = Geometry::CylinderPlane;
  else if (cfg.geometry == "sp-electro") spec.geometry = Geometry::SpherePlane;
  else throw UsageError("unknown geometry '" + cfg.geometry + "'");
  spec.interaction = (cfg.electro || spec.geometry == Geometry::SpherePlane)
                         ? Interaction::Electrostatic
                         : Interaction::Casimir;
  try {
    spec.sector = parse_sector(cfg.sector);
    spec.surface = parse_surface(cfg.surface);
  } catch (const ConfigurationError& e) {
    throw UsageError(e.what());
  }
  if (!(cfg.tol > 0.0 && cfg.tol <= 1e-2)) throw UsageError("--tol must lie in (0, 1e-2]");
  if (cfg.matrix_size < 1 || cfg.matrix_size % 2 == 0)
    throw UsageError("--matrix-size must be a positive odd integer");
  spec.rel_tol = cfg.tol;
  spec.matrix_size = cfg.matrix_size;
  spec.grid = parse_grid(cfg.grid);
  return spec;
}

struct Row {
  SweepPoint point;
  bool ok = true;
};

std::string csv_row(const Row& row) {
  const SweepPoint& p = row.point;
  const Truncation& t = p.exact.truncation;
  std::string line = fmt17(p.gap) + "," + fmt17(p.exact.value) + "," + fmt17(p.pfa.value) + "," +
                     fmt17(p.ratio) + "," + fmt17(p.exact.abs_error) + "," +
                     std::to_string(t.mode_cutoff) + "," +
                     (t.matrix_size ? std::to_string(*t.matrix_size) : std::string()) + "," +
                     fmt17(t.beta_cutoff) + "," + (row.ok ? "ok" : "failed");
  return line;
}

json json_row(const Row& row) {
  const SweepPoint& p = row.point;
  const Truncation& t = p.exact.truncation;
  json j = {{"gap", p.gap},
            {"exact", p.exact.value},
            {"pfa", p.pfa.value},
            {"ratio", p.ratio},
            {"abs_error", p.exact.abs_error},
            {"mode_cutoff", t.mode_cutoff},
            {"matrix_size", t.matrix_size ? json(*t.matrix_size) : json(nullptr)},
            {"beta_cutoff", t.beta_cutoff},
            {"status", row.ok ? "ok" : "failed"}};
  return j;
}

// Evaluates the grid in order; stops at the first failing point, which is kept
// as a failed row carrying the best estimate when one exists.
std::vector<Row> run_sweep(const SweepSpec& spec, std::string& failure) {
  std::vector<Row> rows;
  for (double gap : spec.grid) {
    Row row;
    try {
      row.point = evaluate_point(spec, gap);
    } catch (const AccuracyError& e) {
      row.ok = false;
      row.point.gap = gap;
      row.point.exact.value = e.best_estimate();
      row.point.exact.abs_error = e.abs_error();
      row.point.pfa.value = row.point.ratio = std::nan("");
      failure = "at gap " + fmt17(gap) + ": " + e.what();
    } catch (const Error& e) {
      row.ok = false;
      row.point.gap = gap;
      row.point.exact.value = row.point.pfa.value = row.point.ratio = std::nan("");
      failure = "at gap " + fmt17(gap) + ": " + e.what();
    }
    rows.push_back(row);
    if (!row.ok) break;
  }
  return rows;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int cmd_energy(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SweepSpec spec = make_spec(cfg);
  Output sink(cfg.out_path, out);
  std::string failure;
  const std::vector<Row> rows = run_sweep(spec, failure);
  if (cfg.format == "json") {
    json j = {{"geometry", cfg.geometry},
              {"interaction", spec.interaction == Interaction::Casimir ? "casimir" : "electrostatic"},
              {"sector", std::string(to_string(spec.sector))},
              {"pfa", std::string(to_string(spec.surface))},
              {"rows", json::array()}};
    for (const Row& r : rows) j["rows"].push_back(json_row(r));
    j["status"] = failure.empty() ? "ok" : "failed";
    *sink << j.dump(2) << '\n';
  } else {
    *sink << kCsvHeader << '\n';
    for (const Row& r : rows) *sink << csv_row(r) << '\n';
  }
  (*sink).flush();
  if (!failure.empty()) {
    err << "pfa energy: convergence failure " << failure << '\n';
    return kExitConvergence;
  }
  return kExitOk;
}

RatioCurve read_csv_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  std::string line;
  RatioCurve curve;
  int gap_col = -1;
  int ratio_col = -1;
  int status_col = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string header = line.substr(1);
      header.erase(0, header.find_first_not_of(' '));
      const std::vector<std::string> cols = split(header, ',');
      for (int i = 0; i < static_cast<int>(cols.size()); ++i) {
        if (cols[i] == "gap") gap_col = i;
        if (cols[i] == "ratio") ratio_col = i;
        if (cols[i] == "status") status_col = i;
      }
      continue;
    }
    if (gap_col < 0 || ratio_col < 0) throw UsageError("input CSV lacks a '# gap,...,ratio' header");
    const std::vector<std::string> cells = split(line, ',');
    const int need = std::max({gap_col, ratio_col, status_col});
    if (static_cast<int>(cells.size()) <= need) throw UsageError("short CSV row: " + line);
    if (status_col >= 0 && cells[status_col] != "ok")
      throw AccuracyError("input contains a failed row at gap " + cells[gap_col], 0.0, 0.0);
    curve.push_back(RatioSample{parse_double(cells[gap_col], "gap"),
                                parse_double(cells[ratio_col], "ratio"), std::nullopt});
  }
  return curve;
}

int cmd_fit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  FitModel model;
  try {
    model = parse_model(cfg.model);
  } catch (const ConfigurationError& e) {
    throw UsageError(e.what());
  }
  RatioCurve curve;
  if (!cfg.input.empty()) {
    curve = read_csv_curve(cfg.input);
  } else {
    if (cfg.geometry.empty() || cfg.grid.empty())
      throw UsageError("fit needs either --input or --geometry with --grid");
    const SweepSpec spec = make_spec(cfg);
    std::string failure;
    const std::vector<Row> rows = run_sweep(spec, failure);
    if (!failure.empty()) {
      err << "pfa fit: convergence failure " << failure << '\n';
      return kExitConvergence;
    }
    for (const Row& r : rows) curve.push_back(RatioSample{r.point.gap, r.point.ratio, std::nullopt});
  }
  if (curve.size() == 0) throw FitError("no samples to fit");
  const FitWindow window = cfg.window.empty()
                               ? FitWindow{curve.samples().front().x, curve.samples().back().x}
                               : parse_window(cfg.window);
  const FitResult result = fit(curve, model, window);

  Output sink(cfg.out_path, out);
  if (cfg.format == "json") {
    json coefficients = json::object();
    for (std::size_t i = 0; i < result.names.size(); ++i)
      coefficients[result.names[i]] = result.coefficients[i];
    json j = {{"model", std::string(to_string(model))},
              {"window", {result.window.x_min, result.window.x_max}},
              {"coefficients", coefficients},
              {"residual_rms", result.residual_rms},
              {"samples", result.samples_used}};
    *sink << j.dump(2) << '\n';
  } else {
    *sink << "# name,value\n";
    *sink << "model," << to_string(model) << '\n';
    *sink << "window_min," << fmt17(result.window.x_min) << '\n';
    *sink << "window_max," << fmt17(result.window.x_max) << '\n';
    for (std::size_t i = 0; i < result.names.size(); ++i)
      *sink << result.names[i] << ',' << fmt17(result.coefficients[i]) << '\n';
    *sink << "residual_rms," << fmt17(result.residual_rms) << '\n';
    *sink << "samples," << result.samples_used << '\n';
  }
  return kExitOk;
}

void add_sweep_options(CLI::App* cmd, RunConfig& cfg, bool geometry_required) {
  auto* g = cmd->add_option("--geometry", cfg.geometry, "cc | cs | cp | sp-electro")
                ->check(CLI::IsMember({"cc", "cs", "cp", "sp-electro"}));
  if (geometry_required) g->required();
  cmd->add_option("--sector", cfg.sector, "te | tm | both")
      ->check(CLI::IsMember({"te", "tm", "both"}));
  cmd->add_option("--pfa", cfg.surface, "inner | outer | geomean")
      ->check(CLI::IsMember({"inner", "outer", "geomean"}));
  auto* grid = cmd->add_option("--grid", cfg.grid, "min:max:count[:log|lin]");
  if (geometry_required) grid->required();
  cmd->add_flag("--electro", cfg.electro, "electrostatic energy instead of Casimir (cc, cs, cp)");
  cmd->add_option("--matrix-size", cfg.matrix_size, "cylinder-plane truncation N (odd)");
  cmd->add_option("--tol", cfg.tol, "relative tolerance in (0, 1e-2]");
  cmd->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", cfg.out_path, "output file (default: standard output)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and proximity-force energies for curved-surface geometries", "pfa"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* energy = app.add_subcommand("energy", "evaluate exact and PFA energies on a gap grid");
  add_sweep_options(energy, cfg, true);

  CLI::App* fit_cmd = app.add_subcommand("fit", "fit a ratio model to a sweep or a CSV file");
  add_sweep_options(fit_cmd, cfg, false);
  fit_cmd->add_option("--model", cfg.model, "linear | quad | quadlog | cubiclog | power | quartic | affine")
      ->required();
  fit_cmd->add_option("--window", cfg.window, "min:max (default: whole curve)");
  fit_cmd->add_option("--input", cfg.input, "CSV written by `pfa energy`");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "pfa: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (energy->parsed()) return cmd_energy(cfg, out, err);
    return cmd_fit(cfg, out, err);
  } catch (const UsageError& e) {
    err << "pfa: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const FitError& e) {
    err << "pfa fit: " << e.what() << '\n';
    return kExitFit;
  } catch (const AccuracyError& e) {
    err << "pfa: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const Error& e) {
    err << "pfa: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace pfa::cli
