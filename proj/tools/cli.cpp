#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ccheb/chebyshev.hpp"
#include "ccheb/faber.hpp"
#include "ccheb/zeros.hpp"
#include "svg.hpp"

namespace ccheb::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr int kSignificant = 30;

std::string dec(const Scalar& x) { return x.to_string(kSignificant); }

// Shortest round-trip form.
std::string dec(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x == 0.0 ? 0.0 : x);
  return std::string(buf, res.ptr);
}

const char* version() { return CCHEB_VERSION; }

Json provenance(const RunConfig& cfg) {
  return Json{{"digits", cfg.digits}, {"threshold", cfg.threshold}, {"version", version()}};
}

std::string provenance_columns(const RunConfig& cfg) {
  return std::to_string(cfg.digits) + "," + cfg.threshold + "," + version();
}

bool wants(const RunConfig& cfg, const std::string& format) {
  return std::find(cfg.formats.begin(), cfg.formats.end(), format) != cfg.formats.end();
}

// Output path for one format: --out as given when it is the only format,
// otherwise --out with the format's extension. Empty means stdout.
std::string path_for(const RunConfig& cfg, const std::string& format) {
  if (cfg.out.empty()) return {};
  fs::path p(cfg.out);
  if (cfg.formats.size() == 1 && cfg.formats.front() == format && p.has_extension())
    return p.string();
  return p.replace_extension("." + format).string();
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  if (fs::path(path).has_parent_path()) fs::create_directories(fs::path(path).parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Scalar parse_scalar(const std::string& text, const char* what) {
  try {
    return Scalar(text);
  } catch (const std::exception&) {
    throw ConfigError(std::string("invalid ") + what + " '" + text + "'");
  }
}

std::vector<Complex> parse_coeffs(const std::string& text) {
  std::vector<Complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      out.emplace_back(parse_scalar(item, "coefficient"));
    } else {
      out.emplace_back(parse_scalar(item.substr(0, colon), "coefficient"),
                       parse_scalar(item.substr(colon + 1), "coefficient"));
    }
  }
  return out;
}

ChebyshevOptions cheb_options(const RunConfig& cfg) {
  ChebyshevOptions o;
  o.threshold = Scalar(cfg.threshold);
  o.use_symmetry = cfg.symmetry != "off";
  o.grid_size = cfg.grid;
  return o;
}

Json polynomial_json(const MonicPolynomial& p) {
  Json arr = Json::array();
  for (int k = 0; k <= p.degree(); ++k) {
    const Complex a = p.coefficient(k);
    arr.push_back(Json{{"k", k}, {"re", dec(a.re)}, {"im", dec(a.im)}});
  }
  return arr;
}

Json record_json(const ChebyshevRecord& rec, const RunConfig& cfg) {
  Json j;
  j["label"] = rec.label;
  j["degree"] = rec.degree;
  j["coefficients"] = polynomial_json(rec.polynomial);
  j["sup_norm"] = dec(rec.sup_norm);
  j["lower_bound"] = dec(rec.lower_bound);
  j["capacity"] = dec(rec.capacity);
  j["widom"] = dec(rec.widom);
  j["rel_error"] = dec(rec.rel_error);
  j["iterations"] = rec.iterations;
  j["status"] = to_string(rec.status);
  j["provenance"] = provenance(cfg);
  return j;
}

int solver_failure(const std::exception& e, const char* kind, const RunConfig& cfg,
                   std::ostream& out) {
  Json j{{"error", kind}, {"message", e.what()}, {"command", cfg.command},
         {"set", cfg.family}, {"provenance", provenance(cfg)}};
  out << dump(j);
  return kSolverFailure;
}

}  // namespace

bool parse_args(int argc, const char* const* argv, RunConfig& cfg, std::ostream& out) {
  CLI::App app{"Complex Chebyshev polynomials, Widom factors and Faber comparisons"};
  app.set_config("--config", "", "Key-value config file (TOML/INI); flags win");
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  app.add_option("--set", cfg.family, "polygon | hypocycloid | lune | power-lemniscate | poly-lemniscate");
  app.add_option("--m", cfg.m, "Polygon sides, cusps or lemniscate order");
  app.add_option("--alpha", cfg.alpha, "Lune parameter in (0, 2]");
  app.add_option("--r", cfg.r, "Level r >= 1 (rho for poly-lemniscate)");
  app.add_option("--coeffs", cfg.coeffs, "Poly-lemniscate coefficients, low to high: a0,a1,... (re or re:im)");
  app.add_option("--degree,--degrees", cfg.degrees, "Degree(s), comma separated")->delimiter(',');
  app.add_option("--threshold", cfg.threshold, "Relative duality-gap threshold");
  app.add_option("--digits", cfg.digits, "Working precision in decimal digits");
  app.add_option("--symmetry", cfg.symmetry, "auto | on | off")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  app.add_option("--grid", cfg.grid, "Search grid size (0: automatic)");
  app.add_option("--jobs", cfg.jobs, "Worker threads for tables and sweeps");
  app.add_option("--out", cfg.out, "Output path (stdout when omitted)");
  app.add_option("--format", cfg.formats, "csv, json, svg (comma separated)")
      ->delimiter(',')
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  app.add_option("--samples", cfg.samples, "Curve samples for curve-dump and plots");
  app.add_option("--r-grid", cfg.r_grid, "Explicit levels for faber-compare")->delimiter(',');
  app.add_option("--r-min", cfg.r_min, "Smallest level of the log-spaced sweep");
  app.add_option("--r-max", cfg.r_max, "Largest level of the log-spaced sweep");
  app.add_option("--r-count", cfg.r_count, "Points in the log-spaced sweep");
  app.add_flag("--fit", cfg.fit, "widom-table: fit log(W_n - 1) against log(n)");

  const std::pair<const char*, const char*> commands[] = {
      {"cheb", "Chebyshev polynomial of one degree (JSON)"},
      {"widom-table", "Widom factors for a list of degrees (CSV)"},
      {"faber-compare", "Faber/Chebyshev coefficient distances on level curves (CSV + JSON)"},
      {"zeros", "Zeros of the Chebyshev polynomial (CSV, SVG)"},
      {"curve-dump", "Sampled boundary curve (CSV)"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&cfg, name = std::string(name)] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, out);
    return false;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    throw ConfigError(msg.str().empty() ? e.what() : msg.str());
  }
  return true;
}

void validate(RunConfig& cfg) {
  if (cfg.digits == 0) cfg.digits = cfg.command == "faber-compare" ? 64 : kDefaultDigits;
  if (cfg.digits < kMinDigits)
    throw ConfigError("--digits must be >= " + std::to_string(kMinDigits));
  double thr = 0;
  try {
    std::size_t used = 0;
    thr = std::stod(cfg.threshold, &used);
    if (used != cfg.threshold.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw ConfigError("invalid --threshold '" + cfg.threshold + "'");
  }
  if (!(thr > 0 && thr < 1) || std::log10(thr) <= -(cfg.digits - 20)) {
    throw ConfigError("--threshold must lie in (1e-" + std::to_string(cfg.digits - 20) +
                      ", 1) at " + std::to_string(cfg.digits) + " digits");
  }
  if (cfg.jobs < 1) throw ConfigError("--jobs must be >= 1");
  if (cfg.samples < 1) throw ConfigError("--samples must be >= 1");

  const bool needs_degree = cfg.command == "cheb" || cfg.command == "zeros" ||
                            cfg.command == "widom-table" || cfg.command == "faber-compare";
  if (needs_degree && cfg.degrees.empty()) throw ConfigError("--degree is required");
  for (int d : cfg.degrees)
    if (d < 1) throw ConfigError("degrees must be >= 1");
  if ((cfg.command == "cheb" || cfg.command == "zeros" || cfg.command == "faber-compare") &&
      cfg.degrees.size() != 1)
    throw ConfigError(cfg.command + " takes a single --degree");

  if (cfg.formats.empty()) cfg.formats = {cfg.command == "cheb" ? "json" : "csv"};
  if (cfg.command == "faber-compare" && cfg.r_grid.empty() && cfg.r_count < 2)
    throw ConfigError("--r-count must be >= 2");
  try {
    parse_family(cfg.family);
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}

CurveSpec curve_spec(const RunConfig& cfg) {
  CurveSpec s;
  s.family = parse_family(cfg.family);
  s.m = cfg.m;
  s.alpha = parse_scalar(cfg.alpha, "--alpha");
  s.r = parse_scalar(cfg.r, "--r");
  if (s.family == CurveFamily::polynomial_lemniscate) {
    if (cfg.coeffs.empty()) throw ConfigError("poly-lemniscate needs --coeffs");
    s.coeffs = parse_coeffs(cfg.coeffs);
  }
  return s;
}

int cmd_cheb(const RunConfig& cfg, std::ostream& out) {
  const BoundaryCurve curve = curve_spec(cfg).build();
  const ChebyshevRecord rec = chebyshev(curve, cfg.degrees.front(), cheb_options(cfg));
  const Json j = record_json(rec, cfg);
  if (wants(cfg, "json")) emit(path_for(cfg, "json"), dump(j), out);
  if (wants(cfg, "csv")) {
    std::string csv = "k,re,im,digits,threshold,version\n";
    for (int k = 0; k <= rec.polynomial.degree(); ++k) {
      const Complex a = rec.polynomial.coefficient(k);
      csv += std::to_string(k) + "," + dec(a.re) + "," + dec(a.im) + "," +
             provenance_columns(cfg) + "\n";
    }
    emit(path_for(cfg, "csv"), csv, out);
  }
  return rec.status == RemezStatus::converged ? kOk : kSolverFailure;
}

int cmd_widom_table(const RunConfig& cfg, std::ostream& out) {
  const BoundaryCurve curve = curve_spec(cfg).build();
  const auto records = widom_table(curve, cfg.degrees, cheb_options(cfg), cfg.jobs);

  bool failed = false;
  std::string csv = "degree,widom,rel_error,sup_norm,iterations,status,digits,threshold,version\n";
  Json rows = Json::array();
  std::vector<double> xs, ys;
  for (const auto& rec : records) {
    std::string status = rec.ok() ? to_string(rec.status) : "error: " + rec.error;
    failed = failed || !rec.ok() || rec.status != RemezStatus::converged;
    for (auto& c : status)
      if (c == ',' || c == '\n') c = ';';
    csv += std::to_string(rec.degree) + "," + (rec.ok() ? dec(rec.widom) : "") + "," +
           (rec.ok() ? dec(rec.rel_error) : "") + "," + (rec.ok() ? dec(rec.sup_norm) : "") +
           "," + std::to_string(rec.iterations) + "," + status + "," + provenance_columns(cfg) +
           "\n";
    Json row{{"degree", rec.degree}};
    if (rec.ok()) {
      row["widom"] = dec(rec.widom);
      row["rel_error"] = dec(rec.rel_error);
      row["sup_norm"] = dec(rec.sup_norm);
      row["iterations"] = rec.iterations;
      row["status"] = to_string(rec.status);
      const double excess = (rec.widom - Scalar(1)).to_double();
      if (excess > 0) {
        xs.push_back(std::log(static_cast<double>(rec.degree)));
        ys.push_back(std::log(excess));
      }
    } else {
      row["error"] = rec.error;
    }
    rows.push_back(row);
  }
  if (wants(cfg, "csv")) emit(path_for(cfg, "csv"), csv, out);
  if (wants(cfg, "json")) {
    Json j{{"label", curve.label()}, {"rows", rows}, {"provenance", provenance(cfg)}};
    if (cfg.fit && xs.size() >= 2) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      const double n = static_cast<double>(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
      }
      j["fit_log_excess_slope"] = dec((n * sxy - sx * sy) / (n * sxx - sx * sx));
    }
    emit(path_for(cfg, "json"), dump(j), out);
  }
  return failed ? kSolverFailure : kOk;
}

int cmd_faber_compare(const RunConfig& cfg, std::ostream& out) {
  const CurveSpec spec = curve_spec(cfg);
  std::vector<Scalar> grid;
  if (!cfg.r_grid.empty()) {
    for (const auto& r : cfg.r_grid) grid.push_back(parse_scalar(r, "--r-grid entry"));
  } else {
    grid = log_spaced(parse_scalar(cfg.r_min, "--r-min"), parse_scalar(cfg.r_max, "--r-max"),
                      cfg.r_count);
  }
  const int degree = cfg.degrees.front();
  const SweepResult res = faber_connection_sweep(spec, degree, grid, cheb_options(cfg), cfg.jobs);

  bool failed = false;
  std::string csv = "r,distance,censored,iterations,status,digits,threshold,version\n";
  Json points = Json::array();
  for (const auto& pt : res.points) {
    std::string status = pt.ok() ? "ok" : "error: " + pt.error;
    for (auto& c : status)
      if (c == ',' || c == '\n') c = ';';
    failed = failed || !pt.ok();
    csv += dec(pt.r) + "," + (pt.ok() ? dec(pt.distance) : "") + "," +
           (pt.censored ? "true" : "false") + "," + std::to_string(pt.iterations) + "," + status +
           "," + provenance_columns(cfg) + "\n";
    Json p{{"r", dec(pt.r)}};
    if (pt.ok()) {
      p["distance"] = dec(pt.distance);
      p["censored"] = pt.censored;
    } else {
      p["error"] = pt.error;
    }
    points.push_back(p);
  }
  emit(path_for(cfg, "csv"), csv, out);
  if (!cfg.out.empty() || wants(cfg, "json")) {
    Json side{{"set", spec.build().label()},
              {"degree", degree},
              {"slope", res.slope ? Json(dec(*res.slope)) : Json(nullptr)},
              {"points", points},
              {"provenance", provenance(cfg)}};
    std::string path = path_for(cfg, "json");
    if (!path.empty() && path == path_for(cfg, "csv")) path += ".json";
    emit(path, dump(side), out);
  }
  return failed ? kSolverFailure : kOk;
}

int cmd_zeros(const RunConfig& cfg, std::ostream& out) {
  const BoundaryCurve curve = curve_spec(cfg).build();
  const ChebyshevRecord rec = chebyshev(curve, cfg.degrees.front(), cheb_options(cfg));
  const ZeroSet zs = polynomial_zeros(rec.polynomial);

  if (wants(cfg, "csv")) {
    std::string csv = "re,im,residual,digits,threshold,version\n";
    for (std::size_t i = 0; i < zs.zeros.size(); ++i) {
      csv += dec(zs.zeros[i].re) + "," + dec(zs.zeros[i].im) + "," + dec(zs.residuals[i]) + "," +
             provenance_columns(cfg) + "\n";
    }
    emit(path_for(cfg, "csv"), csv, out);
  }
  if (wants(cfg, "svg")) {
    std::vector<std::complex<double>> pts, zd;
    for (const auto& z : sample_curve(curve, cfg.samples))
      pts.emplace_back(z.re.to_double(), z.im.to_double());
    for (const auto& z : zs.zeros) zd.emplace_back(z.re.to_double(), z.im.to_double());
    SvgStyle style;
    style.title = "zeros of T_" + std::to_string(rec.degree) + " on " + curve.label() +
                  " (digits " + std::to_string(cfg.digits) + ", threshold " + cfg.threshold +
                  ", version " + version() + ")";
    emit(path_for(cfg, "svg"), scatter_svg(pts, zd, style), out);
  }
  if (wants(cfg, "json")) {
    const ZeroSummary s = zero_measure_summary(zs, curve);
    Json fr = Json::array();
    for (std::size_t k = 0; k < s.shrink.size(); ++k)
      fr.push_back(Json{{"s", dec(s.shrink[k])}, {"fraction", dec(s.interior_fraction[k])}});
    Json j{{"label", curve.label()},
           {"degree", rec.degree},
           {"count", s.count},
           {"diameter", dec(s.diameter)},
           {"min_distance", dec(s.min_distance)},
           {"near_tolerance", dec(s.near_tolerance)},
           {"near_fraction", dec(s.near_fraction)},
           {"interior_fraction", fr},
           {"provenance", provenance(cfg)}};
    emit(path_for(cfg, "json"), dump(j), out);
  }
  return rec.status == RemezStatus::converged ? kOk : kSolverFailure;
}

int cmd_curve_dump(const RunConfig& cfg, std::ostream& out) {
  const BoundaryCurve curve = curve_spec(cfg).build();
  std::string csv = "t,re,im,digits,threshold,version\n";
  const Scalar count(static_cast<long>(cfg.samples));
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const Scalar t = Scalar(static_cast<long>(i)) / count;
    const Complex z = curve(t);
    csv += dec(t) + "," + dec(z.re) + "," + dec(z.im) + "," + provenance_columns(cfg) + "\n";
  }
  emit(path_for(cfg, "csv"), csv, out);
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    if (!parse_args(argc, argv, cfg, out)) return kOk;
    validate(cfg);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kBadConfig;
  }

  const NumericContext ctx(cfg.digits);
  NumericContext::Scope scope(ctx);
  try {
    if (cfg.command == "cheb") return cmd_cheb(cfg, out);
    if (cfg.command == "widom-table") return cmd_widom_table(cfg, out);
    if (cfg.command == "faber-compare") return cmd_faber_compare(cfg, out);
    if (cfg.command == "zeros") return cmd_zeros(cfg, out);
    if (cfg.command == "curve-dump") return cmd_curve_dump(cfg, out);
    err << "error: unknown command\n";
    return kBadConfig;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const UnsupportedFamily& e) {
    err << "error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return solver_failure(e, "solver", cfg, out);
  }
}

}  // namespace ccheb::cli
