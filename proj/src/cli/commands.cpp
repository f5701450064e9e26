#include "mercator/cli/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mercator/cli/verify.hpp"
#include "mercator/error.hpp"
#include "mercator/format.hpp"
#include "mercator/numeric/gudermann.hpp"
#include "mercator/render/frame_io.hpp"
#include "mercator/render/kernels.hpp"
#include "mercator/render/trace.hpp"
#include "mercator/series/gudermann_series.hpp"
#include "mercator/series/serialize.hpp"
#include "mercator/terrell/rotation.hpp"

namespace mercator::cli {

namespace {

/// Thrown by handlers for a failed invariant (exit 3).
struct InvariantFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("not a number: '" + text + "'");
  return value;
}

std::string format_extended(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return format_g17(x);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
  f << contents;
}

struct Options {
  std::string output;

  int euler_count = 0;

  std::string series_name;
  int order = 13;
  std::string format = "json";

  std::string eval;
  std::string formula = "arctanh-sin";
  bool inverse = false;

  std::string madd_x, madd_y;

  std::string velocity;
  std::optional<std::string> psi_tilde, psi;
  std::string table;

  double y0 = 0;
  std::string mesh = "cube";
  std::string sight_angles = "0";
  std::string mode = "svg";
  bool oracle = false;
  int subdivide = 0;
  std::string out_dir;
  int width = 512, height = 512;
  double fov = 0;
  std::string isa = "auto";

  int grid = 100;
  int jobs = 1;
};

std::string cmd_euler(const Options& o) {
  if (o.euler_count < 0) throw std::invalid_argument("--count must be non-negative");
  nlohmann::json arr = series::euler_numbers(o.euler_count).to_strings();
  return arr.dump() + "\n";
}

std::string cmd_coeffs(const Options& o) {
  if (o.order < 1) throw std::invalid_argument("--order must be at least 1");
  const bool json = o.format == "json";
  if (o.series_name == "group-law") {
    const auto law = series::mercator_group_law(o.order);
    return (json ? series::to_json(law) + "\n" : series::to_csv(law));
  }
  const auto s = o.series_name == "lambda" ? series::gudermann_log_series(o.order)
                                           : series::gudermann_exp_series(o.order);
  return json ? series::to_json(s) + "\n" : series::to_csv(s);
}

std::string cmd_gd(const Options& o) {
  const double x = parse_real(o.eval);
  const double y = o.inverse ? numeric::lambda_inv_num(x)
                             : numeric::lambda_num(x, numeric::parse_lambda_formula(o.formula));
  return format_extended(y) + "\n";
}

std::string cmd_madd(const Options& o) {
  return format_g17(numeric::mercator_add(parse_real(o.madd_x), parse_real(o.madd_y))) + "\n";
}

std::string cmd_rotate(const Options& o) {
  std::vector<terrell::RotationRow> rows;
  if (!o.table.empty()) {
    const auto colon = o.table.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--table expects vlist:tlist");
    const auto vs = parse_number_list(o.table.substr(0, colon));
    const auto ts = parse_number_list(o.table.substr(colon + 1));
    rows = terrell::rotation_table(vs, ts);
  } else {
    if (o.velocity.empty()) throw std::invalid_argument("rotate needs --v or --table");
    double t = 0;
    if (o.psi_tilde && o.psi) throw std::invalid_argument("give --psi-tilde or --psi, not both");
    if (o.psi) t = terrell::to_psi_tilde(parse_real(*o.psi)).radians();
    if (o.psi_tilde) t = parse_real(*o.psi_tilde);
    const double v = parse_real(o.velocity);
    rows = terrell::rotation_table(std::span(&v, 1), std::span(&t, 1));
  }
  std::ostringstream out;
  terrell::write_rotation_csv(out, rows);
  return out.str();
}

std::string cmd_render(const Options& o) {
  if (o.out_dir.empty()) throw std::invalid_argument("render needs --out");
  if (o.mode != "svg" && o.mode != "ppm") throw std::invalid_argument("--mode must be svg or ppm");
  render::kernels::set_active_isa(render::kernels::parse_isa(o.isa));

  const render::Mesh mesh =
      o.mesh == "cube" ? render::Mesh::unit_cube() : render::mesh_from_json(read_file(o.mesh));
  render::MotionState motion{parse_real(o.velocity), o.y0, 0.0};
  motion.validate();

  render::SequenceSettings settings;
  settings.options.subdivide = o.subdivide;
  settings.options.workers = o.jobs;
  settings.width = o.width;
  settings.height = o.height;
  if (o.fov > 0) settings.camera = render::Camera({0, 1, 0}, {0, 0, 1}, o.fov, o.width, o.height);

  const auto angles = parse_number_list(o.sight_angles);
  const render::Sequence seq = render::render_sequence(mesh, motion, angles, settings);

  const std::filesystem::path dir(o.out_dir);
  std::filesystem::create_directories(dir);
  std::ostringstream listing;
  for (std::size_t k = 0; k < seq.frames.size(); ++k) {
    const auto& pair = seq.frames[k];
    char name[32];
    std::snprintf(name, sizeof name, "frame_%03zu.%s", k, o.mode.c_str());
    std::ostringstream body;
    const render::Frame* overlay = o.oracle ? &pair.oracle : nullptr;
    if (o.mode == "svg") {
      render::write_svg(body, pair.apparent, overlay);
    } else {
      render::write_ppm(body, pair.apparent, pair.camera.width(), pair.camera.height(), overlay);
    }
    write_file(dir / name, body.str());
    listing << (dir / name).string() << '\n';
  }
  std::ostringstream csv;
  render::write_mismatch_csv(csv, seq.rows);
  write_file(dir / "mismatch.csv", csv.str());
  listing << (dir / "mismatch.csv").string() << '\n';
  return listing.str();
}

std::string cmd_verify(const Options& o, bool& failed) {
  VerifySettings s;
  s.order = o.order;
  s.grid = o.grid;
  s.workers = o.jobs;
  const VerifyReport report = run_verify(s);
  std::ostringstream out;
  report.print(out);
  failed = !report.all_passed();
  return out.str();
}

}  // namespace

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty item in number list '" + text + "'");
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      values.push_back(parse_real(item));
      continue;
    }
    const auto slash = item.find('/', dots);
    if (slash == std::string::npos) throw std::invalid_argument("range '" + item + "' needs /step");
    const double lo = parse_real(item.substr(0, dots));
    const double hi = parse_real(item.substr(dots + 2, slash - dots - 2));
    const double step = parse_real(item.substr(slash + 1));
    if (!(step > 0) || hi < lo) throw std::invalid_argument("bad range '" + item + "'");
    const long count = std::lround((hi - lo) / step);
    for (long k = 0; k <= count; ++k) values.push_back(lo + static_cast<double>(k) * step);
  }
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mercator formal group law and Terrell rotation toolkit", "mercator"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("-o,--output", o.output, "Write output to this file instead of stdout");

  auto* euler = app.add_subcommand("euler", "Secant (Euler) numbers E_0..E_m as a JSON array");
  euler->add_option("--count", o.euler_count, "m")->required();

  auto* coeffs = app.add_subcommand("coeffs", "Exact series coefficients");
  coeffs->add_option("--series", o.series_name)->required()->check(CLI::IsMember({"lambda", "lambda-inv", "group-law"}));
  coeffs->add_option("--order", o.order)->required();
  coeffs->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* gd = app.add_subcommand("gd", "Evaluate lambda (inverse Gudermannian) or its inverse");
  gd->add_option("--eval", o.eval)->required();
  gd->add_option("--formula", o.formula)->check(CLI::IsMember({"arctanh-sin", "log-tan-sec", "half-log-ratio"}));
  gd->add_flag("--inverse", o.inverse);

  auto* madd = app.add_subcommand("madd", "Mercator addition on the circle");
  madd->add_option("--x", o.madd_x)->required();
  madd->add_option("--y", o.madd_y)->required();

  auto* rotate = app.add_subcommand("rotate", "Apparent rotation by both routes, as CSV");
  rotate->add_option("--v", o.velocity);
  auto* psi_tilde_opt = rotate->add_option("--psi-tilde", o.psi_tilde);
  rotate->add_option("--psi", o.psi)->excludes(psi_tilde_opt);
  rotate->add_option("--table", o.table, "vlist:tlist, items a,b,... or lo..hi/step");

  auto* render_cmd = app.add_subcommand("render", "Ray-trace frames and the rotated-oracle comparison");
  render_cmd->add_option("--v", o.velocity)->required();
  render_cmd->add_option("--y0", o.y0)->required();
  render_cmd->add_option("--mesh", o.mesh, "cube or a mesh JSON file");
  render_cmd->add_option("--sight-angles", o.sight_angles);
  render_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"svg", "ppm"}));
  render_cmd->add_flag("--oracle", o.oracle);
  render_cmd->add_option("--subdivide", o.subdivide)->check(CLI::NonNegativeNumber);
  render_cmd->add_option("--out", o.out_dir)->required();
  render_cmd->add_option("--width", o.width)->check(CLI::PositiveNumber);
  render_cmd->add_option("--height", o.height)->check(CLI::PositiveNumber);
  render_cmd->add_option("--fov", o.fov, "Fixed camera looking +y; default aims at each frame");
  render_cmd->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  render_cmd->add_option("--isa", o.isa)->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--order", o.order);
  verify->add_option("--grid", o.grid);
  verify->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    std::string text;
    bool verify_failed = false;
    if (*euler) text = cmd_euler(o);
    else if (*coeffs) text = cmd_coeffs(o);
    else if (*gd) text = cmd_gd(o);
    else if (*madd) text = cmd_madd(o);
    else if (*rotate) text = cmd_rotate(o);
    else if (*render_cmd) text = cmd_render(o);
    else if (*verify) text = cmd_verify(o, verify_failed);

    if (o.output.empty()) {
      out << text;
    } else {
      write_file(o.output, text);
    }
    if (verify_failed) {
      err << "error: invariant check failed\n";
      return kInvariantFailure;
    }
    return kOk;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariantFailure;
  }
}

}  // namespace mercator::cli
