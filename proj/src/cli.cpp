#include "shapeid/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "shapeid/synth.hpp"

namespace shapeid::cli {

namespace {

using nlohmann::json;

json point_json(Pixel p) { return json::array({p.x, p.y}); }

json features_json(const FeatureVector& f, const Evidence& e) {
  json j;
  j["corners"] = json::array();
  for (const auto& p : f.corners.points) j["corners"].push_back(point_json(p));
  j["distances"] = f.d;
  j["sides"] = e.sides;
  j["diagonals"] = e.diagonals;
  j["sd"] = f.sd;
  j["area_px"] = f.area_px;
  j["poly_area"] = f.poly_area;
  j["bulge_ratio"] = e.bulge_ratio ? json(*e.bulge_ratio) : json(nullptr);
  if (e.hemisphere) {
    const auto& h = *e.hemisphere;
    j["hemisphere"] = {{"center", {h.center.x, h.center.y}},
                       {"r", h.r},
                       {"aligned_axis", h.aligned_axis == Axis::Horizontal ? "horizontal" : "vertical"}};
  } else {
    j["hemisphere"] = nullptr;
  }
  return j;
}

bool parse_size(const std::string& s, int& w, int& h) {
  const auto x = s.find('x');
  if (x == std::string::npos) return false;
  const auto num = [](std::string_view v, int& out) {
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    return ec == std::errc() && p == v.data() + v.size() && out >= 1 && out <= (1 << 15);
  };
  return num(std::string_view(s).substr(0, x), w) && num(std::string_view(s).substr(x + 1), h);
}

bool parse_threshold(const std::string& s, ThresholdMethod& m) {
  if (s == "otsu") {
    m = OtsuThreshold{};
    return true;
  }
  if (s.rfind("fixed:", 0) != 0) return false;
  int level = 0;
  const auto v = std::string_view(s).substr(6);
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), level);
  if (ec != std::errc() || p != v.data() + v.size() || level < 0 || level > 255) return false;
  m = FixedThreshold{level};
  return true;
}

std::string fixed(double v, int prec) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(prec) << v;
  return os.str();
}

struct ClassifyArgs {
  std::string path;
  bool json = false;
  bool explain = false;
  std::string threshold = "otsu";
  Tolerances tol;
  double degen_eps = 0;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err) {
  PipelineOptions opts;
  if (!parse_threshold(a.threshold, opts.threshold)) {
    err << "error: --threshold must be 'otsu' or 'fixed:N' with N in [0,255]\n";
    return 2;
  }
  opts.tolerances = a.tol;
  if (a.degen_eps > 0) opts.tolerances.degen_eps = a.degen_eps;
  try {
    opts.tolerances.validate();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Raster image;
  try {
    image = read_pgm_file(a.path);
  } catch (const Error& e) {
    err << "error: " << a.path << ": " << e.what() << "\n";
    return 1;
  }

  Report report{a.path, {}};
  try {
    report.result = run_pipeline(image, opts);
  } catch (const StageError& e) {
    err << "error: " << a.path << ": stage " << e.what() << "\n";
    return 1;
  }

  if (a.json) {
    out << report_json(report).dump(2) << "\n";
  } else {
    out << to_string(report.result.verdict.label) << "\n";
    if (a.explain) out << explain(report.result.verdict);
  }
  return 0;
}

struct GenerateArgs {
  std::string shape;
  std::string size = "256x256";
  std::optional<double> bulge;
  std::optional<double> rotate;
  std::string output;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  int w = 0, h = 0;
  if (!parse_size(a.size, w, h)) {
    err << "error: --size must look like WxH\n";
    return 2;
  }
  const bool all = a.shape == "corpus";
  const auto kind = parse_shape_class(a.shape);
  if (!all && !kind) {
    err << "error: unknown shape '" << a.shape << "'\n";
    return 2;
  }

  std::vector<CorpusEntry> entries;
  for (auto e : corpus(w, h)) {
    if (!all && e.spec.kind != *kind) continue;
    const auto k = e.spec.kind;
    if (a.bulge && (k == ShapeClass::Cylinder || k == ShapeClass::Cone)) e.spec.bulge = *a.bulge;
    if (a.rotate && k != ShapeClass::Cylinder && k != ShapeClass::Cone && k != ShapeClass::Hemisphere) {
      e.spec.rotation = *a.rotate;
    }
    if (!all) {
      if (a.bulge && e.spec.bulge != *a.bulge) {
        err << "error: --bulge applies to cylinder and cone only\n";
        return 2;
      }
      if (a.rotate && e.spec.rotation != *a.rotate) {
        err << "error: --rotate applies to rectangle, square, rhombus, kite and triangle only\n";
        return 2;
      }
    }
    entries.push_back(std::move(e));
  }

  namespace fs = std::filesystem;
  try {
    std::vector<std::pair<fs::path, Raster>> outputs;
    for (const auto& e : entries) {
      const fs::path path = all ? fs::path(a.output) / (e.name + ".pgm") : fs::path(a.output);
      outputs.emplace_back(path, render(e.spec, w, h));
    }
    if (all) fs::create_directories(a.output);
    for (const auto& [path, raster] : outputs) {
      write_pgm_file(path, raster, true);
      out << path.string() << "\n";
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int cmd_bench(const std::string& size, int repeat, std::ostream& out, std::ostream& err) {
  int w = 0, h = 0;
  if (!parse_size(size, w, h)) {
    err << "error: --size must look like WxH\n";
    return 2;
  }
  try {
    out << bench_csv(run_bench(w, h, repeat));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

json report_json(const Report& r) {
  const auto& v = r.result.verdict;
  json evidence = json::object();
  for (const auto& rule : v.evidence.rules) evidence[rule.name] = rule.passed;
  evidence["fired"] = v.fired.empty() ? json(nullptr) : json(v.fired);
  evidence["degen_eps"] = v.evidence.degen_eps;
  if (v.evidence.cone_surface) evidence["cone_surface"] = *v.evidence.cone_surface;

  return {
      {"file", r.file},
      {"label", std::string(to_string(v.label))},
      {"elapsed_ms", r.result.elapsed_ms},
      {"features", features_json(r.result.features, v.evidence)},
      {"evidence", evidence},
  };
}

std::vector<BenchRow> run_bench(int width, int height, int repeat) {
  if (repeat < 1) throw Error("--repeat must be at least 1");
  const std::string size = std::to_string(width) + "x" + std::to_string(height);
  std::vector<BenchRow> rows;
  BenchRow avg{"average", size, 0, 0, 0};

  const auto entries = corpus(width, height);
  const auto kinds = kShapeClasses;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Raster image = render(entries[i].spec, width, height);
    BenchRow row{std::string(to_string(kinds[i])), size, 0,
                 std::numeric_limits<double>::infinity(), 0};
    for (int k = 0; k < repeat; ++k) {
      const auto res = run_pipeline(image);
      if (res.verdict.label != kinds[i]) {
        throw Error(std::string(to_string(kinds[i])) + " misclassified as " +
                    std::string(to_string(res.verdict.label)));
      }
      row.mean_ms += res.elapsed_ms;
      row.min_ms = std::min(row.min_ms, res.elapsed_ms);
      row.max_ms = std::max(row.max_ms, res.elapsed_ms);
    }
    row.mean_ms /= repeat;
    avg.mean_ms += row.mean_ms;
    avg.min_ms += row.min_ms;
    avg.max_ms += row.max_ms;
    rows.push_back(row);
  }
  const double n = static_cast<double>(rows.size());
  avg.mean_ms /= n;
  avg.min_ms /= n;
  avg.max_ms /= n;
  rows.push_back(avg);
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string s = "shape,size,mean_ms,min_ms,max_ms\n";
  for (const auto& r : rows) {
    s += r.shape + "," + r.size + "," + fixed(r.mean_ms, 4) + "," + fixed(r.min_ms, 4) + "," +
         fixed(r.max_ms, 4) + "\n";
  }
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rule-based shape recognition for grayscale PGM images", "shapeid"};
  app.require_subcommand(1);

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand(
      "classify",
      "Classify the single shape in a PGM image. Timing covers segmentation through "
      "classification and excludes reading the file.");
  classify_cmd->add_option("path", ca.path, "PGM file (P2 or P5)")->required();
  classify_cmd->add_flag("--json", ca.json, "Print the full JSON report");
  classify_cmd->add_flag("--explain", ca.explain, "Print the evidence after the label");
  classify_cmd->add_option("--threshold", ca.threshold, "otsu | fixed:N")->capture_default_str();
  classify_cmd->add_option("--rel-eps", ca.tol.rel_eps, "Relative length tolerance")
      ->capture_default_str();
  classify_cmd->add_option("--area-eps", ca.tol.area_eps, "Relative area tolerance")
      ->capture_default_str();
  classify_cmd->add_option("--degen-eps", ca.degen_eps,
                           "Degenerate-corner distance in px (default max(3, 5% of the longest distance))");

  GenerateArgs ga;
  auto* generate_cmd = app.add_subcommand("generate", "Render a test shape, or all eight with 'corpus'");
  generate_cmd->add_option("shape", ga.shape, "rectangle|cylinder|kite|square|rhombus|hemisphere|triangle|cone|corpus")
      ->required();
  generate_cmd->add_option("--size", ga.size, "Canvas WxH")->capture_default_str();
  generate_cmd->add_option("--bulge", ga.bulge, "Cap half-height in px (cylinder, cone)");
  generate_cmd->add_option("--rotate", ga.rotate, "Rotation in degrees (rectangle, square, rhombus, kite, triangle)");
  generate_cmd->add_option("-o,--output", ga.output, "Output file, or directory for 'corpus'")->required();

  std::string bench_size = "256x256";
  int repeat = 10;
  auto* bench_cmd = app.add_subcommand(
      "bench",
      "Time the pipeline on the in-memory corpus and print CSV. Timing covers "
      "segmentation through classification.");
  bench_cmd->add_option("--size", bench_size, "Canvas WxH")->capture_default_str();
  bench_cmd->add_option("--repeat", repeat, "Runs per shape")->capture_default_str()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (*classify_cmd) return cmd_classify(ca, out, err);
  if (*generate_cmd) return cmd_generate(ga, out, err);
  return cmd_bench(bench_size, repeat, out, err);
}

}  // namespace shapeid::cli
