#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fgc/fgc.h"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kError = 2 };

struct Failure {
  fgc_status status;
  std::string message;
};

void ok(fgc_status s) {
  if (s != FGC_OK) throw Failure{s, fgc_last_error_message()};
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& o) noexcept : p(o.p) { o.p = nullptr; }
  Handle& operator=(Handle&& o) noexcept {
    std::swap(p, o.p);
    return *this;
  }
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};

using Surface = Handle<fgc_surface, fgc_surface_free>;
using Coords = Handle<fgc_coords, fgc_coords_free>;
using Path = Handle<fgc_path, fgc_path_free>;
using Pair = Handle<fgc_pair, fgc_pair_free>;
using Tess = Handle<fgc_tessellation, fgc_tessellation_free>;

std::string take(char* s) {
  std::string r = s ? s : "";
  fgc_string_free(s);
  return r;
}

struct Output {
  std::string format = "text";
  std::string out;

  bool json_only() const { return format == "json"; }

  // Writes to --out if given, otherwise stdout.
  void emit(const std::string& text) const {
    if (out.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Failure{FGC_ERR_IO, "cannot write " + out};
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
  }

  void report(const std::string& human, const json& j) const {
    if (json_only())
      emit(j.dump(2));
    else
      emit(human + "\n" + j.dump(2));
  }
};

// "@s11" names a bundled surface, "@s11/generic" a bundled preset.
bool bundled(const std::string& arg, std::string& surface, std::string& preset) {
  if (arg.empty() || arg[0] != '@') return false;
  std::string rest = arg.substr(1);
  auto slash = rest.find('/');
  surface = rest.substr(0, slash);
  preset = slash == std::string::npos ? "" : rest.substr(slash + 1);
  return true;
}

Coords load_coords(const std::string& arg) {
  Coords c;
  std::string s, p;
  if (bundled(arg, s, p)) {
    ok(fgc_coords_preset(s.c_str(), p.empty() ? "ones" : p.c_str(), c.out()));
  } else {
    ok(fgc_coords_load(arg.c_str(), c.out()));
  }
  return c;
}

Surface surface_of(const Coords& c) {
  Surface s;
  ok(fgc_coords_surface(c.get(), s.out()));
  return s;
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Failure{FGC_ERR_IO, "cannot read " + path};
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Surface file, coordinate file (its surface is used) or "@name".
Surface load_surface_arg(const std::string& arg) {
  Surface s;
  std::string name, preset;
  if (bundled(arg, name, preset)) {
    ok(fgc_surface_example(name.c_str(), s.out()));
    return s;
  }
  json j = json::parse(read_text(arg), nullptr, false);
  if (!j.is_discarded() && j.is_object() && j.contains("surface") && !j.contains("gluings"))
    return surface_of(load_coords(arg));
  ok(fgc_surface_load(arg.c_str(), s.out()));
  return s;
}

json examples() {
  char* s = nullptr;
  ok(fgc_examples_json(&s));
  return json::parse(take(s));
}

std::string flag(bool b) { return b ? "true" : "false"; }

int cmd_info(const Output& o, const std::string& input) {
  Surface s = load_surface_arg(input);
  char* out = nullptr;
  ok(fgc_surface_info_json(s.get(), &out));
  json j = json::parse(take(out));
  std::ostringstream h;
  h << "genus " << j["genus"] << ", punctures " << j["punctures"] << ", euler characteristic "
    << j["euler_characteristic"] << "\n"
    << j["triangles"] << " triangles, " << j["edges"] << " edges, " << j["vertices"]
    << " vertices, distinct faces " << flag(j["distinct_faces"]) << "\n";
  for (const auto& v : j["vertex_links"])
    h << "  vertex " << v["vertex"] << ": degree " << v["degree"] << ", peripheral "
      << v["peripheral"].get<std::string>() << "\n";
  o.report(h.str(), j);
  return kOk;
}

int cmd_classify(const Output& o, const std::string& input) {
  Coords c = load_coords(input);
  char* out = nullptr;
  ok(fgc_classify_json(c.get(), &out));
  json j = json::parse(take(out));
  std::ostringstream h;
  for (const auto& v : j["vertices"])
    h << "vertex " << v["vertex"] << ": X = " << v["X"].get<std::string>()
      << ", Y = " << v["Y"].get<std::string>() << ", " << v["kind"].get<std::string>() << " ("
      << v["case"].get<std::string>() << ")\n";
  h << "finite area: " << flag(j["finite_area"]) << "\n";
  h << "teichmuller: " << flag(j["teichmuller"]) << "\n";
  o.report(h.str(), j);
  return kOk;
}

struct CurveChoice {
  std::string tokens;
  std::string name;
  std::string curves_file;
  std::optional<int> peripheral;
  int eps = 1;
};

int cmd_holonomy(const Output& o, const std::string& input, const CurveChoice& cc) {
  Coords c = load_coords(input);
  Surface s = surface_of(c);
  Path p;
  if (cc.peripheral) {
    ok(fgc_path_peripheral(s.get(), *cc.peripheral, cc.eps, p.out()));
  } else if (!cc.name.empty()) {
    json curves;
    if (cc.curves_file.empty()) {
      curves = examples()["curves"]["s11"];
    } else {
      curves = json::parse(read_text(cc.curves_file));
      if (!curves.contains("curves"))
        throw Failure{FGC_ERR_PARSE, cc.curves_file + ": missing key 'curves'"};
      curves = curves["curves"];
    }
    if (!curves.contains(cc.name)) throw Failure{FGC_ERR_INVALID_ARGUMENT, "no curve named " + cc.name};
    ok(fgc_path_parse(s.get(), curves[cc.name].get<std::string>().c_str(), p.out()));
  } else {
    ok(fgc_path_parse(s.get(), cc.tokens.c_str(), p.out()));
  }
  char* out = nullptr;
  ok(fgc_holonomy_json(c.get(), p.get(), &out));
  json j = json::parse(take(out));
  std::ostringstream h;
  h << "path: " << (j["path"].get<std::string>().empty() ? "(empty)" : j["path"].get<std::string>())
    << "\n";
  for (const auto& row : j["matrix"]) {
    h << "  [";
    for (size_t k = 0; k < row.size(); ++k) h << (k ? ", " : "") << row[k].get<std::string>();
    h << "]\n";
  }
  h << "det = " << j["det"].get<std::string>() << ", trace = " << j["trace"].get<std::string>()
    << "\n";
  h << "j1 = " << j["j1"].get<std::string>() << ", j2 = " << j["j2"].get<std::string>() << "\n";
  h << "lower triangular: " << flag(j["lower_triangular"])
    << ", upper triangular: " << flag(j["upper_triangular"])
    << ", unipotent class: " << flag(j["unipotent_class"]) << "\n";
  if (j.contains("diagonal_cubes_over_det")) {
    h << "diagonal cubes / det:";
    for (const auto& d : j["diagonal_cubes_over_det"]) h << " " << d.get<std::string>();
    h << "\n";
  }
  o.report(h.str(), j);
  return kOk;
}

int write_coords(const Output& o, const Coords& c) {
  char* out = nullptr;
  ok(fgc_coords_to_json(c.get(), &out));
  o.emit(take(out));
  return kOk;
}

int cmd_transform(const Output& o, const std::string& which, const std::string& input,
                  const std::string& edge, bool inverse) {
  Coords c = load_coords(input);
  Coords r;
  if (which == "flip")
    ok(fgc_coords_flip(c.get(), edge.c_str(), inverse ? 1 : 0, r.out()));
  else if (which == "dualize")
    ok(fgc_coords_dualize(c.get(), r.out()));
  else
    ok(fgc_coords_reverse(c.get(), r.out()));
  return write_coords(o, r);
}

struct DevelopArgs {
  int depth = 3;
  int max_depth = 6;
  int max_bits = 4096;
  double width = 800, height = 800, stroke = 1.0;
  bool flag_lines = false;
  std::string svg;
};

int cmd_develop(const Output& o, const std::string& input, const DevelopArgs& a) {
  Coords c = load_coords(input);
  Tess t;
  fgc_status st = fgc_develop(c.get(), a.depth, a.max_depth, a.max_bits, t.out());
  if (st == FGC_ERR_DEPTH_LIMIT_EXCEEDED)
    throw Failure{st, std::string(fgc_last_error_message()) +
                          " (raise --max-depth or --max-bits to allow larger patches)"};
  ok(st);
  char* rep = nullptr;
  ok(fgc_tessellation_report_json(t.get(), &rep));
  json j = json::parse(take(rep));
  std::string svg_path = a.svg.empty() ? o.out : a.svg;
  char* svg = nullptr;
  char* warn = nullptr;
  ok(fgc_tessellation_svg(t.get(), a.width, a.height, a.stroke, a.flag_lines ? 1 : 0, &svg, &warn));
  std::string svg_text = take(svg);
  j["warnings"] = json::parse(take(warn));
  Output rep_out = o;
  if (!svg_path.empty()) {
    Output svg_out{o.format, svg_path};
    svg_out.emit(svg_text);
    j["svg"] = svg_path;
    rep_out.out.clear();
  } else if (!o.json_only()) {
    j["svg"] = nullptr;
  }
  std::ostringstream h;
  h << "tiles: " << j["tiles"] << " (depth " << j["depth"] << ")\n";
  h << "ratio fidelity: " << flag(j["ratio_fidelity"]) << "\n";
  h << "convex: " << flag(j["convex"]) << "\n";
  if (j["conic_residual"].is_null())
    h << "conic residual: n/a (too few vertices)\n";
  else
    h << "conic residual: " << j["conic_residual"].get<double>() << "\n";
  for (const auto& w : j["warnings"]) h << "warning: " << w.get<std::string>() << "\n";
  if (svg_path.empty()) h << "(no --svg/--out given; SVG not written)\n";
  rep_out.report(h.str(), j);
  return kOk;
}

Pair load_pair(const Surface& s, const std::string& path) {
  Pair p;
  ok(fgc_pair_load(s.get(), path.c_str(), p.out()));
  return p;
}

int cmd_bracket(const Output& o, const std::string& input, const std::string& f,
                const std::string& g, const std::string& pair_file, std::optional<int> example) {
  Coords c = load_coords(input);
  if (!f.empty() || !g.empty()) {
    if (f.empty() || g.empty())
      throw Failure{FGC_ERR_INVALID_ARGUMENT, "--f and --g must be given together"};
    double v = 0;
    ok(fgc_bracket_coordinates(c.get(), f.c_str(), g.c_str(), &v));
    json j{{"f", f}, {"g", g}, {"bracket", v}};
    std::ostringstream h;
    h << "{" << f << ", " << g << "} = " << v;
    o.report(h.str(), j);
    return kOk;
  }
  Surface s = surface_of(c);
  Pair p;
  if (!pair_file.empty())
    p = load_pair(s, pair_file);
  else if (example)
    ok(fgc_pair_example(*example, p.out()));
  else
    throw Failure{FGC_ERR_INVALID_ARGUMENT, "give --f/--g, --pair FILE or --example-pair K"};
  char* out = nullptr;
  ok(fgc_pair_evaluate_json(c.get(), p.get(), &out));
  json j = json::parse(take(out));
  std::ostringstream h;
  h << "intersections: " << j["intersections"] << "\n";
  h << "2 {tr a, tr b}_Goldman = " << j["two_goldman"].get<double>() << "\n";
  h << "{tr a, tr b}_FG        = " << j["fg"].get<double>() << "\n";
  h << "residual: " << j["residual"].get<double>() << "\n";
  o.report(h.str(), j);
  return kOk;
}

int cmd_rank(const Output& o, const std::string& input) {
  Coords c = load_coords(input);
  int r = 0;
  ok(fgc_rank(c.get(), &r));
  json j{{"rank", r}};
  o.report("poisson rank: " + std::to_string(r), j);
  return kOk;
}

struct CheckArgs {
  int samples = 0;
  uint64_t seed = 1;
  double tol = 0;
  std::vector<std::string> pairs;
};

int cmd_check(const Output& o, const std::string& which, const std::string& input,
              const CheckArgs& a) {
  Coords c = load_coords(input);
  int samples = a.samples;
  double tol = a.tol;
  if (samples <= 0) samples = which == "jacobi" || which == "antisymmetry" ? 100 : which == "flip-invariance" ? 20 : 10;
  if (tol <= 0) tol = which == "flip-invariance" ? 1e-9 : 1e-8;
  Surface s = surface_of(c);
  std::vector<Pair> pairs;
  for (const auto& f : a.pairs) pairs.push_back(load_pair(s, f));
  std::vector<const fgc_pair*> raw;
  for (const auto& p : pairs) raw.push_back(p.get());
  int passed = 0;
  char* out = nullptr;
  ok(fgc_check_json(c.get(), which.c_str(), samples, a.seed, tol, raw.empty() ? nullptr : raw.data(),
                    static_cast<int>(raw.size()), &passed, &out));
  json j = json::parse(take(out));
  std::ostringstream h;
  h << (passed ? "PASS" : "FAIL") << " " << which << ": max residual " << j["max_residual"].get<double>()
    << " over " << j["samples"] << " samples (tol " << tol << ", seed " << a.seed << ")";
  if (!j["detail"].get<std::string>().empty()) h << "\n" << j["detail"].get<std::string>();
  o.report(h.str(), j);
  return passed ? kOk : kCheckFailed;
}

int cmd_examples(const Output& o, const std::string& write_dir) {
  if (!write_dir.empty()) {
    char* out = nullptr;
    ok(fgc_examples_write(write_dir.c_str(), &out));
    json j = json::parse(take(out));
    std::ostringstream h;
    for (const auto& f : j) h << write_dir << "/" << f.get<std::string>() << "\n";
    o.report(h.str(), j);
    return kOk;
  }
  json j = examples();
  std::ostringstream h;
  h << "surfaces:";
  for (auto it = j["surfaces"].begin(); it != j["surfaces"].end(); ++it) h << " @" << it.key();
  h << "\npresets:";
  for (const auto& p : j["presets"])
    h << " @" << p["surface"].get<std::string>() << "/" << p["preset"].get<std::string>();
  h << "\ncurves on s11:";
  for (auto it = j["curves"]["s11"].begin(); it != j["curves"]["s11"].end(); ++it) h << " " << it.key();
  h << "\ncurve pairs:";
  int k = 0;
  for (const auto& p : j["pairs"]) h << " " << k++ << "=" << p["name"].get<std::string>();
  o.report(h.str(), j);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Framed convex projective structures in Fock-Goncharov coordinates"};
  app.require_subcommand(1);
  Output o;
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", o.out, "Output path (default stdout)");

  std::string input;
  auto add_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", input, what)->required();
    sub->fallthrough();
  };
  const char* coords_help = "Coordinate file, or @surface/preset";

  auto* info = app.add_subcommand("info", "Surface summary");
  add_input(info, "Surface or coordinate file, or @surface");
  auto* classify = app.add_subcommand("classify", "End types, finite area and Teichmuller flags");
  add_input(classify, coords_help);

  CurveChoice cc;
  auto* holonomy = app.add_subcommand("holonomy", "Monodromy of a closed dual path");
  add_input(holonomy, coords_help);
  auto* o_path = holonomy->add_option("--path", cc.tokens, "Path tokens, e.g. \"T+ 0 E 0.2->0.0 ...\"");
  auto* o_curve = holonomy->add_option("--curve", cc.name, "Curve name from --curves (default: bundled s11 curves)");
  holonomy->add_option("--curves", cc.curves_file, "Curve file");
  int periph = -1;
  auto* o_periph = holonomy->add_option("--peripheral", periph, "Peripheral curve of a vertex");
  holonomy->add_option("--eps", cc.eps, "Turning direction of the peripheral curve")->check(CLI::IsMember({1, -1}));
  o_path->excludes(o_curve)->excludes(o_periph);
  o_curve->excludes(o_periph);

  std::string edge;
  auto* flip = app.add_subcommand("flip", "Flip an edge and transport coordinates");
  add_input(flip, coords_help);
  flip->add_option("--edge", edge, "Edge label \"t.i->t.j\" or corner-label name")->required();
  bool inverse = false;
  flip->add_flag("--inverse", inverse, "Undo an earlier flip of the same edge");
  auto* dualize = app.add_subcommand("dualize", "Apply the duality map");
  add_input(dualize, coords_help);
  auto* reverse = app.add_subcommand("reverse", "Reverse the orientation");
  add_input(reverse, coords_help);

  DevelopArgs da;
  auto* develop = app.add_subcommand("develop", "Developing map, SVG and convexity/conic report");
  add_input(develop, coords_help);
  develop->add_option("--depth", da.depth, "Breadth-first depth")->capture_default_str();
  develop->add_option("--max-depth", da.max_depth, "Depth cap")->capture_default_str();
  develop->add_option("--max-bits", da.max_bits, "Coefficient size cap in bits")->capture_default_str();
  develop->add_option("--svg", da.svg, "SVG output path (defaults to --out)");
  develop->add_option("--width", da.width)->capture_default_str();
  develop->add_option("--height", da.height)->capture_default_str();
  develop->add_option("--stroke-width", da.stroke)->capture_default_str();
  develop->add_flag("--flag-lines", da.flag_lines, "Draw the flag lines as circumscribed triangles");

  std::string bf, bg, pair_file;
  int example_pair = -1;
  auto* bracket = app.add_subcommand("bracket", "Poisson bracket of coordinates or trace functions");
  add_input(bracket, coords_help);
  bracket->add_option("--f", bf, "First coordinate name");
  bracket->add_option("--g", bg, "Second coordinate name");
  bracket->add_option("--pair", pair_file, "Annotated curve-pair file");
  bracket->add_option("--example-pair", example_pair, "Bundled s11 pair index (0..2)");

  auto* rank = app.add_subcommand("rank", "Rank of the coordinate bracket matrix");
  add_input(rank, coords_help);

  CheckArgs ca;
  std::string which;
  auto* check = app.add_subcommand("check", "Verification suites (exit 0 iff they pass)");
  check->add_option("which", which, "Suite")
      ->required()
      ->check(CLI::IsMember({"jacobi", "antisymmetry", "flip-invariance", "compatibility", "casimirs"}));
  add_input(check, coords_help);
  check->add_option("--samples", ca.samples, "Number of random samples");
  check->add_option("--seed", ca.seed, "Random seed")->capture_default_str();
  check->add_option("--tol", ca.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  check->add_option("--pair", ca.pairs, "Curve-pair files for compatibility");

  std::string write_dir;
  auto* ex = app.add_subcommand("examples", "List or write the bundled corpus");
  ex->add_option("--write", write_dir, "Write corpus files into this directory");
  ex->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(o, input);
    if (classify->parsed()) return cmd_classify(o, input);
    if (holonomy->parsed()) {
      if (*o_periph) cc.peripheral = periph;
      if (!*o_path && !*o_curve && !*o_periph)
        throw Failure{FGC_ERR_INVALID_ARGUMENT, "give --path, --curve or --peripheral"};
      return cmd_holonomy(o, input, cc);
    }
    if (flip->parsed()) return cmd_transform(o, "flip", input, edge, inverse);
    if (dualize->parsed()) return cmd_transform(o, "dualize", input, "", false);
    if (reverse->parsed()) return cmd_transform(o, "reverse", input, "", false);
    if (develop->parsed()) return cmd_develop(o, input, da);
    if (bracket->parsed())
      return cmd_bracket(o, input, bf, bg, pair_file,
                         example_pair >= 0 ? std::optional<int>(example_pair) : std::nullopt);
    if (rank->parsed()) return cmd_rank(o, input);
    if (check->parsed()) return cmd_check(o, which, input, ca);
    if (ex->parsed()) return cmd_examples(o, write_dir);
  } catch (const Failure& f) {
    std::cerr << "error: " << fgc_status_name(f.status) << ": " << f.message << "\n";
    return kError;
  } catch (const json::exception& e) {
    std::cerr << "error: Parse: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
