#include "fgc/fgc.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <new>
#include <random>
#include <string>

#include "fgc/checks.hpp"
#include "fgc/coords.hpp"
#include "fgc/develop.hpp"
#include "fgc/holonomy.hpp"
#include "fgc/poisson.hpp"
#include "fgc/presets.hpp"
#include "fgc/surface.hpp"
#include "json_util.hpp"

using nlohmann::json;

struct fgc_surface {
  fgc::Triangulation T;
};
struct fgc_coords {
  fgc::CoordVector c;
};
struct fgc_path {
  fgc::DualPath p;
};
struct fgc_pair {
  fgc::Triangulation T;
  fgc::AnnotatedCurvePair p;
};
struct fgc_tessellation {
  fgc::CoordVector c;
  fgc::Tessellation t;
};

namespace {

thread_local std::string g_last_error;

fgc_status status_of(fgc::ErrorCode c) {
  switch (c) {
    case fgc::ErrorCode::Ok: return FGC_OK;
    case fgc::ErrorCode::Parse: return FGC_ERR_PARSE;
    case fgc::ErrorCode::Validation: return FGC_ERR_VALIDATION;
    case fgc::ErrorCode::UnpairedSide: return FGC_ERR_UNPAIRED_SIDE;
    case fgc::ErrorCode::EulerMismatch: return FGC_ERR_EULER_MISMATCH;
    case fgc::ErrorCode::VertexCountMismatch: return FGC_ERR_VERTEX_COUNT_MISMATCH;
    case fgc::ErrorCode::SelfGluedEdge: return FGC_ERR_SELF_GLUED_EDGE;
    case fgc::ErrorCode::DegenerateConfiguration: return FGC_ERR_DEGENERATE_CONFIGURATION;
    case fgc::ErrorCode::NotCollinear: return FGC_ERR_NOT_COLLINEAR;
    case fgc::ErrorCode::NotConcurrent: return FGC_ERR_NOT_CONCURRENT;
    case fgc::ErrorCode::CoincidentBasePoints: return FGC_ERR_COINCIDENT_BASE_POINTS;
    case fgc::ErrorCode::NonPositiveParameter: return FGC_ERR_NON_POSITIVE_PARAMETER;
    case fgc::ErrorCode::DegeneratePair: return FGC_ERR_DEGENERATE_PAIR;
    case fgc::ErrorCode::InconsistentPath: return FGC_ERR_INCONSISTENT_PATH;
    case fgc::ErrorCode::ZeroDeterminant: return FGC_ERR_ZERO_DETERMINANT;
    case fgc::ErrorCode::DepthLimitExceeded: return FGC_ERR_DEPTH_LIMIT_EXCEEDED;
    case fgc::ErrorCode::PatchOverflow: return FGC_ERR_PATCH_OVERFLOW;
    case fgc::ErrorCode::TooFewVertices: return FGC_ERR_TOO_FEW_VERTICES;
    case fgc::ErrorCode::AssumptionIViolated: return FGC_ERR_ASSUMPTION_VIOLATED;
    case fgc::ErrorCode::InvalidArgument: return FGC_ERR_INVALID_ARGUMENT;
    case fgc::ErrorCode::Io: return FGC_ERR_IO;
  }
  return FGC_ERR_INTERNAL;
}

template <class F>
fgc_status guard(F&& f) {
  g_last_error.clear();
  try {
    f();
    return FGC_OK;
  } catch (const fgc::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const json::exception& e) {
    g_last_error = e.what();
    return FGC_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return FGC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FGC_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw fgc::Error(fgc::ErrorCode::InvalidArgument, std::string("null ") + what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string str(const fgc::Rational& q) { return fgc::to_string(q); }

json matrix_json(const fgc::Mat3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json r = json::array();
    for (int j = 0; j < 3; ++j) r.push_back(str(m[i][j]));
    rows.push_back(r);
  }
  return rows;
}

int resolve_variable(const fgc::Triangulation& T, const std::string& name) {
  int n = fgc::num_vars(T);
  for (int i = 0; i < n; ++i)
    if (fgc::var_name(T, i) == name) return i;
  if (name.size() > 1 && name[0] == 't' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos) {
    int t = std::stoi(name.substr(1));
    if (t < T.num_triangles()) return fgc::tri_var(T, t);
  }
  std::string label = name;
  if (label.size() > 1 && label[0] == 'e' && label.find("->") != std::string::npos)
    label = label.substr(1);
  return fgc::edge_var(T, fgc::parse_edge_label(T, label));
}

json report_json(const fgc::CheckReport& r, double tol, uint64_t seed) {
  return json{{"check", r.name},        {"passed", r.passed}, {"max_residual", r.max_residual},
              {"samples", r.samples},   {"tol", tol},         {"seed", seed},
              {"detail", r.detail}};
}

json curves_json() {
  fgc::Triangulation T = fgc::surface_s11();
  json out = json::object();
  for (const auto& c : fgc::s11_curves())
    out[c.name] = fgc::format_path(T, fgc::path_from_crossings(T, c.crossings));
  return out;
}

const char* kPairNames[3] = {"alpha-beta", "alpha-gamma", "beta-gamma"};

json gluing_json() {
  fgc::CoordVector c = fgc::preset("s12", "gluable");
  auto m1 = fgc::peripheral_monomials(c, 0), m2 = fgc::peripheral_monomials(c, 1);
  return json{{"surface", "s12"},
              {"preset", "gluable"},
              {"vertices", {0, 1}},
              {"X", {str(m1.X), str(m2.X)}},
              {"Y", {str(m1.Y), str(m2.Y)}},
              {"end_kind", {fgc::end_kind_name(fgc::classify_end(m1).kind),
                            fgc::end_kind_name(fgc::classify_end(m2).kind)}},
              {"gluable", fgc::gluability_check(c, 0, 1)},
              {"glued", {{"genus", 2}, {"punctures", 0}}}};
}

}  // namespace

extern "C" {

const char* fgc_last_error_message(void) { return g_last_error.c_str(); }

const char* fgc_status_name(fgc_status s) {
  switch (s) {
    case FGC_OK: return "Ok";
    case FGC_ERR_INTERNAL: return "Internal";
    default: return fgc::error_name(static_cast<fgc::ErrorCode>(s));
  }
}

void fgc_string_free(char* s) { std::free(s); }

fgc_status fgc_surface_load(const char* path, fgc_surface** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new fgc_surface{fgc::load_surface(path)};
  });
}

fgc_status fgc_surface_from_json(const char* text, fgc_surface** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new fgc_surface{fgc::surface_from_json(text)};
  });
}

fgc_status fgc_surface_example(const char* name, fgc_surface** out) {
  return guard([&] {
    need(name, "name");
    need(out, "out");
    *out = new fgc_surface{fgc::named_surface(name)};
  });
}

fgc_status fgc_surface_to_json(const fgc_surface* s, char** out) {
  return guard([&] {
    need(s, "surface");
    need(out, "out");
    *out = dup(fgc::surface_to_json(s->T));
  });
}

fgc_status fgc_surface_info_json(const fgc_surface* s, char** out) {
  return guard([&] {
    need(s, "surface");
    need(out, "out");
    const fgc::Triangulation& T = s->T;
    json j{{"genus", T.genus()},
           {"punctures", T.punctures()},
           {"euler_characteristic", T.euler_characteristic()},
           {"triangles", T.num_triangles()},
           {"edges", T.num_edges()},
           {"vertices", T.num_vertices()},
           {"distinct_faces", fgc::validate_distinct_faces(T)}};
    json names = json::array();
    for (int t = 0; t < T.num_triangles(); ++t) names.push_back(T.triangle_name(t));
    j["triangle_names"] = names;
    json vs = json::array();
    for (int v = 0; v < T.num_vertices(); ++v)
      vs.push_back({{"vertex", v},
                    {"degree", T.degree(v)},
                    {"peripheral", fgc::format_path(T, fgc::peripheral_path(T, v))}});
    j["vertex_links"] = vs;
    *out = dup(j.dump(2));
  });
}

void fgc_surface_free(fgc_surface* s) { delete s; }

fgc_status fgc_coords_load(const char* path, fgc_coords** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new fgc_coords{fgc::load_coords(path)};
  });
}

fgc_status fgc_coords_from_json(const char* text, const char* base_dir, fgc_coords** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new fgc_coords{fgc::coords_from_json(text, base_dir ? base_dir : ".")};
  });
}

fgc_status fgc_coords_preset(const char* surface, const char* preset, fgc_coords** out) {
  return guard([&] {
    need(surface, "surface");
    need(preset, "preset");
    need(out, "out");
    *out = new fgc_coords{fgc::preset(surface, preset)};
  });
}

fgc_status fgc_coords_random(const fgc_surface* s, uint64_t seed, fgc_coords** out) {
  return guard([&] {
    need(s, "surface");
    need(out, "out");
    std::mt19937_64 rng(seed);
    *out = new fgc_coords{fgc::random_coords(s->T, rng)};
  });
}

fgc_status fgc_coords_to_json(const fgc_coords* c, char** out) {
  return guard([&] {
    need(c, "coords");
    need(out, "out");
    *out = dup(fgc::coords_to_json(c->c));
  });
}

fgc_status fgc_coords_surface(const fgc_coords* c, fgc_surface** out) {
  return guard([&] {
    need(c, "coords");
    need(out, "out");
    *out = new fgc_surface{c->c.surface};
  });
}

void fgc_coords_free(fgc_coords* c) { delete c; }

fgc_status fgc_coords_reverse(const fgc_coords* c, fgc_coords** out) {
  return guard([&] {
    need(c, "coords");
    need(out, "out");
    *out = new fgc_coords{fgc::reverse_orientation(c->c)};
  });
}

fgc_status fgc_coords_dualize(const fgc_coords* c, fgc_coords** out) {
  return guard([&] {
    need(c, "coords");
    need(out, "out");
    *out = new fgc_coords{fgc::dualize(c->c)};
  });
}

fgc_status fgc_coords_flip(const fgc_coords* c, const char* edge, int inverse, fgc_coords** out) {
  return guard([&] {
    need(c, "coords");
    need(edge, "edge");
    need(out, "out");
    int h = fgc::parse_edge_label(c->c.surface, edge);
    *out = new fgc_coords{fgc::flip_transport(c->c, h, inverse != 0).coords};
  });
}

fgc_status fgc_classify_json(const fgc_coords* c, char** out) {
  return guard([&] {
    need(c, "coords");
    need(out, "out");
    json vs = json::array();
    for (int v = 0; v < c->c.surface.num_vertices(); ++v) {
      auto m = fgc::peripheral_monomials(c->c, v);
      auto e = fgc::classify_end(m);
      auto l = fgc::eigenvalue_exponents(m);
      vs.push_back({{"vertex", v},
                    {"X", str(m.X)},
                    {"Y", str(m.Y)},
                    {"kind", fgc::end_kind_name(e.kind)},
                    {"case", fgc::end_case_name(e.which)},
                    {"eigenvalue_cubes", {str(l.l1), str(l.l2), str(l.l3)}}});
    }
    json j{{"vertices", vs},
           {"finite_area", fgc::is_finite_area(c->c)},
           {"teichmuller", fgc::is_teichmuller(c->c)}};
    *out = dup(j.dump(2));
  });
}

fgc_status fgc_gluable(const fgc_coords* c, int v1, int v2, int* out) {
  return guard([&] {
    need(c, "coords");
    need(out, "out");
    int nv = c->c.surface.num_vertices();
    if (v1 < 0 || v2 < 0 || v1 >= nv || v2 >= nv)
      throw fgc::Error(fgc::ErrorCode::InvalidArgument, "vertex out of range");
    *out = fgc::gluability_check(c->c, v1, v2) ? 1 : 0;
  });
}

fgc_status fgc_path_parse(const fgc_surface* s, const char* text, fgc_path** out) {
  return guard([&] {
    need(s, "surface");
    need(text, "text");
    need(out, "out");
    *out = new fgc_path{fgc::parse_path(s->T, text, true)};
  });
}

fgc_status fgc_path_peripheral(const fgc_surface* s, int vertex, int eps, fgc_path** out) {
  return guard([&] {
    need(s, "surface");
    need(out, "out");
    if (vertex < 0 || vertex >= s->T.num_vertices())
      throw fgc::Error(fgc::ErrorCode::InvalidArgument, "vertex out of range");
    if (eps != 1 && eps != -1) throw fgc::Error(fgc::ErrorCode::InvalidArgument, "eps must be +1 or -1");
    *out = new fgc_path{fgc::peripheral_path(s->T, vertex, eps)};
  });
}

fgc_status fgc_path_to_string(const fgc_surface* s, const fgc_path* p, char** out) {
  return guard([&] {
    need(s, "surface");
    need(p, "path");
    need(out, "out");
    *out = dup(fgc::format_path(s->T, p->p));
  });
}

void fgc_path_free(fgc_path* p) { delete p; }

fgc_status fgc_holonomy_json(const fgc_coords* c, const fgc_path* p, char** out) {
  return guard([&] {
    need(c, "coords");
    need(p, "path");
    need(out, "out");
    fgc::validate_path(c->c.surface, p->p);
    auto m = fgc::monodromy_of_path(c->c, p->p);
    auto j = fgc::j_invariants(m.m);
    bool lower = fgc::is_lower_triangular(m.m), upper = fgc::is_upper_triangular(m.m);
    json r{{"path", fgc::format_path(c->c.surface, p->p)},
           {"matrix", matrix_json(m.m)},
           {"det", str(m.det)},
           {"trace", str(fgc::mat_trace(m.m))},
           {"j1", str(j.j1)},
           {"j2", str(j.j2)},
           {"lower_triangular", lower},
           {"upper_triangular", upper},
           {"unipotent_class", fgc::is_unipotent_class(m)}};
    if (lower || upper) {
      json d = json::array();
      for (int i = 0; i < 3; ++i) {
        fgc::Rational x = m.m[i][i];
        d.push_back(str(x * x * x / m.det));
      }
      r["diagonal_cubes_over_det"] = d;
    }
    *out = dup(r.dump(2));
  });
}

fgc_status fgc_develop(const fgc_coords* c, int depth, int max_depth, int max_bits,
                       fgc_tessellation** out) {
  return guard([&] {
    need(c, "coords");
    need(out, "out");
    fgc::DevelopOptions opt;
    if (max_depth > 0) opt.max_depth = max_depth;
    if (max_bits > 0) opt.max_bits = static_cast<size_t>(max_bits);
    *out = new fgc_tessellation{c->c, fgc::develop(c->c, depth, opt)};
  });
}

fgc_status fgc_tessellation_report_json(const fgc_tessellation* t, char** out) {
  return guard([&] {
    need(t, "tessellation");
    need(out, "out");
    json j{{"depth", t->t.depth},
           {"tiles", t->t.tiles.size()},
           {"ratio_fidelity", fgc::ratio_fidelity(t->t, t->c)},
           {"convex", fgc::convexity_check(t->t)},
           {"teichmuller", fgc::is_teichmuller(t->c)}};
    auto pts = fgc::tile_vertices(t->t);
    j["vertices"] = pts.size();
    if (pts.size() >= 6)
      j["conic_residual"] = fgc::conic_residual_points(pts);
    else
      j["conic_residual"] = nullptr;
    *out = dup(j.dump(2));
  });
}

fgc_status fgc_tessellation_svg(const fgc_tessellation* t, double width, double height,
                                double stroke_width, int flag_lines, char** svg,
                                char** warnings_json) {
  return guard([&] {
    need(t, "tessellation");
    need(svg, "svg");
    fgc::SvgOptions opt;
    opt.width = width;
    opt.height = height;
    if (stroke_width > 0) opt.stroke_width = stroke_width;
    opt.flag_lines = flag_lines != 0;
    auto r = fgc::emit_svg(t->t, opt);
    char* s = dup(r.svg);
    if (warnings_json) {
      try {
        *warnings_json = dup(json(r.warnings).dump());
      } catch (...) {
        std::free(s);
        throw;
      }
    }
    *svg = s;
  });
}

void fgc_tessellation_free(fgc_tessellation* t) { delete t; }

fgc_status fgc_bracket_coordinates(const fgc_coords* c, const char* f, const char* g, double* out) {
  return guard([&] {
    need(c, "coords");
    need(f, "f");
    need(g, "g");
    need(out, "out");
    const fgc::Triangulation& T = c->c.surface;
    int i = resolve_variable(T, f), j = resolve_variable(T, g);
    *out = fgc::fg_bracket(fgc::coordinate_observable(i), fgc::coordinate_observable(j), c->c);
  });
}

fgc_status fgc_rank(const fgc_coords* c, int* out) {
  return guard([&] {
    need(c, "coords");
    need(out, "out");
    *out = fgc::poisson_rank(c->c);
  });
}

fgc_status fgc_pair_from_json(const fgc_surface* s, const char* text, fgc_pair** out) {
  return guard([&] {
    need(s, "surface");
    need(text, "text");
    need(out, "out");
    *out = new fgc_pair{s->T, fgc::curve_pair_from_json(s->T, text)};
  });
}

fgc_status fgc_pair_load(const fgc_surface* s, const char* path, fgc_pair** out) {
  return guard([&] {
    need(s, "surface");
    need(path, "path");
    need(out, "out");
    *out = new fgc_pair{s->T, fgc::curve_pair_from_json(s->T, fgc::read_file(path))};
  });
}

fgc_status fgc_pair_annotate(const fgc_surface* s, const fgc_path* a, const fgc_path* b,
                             fgc_pair** out) {
  return guard([&] {
    need(s, "surface");
    need(a, "alpha");
    need(b, "beta");
    need(out, "out");
    fgc::validate_path(s->T, a->p);
    fgc::validate_path(s->T, b->p);
    *out = new fgc_pair{s->T, {a->p, b->p, fgc::annotate_intersections(s->T, a->p, b->p)}};
  });
}

fgc_status fgc_pair_example(int index, fgc_pair** out) {
  return guard([&] {
    need(out, "out");
    auto pairs = fgc::s11_pairs();
    if (index < 0 || index >= static_cast<int>(pairs.size()))
      throw fgc::Error(fgc::ErrorCode::InvalidArgument, "pair index out of range");
    *out = new fgc_pair{fgc::surface_s11(), pairs[index]};
  });
}

fgc_status fgc_pair_to_json(const fgc_surface* s, const fgc_pair* p, char** out) {
  return guard([&] {
    need(p, "pair");
    need(out, "out");
    *out = dup(fgc::curve_pair_to_json(s ? s->T : p->T, p->p));
  });
}

void fgc_pair_free(fgc_pair* p) { delete p; }

fgc_status fgc_pair_evaluate_json(const fgc_coords* c, const fgc_pair* p, char** out) {
  return guard([&] {
    need(c, "coords");
    need(p, "pair");
    need(out, "out");
    if (!(c->c.surface == p->T))
      throw fgc::Error(fgc::ErrorCode::InvalidArgument, "pair and coordinates live on different surfaces");
    double gol = fgc::goldman_bracket(p->p, c->c);
    const auto& T = c->c.surface;
    double fg = fgc::fg_bracket(fgc::trace_observable(T, p->p.alpha),
                                fgc::trace_observable(T, p->p.beta), c->c);
    json j{{"intersections", p->p.intersections.size()},
           {"goldman", gol},
           {"two_goldman", 2 * gol},
           {"fg", fg},
           {"residual", fgc::compatibility_residual(p->p, c->c)}};
    *out = dup(j.dump(2));
  });
}

fgc_status fgc_check_json(const fgc_coords* c, const char* which, int samples, uint64_t seed,
                          double tol, const fgc_pair* const* pairs, int npairs, int* passed,
                          char** out) {
  return guard([&] {
    need(c, "coords");
    need(which, "which");
    need(out, "out");
    if (samples <= 0) throw fgc::Error(fgc::ErrorCode::InvalidArgument, "samples must be positive");
    if (!(tol > 0)) throw fgc::Error(fgc::ErrorCode::InvalidArgument, "tolerance must be positive");
    std::string w = which;
    fgc::CheckReport r;
    if (w == "jacobi") {
      r = fgc::check_jacobi(c->c, samples, seed, tol);
    } else if (w == "antisymmetry") {
      r = fgc::check_antisymmetry(c->c, samples, seed, tol);
    } else if (w == "flip-invariance") {
      r = fgc::check_flip_invariance(c->c, samples, seed, tol);
    } else if (w == "casimirs") {
      r = fgc::check_casimirs(c->c.surface);
    } else if (w == "compatibility") {
      std::vector<fgc::AnnotatedCurvePair> ps;
      if (pairs && npairs > 0) {
        for (int i = 0; i < npairs; ++i) {
          need(pairs[i], "pair");
          if (!(pairs[i]->T == c->c.surface))
            throw fgc::Error(fgc::ErrorCode::InvalidArgument, "pair lives on a different surface");
          ps.push_back(pairs[i]->p);
        }
      } else {
        if (!(c->c.surface == fgc::surface_s11()))
          throw fgc::Error(fgc::ErrorCode::InvalidArgument,
                           "bundled curve pairs exist only for s11; pass pair files");
        ps = fgc::s11_pairs();
      }
      r = fgc::check_compatibility(c->c, ps, samples, seed, tol);
    } else {
      throw fgc::Error(fgc::ErrorCode::InvalidArgument, "unknown check '" + w + "'");
    }
    if (passed) *passed = r.passed ? 1 : 0;
    *out = dup(report_json(r, tol, seed).dump(2));
  });
}

fgc_status fgc_examples_json(char** out) {
  return guard([&] {
    need(out, "out");
    json j;
    for (const auto& n : fgc::surface_names())
      j["surfaces"][n] = json::parse(fgc::surface_to_json(fgc::named_surface(n)));
    json ps = json::array();
    for (const auto& [s, p] : fgc::preset_names()) ps.push_back({{"surface", s}, {"preset", p}});
    j["presets"] = ps;
    j["curves"]["s11"] = curves_json();
    json pairs = json::array();
    auto bundled = fgc::s11_pairs();
    fgc::Triangulation T = fgc::surface_s11();
    for (size_t i = 0; i < bundled.size(); ++i)
      pairs.push_back({{"name", kPairNames[i]},
                       {"pair", json::parse(fgc::curve_pair_to_json(T, bundled[i]))}});
    j["pairs"] = pairs;
    j["gluing"] = gluing_json();
    *out = dup(j.dump(2));
  });
}

fgc_status fgc_examples_write(const char* dir, char** written_json) {
  return guard([&] {
    need(dir, "dir");
    namespace fs = std::filesystem;
    fs::path root(dir);
    json written = json::array();
    auto put = [&](const fs::path& rel, const std::string& text) {
      fs::path p = root / rel;
      fs::create_directories(p.parent_path());
      std::ofstream f(p, std::ios::binary);
      if (!f) throw fgc::Error(fgc::ErrorCode::Io, "cannot write " + p.string());
      f << text;
      if (text.empty() || text.back() != '\n') f << '\n';
      written.push_back(rel.generic_string());
    };
    for (const auto& n : fgc::surface_names())
      put(fs::path("surfaces") / (n + ".json"), fgc::surface_to_json(fgc::named_surface(n)));
    for (const auto& [s, p] : fgc::preset_names())
      put(fs::path("coords") / (s + "-" + p + ".json"), fgc::coords_to_json(fgc::preset(s, p)));
    put("curves/s11.json", json{{"surface", "s11"}, {"curves", curves_json()}}.dump(2));
    auto bundled = fgc::s11_pairs();
    fgc::Triangulation T = fgc::surface_s11();
    for (size_t i = 0; i < bundled.size(); ++i)
      put(fs::path("pairs") / (std::string("s11-") + kPairNames[i] + ".json"),
          fgc::curve_pair_to_json(T, bundled[i]));
    put("gluing/s12-to-s20.json", gluing_json().dump(2));
    if (written_json) *written_json = dup(written.dump(2));
  });
}

}  // extern "C"
