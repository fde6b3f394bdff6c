#include "fgc/coords.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json_util.hpp"

namespace fgc {

namespace {

void require_positive(const CoordVector& c) {
  for (int i = 0; i < c.size(); ++i)
    if (sign(c.values[i]) <= 0)
      throw Error(ErrorCode::NonPositiveParameter, "coordinate " + var_name(c.surface, i) + " must be positive");
}

}  // namespace

CoordVector::CoordVector(Triangulation T, std::vector<Rational> v)
    : surface(std::move(T)), values(std::move(v)) {
  if (static_cast<int>(values.size()) != num_vars(surface))
    throw Error(ErrorCode::Validation, "coordinate vector has " + std::to_string(values.size()) +
                                           " entries, expected " + std::to_string(num_vars(surface)));
  require_positive(*this);
}

CoordVector CoordVector::constant(const Triangulation& T, const Rational& q) {
  return CoordVector(T, std::vector<Rational>(num_vars(T), q));
}

std::string var_name(const Triangulation& T, int i) {
  int nt = T.num_triangles();
  if (i < nt) return T.triangle_name(i);
  return T.edge_name(i - nt);
}

CoordVector reverse_orientation(const CoordVector& c) {
  CoordVector out = c;
  for (auto& q : out.values) q = 1 / q;
  return out;
}

CoordVector dualize(const CoordVector& c) {
  return CoordVector(c.surface, dualize_values(c.surface, c.values));
}

FlipOutcome flip_transport(const CoordVector& c, int e, bool inverse) {
  FlipResult f = flip_combinatorial(c.surface, e, inverse);
  std::vector<Rational> v = flip_values(c.surface, f, c.values);
  for (auto& q : v) q.canonicalize();
  CoordVector out(f.surface, std::move(v));
  return {std::move(f), std::move(out)};
}

Rational parreau_s(const CoordVector& c, int h) {
  if (h < 0 || h >= c.surface.num_slots()) throw Error(ErrorCode::InvalidArgument, "no edge slot " + std::to_string(h));
  const Rational& t = c.t(slot_tri(c.surface.partner(h)));
  return c.e(h) * t / (1 + t);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Triangulation load_surface(const std::string& path) {
  try {
    return surface_from_json(read_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Io) throw;
    throw Error(e.code(), path + ": " + e.what());
  }
}

CoordVector coords_from_json(const std::string& text, const std::string& base_dir) {
  using detail::json;
  json j = detail::parse_json(text, "coordinates");
  const json& s = detail::require(j, "surface", "coordinates");
  Triangulation T;
  if (s.is_string()) {
    std::filesystem::path p(s.get<std::string>());
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    T = load_surface(p.string());
  } else {
    T = surface_from_json_value(s);
  }
  int nt = T.num_triangles();
  std::vector<Rational> v(num_vars(T));
  std::vector<char> seen(v.size(), 0);
  auto value_of = [](const json& x, const std::string& key) {
    try {
      if (x.is_string()) return parse_rational(x.get<std::string>());
      if (x.is_number_integer()) return Rational(x.dump());
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, "coordinates: value of '" + key + "': " + e.what());
    }
    throw Error(ErrorCode::Parse, "coordinates: value of '" + key + "' must be a rational string");
  };
  const json& tris = detail::require(j, "triangles", "coordinates");
  const json& edges = detail::require(j, "edges", "coordinates");
  if (!tris.is_object() || !edges.is_object())
    throw Error(ErrorCode::Parse, "coordinates: 'triangles' and 'edges' must be objects");
  for (auto it = tris.begin(); it != tris.end(); ++it) {
    int t;
    try {
      t = T.triangle_by_name(it.key());
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, "coordinates: triangle key '" + it.key() + "': " + e.what());
    }
    if (seen[t]++) throw Error(ErrorCode::Parse, "coordinates: triangle '" + it.key() + "' given twice");
    v[t] = value_of(it.value(), it.key());
  }
  for (auto it = edges.begin(); it != edges.end(); ++it) {
    int h;
    try {
      h = parse_edge_label(T, it.key());
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, "coordinates: edge key '" + it.key() + "': " + e.what());
    }
    if (seen[nt + h]++) throw Error(ErrorCode::Parse, "coordinates: edge '" + it.key() + "' given twice");
    v[nt + h] = value_of(it.value(), it.key());
  }
  for (size_t i = 0; i < v.size(); ++i) {
    if (!seen[i]) throw Error(ErrorCode::Validation, "coordinates: missing value for " + var_name(T, static_cast<int>(i)));
    if (sign(v[i]) <= 0)
      throw Error(ErrorCode::NonPositiveParameter, "coordinates: " + var_name(T, static_cast<int>(i)) + " must be positive");
  }
  return CoordVector(std::move(T), std::move(v));
}

std::string coords_to_json(const CoordVector& c) {
  using detail::json;
  json j;
  j["surface"] = surface_to_json_value(c.surface);
  json tris = json::object(), edges = json::object();
  for (int t = 0; t < c.surface.num_triangles(); ++t) tris[std::to_string(t)] = to_string(c.t(t));
  for (int h = 0; h < c.surface.num_slots(); ++h) edges[edge_label(h)] = to_string(c.e(h));
  j["triangles"] = tris;
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

CoordVector load_coords(const std::string& path) {
  std::string dir = std::filesystem::path(path).parent_path().string();
  if (dir.empty()) dir = ".";
  try {
    return coords_from_json(read_file(path), dir);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Io) throw;
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace fgc
