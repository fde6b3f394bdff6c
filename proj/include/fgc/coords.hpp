#pragma once

#include <string>
#include <vector>

#include "fgc/error.hpp"
#include "fgc/rational.hpp"
#include "fgc/surface.hpp"

namespace fgc {

// Values are stored flat: triangle t at index t, oriented edge (side slot)
// h at index num_triangles + h.
inline int tri_var(const Triangulation& T, int t) { (void)T; return t; }
inline int edge_var(const Triangulation& T, int h) { return T.num_triangles() + h; }
inline int num_vars(const Triangulation& T) { return 4 * T.num_triangles(); }

struct CoordVector {
  Triangulation surface;
  std::vector<Rational> values;

  CoordVector() = default;
  CoordVector(Triangulation T, std::vector<Rational> v);
  static CoordVector constant(const Triangulation& T, const Rational& q);

  const Rational& t(int tri) const { return values[tri]; }
  const Rational& e(int h) const { return values[surface.num_triangles() + h]; }
  Rational& t(int tri) { return values[tri]; }
  Rational& e(int h) { return values[surface.num_triangles() + h]; }
  int size() const { return static_cast<int>(values.size()); }

  bool operator==(const CoordVector& o) const { return surface == o.surface && values == o.values; }
};

// Name of variable i ("t3" or "2.0->2.1", or paper-style if labelled).
std::string var_name(const Triangulation& T, int i);

CoordVector reverse_orientation(const CoordVector& c);
CoordVector dualize(const CoordVector& c);

struct FlipOutcome {
  FlipResult flip;
  CoordVector coords;
};
// e is any slot of the edge; the flip frame takes e as the old diagonal 0->2.
FlipOutcome flip_transport(const CoordVector& c, int e, bool inverse = false);

Rational parreau_s(const CoordVector& c, int h);

// Scalar-generic versions of the maps on the flat layout, used with
// floating point and dual numbers.
template <class S>
std::vector<S> dualize_values(const Triangulation& T, const std::vector<S>& v) {
  int nt = T.num_triangles();
  std::vector<S> out(v.size());
  for (int h = 0; h < T.num_slots(); ++h) {
    int k = T.partner(h);
    const S& tk = v[slot_tri(k)];
    const S& th = v[slot_tri(h)];
    out[nt + k] = v[nt + h] * tk * (th + S(1)) / (tk + S(1));
  }
  for (int t = 0; t < nt; ++t) out[t] = S(1) / v[t];
  return out;
}

template <class S>
std::vector<S> flip_values(const Triangulation& T, const FlipResult& f, const std::vector<S>& v) {
  int nt = T.num_triangles();
  auto ev = [&](int h) -> const S& { return v[nt + h]; };
  const S& t012 = v[f.tri_a];
  const S& t023 = v[f.tri_b];
  const S& e02 = ev(f.old_diag);
  const S& e20 = ev(f.old_diag_rev);
  S one(1);
  S d1 = e02 * t012 * e20 + t012 * e20 + e20 + one;
  S d2 = e02 * t023 * e20 + e02 * t023 + e02 + one;

  std::vector<S> factor(T.num_slots(), one);
  factor[f.s01] *= e02 / (e02 + one);
  factor[T.partner(f.s01)] *= (e02 + one) * t012 * e20 / d1;
  factor[f.s12] *= d1 / (e20 + one);
  factor[T.partner(f.s12)] *= e20 + one;
  factor[f.s23] *= e20 / (e20 + one);
  factor[T.partner(f.s23)] *= e02 * t023 * (e20 + one) / d2;
  factor[f.s30] *= d2 / (e02 + one);
  factor[T.partner(f.s30)] *= e02 + one;

  std::vector<S> out(v.size());
  for (int t = 0; t < nt; ++t) out[t] = v[t];
  for (int h = 0; h < T.num_slots(); ++h)
    if (f.slot_map[h] >= 0) out[nt + f.slot_map[h]] = ev(h) * factor[h];
  out[nt + f.new_diag] = (e20 + one) / ((e02 + one) * t012 * e20);
  out[nt + f.new_diag_rev] = (e02 + one) / (e02 * t023 * (e20 + one));
  out[f.new_tri_301] = t023 * d1 / d2;
  out[f.new_tri_123] = t012 * d2 / d1;
  return out;
}

// JSON coordinate file. base_dir resolves a relative "surface" path.
CoordVector coords_from_json(const std::string& text, const std::string& base_dir = ".");
std::string coords_to_json(const CoordVector& c);
CoordVector load_coords(const std::string& path);
Triangulation load_surface(const std::string& path);
std::string read_file(const std::string& path);

}  // namespace fgc
