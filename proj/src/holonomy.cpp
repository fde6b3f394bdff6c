#include "fgc/holonomy.hpp"

#include "fgc/error.hpp"

namespace fgc {

namespace {

void need_positive(const Rational& q, const char* what) {
  if (sign(q) <= 0) throw Error(ErrorCode::NonPositiveParameter, std::string(what) + " must be positive");
}

}  // namespace

MonodromyMatrix gen_T(const Rational& z) {
  need_positive(z, "triangle parameter");
  return {turn_matrix(z, 1), z};
}

MonodromyMatrix gen_E(const Rational& x, const Rational& y) {
  need_positive(x, "edge parameter");
  need_positive(y, "edge parameter");
  return {edge_matrix(x, y), y / x};
}

MonodromyMatrix monodromy_of_path(const CoordVector& c, const DualPath& p) {
  validate_path(c.surface, p);
  MonodromyMatrix out{monodromy_values(c.surface, p, c.values), 1};
  int nt = c.surface.num_triangles();
  for (const auto& s : p.steps) {
    Rational d = s.eps > 0 ? c.t(s.tri) : 1 / c.t(s.tri);
    out.det *= d * c.values[nt + c.surface.partner(s.exit)] / c.values[nt + s.exit];
  }
  return out;
}

MonodromyMatrix mat_inverse(const MonodromyMatrix& m) {
  if (m.det == 0) throw Error(ErrorCode::ZeroDeterminant, "matrix is singular");
  MonodromyMatrix r{mat_adj(m.m), 1 / m.det};
  for (auto& row : r.m)
    for (auto& x : row) x /= m.det;
  return r;
}

JInvariants j_invariants(const Mat3& m) {
  Rational d = mat_det(m);
  if (d == 0) throw Error(ErrorCode::ZeroDeterminant, "j-invariants need a nonzero determinant");
  Rational t1 = mat_trace(m), t2 = mat_trace(mat_adj(m));
  return {t1 * t1 * t1 / d, t2 * t2 * t2 / (d * d)};
}

bool is_lower_triangular(const Mat3& m) { return m[0][1] == 0 && m[0][2] == 0 && m[1][2] == 0; }
bool is_upper_triangular(const Mat3& m) { return m[1][0] == 0 && m[2][0] == 0 && m[2][1] == 0; }

bool is_unipotent_class(const MonodromyMatrix& m) {
  // the only candidate is c = tr/3, which must cube to det
  Rational c = mat_trace(m.m) / 3;
  if (c * c * c != m.det) return false;
  Mat3 n = m.m;
  for (int i = 0; i < 3; ++i) n[i][i] -= c;
  Mat3 n3 = mat_mul(mat_mul(n, n), n);
  for (auto& row : n3)
    for (auto& x : row)
      if (x != 0) return false;
  return true;
}

PeripheralMonomials peripheral_monomials(const CoordVector& c, int v) {
  PeripheralMonomials r;
  r.vertex = v;
  r.X = 1;
  r.Y = 1;
  for (const auto& l : c.surface.vertex_link(v)) {
    r.X *= c.e(l.out_edge);
    r.Y *= c.t(l.tri) * c.e(c.surface.partner(l.out_edge));
  }
  return r;
}

std::pair<std::vector<int>, std::vector<int>> peripheral_exponents(const Triangulation& T, int v) {
  std::vector<int> x(num_vars(T), 0), y(num_vars(T), 0);
  for (const auto& l : T.vertex_link(v)) {
    x[edge_var(T, l.out_edge)] += 1;
    y[tri_var(T, l.tri)] += 1;
    y[edge_var(T, T.partner(l.out_edge))] += 1;
  }
  return {x, y};
}

EigenCubes eigenvalue_exponents(const PeripheralMonomials& m) {
  return {1 / (m.X * m.Y * m.Y), m.Y / m.X, m.X * m.X * m.Y};
}

EndType classify_signs(int sx, int sy, int sxy) {
  using K = EndKind;
  using C = EndCase;
  if (sx == 0 && sy == 0) return {K::Cusp, C::Cusp};
  if (sx == 0) return sy < 0 ? EndType{K::Special, C::SpecialSimpleAttracting}
                             : EndType{K::Special, C::SpecialSimpleRepelling};
  if (sy == 0) return sx < 0 ? EndType{K::Special, C::SpecialDoubleAttractingEtaMissesRepelling}
                             : EndType{K::Special, C::SpecialDoubleRepellingEtaMissesAttracting};
  if (sxy == 0) return sx > 0 ? EndType{K::Special, C::SpecialDoubleAttractingEtaRepelling}
                              : EndType{K::Special, C::SpecialDoubleRepellingEtaAttracting};
  if (sx < 0 && sy < 0) return {K::HyperbolicMinimal, C::MinimalAttractingEtaSaddle};
  if (sx > 0 && sy > 0) return {K::HyperbolicMinimal, C::MinimalRepellingEtaSaddle};
  if (sx > 0) return sxy < 0 ? EndType{K::HyperbolicMinimal, C::MinimalAttractingEtaRepelling}
                             : EndType{K::HyperbolicMaximal, C::MaximalEtaRepelling};
  return sxy < 0 ? EndType{K::HyperbolicMaximal, C::MaximalEtaAttracting}
                 : EndType{K::HyperbolicMinimal, C::MinimalRepellingEtaAttracting};
}

EndType classify_end(const PeripheralMonomials& m) {
  return classify_signs(sign(m.X - 1), sign(m.Y - 1), sign(m.X * m.Y - 1));
}

const char* end_kind_name(EndKind k) {
  switch (k) {
    case EndKind::Cusp: return "cusp";
    case EndKind::Special: return "special";
    case EndKind::HyperbolicMinimal: return "hyperbolic-minimal";
    case EndKind::HyperbolicMaximal: return "hyperbolic-maximal";
  }
  return "?";
}

const char* end_case_name(EndCase c) {
  switch (c) {
    case EndCase::MaximalEtaAttracting: return "maximal, line through attracting eigenvector";
    case EndCase::MaximalEtaRepelling: return "maximal, line through repelling eigenvector";
    case EndCase::MinimalAttractingEtaSaddle: return "minimal, point attracting, line through saddle";
    case EndCase::MinimalAttractingEtaRepelling: return "minimal, point attracting, line through repelling";
    case EndCase::MinimalRepellingEtaSaddle: return "minimal, point repelling, line through saddle";
    case EndCase::MinimalRepellingEtaAttracting: return "minimal, point repelling, line through attracting";
    case EndCase::SpecialDoubleAttractingEtaMissesRepelling:
      return "special, point attracting of multiplicity two, line misses repelling";
    case EndCase::SpecialDoubleAttractingEtaRepelling:
      return "special, point attracting of multiplicity two, line through repelling";
    case EndCase::SpecialDoubleRepellingEtaMissesAttracting:
      return "special, point repelling of multiplicity two, line misses attracting";
    case EndCase::SpecialDoubleRepellingEtaAttracting:
      return "special, point repelling of multiplicity two, line through attracting";
    case EndCase::SpecialSimpleAttracting: return "special, point attracting of multiplicity one";
    case EndCase::SpecialSimpleRepelling: return "special, point repelling of multiplicity one";
    case EndCase::Cusp: return "cusp";
  }
  return "?";
}

bool is_finite_area(const CoordVector& c) {
  for (int v = 0; v < c.surface.num_vertices(); ++v) {
    auto m = peripheral_monomials(c, v);
    if (m.X != 1 || m.Y != 1) return false;
  }
  return true;
}

bool is_teichmuller(const CoordVector& c) {
  const Triangulation& T = c.surface;
  for (int t = 0; t < T.num_triangles(); ++t)
    if (c.t(t) != 1) return false;
  for (int h = 0; h < T.num_slots(); ++h)
    if (c.e(h) != c.e(T.partner(h))) return false;
  for (int v = 0; v < T.num_vertices(); ++v)
    if (peripheral_monomials(c, v).X != 1) return false;
  return true;
}

bool gluability_check(const CoordVector& c, int v1, int v2) {
  auto a = peripheral_monomials(c, v1);
  auto b = peripheral_monomials(c, v2);
  if (a.X != b.X || a.Y != b.Y || a.X == a.Y) return false;
  return classify_end(a).kind == EndKind::HyperbolicMinimal &&
         classify_end(b).kind == EndKind::HyperbolicMinimal;
}

std::string format_matrix(const Mat3& m) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    out += "[";
    for (int j = 0; j < 3; ++j) {
      if (j) out += ", ";
      out += to_string(m[i][j]);
    }
    out += "]\n";
  }
  return out;
}

}  // namespace fgc
