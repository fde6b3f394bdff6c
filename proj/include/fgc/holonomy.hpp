#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "fgc/coords.hpp"
#include "fgc/rational.hpp"
#include "fgc/surface.hpp"

namespace fgc {

template <class S>
using Mat3T = std::array<std::array<S, 3>, 3>;
using Mat3 = Mat3T<Rational>;

// Constant of the same kind as ref. Dual-number scalars get a zero
// derivative vector of matching size so that mixed sums stay coherent.
template <class S>
struct ScalarConst {
  static S make(const S& ref, int c) {
    (void)ref;
    return S(c);
  }
};

template <class S>
S constant_like(const S& ref, int c) {
  return ScalarConst<S>::make(ref, c);
}

template <class S>
Mat3T<S> mat_identity(const S& ref) {
  Mat3T<S> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = constant_like(ref, i == j ? 1 : 0);
  return m;
}

template <class S>
Mat3T<S> mat_identity() {
  return mat_identity(S(0));
}

template <class S>
Mat3T<S> mat_mul(const Mat3T<S>& a, const Mat3T<S>& b) {
  Mat3T<S> c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return c;
}

template <class S>
S mat_det(const Mat3T<S>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <class S>
S mat_trace(const Mat3T<S>& m) {
  return m[0][0] + m[1][1] + m[2][2];
}

// Transposed cofactor matrix.
template <class S>
Mat3T<S> mat_adj(const Mat3T<S>& m) {
  Mat3T<S> a;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  }
  return a;
}

// Unnormalized generators; det T(z) = z, det E(x,y) = y/x.
template <class S>
Mat3T<S> turn_matrix(const S& z, int eps) {
  Mat3T<S> m;
  S zero = constant_like(z, 0), one = constant_like(z, 1);
  if (eps > 0) {
    m = {{{zero, zero, one}, {zero, -one, -one}, {z, z + one, one}}};
  } else {
    m = {{{one, (z + one) / z, one / z}, {-one, -one, zero}, {one, zero, zero}}};
  }
  return m;
}

template <class S>
Mat3T<S> edge_matrix(const S& x, const S& y) {
  S zero = constant_like(x, 0), one = constant_like(x, 1);
  return {{{zero, zero, y}, {zero, -one, zero}, {one / x, zero, zero}}};
}

// Product of T^eps(t) E(e_exit, e_exit^-1) over the steps, on the flat
// coordinate layout.
template <class S>
Mat3T<S> monodromy_values(const Triangulation& T, const DualPath& p, const std::vector<S>& v) {
  int nt = T.num_triangles();
  Mat3T<S> m = v.empty() ? mat_identity<S>() : mat_identity(v[0]);
  for (const auto& s : p.steps) {
    m = mat_mul(m, turn_matrix(v[s.tri], s.eps));
    m = mat_mul(m, edge_matrix(v[nt + s.exit], v[nt + T.partner(s.exit)]));
  }
  return m;
}

struct MonodromyMatrix {
  Mat3 m;
  Rational det;
};

MonodromyMatrix gen_T(const Rational& z);
MonodromyMatrix gen_E(const Rational& x, const Rational& y);
MonodromyMatrix monodromy_of_path(const CoordVector& c, const DualPath& p);
MonodromyMatrix mat_inverse(const MonodromyMatrix& m);

struct JInvariants {
  Rational j1, j2;
  bool operator==(const JInvariants& o) const { return j1 == o.j1 && j2 == o.j2; }
};
// j1 = tr(M)^3/det M, j2 = tr(adj M)^3/det(M)^2.
JInvariants j_invariants(const Mat3& m);

bool is_lower_triangular(const Mat3& m);
bool is_upper_triangular(const Mat3& m);
// (M - cI)^3 = 0 for some c with c^3 = det M.
bool is_unipotent_class(const MonodromyMatrix& m);

struct PeripheralMonomials {
  int vertex = -1;
  Rational X, Y;
};

// X = product of the values of edges leaving v; Y = product over the link
// of (triangle value) * (value of the edge entering v along that side).
PeripheralMonomials peripheral_monomials(const CoordVector& c, int v);
// Exponent vectors on the flat layout.
std::pair<std::vector<int>, std::vector<int>> peripheral_exponents(const Triangulation& T, int v);

struct EigenCubes {
  Rational l1, l2, l3;
};
// (1/(X Y^2), Y/X, X^2 Y)
EigenCubes eigenvalue_exponents(const PeripheralMonomials& m);

enum class EndKind { Cusp, Special, HyperbolicMinimal, HyperbolicMaximal };

enum class EndCase {
  MaximalEtaAttracting,
  MaximalEtaRepelling,
  MinimalAttractingEtaSaddle,
  MinimalAttractingEtaRepelling,
  MinimalRepellingEtaSaddle,
  MinimalRepellingEtaAttracting,
  SpecialDoubleAttractingEtaMissesRepelling,
  SpecialDoubleAttractingEtaRepelling,
  SpecialDoubleRepellingEtaMissesAttracting,
  SpecialDoubleRepellingEtaAttracting,
  SpecialSimpleAttracting,
  SpecialSimpleRepelling,
  Cusp,
};

constexpr int kNumEndCases = 13;

struct EndType {
  EndKind kind;
  EndCase which;
};

EndType classify_end(const PeripheralMonomials& m);
// Classification from the signs of X-1, Y-1, XY-1 (each -1, 0, 1).
EndType classify_signs(int sx, int sy, int sxy);
const char* end_kind_name(EndKind k);
const char* end_case_name(EndCase c);

bool is_finite_area(const CoordVector& c);
bool is_teichmuller(const CoordVector& c);
bool gluability_check(const CoordVector& c, int v1, int v2);

std::string format_matrix(const Mat3& m);

}  // namespace fgc
