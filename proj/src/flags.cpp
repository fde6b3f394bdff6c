#include "fgc/flags.hpp"

#include "fgc/error.hpp"

namespace fgc {

namespace {

using V3 = std::array<Rational, 3>;

V3 cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool parallel(const V3& a, const V3& b) { return is_zero(cross(a, b)); }

// Cross ratio of four vectors spanning a common 2-plane, using the
// 2x2 determinants d_ij = (a_i x a_j) . n with n = a_0 x a_2.
CrossValue cross_ratio_vectors(const V3& a0, const V3& a1, const V3& a2, const V3& a3,
                               ErrorCode not_coplanar) {
  if (is_zero(a0) || is_zero(a1) || is_zero(a2) || is_zero(a3))
    throw Error(ErrorCode::DegenerateConfiguration, "zero homogeneous vector");
  if (parallel(a0, a1) || parallel(a1, a2) || parallel(a0, a2))
    throw Error(ErrorCode::CoincidentBasePoints, "first three arguments must be pairwise distinct");
  V3 n = cross(a0, a2);
  if (dot(n, a1) != 0 || dot(n, a3) != 0)
    throw Error(not_coplanar, not_coplanar == ErrorCode::NotCollinear
                                  ? "points are not collinear"
                                  : "lines are not concurrent");
  auto d = [&](const V3& x, const V3& y) { return dot(cross(x, y), n); };
  Rational den = d(a0, a3) * d(a1, a2);
  if (den == 0) return CrossValue::inf();
  Rational r = d(a0, a1) * d(a2, a3) / den;
  return CrossValue::of(r);
}

// Coordinates (alpha, beta) of l = alpha*b0 + beta*b2 in a pencil.
std::pair<Rational, Rational> pencil_coords(const V3& b0, const V3& b2, const V3& l) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Rational dd = b0[i] * b2[j] - b2[i] * b0[j];
      if (dd != 0) {
        Rational a = (l[i] * b2[j] - b2[i] * l[j]) / dd;
        Rational b = (b0[i] * l[j] - l[i] * b0[j]) / dd;
        return {a, b};
      }
    }
  throw Error(ErrorCode::DegeneratePair, "pencil basis is degenerate");
}

}  // namespace

std::string to_string(const CrossValue& c) { return c.infinite ? "inf" : to_string(c.value); }

bool is_zero(const V3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

Rational eval(const Line& l, const Point& p) { return dot(l.v, p.v); }
Line line_through(const Point& p, const Point& q) { return Line{cross(p.v, q.v)}; }
Point meet(const Line& l, const Line& m) { return Point{cross(l.v, m.v)}; }
Line dual(const Point& p) { return Line{p.v}; }
Point dual(const Line& l) { return Point{l.v}; }
bool proj_equal(const Point& a, const Point& b) {
  return !is_zero(a.v) && !is_zero(b.v) && parallel(a.v, b.v);
}
bool proj_equal(const Line& a, const Line& b) {
  return !is_zero(a.v) && !is_zero(b.v) && parallel(a.v, b.v);
}
bool is_flag(const Flag& f) {
  return !is_zero(f.point.v) && !is_zero(f.line.v) && eval(f.line, f.point) == 0;
}

Rational det3(const Point& a, const Point& b, const Point& c) { return dot(cross(a.v, b.v), c.v); }

Rational triple_ratio(const Flag& f0, const Flag& f1, const Flag& f2) {
  Rational num = eval(f0.line, f1.point) * eval(f1.line, f2.point) * eval(f2.line, f0.point);
  Rational den = eval(f0.line, f2.point) * eval(f1.line, f0.point) * eval(f2.line, f1.point);
  if (den == 0 || num == 0)
    throw Error(ErrorCode::DegenerateConfiguration, "flag triple is not in general position");
  return num / den;
}

CrossValue cross_ratio_points(const Point& p0, const Point& p1, const Point& p2, const Point& p3) {
  return cross_ratio_vectors(p0.v, p1.v, p2.v, p3.v, ErrorCode::NotCollinear);
}

CrossValue cross_ratio_lines(const Line& l0, const Line& l1, const Line& l2, const Line& l3) {
  return cross_ratio_vectors(l0.v, l1.v, l2.v, l3.v, ErrorCode::NotConcurrent);
}

Rational quadruple_ratio(const Flag& f0, const Flag& f1, const Flag& f2, const Flag& f3) {
  const Point& v0 = f0.point;
  CrossValue c = cross_ratio_lines(f0.line, line_through(v0, f3.point), line_through(v0, f2.point),
                                   line_through(v0, f1.point));
  if (c.infinite || c.value == 0)
    throw Error(ErrorCode::DegenerateConfiguration, "flag quadruple is not in general position");
  return c.value;
}

bool general_position(const FlagTriple& t) {
  for (int i = 0; i < 3; ++i) {
    if (!is_flag(t[i])) return false;
    for (int j = 0; j < 3; ++j)
      if (i != j && eval(t[i].line, t[j].point) == 0) return false;
  }
  return det3(t[0].point, t[1].point, t[2].point) != 0;
}

FlagTriple reconstruct_triangle(const Rational& t) {
  if (t <= 0) throw Error(ErrorCode::NonPositiveParameter, "triple ratio must be positive");
  FlagTriple r;
  r[0] = Flag{Point{{0, 0, 1}}, Line{{t, 1, 0}}};
  r[1] = Flag{Point{{1, 0, 1}}, Line{{1, 0, -1}}};
  r[2] = Flag{Point{{0, 1, 1}}, Line{{0, 1, -1}}};
  return r;
}

Flag extend_across_edge(const Flag& tail, const Flag& head, const Flag& opp, const Rational& e_out,
                        const Rational& e_in, const Rational& t_new, bool require_positive) {
  if (require_positive && (e_out <= 0 || e_in <= 0 || t_new <= 0))
    throw Error(ErrorCode::NonPositiveParameter, "edge and triangle parameters must be positive");
  if (e_out == 0 || e_in == 0 || t_new == 0)
    throw Error(ErrorCode::DegenerateConfiguration, "zero parameter");
  const V3& v0 = tail.point.v;
  const V3& v1 = opp.point.v;
  const V3& v2 = head.point.v;
  if (parallel(v0, v2) || parallel(v0, v1) || parallel(v1, v2))
    throw Error(ErrorCode::DegeneratePair, "flags do not span a triangle");

  // Line V0V3 in the pencil at V0: cross(eta0, V0V3, V0V2, V0V1) = e_out.
  // With basis (eta0, V0V2) and x = beta/alpha the cross ratio is -x1/x3.
  V3 a0 = tail.line.v, a2 = cross(v0, v2), a3 = cross(v0, v1);
  auto [al3, be3] = pencil_coords(a0, a2, a3);
  if (al3 == 0) throw Error(ErrorCode::DegeneratePair, "opposite vertex lies on the edge line");
  Rational x1 = -e_out * be3 / al3;
  V3 l03 = {a0[0] + x1 * a2[0], a0[1] + x1 * a2[1], a0[2] + x1 * a2[2]};

  // Line V2V3 in the pencil at V2: cross(eta2, V2V1, V2V0, V2V3) = e_in.
  V3 b0 = head.line.v, b2 = cross(v2, v0), b1 = cross(v2, v1);
  auto [al1, be1] = pencil_coords(b0, b2, b1);
  if (al1 == 0) throw Error(ErrorCode::DegeneratePair, "opposite vertex lies on the edge line");
  Rational y3 = -(be1 / al1) / e_in;
  V3 l23 = {b0[0] + y3 * b2[0], b0[1] + y3 * b2[1], b0[2] + y3 * b2[2]};

  V3 v3 = cross(l03, l23);
  if (is_zero(v3)) throw Error(ErrorCode::DegenerateConfiguration, "new point is undefined");

  // eta3 through V3 with triple(F0, F2, F3) = t_new.
  Rational h0v3 = dot(tail.line.v, v3), h2v3 = dot(head.line.v, v3);
  Rational h0v2 = dot(tail.line.v, v2), h2v0 = dot(head.line.v, v0);
  if (h2v3 == 0 || h0v2 == 0)
    throw Error(ErrorCode::DegenerateConfiguration, "new point lies on a flag line");
  Rational r = t_new * h0v3 * h2v0 / (h0v2 * h2v3);
  V3 la = cross(v3, v0), lb = cross(v3, v2);
  Rational ca = dot(lb, v0), cb = r * dot(la, v2);
  V3 eta = {ca * la[0] + cb * lb[0], ca * la[1] + cb * lb[1], ca * la[2] + cb * lb[2]};
  if (is_zero(eta)) throw Error(ErrorCode::DegenerateConfiguration, "new line is undefined");
  return Flag{Point{v3}, Line{eta}};
}

FlagQuadruple special_quadruple(const Rational& t012, const Rational& t023, const Rational& e02,
                                const Rational& e20) {
  FlagQuadruple q;
  q[0] = Flag{Point{{0, 0, 1}}, Line{{1, 0, 0}}};
  q[1] = Flag{Point{{1, -1, 1}}, Line{{t012, t012 + 1, 1}}};
  q[2] = Flag{Point{{1, 0, 0}}, Line{{0, 0, 1}}};
  q[3] = extend_across_edge(q[0], q[2], q[1], e02, e20, t023);
  return q;
}

C4Image c4_rotate(const Rational& t012, const Rational& t023, const Rational& e02,
                  const Rational& e20) {
  if (t012 <= 0 || t023 <= 0 || e02 <= 0 || e20 <= 0)
    throw Error(ErrorCode::NonPositiveParameter, "c4_rotate needs positive inputs");
  Rational p = e02 * t023 * e20 + e02 * t023 + e02 + 1;
  Rational q = e02 * t012 * e20 + t012 * e20 + e20 + 1;
  C4Image r;
  r.t123 = t012 * p / q;
  r.t013 = t023 * q / p;
  r.e13 = (e20 + 1) / ((e02 + 1) * t012 * e20);
  r.e31 = (e02 + 1) / (e02 * t023 * (e20 + 1));
  return r;
}

}  // namespace fgc
