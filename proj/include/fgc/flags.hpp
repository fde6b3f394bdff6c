#pragma once

#include <array>
#include <string>

#include "fgc/rational.hpp"

namespace fgc {

// Homogeneous column vector.
struct Point {
  std::array<Rational, 3> v;
};

// Homogeneous row vector.
struct Line {
  std::array<Rational, 3> v;
};

struct Flag {
  Point point;
  Line line;
};

using FlagTriple = std::array<Flag, 3>;
using FlagQuadruple = std::array<Flag, 4>;

// Finite rational or the point at infinity.
struct CrossValue {
  bool infinite = false;
  Rational value;

  static CrossValue inf() { return {true, 0}; }
  static CrossValue of(Rational q) { return {false, std::move(q)}; }
  bool operator==(const CrossValue& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
};

std::string to_string(const CrossValue& c);

Rational eval(const Line& l, const Point& p);
Line line_through(const Point& p, const Point& q);
Point meet(const Line& l, const Line& m);
Line dual(const Point& p);
Point dual(const Line& l);
bool is_zero(const std::array<Rational, 3>& a);
bool proj_equal(const Point& a, const Point& b);
bool proj_equal(const Line& a, const Line& b);
bool is_flag(const Flag& f);
Rational det3(const Point& a, const Point& b, const Point& c);

Rational triple_ratio(const Flag& f0, const Flag& f1, const Flag& f2);
CrossValue cross_ratio_points(const Point& p0, const Point& p1, const Point& p2, const Point& p3);
CrossValue cross_ratio_lines(const Line& l0, const Line& l1, const Line& l2, const Line& l3);
Rational quadruple_ratio(const Flag& f0, const Flag& f1, const Flag& f2, const Flag& f3);

// True iff the zero pattern of eta_i(V_j) is exactly the diagonal and
// no three points are collinear.
bool general_position(const FlagTriple& t);

// V0=[0,0,1], V1=[1,0,1], V2=[0,1,1], eta0=[t:1:0], eta1=[1:0:-1], eta2=[0:1:-1].
FlagTriple reconstruct_triangle(const Rational& t);

// Existing triangle (tail, opp, head) in anticlockwise order. Returns the
// flag on the far side of tail->head with
//   quadruple_ratio(tail, opp, head, new) = e_out,
//   quadruple_ratio(head, new, tail, opp) = e_in,
//   triple_ratio(tail, head, new) = t_new.
Flag extend_across_edge(const Flag& tail, const Flag& head, const Flag& opp,
                        const Rational& e_out, const Rational& e_in, const Rational& t_new,
                        bool require_positive = true);

// Frame used for monodromy matrices: F0=([0,0,1],[1:0:0]),
// F1=([1,-1,1],[t:t+1:1]), F2=([1,0,0],[0:0:1]) and F3 across V0V2.
FlagQuadruple special_quadruple(const Rational& t012, const Rational& t023,
                                const Rational& e02, const Rational& e20);

struct C4Image {
  Rational t123, t013, e13, e31;
};

C4Image c4_rotate(const Rational& t012, const Rational& t023, const Rational& e02,
                  const Rational& e20);

}  // namespace fgc
