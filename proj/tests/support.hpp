#pragma once

#include <random>

#include "fgc/flags.hpp"
#include "fgc/rational.hpp"

namespace fgc::test {

// Nonzero p/q with |p|, q <= 9.
inline Rational random_signed(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 9), sgn(0, 1);
  Rational r(num(rng) * (sgn(rng) ? 1 : -1), den(rng));
  r.canonicalize();
  return r;
}

inline Point random_point(std::mt19937_64& rng) {
  return Point{{random_signed(rng), random_signed(rng), random_signed(rng)}};
}

inline Flag random_flag_at(const Point& v, std::mt19937_64& rng) {
  for (;;) {
    Line l = line_through(v, random_point(rng));
    if (!is_zero(l.v)) return Flag{v, l};
  }
}

inline FlagTriple random_triple(std::mt19937_64& rng) {
  for (;;) {
    FlagTriple t;
    for (auto& f : t) f = random_flag_at(random_point(rng), rng);
    if (general_position(t)) return t;
  }
}

// Four flags with every triple in general position and the pencils used by
// the quadruple ratio non-degenerate.
inline FlagQuadruple random_quadruple(std::mt19937_64& rng) {
  for (;;) {
    FlagQuadruple q;
    for (auto& f : q) f = random_flag_at(random_point(rng), rng);
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
      for (int j = 0; j < 4 && ok; ++j)
        if (i != j) ok = eval(q[i].line, q[j].point) != 0;
    for (int a = 0; a < 4 && ok; ++a)
      for (int b = a + 1; b < 4 && ok; ++b)
        for (int c = b + 1; c < 4 && ok; ++c) ok = det3(q[a].point, q[b].point, q[c].point) != 0;
    if (ok) return q;
  }
}

}  // namespace fgc::test
