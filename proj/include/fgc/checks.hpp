#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fgc/coords.hpp"
#include "fgc/poisson.hpp"

namespace fgc {

// Sum of a few Laurent monomials in random coordinates with random
// positive weights.
SmoothObservable random_observable(int nvars, std::mt19937_64& rng);

struct CheckReport {
  std::string name;
  bool passed = true;
  double max_residual = 0;
  int samples = 0;
  std::string detail;
};

// |{f,{g,h}} + cyclic| at random coordinates (the first sample is c).
CheckReport check_jacobi(const CoordVector& c, int samples, uint64_t seed, double tol);
// |{f,g}| + |{f,g} + {g,f}|
CheckReport check_antisymmetry(const CoordVector& c, int samples, uint64_t seed, double tol);
// {f o flip, g o flip}(c) vs {f, g}(flip(c)) over every flippable edge.
CheckReport check_flip_invariance(const CoordVector& c, int samples, uint64_t seed, double tol);
// Every peripheral monomial is a Casimir (exact).
CheckReport check_casimirs(const Triangulation& T);
CheckReport check_compatibility(const CoordVector& c, const std::vector<AnnotatedCurvePair>& pairs,
                                int samples, uint64_t seed, double tol);

// Bundled annotated pairs on s11.
std::vector<AnnotatedCurvePair> s11_pairs();

}  // namespace fgc
