#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fgc/coords.hpp"
#include "fgc/surface.hpp"

namespace fgc {

// Bundled triangulations. Corner labels follow the polygon vertex names
// used for the examples (see README).
Triangulation surface_s11();
Triangulation surface_s03();
Triangulation surface_s12();
// "s11", "s03", "s12"
Triangulation named_surface(const std::string& name);
std::vector<std::string> surface_names();

// p/q with 1 <= p, q <= 9.
Rational random_positive(std::mt19937_64& rng);
CoordVector random_coords(const Triangulation& T, std::mt19937_64& rng);

// Presets: "ones", "generic" (all surfaces); "teichmuller" (s11, s03);
// "finite-area" (s11); "gluable" (s12).
CoordVector preset(const std::string& surface, const std::string& name);
std::vector<std::pair<std::string, std::string>> preset_names();

// Multiplies two variables so that the monomials with exponent rows
// rows[0], rows[1] take the values target[0], target[1]. Uses a pair of
// variables whose 2x2 exponent minor is +-1. Returns false if none exists.
bool solve_monomials(CoordVector& c, const std::vector<std::vector<int>>& rows,
                     const std::vector<Rational>& target, int* used_a = nullptr, int* used_b = nullptr);

struct NamedCurve {
  std::string name;
  std::vector<int> crossings;
};
// Closed curves on s11 based in triangle 0.
std::vector<NamedCurve> s11_curves();

}  // namespace fgc
