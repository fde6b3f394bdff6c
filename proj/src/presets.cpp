#include "fgc/presets.hpp"

#include "fgc/error.hpp"
#include "fgc/holonomy.hpp"

namespace fgc {

namespace {

struct Fixture {
  int genus, punctures;
  std::vector<std::array<const char*, 3>> corners;
  std::vector<std::array<int, 4>> glue;  // t, s, t', s'
};

Triangulation make(const Fixture& f) {
  std::vector<std::pair<int, int>> pairs;
  for (auto g : f.glue) pairs.emplace_back(slot(g[0], g[1]), slot(g[2], g[3]));
  Triangulation T = Triangulation::build(f.genus, f.punctures, static_cast<int>(f.corners.size()), pairs);
  std::vector<std::string> labels;
  for (auto& c : f.corners)
    for (auto* s : c) labels.emplace_back(s);
  T.set_corner_labels(labels);
  return T;
}

// x^k for integer k
Rational rpow(const Rational& x, long k) { return pow_int(x, k); }

}  // namespace

Triangulation surface_s11() {
  return make({1, 1, {{"1", "3", "2"}, {"1", "4", "3"}}, {{1, 2, 0, 0}, {1, 0, 0, 1}, {1, 1, 0, 2}}});
}

Triangulation surface_s03() {
  return make({0, 3, {{"1", "4", "2"}, {"2", "4", "3"}}, {{0, 0, 0, 2}, {0, 1, 1, 0}, {1, 1, 1, 2}}});
}

Triangulation surface_s12() {
  return make({1,
               2,
               {{"1", "6", "2"}, {"2", "6", "5"}, {"2", "5", "3"}, {"3", "5", "4"}},
               {{0, 1, 1, 0}, {1, 2, 2, 0}, {2, 1, 3, 0}, {0, 0, 3, 2}, {1, 1, 2, 2}, {3, 1, 0, 2}}});
}

Triangulation named_surface(const std::string& name) {
  if (name == "s11") return surface_s11();
  if (name == "s03") return surface_s03();
  if (name == "s12") return surface_s12();
  throw Error(ErrorCode::InvalidArgument, "unknown surface '" + name + "' (expected s11, s03 or s12)");
}

std::vector<std::string> surface_names() { return {"s11", "s03", "s12"}; }

Rational random_positive(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, 9);
  int p = d(rng), q = d(rng);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

CoordVector random_coords(const Triangulation& T, std::mt19937_64& rng) {
  std::vector<Rational> v(num_vars(T));
  for (auto& q : v) q = random_positive(rng);
  return CoordVector(T, std::move(v));
}

bool solve_monomials(CoordVector& c, const std::vector<std::vector<int>>& rows,
                     const std::vector<Rational>& target, int* used_a, int* used_b) {
  int n = c.size();
  auto eval = [&](const std::vector<int>& r) {
    Rational m = 1;
    for (int i = 0; i < n; ++i)
      if (r[i]) m *= rpow(c.values[i], r[i]);
    return m;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      long m11 = rows[0][a], m12 = rows[0][b], m21 = rows[1][a], m22 = rows[1][b];
      long det = m11 * m22 - m12 * m21;
      if (det != 1 && det != -1) continue;
      // want lambda_a^m11 lambda_b^m12 = r0, lambda_a^m21 lambda_b^m22 = r1
      Rational r0 = target[0] / eval(rows[0]);
      Rational r1 = target[1] / eval(rows[1]);
      Rational la = rpow(r0, m22 * det) * rpow(r1, -m12 * det);
      Rational lb = rpow(r0, -m21 * det) * rpow(r1, m11 * det);
      c.values[a] *= la;
      c.values[b] *= lb;
      if (used_a) *used_a = a;
      if (used_b) *used_b = b;
      return true;
    }
  }
  return false;
}

CoordVector preset(const std::string& surface, const std::string& name) {
  Triangulation T = named_surface(surface);
  if (name == "ones") return CoordVector::constant(T, 1);
  if (name == "generic") {
    std::mt19937_64 rng(20240601);
    return random_coords(T, rng);
  }
  if (name == "teichmuller" && surface == "s11") {
    // symmetric edge values whose product over the three edges is 1
    CoordVector c = CoordVector::constant(T, 1);
    Rational vals[3] = {2, 3, Rational(1, 6)};
    int k = 0;
    for (int h = 0; h < T.num_slots(); ++h) {
      if (h > T.partner(h)) continue;
      c.e(h) = vals[k];
      c.e(T.partner(h)) = vals[k];
      ++k;
    }
    return c;
  }
  if (name == "teichmuller" && surface == "s03") return CoordVector::constant(T, 1);
  if (name == "finite-area" && surface == "s11") {
    CoordVector c = CoordVector::constant(T, 1);
    c.t(0) = 2;
    c.t(1) = Rational(1, 2);
    Rational vals[6] = {2, Rational(1, 3), Rational(3, 2), 1, 1, 1};
    for (int h = 0; h < 6; ++h) c.e(h) = vals[h];
    return c;
  }
  if (name == "gluable" && surface == "s12") {
    auto [x1, y1] = peripheral_exponents(T, 0);
    auto [x2, y2] = peripheral_exponents(T, 1);
    std::vector<int> dx(x1.size()), dy(y1.size());
    for (size_t i = 0; i < dx.size(); ++i) {
      dx[i] = x1[i] - x2[i];
      dy[i] = y1[i] - y2[i];
    }
    for (uint64_t seed = 1; seed < 10000; ++seed) {
      std::mt19937_64 rng(seed);
      CoordVector c = random_coords(T, rng);
      if (!solve_monomials(c, {dx, dy}, {1, 1})) break;
      for (auto& q : c.values) q.canonicalize();
      auto m = peripheral_monomials(c, 0);
      if (m.X > 1 && m.Y > 1 && gluability_check(c, 0, 1)) return c;
    }
    throw Error(ErrorCode::Validation, "no gluable sample found");
  }
  throw Error(ErrorCode::InvalidArgument, "no preset '" + name + "' for surface " + surface);
}

std::vector<std::pair<std::string, std::string>> preset_names() {
  return {{"s11", "ones"},        {"s11", "generic"}, {"s11", "teichmuller"}, {"s11", "finite-area"},
          {"s03", "ones"},        {"s03", "generic"}, {"s03", "teichmuller"}, {"s12", "ones"},
          {"s12", "generic"},     {"s12", "gluable"}};
}

std::vector<NamedCurve> s11_curves() {
  Triangulation T = surface_s11();
  auto rev = [&](const std::vector<int>& x) {
    std::vector<int> r;
    for (auto it = x.rbegin(); it != x.rend(); ++it) r.push_back(T.partner(*it));
    return r;
  };
  auto join = [&](std::initializer_list<std::vector<int>> parts) {
    std::vector<int> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return reduce_cyclic(T, out);
  };
  std::vector<int> alpha = {slot(0, 2), slot(1, 2)};
  std::vector<int> beta = {slot(0, 1), slot(1, 2)};
  std::vector<int> gamma = {slot(0, 1), slot(1, 1)};
  return {
      {"alpha", alpha},
      {"beta", beta},
      {"gamma", gamma},
      {"commutator", join({alpha, beta, rev(alpha), rev(beta)})},
      {"alpha-beta", join({alpha, beta})},
  };
}

}  // namespace fgc
