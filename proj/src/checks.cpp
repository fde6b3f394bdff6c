#include "fgc/checks.hpp"

#include <cmath>

#include "fgc/presets.hpp"

namespace fgc {

namespace {

std::vector<double> sample_point(const CoordVector& c, int k, std::mt19937_64& rng) {
  if (k == 0) return to_doubles(c);
  return to_doubles(random_coords(c.surface, rng));
}

// f / f(x): the identities checked are multilinear, so this only fixes the scale.
SmoothObservable unit_at(const SmoothObservable& f, const std::vector<double>& x) {
  double s = 1.0 / f.f0(x);
  SmoothObservable out;
  out.f0 = [f, s](const std::vector<double>& v) { return f.f0(v) * s; };
  out.f1 = [f, s](const std::vector<Ad1>& v) { return Ad1(f.f1(v) * s); };
  out.f2 = [f, s](const std::vector<Ad2>& v) { return Ad2(f.f2(v) * s); };
  return out;
}

}  // namespace

SmoothObservable random_observable(int nvars, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> var(0, nvars - 1), pw(-1, 1), nterms(1, 3);
  std::uniform_real_distribution<double> w(0.5, 2.0);
  std::vector<std::vector<int>> terms;
  std::vector<double> weights;
  int m = nterms(rng);
  for (int t = 0; t < m; ++t) {
    std::vector<int> e(nvars, 0);
    for (int k = 0; k < 2; ++k) e[var(rng)] += pw(rng);
    terms.push_back(e);
    weights.push_back(w(rng));
  }
  return make_observable([terms, weights](const auto& v) {
    using S = std::decay_t<decltype(v[0])>;
    S sum = constant_like(v[0], 0);
    for (size_t t = 0; t < terms.size(); ++t) {
      S r = constant_like(v[0], 1);
      for (size_t i = 0; i < terms[t].size(); ++i) {
        int a = terms[t][i];
        for (int k = 0; k < a; ++k) r = r * v[i];
        for (int k = 0; k < -a; ++k) r = r / v[i];
      }
      sum = sum + r * weights[t];
    }
    return sum;
  });
}

CheckReport check_jacobi(const CoordVector& c, int samples, uint64_t seed, double tol) {
  CheckReport r;
  r.name = "jacobi";
  std::mt19937_64 rng(seed);
  EpsilonTable E = epsilon_table(c.surface);
  int n = num_vars(c.surface);
  for (int k = 0; k < samples; ++k) {
    auto x = sample_point(c, k, rng);
    auto f = unit_at(random_observable(n, rng), x), g = unit_at(random_observable(n, rng), x),
         h = unit_at(random_observable(n, rng), x);
    double j = fg_bracket(E, f, bracket_observable(E, g, h), x) + fg_bracket(E, g, bracket_observable(E, h, f), x) +
               fg_bracket(E, h, bracket_observable(E, f, g), x);
    r.max_residual = std::max(r.max_residual, std::abs(j));
    ++r.samples;
  }
  r.passed = r.max_residual < tol;
  return r;
}

CheckReport check_antisymmetry(const CoordVector& c, int samples, uint64_t seed, double tol) {
  CheckReport r;
  r.name = "antisymmetry";
  std::mt19937_64 rng(seed);
  EpsilonTable E = epsilon_table(c.surface);
  int n = num_vars(c.surface);
  for (int k = 0; k < samples; ++k) {
    auto x = sample_point(c, k, rng);
    auto f = unit_at(random_observable(n, rng), x), g = unit_at(random_observable(n, rng), x);
    double a = std::abs(fg_bracket(E, f, g, x) + fg_bracket(E, g, f, x)) + std::abs(fg_bracket(E, f, f, x));
    r.max_residual = std::max(r.max_residual, a);
    ++r.samples;
  }
  r.passed = r.max_residual < tol;
  return r;
}

CheckReport check_flip_invariance(const CoordVector& c, int samples, uint64_t seed, double tol) {
  CheckReport r;
  r.name = "flip-invariance";
  std::mt19937_64 rng(seed);
  const Triangulation& T = c.surface;
  EpsilonTable E = epsilon_table(T);
  int n = num_vars(T);
  int flips = 0;
  for (int h = 0; h < T.num_slots(); ++h) {
    if (h > T.partner(h) || T.self_glued(h)) continue;
    FlipResult fr = flip_combinatorial(T, h);
    EpsilonTable E2 = epsilon_table(fr.surface);
    ++flips;
    for (int k = 0; k < samples; ++k) {
      auto x = sample_point(c, k, rng);
      auto y = flip_values(T, fr, x);
      auto f = unit_at(random_observable(n, rng), y), g = unit_at(random_observable(n, rng), y);
      auto phi = [T, fr](const auto& v) { return flip_values(T, fr, v); };
      double lhs = fg_bracket(E, pullback(f, phi), pullback(g, phi), x);
      double rhs = fg_bracket(E2, f, g, y);
      r.max_residual = std::max(r.max_residual, std::abs(lhs - rhs));
      ++r.samples;
    }
  }
  r.detail = std::to_string(flips) + " flippable edges";
  r.passed = r.max_residual < tol;
  return r;
}

CheckReport check_casimirs(const Triangulation& T) {
  CheckReport r;
  r.name = "casimirs";
  EpsilonTable E = epsilon_table(T);
  for (int v = 0; v < T.num_vertices(); ++v) {
    auto [x, y] = peripheral_exponents(T, v);
    bool ok = casimir_check(E, x) && casimir_check(E, y);
    if (!ok) {
      r.passed = false;
      r.detail += "vertex " + std::to_string(v) + " fails; ";
    }
    r.samples += 2;
  }
  return r;
}

CheckReport check_compatibility(const CoordVector& c, const std::vector<AnnotatedCurvePair>& pairs,
                                int samples, uint64_t seed, double tol) {
  CheckReport r;
  r.name = "compatibility";
  std::mt19937_64 rng(seed);
  for (const auto& p : pairs) {
    for (int k = 0; k < samples; ++k) {
      CoordVector x = k == 0 ? c : random_coords(c.surface, rng);
      r.max_residual = std::max(r.max_residual, compatibility_residual(p, x));
      ++r.samples;
    }
  }
  r.passed = r.max_residual < tol;
  return r;
}

std::vector<AnnotatedCurvePair> s11_pairs() {
  Triangulation T = surface_s11();
  auto curves = s11_curves();
  auto find = [&](const std::string& name) {
    for (const auto& c : curves)
      if (c.name == name) return path_from_crossings(T, c.crossings);
    throw Error(ErrorCode::InvalidArgument, "no curve " + name);
  };
  std::vector<AnnotatedCurvePair> out;
  for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"alpha", "beta"}, {"alpha", "gamma"}, {"beta", "gamma"}}) {
    DualPath pa = find(a), pb = find(b);
    out.push_back({pa, pb, annotate_intersections(T, pa, pb)});
  }
  return out;
}

}  // namespace fgc
