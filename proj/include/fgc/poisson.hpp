#pragma once

#include <Eigen/Core>
#include <unsupported/Eigen/AutoDiff>

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "fgc/coords.hpp"
#include "fgc/holonomy.hpp"
#include "fgc/surface.hpp"

namespace fgc {

// Antisymmetric table on the flat coordinate layout.
struct EpsilonTable {
  int n = 0;
  std::vector<int> entries;  // row-major n x n
  int operator()(int i, int j) const { return entries[i * n + j]; }
};

// Sum of per-triangle contributions; agrees with the case definition when
// every edge bounds two distinct triangles. With require_distinct = true,
// throws AssumptionIViolated otherwise.
EpsilonTable epsilon_table(const Triangulation& T, bool require_distinct = false);

using Ad1 = Eigen::AutoDiffScalar<Eigen::VectorXd>;
using Ad2 = Eigen::AutoDiffScalar<Eigen::Matrix<Ad1, Eigen::Dynamic, 1>>;

}  // namespace fgc

template <class D>
struct fgc::ScalarConst<Eigen::AutoDiffScalar<D>> {
  using S = Eigen::AutoDiffScalar<D>;
  static S make(const S& ref, int c) {
    using Inner = typename S::Scalar;
    S out;
    out.value() = fgc::constant_like<Inner>(ref.value(), c);
    out.derivatives().resize(ref.derivatives().size());
    for (Eigen::Index i = 0; i < ref.derivatives().size(); ++i)
      out.derivatives()[i] = fgc::constant_like<Inner>(ref.derivatives()[i], 0);
    return out;
  }
};

namespace fgc {

// A function of the flat coordinates evaluable on doubles and on first and
// second order dual numbers. f2 may be empty (first derivatives only).
struct SmoothObservable {
  std::function<double(const std::vector<double>&)> f0;
  std::function<Ad1(const std::vector<Ad1>&)> f1;
  std::function<Ad2(const std::vector<Ad2>&)> f2;
};

// F: generic callable (const std::vector<S>&) -> S.
template <class F>
SmoothObservable make_observable(F f) {
  return {[f](const std::vector<double>& v) { return f(v); },
          [f](const std::vector<Ad1>& v) { return f(v); },
          [f](const std::vector<Ad2>& v) { return f(v); }};
}

// f o m, with m: generic callable (const std::vector<S>&) -> std::vector<S>.
template <class M>
SmoothObservable pullback(const SmoothObservable& f, M m) {
  SmoothObservable out;
  out.f0 = [f, m](const std::vector<double>& v) { return f.f0(m(v)); };
  out.f1 = [f, m](const std::vector<Ad1>& v) { return f.f1(m(v)); };
  if (f.f2) out.f2 = [f, m](const std::vector<Ad2>& v) { return f.f2(m(v)); };
  return out;
}

std::vector<double> to_doubles(const CoordVector& c);
Eigen::VectorXd gradient(const SmoothObservable& f, const std::vector<double>& x);
// Needs f2.
void gradient_hessian(const SmoothObservable& f, const std::vector<double>& x, Eigen::VectorXd& g,
                      Eigen::MatrixXd& H);

// sum 2 eps(i,j) x_i x_j df/dx_i dg/dx_j
double fg_bracket(const EpsilonTable& eps, const SmoothObservable& f, const SmoothObservable& g,
                  const std::vector<double>& x);
double fg_bracket(const SmoothObservable& f, const SmoothObservable& g, const CoordVector& c);
// {f, g} as an observable with first derivatives (f and g need f2).
SmoothObservable bracket_observable(const EpsilonTable& eps, const SmoothObservable& f,
                                    const SmoothObservable& g);

// Coordinate function q_i.
SmoothObservable coordinate_observable(int i);
// prod x_i^{a_i}
SmoothObservable monomial_observable(const std::vector<int>& exponents);

// Exact rank of the coordinate bracket matrix 2 eps_ij c_i c_j.
int poisson_rank(const CoordVector& c);
int matrix_rank(std::vector<std::vector<Rational>> m);

// sum_i a_i eps(i, j) = 0 for all j.
bool casimir_check(const EpsilonTable& eps, const std::vector<int>& exponents);

template <class S>
S cube_root_positive(const S& x) {
  using std::exp;
  using std::log;
  return exp(log(x) / 3.0);
}

// tr(M) / det(M)^(1/3) along a closed path.
SmoothObservable trace_observable(const Triangulation& T, const DualPath& p);
double trace_value(const CoordVector& c, const DualPath& p);

struct Intersection {
  int sign = 1;
  DualPath path;  // the loop alpha_p beta_p
};

struct AnnotatedCurvePair {
  DualPath alpha, beta;
  std::vector<Intersection> intersections;
};

// Transverse intersections from common runs of crossings.
std::vector<Intersection> annotate_intersections(const Triangulation& T, const DualPath& alpha,
                                                 const DualPath& beta);

double goldman_bracket(const AnnotatedCurvePair& pair, const CoordVector& c);
double compatibility_residual(const AnnotatedCurvePair& pair, const CoordVector& c);

AnnotatedCurvePair curve_pair_from_json(const Triangulation& T, const std::string& text);
std::string curve_pair_to_json(const Triangulation& T, const AnnotatedCurvePair& p);

}  // namespace fgc
