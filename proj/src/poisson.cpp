#include "fgc/poisson.hpp"

#include "fgc/error.hpp"
#include "json_util.hpp"

namespace fgc {

EpsilonTable epsilon_table(const Triangulation& T, bool require_distinct) {
  if (require_distinct && !validate_distinct_faces(T))
    throw Error(ErrorCode::AssumptionIViolated, "some edge has both sides in one triangle");
  EpsilonTable e;
  e.n = num_vars(T);
  e.entries.assign(e.n * e.n, 0);
  auto add = [&](int a, int b, int x) {
    e.entries[a * e.n + b] += x;
    e.entries[b * e.n + a] -= x;
  };
  for (int t = 0; t < T.num_triangles(); ++t) {
    for (int s = 0; s < 3; ++s) {
      int h = slot(t, s);
      add(edge_var(T, h), tri_var(T, t), -1);
      add(edge_var(T, T.partner(h)), tri_var(T, t), 1);
      add(edge_var(T, h), edge_var(T, T.partner(slot(t, (s + 2) % 3))), 1);
    }
  }
  return e;
}

std::vector<double> to_doubles(const CoordVector& c) {
  std::vector<double> x;
  for (const auto& q : c.values) x.push_back(q.get_d());
  return x;
}

Eigen::VectorXd gradient(const SmoothObservable& f, const std::vector<double>& x) {
  int n = static_cast<int>(x.size());
  std::vector<Ad1> v(n);
  for (int i = 0; i < n; ++i) v[i] = Ad1(x[i], n, i);
  Ad1 r = f.f1(v);
  if (r.derivatives().size() == 0) return Eigen::VectorXd::Zero(n);
  return r.derivatives();
}

void gradient_hessian(const SmoothObservable& f, const std::vector<double>& x, Eigen::VectorXd& g,
                      Eigen::MatrixXd& H) {
  if (!f.f2) throw Error(ErrorCode::InvalidArgument, "observable has no second derivatives");
  int n = static_cast<int>(x.size());
  std::vector<Ad2> v(n);
  for (int i = 0; i < n; ++i) {
    v[i].value() = Ad1(x[i], n, i);
    v[i].derivatives() = Eigen::Matrix<Ad1, Eigen::Dynamic, 1>::Constant(n, Ad1(0.0, Eigen::VectorXd::Zero(n)));
    v[i].derivatives()[i] = Ad1(1.0, Eigen::VectorXd::Zero(n));
  }
  Ad2 r = f.f2(v);
  g = Eigen::VectorXd::Zero(n);
  H = Eigen::MatrixXd::Zero(n, n);
  if (r.derivatives().size() == 0) return;
  for (int i = 0; i < n; ++i) {
    g[i] = r.derivatives()[i].value();
    if (r.derivatives()[i].derivatives().size() == n) H.row(i) = r.derivatives()[i].derivatives().transpose();
  }
}

namespace {

Eigen::MatrixXd omega(const EpsilonTable& eps, const std::vector<double>& x) {
  Eigen::MatrixXd w(eps.n, eps.n);
  for (int i = 0; i < eps.n; ++i)
    for (int j = 0; j < eps.n; ++j) w(i, j) = 2.0 * eps(i, j) * x[i] * x[j];
  return w;
}

}  // namespace

double fg_bracket(const EpsilonTable& eps, const SmoothObservable& f, const SmoothObservable& g,
                  const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != eps.n) throw Error(ErrorCode::InvalidArgument, "coordinate size mismatch");
  return gradient(f, x).dot(omega(eps, x) * gradient(g, x));
}

double fg_bracket(const SmoothObservable& f, const SmoothObservable& g, const CoordVector& c) {
  return fg_bracket(epsilon_table(c.surface), f, g, to_doubles(c));
}

SmoothObservable bracket_observable(const EpsilonTable& eps, const SmoothObservable& f,
                                    const SmoothObservable& g) {
  SmoothObservable out;
  out.f0 = [eps, f, g](const std::vector<double>& x) { return fg_bracket(eps, f, g, x); };
  out.f1 = [eps, f, g](const std::vector<Ad1>& v) {
    int n = static_cast<int>(v.size());
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = v[i].value();
    Eigen::VectorXd gf, gg;
    Eigen::MatrixXd hf, hg;
    gradient_hessian(f, x, gf, hf);
    gradient_hessian(g, x, gg, hg);
    Eigen::MatrixXd w = omega(eps, x);
    double val = gf.dot(w * gg);
    // d/dx_k of gf^T W gg
    Eigen::VectorXd wg = w * gg, wtf = w.transpose() * gf;
    Eigen::VectorXd d = hf * wg + hg * wtf;
    for (int k = 0; k < n; ++k) {
      double dk = 0;
      for (int j = 0; j < n; ++j) dk += 2.0 * eps(k, j) * x[j] * gf[k] * gg[j] + 2.0 * eps(j, k) * x[j] * gf[j] * gg[k];
      d[k] += dk;
    }
    int m = 0;
    for (const auto& a : v) m = std::max<int>(m, static_cast<int>(a.derivatives().size()));
    Eigen::VectorXd der = Eigen::VectorXd::Zero(m);
    for (int k = 0; k < n; ++k)
      if (v[k].derivatives().size() == m) der += d[k] * v[k].derivatives();
    return Ad1(val, der);
  };
  return out;
}

SmoothObservable coordinate_observable(int i) {
  return make_observable([i](const auto& v) { return v[i]; });
}

SmoothObservable monomial_observable(const std::vector<int>& a) {
  return make_observable([a](const auto& v) {
    using S = std::decay_t<decltype(v[0])>;
    S r = constant_like(v[0], 1);
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] > 0)
        for (int k = 0; k < a[i]; ++k) r = r * v[i];
      else
        for (int k = 0; k < -a[i]; ++k) r = r / v[i];
    }
    return r;
  });
}

int matrix_rank(std::vector<std::vector<Rational>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

int poisson_rank(const CoordVector& c) {
  EpsilonTable e = epsilon_table(c.surface);
  std::vector<std::vector<Rational>> w(e.n, std::vector<Rational>(e.n));
  for (int i = 0; i < e.n; ++i)
    for (int j = 0; j < e.n; ++j) w[i][j] = 2 * e(i, j) * c.values[i] * c.values[j];
  return matrix_rank(std::move(w));
}

bool casimir_check(const EpsilonTable& eps, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != eps.n) throw Error(ErrorCode::InvalidArgument, "exponent vector size mismatch");
  for (int j = 0; j < eps.n; ++j) {
    long s = 0;
    for (int i = 0; i < eps.n; ++i) s += static_cast<long>(a[i]) * eps(i, j);
    if (s != 0) return false;
  }
  return true;
}

SmoothObservable trace_observable(const Triangulation& T, const DualPath& p) {
  validate_path(T, p);
  if (!p.closed) throw Error(ErrorCode::InconsistentPath, "trace needs a closed path");
  return make_observable([T, p](const auto& v) {
    using S = std::decay_t<decltype(v[0])>;
    Mat3T<S> m = monodromy_values(T, p, v);
    return S(mat_trace(m) / cube_root_positive(S(mat_det(m))));
  });
}

double trace_value(const CoordVector& c, const DualPath& p) {
  MonodromyMatrix m = monodromy_of_path(c, p);
  return mat_trace(m.m).get_d() / std::cbrt(m.det.get_d());
}

std::vector<Intersection> annotate_intersections(const Triangulation& T, const DualPath& alpha,
                                                 const DualPath& beta) {
  std::vector<int> a = path_crossings(alpha), b = path_crossings(beta);
  int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  std::vector<Intersection> out;
  if (na == 0 || nb == 0) return out;
  std::vector<int> brev;
  for (auto it = b.rbegin(); it != b.rend(); ++it) brev.push_back(T.partner(*it));
  auto at = [](const std::vector<int>& v, int i) {
    int n = static_cast<int>(v.size());
    return v[((i % n) + n) % n];
  };
  // side of the path relative to the shared run, just before and after it
  auto side_at_start = [&](const std::vector<int>& cr, int k) {
    int s = slot_side(at(cr, k));
    int entry = slot_side(T.partner(at(cr, k - 1)));
    return entry == (s + 1) % 3 ? 'L' : 'R';
  };
  auto side_at_end = [&](const std::vector<int>& cr, int k) {
    int s = slot_side(T.partner(at(cr, k)));
    int exit = slot_side(at(cr, k + 1));
    return exit == (s + 1) % 3 ? 'R' : 'L';
  };
  long cap = static_cast<long>(na) * nb;
  for (int dir : {1, -1}) {
    const std::vector<int>& bb = dir > 0 ? b : brev;
    std::vector<char> seen(na * nb, 0);
    for (int i = 0; i < na; ++i) {
      for (int j = 0; j < nb; ++j) {
        if (a[i] != bb[j] || seen[i * nb + j]) continue;
        if (at(a, i - 1) == at(bb, j - 1)) continue;  // inside a run
        long L = 0;
        while (L < cap && at(a, i + L) == at(bb, j + L)) {
          int ii = (i + L) % na, jj = (j + L) % nb;
          seen[ii * nb + jj] = 1;
          ++L;
        }
        if (L >= cap) continue;
        int ie = static_cast<int>((i + L - 1) % na), je = static_cast<int>((j + L - 1) % nb);
        char s0 = side_at_start(bb, j), s1 = side_at_end(bb, je);
        if (s0 == s1) continue;
        int sgn = (s0 == 'R' ? 1 : -1) * dir;
        std::vector<int> c;
        for (int k = 0; k < na; ++k) c.push_back(at(a, ie + 1 + k));
        if (dir > 0) {
          for (int k = 0; k < nb; ++k) c.push_back(at(bb, je + 1 + k));
        } else {
          int jb = nb - 1 - je;
          for (int k = 0; k < nb; ++k) c.push_back(at(b, jb + k));
        }
        out.push_back({sgn, path_from_crossings(T, reduce_cyclic(T, c), true)});
      }
    }
  }
  return out;
}

double goldman_bracket(const AnnotatedCurvePair& pair, const CoordVector& c) {
  if (pair.intersections.empty()) return 0;
  double ta = trace_value(c, pair.alpha), tb = trace_value(c, pair.beta);
  double sum = 0;
  for (const auto& x : pair.intersections) sum += x.sign * (trace_value(c, x.path) - ta * tb / 3.0);
  return sum;
}

double compatibility_residual(const AnnotatedCurvePair& pair, const CoordVector& c) {
  double gol = goldman_bracket(pair, c);
  double fg = fg_bracket(trace_observable(c.surface, pair.alpha), trace_observable(c.surface, pair.beta), c);
  return std::abs(2 * gol - fg);
}

AnnotatedCurvePair curve_pair_from_json(const Triangulation& T, const std::string& text) {
  using detail::json;
  json j = detail::parse_json(text, "curve pair");
  auto path_of = [&](const json& x, const std::string& key) {
    if (!x.is_string()) throw Error(ErrorCode::Parse, "curve pair: '" + key + "' must be a token string");
    return parse_path(T, x.get<std::string>(), true);
  };
  AnnotatedCurvePair p;
  p.alpha = path_of(detail::require(j, "alpha", "curve pair"), "alpha");
  p.beta = path_of(detail::require(j, "beta", "curve pair"), "beta");
  const json& xs = detail::require(j, "intersections", "curve pair");
  if (!xs.is_array()) throw Error(ErrorCode::Parse, "curve pair: 'intersections' must be an array");
  for (size_t i = 0; i < xs.size(); ++i) {
    const json& s = detail::require(xs[i], "sign", "curve pair intersection");
    if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1))
      throw Error(ErrorCode::Parse, "curve pair: intersection " + std::to_string(i) + " sign must be 1 or -1");
    p.intersections.push_back(
        {s.get<int>(), path_of(detail::require(xs[i], "path", "curve pair intersection"), "path")});
  }
  return p;
}

std::string curve_pair_to_json(const Triangulation& T, const AnnotatedCurvePair& p) {
  using detail::json;
  json j;
  j["alpha"] = format_path(T, p.alpha);
  j["beta"] = format_path(T, p.beta);
  json xs = json::array();
  for (const auto& x : p.intersections) xs.push_back({{"sign", x.sign}, {"path", format_path(T, x.path)}});
  j["intersections"] = xs;
  return j.dump(2) + "\n";
}

}  // namespace fgc
