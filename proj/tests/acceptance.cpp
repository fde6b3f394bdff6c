// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "fgc/checks.hpp"
#include "fgc/develop.hpp"
#include "fgc/holonomy.hpp"
#include "fgc/poisson.hpp"
#include "fgc/presets.hpp"
#include "support.hpp"

using namespace fgc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s %2d %s: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

std::string num(double x) {
  char b[32];
  std::snprintf(b, sizeof b, "%.3g", x);
  return b;
}

Rational positive(std::mt19937_64& rng) { return abs(test::random_signed(rng)); }

// Exponent rows on the flat layout, one per linear condition on log coordinates.
using Rows = std::vector<std::vector<Rational>>;

Rows finite_area_rows(const Triangulation& T) {
  Rows rows;
  for (int v = 0; v < T.num_vertices(); ++v) {
    auto [dx, dy] = peripheral_exponents(T, v);
    rows.emplace_back(dx.begin(), dx.end());
    rows.emplace_back(dy.begin(), dy.end());
  }
  return rows;
}

Rows teichmuller_rows(const Triangulation& T) {
  Rows rows;
  int n = num_vars(T);
  for (int t = 0; t < T.num_triangles(); ++t) {
    std::vector<Rational> r(n, 0);
    r[tri_var(T, t)] = 1;
    rows.push_back(r);
  }
  for (int h = 0; h < T.num_slots(); ++h) {
    if (h > T.partner(h)) continue;
    std::vector<Rational> r(n, 0);
    r[edge_var(T, h)] += 1;
    r[edge_var(T, T.partner(h))] -= 1;
    rows.push_back(r);
  }
  for (int v = 0; v < T.num_vertices(); ++v) {
    auto dx = peripheral_exponents(T, v).first;
    rows.emplace_back(dx.begin(), dx.end());
  }
  return rows;
}

Mat3 conj_antidiagonal(const Mat3& m) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[2 - i][2 - j];
  return r;
}

}  // namespace

int main() {
  run(1, "triangle count equals -2 chi", [] {
    Outcome o;
    for (const auto& name : surface_names()) {
      Triangulation T = named_surface(name);
      o.ok = o.ok && T.num_triangles() == -2 * T.euler_characteristic();
      o.detail += (o.detail.empty() ? "" : " ") + name + "=" + std::to_string(T.num_triangles());
    }
    return o;
  });

  run(2, "ratio identities on random flags", [] {
    std::mt19937_64 rng(101);
    int bad = 0;
    for (int k = 0; k < 1000; ++k) {
      FlagTriple t = test::random_triple(rng);
      const Point& v0 = t[0].point;
      CrossValue c = cross_ratio_lines(t[0].line, line_through(v0, t[1].point),
                                       line_through(v0, meet(t[1].line, t[2].line)), line_through(v0, t[2].point));
      if (c.infinite || c.value != triple_ratio(t[0], t[1], t[2])) ++bad;
      FlagQuadruple q = test::random_quadruple(rng);
      Flag a{q[0].point, q[0].line}, b{q[3].point, line_through(q[2].point, q[3].point)},
          d{q[1].point, line_through(q[1].point, q[2].point)};
      if (quadruple_ratio(q[0], q[1], q[2], q[3]) != triple_ratio(a, b, d)) ++bad;
    }
    return Outcome{bad == 0, "1000 triples and 1000 quadruples, " + std::to_string(bad) + " mismatches"};
  });

  run(3, "triangle and quadrilateral reconstruction", [] {
    std::mt19937_64 rng(102);
    int bad = 0;
    for (int k = 0; k < 1000; ++k) {
      Rational t = positive(rng);
      if (triple_ratio(reconstruct_triangle(t)[0], reconstruct_triangle(t)[1], reconstruct_triangle(t)[2]) != t) ++bad;
      Rational t012 = positive(rng), t023 = positive(rng), e02 = positive(rng), e20 = positive(rng);
      FlagQuadruple q = special_quadruple(t012, t023, e02, e20);
      if (triple_ratio(q[0], q[1], q[2]) != t012 || triple_ratio(q[0], q[2], q[3]) != t023 ||
          quadruple_ratio(q[0], q[1], q[2], q[3]) != e02 || quadruple_ratio(q[2], q[3], q[0], q[1]) != e20)
        ++bad;
    }
    return Outcome{bad == 0, "1000 samples each, " + std::to_string(bad) + " mismatches"};
  });

  run(4, "C4 rotation has order four", [] {
    std::mt19937_64 rng(103);
    int bad = 0;
    for (int k = 0; k < 1000; ++k) {
      C4Image x{positive(rng), positive(rng), positive(rng), positive(rng)};
      C4Image y = x;
      for (int i = 0; i < 4; ++i) y = c4_rotate(y.t123, y.t013, y.e13, y.e31);
      if (y.t123 != x.t123 || y.t013 != x.t013 || y.e13 != x.e13 || y.e31 != x.e31) ++bad;
    }
    return Outcome{bad == 0, "1000 samples, " + std::to_string(bad) + " mismatches"};
  });

  run(5, "flip, duality and orientation involutions", [] {
    std::mt19937_64 rng(104);
    int bad = 0, flips = 0;
    for (const auto& name : surface_names()) {
      Triangulation T = named_surface(name);
      for (int k = 0; k < 20; ++k) {
        CoordVector c = random_coords(T, rng);
        if (!(dualize(dualize(c)) == c)) ++bad;
        if (!(reverse_orientation(reverse_orientation(c)) == c)) ++bad;
        for (int h = 0; h < T.num_slots(); ++h) {
          if (T.self_glued(h) || h > T.partner(h)) continue;
          ++flips;
          FlipOutcome f = flip_transport(c, h);
          if (!(flip_transport(f.coords, h, true).coords == c)) ++bad;
          // flipping the new diagonal returns the original values on the half-turned square
          FlipOutcome g = flip_transport(f.coords, f.flip.new_diag);
          const FlipResult &a = f.flip, &b = g.flip;
          for (int x = 0; x < T.num_slots(); ++x)
            if (a.slot_map[x] >= 0 && g.coords.e(b.slot_map[a.slot_map[x]]) != c.e(x)) ++bad;
          if (g.coords.e(b.new_diag) != c.e(a.old_diag_rev) || g.coords.e(b.new_diag_rev) != c.e(a.old_diag) ||
              g.coords.t(b.new_tri_301) != c.t(a.tri_a) || g.coords.t(b.new_tri_123) != c.t(a.tri_b))
            ++bad;
        }
      }
    }
    return Outcome{bad == 0, "60 coordinate vectors, " + std::to_string(flips) + " flips, " +
                                 std::to_string(bad) + " mismatches"};
  });

  run(6, "j-invariants unchanged by flips", [] {
    std::mt19937_64 rng(105);
    Triangulation T = surface_s11();
    int bad = 0, n = 0;
    for (int k = 0; k < 20; ++k) {
      CoordVector c = random_coords(T, rng);
      for (int h = 0; h < T.num_slots(); ++h) {
        if (h > T.partner(h)) continue;
        FlipOutcome f = flip_transport(c, h);
        for (const auto& cu : s11_curves()) {
          DualPath p = path_from_crossings(T, cu.crossings);
          DualPath q = transport_path(T, f.flip, p);
          ++n;
          if (!(j_invariants(monodromy_of_path(f.coords, q).m) == j_invariants(monodromy_of_path(c, p).m))) ++bad;
        }
      }
    }
    return Outcome{bad == 0, std::to_string(n) + " comparisons (5 curves, 3 flips, 20 samples), " +
                                 std::to_string(bad) + " mismatches"};
  });

  run(7, "commutator is triangular with the peripheral eigenvalues", [] {
    std::mt19937_64 rng(106);
    Triangulation T = surface_s11();
    DualPath comm = path_from_crossings(T, s11_curves()[3].crossings);
    int bad = 0;
    for (int k = 0; k < 10; ++k) {
      CoordVector c = random_coords(T, rng);
      MonodromyMatrix m = monodromy_of_path(c, comm);
      Rational P = 1;
      for (int h = 0; h < T.num_slots(); ++h) P *= c.e(h);
      Rational tt = c.t(0) * c.t(1);
      if (!is_lower_triangular(m.m) || m.m[0][0] * P != m.m[1][1] || m.m[2][2] != P * tt * tt * tt * m.m[1][1])
        ++bad;
      PeripheralMonomials pm = peripheral_monomials(c, 0);
      MonodromyMatrix inv = mat_inverse(m);
      Mat3 u = conj_antidiagonal(inv.m);
      Rational want[3] = {1 / (pm.X * pm.Y * pm.Y), pm.Y / pm.X, pm.X * pm.X * pm.Y};
      if (!is_upper_triangular(u)) ++bad;
      for (int i = 0; i < 3; ++i)
        if (u[i][i] * u[i][i] * u[i][i] / inv.det != want[i]) ++bad;
    }
    return Outcome{bad == 0, "10 samples, " + std::to_string(bad) + " mismatches"};
  });

  run(8, "all thirteen end types reachable", [] {
    Triangulation T = surface_s11();
    std::set<int> cases;
    int bad = 0;
    for (Rational X : {Rational(1, 8), Rational(1), Rational(8)})
      for (Rational r : {Rational(1, 8), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1), Rational(2),
                         Rational(3), Rational(4), Rational(8)}) {
        CoordVector c = CoordVector::constant(T, 1);
        c.e(0) = X;
        c.t(0) = r;
        PeripheralMonomials pm = peripheral_monomials(c, 0);
        EndType e = classify_end(pm);
        cases.insert(static_cast<int>(e.which));
        if ((e.kind == EndKind::Cusp) != (pm.X == 1 && pm.Y == 1)) ++bad;
        MonodromyMatrix m = monodromy_of_path(c, peripheral_path(T, 0));
        std::set<Rational> diag{m.m[0][0], m.m[1][1], m.m[2][2]};
        int want = e.kind == EndKind::Cusp ? 1 : e.kind == EndKind::Special ? 2 : 3;
        if (static_cast<int>(diag.size()) != want) ++bad;
      }
    return Outcome{bad == 0 && static_cast<int>(cases.size()) == kNumEndCases,
                   std::to_string(cases.size()) + " distinct cases, " + std::to_string(bad) + " mismatches"};
  });

  run(9, "constraint ranks for finite area and Teichmuller loci", [] {
    Outcome o;
    std::map<std::string, int> want_fa{{"s11", 2}, {"s03", 6}, {"s12", 4}};
    for (const auto& name : surface_names()) {
      Triangulation T = named_surface(name);
      int fa = matrix_rank(finite_area_rows(T));
      int chi = T.euler_characteristic(), n = T.punctures();
      int te = matrix_rank(teichmuller_rows(T));
      int dim_fa = num_vars(T) - fa, dim_te = num_vars(T) - te;
      bool ok = fa == want_fa[name] && fa == 2 * n && te == -5 * chi + n &&
                dim_fa == 16 * T.genus() - 16 + 6 * n && dim_te == 6 * T.genus() - 6 + 2 * n;
      o.ok = o.ok && ok;
      o.detail += (o.detail.empty() ? "" : "; ") + name + ": finite-area " + std::to_string(fa) + "/" + std::to_string(2 * n) + ", Teichmuller " +
                  std::to_string(te) + "/" + std::to_string(-5 * chi + n);
    }
    return o;
  });

  run(10, "conic criterion", [] {
    CoordVector c = preset("s11", "teichmuller");
    double on = conic_residual(develop(c, 3));
    c.t(0) = 2;
    double off = conic_residual(develop(c, 3));
    return Outcome{on < 1e-10 && off > 1e-3, "Teichmuller " + num(on) + ", perturbed " + num(off)};
  });

  run(11, "Poisson axioms", [] {
    Outcome o;
    double a = 0, j = 0, f = 0;
    for (const auto& name : surface_names()) {
      CoordVector c = preset(name, "generic");
      CheckReport ra = check_antisymmetry(c, 100, 1, 1e-8);
      CheckReport rj = check_jacobi(c, 100, 1, 1e-8);
      CheckReport rf = check_flip_invariance(c, 20, 1, 1e-9);
      o.ok = o.ok && ra.passed && rj.passed && rf.passed;
      a = std::max(a, ra.max_residual);
      j = std::max(j, rj.max_residual);
      f = std::max(f, rf.max_residual);
    }
    o.detail = "antisymmetry " + num(a) + ", Jacobi " + num(j) + ", flip " + num(f);
    return o;
  });

  run(12, "Casimirs and symplectic ranks", [] {
    Outcome o;
    for (const auto& name : surface_names()) o.ok = o.ok && check_casimirs(named_surface(name)).passed;
    std::mt19937_64 rng(112);
    std::set<int> r11, r03;
    for (int k = 0; k < 20; ++k) {
      r11.insert(poisson_rank(random_coords(surface_s11(), rng)));
      r03.insert(poisson_rank(random_coords(surface_s03(), rng)));
    }
    o.ok = o.ok && r11 == std::set<int>{6} && r03 == std::set<int>{2};
    o.detail = "peripheral monomials are Casimirs; ranks s11 " + std::to_string(*r11.begin()) + ", s03 " +
               std::to_string(*r03.begin());
    return o;
  });

  run(13, "Goldman compatibility", [] {
    auto start = std::chrono::steady_clock::now();
    CheckReport r = check_compatibility(preset("s11", "generic"), s11_pairs(), 10, 1, 1e-8);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return Outcome{r.passed && r.samples == 30 && secs < 120,
                   std::to_string(r.samples) + " evaluations, max residual " + num(r.max_residual)};
  });

  run(14, "gluability", [] {
    CoordVector g = preset("s12", "gluable");
    bool yes = gluability_check(g, 0, 1);
    bool no = gluability_check(preset("s12", "ones"), 0, 1);
    Triangulation T = g.surface;
    auto [x0, y0] = peripheral_exponents(T, 0);
    auto [x1, y1] = peripheral_exponents(T, 1);
    Rows rows(2, std::vector<Rational>(num_vars(T)));
    for (int i = 0; i < num_vars(T); ++i) {
      rows[0][i] = x0[i] - x1[i];
      rows[1][i] = y0[i] - y1[i];
    }
    int rank = matrix_rank(rows);
    return Outcome{yes && !no && rank == 2, std::string("preset ") + (yes ? "true" : "false") + ", all ones " +
                                                (no ? "true" : "false") + ", constraint rank " + std::to_string(rank)};
  });

  std::printf("%d of 14 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
