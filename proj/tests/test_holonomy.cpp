#include <doctest.h>

#include <set>

#include "fgc/holonomy.hpp"
#include "fgc/presets.hpp"

using namespace fgc;

namespace {

// Same surface read with the opposite orientation: corners of every
// triangle reversed. Side s of a triangle becomes side 2 - s.
int mirror_slot(int h) { return slot(slot_tri(h), (2 - slot_side(h)) % 3); }

Triangulation mirror_surface(const Triangulation& T) {
  std::vector<std::pair<int, int>> pairs;
  for (int h = 0; h < T.num_slots(); ++h)
    if (h < T.partner(h)) pairs.emplace_back(mirror_slot(h), mirror_slot(T.partner(h)));
  return Triangulation::build(T.genus(), T.punctures(), T.num_triangles(), pairs);
}

// Values of reverse_orientation(c) placed on the mirrored labels.
CoordVector mirror_coords(const CoordVector& c) {
  CoordVector r = reverse_orientation(c);
  const Triangulation& T = c.surface;
  CoordVector out = CoordVector::constant(mirror_surface(T), 1);
  for (int t = 0; t < T.num_triangles(); ++t) out.t(t) = r.t(t);
  for (int h = 0; h < T.num_slots(); ++h) out.e(mirror_slot(T.partner(h))) = r.e(h);
  return out;
}

DualPath mirror_path(const DualPath& p) {
  DualPath q = p;
  for (auto& s : q.steps) {
    s.eps = -s.eps;
    s.exit = mirror_slot(s.exit);
  }
  return q;
}

std::vector<DualPath> s11_paths() {
  Triangulation T = surface_s11();
  std::vector<DualPath> out;
  for (const auto& c : s11_curves()) out.push_back(path_from_crossings(T, c.crossings));
  return out;
}

JInvariants j_of(const CoordVector& c, const DualPath& p) { return j_invariants(monodromy_of_path(c, p).m); }

Mat3 conj_antidiagonal(const Mat3& m) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[2 - i][2 - j];
  return r;
}

}  // namespace

TEST_SUITE("holonomy") {

TEST_CASE("generator determinants") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 50; ++k) {
    Rational z = random_positive(rng), x = random_positive(rng), y = random_positive(rng);
    CHECK(mat_det(gen_T(z).m) == z);
    CHECK(gen_T(z).det == z);
    CHECK(mat_det(gen_E(x, y).m) == y / x);
    CHECK(mat_det(turn_matrix(z, -1)) == 1 / z);
    // T(z)^3 is scalar
    Mat3 t3 = mat_mul(mat_mul(gen_T(z).m, gen_T(z).m), gen_T(z).m);
    CHECK(t3[0][1] == 0);
    CHECK(t3[1][0] == 0);
    CHECK(t3[0][0] == t3[1][1]);
    CHECK(t3[1][1] == t3[2][2]);
    // E(x, y)^2 is diagonal
    Mat3 e2 = mat_mul(gen_E(x, y).m, gen_E(x, y).m);
    CHECK(e2[0][2] == 0);
    CHECK(e2[2][0] == 0);
  }
  CHECK_THROWS_AS(gen_T(0), Error);
  CHECK_THROWS_AS(gen_E(1, -2), Error);
}

TEST_CASE("edge then turn is upper triangular") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    Rational x = random_positive(rng), y = random_positive(rng), z = random_positive(rng);
    Mat3 m = mat_mul(gen_E(x, y).m, gen_T(z).m);
    Mat3 expect{{{y * z, y * (z + 1), y}, {0, 1, 1}, {0, 0, 1 / x}}};
    CHECK(m == expect);
  }
}

TEST_CASE("monodromy determinant matches the product of generator determinants") {
  std::mt19937_64 rng(4);
  Triangulation T = surface_s11();
  for (int k = 0; k < 10; ++k) {
    CoordVector c = random_coords(T, rng);
    for (const auto& p : s11_paths()) {
      MonodromyMatrix m = monodromy_of_path(c, p);
      CHECK(mat_det(m.m) == m.det);
      MonodromyMatrix inv = mat_inverse(m);
      Mat3 id = mat_mul(m.m, inv.m);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(id[i][j] == (i == j ? 1 : 0));
    }
  }
}

TEST_CASE("j-invariants survive every flip") {
  std::mt19937_64 rng(6);
  Triangulation T = surface_s11();
  for (int k = 0; k < 20; ++k) {
    CoordVector c = random_coords(T, rng);
    for (int h = 0; h < T.num_slots(); ++h) {
      if (h > T.partner(h)) continue;
      FlipOutcome f = flip_transport(c, h);
      for (const auto& p : s11_paths()) {
        DualPath q = transport_path(T, f.flip, p);
        CHECK(j_of(f.coords, q) == j_of(c, p));
      }
    }
  }
}

TEST_CASE("j-invariants of peripheral loops survive flips on every surface") {
  std::mt19937_64 rng(8);
  for (const auto& name : surface_names()) {
    Triangulation T = named_surface(name);
    CoordVector c = random_coords(T, rng);
    for (int h = 0; h < T.num_slots(); ++h) {
      if (T.self_glued(h)) continue;
      FlipOutcome f = flip_transport(c, h);
      for (int v = 0; v < T.num_vertices(); ++v) {
        DualPath q = transport_path(T, f.flip, peripheral_path(T, v));
        CHECK(j_of(f.coords, q) == j_of(c, peripheral_path(T, v)));
        CHECK(j_of(f.coords, peripheral_path(f.flip.surface, v)) == j_of(c, peripheral_path(T, v)));
      }
    }
  }
}

TEST_CASE("duality and inversion swap j1 and j2") {
  std::mt19937_64 rng(10);
  Triangulation T = surface_s11();
  for (int k = 0; k < 10; ++k) {
    CoordVector c = random_coords(T, rng);
    for (const auto& p : s11_paths()) {
      JInvariants j = j_of(c, p);
      JInvariants swapped{j.j2, j.j1};
      CHECK(j_of(dualize(c), p) == swapped);
      CHECK(j_of(c, reverse_path(T, p)) == swapped);
    }
  }
}

TEST_CASE("orientation reversal read on the mirrored triangulation") {
  std::mt19937_64 rng(12);
  for (const auto& name : surface_names()) {
    Triangulation T = named_surface(name);
    for (int k = 0; k < 5; ++k) {
      CoordVector c = random_coords(T, rng);
      CoordVector m = mirror_coords(c);
      std::vector<DualPath> paths;
      if (name == "s11") paths = s11_paths();
      for (int v = 0; v < T.num_vertices(); ++v) paths.push_back(peripheral_path(T, v));
      for (const auto& p : paths) CHECK(j_of(m, mirror_path(p)) == j_of(c, p));
    }
  }
}

TEST_CASE("peripheral loops are lower triangular with diagonal 1/X : 1 : Y") {
  std::mt19937_64 rng(14);
  for (const auto& name : surface_names()) {
    Triangulation T = named_surface(name);
    for (int k = 0; k < 5; ++k) {
      CoordVector c = random_coords(T, rng);
      for (int v = 0; v < T.num_vertices(); ++v) {
        MonodromyMatrix m = monodromy_of_path(c, peripheral_path(T, v, 1));
        PeripheralMonomials pm = peripheral_monomials(c, v);
        REQUIRE(is_lower_triangular(m.m));
        CHECK(m.m[0][0] * pm.X == m.m[1][1]);
        CHECK(m.m[2][2] == pm.Y * m.m[1][1]);
        MonodromyMatrix u = monodromy_of_path(c, peripheral_path(T, v, -1));
        CHECK(is_upper_triangular(u.m) != is_lower_triangular(u.m));
      }
    }
  }
}

TEST_CASE("peripheral monomials from explicit exponents") {
  std::mt19937_64 rng(16);
  for (const auto& name : surface_names()) {
    Triangulation T = named_surface(name);
    CoordVector c = random_coords(T, rng);
    for (int v = 0; v < T.num_vertices(); ++v) {
      auto [dx, dy] = peripheral_exponents(T, v);
      Rational X = 1, Y = 1;
      for (int i = 0; i < c.size(); ++i) {
        X *= pow_int(c.values[i], dx[i]);
        Y *= pow_int(c.values[i], dy[i]);
      }
      CHECK(X == peripheral_monomials(c, v).X);
      CHECK(Y == peripheral_monomials(c, v).Y);
    }
  }
}

TEST_CASE("commutator on the once-punctured torus") {
  std::mt19937_64 rng(18);
  Triangulation T = surface_s11();
  DualPath comm = path_from_crossings(T, s11_curves()[3].crossings);
  for (int k = 0; k < 10; ++k) {
    CoordVector c = random_coords(T, rng);
    MonodromyMatrix m = monodromy_of_path(c, comm);
    REQUIRE(is_lower_triangular(m.m));
    // displayed form: diag (P^-1, 1, P (t t')^3) up to a common factor,
    // P the product of all six edge values
    Rational P = 1;
    for (int h = 0; h < T.num_slots(); ++h) P *= c.e(h);
    Rational tt = c.t(0) * c.t(1);
    CHECK(m.m[0][0] * P == m.m[1][1]);
    CHECK(m.m[2][2] == P * tt * tt * tt * m.m[1][1]);
    PeripheralMonomials pm = peripheral_monomials(c, 0);
    CHECK(pm.X == P);
    CHECK(pm.Y == P * tt * tt * tt);
    // the inverse loop, in upper triangular form, has eigenvalue cubes in order
    MonodromyMatrix inv = mat_inverse(m);
    Mat3 u = conj_antidiagonal(inv.m);
    REQUIRE(is_upper_triangular(u));
    EigenCubes e = eigenvalue_exponents(pm);
    CHECK(u[0][0] * u[0][0] * u[0][0] / inv.det == e.l1);
    CHECK(u[1][1] * u[1][1] * u[1][1] / inv.det == e.l2);
    CHECK(u[2][2] * u[2][2] * u[2][2] / inv.det == e.l3);
    CHECK(e.l1 == 1 / (pm.X * pm.Y * pm.Y));
    CHECK(e.l2 == pm.Y / pm.X);
    CHECK(e.l3 == pm.X * pm.X * pm.Y);
  }
}

TEST_CASE("all ones: cusps and unipotent peripheral holonomy") {
  for (const auto& name : surface_names()) {
    CoordVector c = CoordVector::constant(named_surface(name), 1);
    CHECK(is_finite_area(c));
    for (int v = 0; v < c.surface.num_vertices(); ++v) {
      CHECK(classify_end(peripheral_monomials(c, v)).kind == EndKind::Cusp);
      CHECK(is_unipotent_class(monodromy_of_path(c, peripheral_path(c.surface, v))));
    }
  }
  CoordVector g = preset("s11", "generic");
  CHECK_FALSE(is_unipotent_class(monodromy_of_path(g, peripheral_path(g.surface, 0))));
}

TEST_CASE("end classification by sign pattern") {
  // kinds from the minimality and maximality inequalities
  auto expected_kind = [](int sx, int sy, int sxy) {
    if (sx == 0 && sy == 0) return EndKind::Cusp;
    if (sx == 0 || sy == 0 || sxy == 0) return EndKind::Special;
    bool minimal = (sx > 0 && sy > 0) || (sx < 0 && sy < 0) || (sxy < 0 && sx > 0) || (sxy > 0 && sx < 0);
    bool maximal = (sx < 0 && sxy < 0 && sy > 0) || (sx > 0 && sxy > 0 && sy < 0);
    REQUIRE(minimal != maximal);
    return minimal ? EndKind::HyperbolicMinimal : EndKind::HyperbolicMaximal;
  };
  // on this surface X is the product of all edge values and Y = X (t0 t1)^3
  Triangulation T = surface_s11();
  std::mt19937_64 rng(20);
  std::set<int> cases;
  std::set<std::tuple<int, int, int>> patterns;
  for (Rational X : {Rational(1, 8), Rational(1), Rational(8)}) {
    for (Rational r : {Rational(1, 8), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1), Rational(2),
                       Rational(3), Rational(4), Rational(8)}) {
      CoordVector c = CoordVector::constant(T, 1);
      c.e(0) = X;
      c.t(0) = r;
      // moves that keep both monomials
      Rational lam = random_positive(rng);
      c.e(1 + rng() % 5) *= lam;
      c.e(0) /= lam;
      Rational mu = random_positive(rng);
      c.t(0) *= mu;
      c.t(1) /= mu;
      PeripheralMonomials pm = peripheral_monomials(c, 0);
      REQUIRE(pm.X == X);
      REQUIRE(pm.Y == X * r * r * r);
      int sx = sign(pm.X - 1), sy = sign(pm.Y - 1), sxy = sign(pm.X * pm.Y - 1);
      patterns.insert({sx, sy, sxy});
      EndType e = classify_end(pm);
      CHECK(e.kind == expected_kind(sx, sy, sxy));
      CHECK((e.kind == EndKind::Cusp) == (pm.X == 1 && pm.Y == 1));
      // eigenvalue multiplicities of the actual peripheral holonomy
      MonodromyMatrix m = monodromy_of_path(c, peripheral_path(T, 0));
      std::set<Rational> diag{m.m[0][0], m.m[1][1], m.m[2][2]};
      int distinct = static_cast<int>(diag.size());
      CHECK(distinct == (e.kind == EndKind::Cusp ? 1 : e.kind == EndKind::Special ? 2 : 3));
      cases.insert(static_cast<int>(e.which));
    }
  }
  CHECK(patterns.size() == 13);
  CHECK(cases.size() == kNumEndCases);
}

TEST_CASE("duality exchanges X and Y") {
  std::mt19937_64 rng(22);
  for (const auto& name : surface_names()) {
    for (int k = 0; k < 5; ++k) {
      CoordVector c = random_coords(named_surface(name), rng);
      for (int v = 0; v < c.surface.num_vertices(); ++v) {
        auto a = peripheral_monomials(c, v), b = peripheral_monomials(dualize(c), v);
        CHECK(b.X == a.Y);
        CHECK(b.Y == a.X);
      }
    }
  }
  // self-dual monomials leave only cusps and saddle-type minimal ends
  for (Rational x : {Rational(1, 3), Rational(1), Rational(5, 2)}) {
    EndType e = classify_end({0, x, x});
    CHECK((e.which == EndCase::Cusp || e.which == EndCase::MinimalAttractingEtaSaddle ||
           e.which == EndCase::MinimalRepellingEtaSaddle));
  }
}

TEST_CASE("Teichmuller and finite-area presets") {
  CHECK(is_teichmuller(preset("s11", "teichmuller")));
  CHECK(is_teichmuller(preset("s03", "teichmuller")));
  CHECK(is_finite_area(preset("s11", "teichmuller")));
  CHECK(is_finite_area(preset("s11", "finite-area")));
  CHECK_FALSE(is_teichmuller(preset("s11", "finite-area")));
  CHECK_FALSE(is_finite_area(preset("s11", "generic")));
}

TEST_CASE("gluability") {
  CoordVector g = preset("s12", "gluable");
  CHECK(gluability_check(g, 0, 1));
  CHECK_FALSE(gluability_check(preset("s12", "ones"), 0, 1));
  CHECK_FALSE(gluability_check(preset("s12", "generic"), 0, 1));
  auto a = peripheral_monomials(g, 0), b = peripheral_monomials(g, 1);
  CHECK(a.X == b.X);
  CHECK(a.Y == b.Y);
  CHECK(a.X > 1);
  CHECK(a.Y > 1);
}

}
