#include <doctest.h>

#include <set>

#include "fgc/error.hpp"
#include "fgc/presets.hpp"
#include "fgc/surface.hpp"

using namespace fgc;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

std::vector<std::pair<int, int>> pairs_of(const Triangulation& T) {
  std::vector<std::pair<int, int>> p;
  for (int h = 0; h < T.num_slots(); ++h)
    if (h < T.partner(h)) p.emplace_back(h, T.partner(h));
  return p;
}

}  // namespace

TEST_SUITE("surface") {

TEST_CASE("bundled surfaces have -2 chi triangles") {
  struct Row {
    Triangulation T;
    int genus, punctures, triangles;
  };
  for (const Row& r : {Row{surface_s11(), 1, 1, 2}, Row{surface_s03(), 0, 3, 2}, Row{surface_s12(), 1, 2, 4}}) {
    CHECK(r.T.genus() == r.genus);
    CHECK(r.T.punctures() == r.punctures);
    CHECK(r.T.num_vertices() == r.punctures);
    CHECK(r.T.num_triangles() == r.triangles);
    CHECK(r.T.num_triangles() == -2 * r.T.euler_characteristic());
    CHECK(r.T.num_edges() == -3 * r.T.euler_characteristic());
    int deg = 0;
    for (int v = 0; v < r.T.num_vertices(); ++v) deg += r.T.degree(v);
    CHECK(deg == r.T.num_slots());
  }
}

TEST_CASE("build rejects bad gluings") {
  Triangulation T = surface_s11();
  auto p = pairs_of(T);
  CHECK(code_of([&] { Triangulation::build(2, 1, 2, p); }) == ErrorCode::EulerMismatch);
  CHECK(code_of([&] { Triangulation::build(0, 3, 2, p); }) == ErrorCode::VertexCountMismatch);
  auto missing = p;
  missing.pop_back();
  CHECK(code_of([&] { Triangulation::build(1, 1, 2, missing); }) == ErrorCode::UnpairedSide);
  auto twice = p;
  twice.push_back(p.front());
  CHECK(code_of([&] { Triangulation::build(1, 1, 2, twice); }) == ErrorCode::Validation);
  CHECK(code_of([&] { surface_from_json("{\"genus\": 1}"); }) != ErrorCode::Ok);
}

TEST_CASE("json roundtrip") {
  for (const auto& name : surface_names()) {
    Triangulation T = named_surface(name);
    Triangulation U = surface_from_json(surface_to_json(T));
    CHECK(U == T);
    CHECK(surface_to_json(U) == surface_to_json(T));
  }
}

TEST_CASE("vertex links cover every corner once") {
  for (const auto& name : surface_names()) {
    Triangulation T = named_surface(name);
    std::multiset<int> seen;
    for (int v = 0; v < T.num_vertices(); ++v) {
      auto link = T.vertex_link(v);
      CHECK(static_cast<int>(link.size()) == T.degree(v));
      for (const auto& l : link) {
        CHECK(T.tail(l.out_edge) == v);
        seen.insert(l.out_edge);
      }
    }
    CHECK(static_cast<int>(seen.size()) == T.num_slots());
    CHECK(std::set<int>(seen.begin(), seen.end()).size() == seen.size());
  }
}

TEST_CASE("distinct faces") {
  CHECK(validate_distinct_faces(surface_s11()));
  CHECK(validate_distinct_faces(surface_s12()));
  CHECK_FALSE(validate_distinct_faces(surface_s03()));
  auto [U, flips] = regularize(surface_s03());
  CHECK(validate_distinct_faces(U));
  CHECK_FALSE(flips.empty());
  CHECK(U.num_vertices() == 3);
}

TEST_CASE("flip then inverse flip restores the triangulation and labels") {
  for (const auto& name : surface_names()) {
    Triangulation T = named_surface(name);
    for (int h = 0; h < T.num_slots(); ++h) {
      if (T.self_glued(h)) continue;
      FlipResult f = flip_combinatorial(T, h);
      CHECK(f.surface.num_vertices() == T.num_vertices());
      CHECK(f.surface.partner(f.new_diag) == f.new_diag_rev);
      CHECK(f.surface.tail(f.new_diag) == T.tail(f.s12));
      CHECK(f.surface.head(f.new_diag) == T.tail(f.s30));
      FlipResult g = flip_combinatorial(f.surface, h, true);
      CHECK(g.surface == T);
      for (int x = 0; x < T.num_slots(); ++x) CHECK(g.surface.corner_vertex(x) == T.corner_vertex(x));
      // either orientation names the same flip
      FlipResult f2 = flip_combinatorial(T, T.partner(h));
      CHECK(f2.surface == f.surface);
    }
  }
}

TEST_CASE("flipping twice forward is the half-turn of the square") {
  Triangulation T = surface_s12();
  for (int h = 0; h < T.num_slots(); ++h) {
    if (h > T.partner(h)) continue;
    FlipResult f = flip_combinatorial(T, h);
    FlipResult g = flip_combinatorial(f.surface, f.new_diag);
    // composed label map: boundary sides keep their geometric edge
    for (int x : {f.s01, f.s12, f.s23, f.s30}) {
      int y = g.slot_map[f.slot_map[x]];
      REQUIRE(y >= 0);
      CHECK(g.surface.tail(y) == T.tail(x));
      CHECK(g.surface.head(y) == T.head(x));
    }
    CHECK(g.surface.tail(g.new_diag) == T.tail(f.old_diag_rev));
    CHECK(g.surface.head(g.new_diag) == T.tail(f.old_diag));
  }
}

TEST_CASE("self-glued edges cannot be flipped") {
  Triangulation T = surface_s03();
  int bad = -1;
  for (int h = 0; h < T.num_slots(); ++h)
    if (T.self_glued(h)) bad = h;
  REQUIRE(bad >= 0);
  CHECK(code_of([&] { flip_combinatorial(T, bad); }) == ErrorCode::SelfGluedEdge);
}

TEST_CASE("peripheral paths") {
  for (const auto& name : surface_names()) {
    Triangulation T = named_surface(name);
    for (int v = 0; v < T.num_vertices(); ++v) {
      DualPath p = peripheral_path(T, v, 1);
      CHECK(p.closed);
      CHECK(static_cast<int>(p.steps.size()) == T.degree(v));
      for (const auto& s : p.steps) CHECK(s.eps == 1);
      CHECK_NOTHROW(validate_path(T, p));
      DualPath q = peripheral_path(T, v, -1);
      for (const auto& s : q.steps) CHECK(s.eps == -1);
      CHECK(path_crossings(reverse_path(T, q)) == path_crossings(p));
    }
  }
}

TEST_CASE("path text roundtrip and errors") {
  Triangulation T = surface_s11();
  for (const auto& c : s11_curves()) {
    DualPath p = path_from_crossings(T, c.crossings);
    std::string text = format_path(T, p);
    DualPath q = parse_path(T, text);
    CHECK(path_crossings(q) == path_crossings(p));
    CHECK(format_path(T, q) == text);
  }
  CHECK(code_of([&] { parse_path(T, "T+ t0 X 0.0->0.1"); }) == ErrorCode::Parse);
  CHECK(code_of([&] { parse_path(T, "T+ t0 E"); }) == ErrorCode::Parse);
  CHECK(code_of([&] { parse_path(T, "T+ t0 E 0.0->0.1 T+ t0 E 0.0->0.1"); }) == ErrorCode::InconsistentPath);
}

TEST_CASE("cyclic reduction") {
  Triangulation T = surface_s11();
  auto c = s11_curves()[0].crossings;
  std::vector<int> back = c;
  back.push_back(T.partner(c.back()));
  back.push_back(c.back());
  CHECK(reduce_cyclic(T, back) == reduce_cyclic(T, c));
  std::vector<int> trivial{c[0], T.partner(c[0])};
  CHECK(reduce_cyclic(T, trivial).empty());
}

}
