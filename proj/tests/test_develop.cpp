#include <doctest.h>

#include <algorithm>
#include <functional>
#include <optional>

#include "fgc/develop.hpp"
#include "fgc/error.hpp"
#include "fgc/presets.hpp"

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

std::array<Rational, 6> veronese(const Point& p) {
  const auto& v = p.v;
  return {v[0] * v[0], v[0] * v[1], v[1] * v[1], v[0] * v[2], v[1] * v[2], v[2] * v[2]};
}

// Exact conic through the first five points (coefficients in Veronese
// order), or nullopt if they do not determine one.
std::optional<std::array<Rational, 6>> conic_through(const std::vector<Point>& pts) {
  std::vector<std::array<Rational, 6>> m;
  for (int i = 0; i < 5; ++i) m.push_back(veronese(pts[i]));
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < 6 && row < 5; ++col) {
    int p = -1;
    for (int r = row; r < 5; ++r)
      if (m[r][col] != 0) p = r;
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    for (int r = 0; r < 5; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[row][col];
      for (int c = 0; c < 6; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (row < 5) return std::nullopt;
  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::array<Rational, 6> q{};
  q[free_col] = 1;
  for (int r = 0; r < 5; ++r) q[pivot_col[r]] = -m[r][free_col] / m[r][pivot_col[r]];
  return q;
}

Rational conic_value(const std::array<Rational, 6>& q, const Point& p) {
  auto v = veronese(p);
  Rational s = 0;
  for (int i = 0; i < 6; ++i) s += q[i] * v[i];
  return s;
}

}  // namespace

TEST_SUITE("develop") {

TEST_CASE("tile counts on the once-punctured torus") {
  CoordVector c = preset("s11", "generic");
  for (int d = 0; d <= 4; ++d) {
    Tessellation t = develop(c, d);
    CHECK(static_cast<int>(t.tiles.size()) == 1 + 3 * ((1 << d) - 1));
    for (const auto& tile : t.tiles) CHECK(tile.depth <= d);
  }
}

TEST_CASE("ratio fidelity on every bundled preset") {
  for (const auto& [s, p] : preset_names()) {
    CoordVector c = preset(s, p);
    Tessellation t = develop(c, 3);
    CHECK(ratio_fidelity(t, c));
    CHECK(convexity_check(t));
  }
  std::mt19937_64 rng(5);
  for (int k = 0; k < 5; ++k) {
    CoordVector c = random_coords(surface_s12(), rng);
    Tessellation t = develop(c, 3);
    CHECK(ratio_fidelity(t, c));
    CHECK(convexity_check(t));
  }
}

TEST_CASE("corrupted tessellations are caught") {
  CoordVector c = preset("s11", "generic");
  Tessellation t = develop(c, 2);
  CoordVector other = c;
  other.e(3) *= 2;
  CHECK_FALSE(ratio_fidelity(t, other));

  Tessellation moved = t;
  moved.tiles[4].flags[2].point.v[0] += Rational(1, 1000);
  CHECK_FALSE(ratio_fidelity(moved, c));

  Tessellation swapped = t;
  std::swap(swapped.tiles[2].flags[0], swapped.tiles[2].flags[1]);
  CHECK_FALSE(convexity_check(swapped));

  Tessellation overlap = t;
  overlap.tiles.push_back(t.tiles[0]);
  for (auto& n : overlap.tiles.back().neighbor) n = -1;
  CHECK_FALSE(convexity_check(overlap));
}

TEST_CASE("Teichmuller vertices lie on one conic exactly") {
  for (const char* s : {"s11", "s03"}) {
    CoordVector c = preset(s, "teichmuller");
    Tessellation t = develop(c, 3);
    auto pts = tile_vertices(t);
    REQUIRE(pts.size() >= 6);
    auto q = conic_through(pts);
    REQUIRE(q.has_value());
    for (const auto& p : pts) CHECK(conic_value(*q, p) == 0);
    CHECK(conic_residual(t) < 1e-10);
  }
}

TEST_CASE("off the Teichmuller locus the vertices leave the conic") {
  CoordVector c = preset("s11", "teichmuller");
  c.t(0) = 2;
  Tessellation t = develop(c, 3);
  auto pts = tile_vertices(t);
  auto q = conic_through(pts);
  bool off = !q.has_value();
  if (q)
    for (const auto& p : pts) off = off || conic_value(*q, p) != 0;
  CHECK(off);
  CHECK(conic_residual(t) > 1e-3);
}

TEST_CASE("conic residual needs six vertices") {
  CoordVector c = preset("s11", "teichmuller");
  CHECK(code_of([&] { conic_residual(develop(c, 0)); }) == ErrorCode::TooFewVertices);
  std::vector<Point> five;
  for (int i = 0; i < 5; ++i) five.push_back(Point{{i, i * i, 1}});
  CHECK(code_of([&] { conic_residual_points(five); }) == ErrorCode::TooFewVertices);
  five.push_back(Point{{7, 49, 1}});
  CHECK(conic_residual_points(five) < 1e-12);
  five.push_back(Point{{1, 5, 1}});
  CHECK(conic_residual_points(five) > 1e-3);
}

TEST_CASE("depth caps") {
  CoordVector c = preset("s11", "generic");
  CHECK(code_of([&] { develop(c, 7); }) == ErrorCode::DepthLimitExceeded);
  CHECK(code_of([&] { develop(c, 5, DevelopOptions{5, 16}); }) == ErrorCode::DepthLimitExceeded);
  CHECK(code_of([&] { develop(c, -1); }) == ErrorCode::InvalidArgument);
  CHECK(develop(c, 7, DevelopOptions{7, 1 << 20}).tiles.size() == 1 + 3 * 127);
}

TEST_CASE("svg output") {
  CoordVector c = preset("s11", "teichmuller");
  Tessellation t = develop(c, 3);
  SvgResult a = emit_svg(t);
  SvgResult b = emit_svg(develop(c, 3));
  CHECK(a.svg == b.svg);
  CHECK(a.warnings.empty());
  CHECK(a.svg.rfind("<?xml", 0) == 0);
  size_t polys = 0;
  for (size_t at = a.svg.find("<polygon"); at != std::string::npos; at = a.svg.find("<polygon", at + 1)) ++polys;
  CHECK(polys == t.tiles.size());

  SvgOptions opt;
  opt.flag_lines = true;
  SvgResult f = emit_svg(t, opt);
  CHECK(f.svg.size() > a.svg.size());

  opt.width = 0;
  SvgResult w = emit_svg(t, opt);
  CHECK_FALSE(w.warnings.empty());
  CHECK(w.svg.find("width=\"800.0000\"") != std::string::npos);
}

}
