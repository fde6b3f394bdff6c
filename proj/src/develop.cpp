#include "fgc/develop.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <map>

#include "fgc/error.hpp"

namespace fgc {

namespace {

using V3 = std::array<Rational, 3>;

// Scales a point so z = 1.
Point affine(const Point& p) {
  if (sign(p.v[2]) <= 0) throw Error(ErrorCode::PatchOverflow, "vertex left the affine patch z > 0");
  return Point{{p.v[0] / p.v[2], p.v[1] / p.v[2], 1}};
}

// Primitive integer representative.
Line primitive(const Line& l) {
  mpz_class den = 1, g = 0;
  for (const auto& q : l.v) den = lcm(den, q.get_den());
  V3 w;
  for (int i = 0; i < 3; ++i) {
    w[i] = l.v[i] * den;
    g = gcd(g, w[i].get_num());
  }
  if (g != 0)
    for (auto& q : w) q /= g;
  return Line{w};
}

size_t flag_bits(const Flag& f) {
  size_t b = 0;
  for (const auto& q : f.point.v) b = std::max(b, bit_size(q));
  for (const auto& q : f.line.v) b = std::max(b, bit_size(q));
  return b;
}

int orient(const Point& a, const Point& b, const Point& c) { return sign(det3(a, b, c)); }

// All of pts lie on the closed side of line ab opposite to (or on) the
// side given by want (+1 left, -1 right).
bool all_on_side(const Point& a, const Point& b, const std::vector<Point>& pts, int want) {
  for (const auto& p : pts) {
    int o = orient(a, b, p);
    if (o != 0 && o != want) return false;
  }
  return true;
}

}  // namespace

Tessellation develop(const CoordVector& c, int depth, const DevelopOptions& opt) {
  if (depth < 0) throw Error(ErrorCode::InvalidArgument, "depth must be non-negative");
  if (depth > opt.max_depth)
    throw Error(ErrorCode::DepthLimitExceeded, "depth " + std::to_string(depth) + " exceeds the cap of " +
                                                   std::to_string(opt.max_depth));
  const Triangulation& T = c.surface;
  Tessellation out;
  out.depth = depth;
  Tile seed;
  seed.tri = 0;
  auto base = reconstruct_triangle(c.t(0));
  for (int i = 0; i < 3; ++i) seed.flags[i] = Flag{base[i].point, primitive(base[i].line)};
  out.tiles.push_back(seed);

  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    if (out.tiles[i].depth >= depth) continue;
    for (int s = 0; s < 3; ++s) {
      if (out.tiles[i].neighbor[s] >= 0) continue;
      const Tile& cur = out.tiles[i];
      int h = slot(cur.tri, s);
      int k = T.partner(h);
      int t2 = slot_tri(k), s2 = slot_side(k);
      const Flag& tail = cur.flags[(s + 1) % 3];
      const Flag& opp = cur.flags[(s + 2) % 3];
      const Flag& head = cur.flags[s];
      Flag f = extend_across_edge(tail, head, opp, c.e(k), c.e(h), c.t(t2));
      // pick the representative on the tail's side of the cone over the tile
      Rational a = det3(f.point, opp.point, head.point) / det3(tail.point, opp.point, head.point);
      if (sign(a) < 0)
        for (auto& q : f.point.v) q = -q;
      f.point = affine(f.point);
      f.line = primitive(f.line);
      if (flag_bits(f) > opt.max_bits)
        throw Error(ErrorCode::DepthLimitExceeded,
                    "coordinates exceed " + std::to_string(opt.max_bits) + " bits at depth " +
                        std::to_string(cur.depth + 1));
      Tile nt;
      nt.tri = t2;
      nt.depth = cur.depth + 1;
      nt.parent = i;
      nt.flags[s2] = tail;
      nt.flags[(s2 + 1) % 3] = head;
      nt.flags[(s2 + 2) % 3] = f;
      nt.neighbor[s2] = i;
      int id = static_cast<int>(out.tiles.size());
      out.tiles.push_back(std::move(nt));
      out.tiles[i].neighbor[s] = id;
      queue.push_back(id);
    }
  }
  return out;
}

bool ratio_fidelity(const Tessellation& t, const CoordVector& c) {
  const Triangulation& T = c.surface;
  for (const auto& tile : t.tiles) {
    if (triple_ratio(tile.flags[0], tile.flags[1], tile.flags[2]) != c.t(tile.tri)) return false;
    for (int s = 0; s < 3; ++s) {
      int j = tile.neighbor[s];
      if (j < 0) continue;
      const Tile& nb = t.tiles[j];
      int k = T.partner(slot(tile.tri, s));
      if (slot_tri(k) != nb.tri) return false;
      int s2 = slot_side(k);
      Rational e = quadruple_ratio(tile.flags[s], nb.flags[(s2 + 2) % 3], tile.flags[(s + 1) % 3],
                                   tile.flags[(s + 2) % 3]);
      if (e != c.e(slot(tile.tri, s))) return false;
    }
  }
  return true;
}

bool convexity_check(const Tessellation& t) {
  std::vector<std::array<Point, 3>> tri;
  for (const auto& tile : t.tiles) {
    std::array<Point, 3> p;
    for (int i = 0; i < 3; ++i) p[i] = affine(tile.flags[i].point);
    tri.push_back(p);
  }
  // every tile is anticlockwise and nondegenerate
  for (const auto& p : tri)
    if (orient(p[0], p[1], p[2]) <= 0) return false;
  // pairwise: some edge of one tile separates the other
  for (size_t a = 0; a < tri.size(); ++a) {
    for (size_t b = a + 1; b < tri.size(); ++b) {
      bool sep = false;
      for (int r = 0; r < 2 && !sep; ++r) {
        const auto& P = r ? tri[b] : tri[a];
        const auto& Q = r ? tri[a] : tri[b];
        std::vector<Point> q(Q.begin(), Q.end());
        for (int s = 0; s < 3 && !sep; ++s) sep = all_on_side(P[s], P[(s + 1) % 3], q, -1);
      }
      if (!sep) return false;
    }
  }
  // frontier edges support the union
  std::vector<Point> all;
  for (const auto& p : tri) all.insert(all.end(), p.begin(), p.end());
  for (size_t a = 0; a < tri.size(); ++a) {
    for (int s = 0; s < 3; ++s) {
      if (t.tiles[a].neighbor[s] >= 0) continue;
      if (!all_on_side(tri[a][s], tri[a][(s + 1) % 3], all, 1)) return false;
    }
  }
  return true;
}

std::vector<Point> tile_vertices(const Tessellation& t) {
  std::map<std::pair<Rational, Rational>, Point> seen;
  std::vector<Point> out;
  for (const auto& tile : t.tiles) {
    for (const auto& f : tile.flags) {
      Point p = affine(f.point);
      auto key = std::make_pair(p.v[0], p.v[1]);
      if (seen.emplace(key, p).second) out.push_back(p);
    }
  }
  return out;
}

double conic_residual_points(const std::vector<Point>& pts) {
  if (pts.size() < 6)
    throw Error(ErrorCode::TooFewVertices, "a conic fit needs at least 6 distinct vertices, got " +
                                                std::to_string(pts.size()));
  Eigen::MatrixXd A(pts.size(), 6);
  for (size_t i = 0; i < pts.size(); ++i) {
    double x = pts[i].v[0].get_d(), y = pts[i].v[1].get_d(), z = pts[i].v[2].get_d();
    double n = std::sqrt(x * x + y * y + z * z);
    x /= n;
    y /= n;
    z /= n;
    A.row(i) << x * x, x * y, y * y, x * z, y * z, z * z;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
  const auto& s = svd.singularValues();
  if (s(0) == 0) return 0;
  return s(s.size() - 1) / s(0);
}

double conic_residual(const Tessellation& t) { return conic_residual_points(tile_vertices(t)); }

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

}  // namespace

SvgResult emit_svg(const Tessellation& t, const SvgOptions& opt_in) {
  SvgResult res;
  if (t.tiles.empty()) throw Error(ErrorCode::InvalidArgument, "empty tessellation");
  SvgOptions opt = opt_in;
  if (!(opt.width > 0) || !(opt.height > 0)) {
    res.warnings.push_back("viewport " + fmt(opt.width) + "x" + fmt(opt.height) +
                           " is empty; using 800x800");
    opt.width = 800;
    opt.height = 800;
  }
  std::vector<std::array<std::array<double, 2>, 3>> polys;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& tile : t.tiles) {
    std::array<std::array<double, 2>, 3> p;
    for (int i = 0; i < 3; ++i) {
      Point a = affine(tile.flags[i].point);
      p[i] = {a.v[0].get_d(), a.v[1].get_d()};
      xmin = std::min(xmin, p[i][0]);
      xmax = std::max(xmax, p[i][0]);
      ymin = std::min(ymin, p[i][1]);
      ymax = std::max(ymax, p[i][1]);
    }
    polys.push_back(p);
  }
  double margin = 0.05;
  double span = std::max(xmax - xmin, ymax - ymin);
  if (span <= 0) span = 1;
  double scale = (1 - 2 * margin) * std::min(opt.width, opt.height) / span;
  double cx = (xmin + xmax) / 2, cy = (ymin + ymax) / 2;
  auto X = [&](double x) { return opt.width / 2 + (x - cx) * scale; };
  auto Y = [&](double y) { return opt.height / 2 - (y - cy) * scale; };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(opt.width) +
       "\" height=\"" + fmt(opt.height) + "\" viewBox=\"0 0 " + fmt(opt.width) + " " + fmt(opt.height) +
       "\">\n";
  if (opt.flag_lines) {
    s += "<g fill=\"none\" stroke=\"#b5651d\" stroke-dasharray=\"4 3\" stroke-width=\"" +
         fmt(opt.stroke_width * 0.6) + "\">\n";
    int skipped = 0;
    for (const auto& tile : t.tiles) {
      std::array<Point, 3> q;
      bool ok = true;
      for (int i = 0; i < 3; ++i) {
        q[i] = meet(tile.flags[(i + 1) % 3].line, tile.flags[(i + 2) % 3].line);
        if (sign(q[i].v[2]) == 0) ok = false;
      }
      if (!ok) {
        ++skipped;
        continue;
      }
      s += "<polygon points=\"";
      for (int i = 0; i < 3; ++i) {
        double x = Rational(q[i].v[0] / q[i].v[2]).get_d(), y = Rational(q[i].v[1] / q[i].v[2]).get_d();
        if (i) s += ' ';
        s += fmt(X(x)) + "," + fmt(Y(y));
      }
      s += "\"/>\n";
    }
    s += "</g>\n";
    if (skipped) res.warnings.push_back(std::to_string(skipped) + " circumscribed triangles meet the line at infinity and were skipped");
  }
  s += "<g fill=\"" + opt.fill + "\" stroke=\"" + opt.stroke + "\" stroke-width=\"" + fmt(opt.stroke_width) +
       "\" stroke-linejoin=\"round\">\n";
  for (const auto& p : polys) {
    s += "<polygon points=\"";
    for (int i = 0; i < 3; ++i) {
      if (i) s += ' ';
      s += fmt(X(p[i][0])) + "," + fmt(Y(p[i][1]));
    }
    s += "\"/>\n";
  }
  s += "</g>\n</svg>\n";
  res.svg = std::move(s);
  return res;
}

}  // namespace fgc
