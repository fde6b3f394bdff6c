#include "fgc/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "fgc/error.hpp"
#include "json_util.hpp"

namespace fgc {

namespace {

int find_root(std::vector<int>& p, int x) {
  while (p[x] != x) {
    p[x] = p[p[x]];
    x = p[x];
  }
  return x;
}

int parse_index(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), ::isdigit))
    throw Error(ErrorCode::Parse, "bad index '" + s + "' in " + what);
  return std::stoi(s);
}

// "t.s" side label.
int parse_side_label(const std::string& s, int triangles) {
  auto dot = s.find('.');
  if (dot == std::string::npos) throw Error(ErrorCode::Parse, "bad side label '" + s + "'");
  int t = parse_index(s.substr(0, dot), "side label '" + s + "'");
  int k = parse_index(s.substr(dot + 1), "side label '" + s + "'");
  if (t >= triangles || k > 2)
    throw Error(ErrorCode::Validation, "side label '" + s + "' out of range");
  return slot(t, k);
}

// -1 if absent, -2 if the labels name two different edges.
int lookup_labels(const Triangulation& T, const std::string& a, const std::string& b) {
  const auto& lab = T.corner_labels();
  int found = -1;
  for (int h = 0; h < T.num_slots(); ++h) {
    int hit = -1;
    if (lab[h] == a && lab[next_side(h)] == b) hit = h;
    else if (lab[h] == b && lab[next_side(h)] == a) hit = T.partner(h);
    if (hit < 0) continue;
    if (found >= 0 && found != hit) return -2;
    found = hit;
  }
  return found;
}

std::string side_label(int h) {
  return std::to_string(slot_tri(h)) + "." + std::to_string(slot_side(h));
}

}  // namespace

Triangulation Triangulation::build(int genus, int punctures, int triangles,
                                   const std::vector<std::pair<int, int>>& pairs) {
  if (genus < 0) throw Error(ErrorCode::Validation, "genus must be non-negative");
  if (punctures < 1) throw Error(ErrorCode::Validation, "need at least one puncture");
  if (triangles < 1) throw Error(ErrorCode::Validation, "need at least one triangle");
  Triangulation T;
  T.genus_ = genus;
  T.punctures_ = punctures;
  T.partner_.assign(3 * triangles, -1);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= 3 * triangles || b >= 3 * triangles)
      throw Error(ErrorCode::Validation, "gluing refers to a missing side");
    if (a == b) throw Error(ErrorCode::Validation, "side " + side_label(a) + " glued to itself");
    if (T.partner_[a] != -1 || T.partner_[b] != -1)
      throw Error(ErrorCode::Validation,
                  "side " + side_label(T.partner_[a] != -1 ? a : b) + " glued twice");
    T.partner_[a] = b;
    T.partner_[b] = a;
  }
  for (int h = 0; h < 3 * triangles; ++h)
    if (T.partner_[h] == -1) throw Error(ErrorCode::UnpairedSide, "side " + side_label(h) + " is unpaired");
  int expect = 2 * (2 * genus - 2 + punctures);
  if (triangles != expect)
    throw Error(ErrorCode::EulerMismatch,
                std::to_string(triangles) + " triangles, but a surface of genus " +
                    std::to_string(genus) + " with " + std::to_string(punctures) +
                    " punctures needs " + std::to_string(expect));
  T.derive_vertices();
  if (T.num_vertices_ != punctures)
    throw Error(ErrorCode::VertexCountMismatch, "gluing produces " + std::to_string(T.num_vertices_) +
                                                    " vertices, declared " + std::to_string(punctures));
  return T;
}

void Triangulation::derive_vertices() {
  int n = num_slots();
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  for (int h = 0; h < n; ++h) {
    int k = partner_[h];
    // tail of h is the head of its partner
    int a = find_root(uf, h), b = find_root(uf, next_side(k));
    if (a != b) uf[std::max(a, b)] = std::min(a, b);
  }
  corner_vertex_.assign(n, -1);
  std::map<int, int> id;
  for (int c = 0; c < n; ++c) {
    int r = find_root(uf, c);
    auto it = id.find(r);
    if (it == id.end()) it = id.emplace(r, static_cast<int>(id.size())).first;
    corner_vertex_[c] = it->second;
  }
  num_vertices_ = static_cast<int>(id.size());
}

void Triangulation::rename_vertices(const std::vector<int>& id_map) {
  std::vector<int> seen(num_vertices_, 0);
  if (static_cast<int>(id_map.size()) != num_vertices_)
    throw Error(ErrorCode::InvalidArgument, "vertex map has the wrong size");
  for (int v : id_map) {
    if (v < 0 || v >= num_vertices_ || seen[v]++)
      throw Error(ErrorCode::InvalidArgument, "vertex map is not a permutation");
  }
  for (int& v : corner_vertex_) v = id_map[v];
}

std::vector<LinkEntry> Triangulation::vertex_link(int v) const {
  if (v < 0 || v >= num_vertices_)
    throw Error(ErrorCode::InvalidArgument, "no vertex " + std::to_string(v));
  int start = static_cast<int>(std::find(corner_vertex_.begin(), corner_vertex_.end(), v) -
                               corner_vertex_.begin());
  std::vector<LinkEntry> out;
  int c = start;
  do {
    out.push_back({c, slot_tri(c)});
    c = partner_[prev_side(c)];
  } while (c != start);
  return out;
}

int Triangulation::degree(int v) const {
  return static_cast<int>(std::count(corner_vertex_.begin(), corner_vertex_.end(), v));
}

void Triangulation::set_corner_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != num_slots())
    throw Error(ErrorCode::Validation, "need one corner label per corner");
  corner_labels_ = std::move(labels);
}

std::string Triangulation::triangle_name(int t) const {
  if (corner_labels_.empty()) return "t" + std::to_string(t);
  return "t" + corner_labels_[3 * t] + corner_labels_[3 * t + 1] + corner_labels_[3 * t + 2];
}

std::string Triangulation::edge_name(int h) const {
  if (corner_labels_.empty()) return edge_label(h);
  return "e" + corner_labels_[h] + corner_labels_[next_side(h)];
}

int Triangulation::edge_by_labels(const std::string& a, const std::string& b) const {
  if (corner_labels_.empty())
    throw Error(ErrorCode::InvalidArgument, "surface has no corner labels");
  int found = lookup_labels(*this, a, b);
  if (found == -2) throw Error(ErrorCode::InvalidArgument, "edge name e" + a + b + " is ambiguous");
  if (found < 0) throw Error(ErrorCode::InvalidArgument, "no edge named e" + a + b);
  return found;
}

int Triangulation::triangle_by_name(const std::string& name) const {
  for (int t = 0; t < num_triangles(); ++t)
    if (!corner_labels_.empty() && triangle_name(t) == name) return t;
  std::string s = name;
  if (!s.empty() && s[0] == 't') s = s.substr(1);
  int t = parse_index(s, "triangle '" + name + "'");
  if (t >= num_triangles()) throw Error(ErrorCode::InvalidArgument, "no triangle " + name);
  return t;
}

bool validate_distinct_faces(const Triangulation& T) {
  for (int h = 0; h < T.num_slots(); ++h)
    if (T.self_glued(h)) return false;
  return true;
}

FlipResult flip_combinatorial(const Triangulation& T, int e, bool inverse) {
  if (e < 0 || e >= T.num_slots()) throw Error(ErrorCode::InvalidArgument, "no edge slot " + std::to_string(e));
  if (T.self_glued(e))
    throw Error(ErrorCode::SelfGluedEdge, "edge " + edge_label(e) + " has both sides in one triangle");
  FlipResult r;
  int h = e, k = T.partner(e);
  int tb = slot_tri(h), sb = slot_side(h);
  int ta = slot_tri(k), sa = slot_side(k);
  r.tri_a = ta;
  r.tri_b = tb;
  r.old_diag = h;
  r.old_diag_rev = k;
  r.s01 = slot(ta, (sa + 1) % 3);
  r.s12 = slot(ta, (sa + 2) % 3);
  r.s23 = slot(tb, (sb + 1) % 3);
  r.s30 = slot(tb, (sb + 2) % 3);
  int n = T.num_slots();
  r.slot_map.resize(n);
  std::iota(r.slot_map.begin(), r.slot_map.end(), 0);
  r.slot_map[h] = -1;
  r.slot_map[k] = -1;
  // The diagonal stays in the old diagonal's slots. The forward flip puts
  // (1,3,0) where the old diagonal's triangle was; the inverse puts (3,1,2)
  // there, so that flipping the same slot back restores every label.
  int t301 = inverse ? ta : tb, s301 = inverse ? sa : sb;
  int t123 = inverse ? tb : ta, s123 = inverse ? sb : sa;
  r.new_diag = slot(t301, s301);
  r.slot_map[r.s30] = slot(t301, (s301 + 1) % 3);
  r.slot_map[r.s01] = slot(t301, (s301 + 2) % 3);
  r.new_diag_rev = slot(t123, s123);
  r.slot_map[r.s12] = slot(t123, (s123 + 1) % 3);
  r.slot_map[r.s23] = slot(t123, (s123 + 2) % 3);
  r.new_tri_301 = t301;
  r.new_tri_123 = t123;

  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x) {
    int y = T.partner(x);
    if (x < y && r.slot_map[x] >= 0) pairs.emplace_back(r.slot_map[x], r.slot_map[y]);
  }
  pairs.emplace_back(r.new_diag, r.new_diag_rev);
  Triangulation out = Triangulation::build(T.genus(), T.punctures(), T.num_triangles(), pairs);

  // keep vertex ids: a mapped slot has the same tail as before
  std::vector<int> id_map(out.num_vertices(), -1);
  for (int x = 0; x < n; ++x)
    if (r.slot_map[x] >= 0) id_map[out.corner_vertex(r.slot_map[x])] = T.corner_vertex(x);
  out.rename_vertices(id_map);

  if (!T.corner_labels().empty()) {
    std::vector<std::string> lab = T.corner_labels();
    for (int x = 0; x < n; ++x)
      if (r.slot_map[x] >= 0) lab[r.slot_map[x]] = T.corner_labels()[x];
    out.set_corner_labels(std::move(lab));
  }
  r.surface = std::move(out);
  return r;
}

std::pair<Triangulation, std::vector<int>> regularize(const Triangulation& T) {
  Triangulation cur = T;
  std::vector<int> flips;
  for (int iter = 0; iter < 16 * T.num_slots() + 16; ++iter) {
    int bad = -1;
    for (int t = 0; t < cur.num_triangles() && bad < 0; ++t) {
      for (int s = 0; s < 3; ++s) {
        if (cur.self_glued(slot(t, s))) {
          int other = slot_side(cur.partner(slot(t, s)));
          bad = slot(t, 3 - s - other);
          break;
        }
      }
    }
    if (bad < 0) return {cur, flips};
    if (cur.self_glued(bad))
      throw Error(ErrorCode::SelfGluedEdge, "triangle " + std::to_string(slot_tri(bad)) +
                                                " is glued to itself on every side");
    flips.push_back(bad);
    cur = flip_combinatorial(cur, bad).surface;
  }
  throw Error(ErrorCode::Validation, "regularize did not terminate");
}

int step_entry(const PathStep& s) {
  return slot(s.tri, ((slot_side(s.exit) - s.eps) % 3 + 3) % 3);
}

void validate_path(const Triangulation& T, const DualPath& p) {
  int n = static_cast<int>(p.steps.size());
  for (int i = 0; i < n; ++i) {
    const PathStep& s = p.steps[i];
    if (s.tri < 0 || s.tri >= T.num_triangles())
      throw Error(ErrorCode::InconsistentPath, "step " + std::to_string(i) + ": no such triangle");
    if (s.eps != 1 && s.eps != -1)
      throw Error(ErrorCode::InconsistentPath, "step " + std::to_string(i) + ": turn sign must be +1 or -1");
    if (s.exit < 0 || s.exit >= T.num_slots() || slot_tri(s.exit) != s.tri)
      throw Error(ErrorCode::InconsistentPath,
                  "step " + std::to_string(i) + ": crossed edge is not a side of the triangle");
    if (i == 0 && !p.closed) continue;
    const PathStep& prev = p.steps[(i + n - 1) % n];
    if (T.partner(prev.exit) != step_entry(s))
      throw Error(ErrorCode::InconsistentPath,
                  "step " + std::to_string(i) + ": turn does not start at the edge just crossed");
  }
}

DualPath path_from_crossings(const Triangulation& T, const std::vector<int>& crossings,
                             bool closed) {
  DualPath p;
  p.closed = closed;
  int n = static_cast<int>(crossings.size());
  for (int i = 0; i < n; ++i) {
    int x = crossings[i];
    if (x < 0 || x >= T.num_slots())
      throw Error(ErrorCode::InconsistentPath, "crossing " + std::to_string(i) + " out of range");
    int eps = 1;
    if (closed || i > 0) {
      int entry = T.partner(crossings[(i + n - 1) % n]);
      if (slot_tri(entry) != slot_tri(x) || entry == x)
        throw Error(ErrorCode::InconsistentPath,
                    "crossings " + std::to_string((i + n - 1) % n) + " and " + std::to_string(i) +
                        " do not bound a turn");
      eps = next_side(entry) == x ? 1 : -1;
    }
    p.steps.push_back({slot_tri(x), eps, x});
  }
  return p;
}

std::vector<int> path_crossings(const DualPath& p) {
  std::vector<int> out;
  for (const auto& s : p.steps) out.push_back(s.exit);
  return out;
}

DualPath reverse_path(const Triangulation& T, const DualPath& p) {
  std::vector<int> c = path_crossings(p);
  std::vector<int> r;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r.push_back(T.partner(*it));
  if (!p.closed) {
    // the first turn of an open path is kept as given; reverse it with the last crossing
    DualPath out;
    out.closed = false;
    int n = static_cast<int>(p.steps.size());
    for (int i = n - 1; i >= 0; --i) {
      int exit = i > 0 ? T.partner(p.steps[i - 1].exit) : step_entry(p.steps[0]);
      out.steps.push_back({p.steps[i].tri, -p.steps[i].eps, exit});
    }
    return out;
  }
  return path_from_crossings(T, r, true);
}

std::vector<int> reduce_cyclic(const Triangulation& T, std::vector<int> c) {
  bool changed = true;
  while (changed && c.size() >= 2) {
    changed = false;
    for (size_t i = 0; i < c.size(); ++i) {
      size_t j = (i + 1) % c.size();
      if (T.partner(c[i]) == c[j]) {
        if (j > i) {
          c.erase(c.begin() + j);
          c.erase(c.begin() + i);
        } else {
          c.erase(c.begin() + i);
          c.erase(c.begin());
        }
        changed = true;
        break;
      }
    }
  }
  return c;
}

DualPath concat_closed(const Triangulation& T, const DualPath& a, const DualPath& b) {
  std::vector<int> c = path_crossings(a);
  std::vector<int> cb = path_crossings(b);
  c.insert(c.end(), cb.begin(), cb.end());
  return path_from_crossings(T, reduce_cyclic(T, c), true);
}

DualPath rotate_path(const DualPath& p, int k) {
  DualPath out = p;
  int n = static_cast<int>(p.steps.size());
  if (n == 0) return out;
  k = ((k % n) + n) % n;
  std::rotate(out.steps.begin(), out.steps.begin() + k, out.steps.end());
  return out;
}

DualPath peripheral_path(const Triangulation& T, int v, int eps) {
  auto link = T.vertex_link(v);
  std::vector<int> c;
  for (auto it = link.rbegin(); it != link.rend(); ++it) c.push_back(it->out_edge);
  DualPath p = path_from_crossings(T, c, true);
  return eps > 0 ? p : reverse_path(T, p);
}

DualPath transport_path(const Triangulation& before, const FlipResult& f, const DualPath& p) {
  if (!p.closed) throw Error(ErrorCode::InvalidArgument, "only closed paths can be transported");
  (void)before;
  std::vector<int> kept;
  for (const auto& s : p.steps) {
    if (s.exit == f.old_diag || s.exit == f.old_diag_rev) continue;
    kept.push_back(f.slot_map[s.exit]);
  }
  const Triangulation& T = f.surface;
  std::vector<int> c;
  int n = static_cast<int>(kept.size());
  for (int i = 0; i < n; ++i) {
    int prev = kept[(i + n - 1) % n];
    int from = slot_tri(T.partner(prev));
    int to = slot_tri(kept[i]);
    if (from != to) {
      if (from == f.new_tri_301 && to == f.new_tri_123) c.push_back(f.new_diag);
      else if (from == f.new_tri_123 && to == f.new_tri_301) c.push_back(f.new_diag_rev);
      else throw Error(ErrorCode::InconsistentPath, "path does not survive the flip");
    }
    c.push_back(kept[i]);
  }
  return path_from_crossings(T, reduce_cyclic(T, c), true);
}

std::string edge_label(int h) {
  int t = slot_tri(h), s = slot_side(h);
  return std::to_string(t) + "." + std::to_string(s) + "->" + std::to_string(t) + "." +
         std::to_string((s + 1) % 3);
}

int parse_edge_label(const Triangulation& T, const std::string& label) {
  auto arrow = label.find("->");
  if (arrow != std::string::npos) {
    std::string a = label.substr(0, arrow), b = label.substr(arrow + 2);
    auto da = a.find('.'), db = b.find('.');
    if (da == std::string::npos || db == std::string::npos)
      throw Error(ErrorCode::Parse, "bad edge label '" + label + "'");
    int ta = parse_index(a.substr(0, da), "edge label '" + label + "'");
    int ia = parse_index(a.substr(da + 1), "edge label '" + label + "'");
    int tb = parse_index(b.substr(0, db), "edge label '" + label + "'");
    int ib = parse_index(b.substr(db + 1), "edge label '" + label + "'");
    if (ta != tb || ta >= T.num_triangles() || ia > 2 || ib > 2 || ia == ib)
      throw Error(ErrorCode::Parse, "bad edge label '" + label + "'");
    if (ib == (ia + 1) % 3) return slot(ta, ia);
    return T.partner(slot(ta, ib));
  }
  if (label.size() >= 3 && label[0] == 'e' && !T.corner_labels().empty()) {
    // paper-style name: try every split of the label string
    std::string rest = label.substr(1);
    int found = -1;
    for (size_t cut = 1; cut < rest.size(); ++cut) {
      int h = lookup_labels(T, rest.substr(0, cut), rest.substr(cut));
      if (h == -2 || (h >= 0 && found >= 0 && h != found))
        throw Error(ErrorCode::Parse, "edge name '" + label + "' is ambiguous");
      if (h >= 0) found = h;
    }
    if (found >= 0) return found;
  }
  throw Error(ErrorCode::Parse, "unknown edge '" + label + "'");
}

DualPath parse_path(const Triangulation& T, const std::string& text, bool closed) {
  std::istringstream in(text);
  std::vector<std::string> tok;
  for (std::string w; in >> w;) tok.push_back(w);
  DualPath p;
  p.closed = closed;
  size_t i = 0;
  while (i < tok.size()) {
    if (tok[i] != "T+" && tok[i] != "T-")
      throw Error(ErrorCode::Parse, "expected T+ or T- at token " + std::to_string(i) + ", got '" + tok[i] + "'");
    if (i + 3 >= tok.size())
      throw Error(ErrorCode::Parse, "path ends inside a step");
    int eps = tok[i] == "T+" ? 1 : -1;
    int tri = T.triangle_by_name(tok[i + 1]);
    if (tok[i + 2] != "E")
      throw Error(ErrorCode::Parse, "expected E at token " + std::to_string(i + 2) + ", got '" + tok[i + 2] + "'");
    int h = parse_edge_label(T, tok[i + 3]);
    if (slot_tri(h) != tri) h = T.partner(h);
    if (slot_tri(h) != tri)
      throw Error(ErrorCode::InconsistentPath, "edge " + tok[i + 3] + " is not a side of " + tok[i + 1]);
    p.steps.push_back({tri, eps, h});
    i += 4;
  }
  validate_path(T, p);
  return p;
}

std::string format_path(const Triangulation& T, const DualPath& p) {
  (void)T;
  std::string out;
  for (const auto& s : p.steps) {
    if (!out.empty()) out += ' ';
    out += s.eps > 0 ? "T+ " : "T- ";
    out += std::to_string(s.tri) + " E " + edge_label(s.exit);
  }
  return out;
}

Triangulation surface_from_json(const std::string& text) {
  using detail::json;
  json j = detail::parse_json(text, "surface");
  return surface_from_json_value(j);
}

Triangulation surface_from_json_value(const nlohmann::json& j) {
  using detail::json;
  const std::string what = "surface";
  const json& g = detail::require(j, "genus", what);
  const json& n = detail::require(j, "punctures", what);
  const json& tris = detail::require(j, "triangles", what);
  const json& glue = detail::require(j, "gluings", what);
  if (!g.is_number_integer() || !n.is_number_integer())
    throw Error(ErrorCode::Parse, "surface: 'genus' and 'punctures' must be integers");
  if (!tris.is_array() || !glue.is_array())
    throw Error(ErrorCode::Parse, "surface: 'triangles' and 'gluings' must be arrays");
  int nt = static_cast<int>(tris.size());
  for (int t = 0; t < nt; ++t) {
    const json& tri = tris[t];
    if (!tri.is_array() || tri.size() != 3)
      throw Error(ErrorCode::Parse, "surface: triangle " + std::to_string(t) + " must list 3 sides");
    for (int s = 0; s < 3; ++s) {
      if (!tri[s].is_string() || parse_side_label(tri[s].get<std::string>(), nt) != slot(t, s))
        throw Error(ErrorCode::Parse, "surface: triangle " + std::to_string(t) + " side " +
                                          std::to_string(s) + " must be \"" + side_label(slot(t, s)) + "\"");
    }
  }
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < glue.size(); ++i) {
    const json& pr = glue[i];
    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
      throw Error(ErrorCode::Parse, "surface: gluing " + std::to_string(i) + " must be a pair of side labels");
    pairs.emplace_back(parse_side_label(pr[0].get<std::string>(), nt),
                       parse_side_label(pr[1].get<std::string>(), nt));
  }
  Triangulation T = Triangulation::build(g.get<int>(), n.get<int>(), nt, pairs);
  if (j.contains("corner_labels")) {
    const json& cl = j.at("corner_labels");
    if (!cl.is_array() || static_cast<int>(cl.size()) != nt)
      throw Error(ErrorCode::Parse, "surface: 'corner_labels' needs one entry per triangle");
    std::vector<std::string> lab;
    for (int t = 0; t < nt; ++t) {
      if (!cl[t].is_array() || cl[t].size() != 3)
        throw Error(ErrorCode::Parse, "surface: corner_labels[" + std::to_string(t) + "] needs 3 labels");
      for (int s = 0; s < 3; ++s) {
        if (!cl[t][s].is_string())
          throw Error(ErrorCode::Parse, "surface: corner labels must be strings");
        lab.push_back(cl[t][s].get<std::string>());
      }
    }
    T.set_corner_labels(std::move(lab));
  }
  return T;
}

nlohmann::json surface_to_json_value(const Triangulation& T) {
  using detail::json;
  json j;
  j["genus"] = T.genus();
  j["punctures"] = T.punctures();
  json tris = json::array();
  for (int t = 0; t < T.num_triangles(); ++t)
    tris.push_back({side_label(slot(t, 0)), side_label(slot(t, 1)), side_label(slot(t, 2))});
  j["triangles"] = tris;
  json glue = json::array();
  for (int h = 0; h < T.num_slots(); ++h)
    if (h < T.partner(h)) glue.push_back({side_label(h), side_label(T.partner(h))});
  j["gluings"] = glue;
  if (!T.corner_labels().empty()) {
    json cl = json::array();
    for (int t = 0; t < T.num_triangles(); ++t)
      cl.push_back({T.corner_labels()[3 * t], T.corner_labels()[3 * t + 1], T.corner_labels()[3 * t + 2]});
    j["corner_labels"] = cl;
  }
  return j;
}

std::string surface_to_json(const Triangulation& T) { return surface_to_json_value(T).dump(2) + "\n"; }

}  // namespace fgc
