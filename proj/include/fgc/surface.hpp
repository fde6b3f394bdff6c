#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fgc {

// A side slot 3*t + s is side s of triangle t, running from corner s to
// corner s+1 (mod 3). Corners are anticlockwise. Every oriented edge of
// the surface is exactly one side slot read in its triangle's
// orientation; its reverse is the glued partner slot.
inline int slot(int tri, int side) { return 3 * tri + side; }
inline int slot_tri(int h) { return h / 3; }
inline int slot_side(int h) { return h % 3; }
inline int next_side(int h) { return 3 * (h / 3) + (h % 3 + 1) % 3; }
inline int prev_side(int h) { return 3 * (h / 3) + (h % 3 + 2) % 3; }

struct LinkEntry {
  int out_edge;  // slot of the edge leaving the vertex
  int tri;       // triangle following it anticlockwise
};

class Triangulation {
 public:
  Triangulation() = default;

  // pairs: every side slot exactly once. Throws UnpairedSide,
  // EulerMismatch, VertexCountMismatch, Validation.
  static Triangulation build(int genus, int punctures, int triangles,
                             const std::vector<std::pair<int, int>>& pairs);

  int genus() const { return genus_; }
  int punctures() const { return punctures_; }
  int euler_characteristic() const { return 2 - 2 * genus_ - punctures_; }
  int num_triangles() const { return static_cast<int>(partner_.size() / 3); }
  int num_slots() const { return static_cast<int>(partner_.size()); }
  int num_edges() const { return num_slots() / 2; }
  int num_vertices() const { return num_vertices_; }

  int partner(int h) const { return partner_[h]; }
  // Vertex at corner c of triangle t, given as corner slot 3t+c.
  int corner_vertex(int corner) const { return corner_vertex_[corner]; }
  int tail(int h) const { return corner_vertex_[h]; }
  int head(int h) const { return corner_vertex_[next_side(h)]; }
  bool self_glued(int h) const { return slot_tri(partner_[h]) == slot_tri(h); }

  // Anticlockwise cyclic list around v.
  std::vector<LinkEntry> vertex_link(int v) const;
  int degree(int v) const;

  // Optional display labels for corners (e.g. paper-style vertex names).
  const std::vector<std::string>& corner_labels() const { return corner_labels_; }
  void set_corner_labels(std::vector<std::string> labels);
  std::string triangle_name(int t) const;
  std::string edge_name(int h) const;
  // Looks up "eAB" by corner labels; throws InvalidArgument if absent or
  // ambiguous.
  int edge_by_labels(const std::string& a, const std::string& b) const;
  int triangle_by_name(const std::string& name) const;

  // Renames vertex ids: vertex v becomes id_map[v]. id_map must be a
  // permutation.
  void rename_vertices(const std::vector<int>& id_map);

  bool operator==(const Triangulation& o) const {
    return genus_ == o.genus_ && punctures_ == o.punctures_ && partner_ == o.partner_;
  }

 private:
  void derive_vertices();

  int genus_ = 0;
  int punctures_ = 0;
  int num_vertices_ = 0;
  std::vector<int> partner_;
  std::vector<int> corner_vertex_;
  std::vector<std::string> corner_labels_;
};

bool validate_distinct_faces(const Triangulation& T);

// Relabeling produced by a flip. The flipped square has vertices
// V0..V3 anticlockwise, old diagonal 0->2, new diagonal 1->3.
// The new diagonal occupies the old diagonal's slots.
struct FlipResult {
  Triangulation surface;
  std::vector<int> slot_map;  // old slot -> new slot, -1 for the old diagonal
  int old_diag = -1;          // old slot 0->2 (in tri_b)
  int old_diag_rev = -1;      // old slot 2->0 (in tri_a)
  int new_diag = -1;          // new slot 1->3 (in new_tri_301)
  int new_diag_rev = -1;      // new slot 3->1 (in new_tri_123)
  int tri_a = -1, tri_b = -1;  // old (2,0,1) and (0,2,3)
  int new_tri_301 = -1, new_tri_123 = -1;
  // Old slots of the square's boundary, read coherently: 0->1, 1->2, 2->3, 3->0.
  int s01 = -1, s12 = -1, s23 = -1, s30 = -1;
};

// e: any slot of the edge to flip. The inverse flip undoes the forward
// flip of the same slot exactly; both orientations of e give the same result.
// Throws SelfGluedEdge.
FlipResult flip_combinatorial(const Triangulation& T, int e, bool inverse = false);

// Repeatedly flips the third edge of triangles with two sides glued
// together until assumption (I) holds. Returns flipped slots in order
// (each relative to the triangulation current at that step).
std::pair<Triangulation, std::vector<int>> regularize(const Triangulation& T);

// A step turns inside tri (eps = +1 exits through the side after the
// entry side, -1 through the one before) then crosses exit (a side slot
// of tri).
struct PathStep {
  int tri;
  int eps;
  int exit;
};

struct DualPath {
  std::vector<PathStep> steps;
  bool closed = true;
};

// Entry slot (a side of steps[i].tri) implied by the turn and exit.
int step_entry(const PathStep& s);
// Throws InconsistentPath.
void validate_path(const Triangulation& T, const DualPath& p);
DualPath path_from_crossings(const Triangulation& T, const std::vector<int>& crossings,
                             bool closed = true);
std::vector<int> path_crossings(const DualPath& p);
DualPath reverse_path(const Triangulation& T, const DualPath& p);
// Cyclic free reduction of a closed crossing sequence.
std::vector<int> reduce_cyclic(const Triangulation& T, std::vector<int> crossings);
// Concatenation of closed paths that start in the same triangle frame
// (first entry of b equals the last crossing's partner of a), reduced.
DualPath concat_closed(const Triangulation& T, const DualPath& a, const DualPath& b);
// Rotate a closed path to start at step k.
DualPath rotate_path(const DualPath& p, int k);

// Closed path circling v once, all turns eps (default +1).
DualPath peripheral_path(const Triangulation& T, int v, int eps = 1);

// Image of a closed path under a flip.
DualPath transport_path(const Triangulation& before, const FlipResult& f, const DualPath& p);

// Tokens: "T+ <tri>" / "T- <tri>" then "E <edge>", repeated. Triangles as
// "t3" or "3"; edges as "a.i->a.j" corner labels (see README) or the
// paper-style name when corner labels exist.
DualPath parse_path(const Triangulation& T, const std::string& text, bool closed = true);
std::string format_path(const Triangulation& T, const DualPath& p);

// Oriented-edge labels "t.i->t.j" (corners i, j of triangle t, adjacent).
std::string edge_label(int h);
int parse_edge_label(const Triangulation& T, const std::string& label);

// JSON surface file.
Triangulation surface_from_json(const std::string& text);
std::string surface_to_json(const Triangulation& T);

}  // namespace fgc
