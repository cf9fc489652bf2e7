#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "surfmap/map.hpp"

namespace surfmap {

/// Mutable workspace over a CombinatorialMap.  Darts may temporarily float
/// (alive but absent from every rotation); finish() compacts ids, optionally
/// smooths unmarked bivalent vertices, and rebuilds an immutable map.
///
/// Invariants maintained across every primitive:
///   - alpha stays a fixed-point-free involution on alive darts;
///   - placed darts form disjoint sigma cycles;
///   - labels agree across each edge;
///   - orientation entries always point at alive darts of their component.
class MapEditor {
 public:
  explicit MapEditor(const CombinatorialMap& m);

  std::size_t table_size() const { return alpha_.size(); }
  bool alive(Dart d) const { return alive_[d] != 0; }
  bool floating(Dart d) const { return alive(d) && next_[d] == kNoDart; }
  Dart alpha(Dart d) const { return alpha_[d]; }
  Dart sigma(Dart d) const { return next_[d]; }
  Dart sigma_inv(Dart d) const { return prev_[d]; }
  const EdgeLabel& label(Dart d) const { return label_[d]; }
  bool marked(Dart d) const { return marked_[d] != 0; }
  int valence(Dart d) const;
  std::vector<Dart> vertex_darts(Dart d) const;
  Dart orientation_dart(int component) const;

  /// Smallest component id strictly greater than every id in the map.
  int fresh_component_id();

  /// Two fresh floating darts paired by alpha.
  std::pair<Dart, Dart> new_edge(const EdgeLabel& label);

  /// Floating dart becomes its own one-dart vertex.
  void make_vertex(Dart d);

  /// Insert floating dart d counterclockwise-after `at` in its rotation.
  void splice_after(Dart at, Dart d);

  /// Remove d from its rotation; d floats and keeps its alpha partner.
  void detach(Dart d);

  /// Subdivide the edge {d, alpha(d)} with a fresh bivalent vertex.  d keeps
  /// its id and base; the returned dart is the new vertex germ paired with d,
  /// so repeated splits of d stack new vertices ever closer to d's base.
  Dart split_edge(Dart d);

  /// Remove the bivalent vertex holding d, fusing its two edges.  Throws if
  /// the valence is not 2, a dart is marked, the labels differ, or the vertex
  /// is the last one on a circle.
  void smooth_vertex(Dart d);

  /// Delete the edge {d, alpha(d)}; detaches both darts first.
  void delete_edge(Dart d);

  /// Delete every edge of the named components.  Crossing remnants become
  /// bivalent vertices (smoothed at finish); a surviving valence-1 vertex is
  /// an internal error.
  void delete_components(const std::set<int>& comps);

  /// Split the host edge next to host_germ's base vertex and pass a strand
  /// through the new crossing.  in_dart is the arriving germ, out_dart the
  /// departing germ (both floating, based at the new vertex afterward).
  /// from_right means the strand crosses from the right side of host_germ to
  /// its left, where sides are taken looking along host_germ from its base.
  /// Returns the new vertex's host germ pointing back toward the old base.
  Dart pierce_before_vertex(Dart host_germ, Dart in_dart, Dart out_dart, bool from_right);

  /// Split the host edge next to host_germ's base vertex and attach the
  /// floating dart arc_end there, on the left or right side of host_germ.
  /// Returns the new vertex's host germ pointing back toward the old base.
  Dart attach_before_vertex(Dart host_germ, Dart arc_end, bool left_side);

  void set_mark(Dart d, bool on);
  void set_orientation(int component, Dart d);
  void clear_orientation(int component);

  struct Finished {
    CombinatorialMap map;
    std::vector<Dart> remap;  // old dart id -> new id, kNoDart if deleted
  };

  /// Compact into a fresh map.  auto_smooth removes unmarked bivalent
  /// vertices first.  Throws if a floating dart remains or smoothing would
  /// isolate a circle.
  Finished finish(bool auto_smooth = true);

 private:
  void kill(Dart d);

  std::vector<Dart> alpha_, next_, prev_;
  std::vector<EdgeLabel> label_;
  std::vector<std::uint8_t> marked_, alive_;
  std::map<int, Dart> orientation_;
  int fresh_component_ = 0;
};

/// One transverse crossing of a planned strand, in strand order.  offset in
/// (0,1) measures where on the host edge the crossing sits, from host_germ's
/// base vertex; it only serves to order crossings sharing an edge.
struct StrandStep {
  Dart host_germ = kNoDart;
  double offset = 0.5;
  bool from_right = false;
};

/// Arc endpoint attachment, placed like a step but ending the strand.
struct StrandEnd {
  Dart host_germ = kNoDart;
  double offset = 0.5;
  bool left_side = false;
};

/// A new strand to draw: either a closed curve (front/back unset, steps
/// nonempty) or an arc between two attachments.  Host germs refer to dart ids
/// current in the editor at insertion time.
struct StrandPlan {
  EdgeLabel label;
  std::vector<StrandStep> steps;
  std::optional<StrandEnd> front;
  std::optional<StrandEnd> back;
};

/// Draw the planned strand; registers an orientation dart pointing along
/// strand order and returns it.  Crossings sharing a host edge are placed by
/// offset.  Throws on a closed plan with no steps (a free circle cannot be
/// embedded in the dart structure).
Dart insert_strand(MapEditor& ed, const StrandPlan& plan);

}  // namespace surfmap
