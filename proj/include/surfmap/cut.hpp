#pragma once

#include <set>
#include <vector>

#include "surfmap/editor.hpp"
#include "surfmap/map.hpp"

namespace surfmap {

inline constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

/// How a piece boundary behaves at the corner between two consecutive scars.
/// Turns change component; flats continue along the same wall component.
enum class CornerKind {
  turn_transverse,  // two distinct wall components meet at a crossing
  turn_attachment,  // wall arc ends on a wall host
  turn_slit_end,    // boundary wraps around the free end of a slit
  flat_through,     // wall strand continues straight
  flat_marked       // wall strand continues through its base point
};

/// Corner between consecutive scars of a boundary walk.  The walk arrives
/// along in_germ's edge and leaves along out_germ's edge; interior lists the
/// germs caught inside the corner's sector, counterclockwise from out_germ.
struct BoundaryCorner {
  Dart in_germ = kNoDart;
  Dart out_germ = kNoDart;
  std::vector<Dart> interior;
  CornerKind kind = CornerKind::flat_through;
};

/// One boundary circle of a piece.  scars[i] is a wall dart traversed with
/// the piece interior on its left; corners[i] follows it at its far vertex.
struct BoundaryCircle {
  std::size_t piece = 0;
  std::vector<Dart> scars;
  std::vector<BoundaryCorner> corners;
  std::size_t turn_count() const;
};

struct RegionPiece {
  int genus = 0;
  std::vector<std::size_t> circles;
};

/// Complement structure of a wall subgraph, everything expressed in the
/// source map's dart ids.  Pieces are the components left after slicing every
/// wall edge in two; each piece is capped to a closed surface for its genus.
struct RegionAnalysis {
  std::vector<RegionPiece> pieces;
  std::vector<BoundaryCircle> circles;
  std::vector<std::size_t> left_piece;    // per source dart
  std::vector<std::size_t> right_piece;   // per source dart
  std::vector<std::size_t> scar_circle;   // circle walking this wall dart, or kNoIndex

  std::size_t piece_of_side(Dart d, bool left) const {
    return left ? left_piece[d] : right_piece[d];
  }
};

/// Wall mask covering every dart of the named components.
std::vector<std::uint8_t> wall_mask_of_components(const CombinatorialMap& m,
                                                  const std::set<int>& comps);

/// Slice the map along the masked edges (mask must pair darts with their
/// alpha partners) and describe the resulting pieces.  The mask may be any
/// edge subgraph: crossings, attachments and dangling span ends are all
/// legal walls.
RegionAnalysis regions(const CombinatorialMap& m, const std::vector<std::uint8_t>& wall_mask);
RegionAnalysis regions(const CombinatorialMap& m, const std::set<int>& wall_components);

/// A piece cut out of a map, renumbered to stand alone.  Scar edges keep the
/// wall component's label; the map is closed up by the cap faces, so genus
/// refers to the capped surface.
struct CutPiece {
  CombinatorialMap map;
  int genus = 0;
  std::size_t boundary_count = 0;
  std::vector<Dart> provenance;         // piece dart -> source dart
  std::vector<std::uint8_t> scar_side;  // 0 interior, 1 left copy, 2 right copy
};

/// Cut along pairwise disjoint closed components.  Other components crossing
/// the walls are severed into arcs attached to the scars.  Throws
/// std::invalid_argument when a named component is missing, open, or crosses
/// another named component.
std::vector<CutPiece> cut_along(const CombinatorialMap& m, const std::set<int>& components);

/// Plan a closed strand running parallel to a boundary circle, pushed into
/// its piece: it crosses exactly the interior germs of the circle's corners.
StrandPlan plan_parallel_circle(const RegionAnalysis& analysis, std::size_t circle,
                                const EdgeLabel& label);

/// Plan a closed strand running parallel to a closed component, on its right
/// or left.  The copy crosses whatever the component crosses and also every
/// arc attached to it on the chosen side.
StrandPlan plan_parallel_component(const CombinatorialMap& m, int component, bool right_side,
                                   const EdgeLabel& label);

}  // namespace surfmap
