#pragma once

#include <set>

#include "surfmap/map.hpp"

namespace handlebody {

using surfmap::CombinatorialMap;

/// Isotope the moving components until no disc bounded by one moving strand
/// segment and a path through the fixed components remains, sweeping one
/// innermost disc at a time (smallest dart id first).  Crossings between two
/// fixed components are never touched; crossings with components in neither
/// set ride along unchanged in total.
///
/// Requires cfg valid, the two sets disjoint, every component in either set
/// free of self-crossings, and the moving components pairwise disjoint;
/// fixed components may cross each other.  Two normalizations make equal
/// configurations land on equal positions: corner passages at fixed-fixed
/// crossings settle on the left-hand side of the smaller component id (keyed
/// to component orientation darts), and equal-cost trades of crossings
/// between two fixed components settle on the smaller component ids.
///
/// A sweep that would leave some component with no contacts at all is
/// refused with std::invalid_argument: a free circle cannot be embedded in
/// the connected dart structure.  Curves essential on the surface never hit
/// this against a filling fixed family.
CombinatorialMap minimal_position(const CombinatorialMap& cfg, const std::set<int>& moving,
                                  const std::set<int>& fixed);

/// True when a sweepable disc between the families remains, i.e. the moving
/// components are not yet in minimal position with respect to the fixed ones.
/// Side normalization at fixed-fixed crossings is ignored: only discs whose
/// removal lowers the crossing count register.
bool has_removable_disk(const CombinatorialMap& cfg, const std::set<int>& moving,
                        const std::set<int>& fixed);

/// Geometric intersection number of the two families: total crossing count
/// after minimal_position on a scratch copy.  Symmetric; components shared
/// between the families contribute nothing.  Requires at least one of the
/// two families to be internally disjoint and embedded so it can play the
/// moving role.
std::size_t intersection_number(const CombinatorialMap& cfg, const std::set<int>& a,
                                const std::set<int>& b);

}  // namespace handlebody
