#pragma once

#include <vector>

#include "handlebody/model.hpp"
#include "surfmap/map.hpp"

namespace handlebody {

enum class SystemClass { generic, simple, reduced };

/// Pairwise disjoint, pairwise non-isotopic disk boundaries living in one
/// configuration over the standard chart.  simple means cutting the surface
/// along all of them leaves only genus-zero pieces; reduced means it leaves
/// exactly one, which forces the component count to equal the genus.
struct DiskSystem {
  surfmap::CombinatorialMap map;
  std::vector<int> components;
  SystemClass kind = SystemClass::generic;
};

/// True when the two disjoint closed curves cobound an annulus.  Throws
/// std::invalid_argument when either component is missing or open, or the
/// two cross.
bool curves_isotopic(const surfmap::CombinatorialMap& cfg, int a, int b);

/// Validates the curve set and classifies the cut shape.  Throws
/// std::invalid_argument when a curve is missing, open, self-crossing,
/// inessential, or not a disk boundary, when two curves cross, or when two
/// are isotopic duplicates.
DiskSystem classify_disk_system(const surfmap::CombinatorialMap& cfg,
                                const std::vector<int>& components,
                                const HandlebodyModel& model);

/// Isotopy-class equality of two systems over the same chart.  Each side is
/// stripped to chart plus system, repositioned against the chart, and curves
/// parallel to a chart curve are replaced by that curve's id; the remainders
/// compare by canonical form pinned to the chart.
bool systems_equal(const DiskSystem& a, const DiskSystem& b, const HandlebodyModel& model);

}  // namespace handlebody
