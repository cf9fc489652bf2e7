#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "surfmap/map.hpp"

namespace surfmap {

/// Relabeling-invariant signature of a connected map.  Pinned components keep
/// their numeric identity in the code; all other components are coded by
/// first-visit order, so two maps compare equal exactly when some dart
/// bijection preserves alpha, sigma, kinds, marks, and the pinned labels.
struct CanonicalForm {
  std::vector<std::int64_t> code;
  std::size_t automorphisms = 0;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    return a.code <=> b.code;
  }
};

/// Throws std::invalid_argument if the map is structurally invalid or a
/// pinned component is absent.  With pinned components the candidate start
/// darts are restricted to them, so automorphisms counts only symmetries
/// fixing every pinned component setwise.
CanonicalForm canonical_form(const CombinatorialMap& m, const std::set<int>& pinned = {});

}  // namespace surfmap
