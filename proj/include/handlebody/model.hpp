#pragma once

#include <vector>

#include "surfmap/map.hpp"

namespace handlebody {

using surfmap::CombinatorialMap;
using surfmap::Dart;

/// Dart and component handles into the standard chart. Dart ids are valid for
/// the map they were issued against; after editing, translate them through the
/// editor's compaction table with remapped().
struct ChartRegistry {
  std::vector<int> seam_component;   // boundary circle of base disk i
  std::vector<int> delta_component;  // dual curve crossing seam i once
  int omega_component = -1;          // longitude crossing every seam once

  std::vector<Dart> seam_front_at_v, seam_front_at_w;  // seam edge v_i -> w_i
  std::vector<Dart> seam_back_at_w, seam_back_at_v;    // seam edge w_i -> v_i
  std::vector<Dart> delta_out, delta_in;               // dual loop germs at v_i
  std::vector<Dart> omega_out, omega_in;               // longitude germs at w_i

  ChartRegistry remapped(const std::vector<Dart>& remap) const;

  std::vector<int> seam_set() const;       // all seam components
  std::vector<int> reference_set() const;  // duals plus longitude
};

/// Genus-g model: seams carry kind disk_boundary, the dual curves and the
/// longitude carry kind reference. The reference union the seams fills the
/// surface (two complementary faces), which pins taut position of any curve
/// held against it.
struct HandlebodyModel {
  int genus = 0;
  CombinatorialMap map;
  ChartRegistry chart;
};

/// Standard genus-g chart. Component ids: seam i is i, dual i is g+i, the
/// longitude is 2g. Orientations: seams run v_i -> w_i along the front edge,
/// dual i exits v_i so that its spelled word is +x_i, the longitude runs
/// w_1 -> w_2 -> ...
/// Throws std::invalid_argument for genus < 2.
HandlebodyModel standard_model(int genus);

}  // namespace handlebody
