#include "handlebody/systems.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "handlebody/position.hpp"
#include "handlebody/words.hpp"
#include "surfmap/canonical.hpp"
#include "surfmap/cut.hpp"
#include "surfmap/editor.hpp"

namespace handlebody {

using surfmap::CombinatorialMap;

namespace {

std::set<int> chart_components(const HandlebodyModel& model) {
  std::set<int> out;
  for (int c : model.chart.seam_set()) out.insert(c);
  for (int c : model.chart.reference_set()) out.insert(c);
  return out;
}

void require_closed(const CombinatorialMap& cfg, int c, const char* who) {
  if (!cfg.has_component(c) || !surfmap::is_closed_component(cfg, c))
    throw std::invalid_argument(std::string(who) + ": component missing or not a closed curve");
}

}  // namespace

bool curves_isotopic(const CombinatorialMap& cfg, int a, int b) {
  require_closed(cfg, a, "curves_isotopic");
  require_closed(cfg, b, "curves_isotopic");
  if (a == b) return true;
  if (surfmap::count_crossings(cfg, a, b) != 0)
    throw std::invalid_argument("curves_isotopic: curves cross");
  const auto analysis = surfmap::regions(cfg, std::set<int>{a, b});
  for (const auto& piece : analysis.pieces) {
    if (piece.genus != 0 || piece.circles.size() != 2) continue;
    const int c0 = cfg.component(analysis.circles[piece.circles[0]].scars[0]);
    const int c1 = cfg.component(analysis.circles[piece.circles[1]].scars[0]);
    if ((c0 == a && c1 == b) || (c0 == b && c1 == a)) return true;
  }
  return false;
}

DiskSystem classify_disk_system(const CombinatorialMap& cfg, const std::vector<int>& components,
                                const HandlebodyModel& model) {
  std::vector<int> comps = components;
  std::sort(comps.begin(), comps.end());
  if (std::adjacent_find(comps.begin(), comps.end()) != comps.end())
    throw std::invalid_argument("classify_disk_system: component listed twice");
  if (comps.empty()) throw std::invalid_argument("classify_disk_system: empty curve set");

  for (int c : comps) {
    require_closed(cfg, c, "classify_disk_system");
    if (surfmap::count_crossings(cfg, c, c) != 0)
      throw std::invalid_argument("classify_disk_system: curve crosses itself");
  }
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      if (surfmap::count_crossings(cfg, comps[i], comps[j]) != 0)
        throw std::invalid_argument("classify_disk_system: curves cross");
  for (int c : comps)
    if (!is_meridian(cfg, c, model))
      throw std::invalid_argument("classify_disk_system: curve is not a disk boundary");
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      if (curves_isotopic(cfg, comps[i], comps[j]))
        throw std::invalid_argument("classify_disk_system: two curves are isotopic duplicates");

  const auto pieces = surfmap::cut_along(cfg, std::set<int>(comps.begin(), comps.end()));
  bool flat = true;
  for (const auto& piece : pieces) flat = flat && piece.genus == 0;
  SystemClass kind = SystemClass::generic;
  if (flat) kind = pieces.size() == 1 ? SystemClass::reduced : SystemClass::simple;
  if (kind == SystemClass::reduced && comps.size() != static_cast<std::size_t>(model.genus))
    throw std::logic_error("classify_disk_system: single-piece cut off the genus count");
  return {cfg, std::move(comps), kind};
}

namespace {

struct PinnedSystem {
  std::vector<int> chart_twins;
  surfmap::CanonicalForm form;
};

/// Normal form of a system against the chart.  Repositioning pins every curve
/// except ones parallel to a chart curve, whose resting side stays arbitrary;
/// those are recorded by the chart id and removed before encoding.
PinnedSystem pinned_system_form(const DiskSystem& s, const HandlebodyModel& model) {
  const std::set<int> chart = chart_components(model);
  std::set<int> keep = chart;
  std::set<int> moving;
  PinnedSystem out;
  for (int c : s.components) {
    keep.insert(c);
    if (chart.count(c))
      out.chart_twins.push_back(c);
    else
      moving.insert(c);
  }

  surfmap::MapEditor ed(s.map);
  std::set<int> drop;
  for (int c : s.map.component_ids())
    if (!keep.count(c)) drop.insert(c);
  if (!drop.empty()) ed.delete_components(drop);
  CombinatorialMap pos = ed.finish().map;
  if (!moving.empty()) pos = minimal_position(pos, moving, chart);

  for (bool again = true; again;) {
    again = false;
    for (int c : moving) {
      int twin = -1;
      for (int k : chart)
        if (surfmap::count_crossings(pos, c, k) == 0 && curves_isotopic(pos, c, k)) {
          twin = k;
          break;
        }
      if (twin < 0) continue;
      out.chart_twins.push_back(twin);
      surfmap::MapEditor strip(pos);
      strip.delete_components({c});
      pos = strip.finish().map;
      moving.erase(c);
      // Dropping the curve can reopen a corridor, so settle the rest again.
      if (!moving.empty()) pos = minimal_position(pos, moving, chart);
      again = true;
      break;
    }
  }

  std::sort(out.chart_twins.begin(), out.chart_twins.end());
  out.form = surfmap::canonical_form(pos, chart);
  return out;
}

}  // namespace

bool systems_equal(const DiskSystem& a, const DiskSystem& b, const HandlebodyModel& model) {
  if (a.components.size() != b.components.size()) return false;
  const PinnedSystem pa = pinned_system_form(a, model);
  const PinnedSystem pb = pinned_system_form(b, model);
  return pa.chart_twins == pb.chart_twins && pa.form == pb.form;
}

}  // namespace handlebody
