#include "handlebody/words.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "handlebody/position.hpp"
#include "surfmap/cut.hpp"

namespace handlebody {
namespace {

using surfmap::CombinatorialMap;
using surfmap::Dart;

/// letter index (1-based) per seam component id.
std::map<int, int> seam_letters(const HandlebodyModel& model) {
  std::map<int, int> out;
  for (int i = 0; i < model.genus; ++i) out[model.chart.seam_component[i]] = i + 1;
  return out;
}

/// Signed crossing sequence along the strand.  At a crossing the traveler
/// arrives through germ w = alpha(d); the crossed strand holds sigma(w) on
/// the traveler's right and sigma^3(w) on its left, and the sign is positive
/// when the seam's own travel direction exits through the left germ.
Word raw_spell(const CombinatorialMap& m, int component, const std::map<int, int>& letters) {
  std::vector<std::uint8_t> fwd(m.dart_count(), 0);
  for (const auto& [seam, k] : letters) {
    for (Dart d : surfmap::component_strand(m, seam).darts) fwd[d] = 1;
  }

  surfmap::Strand strand = surfmap::component_strand(m, component);
  Word w;
  w.cyclic = strand.closed;
  for (Dart d : strand.darts) {
    Dart at = m.alpha(d);
    if (m.valence(at) != 4) continue;
    Dart right = m.sigma(at);
    Dart left = m.sigma(m.sigma(right));
    auto it = letters.find(m.component(left));
    if (it == letters.end()) continue;
    if (fwd[left] == fwd[right])
      throw std::logic_error("spell_word: crossed disk boundary has no travel direction");
    w.letters.push_back(fwd[left] ? it->second : -it->second);
  }
  return w;
}

}  // namespace

Word normalized(Word w) {
  std::vector<int> out;
  for (int l : w.letters) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  if (w.cyclic) {
    std::size_t b = 0, e = out.size();
    while (e - b >= 2 && out[b] == -out[e - 1]) {
      ++b;
      --e;
    }
    out.assign(out.begin() + b, out.begin() + e);
  }
  w.letters = std::move(out);
  return w;
}

Word inverse(Word w) {
  std::vector<int> out;
  out.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.push_back(-*it);
  w.letters = std::move(out);
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.letters = a.letters;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word spell_word(const CombinatorialMap& cfg, int component, const HandlebodyModel& model) {
  if (!cfg.has_component(component))
    throw std::invalid_argument("spell_word: component not in the map");
  std::vector<int> seams = model.chart.seam_set();
  std::set<int> walls(seams.begin(), seams.end());
  walls.erase(component);  // a disk boundary spells against the other disks
  if (has_removable_disk(cfg, {component}, walls))
    throw std::invalid_argument("spell_word: component is not in minimal position "
                                "against the cut disks");
  return raw_spell(cfg, component, seam_letters(model));
}

bool is_meridian(const CombinatorialMap& cfg, int component, const HandlebodyModel& model) {
  if (!cfg.has_component(component))
    throw std::invalid_argument("is_meridian: component not in the map");
  if (!surfmap::is_closed_component(cfg, component))
    throw std::invalid_argument("is_meridian: component is not a closed curve");
  for (const surfmap::CutPiece& piece : surfmap::cut_along(cfg, {component})) {
    if (piece.genus == 0 && piece.boundary_count == 1)
      throw std::invalid_argument("is_meridian: curve is inessential on the surface");
  }
  // Removable discs against the disks only insert cancelling letter pairs, so
  // the cyclic reduction is read off without repositioning the curve.
  Word w = raw_spell(cfg, component, seam_letters(model));
  return normalized(w).letters.empty();
}

}  // namespace handlebody
