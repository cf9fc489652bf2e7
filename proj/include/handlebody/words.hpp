#pragma once

#include <vector>

#include "handlebody/model.hpp"
#include "surfmap/map.hpp"

namespace handlebody {

/// Element of the free group on x_1..x_g.  letters[i] = ±k encodes x_k^{±1};
/// cyclic marks conjugacy-class semantics (closed curves).  Not kept reduced;
/// call normalized() before comparing.
struct Word {
  std::vector<int> letters;
  bool cyclic = false;

  friend bool operator==(const Word&, const Word&) = default;
};

/// Free reduction, plus cyclic reduction when the word is cyclic.
Word normalized(Word w);

Word inverse(Word w);

/// Concatenation as group elements; the result is a linear word.
Word concat(const Word& a, const Word& b);

/// Signed crossing sequence of the component against the cut-disk boundaries,
/// read along the strand from its orientation dart (arcs run front to back).
/// A crossing reads +x_k when disk boundary k runs to the traveler's left.
/// Requires the component to have no removable disc against the cut disks;
/// throws std::invalid_argument otherwise.
Word spell_word(const surfmap::CombinatorialMap& cfg, int component, const HandlebodyModel& model);

/// True when the closed curve bounds a disk in the handlebody, decided by the
/// cyclic reduction of its spelled word.  The curve must be essential on the
/// surface; throws std::invalid_argument otherwise.
bool is_meridian(const surfmap::CombinatorialMap& cfg, int component, const HandlebodyModel& model);

}  // namespace handlebody
