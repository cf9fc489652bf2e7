#include "surfmap/canonical.hpp"

#include <map>
#include <queue>
#include <stdexcept>

namespace surfmap {

namespace {

std::vector<std::int64_t> encode_from_seed(const CombinatorialMap& m, Dart seed,
                                           const std::set<int>& pinned) {
  const std::size_t n = m.dart_count();
  std::vector<Dart> old_of;
  old_of.reserve(n);
  std::vector<Dart> new_of(n, kNoDart);
  auto visit = [&](Dart d) {
    if (new_of[d] != kNoDart) return;
    new_of[d] = static_cast<Dart>(old_of.size());
    old_of.push_back(d);
  };
  visit(seed);
  for (std::size_t head = 0; head < old_of.size(); ++head) {
    Dart d = old_of[head];
    visit(m.alpha(d));
    visit(m.sigma(d));
  }
  if (old_of.size() != n)
    throw std::invalid_argument("canonical_form: map is not connected");

  std::map<int, std::int64_t> comp_code;
  std::int64_t next_ordinal = 0;
  std::vector<std::int64_t> code;
  code.reserve(5 * n);
  for (Dart d : old_of) {
    int comp = m.component(d);
    auto it = comp_code.find(comp);
    if (it == comp_code.end()) {
      std::int64_t value = pinned.count(comp) ? 2 * static_cast<std::int64_t>(comp) + 1
                                              : 2 * next_ordinal++;
      it = comp_code.emplace(comp, value).first;
    }
    code.push_back(new_of[m.alpha(d)]);
    code.push_back(new_of[m.sigma(d)]);
    code.push_back(static_cast<std::int64_t>(m.kind(d)));
    code.push_back(it->second);
    code.push_back(m.marked(d) ? 1 : 0);
  }
  return code;
}

}  // namespace

CanonicalForm canonical_form(const CombinatorialMap& m, const std::set<int>& pinned) {
  if (!structurally_valid(m))
    throw std::invalid_argument("canonical_form: structurally invalid map");
  for (int c : pinned)
    if (!m.has_component(c))
      throw std::invalid_argument("canonical_form: pinned component absent");

  std::vector<Dart> seeds;
  if (pinned.empty()) {
    seeds.resize(m.dart_count());
    for (Dart d = 0; d < m.dart_count(); ++d) seeds[d] = d;
  } else {
    for (Dart d = 0; d < m.dart_count(); ++d)
      if (pinned.count(m.component(d))) seeds.push_back(d);
  }

  CanonicalForm best;
  for (Dart seed : seeds) {
    std::vector<std::int64_t> code = encode_from_seed(m, seed, pinned);
    if (best.code.empty() || code < best.code) {
      best.code = std::move(code);
      best.automorphisms = 1;
    } else if (code == best.code) {
      ++best.automorphisms;
    }
  }
  return best;
}

}  // namespace surfmap
