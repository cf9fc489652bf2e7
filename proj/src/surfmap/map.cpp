#include "surfmap/map.hpp"

#include <algorithm>
#include <stdexcept>

namespace surfmap {

const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::disk_boundary: return "disk_boundary";
    case EdgeKind::curve: return "curve";
    case EdgeKind::rope: return "rope";
    case EdgeKind::reference: return "reference";
  }
  return "?";
}

std::optional<EdgeKind> edge_kind_from_string(std::string_view s) {
  if (s == "disk_boundary") return EdgeKind::disk_boundary;
  if (s == "curve") return EdgeKind::curve;
  if (s == "rope") return EdgeKind::rope;
  if (s == "reference") return EdgeKind::reference;
  return std::nullopt;
}

CombinatorialMap::CombinatorialMap(std::vector<Dart> alpha, std::vector<Dart> sigma,
                                   std::vector<EdgeLabel> labels,
                                   std::vector<std::uint8_t> marked,
                                   std::map<int, Dart> orientation)
    : alpha_(std::move(alpha)),
      sigma_(std::move(sigma)),
      label_(std::move(labels)),
      marked_(std::move(marked)),
      orientation_(std::move(orientation)) {
  const std::size_t n = alpha_.size();
  if (sigma_.size() != n || label_.size() != n)
    throw std::invalid_argument("map tables must have one entry per dart");
  if (marked_.empty()) marked_.assign(n, 0);
  if (marked_.size() != n)
    throw std::invalid_argument("marked table size mismatch");
  sigma_inv_.assign(n, kNoDart);
  for (Dart d = 0; d < n; ++d) {
    if (sigma_[d] < n) sigma_inv_[sigma_[d]] = d;
  }
}

Dart CombinatorialMap::orientation_dart(int component) const {
  auto it = orientation_.find(component);
  return it == orientation_.end() ? kNoDart : it->second;
}

std::vector<int> CombinatorialMap::component_ids() const {
  std::set<int> ids;
  for (const auto& l : label_) ids.insert(l.component);
  return {ids.begin(), ids.end()};
}

std::vector<Dart> CombinatorialMap::darts_of_component(int component) const {
  std::vector<Dart> out;
  for (Dart d = 0; d < dart_count(); ++d)
    if (label_[d].component == component) out.push_back(d);
  return out;
}

bool CombinatorialMap::has_component(int component) const {
  for (const auto& l : label_)
    if (l.component == component) return true;
  return false;
}

std::vector<Dart> CombinatorialMap::vertex_darts(Dart d) const {
  std::vector<Dart> cycle;
  Dart cur = d;
  do {
    cycle.push_back(cur);
    cur = sigma_[cur];
  } while (cur != d && cycle.size() <= dart_count());
  return cycle;
}

int CombinatorialMap::valence(Dart d) const {
  return static_cast<int>(vertex_darts(d).size());
}

namespace {

template <class Next>
std::vector<std::vector<Dart>> orbits_of(std::size_t n, Next next) {
  std::vector<std::vector<Dart>> out;
  std::vector<bool> seen(n, false);
  for (Dart d = 0; d < n; ++d) {
    if (seen[d]) continue;
    std::vector<Dart> orbit;
    Dart cur = d;
    while (!seen[cur]) {
      seen[cur] = true;
      orbit.push_back(cur);
      cur = next(cur);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace

std::vector<std::vector<Dart>> vertices(const CombinatorialMap& m) {
  return orbits_of(m.dart_count(), [&](Dart d) { return m.sigma(d); });
}

std::vector<std::vector<Dart>> faces(const CombinatorialMap& m) {
  return orbits_of(m.dart_count(), [&](Dart d) { return m.phi(d); });
}

std::vector<std::vector<Dart>> edges(const CombinatorialMap& m) {
  return orbits_of(m.dart_count(), [&](Dart d) { return m.alpha(d); });
}

long euler_characteristic(const CombinatorialMap& m) {
  return static_cast<long>(vertices(m).size()) - static_cast<long>(m.edge_count()) +
         static_cast<long>(faces(m).size());
}

namespace {

bool map_connected(const CombinatorialMap& m) {
  const std::size_t n = m.dart_count();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<Dart> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    for (Dart e : {m.alpha(d), m.sigma(d)}) {
      if (!seen[e]) {
        seen[e] = true;
        ++count;
        stack.push_back(e);
      }
    }
  }
  return count == n;
}

bool check_structural(const CombinatorialMap& m, std::vector<std::string>& out) {
  const std::size_t n = m.dart_count();
  bool ok = true;
  auto fail = [&](std::string msg) {
    out.push_back(std::move(msg));
    ok = false;
  };
  if (n == 0) {
    fail("map has no darts");
    return false;
  }
  if (n % 2 != 0) fail("odd number of darts");
  for (Dart d = 0; d < n; ++d) {
    if (m.alpha(d) >= n || m.sigma(d) >= n) {
      fail("dart " + std::to_string(d) + ": table entry out of range");
      return false;
    }
  }
  for (Dart d = 0; d < n; ++d) {
    if (m.alpha(d) == d) fail("edge involution fixes dart " + std::to_string(d));
    if (m.alpha(m.alpha(d)) != d)
      fail("edge involution not an involution at dart " + std::to_string(d));
  }
  {
    std::vector<bool> hit(n, false);
    for (Dart d = 0; d < n; ++d) {
      if (hit[m.sigma(d)]) {
        fail("rotation not a bijection (dart " + std::to_string(m.sigma(d)) +
             " has two predecessors)");
        break;
      }
      hit[m.sigma(d)] = true;
    }
  }
  for (Dart d = 0; d < n; ++d) {
    if (!(m.label(d) == m.label(m.alpha(d)))) {
      fail("edge of dart " + std::to_string(d) + " has mismatched labels");
      break;
    }
  }
  if (!ok) return false;
  if (!map_connected(m)) {
    fail("map is not connected");
    return false;
  }
  const long chi = euler_characteristic(m);
  if ((2 - chi) % 2 != 0 || chi > 2) {
    fail("Euler characteristic " + std::to_string(chi) + " is not 2-2g for integer g>=0");
    return false;
  }
  return ok;
}

bool check_configuration(const CombinatorialMap& m, std::vector<std::string>& out) {
  bool ok = true;
  auto fail = [&](std::string msg) {
    out.push_back(std::move(msg));
    ok = false;
  };
  for (const auto& v : vertices(m)) {
    const Dart d0 = v.front();
    switch (v.size()) {
      case 2: {
        if (!m.marked(v[0]) && !m.marked(v[1]))
          fail("valence-2 vertex at dart " + std::to_string(d0) + " has no marked dart");
        if (m.component(v[0]) != m.component(v[1]))
          fail("valence-2 vertex at dart " + std::to_string(d0) + " joins two components");
        break;
      }
      case 3: {
        // Attachment: two host germs of one component, one arc end germ of
        // another, the host carrying a disk boundary.
        int host = -1;
        for (int i = 0; i < 3; ++i) {
          if (m.component(v[i]) == m.component(v[(i + 1) % 3]) &&
              m.component(v[i]) != m.component(v[(i + 2) % 3])) {
            host = m.component(v[i]);
          }
        }
        if (host < 0) {
          fail("valence-3 vertex at dart " + std::to_string(d0) +
               " is not a host pair plus arc end");
        } else {
          for (int i = 0; i < 3; ++i) {
            if (m.component(v[i]) == host && m.kind(v[i]) != EdgeKind::disk_boundary &&
                m.kind(v[i]) != EdgeKind::curve) {
              fail("attachment host at dart " + std::to_string(d0) +
                   " is not a disk boundary or curve");
              break;
            }
          }
        }
        break;
      }
      case 4: {
        const bool alternates = m.component(v[0]) == m.component(v[2]) &&
                                m.component(v[1]) == m.component(v[3]) &&
                                m.component(v[0]) != m.component(v[1]);
        if (!alternates)
          fail("valence-4 vertex at dart " + std::to_string(d0) +
               " is not a transverse crossing of two components");
        break;
      }
      default:
        fail("vertex at dart " + std::to_string(d0) + " has valence " +
             std::to_string(v.size()));
    }
  }
  return ok;
}

}  // namespace

ValidityReport validate(const CombinatorialMap& m) {
  ValidityReport r;
  r.structural_ok = check_structural(m, r.violations);
  r.configuration_ok = r.structural_ok && check_configuration(m, r.violations);
  return r;
}

bool structurally_valid(const CombinatorialMap& m) {
  std::vector<std::string> sink;
  return check_structural(m, sink);
}

int genus(const CombinatorialMap& m) {
  if (!structurally_valid(m)) throw std::invalid_argument("genus: map is not structurally valid");
  return static_cast<int>((2 - euler_characteristic(m)) / 2);
}

namespace {

std::vector<std::uint32_t> index_of(const std::vector<std::vector<Dart>>& orbits,
                                    std::size_t n) {
  std::vector<std::uint32_t> idx(n, 0);
  for (std::uint32_t i = 0; i < orbits.size(); ++i)
    for (Dart d : orbits[i]) idx[d] = i;
  return idx;
}

}  // namespace

std::vector<std::uint32_t> vertex_index(const CombinatorialMap& m) {
  return index_of(vertices(m), m.dart_count());
}

std::vector<std::uint32_t> face_index(const CombinatorialMap& m) {
  return index_of(faces(m), m.dart_count());
}

std::optional<Dart> strand_next(const CombinatorialMap& m, Dart d) {
  const Dart w = m.alpha(d);
  const auto v = m.vertex_darts(w);
  switch (v.size()) {
    case 2:
      return m.sigma(w);
    case 3: {
      // Continue iff w is a host germ; the matching host germ is the other
      // dart of the same component.
      for (Dart e : v)
        if (e != w && m.component(e) == m.component(w)) return e;
      return std::nullopt;  // w is the attached arc end
    }
    case 4:
      return m.sigma(m.sigma(w));
    default:
      throw std::logic_error("strand_next: vertex valence outside 2..4");
  }
}

std::optional<Dart> strand_prev(const CombinatorialMap& m, Dart d) {
  const auto v = m.vertex_darts(d);
  switch (v.size()) {
    case 2:
      return m.alpha(m.sigma(d));
    case 3: {
      for (Dart e : v)
        if (e != d && m.component(e) == m.component(d)) return m.alpha(e);
      return std::nullopt;
    }
    case 4:
      return m.alpha(m.sigma(m.sigma(d)));
    default:
      throw std::logic_error("strand_prev: vertex valence outside 2..4");
  }
}

Strand strand_of(const CombinatorialMap& m, Dart d) {
  Strand s;
  // Walk back to the start of an open strand (or all the way around).
  Dart start = d;
  for (std::size_t guard = 0; guard <= m.dart_count(); ++guard) {
    auto p = strand_prev(m, start);
    if (!p) break;
    if (*p == d) {  // closed strand
      s.closed = true;
      start = d;
      break;
    }
    start = *p;
  }
  Dart cur = start;
  for (std::size_t guard = 0; guard <= m.dart_count(); ++guard) {
    s.darts.push_back(cur);
    auto nxt = strand_next(m, cur);
    if (!nxt) return s;
    if (*nxt == start) {
      s.closed = true;
      return s;
    }
    cur = *nxt;
  }
  throw std::logic_error("strand_of: walk failed to terminate");
}

Strand component_strand(const CombinatorialMap& m, int component) {
  Dart root = m.orientation_dart(component);
  if (root == kNoDart) {
    auto ds = m.darts_of_component(component);
    if (ds.empty()) throw std::invalid_argument("component_strand: no such component");
    root = ds.front();
  }
  return strand_of(m, root);
}

bool is_closed_component(const CombinatorialMap& m, int component) {
  return component_strand(m, component).closed;
}

std::vector<Dart> crossing_vertices(const CombinatorialMap& m, int comp_a, int comp_b) {
  std::vector<Dart> out;
  for (const auto& v : vertices(m)) {
    if (v.size() != 4) continue;
    const int c0 = m.component(v[0]);
    const int c1 = m.component(v[1]);
    if ((c0 == comp_a && c1 == comp_b) || (c0 == comp_b && c1 == comp_a))
      out.push_back(*std::min_element(v.begin(), v.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_crossings(const CombinatorialMap& m, int comp_a, int comp_b) {
  return crossing_vertices(m, comp_a, comp_b).size();
}

std::size_t count_crossings(const CombinatorialMap& m, const std::set<int>& a,
                            const std::set<int>& b) {
  std::size_t total = 0;
  for (const auto& v : vertices(m)) {
    if (v.size() != 4) continue;
    const int c0 = m.component(v[0]);
    const int c1 = m.component(v[1]);
    if ((a.count(c0) && b.count(c1)) || (a.count(c1) && b.count(c0))) ++total;
  }
  return total;
}

std::vector<Dart> arc_endpoint_darts(const CombinatorialMap& m, int component) {
  std::vector<Dart> out;
  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (m.component(d) != component) continue;
    const auto v = m.vertex_darts(d);
    if (v.size() != 3) continue;
    // d is the attached end iff the other two darts share the host component.
    bool host_pair = false;
    std::vector<Dart> others;
    for (Dart e : v)
      if (e != d) others.push_back(e);
    if (others.size() == 2 && m.component(others[0]) == m.component(others[1]) &&
        m.component(others[0]) != component)
      host_pair = true;
    if (host_pair) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace surfmap
