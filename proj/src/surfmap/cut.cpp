#include "surfmap/cut.hpp"

#include <algorithm>
#include <stdexcept>

namespace surfmap {

namespace {

[[noreturn]] void engine_fail(const char* what) {
  throw std::logic_error(std::string("regions: ") + what);
}

/// The sliced map, in its own dart ids.  Wall darts split into a left copy
/// (keeping the counterclockwise neighbors, so it borders the piece on the
/// source dart's left) and a right copy.
struct CutGraph {
  std::vector<Dart> alpha, sigma;
  std::vector<EdgeLabel> label;
  std::vector<std::uint8_t> marked;
  std::vector<Dart> source;
  std::vector<std::uint8_t> side;  // 0 plain, 1 left, 2 right
  std::vector<Dart> left_copy, right_copy, plain_copy;
  std::vector<std::size_t> piece_of;
  std::size_t piece_count = 0;
};

CutGraph slice(const CombinatorialMap& m, const std::vector<std::uint8_t>& mask) {
  const std::size_t n = m.dart_count();
  if (mask.size() != n) engine_fail("mask size mismatch");
  for (Dart d = 0; d < n; ++d)
    if (mask[d] != mask[m.alpha(d)]) engine_fail("mask not closed under alpha");

  CutGraph g;
  g.left_copy.assign(n, kNoDart);
  g.right_copy.assign(n, kNoDart);
  g.plain_copy.assign(n, kNoDart);
  Dart fresh = 0;
  for (Dart d = 0; d < n; ++d) {
    if (mask[d]) {
      g.left_copy[d] = fresh++;
      g.right_copy[d] = fresh++;
    } else {
      g.plain_copy[d] = fresh++;
    }
  }
  g.alpha.assign(fresh, kNoDart);
  g.sigma.assign(fresh, kNoDart);
  g.label.resize(fresh);
  g.marked.assign(fresh, 0);
  g.source.assign(fresh, kNoDart);
  g.side.assign(fresh, 0);

  auto stamp = [&](Dart copy, Dart src, std::uint8_t side) {
    g.label[copy] = m.label(src);
    g.marked[copy] = m.marked(src) ? 1 : 0;
    g.source[copy] = src;
    g.side[copy] = side;
  };
  for (Dart d = 0; d < n; ++d) {
    if (mask[d]) {
      stamp(g.left_copy[d], d, 1);
      stamp(g.right_copy[d], d, 2);
      g.alpha[g.left_copy[d]] = g.right_copy[m.alpha(d)];
      g.alpha[g.right_copy[d]] = g.left_copy[m.alpha(d)];
    } else {
      stamp(g.plain_copy[d], d, 0);
      g.alpha[g.plain_copy[d]] = g.plain_copy[m.alpha(d)];
    }
  }

  for (const std::vector<Dart>& rot : vertices(m)) {
    std::vector<std::size_t> walls;
    for (std::size_t i = 0; i < rot.size(); ++i)
      if (mask[rot[i]]) walls.push_back(i);
    if (walls.empty()) {
      for (std::size_t i = 0; i < rot.size(); ++i)
        g.sigma[g.plain_copy[rot[i]]] = g.plain_copy[rot[(i + 1) % rot.size()]];
      continue;
    }
    // One sector per wall germ: its left copy, then the plain germs up to the
    // next wall germ, closed by that germ's right copy.
    for (std::size_t wi : walls) {
      Dart start = g.left_copy[rot[wi]];
      Dart prev = start;
      std::size_t j = (wi + 1) % rot.size();
      while (!mask[rot[j]]) {
        g.sigma[prev] = g.plain_copy[rot[j]];
        prev = g.plain_copy[rot[j]];
        j = (j + 1) % rot.size();
      }
      g.sigma[prev] = g.right_copy[rot[j]];
      g.sigma[g.right_copy[rot[j]]] = start;
    }
  }
  for (Dart d = 0; d < fresh; ++d)
    if (g.alpha[d] == kNoDart || g.sigma[d] == kNoDart) engine_fail("incomplete slice tables");

  g.piece_of.assign(fresh, kNoIndex);
  for (Dart seed = 0; seed < fresh; ++seed) {
    if (g.piece_of[seed] != kNoIndex) continue;
    std::vector<Dart> stack{seed};
    g.piece_of[seed] = g.piece_count;
    while (!stack.empty()) {
      Dart d = stack.back();
      stack.pop_back();
      for (Dart e : {g.alpha[d], g.sigma[d]}) {
        if (g.piece_of[e] == kNoIndex) {
          g.piece_of[e] = g.piece_count;
          stack.push_back(e);
        }
      }
    }
    ++g.piece_count;
  }
  return g;
}

CornerKind classify_corner(const CombinatorialMap& m, const BoundaryCorner& c) {
  if (c.in_germ == c.out_germ) return CornerKind::turn_slit_end;
  if (m.component(c.in_germ) == m.component(c.out_germ))
    return m.valence(c.in_germ) == 2 ? CornerKind::flat_marked : CornerKind::flat_through;
  switch (m.valence(c.in_germ)) {
    case 3:
      return CornerKind::turn_attachment;
    case 4:
      return CornerKind::turn_transverse;
    default:
      engine_fail("wall corner at a vertex of unexpected valence");
  }
}

}  // namespace

std::size_t BoundaryCircle::turn_count() const {
  std::size_t n = 0;
  for (const BoundaryCorner& c : corners)
    if (c.kind == CornerKind::turn_transverse || c.kind == CornerKind::turn_attachment ||
        c.kind == CornerKind::turn_slit_end)
      ++n;
  return n;
}

std::vector<std::uint8_t> wall_mask_of_components(const CombinatorialMap& m,
                                                  const std::set<int>& comps) {
  for (int c : comps)
    if (!m.has_component(c))
      throw std::invalid_argument("wall_mask_of_components: no component " + std::to_string(c));
  std::vector<std::uint8_t> mask(m.dart_count(), 0);
  for (Dart d = 0; d < m.dart_count(); ++d)
    if (comps.count(m.component(d))) mask[d] = 1;
  return mask;
}

RegionAnalysis regions(const CombinatorialMap& m, const std::vector<std::uint8_t>& wall_mask) {
  CutGraph g = slice(m, wall_mask);
  RegionAnalysis out;
  out.pieces.resize(g.piece_count);
  out.left_piece.assign(m.dart_count(), kNoIndex);
  out.right_piece.assign(m.dart_count(), kNoIndex);
  out.scar_circle.assign(m.dart_count(), kNoIndex);

  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (wall_mask[d]) {
      out.left_piece[d] = g.piece_of[g.left_copy[d]];
      out.right_piece[d] = g.piece_of[g.right_copy[d]];
    } else {
      out.left_piece[d] = out.right_piece[d] = g.piece_of[g.plain_copy[d]];
    }
  }

  // Faces of the sliced map.  Left copies are closed under phi, so a face is
  // either a pure boundary walk or entirely free of left copies.
  const std::size_t n2 = g.alpha.size();
  std::vector<std::uint8_t> seen(n2, 0);
  std::vector<std::size_t> face_count_per_piece(g.piece_count, 0);
  for (Dart seed = 0; seed < n2; ++seed) {
    if (seen[seed]) continue;
    std::vector<Dart> orbit;
    Dart d = seed;
    do {
      orbit.push_back(d);
      seen[d] = 1;
      d = g.sigma[g.alpha[d]];
    } while (d != seed);
    ++face_count_per_piece[g.piece_of[seed]];
    bool any_left = false, all_left = true;
    for (Dart f : orbit) {
      if (g.side[f] == 1)
        any_left = true;
      else
        all_left = false;
    }
    if (!any_left) continue;
    if (!all_left) engine_fail("face mixes boundary and interior");

    BoundaryCircle circle;
    circle.piece = g.piece_of[seed];
    for (Dart f : orbit) circle.scars.push_back(g.source[f]);
    for (std::size_t i = 0; i < circle.scars.size(); ++i) {
      BoundaryCorner corner;
      corner.in_germ = m.alpha(circle.scars[i]);
      corner.out_germ = circle.scars[(i + 1) % circle.scars.size()];
      // Recover the corner's sector from the sliced rotation.
      Dart walk = g.sigma[g.left_copy[corner.out_germ]];
      while (g.side[walk] == 0) {
        corner.interior.push_back(g.source[walk]);
        walk = g.sigma[walk];
      }
      if (walk != g.right_copy[corner.in_germ]) engine_fail("sector walk mismatch");
      corner.kind = classify_corner(m, corner);
      circle.corners.push_back(std::move(corner));
    }
    for (Dart s : circle.scars) out.scar_circle[s] = out.circles.size();
    out.pieces[circle.piece].circles.push_back(out.circles.size());
    out.circles.push_back(std::move(circle));
  }

  std::vector<long> v_count(g.piece_count, 0), e_count(g.piece_count, 0);
  std::vector<std::uint8_t> vseen(n2, 0);
  for (Dart seed = 0; seed < n2; ++seed) {
    e_count[g.piece_of[seed]] += 1;
    if (vseen[seed]) continue;
    Dart d = seed;
    do {
      vseen[d] = 1;
      d = g.sigma[d];
    } while (d != seed);
    ++v_count[g.piece_of[seed]];
  }
  for (std::size_t p = 0; p < g.piece_count; ++p) {
    long chi = v_count[p] - e_count[p] / 2 + static_cast<long>(face_count_per_piece[p]);
    if ((2 - chi) % 2 != 0 || chi > 2) engine_fail("piece euler characteristic out of range");
    out.pieces[p].genus = static_cast<int>((2 - chi) / 2);
    if (out.pieces[p].circles.empty() && g.piece_count > 1)
      engine_fail("piece without boundary in a sliced map");
  }
  return out;
}

RegionAnalysis regions(const CombinatorialMap& m, const std::set<int>& wall_components) {
  return regions(m, wall_mask_of_components(m, wall_components));
}

std::vector<CutPiece> cut_along(const CombinatorialMap& m, const std::set<int>& components) {
  for (int c : components) {
    if (!m.has_component(c))
      throw std::invalid_argument("cut_along: no component " + std::to_string(c));
    if (!is_closed_component(m, c))
      throw std::invalid_argument("cut_along: component " + std::to_string(c) + " is not closed");
  }
  for (int a : components)
    for (int b : components)
      if (a < b && count_crossings(m, a, b) != 0)
        throw std::invalid_argument("cut_along: wall components cross");

  std::vector<std::uint8_t> mask = wall_mask_of_components(m, components);
  CutGraph g = slice(m, mask);

  std::vector<CutPiece> out(g.piece_count);
  std::vector<Dart> renumber(g.alpha.size(), kNoDart);
  std::vector<std::size_t> width(g.piece_count, 0);
  for (Dart d = 0; d < g.alpha.size(); ++d) renumber[d] = width[g.piece_of[d]]++;
  for (std::size_t p = 0; p < g.piece_count; ++p) {
    out[p].provenance.assign(width[p], kNoDart);
    out[p].scar_side.assign(width[p], 0);
  }

  std::vector<std::vector<Dart>> alpha(g.piece_count), sigma(g.piece_count);
  std::vector<std::vector<EdgeLabel>> labels(g.piece_count);
  std::vector<std::vector<std::uint8_t>> marked(g.piece_count);
  for (std::size_t p = 0; p < g.piece_count; ++p) {
    alpha[p].resize(width[p]);
    sigma[p].resize(width[p]);
    labels[p].resize(width[p]);
    marked[p].resize(width[p]);
  }
  for (Dart d = 0; d < g.alpha.size(); ++d) {
    std::size_t p = g.piece_of[d];
    alpha[p][renumber[d]] = renumber[g.alpha[d]];
    sigma[p][renumber[d]] = renumber[g.sigma[d]];
    labels[p][renumber[d]] = g.label[d];
    marked[p][renumber[d]] = g.marked[d];
    out[p].provenance[renumber[d]] = g.source[d];
    out[p].scar_side[renumber[d]] = g.side[d];
  }

  RegionAnalysis analysis = regions(m, mask);
  for (std::size_t p = 0; p < g.piece_count; ++p) {
    out[p].map = CombinatorialMap(std::move(alpha[p]), std::move(sigma[p]),
                                  std::move(labels[p]), std::move(marked[p]));
    out[p].genus = analysis.pieces[p].genus;
    out[p].boundary_count = analysis.pieces[p].circles.size();
  }
  return out;
}

StrandPlan plan_parallel_circle(const RegionAnalysis& analysis, std::size_t circle,
                                const EdgeLabel& label) {
  const BoundaryCircle& bc = analysis.circles.at(circle);
  StrandPlan plan;
  plan.label = label;
  for (const BoundaryCorner& corner : bc.corners) {
    // The copy sweeps the corner from its arriving side to its leaving side,
    // crossing the sector's stubs nearest-first, each from its left.
    for (auto it = corner.interior.rbegin(); it != corner.interior.rend(); ++it)
      plan.steps.push_back({*it, 0.25, false});
  }
  return plan;
}

StrandPlan plan_parallel_component(const CombinatorialMap& m, int component, bool right_side,
                                   const EdgeLabel& label) {
  Strand strand = component_strand(m, component);
  if (!strand.closed)
    throw std::invalid_argument("plan_parallel_component: component is not closed");
  StrandPlan plan;
  plan.label = label;
  for (Dart d : strand.darts) {
    Dart w = m.alpha(d);  // arrival germ at the far vertex
    switch (m.valence(w)) {
      case 2:
        break;
      case 3: {
        Dart stub = right_side ? m.sigma(w) : m.sigma_inv(w);
        if (m.component(stub) != m.component(w))
          plan.steps.push_back({stub, 0.25, right_side});
        break;
      }
      case 4:
        plan.steps.push_back({right_side ? m.sigma(w) : m.sigma_inv(w), 0.25, right_side});
        break;
      default:
        throw std::logic_error("plan_parallel_component: unexpected valence");
    }
  }
  return plan;
}

}  // namespace surfmap
