#include "handlebody/position.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#ifdef POSITION_TRACE
#include <cstdio>
#endif

#include "surfmap/cut.hpp"
#include "surfmap/editor.hpp"

namespace handlebody {
namespace {

using surfmap::BoundaryCircle;
using surfmap::BoundaryCorner;
using surfmap::CornerKind;
using surfmap::Dart;
using surfmap::EdgeLabel;
using surfmap::kNoDart;
using surfmap::MapEditor;
using surfmap::RegionAnalysis;

enum class Family { moving, fixed, other };

struct FamilyView {
  const std::set<int>* moving;
  const std::set<int>* walls_fixed;
  Family of(int comp) const {
    if (moving->count(comp)) return Family::moving;
    if (walls_fixed->count(comp)) return Family::fixed;
    return Family::other;
  }
};

/// One sweepable disc: a genus-zero piece whose single turned boundary circle
/// splits into a run of moving scars and a path of fixed scars meeting at two
/// tips.  half means one tip is the moving arc's endpoint, removed by sliding
/// that endpoint along its host instead of sweeping a strand across.
///
/// net is the change the move makes to the moving-versus-fixed crossing
/// count: tip crossings and fixed chords over the run disappear, fixed germs
/// pierced along the far side of the path appear.
struct Site {
  bool half = false;
  bool attach_first = false;  // half only: the endpoint tip precedes the run
  std::vector<Dart> run;      // moving scars in walk order
  std::vector<Dart> path;     // fixed scars in walk order
  int net = 0;
  Dart key = kNoDart;  // smallest dart on the circle, selection order
};

enum class Role { flat, tip_cross, tip_attach, bend, bad };

/// Per dart, whether it points along its component's travel direction
/// (orientation dart when registered, else the strand from the smallest
/// dart).
std::vector<std::uint8_t> forward_table(const CombinatorialMap& m) {
  std::vector<std::uint8_t> fwd(m.dart_count(), 0);
  for (int comp : m.component_ids()) {
    for (Dart d : surfmap::component_strand(m, comp).darts) fwd[d] = 1;
  }
  return fwd;
}

Role classify_corner(const CombinatorialMap& m, const BoundaryCorner& c, const FamilyView& fam) {
  switch (c.kind) {
    case CornerKind::flat_through:
    case CornerKind::flat_marked:
      return Role::flat;
    case CornerKind::turn_slit_end:
      return Role::bad;  // the arc end is pinned to something invisible here
    case CornerKind::turn_transverse: {
      Family a = fam.of(m.component(c.in_germ));
      Family b = fam.of(m.component(c.out_germ));
      if (a == Family::fixed && b == Family::fixed) return Role::bend;
      if ((a == Family::moving) != (b == Family::moving)) return Role::tip_cross;
      return Role::bad;
    }
    case CornerKind::turn_attachment: {
      Family a = fam.of(m.component(c.in_germ));
      Family b = fam.of(m.component(c.out_germ));
      if ((a == Family::moving) == (b == Family::moving)) return Role::bad;
      // The endpoint must belong to the moving arc; a fixed arc pinned to a
      // moving host cannot slide.
      Dart stub = c.in_germ;
      Dart other = c.out_germ;
      Dart third = m.sigma(stub) == other ? m.sigma(other) : m.sigma(stub);
      if (m.component(third) == m.component(stub)) std::swap(stub, other);
      if (fam.of(m.component(stub)) != Family::moving) return Role::bad;
      return Role::tip_attach;
    }
  }
  return Role::bad;
}

/// Sector test at a path bend: the disc must sit on the left of the smaller
/// fixed component id, sides read off that component's forward germ at the
/// crossing.  Sites on the wrong side are the ones to slide across.
bool bend_side_legal(const CombinatorialMap& m, const BoundaryCorner& bend,
                     const std::vector<std::uint8_t>& fwd) {
  Dart in = bend.in_germ;
  Dart out = bend.out_germ;
  int ci = m.component(in);
  int co = m.component(out);
  if (ci == co) throw std::logic_error("minimal_position: bend inside one component");
  if (ci < co) {
    Dart a_fwd = fwd[in] ? in : m.sigma(m.sigma(in));
    return m.sigma(m.sigma(a_fwd)) == in;
  }
  Dart a_fwd = fwd[out] ? out : m.sigma(m.sigma(out));
  return out == a_fwd;
}

/// Germs the sweep must re-cross: at every interior path corner the far-side
/// incidences between arriving and departing scar, two per bend, one per
/// carried transversal, none where the corner only opens into the disc.
std::vector<Dart> pierce_list(const CombinatorialMap& m, const std::vector<Dart>& path) {
  std::vector<Dart> out;
  for (std::size_t t = 0; t + 1 < path.size(); ++t) {
    Dart in = m.alpha(path[t]);
    Dart next = path[t + 1];
    Dart g1 = m.sigma(in);
    if (g1 != next) out.push_back(g1);
    Dart g2 = m.sigma_inv(next);
    if (g2 != in && g2 != g1) out.push_back(g2);
  }
  return out;
}

/// Scan the complement of moving ∪ walls for sweepable discs.  Family passes
/// (union_pass false) see one internally disjoint group of fixed components
/// at a time, so candidate paths never bend; other fixed components cross the
/// site as invisible chords and enter the net accounting.  The union pass
/// sees every fixed component and recovers what family passes cannot: slides
/// of arc endpoints across a foreign component, and equal-cost corner
/// passages at fixed-fixed crossings sitting on the wrong side.
///
/// Sites returned either lower the crossing count (net < 0) or keep it while
/// lowering a deterministic tie measure: the id sum of the crossings traded
/// (dips), or the bend side rule (corners).
std::vector<Site> find_sites(const CombinatorialMap& m, const std::set<int>& moving,
                             const std::set<int>& walls_fixed, const std::set<int>& all_fixed,
                             bool union_pass, bool include_normalizing) {
  FamilyView fam{&moving, &walls_fixed};
  std::set<int> wall_comps = moving;
  wall_comps.insert(walls_fixed.begin(), walls_fixed.end());
  RegionAnalysis an = surfmap::regions(m, wall_comps);
  std::vector<std::uint32_t> vix = surfmap::vertex_index(m);
  std::vector<std::uint8_t> fwd;
  if (union_pass) fwd = forward_table(m);

  // A fixed component crossing no wall floats inside one piece, invisible to
  // the boundary walk and the crossing accounting alike; a sweep across that
  // piece would drag the strand over it, so the piece is off limits.
  std::vector<std::uint8_t> blocked(an.pieces.size(), 0);
  for (int f : all_fixed) {
    if (wall_comps.count(f)) continue;
    bool touches = false;
    for (int w : wall_comps) {
      if (surfmap::count_crossings(m, f, w) != 0) {
        touches = true;
        break;
      }
    }
    if (touches) continue;
    Dart d = m.darts_of_component(f).front();
    blocked[an.left_piece[d]] = 1;
    blocked[an.right_piece[d]] = 1;
  }

  std::vector<Site> sites;
  for (const BoundaryCircle& circle : an.circles) {
    const surfmap::RegionPiece& piece = an.pieces[circle.piece];
    if (piece.genus != 0) continue;
    // Sweeps are isotopies only across a disc: any further boundary circle,
    // turned or not, is a hole the strand must not pass over.
    if (piece.circles.size() != 1) continue;
    if (blocked[circle.piece]) continue;
    if (circle.turn_count() == 0) continue;

    std::size_t n = circle.scars.size();
    std::vector<Role> roles(n);
    std::vector<std::size_t> tips;
    std::size_t bend_at = surfmap::kNoIndex;
    int bends = 0;
    bool bad = false;
    for (std::size_t i = 0; i < n && !bad; ++i) {
      roles[i] = classify_corner(m, circle.corners[i], fam);
      switch (roles[i]) {
        case Role::bad: bad = true; break;
        case Role::bend:
          ++bends;
          bend_at = i;
          break;
        case Role::tip_cross:
        case Role::tip_attach: tips.push_back(i); break;
        case Role::flat: break;
      }
    }
    if (bad || tips.size() != 2) continue;

    Site site;
    bool attach0 = roles[tips[0]] == Role::tip_attach;
    bool attach1 = roles[tips[1]] == Role::tip_attach;
    if (attach0 && attach1) continue;
    site.half = attach0 || attach1;

    if (!site.half) {
      const BoundaryCorner& c0 = circle.corners[tips[0]];
      const BoundaryCorner& c1 = circle.corners[tips[1]];
      if (vix[c0.out_germ] == vix[c1.out_germ]) continue;  // pinched disc
    }
    if (union_pass) {
      // Only single-corner discs act here: an endpoint sliding past one
      // fixed-fixed crossing, or the equal-cost corner passage of a closed
      // strand.  More corners would add more crossings than the move saves.
      if (bends != 1) continue;
      if (!site.half) {
        if (!include_normalizing) continue;
        if (bend_side_legal(m, circle.corners[bend_at], fwd)) continue;
        // Only the strand's own corner triangle shows up here: the
        // complementary region through the rest of the surface presents the
        // same one-bend shape on the opposite sector, but it carries extra
        // boundary circles and the disc requirement above already drops it
        // (two bare complementary discs would close the surface to a sphere).
      }
    } else if (bends != 0) {
      continue;  // unreachable: group members never cross each other
    }

    // Scars between the tip corners: corners[i] sits after scars[i], so the
    // segment (tips[0], tips[1]] runs from one tip to the other.
    std::vector<Dart> seg_a, seg_b;
    for (std::size_t i = tips[0] + 1; i <= tips[1]; ++i) seg_a.push_back(circle.scars[i]);
    for (std::size_t i = tips[1] + 1; i < n; ++i) seg_b.push_back(circle.scars[i]);
    for (std::size_t i = 0; i <= tips[0]; ++i) seg_b.push_back(circle.scars[i]);

    auto family_of_seg = [&](const std::vector<Dart>& seg) {
      Family f = fam.of(m.component(seg.front()));
      for (Dart d : seg) {
        if (fam.of(m.component(d)) != f)
          throw std::logic_error("minimal_position: mixed families between turns");
      }
      return f;
    };
    Family fa = family_of_seg(seg_a);
    Family fb = family_of_seg(seg_b);
    if (fa == fb || fa == Family::other || fb == Family::other)
      throw std::logic_error("minimal_position: circle segments defy wall families");
    bool run_is_a = fa == Family::moving;
    site.run = run_is_a ? seg_a : seg_b;
    site.path = run_is_a ? seg_b : seg_a;
    if (site.half) site.attach_first = run_is_a ? attach0 : attach1;

    // Crossing accounting.  Tips and fixed chords over the run go away; the
    // sweep re-crosses fixed germs sitting on the far side of the path.
    long removed_sum = 0, added_sum = 0;
    int removed = 0, added = 0;
    for (std::size_t i : tips) {
      const BoundaryCorner& c = circle.corners[i];
      if (roles[i] == Role::tip_attach) continue;  // attachments are not crossings
      int fc = fam.of(m.component(c.in_germ)) == Family::fixed ? m.component(c.in_germ)
                                                               : m.component(c.out_germ);
      ++removed;
      removed_sum += fc;
    }
    for (std::size_t t = 0; t + 1 < site.run.size(); ++t) {
      Dart back = m.alpha(site.run[t]);
      if (m.valence(back) != 4) continue;  // marked point, refused at execution
      int tc = m.component(m.sigma(back));
      if (all_fixed.count(tc)) {
        ++removed;
        removed_sum += tc;
      }
    }
    if (!site.half) {
      for (Dart g : pierce_list(m, site.path)) {
        int pc = m.component(g);
        if (all_fixed.count(pc)) {
          ++added;
          added_sum += pc;
        }
      }
    }
    site.net = added - removed;
    if (site.net > 0) continue;
    if (site.net == 0) {
      if (!include_normalizing) continue;
      // Equal trades settle on crossing the smaller component ids.
      if (!union_pass && added_sum >= removed_sum) continue;
    }

    site.key = *std::min_element(circle.scars.begin(), circle.scars.end());
    sites.push_back(std::move(site));
  }
  return sites;
}

const Site* select_site(const std::vector<Site>& sites) {
  const Site* best = nullptr;
  for (const Site& s : sites) {
    if (!best || s.key < best->key || (s.key == best->key && s.half && !best->half))
      best = &s;
  }
  return best;
}

/// Germ at an interior run vertex that survives deleting the run.  Marked
/// base points and attached arcs inside the run have no resting place after
/// the sweep, so they are refused rather than silently dropped.
Dart run_bystander_germ(const MapEditor& ed, Dart back_germ) {
  int val = ed.valence(back_germ);
  if (val == 4) return ed.sigma(back_germ);
  if (val == 2 && ed.marked(back_germ))
    throw std::logic_error("minimal_position: base point inside a swept strand");
  throw std::logic_error("minimal_position: attachment inside a swept strand");
}

void reseat_orientation(MapEditor& ed, int comp, const std::vector<Dart>& run, Dart along,
                        Dart against) {
  Dart o = ed.orientation_dart(comp);
  if (o == kNoDart) return;
  for (Dart d : run) {
    if (o == d) {
      ed.set_orientation(comp, along);
      return;
    }
    if (o == ed.alpha(d)) {
      ed.set_orientation(comp, against);
      return;
    }
  }
}

/// Smoothing the last vertex of a component would leave a circle touching
/// nothing, and a free circle cannot be embedded in a connected dart
/// structure, so such sweeps are refused.
void smooth_or_refuse(MapEditor& ed, Dart d) {
  if (ed.alpha(d) == ed.sigma(d))
    throw std::invalid_argument(
        "minimal_position: sweep would leave a component disjoint from the surface graph");
  ed.smooth_vertex(d);
}

/// Sweep the run across the disc: both tip crossings dissolve and the strand
/// re-enters along the far side of the path, re-crossing in order whatever
/// the path carries there.
void execute_full(MapEditor& ed, const Site& s, const std::set<int>& moving) {
  Dart rx = s.run.front();
  Dart ry = ed.alpha(s.run.back());
  Dart mu_x = ed.sigma(ed.sigma(rx));
  Dart nu_y = ed.sigma(ed.sigma(ry));
  Dart fx_in = ed.alpha(s.path.back());
  Dart fy_out = s.path.front();
  int mc = ed.label(rx).component;

  // Far-side germs, collected walking the path from the tip after the run
  // back toward the one before it, then crossed in reverse.
  std::vector<Dart> pierce;
  for (std::size_t t = 0; t + 1 < s.path.size(); ++t) {
    Dart in = ed.alpha(s.path[t]);
    Dart next = s.path[t + 1];
    Dart g1 = ed.sigma(in);
    if (g1 != next) pierce.push_back(g1);
    Dart g2 = ed.sigma_inv(next);
    if (g2 != in && g2 != g1) pierce.push_back(g2);
  }
  for (Dart g : pierce) {
    if (moving.count(ed.label(g).component))
      throw std::logic_error("minimal_position: sweep would hit another moving strand");
  }

  std::vector<Dart> bystander;
  for (std::size_t t = 0; t + 1 < s.run.size(); ++t)
    bystander.push_back(run_bystander_germ(ed, ed.alpha(s.run[t])));

  reseat_orientation(ed, mc, s.run, ed.alpha(mu_x), mu_x);

  if (pierce.empty() && ed.alpha(mu_x) == nu_y)
    throw std::invalid_argument(
        "minimal_position: sweep would leave a component disjoint from the surface graph");

  ed.detach(rx);
  ed.detach(mu_x);
  ed.detach(ry);
  ed.detach(nu_y);
  smooth_or_refuse(ed, fx_in);
  smooth_or_refuse(ed, fy_out);
  for (Dart d : s.run) ed.delete_edge(d);
  for (Dart q : bystander) smooth_or_refuse(ed, q);

  if (pierce.empty()) {
    // Temporary bivalent joint, smoothed away by finish(); the surviving
    // side of the strand still carries vertices, checked above.
    ed.make_vertex(mu_x);
    ed.splice_after(mu_x, nu_y);
    return;
  }
  EdgeLabel lbl = ed.label(mu_x);
  Dart in = mu_x;
  for (std::size_t i = pierce.size(); i-- > 0;) {
    Dart out = nu_y;
    Dart next_in = kNoDart;
    if (i > 0) {
      auto fresh = ed.new_edge(lbl);
      out = fresh.first;
      next_in = fresh.second;
    }
    ed.pierce_before_vertex(pierce[i], in, out, /*from_right=*/false);
    in = next_in;
  }
}

/// Slide the arc endpoint along its host until the tip crossing unwinds.
/// With a straight path the endpoint stops just past the absorbed crossing.
/// With one fixed-fixed corner on the path the endpoint stops just past that
/// corner instead, and the freed arc end hugs the far side of the crossed
/// strand back to where the tip was, re-crossing whatever sits there.
void execute_half(MapEditor& ed, const Site& s, const std::set<int>& moving) {
  Dart a_p, r_t, f_t;
  if (s.attach_first) {
    a_p = s.run.front();
    r_t = ed.alpha(s.run.back());
    f_t = s.path.front();
  } else {
    a_p = ed.alpha(s.run.back());
    r_t = s.run.front();
    f_t = ed.alpha(s.path.back());
  }
  Dart nu = ed.sigma(ed.sigma(r_t));
  Dart host_p = ed.sigma(a_p);
  int mc = ed.label(a_p).component;

  // Locate the corner on the path, if any, and collect the far-side germs
  // the freed end will cross between the old tip and that corner; the germs
  // run tipward, matching the new track's travel.
  std::size_t corner = s.path.size();
  for (std::size_t t = 0; t + 1 < s.path.size(); ++t) {
    if (ed.label(s.path[t]).component != ed.label(s.path[t + 1]).component) {
      corner = t;
      break;
    }
  }
  Dart attach_host = kNoDart;
  bool left_side = false;
  std::vector<Dart> pierce;
  bool pierce_from_right = false;
  if (corner == s.path.size()) {
    Dart fb = ed.sigma(ed.sigma(f_t));
    attach_host = fb;
    left_side = ed.sigma(fb) == nu;
  } else {
    Dart in_b = ed.alpha(s.path[corner]);
    Dart out_b = s.path[corner + 1];
    if (ed.sigma(out_b) != in_b)
      throw std::logic_error("minimal_position: slide corner is not a direct turn");
    std::size_t lo, hi;
    if (s.attach_first) {
      // Path walks tip -> corner -> endpoint; the track follows it.
      lo = 0;
      hi = corner;
      attach_host = ed.sigma(ed.sigma(out_b));
      left_side = false;
      pierce_from_right = true;
    } else {
      // Path walks endpoint -> corner -> tip; the track runs against it.
      lo = corner + 1;
      hi = s.path.size() - 1;
      attach_host = ed.sigma(ed.sigma(in_b));
      left_side = true;
      pierce_from_right = false;
    }
    for (std::size_t t = lo; t < hi; ++t) {
      Dart in = ed.alpha(s.path[t]);
      Dart next = s.path[t + 1];
      Dart g1 = ed.sigma(in);
      if (g1 != next) pierce.push_back(g1);
      Dart g2 = ed.sigma_inv(next);
      if (g2 != in && g2 != g1) pierce.push_back(g2);
    }
    if (!s.attach_first) std::reverse(pierce.begin(), pierce.end());
    for (Dart g : pierce) {
      if (moving.count(ed.label(g).component))
        throw std::logic_error("minimal_position: slide would hit another moving strand");
    }
  }

  Dart along = s.attach_first ? nu : ed.alpha(nu);
  reseat_orientation(ed, mc, s.run, along, ed.alpha(along));

  std::vector<Dart> bystander;
  for (std::size_t t = 0; t + 1 < s.run.size(); ++t)
    bystander.push_back(run_bystander_germ(ed, ed.alpha(s.run[t])));

  ed.detach(r_t);
  ed.detach(nu);
  ed.detach(a_p);
  smooth_or_refuse(ed, host_p);
  for (Dart d : s.run) ed.delete_edge(d);
  for (Dart q : bystander) smooth_or_refuse(ed, q);

  Dart end = nu;
  if (!pierce.empty()) {
    EdgeLabel lbl = ed.label(nu);
    Dart in = nu;
    for (std::size_t i = 0; i < pierce.size(); ++i) {
      auto fresh = ed.new_edge(lbl);
      ed.pierce_before_vertex(pierce[i], in, fresh.first, pierce_from_right);
      in = fresh.second;
    }
    end = in;
  }
  // The straight-path attach host sits at the old tip vertex, so the tip is
  // smoothed only after the arc end is re-seated next to it.
  ed.attach_before_vertex(attach_host, end, left_side);
  smooth_or_refuse(ed, f_t);
}

std::vector<std::set<int>> disjoint_groups(const CombinatorialMap& m, const std::set<int>& fixed) {
  std::vector<std::set<int>> groups;
  for (int comp : fixed) {
    bool placed = false;
    for (std::set<int>& g : groups) {
      bool clear = true;
      for (int other : g) {
        if (surfmap::count_crossings(m, comp, other) != 0) {
          clear = false;
          break;
        }
      }
      if (clear) {
        g.insert(comp);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({comp});
  }
  return groups;
}

void check_preconditions(const CombinatorialMap& cfg, const std::set<int>& moving,
                         const std::set<int>& fixed) {
  if (!surfmap::validate(cfg).ok())
    throw std::invalid_argument("minimal_position: configuration invalid");
  for (int c : moving) {
    if (!cfg.has_component(c))
      throw std::invalid_argument("minimal_position: missing moving component");
    if (fixed.count(c))
      throw std::invalid_argument("minimal_position: component both moving and fixed");
    if (surfmap::count_crossings(cfg, c, c) != 0)
      throw std::invalid_argument("minimal_position: moving component crosses itself");
  }
  for (int c : fixed) {
    if (!cfg.has_component(c))
      throw std::invalid_argument("minimal_position: missing fixed component");
    if (surfmap::count_crossings(cfg, c, c) != 0)
      throw std::invalid_argument("minimal_position: fixed component crosses itself");
  }
  for (auto a = moving.begin(); a != moving.end(); ++a) {
    for (auto b = std::next(a); b != moving.end(); ++b) {
      if (surfmap::count_crossings(cfg, *a, *b) != 0)
        throw std::invalid_argument("minimal_position: moving components cross each other");
    }
  }
}

}  // namespace

CombinatorialMap minimal_position(const CombinatorialMap& cfg, const std::set<int>& moving,
                                  const std::set<int>& fixed) {
  check_preconditions(cfg, moving, fixed);
  if (moving.empty() || fixed.empty()) return cfg;

  std::vector<std::set<int>> groups = disjoint_groups(cfg, fixed);
  std::size_t crossings = surfmap::count_crossings(cfg, moving, fixed);
  // Crossing parity per pair is an isotopy invariant except when an endpoint
  // slide absorbs or spawns single crossings of its own arc; any other odd
  // change proves a move swept across topology it should not have.
  std::vector<int> mlist(moving.begin(), moving.end());
  std::vector<int> flist(fixed.begin(), fixed.end());
  auto pair_parity = [&](const CombinatorialMap& m) {
    std::vector<std::uint8_t> out;
    for (int mc : mlist)
      for (int fc : flist)
        out.push_back(static_cast<std::uint8_t>(surfmap::count_crossings(m, mc, fc) & 1));
    return out;
  };
  std::vector<std::uint8_t> parity = pair_parity(cfg);
  // Reducing moves are bounded by the crossing count, trades by the id sum;
  // corner passages lack a proven bound, so overrunning this generous budget
  // reports a cycle instead of spinning.
  long budget = 64 + 8 * static_cast<long>(crossings + 4) * static_cast<long>(fixed.size() + 4);

  CombinatorialMap cur = cfg;
  bool changed = false;
  for (;;) {
    std::vector<Site> sites;
    for (const std::set<int>& g : groups) {
      std::vector<Site> found = find_sites(cur, moving, g, fixed, /*union_pass=*/false,
                                           /*include_normalizing=*/true);
      sites.insert(sites.end(), found.begin(), found.end());
    }
    if (sites.empty())
      sites = find_sites(cur, moving, fixed, fixed, /*union_pass=*/true,
                         /*include_normalizing=*/true);
    const Site* chosen = select_site(sites);
    if (!chosen) break;
#ifdef POSITION_TRACE
    std::fprintf(stderr, "[pos] %s net=%d key=%u run=", chosen->half ? "half" : "full",
                 chosen->net, chosen->key);
    for (Dart d : chosen->run) std::fprintf(stderr, "%u(c%d) ", d, cur.component(d));
    std::fprintf(stderr, "path=");
    for (Dart d : chosen->path) std::fprintf(stderr, "%u(c%d) ", d, cur.component(d));
    std::fprintf(stderr, "x=%zu budget=%ld\n", crossings, budget);
#endif
    if (budget-- == 0) throw std::logic_error("minimal_position: normalization did not stabilize");

    int expected = chosen->net;
    const int moved_comp = cur.component(chosen->run.front());
    const bool was_half = chosen->half;
    MapEditor ed(cur);
    if (chosen->half)
      execute_half(ed, *chosen, moving);
    else
      execute_full(ed, *chosen, moving);
    cur = ed.finish().map;
    changed = true;

    std::size_t now = surfmap::count_crossings(cur, moving, fixed);
    if (static_cast<long>(now) != static_cast<long>(crossings) + expected)
      throw std::logic_error("minimal_position: sweep changed crossings unexpectedly");
    std::vector<std::uint8_t> now_parity = pair_parity(cur);
    for (std::size_t i = 0; i < mlist.size(); ++i) {
      if (was_half && mlist[i] == moved_comp) continue;
      for (std::size_t j = 0; j < flist.size(); ++j) {
        if (now_parity[i * flist.size() + j] != parity[i * flist.size() + j])
          throw std::logic_error("minimal_position: sweep changed a crossing parity");
      }
    }
    parity = std::move(now_parity);
    crossings = now;
    for (int c : moving) {
      if (surfmap::count_crossings(cur, c, c) != 0)
        throw std::logic_error("minimal_position: sweep broke strand embedding");
    }
  }
  return changed ? cur : cfg;
}

bool has_removable_disk(const CombinatorialMap& cfg, const std::set<int>& moving,
                        const std::set<int>& fixed) {
  check_preconditions(cfg, moving, fixed);
  if (moving.empty() || fixed.empty()) return false;
  for (const std::set<int>& g : disjoint_groups(cfg, fixed)) {
    if (!find_sites(cfg, moving, g, fixed, /*union_pass=*/false, /*include_normalizing=*/false)
             .empty())
      return true;
  }
  // Endpoint slides across another family's component also lower the count.
  for (const Site& s : find_sites(cfg, moving, fixed, fixed, /*union_pass=*/true,
                                  /*include_normalizing=*/false)) {
    if (s.half) return true;
  }
  return false;
}

std::size_t intersection_number(const CombinatorialMap& cfg, const std::set<int>& a,
                                const std::set<int>& b) {
  if (a.empty() || b.empty()) return 0;
  std::set<int> common;
  for (int c : a) {
    if (b.count(c)) common.insert(c);
  }
  if (!common.empty()) {
    std::set<int> ar, br;
    for (int c : a) {
      if (!common.count(c)) ar.insert(c);
    }
    for (int c : b) {
      if (!common.count(c)) br.insert(c);
    }
    return intersection_number(cfg, ar, b) + intersection_number(cfg, common, br);
  }
  auto internally_disjoint = [&](const std::set<int>& fam) {
    for (auto i = fam.begin(); i != fam.end(); ++i) {
      if (surfmap::count_crossings(cfg, *i, *i) != 0) return false;
      for (auto j = std::next(i); j != fam.end(); ++j) {
        if (surfmap::count_crossings(cfg, *i, *j) != 0) return false;
      }
    }
    return true;
  };
  if (internally_disjoint(a)) return surfmap::count_crossings(minimal_position(cfg, a, b), a, b);
  if (internally_disjoint(b)) return surfmap::count_crossings(minimal_position(cfg, b, a), a, b);
  throw std::invalid_argument("intersection_number: neither family is embedded and disjoint");
}

}  // namespace handlebody
