#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "surfmap/canonical.hpp"
#include "surfmap/cut.hpp"
#include "surfmap/editor.hpp"
#include "surfmap/io.hpp"
#include "surfmap/map.hpp"

using namespace surfmap;

namespace {

// Independent orbit counter (union-find) used to cross-check every count the
// library derives by orbit walking.
std::size_t orbit_count_oracle(const std::vector<Dart>& perm) {
  std::vector<std::size_t> parent(perm.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t d = 0; d < perm.size(); ++d) {
    std::size_t a = find(d), b = find(perm[d]);
    if (a != b) parent[a] = b;
  }
  std::size_t n = 0;
  for (std::size_t d = 0; d < perm.size(); ++d)
    if (find(d) == d) ++n;
  return n;
}

long chi_oracle(const CombinatorialMap& m) {
  std::vector<Dart> phi(m.dart_count());
  for (Dart d = 0; d < m.dart_count(); ++d) phi[d] = m.phi(d);
  return static_cast<long>(orbit_count_oracle(m.sigma_table())) -
         static_cast<long>(m.edge_count()) + static_cast<long>(orbit_count_oracle(phi));
}

CombinatorialMap relabel(const CombinatorialMap& m, const std::vector<Dart>& pi) {
  std::size_t n = m.dart_count();
  std::vector<Dart> alpha(n), sigma(n);
  std::vector<EdgeLabel> labels(n);
  std::vector<std::uint8_t> marked(n);
  for (Dart d = 0; d < n; ++d) {
    alpha[pi[d]] = pi[m.alpha(d)];
    sigma[pi[d]] = pi[m.sigma(d)];
    labels[pi[d]] = m.label(d);
    marked[pi[d]] = m.marked(d);
  }
  std::map<int, Dart> orientation;
  for (auto [comp, dart] : m.orientation_table()) orientation[comp] = pi[dart];
  return CombinatorialMap(alpha, sigma, labels, marked, orientation);
}

// One vertex, two curve components crossing once.
CombinatorialMap torus() {
  std::vector<Dart> alpha = {1, 0, 3, 2};
  std::vector<Dart> sigma = {2, 3, 1, 0};  // rotation (0 2 1 3)
  std::vector<EdgeLabel> labels = {{0, EdgeKind::curve},
                                   {0, EdgeKind::curve},
                                   {1, EdgeKind::curve},
                                   {1, EdgeKind::curve}};
  return CombinatorialMap(alpha, sigma, labels);
}

// One vertex of valence 8, four components: genus 2, not a curve
// configuration.
CombinatorialMap octagon() {
  std::vector<Dart> alpha = {1, 0, 3, 2, 5, 4, 7, 6};
  std::vector<Dart> sigma(8);
  std::vector<Dart> rotation = {0, 2, 1, 3, 4, 6, 5, 7};
  for (std::size_t i = 0; i < 8; ++i) sigma[rotation[i]] = rotation[(i + 1) % 8];
  std::vector<EdgeLabel> labels(8);
  for (Dart d = 0; d < 8; ++d) labels[d] = {static_cast<int>(d / 2), EdgeKind::curve};
  return CombinatorialMap(alpha, sigma, labels);
}

CombinatorialMap marked_circle() {
  std::vector<Dart> alpha = {1, 0};
  std::vector<Dart> sigma = {1, 0};
  std::vector<EdgeLabel> labels = {{0, EdgeKind::curve}, {0, EdgeKind::curve}};
  std::vector<std::uint8_t> marked = {1, 0};
  return CombinatorialMap(alpha, sigma, labels, marked);
}

// Two circles on the sphere crossing twice, bounding two bigons.
CombinatorialMap double_bigon() {
  std::vector<Dart> alpha = {1, 0, 3, 2, 5, 4, 7, 6};
  std::vector<Dart> sigma(8);
  std::vector<Dart> v1 = {0, 4, 3, 7}, v2 = {1, 6, 2, 5};
  for (std::size_t i = 0; i < 4; ++i) {
    sigma[v1[i]] = v1[(i + 1) % 4];
    sigma[v2[i]] = v2[(i + 1) % 4];
  }
  std::vector<EdgeLabel> labels(8);
  for (Dart d = 0; d < 8; ++d) labels[d] = {d < 4 ? 0 : 1, EdgeKind::curve};
  return CombinatorialMap(alpha, sigma, labels);
}

// Circle (component 0) with a chord arc (component 1) attached at two
// points, drawn on the sphere.
CombinatorialMap circle_with_chord() {
  std::vector<Dart> alpha = {1, 0, 3, 2, 5, 4};
  std::vector<Dart> sigma(6);
  std::vector<Dart> v1 = {0, 4, 3}, v2 = {2, 5, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    sigma[v1[i]] = v1[(i + 1) % 3];
    sigma[v2[i]] = v2[(i + 1) % 3];
  }
  std::vector<EdgeLabel> labels(6);
  for (Dart d = 0; d < 6; ++d) labels[d] = {d < 4 ? 0 : 1, EdgeKind::curve};
  return CombinatorialMap(alpha, sigma, labels);
}

}  // namespace

TEST_CASE("fixture counts match the union-find oracle") {
  for (const CombinatorialMap& m :
       {torus(), octagon(), marked_circle(), double_bigon(), circle_with_chord()}) {
    CHECK(euler_characteristic(m) == chi_oracle(m));
    CHECK(vertices(m).size() == orbit_count_oracle(m.sigma_table()));
    std::vector<Dart> phi(m.dart_count());
    for (Dart d = 0; d < m.dart_count(); ++d) phi[d] = m.phi(d);
    CHECK(faces(m).size() == orbit_count_oracle(phi));
  }
}

TEST_CASE("torus: genus one, transverse configuration") {
  CombinatorialMap m = torus();
  CHECK(vertices(m).size() == 1);
  CHECK(m.edge_count() == 2);
  CHECK(faces(m).size() == 1);
  CHECK(genus(m) == 1);
  ValidityReport r = validate(m);
  CHECK(r.structural_ok);
  CHECK(r.configuration_ok);
  CHECK(count_crossings(m, 0, 1) == 1);
  Strand s = component_strand(m, 0);
  CHECK(s.closed);
  CHECK(s.darts.size() == 1);
  CHECK(is_closed_component(m, 0));
}

TEST_CASE("octagon: structural genus two, invalid configuration") {
  CombinatorialMap m = octagon();
  ValidityReport r = validate(m);
  CHECK(r.structural_ok);
  CHECK_FALSE(r.configuration_ok);
  CHECK(genus(m) == 2);  // genus only needs structural validity
}

TEST_CASE("marked circle on the sphere") {
  CombinatorialMap m = marked_circle();
  CHECK(genus(m) == 0);
  CHECK(faces(m).size() == 2);
  CHECK(validate(m).ok());
}

TEST_CASE("double bigon: sphere, two crossings") {
  CombinatorialMap m = double_bigon();
  CHECK(genus(m) == 0);
  CHECK(validate(m).ok());
  CHECK(count_crossings(m, 0, 1) == 2);
  CHECK(crossing_vertices(m, 0, 1).size() == 2);
}

TEST_CASE("circle with chord: attachments and arc endpoints") {
  CombinatorialMap m = circle_with_chord();
  CHECK(genus(m) == 0);
  CHECK(validate(m).ok());
  CHECK_FALSE(is_closed_component(m, 1));
  CHECK(arc_endpoint_darts(m, 1).size() == 2);
  Strand s = component_strand(m, 1);
  CHECK_FALSE(s.closed);
  CHECK(s.darts.size() == 1);
}

TEST_CASE("structural failures are reported, genus refuses them") {
  // alpha fixed point
  std::vector<Dart> alpha = {0, 1};
  std::vector<Dart> sigma = {1, 0};
  std::vector<EdgeLabel> labels(2);
  CombinatorialMap bad(alpha, sigma, labels);
  CHECK_FALSE(validate(bad).structural_ok);
  CHECK_THROWS_AS(genus(bad), std::invalid_argument);

  // disconnected: two marked circles
  std::vector<Dart> alpha2 = {1, 0, 3, 2};
  std::vector<Dart> sigma2 = {1, 0, 3, 2};
  std::vector<EdgeLabel> labels2 = {{0, EdgeKind::curve},
                                    {0, EdgeKind::curve},
                                    {1, EdgeKind::curve},
                                    {1, EdgeKind::curve}};
  std::vector<std::uint8_t> marked2 = {1, 0, 1, 0};
  CombinatorialMap disc(alpha2, sigma2, labels2, marked2);
  CHECK_FALSE(validate(disc).structural_ok);

  // label disagreement across an edge
  std::vector<EdgeLabel> labels3 = {{0, EdgeKind::curve},
                                    {1, EdgeKind::curve},
                                    {1, EdgeKind::curve},
                                    {1, EdgeKind::curve}};
  CombinatorialMap mislabeled({1, 0, 3, 2}, {2, 3, 1, 0}, labels3);
  CHECK_FALSE(validate(mislabeled).structural_ok);
}

TEST_CASE("strand navigation through crossings and attachments") {
  CombinatorialMap m = double_bigon();
  Strand a = component_strand(m, 0);
  CHECK(a.closed);
  CHECK(a.darts.size() == 2);
  // strand_next after dart 0 continues on component 0
  auto n = strand_next(m, 0);
  REQUIRE(n.has_value());
  CHECK(m.component(*n) == 0);

  CombinatorialMap c = circle_with_chord();
  // entering v1 along the chord: the strand ends there
  CHECK_FALSE(strand_next(c, 5).has_value());
  // the circle continues through the attachment
  auto cont = strand_next(c, 0);
  REQUIRE(cont.has_value());
  CHECK(c.component(*cont) == 0);
}

TEST_CASE("editor: split then smooth returns the same map") {
  CombinatorialMap m = torus();
  MapEditor ed(m);
  ed.split_edge(0);
  auto split = ed.finish(false);
  CHECK(split.map.dart_count() == 6);
  CHECK(genus(split.map) == 1);
  CHECK(validate(split.map).structural_ok);
  CHECK_FALSE(validate(split.map).configuration_ok);  // unmarked bivalent vertex

  MapEditor ed2(split.map);
  auto smoothed = ed2.finish(true);
  CHECK(smoothed.map.dart_count() == 4);
  CHECK(canonical_form(smoothed.map) == canonical_form(m));
}

TEST_CASE("editor: deleting a component that hosts an arc is refused") {
  CombinatorialMap m = circle_with_chord();
  MapEditor ed(m);
  CHECK_THROWS_AS(ed.delete_components({0}), std::logic_error);

  MapEditor ed2(m);
  ed2.delete_components({1});
  auto out = ed2.finish();
  // both attachment vertices smooth away except the last one, which would
  // leave a vertex-free circle
  CHECK(out.map.dart_count() == 2);
  CHECK(validate(out.map).structural_ok);
}

TEST_CASE("editor: smoothing the last vertex of a circle is refused") {
  CombinatorialMap m = marked_circle();
  MapEditor ed(m);
  ed.set_mark(0, false);
  CHECK_THROWS_AS(ed.smooth_vertex(0), std::logic_error);
  auto out = ed.finish(true);
  CHECK(out.map.dart_count() == 2);
  CHECK_FALSE(validate(out.map).configuration_ok);
}

TEST_CASE("insert_strand: parallel copy of a torus curve") {
  CombinatorialMap m = torus();
  for (bool right : {false, true}) {
    StrandPlan plan = plan_parallel_component(m, 0, right, {2, EdgeKind::curve});
    CHECK(plan.steps.size() == 1);
    MapEditor ed(m);
    insert_strand(ed, plan);
    auto out = ed.finish();
    CHECK(genus(out.map) == 1);
    CHECK(validate(out.map).ok());
    CHECK(count_crossings(out.map, 2, 1) == 1);
    CHECK(count_crossings(out.map, 2, 0) == 0);
    CHECK(is_closed_component(out.map, 2));
    CHECK(out.map.orientation_dart(2) != kNoDart);

    // the curve and its copy cobound two annuli
    auto pieces = cut_along(out.map, {0, 2});
    REQUIRE(pieces.size() == 2);
    for (const CutPiece& p : pieces) {
      CHECK(p.genus == 0);
      CHECK(p.boundary_count == 2);
    }
  }
}

TEST_CASE("insert_strand: chord across a curve") {
  CombinatorialMap m = torus();
  StrandPlan plan;
  plan.label = {2, EdgeKind::curve};
  plan.front = StrandEnd{2, 0.3, false};
  plan.back = StrandEnd{2, 0.7, false};
  MapEditor ed(m);
  insert_strand(ed, plan);
  auto out = ed.finish();
  CHECK(genus(out.map) == 1);
  CHECK(validate(out.map).ok());
  CHECK_FALSE(is_closed_component(out.map, 2));
  CHECK(arc_endpoint_darts(out.map, 2).size() == 2);
}

TEST_CASE("insert_strand: crossing directions carry algebraic intersection") {
  // opposite-direction double crossings cancel (sphere); same-direction ones
  // cannot embed there and force a handle
  CombinatorialMap m = marked_circle();
  for (bool first : {false, true}) {
    for (bool second : {false, true}) {
      StrandPlan plan;
      plan.label = {1, EdgeKind::curve};
      plan.steps.push_back({0, 0.3, first});
      plan.steps.push_back({0, 0.6, second});
      MapEditor ed(m);
      insert_strand(ed, plan);
      auto out = ed.finish();
      CHECK(genus(out.map) == (first == second ? 1 : 0));
      CHECK(validate(out.map).ok());
      CHECK(count_crossings(out.map, 0, 1) == 2);
    }
  }
}

TEST_CASE("cut_along: torus along one curve gives a capped annulus") {
  CombinatorialMap m = torus();
  auto pieces = cut_along(m, {0});
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].genus == 0);
  CHECK(pieces[0].boundary_count == 2);
  CHECK(validate(pieces[0].map).structural_ok);
  // scars keep the wall component's label
  int scar_count = 0;
  for (Dart d = 0; d < pieces[0].map.dart_count(); ++d)
    if (pieces[0].scar_side[d] != 0) {
      ++scar_count;
      CHECK(pieces[0].map.component(d) == 0);
      CHECK(pieces[0].provenance[d] <= 1);
    }
  CHECK(scar_count == 4);
}

TEST_CASE("regions: slicing a one-vertex genus-two map drops one handle") {
  // the valence-8 vertex has no strand structure, so this stays at the
  // region-engine level; cut_along would refuse the walk
  CombinatorialMap m = octagon();
  CHECK_THROWS(cut_along(m, {0}));
  RegionAnalysis a = regions(m, std::set<int>{0});
  REQUIRE(a.pieces.size() == 1);
  CHECK(a.pieces[0].genus == 1);
  CHECK(a.circles.size() == 2);
  long bordered = 2 - 2 * a.pieces[0].genus - static_cast<long>(a.circles.size());
  CHECK(bordered == euler_characteristic(m));
}

TEST_CASE("cut_along: sphere along a circle separates, severing the crosser") {
  CombinatorialMap m = double_bigon();
  auto pieces = cut_along(m, {0});
  REQUIRE(pieces.size() == 2);
  for (const CutPiece& p : pieces) {
    CHECK(p.genus == 0);
    CHECK(p.boundary_count == 1);
    CHECK(validate(p.map).ok());  // crossings became attachments
    bool has_arc = false;
    for (Dart d = 0; d < p.map.dart_count(); ++d)
      if (p.map.component(d) == 1) has_arc = true;
    CHECK(has_arc);
  }
}

TEST_CASE("cut_along: bordered Euler characteristics add up to the source") {
  for (const CombinatorialMap& m : {torus(), double_bigon(), circle_with_chord()}) {
    auto pieces = cut_along(m, {0});
    long total = 0;
    for (const CutPiece& p : pieces)
      total += euler_characteristic(p.map) - static_cast<long>(p.boundary_count);
    CHECK(total == euler_characteristic(m));
  }
}

TEST_CASE("cut_along rejects open walls and crossing walls") {
  CHECK_THROWS_AS(cut_along(circle_with_chord(), {1}), std::invalid_argument);
  CHECK_THROWS_AS(cut_along(double_bigon(), {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cut_along(torus(), {7}), std::invalid_argument);
}

TEST_CASE("regions: side lookup and boundary walks on the torus") {
  CombinatorialMap m = torus();
  RegionAnalysis a = regions(m, std::set<int>{0});
  REQUIRE(a.pieces.size() == 1);
  CHECK(a.pieces[0].genus == 0);
  REQUIRE(a.circles.size() == 2);
  CHECK(a.left_piece[0] == 0);
  CHECK(a.right_piece[0] == 0);
  for (const BoundaryCircle& c : a.circles) {
    REQUIRE(c.scars.size() == 1);
    REQUIRE(c.corners.size() == 1);
    CHECK(c.corners[0].kind == CornerKind::flat_through);
    CHECK(c.corners[0].interior.size() == 1);
    CHECK(m.component(c.corners[0].interior[0]) == 1);
    CHECK(c.turn_count() == 0);
  }
  CHECK(a.scar_circle[0] != a.scar_circle[1]);
}

TEST_CASE("regions: attachment walls make slit and attachment corners") {
  CombinatorialMap m = circle_with_chord();
  RegionAnalysis a = regions(m, std::set<int>{1});  // cut along the chord
  REQUIRE(a.pieces.size() == 1);
  REQUIRE(a.circles.size() == 1);
  const BoundaryCircle& c = a.circles[0];
  CHECK(c.scars.size() == 2);
  std::size_t slits = 0;
  for (const BoundaryCorner& corner : c.corners)
    if (corner.kind == CornerKind::turn_slit_end) ++slits;
  CHECK(slits == 2);

  RegionAnalysis b = regions(m, std::set<int>{0, 1});  // circle and chord
  CHECK(b.pieces.size() == 3);
  std::size_t attach = 0;
  for (const BoundaryCircle& circle : b.circles)
    for (const BoundaryCorner& corner : circle.corners)
      if (corner.kind == CornerKind::turn_attachment) ++attach;
  CHECK(attach == 4);
}

TEST_CASE("plan_parallel_circle: pushing a boundary into its piece") {
  CombinatorialMap m = torus();
  RegionAnalysis a = regions(m, std::set<int>{0});
  StrandPlan plan = plan_parallel_circle(a, 0, {2, EdgeKind::curve});
  REQUIRE(plan.steps.size() == 1);
  MapEditor ed(m);
  insert_strand(ed, plan);
  auto out = ed.finish();
  CHECK(genus(out.map) == 1);
  CHECK(validate(out.map).ok());
  CHECK(count_crossings(out.map, 2, 1) == 1);
  CHECK(count_crossings(out.map, 2, 0) == 0);
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(20260814u);
  std::vector<CombinatorialMap> fixtures = {torus(), octagon(), marked_circle(), double_bigon(),
                                            circle_with_chord()};
  for (const CombinatorialMap& m : fixtures) {
    CanonicalForm base = canonical_form(m);
    std::vector<Dart> pi(m.dart_count());
    std::iota(pi.begin(), pi.end(), 0);
    for (int trial = 0; trial < 250; ++trial) {
      std::shuffle(pi.begin(), pi.end(), rng);
      CombinatorialMap shuffled = relabel(m, pi);
      CHECK(canonical_form(shuffled) == base);
    }
  }
}

TEST_CASE("canonical form separates genuinely different maps") {
  CombinatorialMap t = torus();
  CHECK_FALSE(canonical_form(t) == canonical_form(octagon()));

  // changing an edge kind changes the form
  std::vector<EdgeLabel> labels = t.label_table();
  labels[2] = labels[3] = {1, EdgeKind::reference};
  CombinatorialMap tinted(t.alpha_table(), t.sigma_table(), labels);
  CHECK_FALSE(canonical_form(tinted) == canonical_form(t));

  // a mark changes the form
  CombinatorialMap plain_circle(marked_circle().alpha_table(), marked_circle().sigma_table(),
                                marked_circle().label_table(),
                                std::vector<std::uint8_t>{1, 1});
  CHECK_FALSE(canonical_form(plain_circle) == canonical_form(marked_circle()));
}

TEST_CASE("canonical form: pinning fixes component identity") {
  CombinatorialMap m = double_bigon();
  CanonicalForm pinned = canonical_form(m, {0});

  std::mt19937_64 rng(7u);
  std::vector<Dart> pi(m.dart_count());
  std::iota(pi.begin(), pi.end(), 0);
  for (int trial = 0; trial < 100; ++trial) {
    std::shuffle(pi.begin(), pi.end(), rng);
    CHECK(canonical_form(relabel(m, pi), {0}) == pinned);
  }

  // renaming the pinned component is visible, renaming the other is not
  std::vector<EdgeLabel> renamed = m.label_table();
  for (Dart d = 0; d < 4; ++d) renamed[d].component = 9;
  CombinatorialMap rn(m.alpha_table(), m.sigma_table(), renamed);
  CHECK_FALSE(canonical_form(rn, {9}) == pinned);
  std::vector<EdgeLabel> renamed_other = m.label_table();
  for (Dart d = 4; d < 8; ++d) renamed_other[d].component = 9;
  CombinatorialMap rn2(m.alpha_table(), m.sigma_table(), renamed_other);
  CHECK(canonical_form(rn2, {0}) == pinned);
}

TEST_CASE("canonical form counts automorphisms") {
  CHECK(canonical_form(torus()).automorphisms == 4);
  CHECK(canonical_form(marked_circle()).automorphisms == 1);
}

TEST_CASE("json round trip") {
  for (const CombinatorialMap& m : {torus(), octagon(), marked_circle(), double_bigon()}) {
    CombinatorialMap back = map_from_json(map_to_json(m));
    CHECK(back.alpha_table() == m.alpha_table());
    CHECK(back.sigma_table() == m.sigma_table());
    CHECK(back.label_table() == m.label_table());
    CHECK(back.marked_table() == m.marked_table());
  }
  CHECK_THROWS_AS(map_from_json(nlohmann::json{{"darts", 2}}), std::invalid_argument);
}

TEST_CASE("dot export lists every edge") {
  std::string dot = map_to_dot(torus());
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '-') >= 4);
}
