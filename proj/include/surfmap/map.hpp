#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace surfmap {

using Dart = std::uint32_t;

/// Sentinel for "no dart"; never a valid dart id.
inline constexpr Dart kNoDart = 0xffffffffu;

enum class EdgeKind : std::uint8_t { disk_boundary, curve, rope, reference };

const char* to_string(EdgeKind k);
std::optional<EdgeKind> edge_kind_from_string(std::string_view s);

struct EdgeLabel {
  int component = -1;
  EdgeKind kind = EdgeKind::curve;
  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

/// Validity is layered.  Structural validity is what genus computation and
/// canonical forms need: the involution and rotation are genuine permutations,
/// labels agree across each edge, the map is connected and closes up to a
/// surface of integral genus.  Configuration validity additionally constrains
/// vertices to the shapes produced by curve arrangements: valence 2 (marked
/// base point), valence 3 (arc endpoint attached to a host edge), valence 4
/// (transverse crossing of two distinct components).
struct ValidityReport {
  bool structural_ok = false;
  bool configuration_ok = false;
  std::vector<std::string> violations;
  bool ok() const { return structural_ok && configuration_ok; }
};

/// An oriented closed surface carrying an embedded labeled graph, encoded as
/// darts with an edge involution `alpha` and counterclockwise vertex rotation
/// `sigma`.  Faces are orbits of sigma∘alpha; the face of a dart lies to its
/// right.  The map is the sole definition of the surface: genus and all
/// region structure derive from it.
class CombinatorialMap {
 public:
  CombinatorialMap() = default;
  CombinatorialMap(std::vector<Dart> alpha, std::vector<Dart> sigma,
                   std::vector<EdgeLabel> labels,
                   std::vector<std::uint8_t> marked = {},
                   std::map<int, Dart> orientation = {});

  std::size_t dart_count() const { return alpha_.size(); }
  std::size_t edge_count() const { return alpha_.size() / 2; }

  Dart alpha(Dart d) const { return alpha_[d]; }
  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Dart phi(Dart d) const { return sigma_[alpha_[d]]; }

  const EdgeLabel& label(Dart d) const { return label_[d]; }
  int component(Dart d) const { return label_[d].component; }
  EdgeKind kind(Dart d) const { return label_[d].kind; }
  bool marked(Dart d) const { return marked_[d] != 0; }

  const std::vector<Dart>& alpha_table() const { return alpha_; }
  const std::vector<Dart>& sigma_table() const { return sigma_; }
  const std::vector<EdgeLabel>& label_table() const { return label_; }
  const std::vector<std::uint8_t>& marked_table() const { return marked_; }
  const std::map<int, Dart>& orientation_table() const { return orientation_; }

  /// Forward-direction dart of a component, if one was registered.
  Dart orientation_dart(int component) const;

  std::vector<int> component_ids() const;
  std::vector<Dart> darts_of_component(int component) const;
  bool has_component(int component) const;

  /// Rotation cycle of the vertex holding d, starting at d.
  std::vector<Dart> vertex_darts(Dart d) const;
  int valence(Dart d) const;

 private:
  std::vector<Dart> alpha_;
  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
  std::vector<EdgeLabel> label_;
  std::vector<std::uint8_t> marked_;
  std::map<int, Dart> orientation_;
};

ValidityReport validate(const CombinatorialMap& m);
bool structurally_valid(const CombinatorialMap& m);

/// Orbit lists sorted by smallest member dart; each orbit listed in traversal
/// order from its smallest dart.
std::vector<std::vector<Dart>> vertices(const CombinatorialMap& m);
std::vector<std::vector<Dart>> faces(const CombinatorialMap& m);
std::vector<std::vector<Dart>> edges(const CombinatorialMap& m);

long euler_characteristic(const CombinatorialMap& m);

/// Throws std::invalid_argument unless the map is structurally valid.
int genus(const CombinatorialMap& m);

/// dart -> vertex ordinal (position in vertices(m)); same for faces.
std::vector<std::uint32_t> vertex_index(const CombinatorialMap& m);
std::vector<std::uint32_t> face_index(const CombinatorialMap& m);

/// Strand navigation.  Traveling along dart d means moving from the vertex of
/// d toward the vertex of alpha(d).  At the far vertex the strand continues
/// straight through a crossing (valence 4), through a marked point (valence
/// 2), follows the host through an attachment it passes (valence 3, host
/// germs), and terminates where it is itself the attached arc end.
std::optional<Dart> strand_next(const CombinatorialMap& m, Dart d);
std::optional<Dart> strand_prev(const CombinatorialMap& m, Dart d);

struct Strand {
  std::vector<Dart> darts;  // in travel order
  bool closed = false;
};

/// The full strand through d.  Closed strands start at d; open strands are
/// re-rooted at their starting endpoint.
Strand strand_of(const CombinatorialMap& m, Dart d);

/// Strand of a whole component, rooted at its orientation dart when set.
Strand component_strand(const CombinatorialMap& m, int component);

bool is_closed_component(const CombinatorialMap& m, int component);

/// Transverse crossing vertices between the two components, identified by the
/// smallest dart of each vertex; sorted.
std::vector<Dart> crossing_vertices(const CombinatorialMap& m, int comp_a, int comp_b);
std::size_t count_crossings(const CombinatorialMap& m, int comp_a, int comp_b);
std::size_t count_crossings(const CombinatorialMap& m, const std::set<int>& a,
                            const std::set<int>& b);

/// Darts of the component based at its attachment endpoints (empty for
/// closed components; size 2 for arcs).
std::vector<Dart> arc_endpoint_darts(const CombinatorialMap& m, int component);

}  // namespace surfmap
