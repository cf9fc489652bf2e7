#include "surfmap/editor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace surfmap {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::logic_error("MapEditor: " + what); }

}  // namespace

MapEditor::MapEditor(const CombinatorialMap& m)
    : alpha_(m.alpha_table()),
      label_(m.label_table()),
      marked_(m.marked_table()),
      orientation_(m.orientation_table()) {
  next_.resize(alpha_.size());
  prev_.resize(alpha_.size());
  for (Dart d = 0; d < alpha_.size(); ++d) {
    next_[d] = m.sigma(d);
    prev_[d] = m.sigma_inv(d);
  }
  alive_.assign(alpha_.size(), 1);
  for (const EdgeLabel& l : label_) fresh_component_ = std::max(fresh_component_, l.component + 1);
}

int MapEditor::valence(Dart d) const {
  if (!alive(d) || floating(d)) fail("valence of a floating dart");
  int n = 0;
  Dart e = d;
  do {
    ++n;
    e = next_[e];
  } while (e != d);
  return n;
}

std::vector<Dart> MapEditor::vertex_darts(Dart d) const {
  std::vector<Dart> out;
  Dart e = d;
  do {
    out.push_back(e);
    e = next_[e];
  } while (e != d);
  return out;
}

Dart MapEditor::orientation_dart(int component) const {
  auto it = orientation_.find(component);
  return it == orientation_.end() ? kNoDart : it->second;
}

int MapEditor::fresh_component_id() { return fresh_component_++; }

std::pair<Dart, Dart> MapEditor::new_edge(const EdgeLabel& label) {
  Dart u = static_cast<Dart>(alpha_.size());
  Dart v = u + 1;
  alpha_.push_back(v);
  alpha_.push_back(u);
  next_.insert(next_.end(), {kNoDart, kNoDart});
  prev_.insert(prev_.end(), {kNoDart, kNoDart});
  label_.insert(label_.end(), {label, label});
  marked_.insert(marked_.end(), {0, 0});
  alive_.insert(alive_.end(), {1, 1});
  fresh_component_ = std::max(fresh_component_, label.component + 1);
  return {u, v};
}

void MapEditor::make_vertex(Dart d) {
  if (!floating(d)) fail("make_vertex needs a floating dart");
  next_[d] = d;
  prev_[d] = d;
}

void MapEditor::splice_after(Dart at, Dart d) {
  if (!alive(at) || floating(at)) fail("splice_after: anchor not placed");
  if (!floating(d)) fail("splice_after: dart not floating");
  Dart n = next_[at];
  next_[at] = d;
  prev_[d] = at;
  next_[d] = n;
  prev_[n] = d;
}

void MapEditor::detach(Dart d) {
  if (!alive(d) || floating(d)) return;
  Dart p = prev_[d], n = next_[d];
  if (p != d) {
    next_[p] = n;
    prev_[n] = p;
  }
  next_[d] = kNoDart;
  prev_[d] = kNoDart;
}

Dart MapEditor::split_edge(Dart d) {
  if (!alive(d)) fail("split_edge on a dead dart");
  Dart e = alpha_[d];
  auto [p, q] = new_edge(label_[d]);
  // p joins d's half, q joins e's half; the fresh vertex is (p, q).
  alpha_[d] = p;
  alpha_[p] = d;
  alpha_[q] = e;
  alpha_[e] = q;
  next_[p] = q;
  prev_[p] = q;
  next_[q] = p;
  prev_[q] = p;
  return p;
}

void MapEditor::smooth_vertex(Dart d) {
  if (!alive(d) || floating(d)) fail("smooth_vertex on a dart not in a rotation");
  Dart e = next_[d];
  if (e == d || next_[e] != d) fail("smooth_vertex needs valence 2");
  if (marked_[d] || marked_[e]) fail("smooth_vertex would drop a mark");
  if (!(label_[d] == label_[e])) fail("smooth_vertex across differing labels");
  if (alpha_[d] == e) fail("smooth_vertex would isolate a circle");
  Dart a = alpha_[d], b = alpha_[e];
  alpha_[a] = b;
  alpha_[b] = a;
  for (auto& [comp, dart] : orientation_) {
    if (dart == d) dart = b;
    if (dart == e) dart = a;
  }
  kill(d);
  kill(e);
}

void MapEditor::delete_edge(Dart d) {
  if (!alive(d)) fail("delete_edge on a dead dart");
  Dart e = alpha_[d];
  for (auto it = orientation_.begin(); it != orientation_.end();) {
    if (it->second == d || it->second == e)
      it = orientation_.erase(it);
    else
      ++it;
  }
  kill(d);
  kill(e);
}

void MapEditor::delete_components(const std::set<int>& comps) {
  for (int c : comps) orientation_.erase(c);
  for (Dart d = 0; d < alpha_.size(); ++d)
    if (alive(d) && comps.count(label_[d].component)) kill(d);
  for (Dart d = 0; d < alpha_.size(); ++d)
    if (alive(d) && next_[d] == d) fail("delete_components left a dangling edge end");
}

Dart MapEditor::pierce_before_vertex(Dart host_germ, Dart in_dart, Dart out_dart,
                                     bool from_right) {
  if (!floating(in_dart) || !floating(out_dart)) fail("pierce needs floating strand darts");
  Dart p = split_edge(host_germ);
  Dart q = next_[p];
  if (from_right) {
    splice_after(p, in_dart);
    splice_after(q, out_dart);
  } else {
    splice_after(p, out_dart);
    splice_after(q, in_dart);
  }
  return p;
}

Dart MapEditor::attach_before_vertex(Dart host_germ, Dart arc_end, bool left_side) {
  if (!floating(arc_end)) fail("attach needs a floating arc end");
  Dart p = split_edge(host_germ);
  Dart q = next_[p];
  splice_after(left_side ? q : p, arc_end);
  return p;
}

void MapEditor::set_mark(Dart d, bool on) {
  if (!alive(d)) fail("set_mark on a dead dart");
  marked_[d] = on ? 1 : 0;
}

void MapEditor::set_orientation(int component, Dart d) {
  if (!alive(d)) fail("set_orientation on a dead dart");
  if (label_[d].component != component) fail("set_orientation: dart not on component");
  orientation_[component] = d;
}

void MapEditor::clear_orientation(int component) { orientation_.erase(component); }

void MapEditor::kill(Dart d) {
  detach(d);
  alive_[d] = 0;
}

MapEditor::Finished MapEditor::finish(bool auto_smooth) {
  if (auto_smooth) {
    for (Dart d = 0; d < alpha_.size(); ++d) {
      if (!alive(d) || floating(d)) continue;
      Dart e = next_[d];
      if (e == d || next_[e] != d) continue;
      if (marked_[d] || marked_[e]) continue;
      if (!(label_[d] == label_[e])) continue;
      if (alpha_[d] == e) continue;  // lone vertex of a circle stays
      smooth_vertex(d);
    }
  }
  std::vector<Dart> remap(alpha_.size(), kNoDart);
  Dart fresh = 0;
  for (Dart d = 0; d < alpha_.size(); ++d) {
    if (!alive(d)) continue;
    if (floating(d)) fail("finish with a floating dart");
    remap[d] = fresh++;
  }
  std::vector<Dart> alpha(fresh), sigma(fresh);
  std::vector<EdgeLabel> labels(fresh);
  std::vector<std::uint8_t> marked(fresh);
  for (Dart d = 0; d < alpha_.size(); ++d) {
    if (remap[d] == kNoDart) continue;
    alpha[remap[d]] = remap[alpha_[d]];
    sigma[remap[d]] = remap[next_[d]];
    labels[remap[d]] = label_[d];
    marked[remap[d]] = marked_[d];
  }
  std::map<int, Dart> orientation;
  for (auto [comp, dart] : orientation_) {
    if (dart == kNoDart || remap[dart] == kNoDart) fail("orientation dart deleted");
    orientation[comp] = remap[dart];
  }
  return {CombinatorialMap(std::move(alpha), std::move(sigma), std::move(labels),
                           std::move(marked), std::move(orientation)),
          std::move(remap)};
}

namespace {

// Events on one host edge, keyed by position measured from the edge's
// min-dart germ so both germs' offsets share an axis.
struct EdgeEvent {
  double pos;
  std::size_t serial;       // plan order, stabilizes equal positions
  bool is_attach;
  bool flag;                // pierce: from_right; attach: left_side, both
                            // re-expressed relative to the min-dart germ
  Dart in_dart, out_dart;   // pierce
  Dart arc_end;             // attach
};

}  // namespace

Dart insert_strand(MapEditor& ed, const StrandPlan& plan) {
  const bool closed = !plan.front && !plan.back;
  if (plan.front.has_value() != plan.back.has_value())
    throw std::invalid_argument("insert_strand: arc needs both endpoints");
  if (closed && plan.steps.empty())
    throw std::invalid_argument("insert_strand: a free circle has no vertex to carry it");

  // Edges of the new strand, in strand order.  For a closed strand edge i
  // runs from crossing i to crossing i+1 (mod k); for an arc the chain is
  // front end, steps, back end, with one more edge than steps.
  const std::size_t nsteps = plan.steps.size();
  const std::size_t nedges = closed ? nsteps : nsteps + 1;
  std::vector<std::pair<Dart, Dart>> strand_edges(nedges);
  for (auto& e : strand_edges) e = ed.new_edge(plan.label);

  auto in_dart_of_step = [&](std::size_t i) {
    return closed ? strand_edges[(i + nedges - 1) % nedges].second : strand_edges[i].second;
  };
  auto out_dart_of_step = [&](std::size_t i) {
    return closed ? strand_edges[i].first : strand_edges[i + 1].first;
  };

  std::map<Dart, std::vector<EdgeEvent>> by_edge;
  std::size_t serial = 0;
  auto edge_key = [&](Dart g) { return std::min(g, ed.alpha(g)); };
  auto add_event = [&](Dart germ, double offset, EdgeEvent ev) {
    Dart key = edge_key(germ);
    if (germ == key) {
      ev.pos = offset;
    } else {
      // Re-expressing the event from the opposite germ mirrors the side flag
      // but leaves the strand's travel direction through the crossing alone.
      ev.pos = 1.0 - offset;
      ev.flag = !ev.flag;
    }
    ev.serial = serial++;
    by_edge[key].push_back(ev);
  };

  for (std::size_t i = 0; i < nsteps; ++i) {
    const StrandStep& s = plan.steps[i];
    EdgeEvent ev{};
    ev.is_attach = false;
    ev.flag = s.from_right;
    ev.in_dart = in_dart_of_step(i);
    ev.out_dart = out_dart_of_step(i);
    add_event(s.host_germ, s.offset, ev);
  }
  if (!closed) {
    EdgeEvent front{};
    front.is_attach = true;
    front.flag = plan.front->left_side;
    front.arc_end = strand_edges.front().first;
    add_event(plan.front->host_germ, plan.front->offset, front);
    EdgeEvent back{};
    back.is_attach = true;
    back.flag = plan.back->left_side;
    back.arc_end = strand_edges.back().second;
    add_event(plan.back->host_germ, plan.back->offset, back);
  }

  for (auto& [key, events] : by_edge) {
    std::sort(events.begin(), events.end(), [](const EdgeEvent& a, const EdgeEvent& b) {
      if (a.pos != b.pos) return a.pos > b.pos;
      return a.serial > b.serial;
    });
    // Descending position: each pierce lands between the germ's base and the
    // previous insertion, so physical order along the edge matches position.
    for (const EdgeEvent& ev : events) {
      if (ev.is_attach)
        ed.attach_before_vertex(key, ev.arc_end, ev.flag);
      else
        ed.pierce_before_vertex(key, ev.in_dart, ev.out_dart, ev.flag);
    }
  }

  Dart forward = strand_edges.front().first;
  ed.set_orientation(plan.label.component, forward);
  return forward;
}

}  // namespace surfmap
