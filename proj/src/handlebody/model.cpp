#include "handlebody/model.hpp"

#include <stdexcept>

namespace handlebody {

using surfmap::EdgeKind;
using surfmap::EdgeLabel;

ChartRegistry ChartRegistry::remapped(const std::vector<Dart>& remap) const {
  ChartRegistry out = *this;
  auto translate = [&](std::vector<Dart>& v) {
    for (Dart& d : v) {
      d = remap.at(d);
      if (d == surfmap::kNoDart) throw std::logic_error("ChartRegistry: chart dart was deleted");
    }
  };
  translate(out.seam_front_at_v);
  translate(out.seam_front_at_w);
  translate(out.seam_back_at_w);
  translate(out.seam_back_at_v);
  translate(out.delta_out);
  translate(out.delta_in);
  translate(out.omega_out);
  translate(out.omega_in);
  return out;
}

std::vector<int> ChartRegistry::seam_set() const { return seam_component; }

std::vector<int> ChartRegistry::reference_set() const {
  std::vector<int> out = delta_component;
  out.push_back(omega_component);
  return out;
}

HandlebodyModel standard_model(int genus) {
  if (genus < 2) throw std::invalid_argument("standard_model: genus must be at least 2");
  std::size_t g = static_cast<std::size_t>(genus);

  // Per handle i: seam front edge {6i, 6i+1}, seam back edge {6i+2, 6i+3},
  // dual loop edge {6i+4, 6i+5}. Longitude edge i joins w_i to w_{i+1} with
  // darts {6g+2i, 6g+2i+1}.
  std::size_t n = 8 * g;
  std::vector<Dart> alpha(n), sigma(n);
  std::vector<EdgeLabel> labels(n);

  ChartRegistry chart;
  chart.omega_component = 2 * genus;
  for (std::size_t i = 0; i < g; ++i) {
    Dart f = 6 * i, fw = 6 * i + 1, b = 6 * i + 2, bv = 6 * i + 3;
    Dart da = 6 * i + 4, db = 6 * i + 5;
    Dart r = 6 * g + 2 * i;
    Dart l = 6 * g + 2 * ((i + g - 1) % g) + 1;

    chart.seam_component.push_back(static_cast<int>(i));
    chart.delta_component.push_back(genus + static_cast<int>(i));
    chart.seam_front_at_v.push_back(f);
    chart.seam_front_at_w.push_back(fw);
    chart.seam_back_at_w.push_back(b);
    chart.seam_back_at_v.push_back(bv);
    chart.delta_out.push_back(da);
    chart.delta_in.push_back(db);
    chart.omega_out.push_back(r);
    chart.omega_in.push_back(l);

    alpha[f] = fw;
    alpha[fw] = f;
    alpha[b] = bv;
    alpha[bv] = b;
    alpha[da] = db;
    alpha[db] = da;

    // v_i counterclockwise: seam out, dual in, seam in, dual out
    sigma[f] = db;
    sigma[db] = bv;
    sigma[bv] = da;
    sigma[da] = f;
    // w_i counterclockwise: seam in, longitude out, seam out, longitude in
    sigma[fw] = r;
    sigma[r] = b;
    sigma[b] = l;
    sigma[l] = fw;

    EdgeLabel seam{static_cast<int>(i), EdgeKind::disk_boundary};
    labels[f] = labels[fw] = labels[b] = labels[bv] = seam;
    labels[da] = labels[db] = {genus + static_cast<int>(i), EdgeKind::reference};
  }
  for (std::size_t i = 0; i < g; ++i) {
    Dart r = 6 * g + 2 * i, l_next = 6 * g + 2 * i + 1;
    alpha[r] = l_next;
    alpha[l_next] = r;
    labels[r] = labels[l_next] = {chart.omega_component, EdgeKind::reference};
  }

  std::map<int, Dart> orientation;
  for (std::size_t i = 0; i < g; ++i) {
    orientation[chart.seam_component[i]] = chart.seam_front_at_v[i];
    orientation[chart.delta_component[i]] = chart.delta_out[i];
  }
  orientation[chart.omega_component] = chart.omega_out[0];

  HandlebodyModel model;
  model.genus = genus;
  model.map = CombinatorialMap(std::move(alpha), std::move(sigma), std::move(labels),
                               std::vector<std::uint8_t>(n, 0), std::move(orientation));
  model.chart = chart;

  if (!surfmap::validate(model.map).ok() || surfmap::genus(model.map) != genus ||
      surfmap::faces(model.map).size() != 2) {  // the chart fills the surface
    throw std::logic_error("standard_model: chart construction broke its invariants");
  }
  return model;
}

}  // namespace handlebody
