#include "surfmap/io.hpp"

#include <sstream>
#include <stdexcept>

namespace surfmap {

nlohmann::json map_to_json(const CombinatorialMap& m) {
  nlohmann::json j;
  j["darts"] = m.dart_count();
  j["alpha"] = m.alpha_table();
  j["sigma"] = m.sigma_table();
  nlohmann::json labels = nlohmann::json::object();
  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (d > m.alpha(d)) continue;
    labels[std::to_string(d)] = {{"component", m.component(d)},
                                 {"kind", to_string(m.kind(d))}};
  }
  j["labels"] = std::move(labels);
  nlohmann::json marked = nlohmann::json::array();
  for (Dart d = 0; d < m.dart_count(); ++d)
    if (m.marked(d)) marked.push_back(d);
  j["marked"] = std::move(marked);
  nlohmann::json orientation = nlohmann::json::object();
  for (auto [comp, dart] : m.orientation_table())
    orientation[std::to_string(comp)] = dart;
  j["orientation"] = std::move(orientation);
  return j;
}

CombinatorialMap map_from_json(const nlohmann::json& j) {
  try {
    std::size_t n = j.at("darts").get<std::size_t>();
    auto alpha = j.at("alpha").get<std::vector<Dart>>();
    auto sigma = j.at("sigma").get<std::vector<Dart>>();
    if (alpha.size() != n || sigma.size() != n)
      throw std::invalid_argument("map_from_json: table sizes disagree with dart count");
    std::vector<EdgeLabel> labels(n);
    for (auto& [key, value] : j.at("labels").items()) {
      std::size_t d = std::stoul(key);
      if (d >= n) throw std::invalid_argument("map_from_json: label key out of range");
      EdgeLabel label;
      label.component = value.at("component").get<int>();
      auto kind = edge_kind_from_string(value.at("kind").get<std::string>());
      if (!kind) throw std::invalid_argument("map_from_json: unknown edge kind");
      label.kind = *kind;
      labels[d] = label;
      if (alpha[d] < n) labels[alpha[d]] = label;
    }
    std::vector<std::uint8_t> marked(n, 0);
    for (Dart d : j.at("marked").get<std::vector<Dart>>()) {
      if (d >= n) throw std::invalid_argument("map_from_json: marked dart out of range");
      marked[d] = 1;
    }
    std::map<int, Dart> orientation;
    if (j.contains("orientation"))
      for (auto& [key, value] : j.at("orientation").items())
        orientation[std::stoi(key)] = value.get<Dart>();
    return CombinatorialMap(std::move(alpha), std::move(sigma), std::move(labels),
                            std::move(marked), std::move(orientation));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("map_from_json: ") + e.what());
  }
}

std::string map_to_dot(const CombinatorialMap& m) {
  std::vector<std::uint32_t> vid = vertex_index(m);
  std::ostringstream out;
  out << "graph surface {\n";
  std::size_t vcount = vertices(m).size();
  for (std::size_t v = 0; v < vcount; ++v) out << "  v" << v << ";\n";
  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (d > m.alpha(d)) continue;
    out << "  v" << vid[d] << " -- v" << vid[m.alpha(d)] << " [label=\"" << m.component(d)
        << ":" << to_string(m.kind(d)) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace surfmap
