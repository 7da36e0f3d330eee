#ifndef LINKFORGE_IO_HPP
#define LINKFORGE_IO_HPP

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "geometry.hpp"

namespace linkforge {

/// {"components":[{"vertices":[[x,y,z],...]}, ...]}; optional "label" per component.
inline nlohmann::json link_to_json(const Link& link) {
  nlohmann::json comps = nlohmann::json::array();
  for (std::size_t i = 0; i < link.size(); ++i) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& p : link[i].vertices()) verts.push_back({p.x, p.y, p.z});
    nlohmann::json c = {{"vertices", std::move(verts)}};
    if (!link.labels().empty()) c["label"] = link.labels()[i];
    comps.push_back(std::move(c));
  }
  return {{"components", std::move(comps)}};
}

/// Builds a Link from parsed JSON. Structural problems raise ParseError;
/// geometric ones (too few vertices, touching components) propagate as is.
inline Link link_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
    throw ParseError("link JSON must be an object with a \"components\" array");
  std::vector<PolyCurve> comps;
  std::vector<std::string> labels;
  bool any_label = false;
  for (const auto& c : j["components"]) {
    if (!c.is_object() || !c.contains("vertices") || !c["vertices"].is_array())
      throw ParseError("each component needs a \"vertices\" array");
    std::vector<Point3> pts;
    for (const auto& v : c["vertices"]) {
      if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() || !v[2].is_number())
        throw ParseError("each vertex must be an array of three numbers");
      pts.push_back({v[0].get<double>(), v[1].get<double>(), v[2].get<double>()});
    }
    comps.emplace_back(std::move(pts));
    if (c.contains("label") && c["label"].is_string()) {
      labels.push_back(c["label"].get<std::string>());
      any_label = true;
    } else {
      labels.push_back("");
    }
  }
  if (!any_label) labels.clear();
  return Link(std::move(comps), std::move(labels));
}

inline Link read_link(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return link_from_json(j);
}

inline Link read_link_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_link(in);
}

/// nlohmann emits the shortest representation that round-trips each double.
inline void write_link(std::ostream& out, const Link& link) { out << link_to_json(link).dump() << '\n'; }

inline void write_link_file(const std::string& path, const Link& link) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  write_link(out, link);
}

}  // namespace linkforge

#endif  // LINKFORGE_IO_HPP
