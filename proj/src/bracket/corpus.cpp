#include "tqft/bracket/corpus.hpp"

#include <fstream>

#include "tqft/errors.hpp"

namespace tqft::bracket {

LinkDiagram diagram_from_json(const nlohmann::json& j) {
  LinkDiagram d;
  for (const auto& x : j.at("pd")) {
    if (!x.is_array() || x.size() != 4) throw DomainError("PD entries must have four labels");
    d.crossings.push_back({x[0].get<int>(), x[1].get<int>(), x[2].get<int>(), x[3].get<int>()});
  }
  d.loops = j.value("loops", 0U);
  if (j.contains("colors"))
    for (const auto& c : j.at("colors")) d.colors.push_back(color_from_string(c.get<std::string>()));
  validate(d);
  return d;
}

nlohmann::json to_json(const LinkDiagram& d) {
  nlohmann::json j;
  j["pd"] = nlohmann::json::array();
  for (const auto& x : d.crossings) j["pd"].push_back({x[0], x[1], x[2], x[3]});
  j["loops"] = d.loops;
  if (!d.colors.empty()) {
    j["colors"] = nlohmann::json::array();
    for (const auto& c : d.colors) j["colors"].push_back(to_string(c));
  }
  return j;
}

std::vector<NamedDiagram> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file " + path);
  std::vector<NamedDiagram> out;
  try {
    const auto j = nlohmann::json::parse(in);
    for (const auto& e : j.at("links")) out.push_back({e.at("name").get<std::string>(), diagram_from_json(e)});
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed corpus file " + path + ": " + e.what());
  } catch (const DomainError& e) {
    throw IoError("invalid diagram in corpus file " + path + ": " + e.what());
  }
  return out;
}

}  // namespace tqft::bracket
