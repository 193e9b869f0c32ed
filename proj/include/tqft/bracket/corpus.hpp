#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "tqft/bracket/diagram.hpp"

namespace tqft::bracket {

struct NamedDiagram {
  std::string name;
  LinkDiagram diagram;
};

/// {"pd": [[a,b,c,d], ...], "loops": n, "colors": ["e2", "omega", ...]}
LinkDiagram diagram_from_json(const nlohmann::json& j);
nlohmann::json to_json(const LinkDiagram& d);

/// A corpus file is {"links": [{"name": ..., "pd": ..., "loops": ..., "colors": ...}, ...]}.
/// Throws IoError if the file cannot be read or any entry is malformed.
std::vector<NamedDiagram> load_corpus(const std::string& path);

}  // namespace tqft::bracket
