#pragma once

#include <string>

#include <json.hpp>

#include "slk/bikei.hpp"
#include "slk/bikei_module.hpp"
#include "slk/coloring.hpp"
#include "slk/diagram.hpp"
#include "slk/enhance.hpp"

namespace slk {

// JSON mirrors of the text formats. Schemas carry a version tag so readers
// can reject layouts they do not understand.

nlohmann::json to_json(const Bikei& b);
Bikei bikei_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BikeiModule& m);
BikeiModule module_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MarkedGraphDiagram& d);
nlohmann::json to_json(const Coloring& c);
nlohmann::json to_json(const InvariantPolynomial& p);

/// Loads a bikei from a .bikei text file or .json file.
Bikei load_bikei_file(const std::string& path);

/// Loads a module description (JSON with inline bikei) from a file.
BikeiModule load_module_file(const std::string& path);

/// Reads a whole file; throws std::runtime_error naming the path on failure.
std::string slurp_file(const std::string& path);

}  // namespace slk
