#include "slk/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "slk/io.hpp"

namespace slk {

namespace fs = std::filesystem;

Catalog Catalog::load(const std::string& data_dir) {
    const fs::path root = fs::path(data_dir) / "catalog";
    const auto index = nlohmann::json::parse(slurp_file((root / "index.json").string()));

    Catalog cat;
    cat.version_ = index.at("version").get<std::string>();
    for (const auto& row : index.at("entries")) {
        CatalogEntry e;
        e.name = row.at("name").get<std::string>();
        e.file = row.at("file").get<std::string>();
        e.orientable = row.at("orientable").get<bool>();
        e.ch_index = row.at("ch_index").get<int>();
        e.provenance = row.value("provenance", "");
        e.diagram = parse_diagram(slurp_file((root / e.file).string()));
        validate(e.diagram);
        if (e.diagram.ch_index() != e.ch_index)
            throw std::runtime_error("catalog entry " + e.name + ": diagram ch-index " +
                                     std::to_string(e.diagram.ch_index()) +
                                     " does not match the recorded " +
                                     std::to_string(e.ch_index));
        cat.entries_.push_back(std::move(e));
    }
    return cat;
}

const CatalogEntry& Catalog::get(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return e;
    std::ostringstream os;
    os << "no catalog entry named '" << name << "'; available:";
    for (const auto& e : entries_) os << " " << e.name;
    throw lookup_error(os.str());
}

std::vector<std::string> Catalog::required_names() {
    return {
        // non-orientable
        "2^{-1}_1", "7^{0,-2}_1", "8^{-1,-1}_1", "9^{1,-2}_1", "10^{0,-2}_1",
        "10^{0,-2}_2", "10^{-1,-1}_1", "10^{-1,-1}_2", "10^{-2,-2}_1",
        // orientable
        "2_1", "6^{0,1}_1", "8_1", "8^{1,1}_1", "9_1", "9^{0,1}_1", "9^{0,1}_2",
        "10_1", "10_2", "10_3", "10^1_1", "10^{1,1}_1", "10^{0,1}_1", "10^{0,1}_2",
        "10^{0,0,1}_1",
    };
}

std::string resolve_data_dir(const std::string& explicit_dir) {
    if (!explicit_dir.empty()) return explicit_dir;
    if (const char* env = std::getenv("SLK_DATA_DIR")) return env;
    if (fs::exists("data/catalog/index.json")) return "data";
#ifdef SLK_SOURCE_DATA_DIR
    return SLK_SOURCE_DATA_DIR;
#else
    return "data";
#endif
}

}  // namespace slk
