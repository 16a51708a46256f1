#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slk/diagram.hpp"

namespace slk {

/// One cataloged surface-link: a named marked graph diagram with its
/// transcription provenance.
struct CatalogEntry {
    std::string name;        // Yoshikawa-style identifier, e.g. "8^{-1,-1}_1"
    std::string file;        // diagram file, relative to the catalog directory
    bool orientable;
    int ch_index;
    std::string provenance;
    MarkedGraphDiagram diagram;
};

struct lookup_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Read-only collection loaded from a data directory containing
/// catalog/index.json and the referenced .mgd files. Every entry is parsed
/// and validated on load; the ch-index recorded in the index must match the
/// diagram.
class Catalog {
public:
    static Catalog load(const std::string& data_dir);

    /// Throws lookup_error (listing the available names) on unknown name.
    const CatalogEntry& get(const std::string& name) const;

    const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
    std::string version() const noexcept { return version_; }

    /// Names every invariant-table computation depends on.
    static std::vector<std::string> required_names();

private:
    std::string version_;
    std::vector<CatalogEntry> entries_;
};

/// Data-directory resolution: explicit argument, then $SLK_DATA_DIR, then
/// ./data, then the build-time source default.
std::string resolve_data_dir(const std::string& explicit_dir = "");

}  // namespace slk
