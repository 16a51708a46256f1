#include "slk/io.hpp"

#include <fstream>
#include <sstream>

namespace slk {

namespace {

constexpr int kSchemaVersion = 1;

std::vector<std::vector<int>> rows_1based(int n, const std::vector<int>& flat) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) rows[x][y] = flat[static_cast<size_t>(x) * n + y] + 1;
    return rows;
}

std::vector<std::vector<int>> rows_raw(int n, const std::vector<int>& flat) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) rows[x][y] = flat[static_cast<size_t>(x) * n + y];
    return rows;
}

std::vector<std::vector<int>> table(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw std::runtime_error(std::string("missing field ") + key);
    return j.at(key).get<std::vector<std::vector<int>>>();
}

}  // namespace

nlohmann::json to_json(const Bikei& b) {
    return {{"schema", kSchemaVersion},
            {"n", b.size()},
            {"under", rows_1based(b.size(), b.under_table())},
            {"over", rows_1based(b.size(), b.over_table())}};
}

Bikei bikei_from_json(const nlohmann::json& j) {
    return Bikei::from_tables(table(j, "under"), table(j, "over"));
}

nlohmann::json to_json(const BikeiModule& m) {
    const int n = m.base().size();
    return {{"schema", kSchemaVersion},
            {"bikei", to_json(m.base())},
            {"modulus", m.modulus().n},
            {"T", rows_raw(n, m.t_table())},
            {"S", rows_raw(n, m.s_table())},
            {"R", rows_raw(n, m.r_table())}};
}

BikeiModule module_from_json(const nlohmann::json& j) {
    if (!j.contains("bikei")) throw std::runtime_error("module JSON lacks a bikei");
    Bikei base = bikei_from_json(j.at("bikei"));
    const int mod = j.at("modulus").get<int>();
    return BikeiModule::from_blocks(base, mod, table(j, "T"), table(j, "S"), table(j, "R"));
}

nlohmann::json to_json(const MarkedGraphDiagram& d) {
    nlohmann::json crossings = nlohmann::json::array();
    for (const auto& c : d.crossings) crossings.push_back({c.a, c.b, c.c, c.d});
    nlohmann::json vertices = nlohmann::json::array();
    for (const auto& v : d.vertices)
        vertices.push_back({{"ends", v.e}, {"bar", v.bar == BarAxis::e1e3 ? 13 : 24}});
    return {{"schema", kSchemaVersion},
            {"semiarcs", d.semiarc_count},
            {"crossings", crossings},
            {"marked_vertices", vertices},
            {"free_loops", d.free_loops}};
}

nlohmann::json to_json(const Coloring& c) {
    nlohmann::json semiarcs = nlohmann::json::array();
    for (int v : c.semiarcs) semiarcs.push_back(v + 1);
    nlohmann::json loops = nlohmann::json::array();
    for (int v : c.loops) loops.push_back(v + 1);
    return {{"semiarcs", semiarcs}, {"loops", loops}};
}

nlohmann::json to_json(const InvariantPolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [exp, coeff] : p.terms)
        terms.push_back({{"exp", exp}, {"coeff", coeff}});
    return {{"schema", kSchemaVersion}, {"terms", terms}};
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Bikei load_bikei_file(const std::string& path) {
    const std::string text = slurp_file(path);
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
        return bikei_from_json(nlohmann::json::parse(text));
    return parse_bikei_text(text);
}

BikeiModule load_module_file(const std::string& path) {
    return module_from_json(nlohmann::json::parse(slurp_file(path)));
}

}  // namespace slk
