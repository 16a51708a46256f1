#include "slk/enhance.hpp"

#include <numeric>
#include <sstream>

namespace slk {

std::uint64_t InvariantPolynomial::coefficient_sum() const {
    std::uint64_t total = 0;
    for (const auto& [exp, coeff] : terms) total += coeff;
    return total;
}

std::string InvariantPolynomial::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exp, coeff] : terms) {
        if (coeff == 0) continue;
        if (!first) os << "+";
        first = false;
        if (coeff != 1) os << coeff;
        os << "u";
        if (exp != 1) os << "^" << exp;
    }
    return first ? "0" : os.str();
}

namespace {

// Bead variables: semiarcs merged across every marked vertex, then one
// fresh variable per free loop. Columns are ordered by the smallest
// semiarc label in each class.
struct BeadColumns {
    std::vector<int> column_of_label;  // 1-based label -> column
    int columns;

    BeadColumns(const MarkedGraphDiagram& d) {
        std::vector<int> parent(static_cast<size_t>(d.semiarc_count) + 1);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const auto& vx : d.vertices) {
            const int root = find(vx.e[0]);
            for (int e : vx.e) parent[find(e)] = root;
        }
        column_of_label.assign(parent.size(), -1);
        int next = 0;
        for (int l = 1; l <= d.semiarc_count; ++l) {
            const int root = find(l);
            if (column_of_label[root] < 0) column_of_label[root] = next++;
            column_of_label[l] = column_of_label[root];
        }
        columns = next + d.free_loops;
    }
};

}  // namespace

IntMatrix bead_matrix(const MarkedGraphDiagram& d, const Coloring& f, const BikeiModule& m,
                      BeadReading reading) {
    if (static_cast<int>(f.semiarcs.size()) != d.semiarc_count ||
        static_cast<int>(f.loops.size()) != d.free_loops)
        throw std::invalid_argument("coloring does not fit the diagram");
    for (int v : f.semiarcs)
        if (v < 0 || v >= m.base().size())
            throw std::invalid_argument("coloring does not fit the module base");

    const BeadColumns cols(d);
    const Modulus& mod = m.modulus();
    IntMatrix a(static_cast<int>(2 * d.crossings.size()), cols.columns);

    int row = 0;
    for (const auto& cr : d.crossings) {
        int ea = cr.a, eb = cr.b, ec = cr.c, ed = cr.d;
        if (reading == BeadReading::flipped) {
            std::swap(ea, ed);
            std::swap(eb, ec);
        }
        const int x = f.semiarcs[ea - 1], y = f.semiarcs[eb - 1];
        const int ca = cols.column_of_label[ea], cb = cols.column_of_label[eb];
        const int cc = cols.column_of_label[ec], cd = cols.column_of_label[ed];
        // t.a + s.b - d = 0
        a.at(row, ca) = mod.reduce(a.at(row, ca) + m.t(x, y));
        a.at(row, cb) = mod.reduce(a.at(row, cb) + m.s(x, y));
        a.at(row, cd) = mod.reduce(a.at(row, cd) - 1);
        ++row;
        // r.b - c = 0
        a.at(row, cb) = mod.reduce(a.at(row, cb) + m.r(x, y));
        a.at(row, cc) = mod.reduce(a.at(row, cc) - 1);
        ++row;
    }
    return a;
}

std::uint64_t bead_module_size(const MarkedGraphDiagram& d, const Coloring& f,
                               const BikeiModule& m, BeadReading reading) {
    return kernel_count(bead_matrix(d, f, m, reading), m.modulus());
}

InvariantPolynomial enhanced_polynomial(const MarkedGraphDiagram& d, const BikeiModule& m) {
    InvariantPolynomial poly;
    for (const auto& f : enumerate_colorings(d, m.base()))
        ++poly.terms[bead_module_size(d, f, m)];
    return poly;
}

}  // namespace slk
