// Python bindings for the main operations: diagram parsing, bikei and
// module verification/search, colorings, and the enhanced polynomial.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "slk/catalog.hpp"
#include "slk/enhance.hpp"
#include "slk/io.hpp"
#include "slk/profile.hpp"

namespace py = pybind11;
using namespace slk;

namespace {

Bikei bikei_from_lists(const std::vector<std::vector<int>>& under,
                       const std::vector<std::vector<int>>& over) {
    return Bikei::from_tables(under, over);
}

std::vector<std::vector<int>> rows_of(int n, const std::vector<int>& flat, int offset) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            rows[x][y] = flat[static_cast<size_t>(x) * n + y] + offset;
    return rows;
}

}  // namespace

PYBIND11_MODULE(_slk, m) {
    m.doc() = "surface-link invariants from marked graph diagrams";

    py::class_<MarkedGraphDiagram>(m, "Diagram")
        .def_static("parse", &parse_diagram, py::arg("text"))
        .def("__str__", &serialize)
        .def_property_readonly("semiarcs",
                               [](const MarkedGraphDiagram& d) { return d.semiarc_count; })
        .def_property_readonly("free_loops",
                               [](const MarkedGraphDiagram& d) { return d.free_loops; })
        .def_property_readonly("ch_index", &MarkedGraphDiagram::ch_index)
        .def("smooth",
             [](const MarkedGraphDiagram& d, const std::string& dir) {
                 return smooth(d, dir == "minus" ? Smoothing::minus : Smoothing::plus);
             },
             py::arg("direction") = "plus")
        .def("fuzz", &fuzz_moves, py::arg("seed"), py::arg("k"));

    py::class_<Bikei>(m, "Bikei")
        .def(py::init(&bikei_from_lists), py::arg("under"), py::arg("over"),
             "1-based operation tables, row x column y")
        .def_property_readonly("n", &Bikei::size)
        .def_property_readonly(
            "under", [](const Bikei& b) { return rows_of(b.size(), b.under_table(), 1); })
        .def_property_readonly(
            "over", [](const Bikei& b) { return rows_of(b.size(), b.over_table(), 1); })
        .def("verify",
             [](const Bikei& b) -> py::object {
                 if (auto v = verify(b)) return py::str(v->to_string());
                 return py::none();
             },
             "None when valid, else the first violated axiom")
        .def("__str__", [](const Bikei& b) { return to_text(b); });

    py::class_<BikeiModule>(m, "BikeiModule")
        .def(py::init([](const Bikei& base, int mod, const std::vector<std::vector<int>>& t,
                         const std::vector<std::vector<int>>& s,
                         const std::vector<std::vector<int>>& r) {
                 return BikeiModule::from_blocks(base, mod, t, s, r);
             }),
             py::arg("bikei"), py::arg("modulus"), py::arg("t"), py::arg("s"), py::arg("r"))
        .def_property_readonly("modulus",
                               [](const BikeiModule& m_) { return m_.modulus().n; })
        .def_property_readonly("bikei", &BikeiModule::base)
        .def("verify",
             [](const BikeiModule& m_) -> py::object {
                 if (auto v = verify_module(m_)) return py::str(v->to_string());
                 return py::none();
             })
        .def("__str__", &BikeiModule::to_block_text);

    m.def("takasaki", &takasaki, py::arg("m"));
    m.def("enumerate_bikei",
          [](int n, int bound) {
              EnumerateOptions opt;
              opt.max_n = bound;
              return enumerate_bikei(n, opt);
          },
          py::arg("n"), py::arg("bound") = 4);
    m.def("search_modules",
          [](const Bikei& base, int mod) { return search_modules(base, Modulus(mod)); },
          py::arg("bikei"), py::arg("modulus"));

    m.def("colorings",
          [](const MarkedGraphDiagram& d, const Bikei& b) {
              std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
              for (const auto& c : enumerate_colorings(d, b)) {
                  std::vector<int> s(c.semiarcs), l(c.loops);
                  for (int& v : s) ++v;
                  for (int& v : l) ++v;
                  out.emplace_back(std::move(s), std::move(l));
              }
              return out;
          },
          py::arg("diagram"), py::arg("bikei"), "1-based color vectors");
    m.def("counting_invariant", &counting_invariant, py::arg("diagram"), py::arg("bikei"));
    m.def("enhanced_polynomial",
          [](const MarkedGraphDiagram& d, const BikeiModule& m_) {
              std::map<std::uint64_t, std::uint64_t> terms =
                  enhanced_polynomial(d, m_).terms;
              return terms;
          },
          py::arg("diagram"), py::arg("module"), "exponent -> coefficient");
    m.def("enhanced_polynomial_str",
          [](const MarkedGraphDiagram& d, const BikeiModule& m_) {
              return enhanced_polynomial(d, m_).to_string();
          },
          py::arg("diagram"), py::arg("module"));
    m.def("describe_surface",
          [](const MarkedGraphDiagram& d) { return describe(analyze(d)); },
          py::arg("diagram"));

    py::class_<CatalogEntry>(m, "CatalogEntry")
        .def_readonly("name", &CatalogEntry::name)
        .def_readonly("orientable", &CatalogEntry::orientable)
        .def_readonly("ch_index", &CatalogEntry::ch_index)
        .def_readonly("provenance", &CatalogEntry::provenance)
        .def_readonly("diagram", &CatalogEntry::diagram);

    py::class_<Catalog>(m, "Catalog")
        .def_static("load",
                    [](const std::string& dir) {
                        return Catalog::load(resolve_data_dir(dir));
                    },
                    py::arg("data_dir") = "")
        .def("get", &Catalog::get, py::return_value_policy::reference_internal)
        .def_property_readonly("entries", &Catalog::entries)
        .def_static("required_names", &Catalog::required_names);
}
