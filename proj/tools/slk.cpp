// Command line front end: every computation the library offers, with
// deterministic text or JSON output on stdout and diagnostics on stderr.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "slk/catalog.hpp"
#include "slk/coloring.hpp"
#include "slk/enhance.hpp"
#include "slk/io.hpp"
#include "slk/profile.hpp"

namespace fs = std::filesystem;
using namespace slk;

namespace {

// Domain failures (including failed checks) exit 1; usage problems exit 2.
struct DomainExit {
    int code;
};

std::string read_diagram_arg(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    if (fs::exists(arg)) return slurp_file(arg);
    return arg;  // inline diagram code
}

MarkedGraphDiagram load_diagram(const std::string& arg) {
    return parse_diagram(read_diagram_arg(arg));
}

void cmd_bikei_verify(const std::string& file, bool json) {
    const Bikei b = load_bikei_file(file);
    const auto bad = verify(b);
    if (json) {
        nlohmann::json out = {{"schema", 1}, {"valid", !bad.has_value()}};
        if (bad) {
            out["axiom"] = bad->axiom;
            out["witness"] = bad->witness;
        }
        std::cout << out.dump() << "\n";
    } else if (bad) {
        std::cout << "invalid: " << bad->to_string() << "\n";
    } else {
        std::cout << "valid bikei on " << b.size() << " elements\n";
    }
    if (bad) throw DomainExit{1};
}

void cmd_bikei_enumerate(int n, int bound, bool count_only, bool json) {
    EnumerateOptions opt;
    opt.max_n = bound;
    const auto all = enumerate_bikei(n, opt);
    if (count_only) {
        std::cout << all.size() << "\n";
        return;
    }
    if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& b : all) out.push_back(to_json(b));
        std::cout << out.dump() << "\n";
        return;
    }
    for (size_t i = 0; i < all.size(); ++i) {
        if (i) std::cout << "\n";
        std::cout << to_text(all[i]);
    }
    std::cerr << all.size() << " bikei on " << n << " elements\n";
}

void cmd_module_verify(const std::string& file, bool json) {
    const BikeiModule m = load_module_file(file);
    const auto bad = verify_module(m);
    if (json) {
        nlohmann::json out = {{"schema", 1}, {"valid", !bad.has_value()}};
        if (bad) {
            out["axiom"] = bad->axiom;
            out["witness"] = bad->witness;
        }
        std::cout << out.dump() << "\n";
    } else if (bad) {
        std::cout << "invalid: " << bad->to_string() << "\n";
    } else {
        std::cout << "valid module over Z_" << m.modulus().n << "\n";
    }
    if (bad) throw DomainExit{1};
}

void cmd_module_search(const std::string& bikei_file, int mod, bool count_only,
                       bool json, double work_bound, int workers) {
    const Bikei base = load_bikei_file(bikei_file);
    if (auto bad = verify(base)) {
        std::cerr << "input bikei is invalid: " << bad->to_string() << "\n";
        throw DomainExit{1};
    }
    ModuleSearchOptions opt;
    if (work_bound > 0) opt.max_raw_space = work_bound;
    opt.workers = workers;
    const auto found = search_modules(base, Modulus(mod), opt);
    if (count_only) {
        std::cout << found.size() << "\n";
        return;
    }
    if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& m : found) out.push_back(to_json(m));
        std::cout << out.dump() << "\n";
        return;
    }
    for (size_t i = 0; i < found.size(); ++i) {
        if (i) std::cout << "\n";
        std::cout << found[i].to_block_text();
    }
    std::cerr << found.size() << " modules\n";
}

void cmd_color(const std::string& bikei_file, const std::string& diagram_arg,
               bool count_only, bool json) {
    const Bikei b = load_bikei_file(bikei_file);
    const auto d = load_diagram(diagram_arg);
    const auto colorings = enumerate_colorings(d, b);
    if (count_only) {
        std::cout << colorings.size() << "\n";
        return;
    }
    if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& c : colorings) out.push_back(to_json(c));
        std::cout << out.dump() << "\n";
        return;
    }
    for (const auto& c : colorings) {
        for (size_t i = 0; i < c.semiarcs.size(); ++i)
            std::cout << (i ? " " : "") << c.semiarcs[i] + 1;
        for (int v : c.loops) std::cout << " | " << v + 1;
        std::cout << "\n";
    }
    std::cerr << colorings.size() << " colorings\n";
}

void cmd_invariant(const std::string& module_file, const std::string& diagram_arg,
                   bool json) {
    const BikeiModule m = load_module_file(module_file);
    const auto d = load_diagram(diagram_arg);
    const auto poly = enhanced_polynomial(d, m);
    if (json)
        std::cout << to_json(poly).dump() << "\n";
    else
        std::cout << poly.to_string() << "\n";
}

void cmd_smooth(const std::string& diagram_arg, const std::string& direction) {
    const auto d = load_diagram(diagram_arg);
    const auto s = smooth(d, direction == "plus" ? Smoothing::plus : Smoothing::minus);
    std::cout << serialize(s) << "\n";
}

void cmd_fuzz(const std::string& diagram_arg, std::uint64_t seed, int count) {
    const auto d = load_diagram(diagram_arg);
    for (const auto& v : fuzz_moves(d, seed, count)) std::cout << serialize(v) << "\n";
}

void cmd_info(const std::string& diagram_arg, const std::string& data_dir) {
    const auto d = load_diagram(diagram_arg);
    const auto p = analyze(d);
    std::cout << "semiarcs: " << d.semiarc_count << "  crossings: " << d.crossings.size()
              << "  marked vertices: " << d.vertices.size()
              << "  free loops: " << d.free_loops << "  ch-index: " << d.ch_index() << "\n";
    std::cout << describe(p) << "\n";
    for (const auto& c : p.components)
        std::cout << "  curves: " << c.curves << "  saddles: " << c.vertices
                  << "  euler: " << c.euler
                  << "  orientable: " << (c.orientable ? "yes" : "no") << "\n";
    std::cout << "smoothing circles: plus " << p.smoothing_plus_circles << ", minus "
              << p.smoothing_minus_circles << "\n";

    const std::string dir = resolve_data_dir(data_dir);
    if (fs::exists(fs::path(dir) / "bikei")) {
        for (const auto& f : fs::directory_iterator(fs::path(dir) / "bikei")) {
            if (f.path().extension() != ".bikei") continue;
            try {
                const Bikei b = load_bikei_file(f.path().string());
                std::cout << "colorings by " << f.path().stem().string() << ": "
                          << counting_invariant(d, b) << "\n";
            } catch (const std::exception& e) {
                std::cerr << f.path().string() << ": " << e.what() << "\n";
            }
        }
    }
    if (fs::exists(fs::path(dir) / "modules")) {
        for (const auto& f : fs::directory_iterator(fs::path(dir) / "modules")) {
            if (f.path().extension() != ".json") continue;
            try {
                const BikeiModule m = load_module_file(f.path().string());
                std::cout << "polynomial under " << f.path().stem().string() << ": "
                          << enhanced_polynomial(d, m).to_string() << "\n";
            } catch (const std::exception& e) {
                std::cerr << f.path().string() << ": " << e.what() << "\n";
            }
        }
    }
}

void cmd_catalog_list(const std::string& data_dir) {
    const auto cat = Catalog::load(resolve_data_dir(data_dir));
    for (const auto& e : cat.entries())
        std::cout << e.name << "\t" << (e.orientable ? "orientable" : "non-orientable")
                  << "\tch " << e.ch_index << "\t" << e.file << "\n";
}

void cmd_catalog_show(const std::string& name, const std::string& data_dir) {
    const auto cat = Catalog::load(resolve_data_dir(data_dir));
    const auto& e = cat.get(name);
    std::cout << serialize(e.diagram) << "\n";
    std::cerr << e.name << ": " << e.provenance << "\n";
}

// Recompute one published value table from the catalog and diff it against
// the bundled golden file.
void cmd_reproduce(const std::string& table, const std::string& data_dir) {
    const std::string dir = resolve_data_dir(data_dir);
    std::string golden_file, module_file;
    if (table == "ex-proper" || table == "1") {
        golden_file = dir + "/goldens/table1.txt";
        module_file = dir + "/modules/table1.json";
    } else if (table == "second" || table == "2") {
        golden_file = dir + "/goldens/table2.txt";
        module_file = dir + "/modules/table2.json";
    } else {
        std::cerr << "unknown table '" << table << "' (use ex-proper or second)\n";
        throw DomainExit{2};
    }

    const auto cat = Catalog::load(dir);
    const BikeiModule m = load_module_file(module_file);
    std::istringstream golden(slurp_file(golden_file));

    bool all_ok = true;
    std::string line;
    while (std::getline(golden, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        const std::string name = line.substr(0, tab);
        const std::string want = line.substr(tab + 1);
        const auto& entry = cat.get(name);
        const std::string got = enhanced_polynomial(entry.diagram, m).to_string();
        const bool ok = got == want;
        all_ok = all_ok && ok;
        std::cout << (ok ? "ok      " : "MISMATCH") << "  " << name << "  " << got;
        if (!ok) std::cout << "  (expected " << want << ")";
        std::cout << "\n";
    }
    if (!all_ok) throw DomainExit{1};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"surface-link invariants from marked graph diagrams"};
    app.require_subcommand(1);

    std::string data_dir;
    app.add_option("--data", data_dir, "data directory (default: $SLK_DATA_DIR or ./data)");

    // bikei
    auto* bikei = app.add_subcommand("bikei", "finite bikei operations");
    bikei->require_subcommand(1);
    auto* bv = bikei->add_subcommand("verify", "check the axioms of a bikei file");
    std::string bv_file;
    bool bv_json = false;
    bv->add_option("file", bv_file)->required();
    bv->add_flag("--json", bv_json);
    auto* be = bikei->add_subcommand("enumerate", "list all bikei on n elements");
    int be_n = 2, be_bound = 4;
    bool be_count = false, be_json = false;
    be->add_option("-n,--n", be_n, "ground set size")->required();
    be->add_option("--bound", be_bound, "refuse n beyond this bound");
    be->add_flag("--count-only", be_count);
    be->add_flag("--json", be_json);

    // module
    auto* module = app.add_subcommand("module", "bikei module operations");
    module->require_subcommand(1);
    auto* mv = module->add_subcommand("verify", "check the coefficient axioms");
    std::string mv_file;
    bool mv_json = false;
    mv->add_option("file", mv_file)->required();
    mv->add_flag("--json", mv_json);
    auto* ms = module->add_subcommand("search", "enumerate all modules over Z_n");
    std::string ms_bikei;
    int ms_mod = 2, ms_workers = 0;
    bool ms_count = false, ms_json = false;
    double ms_bound = 0;
    ms->add_option("--bikei", ms_bikei, "base bikei file")->required();
    ms->add_option("--mod", ms_mod, "coefficient modulus")->required();
    ms->add_flag("--count-only", ms_count);
    ms->add_flag("--json", ms_json);
    ms->add_option("--work-bound", ms_bound, "raw search space refusal bound");
    ms->add_option("--workers", ms_workers, "worker threads (default $SLK_WORKERS or 1)");

    // color
    auto* color = app.add_subcommand("color", "enumerate bikei colorings of a diagram");
    std::string c_bikei, c_diagram;
    bool c_count = false, c_json = false;
    color->add_option("--bikei", c_bikei)->required();
    color->add_option("--diagram", c_diagram, "diagram file, inline code, or - for stdin")
        ->required();
    color->add_flag("--count", c_count);
    color->add_flag("--json", c_json);

    // invariant
    auto* inv = app.add_subcommand("invariant", "enhanced polynomial of a diagram");
    std::string i_module, i_diagram;
    bool i_json = false;
    inv->add_option("--module", i_module)->required();
    inv->add_option("--diagram", i_diagram)->required();
    inv->add_flag("--json", i_json);

    // smooth
    auto* sm = app.add_subcommand("smooth", "resolve all marked vertices");
    std::string s_diagram, s_dir = "plus";
    sm->add_option("--diagram", s_diagram)->required();
    sm->add_option("--direction", s_dir)->check(CLI::IsMember({"plus", "minus"}));

    // fuzz
    auto* fz = app.add_subcommand("fuzz", "random sound local-move variants");
    std::string f_diagram;
    std::uint64_t f_seed = 1;
    int f_count = 1;
    fz->add_option("--diagram", f_diagram)->required();
    fz->add_option("--seed", f_seed);
    fz->add_option("--count", f_count);

    // info
    auto* in = app.add_subcommand("info", "combinatorial profile of a diagram");
    std::string in_diagram;
    in->add_option("--diagram", in_diagram)->required();

    // catalog
    auto* cat = app.add_subcommand("catalog", "bundled diagram catalog");
    cat->require_subcommand(1);
    auto* cl = cat->add_subcommand("list", "list entries");
    auto* cs = cat->add_subcommand("show", "print one diagram");
    std::string cs_name;
    cs->add_option("name", cs_name)->required();

    // reproduce
    auto* rp = app.add_subcommand("reproduce", "recompute a published table and diff");
    std::string r_table;
    rp->add_option("--table", r_table, "ex-proper or second")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (bv->parsed()) cmd_bikei_verify(bv_file, bv_json);
        if (be->parsed()) cmd_bikei_enumerate(be_n, be_bound, be_count, be_json);
        if (mv->parsed()) cmd_module_verify(mv_file, mv_json);
        if (ms->parsed())
            cmd_module_search(ms_bikei, ms_mod, ms_count, ms_json, ms_bound, ms_workers);
        if (color->parsed()) cmd_color(c_bikei, c_diagram, c_count, c_json);
        if (inv->parsed()) cmd_invariant(i_module, i_diagram, i_json);
        if (sm->parsed()) cmd_smooth(s_diagram, s_dir);
        if (fz->parsed()) cmd_fuzz(f_diagram, f_seed, f_count);
        if (in->parsed()) cmd_info(in_diagram, data_dir);
        if (cl->parsed()) cmd_catalog_list(data_dir);
        if (cs->parsed()) cmd_catalog_show(cs_name, data_dir);
        if (rp->parsed()) cmd_reproduce(r_table, data_dir);
    } catch (const DomainExit& e) {
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
