#include "slk/diagram.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace slk {

ParseError::ParseError(int line_, int column_, const std::string& what_)
    : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                         std::to_string(column_) + ": " + what_),
      line(line_),
      column(column_) {}

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_space_and_comments() {
        while (!done()) {
            if (std::isspace(static_cast<unsigned char>(peek()))) {
                advance();
            } else if (peek() == '#') {
                while (!done() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }
};

// Slot address used for error reporting and wiring checks.
struct SlotRef {
    int line, col;
};

}  // namespace

MarkedGraphDiagram parse_diagram(const std::string& text) {
    MarkedGraphDiagram d;
    Cursor cur{text};
    std::map<int, std::vector<SlotRef>> uses;  // original label -> occurrences

    auto read_node = [&](const char* head, int hline, int hcol) {
        std::array<int, 4> ends{};
        cur.skip_space_and_comments();
        if (cur.done() || cur.peek() != '(')
            throw ParseError(hline, hcol, std::string(head) + " needs an argument list");
        cur.advance();
        for (int i = 0; i < 4; ++i) {
            cur.skip_space_and_comments();
            int vline = cur.line, vcol = cur.col;
            if (cur.done() || !std::isdigit(static_cast<unsigned char>(cur.peek()))) {
                if (!cur.done() && cur.peek() == ')')
                    throw ParseError(hline, hcol,
                                     std::string(head) + " needs 4 semiarc labels");
                throw ParseError(vline, vcol, "expected a semiarc label");
            }
            long v = 0;
            while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
                v = v * 10 + (cur.peek() - '0');
                if (v > 1'000'000) throw ParseError(vline, vcol, "label too large");
                cur.advance();
            }
            if (v == 0) throw ParseError(vline, vcol, "labels are positive");
            ends[i] = static_cast<int>(v);
            uses[ends[i]].push_back({vline, vcol});
            cur.skip_space_and_comments();
            if (i < 3) {
                if (cur.done() || cur.peek() != ',')
                    throw ParseError(hline, hcol,
                                     std::string(head) + " needs 4 semiarc labels");
                cur.advance();
            }
        }
        cur.skip_space_and_comments();
        if (cur.done() || cur.peek() != ')')
            throw ParseError(hline, hcol, std::string(head) + " needs 4 semiarc labels");
        cur.advance();
        return ends;
    };

    while (true) {
        cur.skip_space_and_comments();
        if (cur.done()) break;
        const int hline = cur.line, hcol = cur.col;
        std::string word;
        while (!cur.done() && (std::isalnum(static_cast<unsigned char>(cur.peek())))) {
            word.push_back(cur.peek());
            cur.advance();
        }
        if (word == "O") {
            ++d.free_loops;
        } else if (word == "X") {
            auto e = read_node("X", hline, hcol);
            d.crossings.push_back({e[0], e[1], e[2], e[3]});
        } else if (word == "M13" || word == "M24") {
            auto e = read_node(word.c_str(), hline, hcol);
            d.vertices.push_back(
                {e, word == "M13" ? BarAxis::e1e3 : BarAxis::e2e4});
        } else {
            if (word.empty()) word.push_back(cur.peek());
            throw ParseError(hline, hcol, "unknown token '" + word + "'");
        }
    }

    for (const auto& [label, refs] : uses)
        if (refs.size() != 2)
            throw ParseError(refs.front().line, refs.front().col,
                             "semiarc " + std::to_string(label) + " has " +
                                 std::to_string(refs.size()) + " ends (needs 2)");

    // Normalize labels to 1..m preserving their order.
    std::map<int, int> remap;
    for (const auto& [label, refs] : uses) remap[label] = static_cast<int>(remap.size()) + 1;
    for (auto& c : d.crossings) {
        c.a = remap[c.a];
        c.b = remap[c.b];
        c.c = remap[c.c];
        c.d = remap[c.d];
    }
    for (auto& v : d.vertices)
        for (int& e : v.e) e = remap[e];
    d.semiarc_count = static_cast<int>(remap.size());
    return d;
}

std::string serialize(const MarkedGraphDiagram& d) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " ";
        first = false;
    };
    for (const auto& c : d.crossings) {
        sep();
        os << "X(" << c.a << "," << c.b << "," << c.c << "," << c.d << ")";
    }
    for (const auto& v : d.vertices) {
        sep();
        os << (v.bar == BarAxis::e1e3 ? "M13(" : "M24(") << v.e[0] << "," << v.e[1] << ","
           << v.e[2] << "," << v.e[3] << ")";
    }
    for (int i = 0; i < d.free_loops; ++i) {
        sep();
        os << "O";
    }
    return os.str();
}

void validate(const MarkedGraphDiagram& d) {
    std::vector<int> count(static_cast<size_t>(d.semiarc_count) + 1, 0);
    auto touch = [&](int label) {
        if (label < 1 || label > d.semiarc_count)
            throw std::invalid_argument("semiarc label " + std::to_string(label) +
                                        " out of range 1.." +
                                        std::to_string(d.semiarc_count));
        ++count[label];
    };
    for (const auto& c : d.crossings)
        for (int e : c.ends()) touch(e);
    for (const auto& v : d.vertices)
        for (int e : v.e) touch(e);
    for (int l = 1; l <= d.semiarc_count; ++l)
        if (count[l] != 2)
            throw std::invalid_argument("semiarc " + std::to_string(l) + " has " +
                                        std::to_string(count[l]) + " ends (needs 2)");
    if (d.free_loops < 0) throw std::invalid_argument("negative free loop count");
}

namespace {

// Endpoint bookkeeping shared by smoothing and analysis. Ports are the 4k
// node slots; each semiarc occupies exactly two ports.
struct Wiring {
    // port ids: crossings first (4 per crossing, slot order a,b,c,d), then
    // vertices (4 per vertex, slot order e1..e4).
    int crossing_ports;
    int total_ports;
    std::vector<int> port_label;           // port -> semiarc label
    std::vector<std::array<int, 2>> ends;  // label -> its two ports

    explicit Wiring(const MarkedGraphDiagram& d) {
        crossing_ports = 4 * static_cast<int>(d.crossings.size());
        total_ports = crossing_ports + 4 * static_cast<int>(d.vertices.size());
        port_label.assign(total_ports, 0);
        ends.assign(static_cast<size_t>(d.semiarc_count) + 1, {-1, -1});
        int p = 0;
        auto place = [&](int label) {
            port_label[p] = label;
            if (ends[label][0] < 0)
                ends[label][0] = p;
            else
                ends[label][1] = p;
            ++p;
        };
        for (const auto& c : d.crossings)
            for (int e : c.ends()) place(e);
        for (const auto& v : d.vertices)
            for (int e : v.e) place(e);
    }

    int other_end(int port) const {
        const auto& e = ends[port_label[port]];
        return e[0] == port ? e[1] : e[0];
    }

    bool is_crossing_port(int port) const { return port < crossing_ports; }
};

// The two ways to resolve a vertex into parallel arcs: adjacent slot pairs
// {(e1,e2),(e3,e4)} or {(e2,e3),(e4,e1)}. The bar axis picks which of the
// two counts as the plus direction.
std::array<std::array<int, 2>, 2> smoothing_pairs(const MarkedVertex& v, Smoothing dir) {
    const bool first = (v.bar == BarAxis::e1e3) == (dir == Smoothing::plus);
    if (first) return {{{0, 1}, {2, 3}}};
    return {{{1, 2}, {3, 0}}};
}

}  // namespace

MarkedGraphDiagram smooth(const MarkedGraphDiagram& d, Smoothing dir) {
    validate(d);
    Wiring w(d);

    // Weld partner for every vertex port under the chosen smoothing.
    std::vector<int> weld(w.total_ports, -1);
    for (size_t vi = 0; vi < d.vertices.size(); ++vi) {
        const int base = w.crossing_ports + 4 * static_cast<int>(vi);
        for (const auto& pair : smoothing_pairs(d.vertices[vi], dir)) {
            weld[base + pair[0]] = base + pair[1];
            weld[base + pair[1]] = base + pair[0];
        }
    }

    MarkedGraphDiagram out;
    out.free_loops = d.free_loops;
    out.crossings = d.crossings;  // labels rewritten below

    std::vector<int> port_new_label(w.total_ports, 0);
    std::vector<char> visited(w.total_ports, 0);
    int next_label = 0;

    // Walk from each crossing port to the far crossing port, hopping over
    // welded vertex slots; every walk is one semiarc of the smoothed diagram.
    for (int p = 0; p < w.crossing_ports; ++p) {
        if (visited[p]) continue;
        ++next_label;
        visited[p] = 1;
        port_new_label[p] = next_label;
        int cur = w.other_end(p);
        while (!w.is_crossing_port(cur)) {
            visited[cur] = 1;
            cur = weld[cur];
            visited[cur] = 1;
            cur = w.other_end(cur);
        }
        visited[cur] = 1;
        port_new_label[cur] = next_label;
    }
    // Remaining unvisited vertex ports close up into free loops.
    for (int p = w.crossing_ports; p < w.total_ports; ++p) {
        if (visited[p]) continue;
        ++out.free_loops;
        int cur = p;
        while (!visited[cur]) {
            visited[cur] = 1;
            const int hop = weld[cur];
            visited[hop] = 1;
            cur = w.other_end(hop);
        }
    }

    int port = 0;
    for (auto& c : out.crossings) {
        c.a = port_new_label[port++];
        c.b = port_new_label[port++];
        c.c = port_new_label[port++];
        c.d = port_new_label[port++];
    }
    out.semiarc_count = next_label;
    validate(out);
    return out;
}

namespace {

// Deterministic bounded draw; avoids std::uniform_int_distribution, whose
// output is implementation-defined.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling keeps the draw unbiased
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = gen();
        } while (v >= limit);
        return v % bound;
    }
};

struct SlotAddr {
    bool at_crossing;
    int node;
    int slot;
};

// The two occurrences of each label, in storage order.
std::vector<std::array<SlotAddr, 2>> locate_ends(const MarkedGraphDiagram& d) {
    std::vector<std::array<SlotAddr, 2>> where(static_cast<size_t>(d.semiarc_count) + 1);
    std::vector<int> seen(static_cast<size_t>(d.semiarc_count) + 1, 0);
    auto place = [&](int label, SlotAddr addr) { where[label][seen[label]++] = addr; };
    for (size_t i = 0; i < d.crossings.size(); ++i) {
        const auto e = d.crossings[i].ends();
        for (int s = 0; s < 4; ++s) place(e[s], {true, static_cast<int>(i), s});
    }
    for (size_t i = 0; i < d.vertices.size(); ++i)
        for (int s = 0; s < 4; ++s)
            place(d.vertices[i].e[s], {false, static_cast<int>(i), s});
    return where;
}

void write_slot(MarkedGraphDiagram& d, const SlotAddr& addr, int label) {
    if (addr.at_crossing) {
        auto& c = d.crossings[addr.node];
        (addr.slot == 0 ? c.a : addr.slot == 1 ? c.b : addr.slot == 2 ? c.c : c.d) = label;
    } else {
        d.vertices[addr.node].e[addr.slot] = label;
    }
}

// Kink insertion on a semiarc or a free loop. Two chiralities: the strand
// passes under then over its own loop, or over then under.
void insert_kink(MarkedGraphDiagram& d, Rng& rng) {
    const int m = d.semiarc_count;
    const int target = static_cast<int>(rng.below(m + d.free_loops));
    const bool under_first = rng.below(2) == 0;
    if (target >= m) {
        // a free loop becomes a one-crossing unknot
        --d.free_loops;
        const int a = m + 1, b = m + 2;
        if (under_first)
            d.crossings.push_back({a, b, a, b});
        else
            d.crossings.push_back({b, a, b, a});
        d.semiarc_count += 2;
        return;
    }
    const int s = target + 1;
    const auto where = locate_ends(d);
    const int loop = m + 1, tail = m + 2;
    write_slot(d, where[s][1], tail);
    if (under_first)
        d.crossings.push_back({s, loop, tail, loop});
    else
        d.crossings.push_back({loop, s, loop, tail});
    d.semiarc_count += 2;
}

// Poke: push a finger of u across w, adding two cancelling crossings.
void insert_poke(MarkedGraphDiagram& d, Rng& rng) {
    const int m = d.semiarc_count;
    const int u = 1 + static_cast<int>(rng.below(m));
    int w = 1 + static_cast<int>(rng.below(m - 1));
    if (w >= u) ++w;
    const bool u_over = rng.below(2) == 0;

    const auto where = locate_ends(d);
    const int tip = m + 1, u2 = m + 2, mid = m + 3, w2 = m + 4;
    write_slot(d, where[u][1], u2);
    write_slot(d, where[w][1], w2);
    if (u_over) {
        d.crossings.push_back({mid, u, tip, w});
        d.crossings.push_back({mid, tip, u2, w2});
    } else {
        d.crossings.push_back({u, w, mid, tip});
        d.crossings.push_back({u2, mid, w2, tip});
    }
    d.semiarc_count += 4;
}

// Finger across a marked vertex: u sweeps over (or under) the whole vertex
// star, crossing each leg once. Requires four distinct legs and a strand u
// not incident to the vertex.
bool insert_vertex_finger(MarkedGraphDiagram& d, Rng& rng) {
    if (d.vertices.empty() || d.semiarc_count < 5) return false;
    const int vi = static_cast<int>(rng.below(d.vertices.size()));
    auto& v = d.vertices[vi];
    const auto legs = v.e;
    if (legs[0] == legs[1] || legs[0] == legs[2] || legs[0] == legs[3] ||
        legs[1] == legs[2] || legs[1] == legs[3] || legs[2] == legs[3])
        return false;

    std::vector<int> candidates;
    for (int s = 1; s <= d.semiarc_count; ++s)
        if (s != legs[0] && s != legs[1] && s != legs[2] && s != legs[3])
            candidates.push_back(s);
    if (candidates.empty()) return false;
    const int u = candidates[rng.below(candidates.size())];
    const bool u_over = rng.below(2) == 0;

    const int m = d.semiarc_count;
    const int u12 = m + 1, u23 = m + 2, u34 = m + 3, u5 = m + 4;
    const int v1 = m + 5, v2 = m + 6, v3 = m + 7, v4 = m + 8;
    const int f1 = legs[0], f2 = legs[1], f3 = legs[2], f4 = legs[3];

    const auto where = locate_ends(d);
    write_slot(d, where[u][1], u5);
    v.e = {v1, v2, v3, v4};

    if (u_over) {
        d.crossings.push_back({f2, u, u12, v2});
        d.crossings.push_back({f1, u12, u23, v1});
        d.crossings.push_back({f4, u23, u34, v4});
        d.crossings.push_back({f3, u34, u5, v3});
    } else {
        d.crossings.push_back({u12, f2, v2, u});
        d.crossings.push_back({u23, f1, v1, u12});
        d.crossings.push_back({u34, f4, v4, u23});
        d.crossings.push_back({u5, f3, v3, u34});
    }
    d.semiarc_count += 8;
    return true;
}

}  // namespace

std::vector<MarkedGraphDiagram> fuzz_moves(const MarkedGraphDiagram& d, std::uint64_t seed,
                                           int k) {
    validate(d);
    Rng rng(seed);
    std::vector<MarkedGraphDiagram> out;
    out.reserve(static_cast<size_t>(std::max(k, 0)));
    for (int i = 0; i < k; ++i) {
        MarkedGraphDiagram cur = d;
        const int moves = 1 + static_cast<int>(rng.below(3));
        for (int mv = 0; mv < moves; ++mv) {
            const int kind = static_cast<int>(rng.below(3));
            if (kind == 2 && insert_vertex_finger(cur, rng)) continue;
            if (kind == 1 && cur.semiarc_count >= 2) {
                insert_poke(cur, rng);
                continue;
            }
            if (cur.semiarc_count + cur.free_loops > 0) insert_kink(cur, rng);
        }
        validate(cur);
        out.push_back(std::move(cur));
    }
    return out;
}

}  // namespace slk
