#include "slk/coloring.hpp"

#include <algorithm>

namespace slk {

namespace {

// Forced-value propagation across one crossing. Any two ends on distinct
// strands determine the other two; the relevant inverses all come from the
// involution axioms.
struct Propagator {
    const MarkedGraphDiagram& d;
    const Bikei& x;
    std::vector<int>& color;  // semiarc label -> color or -1

    // returns false on conflict
    bool assign(int label, int value, std::vector<int>& dirty) {
        int& slot = color[label];
        if (slot >= 0) return slot == value;
        slot = value;
        dirty.push_back(label);
        return true;
    }

    bool sweep() {
        bool changed = true;
        std::vector<int> dirty;
        while (changed) {
            changed = false;
            for (const auto& v : d.vertices) {
                int known = -1;
                for (int e : v.e)
                    if (color[e] >= 0) known = color[e];
                if (known < 0) continue;
                for (int e : v.e) {
                    if (color[e] < 0) changed = true;
                    if (!assign(e, known, dirty)) return false;
                }
            }
            for (const auto& c : d.crossings) {
                const int a = color[c.a], b = color[c.b], cc = color[c.c], dd = color[c.d];
                if (a >= 0 && b >= 0) {
                    if (dd < 0 || cc < 0) changed = true;
                    if (!assign(c.d, x.under(a, b), dirty)) return false;
                    if (!assign(c.c, x.over(b, a), dirty)) return false;
                } else if (cc >= 0 && dd >= 0) {
                    if (a < 0 || b < 0) changed = true;
                    if (!assign(c.a, x.under(dd, cc), dirty)) return false;
                    if (!assign(c.b, x.over(cc, dd), dirty)) return false;
                } else if (a >= 0 && cc >= 0) {
                    if (b < 0) changed = true;
                    if (!assign(c.b, x.over(cc, a), dirty)) return false;
                } else if (b >= 0 && dd >= 0) {
                    if (a < 0) changed = true;
                    if (!assign(c.a, x.under(dd, b), dirty)) return false;
                }
            }
        }
        return true;
    }
};

}  // namespace

bool coloring_ok(const MarkedGraphDiagram& d, const Bikei& x, const Coloring& c,
                 bool reading_flipped) {
    if (static_cast<int>(c.semiarcs.size()) != d.semiarc_count) return false;
    if (static_cast<int>(c.loops.size()) != d.free_loops) return false;
    auto col = [&](int label) { return c.semiarcs[label - 1]; };
    for (const auto& cr : d.crossings) {
        const int a = col(cr.a), b = col(cr.b), cc = col(cr.c), dd = col(cr.d);
        if (!reading_flipped) {
            if (dd != x.under(a, b) || cc != x.over(b, a)) return false;
        } else {
            if (a != x.under(dd, cc) || b != x.over(cc, dd)) return false;
        }
    }
    for (const auto& v : d.vertices) {
        const int c0 = col(v.e[0]);
        for (int e : v.e)
            if (col(e) != c0) return false;
    }
    for (int v : c.semiarcs)
        if (v < 0 || v >= x.size()) return false;
    for (int v : c.loops)
        if (v < 0 || v >= x.size()) return false;
    return true;
}

std::vector<Coloring> enumerate_colorings(const MarkedGraphDiagram& d, const Bikei& x) {
    validate(d);
    std::vector<Coloring> out;
    std::vector<int> color(static_cast<size_t>(d.semiarc_count) + 1, -1);

    auto emit_with_loops = [&](const std::vector<int>& semiarcs) {
        // each free loop takes an independent color; nested last => the
        // final sort sees them in lexicographic position anyway
        std::vector<int> loops(d.free_loops, 0);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == d.free_loops) {
                out.push_back({semiarcs, loops});
                return;
            }
            for (int v = 0; v < x.size(); ++v) {
                loops[i] = v;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    };

    auto rec = [&](auto&& self, int) -> void {
        Propagator prop{d, x, color};
        std::vector<int> snapshot = color;
        if (!prop.sweep()) {
            color = snapshot;
            return;
        }
        int next = -1;
        for (int l = 1; l <= d.semiarc_count; ++l)
            if (color[l] < 0) {
                next = l;
                break;
            }
        if (next < 0) {
            emit_with_loops(std::vector<int>(color.begin() + 1, color.end()));
            color = snapshot;
            return;
        }
        for (int v = 0; v < x.size(); ++v) {
            std::vector<int> before = color;
            color[next] = v;
            self(self, 0);
            color = before;
        }
        color = snapshot;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t counting_invariant(const MarkedGraphDiagram& d, const Bikei& x) {
    return enumerate_colorings(d, x).size();
}

}  // namespace slk
