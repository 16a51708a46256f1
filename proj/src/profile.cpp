#include "slk/profile.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace slk {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Parity union-find over node ends, for the orientability 2-coloring.
struct ParityUF {
    std::vector<int> parent;
    std::vector<char> parity;  // parity to parent
    bool consistent = true;
    explicit ParityUF(int n) : parent(n), parity(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::pair<int, int> find(int v) {
        if (parent[v] == v) return {v, 0};
        auto [root, p] = find(parent[v]);
        parent[v] = root;
        parity[v] ^= p;
        return {root, parity[v]};
    }
    void relate(int a, int b, int diff) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if ((pa ^ pb) != diff) consistent = false;
            return;
        }
        parent[ra] = rb;
        parity[ra] = static_cast<char>(pa ^ pb ^ diff);
    }
};

}  // namespace

int DiagramProfile::euler_total() const {
    int total = 0;
    for (const auto& c : components) total += c.euler;
    return total;
}

DiagramProfile analyze(const MarkedGraphDiagram& d) {
    validate(d);
    const int m = d.semiarc_count;

    // Curve components: semiarcs glued along strands at every node.
    UnionFind curves(m + 1);
    for (const auto& c : d.crossings) {
        curves.unite(c.a, c.d);
        curves.unite(c.b, c.c);
    }
    for (const auto& v : d.vertices) {
        curves.unite(v.e[0], v.e[2]);
        curves.unite(v.e[1], v.e[3]);
    }

    // Surface components: saddles additionally merge the two strands.
    UnionFind surf(m + 1);
    for (const auto& c : d.crossings) {
        surf.unite(c.a, c.d);
        surf.unite(c.b, c.c);
    }
    for (const auto& v : d.vertices)
        for (int e : v.e) surf.unite(v.e[0], e);

    // Ends: 2 per semiarc in slot-scan order (crossings a,b,c,d then
    // vertices e1..e4), matching the wiring used everywhere else.
    const int crossing_ports = 4 * static_cast<int>(d.crossings.size());
    const int total_ports = crossing_ports + 4 * static_cast<int>(d.vertices.size());
    std::vector<int> port_label(total_ports);
    std::vector<std::array<int, 2>> ends(m + 1, {-1, -1});
    {
        int p = 0;
        auto place = [&](int label) {
            port_label[p] = label;
            (ends[label][0] < 0 ? ends[label][0] : ends[label][1]) = p;
            ++p;
        };
        for (const auto& c : d.crossings)
            for (int e : c.ends()) place(e);
        for (const auto& v : d.vertices)
            for (int e : v.e) place(e);
    }
    auto other_end = [&](int port) {
        const auto& e = ends[port_label[port]];
        return e[0] == port ? e[1] : e[0];
    };

    // Orientability: 2-color the node ends as flow-in / flow-out. Semiarcs
    // and crossing strands force opposite colors on their end pairs; saddle
    // ends must alternate around the vertex.
    auto component_orientable = [&](int root) {
        ParityUF local(total_ports);
        auto want = [&](int port) { return surf.find(port_label[port]) == root; };
        for (int s = 1; s <= m; ++s)
            if (surf.find(s) == root) local.relate(ends[s][0], ends[s][1], 1);
        for (size_t i = 0; i < d.crossings.size(); ++i) {
            const int base = 4 * static_cast<int>(i);
            if (want(base)) local.relate(base + 0, base + 3, 1);
            if (want(base + 1)) local.relate(base + 1, base + 2, 1);
        }
        for (size_t i = 0; i < d.vertices.size(); ++i) {
            const int base = crossing_ports + 4 * static_cast<int>(i);
            if (!want(base)) continue;
            local.relate(base + 0, base + 1, 1);
            local.relate(base + 1, base + 2, 1);
            local.relate(base + 2, base + 3, 1);
            local.relate(base + 3, base + 0, 1);
        }
        return local.consistent;
    };

    // Smoothing circle counts per surface component.
    std::map<int, std::array<int, 2>> circles;  // component root -> {mu+, mu-}
    for (int which = 0; which < 2; ++which) {
        const Smoothing dir = which == 0 ? Smoothing::plus : Smoothing::minus;
        std::vector<int> partner(total_ports, -1);
        for (size_t i = 0; i < d.crossings.size(); ++i) {
            const int base = 4 * static_cast<int>(i);
            partner[base + 0] = base + 3;
            partner[base + 3] = base + 0;
            partner[base + 1] = base + 2;
            partner[base + 2] = base + 1;
        }
        for (size_t i = 0; i < d.vertices.size(); ++i) {
            const int base = crossing_ports + 4 * static_cast<int>(i);
            const bool first =
                (d.vertices[i].bar == BarAxis::e1e3) == (dir == Smoothing::plus);
            const auto pairs = first ? std::array<std::array<int, 2>, 2>{{{0, 1}, {2, 3}}}
                                     : std::array<std::array<int, 2>, 2>{{{1, 2}, {3, 0}}};
            for (const auto& pr : pairs) {
                partner[base + pr[0]] = base + pr[1];
                partner[base + pr[1]] = base + pr[0];
            }
        }
        std::vector<char> visited(total_ports, 0);
        for (int p = 0; p < total_ports; ++p) {
            if (visited[p]) continue;
            const int root = surf.find(port_label[p]);
            int cur = p;
            while (!visited[cur]) {
                visited[cur] = 1;
                const int hop = partner[cur];
                visited[hop] = 1;
                cur = other_end(hop);
            }
            ++circles[root][which];
        }
    }

    std::map<int, SurfaceComponent> by_root;
    std::map<int, int> curve_count;  // curve root -> seen, to count curves per component
    {
        std::map<int, int> curve_to_surf;
        for (int s = 1; s <= m; ++s) curve_to_surf[curves.find(s)] = surf.find(s);
        for (const auto& [curve_root, surf_root] : curve_to_surf) ++curve_count[surf_root];
    }
    for (int s = 1; s <= m; ++s) {
        const int root = surf.find(s);
        if (by_root.count(root)) continue;
        SurfaceComponent comp;
        comp.curves = curve_count[root];
        comp.vertices = 0;
        for (const auto& v : d.vertices)
            if (surf.find(v.e[0]) == root) ++comp.vertices;
        comp.euler = circles[root][0] + circles[root][1] - comp.vertices;
        comp.orientable = component_orientable(root);
        by_root[root] = comp;
    }

    DiagramProfile out;
    out.smoothing_plus_circles = d.free_loops;
    out.smoothing_minus_circles = d.free_loops;
    for (const auto& [root, mu] : circles) {
        out.smoothing_plus_circles += mu[0];
        out.smoothing_minus_circles += mu[1];
    }
    for (int s = 1; s <= m; ++s) {
        const int root = surf.find(s);
        if (by_root.count(root)) {
            out.components.push_back(by_root[root]);
            by_root.erase(root);
        }
    }
    for (int i = 0; i < d.free_loops; ++i)
        out.components.push_back({1, 0, 2, true});
    return out;
}

std::string describe(const DiagramProfile& p) {
    std::ostringstream os;
    os << p.components.size() << (p.components.size() == 1 ? " component: " : " components: ");
    for (size_t i = 0; i < p.components.size(); ++i) {
        const auto& c = p.components[i];
        if (i) os << ", ";
        if (c.orientable) {
            const int genus = (2 - c.euler) / 2;
            if (genus == 0)
                os << "S^2";
            else if (genus == 1)
                os << "T^2";
            else
                os << "genus-" << genus;
        } else {
            const int crosscaps = 2 - c.euler;
            if (crosscaps == 1)
                os << "P^2";
            else if (crosscaps == 2)
                os << "K^2";
            else
                os << "N_" << crosscaps;
        }
    }
    return os.str();
}

}  // namespace slk
