#pragma once

#include <cstdint>
#include <vector>

#include "slk/bikei.hpp"
#include "slk/diagram.hpp"

namespace slk {

/// Assignment of bikei elements (0-based) to the semiarcs of a diagram,
/// satisfying d = a under b, c = b over a at every crossing (a, b, c, d) and
/// equality of all four ends at every marked vertex. Free loops carry one
/// independent color each, appended after the semiarc colors.
struct Coloring {
    std::vector<int> semiarcs;  // indexed by semiarc label - 1
    std::vector<int> loops;

    auto operator<=>(const Coloring&) const = default;
};

/// All colorings, sorted lexicographically by (semiarcs, loops).
std::vector<Coloring> enumerate_colorings(const MarkedGraphDiagram& d, const Bikei& x);

/// Homset cardinality: |enumerate_colorings(d, x)|.
std::uint64_t counting_invariant(const MarkedGraphDiagram& d, const Bikei& x);

/// True iff the coloring satisfies every constraint; reading_flipped checks
/// the 180-degree rotated convention (inputs d, c instead of a, b), which
/// must accept exactly the same colorings.
bool coloring_ok(const MarkedGraphDiagram& d, const Bikei& x, const Coloring& c,
                 bool reading_flipped = false);

}  // namespace slk
