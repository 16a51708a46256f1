#pragma once

#include <string>
#include <vector>

#include "slk/diagram.hpp"

namespace slk {

/// One connected component of the surface a diagram presents.
struct SurfaceComponent {
    int curves;        // closed diagram curves in this component
    int vertices;      // marked vertices (saddles)
    int euler;         // mu(L+) + mu(L-) - vertices, restricted to the component
    bool orientable;

    bool operator==(const SurfaceComponent&) const = default;
};

/// Combinatorial profile of the presented surface: per-component Euler
/// characteristics and orientability, plus the smoothing component counts.
/// Free loops each contribute a standalone sphere component.
struct DiagramProfile {
    std::vector<SurfaceComponent> components;  // deterministic order
    int smoothing_plus_circles;
    int smoothing_minus_circles;

    int euler_total() const;
};

DiagramProfile analyze(const MarkedGraphDiagram& d);

/// Short human-readable summary, e.g. "2 components: P^2, P^2".
std::string describe(const DiagramProfile& p);

}  // namespace slk
