#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "slk/bikei_module.hpp"
#include "slk/coloring.hpp"
#include "slk/diagram.hpp"
#include "slk/ring.hpp"

namespace slk {

/// Formal sum of u-powers with natural coefficients; the zero polynomial is
/// the empty term map.
struct InvariantPolynomial {
    std::map<std::uint64_t, std::uint64_t> terms;  // exponent -> coefficient

    std::uint64_t coefficient_sum() const;

    /// Ascending exponents, coefficient 1 suppressed, exponent 1 printed as
    /// plain `u`: e.g. "5u+2u^3+u^9"; the zero polynomial prints "0".
    std::string to_string() const;

    bool operator==(const InvariantPolynomial&) const = default;
};

/// Which local reading assembles the crossing rows. The flipped reading
/// rotates every crossing 180 degrees; both must yield kernels of equal
/// size for a valid module.
enum class BeadReading { forward, flipped };

/// Homogeneous bead system of an X-colored diagram: one column per
/// vertex-merged semiarc class (plus one per free loop), two rows per
/// crossing:  t.a + s.b - d = 0  and  r.b - c = 0, coefficients taken at
/// the crossing's (under-in, over-in) colors.
IntMatrix bead_matrix(const MarkedGraphDiagram& d, const Coloring& f,
                      const BikeiModule& m, BeadReading reading = BeadReading::forward);

/// Number of bead colorings |M_f| = size of the bead-system kernel over Z_n'.
/// Throws std::invalid_argument when f's bikei size or the module base mismatch.
std::uint64_t bead_module_size(const MarkedGraphDiagram& d, const Coloring& f,
                               const BikeiModule& m,
                               BeadReading reading = BeadReading::forward);

/// Sum of u^{|M_f|} over the homset.
InvariantPolynomial enhanced_polynomial(const MarkedGraphDiagram& d, const BikeiModule& m);

}  // namespace slk
