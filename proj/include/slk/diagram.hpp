#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace slk {

/// Crossing with under-strand ends (a, d) and over-strand ends (b, c);
/// the counterclockwise cyclic order around the crossing is a, b, d, c.
/// Reading conventions treat a as under-in and b as over-in; the opposite
/// reading (d, c as inputs) describes the same unoriented crossing.
struct Crossing {
    int a, b, c, d;

    std::array<int, 4> ends() const noexcept { return {a, b, c, d}; }

    bool operator==(const Crossing&) const = default;
};

/// Which opposite pair of ends the marker bar lies along.
enum class BarAxis { e1e3, e2e4 };

/// 4-valent vertex with a marker. Ends e[0..3] are in counterclockwise
/// cyclic order; the strands through the vertex are (e1,e3) and (e2,e4).
struct MarkedVertex {
    std::array<int, 4> e;
    BarAxis bar;

    bool operator==(const MarkedVertex&) const = default;
};

enum class Smoothing { plus, minus };

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int line_, int column_, const std::string& what_);
};

/// Marked graph diagram: semiarcs labeled 1..m, each appearing exactly
/// twice among the crossing/vertex ends, plus crossing-free loop components
/// counted separately.
struct MarkedGraphDiagram {
    int semiarc_count = 0;
    std::vector<Crossing> crossings;
    std::vector<MarkedVertex> vertices;
    int free_loops = 0;

    int ch_index() const noexcept {
        return static_cast<int>(crossings.size() + vertices.size());
    }

    bool operator==(const MarkedGraphDiagram&) const = default;
};

/// Parses the term code: whitespace-separated `X(a,b,c,d)`, `M13(a,b,c,d)`,
/// `M24(a,b,c,d)` and `O` terms. `#` starts a comment running to end of
/// line. Labels are arbitrary positive integers in the input and are
/// normalized to 1..m preserving their relative order.
MarkedGraphDiagram parse_diagram(const std::string& text);

/// Inverse of parse_diagram on valid diagrams.
std::string serialize(const MarkedGraphDiagram& d);

/// Checks the semiarc wiring (each label 1..m used exactly twice); throws
/// std::invalid_argument on violation.
void validate(const MarkedGraphDiagram& d);

/// Replaces every marked vertex by its plus- or minus-smoothing and renames
/// the merged semiarcs canonically. Crossings are untouched; closed merges
/// become free loops.
MarkedGraphDiagram smooth(const MarkedGraphDiagram& d, Smoothing dir);

/// k diagrams obtained from d by short random sequences of sound local
/// insertions: kinks (both chiralities), pokes (either strand over) and
/// finger moves across a marked vertex (over and under). Deterministic for
/// a fixed seed.
std::vector<MarkedGraphDiagram> fuzz_moves(const MarkedGraphDiagram& d,
                                           std::uint64_t seed, int k);

}  // namespace slk
