#pragma once

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "slk/ring.hpp"

namespace slk {

/// Finite bikei on {0, .., n-1}: two involutory-in-the-second-argument
/// binary operations subject to the unoriented crossing axioms. Stored
/// 0-based; all printed forms are 1-based to match the usual block-matrix
/// convention for operation tables.
class Bikei {
public:
    /// Tables are n*n row-major with values in [0, n). Throws
    /// std::invalid_argument on a size or range problem.
    Bikei(int n, std::vector<int> under, std::vector<int> over);

    /// Convenience constructor from 1-based row tables, as printed.
    static Bikei from_tables(const std::vector<std::vector<int>>& under,
                             const std::vector<std::vector<int>>& over);

    int size() const noexcept { return n_; }

    /// x *under* y (the under-strand output at a crossing).
    int under(int x, int y) const { return under_[static_cast<size_t>(x) * n_ + y]; }
    /// x *over* y.
    int over(int x, int y) const { return over_[static_cast<size_t>(x) * n_ + y]; }

    const std::vector<int>& under_table() const noexcept { return under_; }
    const std::vector<int>& over_table() const noexcept { return over_; }

    /// Member order gives lexicographic comparison of (n, under, over),
    /// i.e. of the flattened [under | over] block matrix.
    auto operator<=>(const Bikei&) const = default;

private:
    int n_;
    std::vector<int> under_;
    std::vector<int> over_;
};

/// First failed axiom, in the fixed check order
///   i, ii.1, ii.2, ii.3, ii.4, iii.1, iii.2, iii.3,
/// with a 1-based witness tuple.
struct BikeiViolation {
    std::string axiom;
    std::vector<int> witness;

    std::string to_string() const;
};

/// nullopt iff all bikei axioms hold.
std::optional<BikeiViolation> verify(const Bikei& b);

/// The Takasaki kei on Z_m: x under y = 2y - x, x over y = x. m >= 1.
Bikei takasaki(int m);

struct AlexanderReject {
    std::string condition;  // the equation that failed, e.g. "t^2 = 1"
};

/// Alexander bikei on Z_n: x under y = t*x + s*y, x over y = r*x, subject to
/// t^2 = 1, r^2 = 1, s*(t+r) = 0 and r = t + s.
std::variant<Bikei, AlexanderReject> alexander_bikei(const Modulus& n, long long t,
                                                     long long s, long long r);

struct EnumerateOptions {
    int max_n = 4;  // refuse larger ground sets
};

/// All bikei on {0..n-1}, sorted by flattened [under | over] tables.
/// Throws work_bound_error when n exceeds the configured bound.
std::vector<Bikei> enumerate_bikei(int n, const EnumerateOptions& opt = {});

/// f maps {0..|x|-1} into {0..|y|-1}; true iff f preserves both operations.
bool is_hom(std::span<const int> f, const Bikei& x, const Bikei& y);

struct work_bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text format: first line n, then n rows of the under table, a blank line,
/// and n rows of the over table, all 1-based.
Bikei parse_bikei_text(const std::string& text);
std::string to_text(const Bikei& b);

}  // namespace slk
