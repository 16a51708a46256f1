#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace slk {

/// The coefficient ring Z_n, n >= 2.
struct Modulus {
    int n;

    explicit Modulus(int n_);

    /// Canonical representative of v in [0, n).
    long long reduce(long long v) const noexcept {
        long long r = v % n;
        return r < 0 ? r + n : r;
    }

    bool is_unit(long long v) const noexcept;
};

/// Dense row-major integer matrix. Entries are machine integers; they are
/// read as a lift to Z when computing the Smith form and as residues when
/// counting kernels mod n.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    long long at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    long long& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }

    const std::vector<long long>& entries() const noexcept { return e_; }

    bool operator==(const IntMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<long long> e_;
};

/// Diagonal d_1 | d_2 | ... | d_r of the Smith normal form of the integer
/// lift of a, with every d_i > 0 and r the rank over Q. Intermediates are
/// 128-bit; with the small matrices handled here (entries below 2^32,
/// dimensions below a few hundred) that headroom is never exhausted.
std::vector<long long> smith_diagonal(const IntMatrix& a);

/// |{x in (Z_n)^cols : a.x == 0 (mod n)}|.
///
/// Computed as n^(cols - r) * prod_i gcd(d_i, n) from the Smith diagonal of
/// the lift. Throws std::overflow_error if the count does not fit in 64 bits.
std::uint64_t kernel_count(const IntMatrix& a, const Modulus& n);

}  // namespace slk
