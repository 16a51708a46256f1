#include "slk/ring.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace slk {

namespace {

using i128 = __int128;

i128 iabs(i128 v) { return v < 0 ? -v : v; }

}  // namespace

Modulus::Modulus(int n_) : n(n_) {
    if (n < 2) throw std::invalid_argument("modulus must be at least 2");
}

bool Modulus::is_unit(long long v) const noexcept {
    return std::gcd(reduce(v), static_cast<long long>(n)) == 1;
}

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    e_.assign(static_cast<size_t>(rows) * cols, 0);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    e_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            throw std::invalid_argument("ragged matrix initializer");
        e_.insert(e_.end(), row.begin(), row.end());
    }
}

std::vector<long long> smith_diagonal(const IntMatrix& a) {
    const int m = a.rows();
    const int n = a.cols();
    std::vector<i128> w(static_cast<size_t>(m) * n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) w[static_cast<size_t>(r) * n + c] = a.at(r, c);

    auto at = [&](int r, int c) -> i128& { return w[static_cast<size_t>(r) * n + c]; };

    std::vector<long long> diag;
    const int lim = std::min(m, n);
    for (int k = 0; k < lim; ++k) {
        // Smallest nonzero pivot in the trailing submatrix.
        int pr = -1, pc = -1;
        for (int r = k; r < m; ++r)
            for (int c = k; c < n; ++c)
                if (at(r, c) != 0 &&
                    (pr < 0 || iabs(at(r, c)) < iabs(at(pr, pc)))) {
                    pr = r;
                    pc = c;
                }
        if (pr < 0) break;  // trailing block is zero

        for (int c = 0; c < n; ++c) std::swap(at(k, c), at(pr, c));
        for (int r = 0; r < m; ++r) std::swap(at(r, k), at(r, pc));

        bool settled = false;
        while (!settled) {
            // Clear column k, then row k, with truncated quotients; any
            // remainder becomes a smaller pivot on the next sweep.
            bool reduced = true;
            for (int r = k + 1; r < m; ++r) {
                if (at(r, k) == 0) continue;
                i128 q = at(r, k) / at(k, k);
                for (int c = k; c < n; ++c) at(r, c) -= q * at(k, c);
                if (at(r, k) != 0) reduced = false;
            }
            for (int c = k + 1; c < n; ++c) {
                if (at(k, c) == 0) continue;
                i128 q = at(k, c) / at(k, k);
                for (int r = k; r < m; ++r) at(r, c) -= q * at(r, k);
                if (at(k, c) != 0) reduced = false;
            }
            if (!reduced) {
                int rr = -1, cc = -1;
                for (int r = k; r < m; ++r)
                    for (int c = k; c < n; ++c)
                        if (at(r, c) != 0 && (rr < 0 || iabs(at(r, c)) < iabs(at(rr, cc)))) {
                            rr = r;
                            cc = c;
                        }
                for (int c = 0; c < n; ++c) std::swap(at(k, c), at(rr, c));
                for (int r = 0; r < m; ++r) std::swap(at(r, k), at(r, cc));
                continue;
            }
            // Enforce the divisibility chain: fold any offending entry into
            // row k and keep reducing.
            settled = true;
            for (int r = k + 1; r < m && settled; ++r)
                for (int c = k + 1; c < n && settled; ++c)
                    if (at(r, c) % at(k, k) != 0) {
                        for (int j = 0; j < n; ++j) at(k, j) += at(r, j);
                        settled = false;
                    }
        }
        i128 d = iabs(at(k, k));
        diag.push_back(static_cast<long long>(d));
    }
    return diag;
}

std::uint64_t kernel_count(const IntMatrix& a, const Modulus& n) {
    const auto diag = smith_diagonal(a);
    const int r = static_cast<int>(diag.size());
    i128 count = 1;
    const i128 limit = static_cast<i128>(UINT64_MAX);
    for (long long d : diag) {
        count *= std::gcd(d, static_cast<long long>(n.n));
        if (count > limit) throw std::overflow_error("kernel count exceeds 64 bits");
    }
    for (int i = r; i < a.cols(); ++i) {
        count *= n.n;
        if (count > limit) throw std::overflow_error("kernel count exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(count);
}

}  // namespace slk
