#include "slk/bikei.hpp"

#include <algorithm>
#include <sstream>

namespace slk {

namespace {

std::vector<int> flatten_checked(int n, const std::vector<std::vector<int>>& rows,
                                 const char* which) {
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument(std::string(which) + " table has wrong row count");
    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument(std::string(which) + " table has a ragged row");
        for (int v : row) flat.push_back(v - 1);
    }
    return flat;
}

}  // namespace

Bikei::Bikei(int n, std::vector<int> under, std::vector<int> over)
    : n_(n), under_(std::move(under)), over_(std::move(over)) {
    if (n_ < 1) throw std::invalid_argument("bikei needs at least one element");
    const size_t want = static_cast<size_t>(n_) * n_;
    if (under_.size() != want || over_.size() != want)
        throw std::invalid_argument("operation table size mismatch");
    for (int v : under_)
        if (v < 0 || v >= n_) throw std::invalid_argument("under-table entry out of range");
    for (int v : over_)
        if (v < 0 || v >= n_) throw std::invalid_argument("over-table entry out of range");
}

Bikei Bikei::from_tables(const std::vector<std::vector<int>>& under,
                         const std::vector<std::vector<int>>& over) {
    const int n = static_cast<int>(under.size());
    return Bikei(n, flatten_checked(n, under, "under"), flatten_checked(n, over, "over"));
}

std::string BikeiViolation::to_string() const {
    std::ostringstream os;
    os << "axiom (" << axiom << ") fails at (";
    for (size_t i = 0; i < witness.size(); ++i) os << (i ? ", " : "") << witness[i];
    os << ")";
    return os.str();
}

std::optional<BikeiViolation> verify(const Bikei& b) {
    const int n = b.size();
    auto viol = [](const char* ax, std::vector<int> w) {
        for (int& v : w) ++v;
        return BikeiViolation{ax, std::move(w)};
    };

    for (int x = 0; x < n; ++x)
        if (b.under(x, x) != b.over(x, x)) return viol("i", {x});

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (b.under(b.under(x, y), y) != x) return viol("ii.1", {x, y});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (b.over(b.over(x, y), y) != x) return viol("ii.2", {x, y});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (b.under(x, b.over(y, x)) != b.under(x, y)) return viol("ii.3", {x, y});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (b.over(x, b.under(y, x)) != b.over(x, y)) return viol("ii.4", {x, y});

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (b.under(b.under(x, y), b.under(z, y)) !=
                    b.under(b.under(x, z), b.over(y, z)))
                    return viol("iii.1", {x, y, z});
                if (b.over(b.under(x, y), b.under(z, y)) !=
                    b.under(b.over(x, z), b.over(y, z)))
                    return viol("iii.2", {x, y, z});
                if (b.over(b.over(x, y), b.over(z, y)) !=
                    b.over(b.over(x, z), b.under(y, z)))
                    return viol("iii.3", {x, y, z});
            }
    return std::nullopt;
}

Bikei takasaki(int m) {
    if (m < 1) throw std::invalid_argument("takasaki kei needs m >= 1");
    std::vector<int> under(static_cast<size_t>(m) * m), over(under.size());
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            under[static_cast<size_t>(x) * m + y] = ((2 * y - x) % m + m) % m;
            over[static_cast<size_t>(x) * m + y] = x;
        }
    return Bikei(m, std::move(under), std::move(over));
}

std::variant<Bikei, AlexanderReject> alexander_bikei(const Modulus& n, long long t,
                                                     long long s, long long r) {
    t = n.reduce(t);
    s = n.reduce(s);
    r = n.reduce(r);
    if (n.reduce(t * t) != 1) return AlexanderReject{"t^2 = 1"};
    if (n.reduce(r * r) != 1) return AlexanderReject{"r^2 = 1"};
    if (n.reduce(s * (t + r)) != 0) return AlexanderReject{"s(t+r) = 0"};
    if (n.reduce(t + s) != r) return AlexanderReject{"r = t+s"};

    const int m = n.n;
    std::vector<int> under(static_cast<size_t>(m) * m), over(under.size());
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            under[static_cast<size_t>(x) * m + y] = static_cast<int>(n.reduce(t * x + s * y));
            over[static_cast<size_t>(x) * m + y] = static_cast<int>(n.reduce(r * x));
        }
    return Bikei(m, std::move(under), std::move(over));
}

namespace {

// Involutions of {0..n-1} in lexicographic order; columns of either table
// must be involutions, which is what makes column-wise search effective.
std::vector<std::vector<int>> involutions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> perm(n, -1);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            out.push_back(perm);
            return;
        }
        if (perm[i] >= 0) {
            self(self, i + 1);
            return;
        }
        for (int j = i; j < n; ++j) {
            if (perm[j] >= 0) continue;
            perm[i] = j;
            perm[j] = i;
            self(self, i + 1);
            perm[i] = -1;
            if (j != i) perm[j] = -1;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Partial-table view during enumeration: columns 0..uc-1 of under and
// 0..oc-1 of over are set. Axioms are re-checked against whatever cells are
// currently readable; value-dependent lookups simply defer the check.
struct PartialTables {
    int n;
    int uc = 0, oc = 0;
    std::vector<int> under, over;  // n*n, column-major convenience not needed

    int u(int x, int y) const { return under[static_cast<size_t>(x) * n + y]; }
    int o(int x, int y) const { return over[static_cast<size_t>(x) * n + y]; }
    bool has_u(int y) const { return y < uc; }
    bool has_o(int y) const { return y < oc; }

    bool consistent() const {
        for (int x = 0; x < n; ++x) {
            if (has_u(x) && has_o(x) && u(x, x) != o(x, x)) return false;
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                // ii.3 / ii.4 (ii.1 and ii.2 hold by construction)
                if (has_o(x) && has_u(y)) {
                    int yox = o(y, x);
                    if (has_u(yox) && u(x, yox) != u(x, y)) return false;
                }
                if (has_u(x) && has_o(y)) {
                    int yux = u(y, x);
                    if (has_o(yux) && o(x, yux) != o(x, y)) return false;
                }
            }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    if (has_u(y) && has_u(z) && has_o(z)) {
                        int xy = u(x, y), zy = u(z, y), xz = u(x, z), yz = o(y, z);
                        if (has_u(zy) && has_u(yz) && u(xy, zy) != u(xz, yz)) return false;
                    }
                    if (has_u(y) && has_o(z)) {
                        int xy = u(x, y), zy = u(z, y);
                        int xz = o(x, z), yz = o(y, z);
                        if (has_o(zy) && has_u(yz) && o(xy, zy) != u(xz, yz))
                            return false;
                    }
                    if (has_o(y) && has_o(z) && has_u(z)) {
                        int xy = o(x, y), zy = o(z, y), xz = o(x, z), yz = u(y, z);
                        if (has_o(zy) && has_o(yz) && o(xy, zy) != o(xz, yz)) return false;
                    }
                }
        return true;
    }
};

}  // namespace

std::vector<Bikei> enumerate_bikei(int n, const EnumerateOptions& opt) {
    if (n < 1) throw std::invalid_argument("enumerate_bikei needs n >= 1");
    if (n > opt.max_n)
        throw work_bound_error("bikei enumeration refused: n = " + std::to_string(n) +
                               " exceeds the bound " + std::to_string(opt.max_n));

    const auto invs = involutions(n);
    PartialTables p;
    p.n = n;
    p.under.assign(static_cast<size_t>(n) * n, -1);
    p.over.assign(static_cast<size_t>(n) * n, -1);

    std::vector<Bikei> found;
    // Columns are chosen alternately (under y, over y) so the diagonal and
    // exchange constraints bind as early as possible.
    auto rec = [&](auto&& self, int stage) -> void {
        if (stage == 2 * n) {
            found.emplace_back(n, p.under, p.over);
            return;
        }
        const bool under_col = stage % 2 == 0;
        const int y = stage / 2;
        for (const auto& col : invs) {
            for (int x = 0; x < n; ++x) {
                (under_col ? p.under : p.over)[static_cast<size_t>(x) * n + y] = col[x];
            }
            if (under_col)
                ++p.uc;
            else
                ++p.oc;
            if (p.consistent()) self(self, stage + 1);
            if (under_col)
                --p.uc;
            else
                --p.oc;
        }
    };
    rec(rec, 0);
    std::sort(found.begin(), found.end());
    return found;
}

bool is_hom(std::span<const int> f, const Bikei& x, const Bikei& y) {
    if (static_cast<int>(f.size()) != x.size())
        throw std::invalid_argument("map size does not match source bikei");
    for (int v : f)
        if (v < 0 || v >= y.size()) throw std::invalid_argument("map value out of range");
    for (int a = 0; a < x.size(); ++a)
        for (int b = 0; b < x.size(); ++b) {
            if (f[x.under(a, b)] != y.under(f[a], f[b])) return false;
            if (f[x.over(a, b)] != y.over(f[a], f[b])) return false;
        }
    return true;
}

Bikei parse_bikei_text(const std::string& text) {
    std::istringstream is(text);
    int n;
    if (!(is >> n) || n < 1) throw std::runtime_error("bikei text: bad element count");
    auto read_table = [&](const char* which) {
        std::vector<int> t;
        t.reserve(static_cast<size_t>(n) * n);
        for (int i = 0; i < n * n; ++i) {
            int v;
            if (!(is >> v) || v < 1 || v > n)
                throw std::runtime_error(std::string("bikei text: bad entry in ") + which);
            t.push_back(v - 1);
        }
        return t;
    };
    auto under = read_table("under table");
    auto over = read_table("over table");
    int extra;
    if (is >> extra) throw std::runtime_error("bikei text: trailing data");
    return Bikei(n, std::move(under), std::move(over));
}

std::string to_text(const Bikei& b) {
    std::ostringstream os;
    const int n = b.size();
    os << n << "\n";
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) os << (y ? " " : "") << b.under(x, y) + 1;
        os << "\n";
    }
    os << "\n";
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) os << (y ? " " : "") << b.over(x, y) + 1;
        os << "\n";
    }
    return os.str();
}

}  // namespace slk
