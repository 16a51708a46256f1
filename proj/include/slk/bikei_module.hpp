#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "slk/bikei.hpp"
#include "slk/ring.hpp"

namespace slk {

/// Coefficient assignment (t, s, r) : X x X -> Z_n' turning bead systems on
/// X-colored diagrams into modules. Matrices are n*n row-major, entries
/// reduced into [0, n').
class BikeiModule {
public:
    BikeiModule(Bikei base, Modulus mod, std::vector<int> t, std::vector<int> s,
                std::vector<int> r);

    static BikeiModule from_blocks(const Bikei& base, int mod,
                                   const std::vector<std::vector<int>>& t,
                                   const std::vector<std::vector<int>>& s,
                                   const std::vector<std::vector<int>>& r);

    const Bikei& base() const noexcept { return base_; }
    const Modulus& modulus() const noexcept { return mod_; }

    int t(int x, int y) const { return t_[static_cast<size_t>(x) * base_.size() + y]; }
    int s(int x, int y) const { return s_[static_cast<size_t>(x) * base_.size() + y]; }
    int r(int x, int y) const { return r_[static_cast<size_t>(x) * base_.size() + y]; }

    const std::vector<int>& t_table() const noexcept { return t_; }
    const std::vector<int>& s_table() const noexcept { return s_; }
    const std::vector<int>& r_table() const noexcept { return r_; }

    /// Block-matrix text [T|S|R], one row of the three blocks per line.
    std::string to_block_text() const;

private:
    Bikei base_;
    Modulus mod_;
    std::vector<int> t_, s_, r_;
};

/// First failed coefficient axiom with its witness, in the fixed order
///   0.i, 0.ii, 0.iii, i.i, iii.i .. iii.vi,
/// scanning witnesses lexicographically. Witness is 1-based (x, y[, z]).
struct ModuleViolation {
    std::string axiom;
    std::vector<int> witness;

    std::string to_string() const;
};

/// nullopt iff (t, s, r) satisfies every coefficient axiom over the base.
std::optional<ModuleViolation> verify_module(const BikeiModule& m);
std::optional<ModuleViolation> verify_module(const Bikei& base, const Modulus& mod,
                                             const std::vector<int>& t,
                                             const std::vector<int>& s,
                                             const std::vector<int>& r);

struct ModuleSearchOptions {
    /// Refuse when n'^(3 n^2), the raw assignment space, exceeds this.
    double max_raw_space = 1e18;
    /// Worker threads; 0 = read SLK_WORKERS from the environment, else 1.
    int workers = 0;
};

/// Every coefficient triple passing verify_module, in lexicographic order of
/// the flattened (T, S, R) tables. Deterministic regardless of worker count.
std::vector<BikeiModule> search_modules(const Bikei& base, const Modulus& mod,
                                        const ModuleSearchOptions& opt = {});

/// Constant coefficients t, s, r at every pair; the axioms collapse to the
/// Alexander conditions when the assignment is valid over the given base.
std::variant<BikeiModule, ModuleViolation> constant_module(const Bikei& base,
                                                           const Modulus& mod,
                                                           long long t, long long s,
                                                           long long r);

}  // namespace slk
