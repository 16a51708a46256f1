#include "slk/bikei_module.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

namespace slk {

BikeiModule::BikeiModule(Bikei base, Modulus mod, std::vector<int> t, std::vector<int> s,
                         std::vector<int> r)
    : base_(std::move(base)), mod_(mod), t_(std::move(t)), s_(std::move(s)), r_(std::move(r)) {
    const size_t want = static_cast<size_t>(base_.size()) * base_.size();
    if (t_.size() != want || s_.size() != want || r_.size() != want)
        throw std::invalid_argument("coefficient table size does not match the base bikei");
    for (const auto* tab : {&t_, &s_, &r_})
        for (int v : *tab)
            if (v < 0 || v >= mod_.n)
                throw std::invalid_argument("coefficient entry out of range");
}

BikeiModule BikeiModule::from_blocks(const Bikei& base, int mod,
                                     const std::vector<std::vector<int>>& t,
                                     const std::vector<std::vector<int>>& s,
                                     const std::vector<std::vector<int>>& r) {
    const Modulus m(mod);
    auto flatten = [&](const std::vector<std::vector<int>>& rows) {
        std::vector<int> flat;
        for (const auto& row : rows)
            for (int v : row) flat.push_back(static_cast<int>(m.reduce(v)));
        return flat;
    };
    return BikeiModule(base, m, flatten(t), flatten(s), flatten(r));
}

std::string BikeiModule::to_block_text() const {
    std::ostringstream os;
    const int n = base_.size();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) os << (y ? " " : "") << t(x, y);
        os << " | ";
        for (int y = 0; y < n; ++y) os << (y ? " " : "") << s(x, y);
        os << " | ";
        for (int y = 0; y < n; ++y) os << (y ? " " : "") << r(x, y);
        os << "\n";
    }
    return os.str();
}

std::string ModuleViolation::to_string() const {
    std::ostringstream os;
    os << "axiom (" << axiom << ") fails at (";
    for (size_t i = 0; i < witness.size(); ++i) os << (i ? ", " : "") << witness[i];
    os << ")";
    return os.str();
}

namespace {

struct Tables {
    const Bikei* b;
    const Modulus* mod;
    const std::vector<int>* t;
    const std::vector<int>* s;
    const std::vector<int>* r;

    int n() const { return b->size(); }
    long long T(int x, int y) const { return (*t)[static_cast<size_t>(x) * n() + y]; }
    long long S(int x, int y) const { return (*s)[static_cast<size_t>(x) * n() + y]; }
    long long R(int x, int y) const { return (*r)[static_cast<size_t>(x) * n() + y]; }
    long long red(long long v) const { return mod->reduce(v); }
};

std::optional<ModuleViolation> check_all(const Tables& q) {
    const Bikei& b = *q.b;
    const int n = q.n();
    auto viol = [](const char* ax, std::vector<int> w) {
        for (int& v : w) ++v;
        return ModuleViolation{ax, std::move(w)};
    };

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int px = b.under(x, y), py = b.over(y, x);
            if (q.red(q.T(x, y) * q.T(px, py)) != 1) return viol("0.i", {x, y});
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int px = b.under(x, y), py = b.over(y, x);
            if (q.red(q.R(x, y) * q.R(px, py)) != 1) return viol("0.ii", {x, y});
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int px = b.under(x, y), py = b.over(y, x);
            if (q.red((q.T(x, y) + q.R(x, y)) * q.S(px, py)) != 0)
                return viol("0.iii", {x, y});
        }
    for (int x = 0; x < n; ++x)
        if (q.red(q.T(x, x) + q.S(x, x)) != q.R(x, x)) return viol("i.i", {x});

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (q.red(q.R(b.over(y, x), b.over(z, x)) * q.R(x, z)) !=
                    q.red(q.R(b.under(x, y), b.over(z, y)) * q.R(y, z)))
                    return viol("iii.i", {x, y, z});
                if (q.red(q.R(b.under(x, z), b.under(y, z)) * q.T(y, z)) !=
                    q.red(q.T(b.over(y, x), b.over(z, x)) * q.R(x, y)))
                    return viol("iii.ii", {x, y, z});
                if (q.red(q.R(b.under(x, z), b.under(y, z)) * q.S(y, z)) !=
                    q.red(q.S(b.over(y, x), b.over(z, x)) * q.R(x, z)))
                    return viol("iii.iii", {x, y, z});
                if (q.red(q.T(b.under(x, z), b.under(y, z)) * q.T(x, z)) !=
                    q.red(q.T(b.under(x, y), b.over(z, y)) * q.T(x, y)))
                    return viol("iii.iv", {x, y, z});
                if (q.red(q.S(b.under(x, z), b.under(y, z)) * q.T(y, z)) !=
                    q.red(q.T(b.under(x, y), b.over(z, y)) * q.S(x, y)))
                    return viol("iii.v", {x, y, z});
                if (q.red(q.T(b.under(x, z), b.under(y, z)) * q.S(x, z) +
                          q.S(b.under(x, z), b.under(y, z)) * q.S(y, z)) !=
                    q.red(q.S(b.under(x, y), b.over(z, y)) * q.R(y, z)))
                    return viol("iii.vi", {x, y, z});
            }
    return std::nullopt;
}

}  // namespace

std::optional<ModuleViolation> verify_module(const Bikei& base, const Modulus& mod,
                                             const std::vector<int>& t,
                                             const std::vector<int>& s,
                                             const std::vector<int>& r) {
    const size_t want = static_cast<size_t>(base.size()) * base.size();
    if (t.size() != want || s.size() != want || r.size() != want)
        throw std::invalid_argument("coefficient table size does not match the base bikei");
    return check_all(Tables{&base, &mod, &t, &s, &r});
}

std::optional<ModuleViolation> verify_module(const BikeiModule& m) {
    return verify_module(m.base(), m.modulus(), m.t_table(), m.s_table(), m.r_table());
}

namespace {

// Backtracking over the 3n^2 coefficient slots in flattened (T, S, R)
// row-major order. Every axiom instance is checked at the moment its last
// slot is filled, so the (0.*) pairings prune T and R hard and the deep
// (iii.*) instances never see a hopeless prefix.
struct SlotSearch {
    const Bikei& b;
    const Modulus mod;
    int n;
    int slots;                       // 3 n^2
    std::vector<int> t, s, r;        // working tables
    std::vector<int> units;          // unit values of Z_n'

    // Constraint instances, bucketed by the last slot they touch.
    struct Instance {
        int kind;       // 0:0.i 1:0.ii 2:0.iii 3:i.i 4..9: iii.*
        int x, y, z;
    };
    std::vector<std::vector<Instance>> buckets;

    explicit SlotSearch(const Bikei& base, const Modulus& m)
        : b(base), mod(m), n(base.size()), slots(3 * base.size() * base.size()) {
        t.assign(static_cast<size_t>(n) * n, 0);
        s.assign(t.size(), 0);
        r.assign(t.size(), 0);
        for (int v = 0; v < mod.n; ++v)
            if (mod.is_unit(v)) units.push_back(v);
        buckets.resize(slots);
        index_instances();
    }

    int tslot(int x, int y) const { return x * n + y; }
    int sslot(int x, int y) const { return n * n + x * n + y; }
    int rslot(int x, int y) const { return 2 * n * n + x * n + y; }

    void index_instances() {
        auto add = [&](std::initializer_list<int> touched, Instance inst) {
            buckets[*std::max_element(touched.begin(), touched.end())].push_back(inst);
        };
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const int px = b.under(x, y), py = b.over(y, x);
                add({tslot(x, y), tslot(px, py)}, {0, x, y, 0});
                add({rslot(x, y), rslot(px, py)}, {1, x, y, 0});
                add({tslot(x, y), rslot(x, y), sslot(px, py)}, {2, x, y, 0});
            }
        for (int x = 0; x < n; ++x)
            add({tslot(x, x), sslot(x, x), rslot(x, x)}, {3, x, 0, 0});
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    const int yox = b.over(y, x), zox = b.over(z, x);
                    const int xuy = b.under(x, y), zoy = b.over(z, y);
                    const int xuz = b.under(x, z), yuz = b.under(y, z);
                    add({rslot(yox, zox), rslot(x, z), rslot(xuy, zoy), rslot(y, z)},
                        {4, x, y, z});
                    add({rslot(xuz, yuz), tslot(y, z), tslot(yox, zox), rslot(x, y)},
                        {5, x, y, z});
                    add({rslot(xuz, yuz), sslot(y, z), sslot(yox, zox), rslot(x, z)},
                        {6, x, y, z});
                    add({tslot(xuz, yuz), tslot(x, z), tslot(xuy, zoy), tslot(x, y)},
                        {7, x, y, z});
                    add({sslot(xuz, yuz), tslot(y, z), tslot(xuy, zoy), sslot(x, y)},
                        {8, x, y, z});
                    add({tslot(xuz, yuz), sslot(x, z), sslot(xuz, yuz), sslot(y, z),
                         sslot(xuy, zoy), rslot(y, z)},
                        {9, x, y, z});
                }
    }

    long long T(int x, int y) const { return t[static_cast<size_t>(x) * n + y]; }
    long long S(int x, int y) const { return s[static_cast<size_t>(x) * n + y]; }
    long long R(int x, int y) const { return r[static_cast<size_t>(x) * n + y]; }

    bool holds(const Instance& q) const {
        const int x = q.x, y = q.y, z = q.z;
        auto red = [&](long long v) { return mod.reduce(v); };
        switch (q.kind) {
            case 0: {
                const int px = b.under(x, y), py = b.over(y, x);
                return red(T(x, y) * T(px, py)) == 1;
            }
            case 1: {
                const int px = b.under(x, y), py = b.over(y, x);
                return red(R(x, y) * R(px, py)) == 1;
            }
            case 2: {
                const int px = b.under(x, y), py = b.over(y, x);
                return red((T(x, y) + R(x, y)) * S(px, py)) == 0;
            }
            case 3:
                return red(T(x, x) + S(x, x)) == R(x, x);
            case 4:
                return red(R(b.over(y, x), b.over(z, x)) * R(x, z)) ==
                       red(R(b.under(x, y), b.over(z, y)) * R(y, z));
            case 5:
                return red(R(b.under(x, z), b.under(y, z)) * T(y, z)) ==
                       red(T(b.over(y, x), b.over(z, x)) * R(x, y));
            case 6:
                return red(R(b.under(x, z), b.under(y, z)) * S(y, z)) ==
                       red(S(b.over(y, x), b.over(z, x)) * R(x, z));
            case 7:
                return red(T(b.under(x, z), b.under(y, z)) * T(x, z)) ==
                       red(T(b.under(x, y), b.over(z, y)) * T(x, y));
            case 8:
                return red(S(b.under(x, z), b.under(y, z)) * T(y, z)) ==
                       red(T(b.under(x, y), b.over(z, y)) * S(x, y));
            case 9:
                return red(T(b.under(x, z), b.under(y, z)) * S(x, z) +
                           S(b.under(x, z), b.under(y, z)) * S(y, z)) ==
                       red(S(b.under(x, y), b.over(z, y)) * R(y, z));
            default:
                return false;
        }
    }

    int* slot_cell(int slot) {
        const int block = slot / (n * n), off = slot % (n * n);
        return block == 0 ? &t[off] : block == 1 ? &s[off] : &r[off];
    }

    // T and R entries must be units (forced by the 0.* pairings); S is free.
    const std::vector<int>& domain(int slot) const {
        return slot / (n * n) == 1 ? all_values : units;
    }

    std::vector<int> all_values;  // 0..n'-1

    void run(int slot, int stop_slot, const std::function<void()>& emit) {
        if (slot == stop_slot) {
            emit();
            return;
        }
        int* cell = slot_cell(slot);
        for (int v : domain(slot)) {
            *cell = v;
            bool ok = true;
            for (const auto& inst : buckets[slot])
                if (!holds(inst)) {
                    ok = false;
                    break;
                }
            if (ok) run(slot + 1, stop_slot, emit);
        }
        *cell = 0;
    }
};

int worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SLK_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

}  // namespace

std::vector<BikeiModule> search_modules(const Bikei& base, const Modulus& mod,
                                        const ModuleSearchOptions& opt) {
    const int n = base.size();
    const double raw = std::pow(static_cast<double>(mod.n), 3.0 * n * n);
    if (raw > opt.max_raw_space)
        throw work_bound_error(
            "module search refused: raw space " + std::to_string(raw) +
            " exceeds the bound " + std::to_string(opt.max_raw_space));

    SlotSearch search(base, mod);
    search.all_values.resize(mod.n);
    for (int v = 0; v < mod.n; ++v) search.all_values[v] = v;

    // Partition on the first row of T, then expand partitions independently;
    // concatenating in partition order keeps the output lexicographic.
    struct Prefix {
        std::vector<int> row;
    };
    std::vector<Prefix> prefixes;
    search.run(0, n, [&] {
        prefixes.push_back({std::vector<int>(search.t.begin(), search.t.begin() + n)});
    });

    const int workers =
        std::min(worker_count(opt.workers),
                 std::max(static_cast<int>(prefixes.size()), 1));
    std::vector<std::vector<BikeiModule>> results(prefixes.size());

    auto expand = [&](size_t i) {
        SlotSearch local(base, mod);
        local.all_values = search.all_values;
        for (int y = 0; y < n; ++y) local.t[y] = prefixes[i].row[y];
        // Re-check the instances bound inside the prefix.
        for (int slot = 0; slot < n; ++slot)
            for (const auto& inst : local.buckets[slot])
                if (!local.holds(inst)) return;
        local.run(n, local.slots, [&] {
            results[i].emplace_back(base, mod, local.t, local.s, local.r);
        });
    };

    if (workers <= 1) {
        for (size_t i = 0; i < prefixes.size(); ++i) expand(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < prefixes.size();
                     i = next.fetch_add(1))
                    expand(i);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<BikeiModule> out;
    for (auto& part : results)
        for (auto& m : part) out.push_back(std::move(m));
    return out;
}

std::variant<BikeiModule, ModuleViolation> constant_module(const Bikei& base,
                                                           const Modulus& mod,
                                                           long long t, long long s,
                                                           long long r) {
    const size_t cells = static_cast<size_t>(base.size()) * base.size();
    std::vector<int> tt(cells, static_cast<int>(mod.reduce(t)));
    std::vector<int> ss(cells, static_cast<int>(mod.reduce(s)));
    std::vector<int> rr(cells, static_cast<int>(mod.reduce(r)));
    if (auto bad = verify_module(base, mod, tt, ss, rr)) return *bad;
    return BikeiModule(base, mod, std::move(tt), std::move(ss), std::move(rr));
}

}  // namespace slk
