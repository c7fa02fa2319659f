#pragma once

// Partition systems and permutation systems: the counted families whose
// sizes S_k(n, m) and s_k(n, m) coincide with the polynomial values
// B_k(m) and b_k(m).  The counters here enumerate every object explicitly
// (so they double as generators and can emit the objects), while the
// kstirling_* routes evaluate through the polynomial machinery, and the
// *_step / *_sum routes implement two independent recurrences.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"
#include "polynomial.hpp"
#include "shape.hpp"
#include "stirling_polynomials.hpp"

namespace stirling {

using Block = std::vector<int>;  // kept sorted; repeated entries model multiset blocks
using Family = std::vector<Block>;

inline bool is_segmented(const Family& family, const std::vector<int>& universe) {
    std::set<int> mins;
    for (const Block& b : family) {
        if (b.empty()) throw parameter_error("family blocks must be nonempty");
        mins.insert(*std::min_element(b.begin(), b.end()));
    }
    for (const Block& b : family) {
        const int lo = *std::min_element(b.begin(), b.end());
        const int hi = *std::max_element(b.begin(), b.end());
        for (int u : universe)
            if (lo < u && u < hi && mins.find(u) == mins.end()) return false;
    }
    return true;
}

struct SegmentedFamily {
    Family blocks;

    std::set<int> min_set() const {
        std::set<int> mins;
        for (const Block& b : blocks) {
            if (b.empty()) throw parameter_error("family blocks must be nonempty");
            mins.insert(*std::min_element(b.begin(), b.end()));
        }
        return mins;
    }
    bool related(int a, int b) const {  // a ~ b: some block holds both
        for (const Block& blk : blocks) {
            const bool has_a = std::find(blk.begin(), blk.end(), a) != blk.end();
            const bool has_b = std::find(blk.begin(), blk.end(), b) != blk.end();
            if (has_a && has_b) return true;
        }
        return false;
    }
};

inline bool is_segmented(const SegmentedFamily& f, const std::vector<int>& universe) {
    return is_segmented(f.blocks, universe);
}

// A full tuple (pi_0, pi_1, ..., pi_M): pi[j-1] holds the j-th partition.
struct PartitionSystem {
    MultisetShape shape;
    SegmentedFamily pi0;
    std::vector<Family> pi;
};

// A full tuple (sigma_0, sigma_1, ..., sigma_M): sigma[j-1] is one-line form.
struct PermutationSystem {
    MultisetShape shape;
    SegmentedFamily sigma0;
    std::vector<std::vector<int>> sigma;
};

namespace detail {

struct StepBudget {
    long long cap;
    long long used = 0;
    void tick() {
        if (++used > cap) throw budget_error("enumeration budget exceeded");
    }
};

inline std::vector<int> lmin_set(const std::vector<int>& perm) {
    std::vector<int> mins;
    int cur = 0;
    for (int v : perm)
        if (mins.empty() || v < cur) {
            cur = v;
            mins.push_back(v);
        }
    std::sort(mins.begin(), mins.end());
    return mins;
}

// True iff every entry after x's position exceeds x.
inline bool tail_greater(const std::vector<int>& perm, int x) {
    const auto it = std::find(perm.begin(), perm.end(), x);
    for (auto q = it + 1; q != perm.end(); ++q)
        if (*q < x) return false;
    return true;
}

struct ExtraValue {
    int value;
    int copies;
};

// Values the zero-indexed family may hold beyond the minima and x_1: the
// i-th non-minimum (i >= 2) carries t_{i-1} - 2 copies and the universe
// maximum carries t_l - 2 copies.
inline std::vector<ExtraValue> prescribed_extras(const std::vector<int>& xs,
                                                 const std::vector<int>& t, int universe_max) {
    std::vector<ExtraValue> vals;
    for (size_t i = 1; i < xs.size(); ++i) vals.push_back({xs[i], t[i - 1] - 2});
    vals.push_back({universe_max, t.back() - 2});
    return vals;
}

// Enumerate candidate zero-indexed families for a fixed minima set: one
// block per minimum, x_1 placed with 1, then the prescribed extra copies
// distributed over blocks whose minimum is smaller than the value.  With
// exact_multiset the full prescription must be used and copies of one value
// land in distinct blocks (set blocks); otherwise any subset may be used
// and a block may hold repeats (multiset blocks).  Only segmented families
// over [universe_max] survive.
inline std::vector<Family> zero_family_candidates(const std::vector<int>& minima,
                                                  const std::vector<int>& xs,
                                                  const std::vector<int>& t, int universe_max,
                                                  bool exact_multiset, StepBudget& budget) {
    Family cur;
    for (int mu : minima) cur.push_back(Block{mu});
    cur[0].push_back(xs[0]);
    const std::vector<ExtraValue> extras = prescribed_extras(xs, t, universe_max);
    std::vector<int> universe(static_cast<size_t>(universe_max));
    std::iota(universe.begin(), universe.end(), 1);
    std::vector<Family> out;

    std::function<void(size_t)> next_value;
    std::function<void(size_t, size_t, int)> place_copies;
    next_value = [&](size_t vi) {
        if (vi == extras.size()) {
            budget.tick();
            if (is_segmented(cur, universe)) out.push_back(cur);
            return;
        }
        place_copies(vi, 0, extras[vi].copies);
    };
    place_copies = [&](size_t vi, size_t from, int left) {
        budget.tick();
        if (left == 0) {
            next_value(vi + 1);
            return;
        }
        if (!exact_multiset) next_value(vi + 1);  // leave the remaining copies unused
        const int value = extras[vi].value;
        for (size_t b = from; b < cur.size(); ++b) {
            if (minima[b] >= value) continue;  // placement must keep every block minimum
            cur[b].push_back(value);
            place_copies(vi, exact_multiset ? b + 1 : b, left - 1);
            cur[b].pop_back();
        }
    };
    next_value(0);
    return out;
}

// Partitions of [n] with block-minima set exactly `minima`, encoded as the
// host minimum chosen for each non-minimum; once stage > a_i the element
// xs[i] is pinned to the block of 1.
inline std::vector<std::vector<int>> stage_partition_hosts(const std::vector<int>& minima,
                                                           const std::vector<int>& xs,
                                                           const std::vector<int>& a, int stage,
                                                           StepBudget& budget) {
    std::vector<std::vector<int>> choices;
    for (size_t i = 0; i < xs.size(); ++i) {
        std::vector<int> c;
        if (stage <= a[i]) {
            for (int mu : minima)
                if (mu < xs[i]) c.push_back(mu);
        } else {
            c.push_back(1);
        }
        choices.push_back(std::move(c));
    }
    std::vector<std::vector<int>> out;
    std::vector<size_t> idx(xs.size(), 0);
    while (true) {
        budget.tick();
        std::vector<int> pick(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) pick[i] = choices[i][idx[i]];
        out.push_back(std::move(pick));
        bool advanced = false;
        for (size_t j = xs.size(); j-- > 0;) {
            if (++idx[j] < choices[j].size()) {
                advanced = true;
                break;
            }
            idx[j] = 0;
        }
        if (!advanced) break;
    }
    return out;
}

inline Family partition_from_hosts(const std::vector<int>& minima, const std::vector<int>& xs,
                                   const std::vector<int>& hosts) {
    Family fam;
    std::map<int, size_t> where;
    for (int mu : minima) {
        where[mu] = fam.size();
        fam.push_back(Block{mu});
    }
    for (size_t i = 0; i < xs.size(); ++i) fam[where.at(hosts[i])].push_back(xs[i]);
    for (Block& b : fam) std::sort(b.begin(), b.end());
    return fam;
}

inline void check_system_parameters(const WeightDecomposition& w, int n, int m) {
    if (m < 1 || n < m || w.trailing != 0 || static_cast<int>(w.a.size()) != n - m)
        throw parameter_error("shape/parameters inconsistent");
}

inline std::vector<int> complement_in(int n, const std::vector<int>& minima) {
    std::vector<int> xs;
    for (int v = 1; v <= n; ++v)
        if (!std::binary_search(minima.begin(), minima.end(), v)) xs.push_back(v);
    return xs;
}

// Call fn on every sorted m-subset of [n] that contains 1.
template <typename Fn>
inline void for_each_minima_set(int n, int m, Fn&& fn) {
    std::vector<int> minima(static_cast<size_t>(m));
    minima[0] = 1;
    if (m == 1) {
        fn(minima);
        return;
    }
    std::vector<int> rest(static_cast<size_t>(m) - 1);
    std::iota(rest.begin(), rest.end(), 2);
    while (true) {
        for (int i = 0; i + 1 < m; ++i) minima[static_cast<size_t>(i) + 1] = rest[static_cast<size_t>(i)];
        fn(minima);
        int j = m - 2;
        while (j >= 0 && rest[static_cast<size_t>(j)] == n - (m - 2 - j)) --j;
        if (j < 0) break;
        ++rest[static_cast<size_t>(j)];
        for (int r = j + 1; r + 1 < m; ++r) rest[static_cast<size_t>(r)] = rest[static_cast<size_t>(r) - 1] + 1;
    }
}

}  // namespace detail

// Count (and optionally emit) every partition system for the shape: tuples
// (pi_0, pi_1, ..., pi_M) over [n] with m common block minima.
inline BigInt count_partition_systems(
    const MultisetShape& shape, int n, int m, long long cap = default_budget,
    const std::function<void(const PartitionSystem&)>& emit = {}) {
    if (cap < 0) throw parameter_error("negative budget");
    const WeightDecomposition w = decompose(shape);
    detail::check_system_parameters(w, n, m);
    const int l = static_cast<int>(w.a.size());
    if (l == 0) return 1;
    const int M = *std::max_element(w.a.begin(), w.a.end());
    detail::StepBudget budget{cap};
    BigInt total = 0;

    detail::for_each_minima_set(n, m, [&](const std::vector<int>& minima) {
        const std::vector<int> xs = detail::complement_in(n, minima);
        std::vector<std::vector<std::vector<int>>> stages;
        for (int j = 1; j <= M; ++j)
            stages.push_back(detail::stage_partition_hosts(minima, xs, w.a, j, budget));
        const std::vector<Family> zeros =
            detail::zero_family_candidates(minima, xs, w.t, n + 1, false, budget);
        std::vector<const std::vector<int>*> picked(static_cast<size_t>(M), nullptr);
        const auto tuples = [&](auto&& self, size_t stage) -> void {
            if (stage == static_cast<size_t>(M)) {
                for (const Family& z : zeros) {
                    budget.tick();
                    ++total;
                    if (emit) {
                        PartitionSystem sys{shape, SegmentedFamily{z}, {}};
                        for (const auto* hosts : picked)
                            sys.pi.push_back(detail::partition_from_hosts(minima, xs, *hosts));
                        emit(sys);
                    }
                }
                return;
            }
            for (const auto& hosts : stages[stage]) {
                picked[stage] = &hosts;
                self(self, stage + 1);
            }
        };
        tuples(tuples, 0);
    });
    return total;
}

// Count (and optionally emit) every permutation system for the shape:
// tuples (sigma_0, sigma_1, ..., sigma_M) over [n] with m common
// left-to-right minima.
inline BigInt count_permutation_systems(
    const MultisetShape& shape, int n, int m, long long cap = default_budget,
    const std::function<void(const PermutationSystem&)>& emit = {}) {
    if (cap < 0) throw parameter_error("negative budget");
    const WeightDecomposition w = decompose(shape);
    detail::check_system_parameters(w, n, m);
    const int l = static_cast<int>(w.a.size());
    if (l == 0) return 1;
    const int M = *std::max_element(w.a.begin(), w.a.end());
    if (factorial(n) > cap) throw budget_error("enumeration budget exceeded");
    detail::StepBudget budget{cap};
    BigInt total = 0;

    std::map<std::vector<int>, std::vector<std::vector<int>>> buckets;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        budget.tick();
        buckets[detail::lmin_set(perm)].push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (const auto& [minima, candidates] : buckets) {
        if (static_cast<int>(minima.size()) != m) continue;
        const std::vector<int> xs = detail::complement_in(n, minima);
        std::vector<std::vector<const std::vector<int>*>> stages(static_cast<size_t>(M));
        for (int j = 1; j <= M; ++j)
            for (const auto& sigma : candidates) {
                budget.tick();
                bool ok = true;
                for (size_t i = 0; i < xs.size() && ok; ++i)
                    if (j > w.a[i]) ok = detail::tail_greater(sigma, xs[i]);
                if (ok) stages[static_cast<size_t>(j) - 1].push_back(&sigma);
            }
        const std::vector<Family> zeros =
            detail::zero_family_candidates(minima, xs, w.t, n + 1, true, budget);
        std::vector<const std::vector<int>*> picked(static_cast<size_t>(M), nullptr);
        const auto tuples = [&](auto&& self, size_t stage) -> void {
            if (stage == static_cast<size_t>(M)) {
                for (const Family& z : zeros) {
                    budget.tick();
                    ++total;
                    if (emit) {
                        PermutationSystem sys{shape, SegmentedFamily{z}, {}};
                        for (const auto* sigma : picked) sys.sigma.push_back(*sigma);
                        emit(sys);
                    }
                }
                return;
            }
            for (const auto* sigma : stages[stage]) {
                picked[stage] = sigma;
                self(self, stage + 1);
            }
        };
        tuples(tuples, 0);
    }
    return total;
}

// Definition checkers, used to validate emitted systems independently of
// the enumeration that produced them.

inline bool is_valid_partition_system(const PartitionSystem& sys, int n, int m) {
    const WeightDecomposition w = decompose(sys.shape);
    const int l = static_cast<int>(w.a.size());
    if (w.trailing != 0 || l != n - m || m < 1 || l < 1) return false;
    const int M = *std::max_element(w.a.begin(), w.a.end());
    if (static_cast<int>(sys.pi.size()) != M) return false;
    // each pi_j partitions [n]
    for (const Family& fam : sys.pi) {
        std::vector<int> all;
        for (const Block& b : fam) {
            if (b.empty()) return false;
            all.insert(all.end(), b.begin(), b.end());
        }
        std::sort(all.begin(), all.end());
        std::vector<int> expect(static_cast<size_t>(n));
        std::iota(expect.begin(), expect.end(), 1);
        if (all != expect) return false;
    }
    // shared minima of the right cardinality
    const std::set<int> mins = SegmentedFamily{sys.pi[0]}.min_set();
    if (static_cast<int>(mins.size()) != m) return false;
    for (const Family& fam : sys.pi)
        if (SegmentedFamily{fam}.min_set() != mins) return false;
    std::vector<int> minima(mins.begin(), mins.end());
    const std::vector<int> xs = detail::complement_in(n, minima);
    // late partitions glue x_i to 1
    for (size_t i = 0; i < xs.size(); ++i)
        for (int j = w.a[i] + 1; j <= M; ++j)
            if (!SegmentedFamily{sys.pi[static_cast<size_t>(j) - 1]}.related(xs[i], 1)) return false;
    // the zero-indexed family
    const SegmentedFamily& z = sys.pi0;
    if (z.min_set() != mins) return false;
    if (!z.related(xs[0], 1)) return false;
    std::map<int, int> allowance;
    for (int mu : minima) allowance[mu] += 1;
    allowance[xs[0]] += 1;
    for (const auto [value, copies] : detail::prescribed_extras(xs, w.t, n + 1))
        allowance[value] += copies;
    std::map<int, int> used;
    for (const Block& b : z.blocks)
        for (int v : b) used[v] += 1;
    for (const auto& [v, c] : used)
        if (c > allowance[v]) return false;
    std::vector<int> universe(static_cast<size_t>(n) + 1);
    std::iota(universe.begin(), universe.end(), 1);
    return is_segmented(z, universe);
}

inline bool is_valid_permutation_system(const PermutationSystem& sys, int n, int m) {
    const WeightDecomposition w = decompose(sys.shape);
    const int l = static_cast<int>(w.a.size());
    if (w.trailing != 0 || l != n - m || m < 1 || l < 1) return false;
    const int M = *std::max_element(w.a.begin(), w.a.end());
    if (static_cast<int>(sys.sigma.size()) != M) return false;
    for (const auto& sigma : sys.sigma) {
        std::vector<int> sorted = sigma;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expect(static_cast<size_t>(n));
        std::iota(expect.begin(), expect.end(), 1);
        if (sorted != expect) return false;
    }
    const std::vector<int> minima = detail::lmin_set(sys.sigma[0]);
    if (static_cast<int>(minima.size()) != m) return false;
    for (const auto& sigma : sys.sigma)
        if (detail::lmin_set(sigma) != minima) return false;
    const std::vector<int> xs = detail::complement_in(n, minima);
    for (size_t i = 0; i < xs.size(); ++i)
        for (int j = w.a[i] + 1; j <= M; ++j)
            if (!detail::tail_greater(sys.sigma[static_cast<size_t>(j) - 1], xs[i])) return false;
    const SegmentedFamily& z = sys.sigma0;
    const std::set<int> mins(minima.begin(), minima.end());
    if (z.min_set() != mins) return false;
    if (!z.related(xs[0], 1)) return false;
    std::map<int, int> allowance;
    for (int mu : minima) allowance[mu] += 1;
    allowance[xs[0]] += 1;
    for (const auto [value, copies] : detail::prescribed_extras(xs, w.t, n + 1))
        allowance[value] += copies;
    std::map<int, int> used;
    for (const Block& b : z.blocks) {
        std::set<int> distinct(b.begin(), b.end());
        if (distinct.size() != b.size()) return false;  // blocks are sets
        for (int v : b) used[v] += 1;
    }
    if (used != allowance) return false;  // full prescription, nothing else
    std::vector<int> universe(static_cast<size_t>(n) + 1);
    std::iota(universe.begin(), universe.end(), 1);
    return is_segmented(z, universe);
}

namespace detail {

inline const StirlingPolyPair& cached_poly_pair(const MultisetShape& shape) {
    thread_local std::map<std::vector<int>, StirlingPolyPair> cache;
    auto it = cache.find(shape.multiplicities());
    if (it == cache.end()) it = cache.emplace(shape.multiplicities(), to_polynomial(shape)).first;
    return it->second;
}

inline BigInt integral_eval(const ExactPolynomial& p, long x) {
    const BigRational v = poly_eval(p, BigRational(x));
    if (denominator_of(v) != 1) throw consistency_error("polynomial evaluation is not an integer");
    return numerator_of(v);
}

inline MultisetShape shape_with_last(const MultisetShape& shape, int value) {
    std::vector<int> ks = shape.multiplicities();
    ks.back() = value;
    return MultisetShape(ks);
}

inline MultisetShape shape_drop_run(const MultisetShape& shape, int run_len) {
    std::vector<int> ks = shape.multiplicities();
    ks.resize(ks.size() - static_cast<size_t>(run_len));
    return MultisetShape(ks);
}

inline void check_kstirling_parameters(const WeightDecomposition& w, long n, long m) {
    if (w.trailing != 0 || n - m != static_cast<long>(w.a.size()))
        throw parameter_error("shape/parameters inconsistent");
}

}  // namespace detail

// Fast routes: evaluate the associated polynomials.  Negative arguments are
// served through the interpolated polynomial, which realizes the
// reciprocity S_k(n, m) = (-1)^K s_k(-m, -n) on integer inputs.
inline BigInt kstirling_S(const MultisetShape& shape, long n, long m) {
    detail::check_kstirling_parameters(decompose(shape), n, m);
    if (m >= 0) return B_rec(shape, static_cast<int>(m));
    return detail::integral_eval(detail::cached_poly_pair(shape).B, m);
}

inline BigInt kstirling_s(const MultisetShape& shape, long n, long m) {
    detail::check_kstirling_parameters(decompose(shape), n, m);
    if (n >= 0) return b_rec(shape, static_cast<int>(n));
    return detail::integral_eval(detail::cached_poly_pair(shape).b, n);
}

// Boundary recurrence route: peel one column off the last run, or the whole
// run once it is spent.
inline BigInt kstirling_S_step(const MultisetShape& shape, long n, long m) {
    const WeightDecomposition w = decompose(shape);
    detail::check_kstirling_parameters(w, n, m);
    if (m < 0) throw parameter_error("shape/parameters inconsistent");
    if (w.a.empty()) return 1;
    if (m == 0) return 0;
    const int a = w.a.back();
    const int t = w.t.back();
    BigInt total = 0;
    for (int i = 0; i <= t - 2; ++i)
        total += kstirling_S_step(detail::shape_with_last(shape, t - i), n - 1, m - 1);
    total += pow_int(BigInt(m), a) * kstirling_S_step(detail::shape_drop_run(shape, a), n - 1, m);
    return total;
}

inline BigInt kstirling_s_step(const MultisetShape& shape, long n, long m) {
    const WeightDecomposition w = decompose(shape);
    detail::check_kstirling_parameters(w, n, m);
    if (n < 0) throw parameter_error("shape/parameters inconsistent");
    if (w.a.empty()) return 1;
    if (n == 0) return 0;
    const int a = w.a.back();
    const int t = w.t.back();
    if (t >= 3)
        return kstirling_s_step(shape, n - 1, m - 1) +
               kstirling_s_step(detail::shape_with_last(shape, t - 1), n - 1, m - 1);
    return kstirling_s_step(shape, n - 1, m - 1) +
           pow_int(BigInt(n - 1), a) * kstirling_s_step(detail::shape_drop_run(shape, a), n - 1, m);
}

// Single-sum route: strip the whole last run against a binomial kernel.
inline BigInt kstirling_S_sum(const MultisetShape& shape, long n, long m) {
    const WeightDecomposition w = decompose(shape);
    detail::check_kstirling_parameters(w, n, m);
    if (m < 0) throw parameter_error("shape/parameters inconsistent");
    if (w.a.empty()) return 1;
    const int a = w.a.back();
    const int t = w.t.back();
    const MultisetShape inner = detail::shape_drop_run(shape, a);
    BigInt total = 0;
    for (long i = 0; i <= m; ++i)
        total += pow_int(BigInt(i), a) * binomial(t - 2 + m - i, t - 2) *
                 kstirling_S_sum(inner, n - m - 1 + i, i);
    return total;
}

inline BigInt kstirling_s_sum(const MultisetShape& shape, long n, long m) {
    const WeightDecomposition w = decompose(shape);
    detail::check_kstirling_parameters(w, n, m);
    if (n < 0) throw parameter_error("shape/parameters inconsistent");
    if (w.a.empty()) return 1;
    // m < 0 lies above the diagonal; the sum below is then empty, giving 0.
    const int a = w.a.back();
    const int t = w.t.back();
    const MultisetShape inner = detail::shape_drop_run(shape, a);
    BigInt total = 0;
    for (long i = 0; i <= m; ++i)
        total += pow_int(BigInt(n - m - 1 + i), a) * binomial(m - i, t - 2) *
                 kstirling_s_sum(inner, n - m - 1 + i, i);
    return total;
}

}  // namespace stirling
