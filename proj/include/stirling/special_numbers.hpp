#pragma once

// Odd-type Stirling numbers with their leader interpretation, r-restricted
// cross-checks, and the t-generalized central factorial numbers with their
// tuple interpretation and basis identities.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"
#include "polynomial.hpp"
#include "shape.hpp"
#include "stirling_polynomials.hpp"

namespace stirling {

// Second-kind odd-type triangle: the Kronecker term fires on the diagonal,
// seeded with value 0 at (0, 0); zero whenever k > n or k < 0.
inline BigInt S_odd(int n, int k) {
    if (n < 0) throw parameter_error("negative triangle index");
    if (k < 0 || k > n) return 0;
    std::vector<BigInt> row(1, BigInt(0));
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next(static_cast<size_t>(i) + 1, BigInt(0));
        for (int j = 0; j <= i; ++j) {
            BigInt v = 0;
            if (j >= 1) v += row[static_cast<size_t>(j) - 1];
            if (j <= i - 1) v += BigInt(j) * row[static_cast<size_t>(j)];
            if (j == i) v += 1;
            next[static_cast<size_t>(j)] = v;
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

// First-kind odd-type triangle: same shape with the (n-1) factor.
inline BigInt s_odd(int n, int k) {
    if (n < 0) throw parameter_error("negative triangle index");
    if (k < 0 || k > n) return 0;
    std::vector<BigInt> row(1, BigInt(0));
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next(static_cast<size_t>(i) + 1, BigInt(0));
        for (int j = 0; j <= i; ++j) {
            BigInt v = 0;
            if (j >= 1) v += row[static_cast<size_t>(j) - 1];
            if (j <= i - 1) v += BigInt(i - 1) * row[static_cast<size_t>(j)];
            if (j == i) v += 1;
            next[static_cast<size_t>(j)] = v;
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

// Generalized triangles: factor k^t (second kind) / (n-1)^t (first kind),
// seeded with value 1 at (0, 0).
inline BigInt S_t(int t, int n, int k) {
    if (t < 1) throw parameter_error("power parameter must be positive");
    if (n < 0) throw parameter_error("negative triangle index");
    if (k < 0 || k > n) return 0;
    std::vector<BigInt> row(1, BigInt(1));
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next(static_cast<size_t>(i) + 1, BigInt(0));
        for (int j = 0; j <= i; ++j) {
            BigInt v = 0;
            if (j >= 1) v += row[static_cast<size_t>(j) - 1];
            if (j <= i - 1) v += pow_int(BigInt(j), t) * row[static_cast<size_t>(j)];
            next[static_cast<size_t>(j)] = v;
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

inline BigInt s_t(int t, int n, int k) {
    if (t < 1) throw parameter_error("power parameter must be positive");
    if (n < 0) throw parameter_error("negative triangle index");
    if (k < 0 || k > n) return 0;
    std::vector<BigInt> row(1, BigInt(1));
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next(static_cast<size_t>(i) + 1, BigInt(0));
        for (int j = 0; j <= i; ++j) {
            BigInt v = 0;
            if (j >= 1) v += row[static_cast<size_t>(j) - 1];
            if (j <= i - 1) v += pow_int(BigInt(i - 1), t) * row[static_cast<size_t>(j)];
            next[static_cast<size_t>(j)] = v;
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

// ---------------------------------------------------------------------------
// Leaders: with blocks (or cycles) listed by increasing minimum, position l
// is a leader when the l-th minimum equals l.

inline std::vector<int> partition_leaders(const std::vector<std::vector<int>>& blocks) {
    std::vector<int> mins;
    for (const auto& b : blocks) {
        if (b.empty()) throw parameter_error("partition blocks must be nonempty");
        mins.push_back(*std::min_element(b.begin(), b.end()));
    }
    std::sort(mins.begin(), mins.end());
    std::vector<int> leaders;
    for (size_t i = 0; i < mins.size(); ++i)
        if (mins[i] == static_cast<int>(i) + 1) leaders.push_back(mins[i]);
    return leaders;
}

// Cycle decomposition of a one-line permutation (sigma[i] is the image of
// i+1), cycles listed by increasing minimum, each written from its minimum.
inline std::vector<std::vector<int>> cycle_decomposition(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    for (int v : sigma)
        if (v < 1 || v > n) throw parameter_error("not a permutation of [n]");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    std::vector<std::vector<int>> cycles;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<int> cyc;
        int v = start;
        do {
            if (seen[static_cast<size_t>(v)]) throw parameter_error("not a permutation of [n]");
            seen[static_cast<size_t>(v)] = 1;
            cyc.push_back(v);
            v = sigma[static_cast<size_t>(v) - 1];
        } while (v != start);
        cycles.push_back(std::move(cyc));
    }
    return cycles;  // scan order from 1 upward already sorts by minimum
}

inline std::vector<int> permutation_leaders(const std::vector<int>& sigma) {
    std::vector<std::vector<int>> cycles = cycle_decomposition(sigma);
    return partition_leaders(cycles);
}

namespace detail {

struct CountBudget {
    long long cap;
    long long used = 0;
    void tick() {
        if (++used > cap) throw budget_error("enumeration budget exceeded");
    }
};

// Restricted-growth enumeration of set partitions of [n] into exactly
// k blocks; fn receives the growth string (value = block index, and the
// first occurrence of each index is its block's minimum).
template <typename Fn>
inline void for_each_partition(int n, int k, CountBudget& budget, Fn&& fn) {
    if (n == 0) {
        if (k == 0) fn(std::vector<int>{});
        return;
    }
    std::vector<int> rgs(static_cast<size_t>(n), 0);
    const auto recurse = [&](auto&& self, int pos, int blocks) -> void {
        budget.tick();
        if (pos == n) {
            if (blocks == k) fn(rgs);
            return;
        }
        const int reachable = blocks + (n - pos);
        if (blocks > k || reachable < k) return;
        for (int b = 0; b <= blocks; ++b) {
            rgs[static_cast<size_t>(pos)] = b;
            self(self, pos + 1, b == blocks ? blocks + 1 : blocks);
        }
    };
    recurse(recurse, 0, 0);
}

inline std::vector<int> rgs_block_minima(const std::vector<int>& rgs) {
    std::vector<int> mins;  // first occurrence of each block index, 1-based
    int blocks = 0;
    for (size_t i = 0; i < rgs.size(); ++i)
        if (rgs[i] == blocks) {
            mins.push_back(static_cast<int>(i) + 1);
            ++blocks;
        }
    return mins;
}

inline std::vector<int> cycle_minima(const std::vector<int>& sigma) {
    std::vector<int> mins;
    for (const auto& cyc : cycle_decomposition(sigma)) mins.push_back(cyc.front());
    return mins;  // increasing by construction
}

inline int leader_count(const std::vector<int>& sorted_mins) {
    int c = 0;
    for (size_t i = 0; i < sorted_mins.size(); ++i)
        if (sorted_mins[i] == static_cast<int>(i) + 1) ++c;
    return c;
}

}  // namespace detail

// Exhaustive (leader, partition) pair count over partitions of [n] into
// k blocks; agrees with S_odd(n, k).
inline BigInt count_leader_partitions(int n, int k, long long cap = default_budget) {
    if (n < 0 || k < 0) throw parameter_error("negative triangle index");
    if (k > n) return 0;
    detail::CountBudget budget{cap};
    BigInt total = 0;
    detail::for_each_partition(n, k, budget, [&](const std::vector<int>& rgs) {
        total += detail::leader_count(detail::rgs_block_minima(rgs));
    });
    return total;
}

// Exhaustive (leader, permutation) pair count over permutations of [n]
// with k cycles; agrees with s_odd(n, k).
inline BigInt count_leader_permutations(int n, int k, long long cap = default_budget) {
    if (n < 0 || k < 0) throw parameter_error("negative triangle index");
    if (k > n) return 0;
    if (n == 0) return 0;
    if (factorial(n) > cap) throw budget_error("enumeration budget exceeded");
    detail::CountBudget budget{cap};
    BigInt total = 0;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        budget.tick();
        const std::vector<int> mins = detail::cycle_minima(perm);
        if (static_cast<int>(mins.size()) == k) total += detail::leader_count(mins);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// The shape whose multiset is {0, 1^2, ..., n^2}: one single copy followed
// by n doubled values.
inline MultisetShape odd_shape(int n) {
    if (n < 0) throw parameter_error("negative shape size");
    std::vector<int> comp(static_cast<size_t>(n) + 1, 2);
    comp[0] = 1;
    return MultisetShape(comp);
}

// The shape made of n repetitions of (1,...,1,2) with t entries per block.
inline MultisetShape tn_shape(int t, int n) {
    if (t < 1) throw parameter_error("power parameter must be positive");
    if (n < 0) throw parameter_error("negative shape size");
    std::vector<int> comp;
    for (int b = 0; b < n; ++b) {
        comp.insert(comp.end(), static_cast<size_t>(t) - 1, 1);
        comp.push_back(2);
    }
    return MultisetShape(comp);
}

// Sum over chains i_1 <= ... <= i_f <= bound (weak) or i_1 < ... < i_f <
// bound (strict) of the product of i_j^t.
inline BigInt central_product_sum(int t, int factors, int bound, bool strict) {
    if (t < 1) throw parameter_error("power parameter must be positive");
    if (factors < 0 || bound < 0) throw parameter_error("negative chain parameters");
    if (factors == 0) return 1;
    const int top = strict ? bound - 1 : bound;
    if (top < 1 || (strict && factors > top)) return 0;
    std::vector<int> chain(static_cast<size_t>(factors));
    if (strict)
        std::iota(chain.begin(), chain.end(), 1);
    else
        std::fill(chain.begin(), chain.end(), 1);
    BigInt total = 0;
    while (true) {
        BigInt term = 1;
        for (int v : chain) term *= pow_int(BigInt(v), t);
        total += term;
        bool advanced = false;
        for (size_t j = chain.size(); j-- > 0;) {
            const int limit = strict ? top - static_cast<int>(chain.size() - 1 - j) : top;
            if (chain[j] < limit) {
                ++chain[j];
                for (size_t r = j + 1; r < chain.size(); ++r)
                    chain[r] = strict ? chain[r - 1] + 1 : chain[j];
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return total;
}

// Odd-type bundle: the (1,2,...,2)-shape polynomial values match the
// odd-type triangles, and the nested product sums (computed by the generic
// chain closed forms) match as well.
inline bool odd_vs_polynomial(int n, int m) {
    if (n < 0 || m < 0) throw parameter_error("negative parameters");
    const MultisetShape shape = odd_shape(n);
    if (B_rec(shape, m) != S_odd(n + m, m)) return false;
    if (b_rec(shape, m) != s_odd(m, m - n)) return false;
    if (closed_form_S(shape, m) != S_odd(n + m, m)) return false;
    if (closed_form_s(shape, m) != s_odd(m, m - n)) return false;
    return true;
}

// Central-factorial bundle: tn-shape polynomial values match the
// generalized triangles, and the uniform-power chain sums match.
inline bool central_vs_polynomial(int t, int n, int m) {
    if (t < 1) throw parameter_error("power parameter must be positive");
    if (n < 0 || m < 0) throw parameter_error("negative parameters");
    const MultisetShape shape = tn_shape(t, n);
    if (B_rec(shape, m) != S_t(t, n + m, m)) return false;
    if (b_rec(shape, m) != s_t(t, m, m - n)) return false;
    if (central_product_sum(t, n, m, false) != S_t(t, n + m, m)) return false;
    if (central_product_sum(t, n, m, true) != s_t(t, m, m - n)) return false;
    return true;
}

// r-restricted cross-check: summing, over r = 1..k, the number of
// partitions (permutations) of [n] into k blocks (cycles) with 1..r in
// distinct blocks (cycles) reproduces the odd-type triangles.
inline bool r_stirling_sum_check(int n, int k, long long cap = default_budget) {
    if (n < k || k < 1) throw parameter_error("require n >= k >= 1");
    detail::CountBudget budget{cap};
    BigInt second_sum = 0;
    for (int r = 1; r <= k; ++r) {
        detail::for_each_partition(n, k, budget, [&](const std::vector<int>& rgs) {
            std::set<int> blocks_of_firsts;
            for (int v = 0; v < r; ++v) blocks_of_firsts.insert(rgs[static_cast<size_t>(v)]);
            if (static_cast<int>(blocks_of_firsts.size()) == r) second_sum += 1;
        });
    }
    if (second_sum != S_odd(n, k)) return false;
    if (factorial(n) * k > cap) throw budget_error("enumeration budget exceeded");
    BigInt first_sum = 0;
    for (int r = 1; r <= k; ++r) {
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            budget.tick();
            const auto cycles = cycle_decomposition(perm);
            if (static_cast<int>(cycles.size()) != k) continue;
            std::set<int> cycle_of;
            int found = 0;
            for (size_t c = 0; c < cycles.size(); ++c)
                for (int v : cycles[c])
                    if (v <= r) {
                        cycle_of.insert(static_cast<int>(c));
                        ++found;
                    }
            if (found == r && static_cast<int>(cycle_of.size()) == r) first_sum += 1;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return first_sum == s_odd(n, k);
}

// Basis identities: x^n against the falling-type products with nodes i^t,
// and the rising-type product against the first-kind coefficients.
inline bool verify_basis_identity(int t, int n) {
    if (t < 1) throw parameter_error("power parameter must be positive");
    if (n < 0) throw parameter_error("negative parameters");
    const ExactPolynomial x = ExactPolynomial::monomial(1, BigRational(1));
    ExactPolynomial second_side = ExactPolynomial::constant(BigRational(0));
    for (int k = 0; k <= n; ++k) {
        ExactPolynomial prod = ExactPolynomial::constant(BigRational(1));
        for (int i = 0; i < k; ++i)
            prod = prod * (x - ExactPolynomial::constant(BigRational(pow_int(BigInt(i), t))));
        second_side = second_side + BigRational(S_t(t, n, k)) * prod;
    }
    if (second_side != ExactPolynomial::monomial(n, BigRational(1))) return false;
    ExactPolynomial rising = ExactPolynomial::constant(BigRational(1));
    for (int i = 0; i < n; ++i)
        rising = rising * (x + ExactPolynomial::constant(BigRational(pow_int(BigInt(i), t))));
    ExactPolynomial first_side = ExactPolynomial::constant(BigRational(0));
    for (int k = 0; k <= n; ++k)
        first_side = first_side + BigRational(s_t(t, n, k)) * ExactPolynomial::monomial(k, BigRational(1));
    return rising == first_side;
}

enum class SystemKind { partitions, permutations };

// Exhaustive count of ordered t-tuples of partitions of [n] into k blocks
// (or permutations of [n] with k cycles) sharing the same minima set;
// agrees with S_t(n, k) / s_t(n, k).
inline BigInt count_tuple_systems(int t, int n, int k, SystemKind kind,
                                  long long cap = default_budget) {
    if (t < 1) throw parameter_error("power parameter must be positive");
    if (n < 0 || k < 0) throw parameter_error("negative triangle index");
    if (k > n) return 0;
    if (n == 0) return 1;  // the empty tuple of empty objects
    detail::CountBudget budget{cap};
    std::map<std::vector<int>, long long> bucket_sizes;
    if (kind == SystemKind::partitions) {
        detail::for_each_partition(n, k, budget, [&](const std::vector<int>& rgs) {
            bucket_sizes[detail::rgs_block_minima(rgs)] += 1;
        });
    } else {
        if (factorial(n) > cap) throw budget_error("enumeration budget exceeded");
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            budget.tick();
            const std::vector<int> mins = detail::cycle_minima(perm);
            if (static_cast<int>(mins.size()) == k) bucket_sizes[mins] += 1;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    BigInt expected = 0;
    for (const auto& [mins, c] : bucket_sizes) expected += pow_int(BigInt(c), t);
    if (expected > cap) throw budget_error("enumeration budget exceeded");
    // walk the tuples explicitly so the result is a true object count
    BigInt total = 0;
    for (const auto& [mins, c] : bucket_sizes) {
        const auto tuple_dfs = [&](auto&& self, int depth) -> void {
            if (depth == t) {
                budget.tick();
                total += 1;
                return;
            }
            for (long long pick = 0; pick < c; ++pick) self(self, depth + 1);
        };
        tuple_dfs(tuple_dfs, 0);
    }
    return total;
}

}  // namespace stirling
