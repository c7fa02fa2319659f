#pragma once

// The k-Stirling poset of a shape and order polynomials: Omega(P,m) counts
// weak order-preserving maps P -> {1..m}, the strict variant counts strict
// ones.  The poset construction is operational, mirroring the recurrence it
// must satisfy: a multiplicity-1 component contributes one isolated element,
// and a component of multiplicity k > 1 contributes one isolated element
// followed by k-1 elements each placed above everything present, so that
// removing the maximum element undoes one recurrence step.

#include <algorithm>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"
#include "shape.hpp"

namespace stirling {

// Elements are labeled 1..n; covers are (lower, upper) pairs forming the
// transitive reduction of an acyclic order.
struct LabeledPoset {
    int n = 0;
    std::vector<std::pair<int, int>> covers;
};

// anchors holds s_0 = 0 < s_1 < ... < s_l, where s_i is the label of the
// topmost element contributed by the i-th series of the weight
// decomposition; elements s_l+1..K are the trailing isolated ones.
struct KStirlingPoset {
    LabeledPoset base;
    MultisetShape shape;
    std::vector<int> anchors;
};

inline KStirlingPoset build_poset(const MultisetShape& shape) {
    LabeledPoset p;
    p.n = shape.total();
    std::vector<int> maximal;  // current maximal elements
    int next = 0;
    for (int c = 0; c < shape.components(); ++c) {
        maximal.push_back(++next);  // first copy: isolated for now
        for (int u = 1; u < shape.at(c); ++u) {
            const int top = ++next;  // each further copy dominates everything
            for (int e : maximal) p.covers.emplace_back(e, top);
            maximal.assign(1, top);
        }
    }
    const WeightDecomposition w = decompose(shape);
    std::vector<int> anchors(1, 0);
    for (size_t i = 0; i < w.a.size(); ++i) anchors.push_back(anchors.back() + w.a[i] + w.t[i] - 1);
    return KStirlingPoset{std::move(p), shape, std::move(anchors)};
}

namespace detail {

struct PosetAdjacency {
    std::vector<std::vector<int>> children;  // children[u] = elements covered by u
    std::vector<int> parent_count;           // number of elements covering each
    std::vector<int> topo;                   // a topological order, lowers first
    bool forest = false;                     // every element covered by at most one
};

inline PosetAdjacency analyze(const LabeledPoset& p) {
    PosetAdjacency a;
    a.children.assign(static_cast<size_t>(p.n) + 1, {});
    a.parent_count.assign(static_cast<size_t>(p.n) + 1, 0);
    std::vector<int> above_count(static_cast<size_t>(p.n) + 1, 0);
    std::vector<std::vector<int>> uppers(static_cast<size_t>(p.n) + 1);
    for (auto [lo, hi] : p.covers) {
        if (lo < 1 || hi < 1 || lo > p.n || hi > p.n || lo == hi)
            throw parameter_error("cover pair outside element range");
        a.children[static_cast<size_t>(hi)].push_back(lo);
        ++a.parent_count[static_cast<size_t>(lo)];
        uppers[static_cast<size_t>(lo)].push_back(hi);
        ++above_count[static_cast<size_t>(lo)];
    }
    a.forest = std::all_of(above_count.begin() + 1, above_count.end(), [](int c) { return c <= 1; });
    // Kahn from the bottom: an element enters once all elements it covers did
    std::vector<int> pending(static_cast<size_t>(p.n) + 1, 0);
    for (int e = 1; e <= p.n; ++e) pending[static_cast<size_t>(e)] = static_cast<int>(a.children[static_cast<size_t>(e)].size());
    std::vector<int> queue;
    for (int e = 1; e <= p.n; ++e)
        if (pending[static_cast<size_t>(e)] == 0) queue.push_back(e);
    for (size_t head = 0; head < queue.size(); ++head) {
        const int e = queue[head];
        a.topo.push_back(e);
        for (int up : uppers[static_cast<size_t>(e)])
            if (--pending[static_cast<size_t>(up)] == 0) queue.push_back(up);
    }
    if (static_cast<int>(a.topo.size()) != p.n) throw parameter_error("cover relation is cyclic");
    return a;
}

// Exact tree DP when the cover diagram is a forest (every element has at
// most one cover above it; always true for k-Stirling posets): with
// f_e(v) = #maps of e's lower set sending e to v, f_e(v) is the product
// over children of prefix sums of f_child.
inline BigInt omega_forest(const LabeledPoset& p, const PosetAdjacency& a, int m, bool strict) {
    // prefix[e][v] = sum_{w <= v} f_e(w), computed in topological order
    std::vector<std::vector<BigInt>> prefix(static_cast<size_t>(p.n) + 1);
    for (int e : a.topo) {
        std::vector<BigInt> f(static_cast<size_t>(m) + 1, BigInt(0));
        for (int v = 1; v <= m; ++v) {
            BigInt ways = 1;
            for (int c : a.children[static_cast<size_t>(e)]) {
                const int bound = strict ? v - 1 : v;
                ways *= prefix[static_cast<size_t>(c)][static_cast<size_t>(bound)];
                if (ways == 0) break;
            }
            f[static_cast<size_t>(v)] = ways;
        }
        auto& pre = prefix[static_cast<size_t>(e)];
        pre.assign(static_cast<size_t>(m) + 1, BigInt(0));
        for (int v = 1; v <= m; ++v) pre[static_cast<size_t>(v)] = pre[static_cast<size_t>(v) - 1] + f[static_cast<size_t>(v)];
    }
    BigInt total = 1;
    for (int e = 1; e <= p.n; ++e)
        if (a.parent_count[static_cast<size_t>(e)] == 0) total *= prefix[static_cast<size_t>(e)].back();
    return total;
}

// General fallback: depth-first assignment in topological order with early
// pruning.  Work is bounded by m^|P|, which the caller pre-checks.
inline BigInt omega_dfs(const LabeledPoset& p, const PosetAdjacency& a, int m, bool strict) {
    std::vector<int> value(static_cast<size_t>(p.n) + 1, 0);
    BigInt count = 0;
    const auto recurse = [&](auto&& self, size_t idx) -> void {
        if (idx == a.topo.size()) {
            ++count;
            return;
        }
        const int e = a.topo[idx];
        int lo = 1;
        for (int c : a.children[static_cast<size_t>(e)])
            lo = std::max(lo, strict ? value[static_cast<size_t>(c)] + 1 : value[static_cast<size_t>(c)]);
        for (int v = lo; v <= m; ++v) {
            value[static_cast<size_t>(e)] = v;
            self(self, idx + 1);
        }
    };
    recurse(recurse, 0);
    return count;
}

}  // namespace detail

// Number of order-preserving maps P -> {1..m}: sigma(x) <= sigma(y) (weak)
// or sigma(x) < sigma(y) (strict) whenever x < y in P.
inline BigInt omega(const LabeledPoset& p, int m, bool strict,
                    long long cap = default_budget) {
    if (m < 0) throw parameter_error("negative evaluation point");
    if (p.n == 0) return 1;
    if (m == 0) return 0;
    const detail::PosetAdjacency a = detail::analyze(p);
    if (a.forest) {
        if (static_cast<long long>(p.n) * m > cap) throw budget_error("counting budget exceeded");
        return detail::omega_forest(p, a, m, strict);
    }
    if (pow_int(m, p.n) > cap) throw budget_error("counting budget exceeded");
    return detail::omega_dfs(p, a, m, strict);
}

inline BigInt omega(const KStirlingPoset& p, int m, bool strict,
                    long long cap = default_budget) {
    return omega(p.base, m, strict, cap);
}

}  // namespace stirling
