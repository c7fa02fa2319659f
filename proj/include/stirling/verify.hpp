#pragma once

// Cross-checking battery.  Every quantity the library can compute by more
// than one route is recomputed by all routes over a bounded universe of
// shapes; the first disagreement per family is reported.  Sub-cases that
// exceed the work budget are counted as skipped, never as failures, so the
// battery stays deterministic under any cap.

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"
#include "permutations.hpp"
#include "polynomial.hpp"
#include "poset.hpp"
#include "shape.hpp"
#include "special_numbers.hpp"
#include "stirling_polynomials.hpp"
#include "systems.hpp"

namespace stirling {

struct VerifyLimits {
    int max_K = 8;                           // test all shapes with total <= max_K
    int max_m = 5;                           // evaluation points 0..max_m
    long long cap = default_budget;          // per-sub-case work budget
    std::vector<MultisetShape> seed_shapes;  // extra shapes beyond the universe
    std::string only;                        // restrict to one family when nonempty
};

struct FamilyReport {
    std::string family;
    long long cases = 0;    // sub-cases checked to completion
    long long skipped = 0;  // sub-cases abandoned on the work budget
    bool pass = true;
    std::string counterexample;  // first failing sub-case, empty when pass
};

struct VerifyReport {
    std::vector<FamilyReport> families;

    bool all_pass() const {
        for (const auto& f : families)
            if (!f.pass) return false;
        return true;
    }
};

inline const std::vector<std::string>& verify_family_names() {
    static const std::vector<std::string> names = {
        "route-equivalence",   "polynomial-structure", "reciprocity",
        "order-polynomial",    "eulerian",             "partition-systems",
        "permutation-systems", "kstirling-recurrences", "odd-stirling",
        "central-factorial",   "examples-table",
    };
    return names;
}

// All shapes with total at most max_K, ordered by total then lexicographic
// first-part order, followed by any seed shapes not already present.
inline std::vector<MultisetShape> shape_universe(const VerifyLimits& limits) {
    std::vector<MultisetShape> shapes;
    std::vector<int> prefix;
    const std::function<void(int)> extend = [&](int remaining) {
        if (remaining == 0) {
            shapes.emplace_back(prefix);
            return;
        }
        for (int k = 1; k <= remaining; ++k) {
            prefix.push_back(k);
            extend(remaining - k);
            prefix.pop_back();
        }
    };
    for (int K = 0; K <= limits.max_K; ++K) extend(K);
    for (const auto& s : limits.seed_shapes)
        if (std::find(shapes.begin(), shapes.end(), s) == shapes.end()) shapes.push_back(s);
    return shapes;
}

namespace detail {

class FamilyRunner {
public:
    explicit FamilyRunner(std::string name) { report_.family = std::move(name); }

    // Budget exhaustion is a skip; a false return or a thrown error is a
    // failure.  All sub-cases run even after a failure so the counts do not
    // depend on where the first failure happened.
    void run(const std::string& label, const std::function<bool()>& check) {
        try {
            const bool ok = check();
            ++report_.cases;
            if (!ok) fail(label, "mismatch");
        } catch (const budget_error&) {
            ++report_.skipped;
        } catch (const std::exception& e) {
            ++report_.cases;
            fail(label, e.what());
        }
    }

    FamilyReport take() { return std::move(report_); }

private:
    void fail(const std::string& label, const std::string& what) {
        if (!report_.pass) return;
        report_.pass = false;
        report_.counterexample = label + ": " + what;
    }

    FamilyReport report_;
};

inline std::string shape_label(const MultisetShape& shape, int m) {
    return "shape=(" + shape.to_string() + ") m=" + std::to_string(m);
}

// Four routes to the weak-side values and four to the strict-side values
// must agree pointwise (the convolution route applies only when the last
// multiplicity exceeds one).
inline FamilyReport family_route_equivalence(const VerifyLimits& limits,
                                             const std::vector<MultisetShape>& shapes) {
    FamilyRunner r("route-equivalence");
    for (const auto& shape : shapes)
        for (int m = 0; m <= limits.max_m; ++m) {
            const std::string label = shape_label(shape, m);
            r.run(label + " weak", [&] {
                const BigInt base = B_series(shape, m);
                if (B_rec(shape, m) != base) return false;
                if (closed_form_S(shape, m) != base) return false;
                if (!shape.empty() && shape.last() > 1 && B_conv(shape, m) != base) return false;
                return true;
            });
            r.run(label + " strict", [&] {
                const BigInt base = b_series(shape, m);
                if (b_rec(shape, m) != base) return false;
                if (closed_form_s(shape, m) != base) return false;
                if (!shape.empty() && shape.last() > 1 && b_conv(shape, m) != base) return false;
                return true;
            });
        }
    return r.take();
}

// Interpolation plus the structural assertions bundled in to_polynomial:
// degree, leading coefficient, zero sets, first nonzero beyond them, and
// the value 1 at 1.
inline FamilyReport family_polynomial_structure(const VerifyLimits&,
                                                const std::vector<MultisetShape>& shapes) {
    FamilyRunner r("polynomial-structure");
    for (const auto& shape : shapes)
        r.run("shape=(" + shape.to_string() + ")", [&] {
            to_polynomial(shape);
            return true;
        });
    return r.take();
}

// B(x) = (-1)^K b(-x), both at the coefficient level and — for shapes
// without trailing ones — through the integer triangles at negative points.
inline FamilyReport family_reciprocity(const VerifyLimits& limits,
                                       const std::vector<MultisetShape>& shapes) {
    FamilyRunner r("reciprocity");
    for (const auto& shape : shapes) {
        const BigRational sign(shape.total() % 2 == 0 ? 1 : -1);
        r.run("shape=(" + shape.to_string() + ") coefficients", [&] {
            const StirlingPolyPair& pair = detail::cached_poly_pair(shape);
            return pair.B == sign * pair.b.reflected();
        });
        if (decompose(shape).trailing != 0) continue;
        const long l = shape.length();
        r.run("shape=(" + shape.to_string() + ") negative points", [&] {
            const BigInt s = shape.total() % 2 == 0 ? 1 : -1;
            for (long m = 1; m <= limits.max_m; ++m)
                if (kstirling_S(shape, l + m, m) != s * kstirling_s(shape, -m, -(l + m)))
                    return false;
            return true;
        });
    }
    return r.take();
}

// The order polynomial of the shape's poset in the weak sense equals the
// weak-side polynomial, and in the strict sense the strict-side one.
inline FamilyReport family_order_polynomial(const VerifyLimits& limits,
                                            const std::vector<MultisetShape>& shapes) {
    FamilyRunner r("order-polynomial");
    for (const auto& shape : shapes) {
        const KStirlingPoset poset = build_poset(shape);
        for (int m = 0; m <= limits.max_m; ++m)
            r.run(shape_label(shape, m), [&] {
                return omega(poset, m, false, limits.cap) == B_rec(shape, m) &&
                       omega(poset, m, true, limits.cap) == b_rec(shape, m);
            });
    }
    return r.take();
}

// The descent-count table from the recurrence sums to the number of
// admissible words and matches direct enumeration.
inline FamilyReport family_eulerian(const VerifyLimits& limits,
                                    const std::vector<MultisetShape>& shapes) {
    FamilyRunner r("eulerian");
    for (const auto& shape : shapes) {
        const EulerianTable rec = eulerian_rec(shape);
        r.run("shape=(" + shape.to_string() + ") row-sum", [&] {
            BigInt total = 0;
            for (const BigInt& c : rec.counts) total += c;
            return total == sp_count(shape);
        });
        r.run("shape=(" + shape.to_string() + ") enumeration", [&] {
            return eulerian_brute(shape, limits.cap).counts == rec.counts;
        });
    }
    return r.take();
}

// Counting the partition-side configurations reproduces the weak-side
// values S_k(l + m, m) = B_k(m).
inline FamilyReport family_partition_systems(const VerifyLimits& limits,
                                             const std::vector<MultisetShape>& shapes) {
    FamilyRunner r("partition-systems");
    for (const auto& shape : shapes) {
        if (decompose(shape).trailing != 0) continue;
        const int l = shape.length();
        for (int m = 1; m <= limits.max_m; ++m)
            r.run(shape_label(shape, m), [&] {
                return count_partition_systems(shape, l + m, m, limits.cap) == B_rec(shape, m);
            });
    }
    return r.take();
}

// Counting the permutation-side configurations reproduces the strict-side
// values s_k(m, m - l) = b_k(m).  The point range is additionally capped at
// m = 8 to keep the factorial enumeration tractable.
inline FamilyReport family_permutation_systems(const VerifyLimits& limits,
                                               const std::vector<MultisetShape>& shapes) {
    FamilyRunner r("permutation-systems");
    for (const auto& shape : shapes) {
        if (decompose(shape).trailing != 0) continue;
        const int l = shape.length();
        const int top = std::min(l + limits.max_m, 8);
        for (int m = l + 1; m <= top; ++m)
            r.run(shape_label(shape, m), [&] {
                return count_permutation_systems(shape, m, m - l, limits.cap) == b_rec(shape, m);
            });
    }
    return r.take();
}

// The boundary (one column at a time) and single-sum (one run at a time)
// triangle recurrences agree with the polynomial routes on both triangles.
inline FamilyReport family_kstirling_recurrences(const VerifyLimits& limits,
                                                 const std::vector<MultisetShape>& shapes) {
    FamilyRunner r("kstirling-recurrences");
    for (const auto& shape : shapes) {
        if (decompose(shape).trailing != 0) continue;
        const long l = shape.length();
        for (long m = 0; m <= limits.max_m; ++m)
            r.run(shape_label(shape, static_cast<int>(m)), [&] {
                const BigInt S = kstirling_S(shape, l + m, m);
                if (kstirling_S_step(shape, l + m, m) != S) return false;
                if (kstirling_S_sum(shape, l + m, m) != S) return false;
                const BigInt s = kstirling_s(shape, m, m - l);
                if (kstirling_s_step(shape, m, m - l) != s) return false;
                if (kstirling_s_sum(shape, m, m - l) != s) return false;
                return true;
            });
    }
    return r.take();
}

// Odd-type triangles: polynomial values, leader counting, the fixed worked
// examples, diagonals, and the r-restricted decomposition.
inline FamilyReport family_odd_stirling(const VerifyLimits& limits) {
    FamilyRunner r("odd-stirling");
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= limits.max_m; ++m)
            r.run("odd n=" + std::to_string(n) + " m=" + std::to_string(m),
                  [&] { return odd_vs_polynomial(n, m); });
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            r.run("leaders n=" + std::to_string(n) + " k=" + std::to_string(k), [&] {
                return count_leader_partitions(n, k, limits.cap) == S_odd(n, k) &&
                       count_leader_permutations(n, k, limits.cap) == s_odd(n, k);
            });
    r.run("leaders of {1,3}{2}{4}", [] {
        return partition_leaders({{1, 3}, {2}, {4}}) == std::vector<int>{1, 2};
    });
    r.run("leaders of cycles of 14852763", [] {
        return permutation_leaders({1, 4, 8, 5, 2, 7, 6, 3}) == std::vector<int>{1, 2, 3};
    });
    r.run("diagonals", [] {
        for (int n = 0; n <= 10; ++n) {
            if (S_odd(n, n) != n || s_odd(n, n) != n) return false;
            if (n >= 1 && (S_odd(n, 0) != 0 || s_odd(n, 0) != 0)) return false;
        }
        return true;
    });
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            r.run("restricted n=" + std::to_string(n) + " k=" + std::to_string(k),
                  [&] { return r_stirling_sum_check(n, k, limits.cap); });
    return r.take();
}

// Power-t triangles: polynomial values and chain sums, the two basis
// identities, and tuple-system counting.
inline FamilyReport family_central_factorial(const VerifyLimits& limits) {
    FamilyRunner r("central-factorial");
    for (int t = 1; t <= 3; ++t)
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= limits.max_m; ++m)
                r.run("power t=" + std::to_string(t) + " n=" + std::to_string(n) +
                          " m=" + std::to_string(m),
                      [&] { return central_vs_polynomial(t, n, m); });
    for (int t = 1; t <= 4; ++t)
        for (int n = 0; n <= 6; ++n)
            r.run("basis t=" + std::to_string(t) + " n=" + std::to_string(n),
                  [&] { return verify_basis_identity(t, n); });
    for (int t = 1; t <= 2; ++t)
        for (int n = 0; n <= 5; ++n)
            for (int k = 0; k <= n; ++k)
                r.run("tuples t=" + std::to_string(t) + " n=" + std::to_string(n) +
                          " k=" + std::to_string(k),
                      [&] {
                          if (count_tuple_systems(t, n, k, SystemKind::partitions, limits.cap) !=
                              S_t(t, n, k))
                              return false;
                          return count_tuple_systems(t, n, k, SystemKind::permutations,
                                                     limits.cap) == s_t(t, n, k);
                      });
    return r.take();
}

// The closed-form table for the standard shape families: all-ones, a single
// block, one block after ones, all-pairs, and alternating one-pair.
inline FamilyReport family_examples_table(const VerifyLimits& limits) {
    FamilyRunner r("examples-table");
    for (int n = 0; n <= 4; ++n) {
        const MultisetShape ones{std::vector<int>(static_cast<size_t>(n), 1)};
        for (int m = 0; m <= limits.max_m; ++m)
            r.run("all-ones n=" + std::to_string(n) + " m=" + std::to_string(m), [&] {
                const BigInt power = pow_int(BigInt(m), n);
                return B_rec(ones, m) == power && b_rec(ones, m) == power;
            });
    }
    for (int k = 1; k <= limits.max_K; ++k) {
        const MultisetShape single{std::vector<int>{k}};
        for (int m = 0; m <= limits.max_m; ++m)
            r.run("single k=" + std::to_string(k) + " m=" + std::to_string(m), [&] {
                return B_rec(single, m) == binomial(k + m - 1, k) &&
                       b_rec(single, m) == binomial(m, k);
            });
    }
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> ks(static_cast<size_t>(n), 1);
        ks.back() = 2;
        const MultisetShape shape{ks};
        for (int m = 0; m <= limits.max_m; ++m)
            r.run("power-sum n=" + std::to_string(n) + " m=" + std::to_string(m), [&] {
                BigInt weak = 0, strict = 0;
                for (int i = 1; i <= m; ++i) weak += pow_int(BigInt(i), n);
                for (int i = 1; i < m; ++i) strict += pow_int(BigInt(i), n);
                return B_rec(shape, m) == weak && b_rec(shape, m) == strict;
            });
    }
    for (int n = 0; n <= 3; ++n) {
        const MultisetShape twos{std::vector<int>(static_cast<size_t>(n), 2)};
        for (int m = 0; m <= limits.max_m; ++m)
            r.run("all-pairs n=" + std::to_string(n) + " m=" + std::to_string(m), [&] {
                return B_rec(twos, m) == S_t(1, n + m, m) && b_rec(twos, m) == s_t(1, m, m - n);
            });
    }
    for (int n = 0; n <= 3; ++n) {
        const MultisetShape pairs = tn_shape(2, n);
        for (int m = 0; m <= limits.max_m; ++m)
            r.run("one-pair n=" + std::to_string(n) + " m=" + std::to_string(m), [&] {
                return B_rec(pairs, m) == S_t(2, n + m, m) && b_rec(pairs, m) == s_t(2, m, m - n);
            });
    }
    return r.take();
}

}  // namespace detail

inline VerifyReport verify_battery(const VerifyLimits& limits = {}) {
    const std::vector<MultisetShape> shapes = shape_universe(limits);
    const std::vector<std::pair<std::string, std::function<FamilyReport()>>> families = {
        {"route-equivalence", [&] { return detail::family_route_equivalence(limits, shapes); }},
        {"polynomial-structure",
         [&] { return detail::family_polynomial_structure(limits, shapes); }},
        {"reciprocity", [&] { return detail::family_reciprocity(limits, shapes); }},
        {"order-polynomial", [&] { return detail::family_order_polynomial(limits, shapes); }},
        {"eulerian", [&] { return detail::family_eulerian(limits, shapes); }},
        {"partition-systems", [&] { return detail::family_partition_systems(limits, shapes); }},
        {"permutation-systems",
         [&] { return detail::family_permutation_systems(limits, shapes); }},
        {"kstirling-recurrences",
         [&] { return detail::family_kstirling_recurrences(limits, shapes); }},
        {"odd-stirling", [&] { return detail::family_odd_stirling(limits); }},
        {"central-factorial", [&] { return detail::family_central_factorial(limits); }},
        {"examples-table", [&] { return detail::family_examples_table(limits); }},
    };
    VerifyReport report;
    bool matched = false;
    for (const auto& [name, fn] : families) {
        if (!limits.only.empty() && limits.only != name) continue;
        matched = true;
        report.families.push_back(fn());
    }
    if (!limits.only.empty() && !matched)
        throw parameter_error("unknown verify family: " + limits.only);
    return report;
}

inline std::string format_report(const VerifyReport& report) {
    std::string out;
    for (const auto& f : report.families) {
        out += f.family + ": " + (f.pass ? "pass" : "FAIL") + " (cases=" +
               std::to_string(f.cases) + ", skipped=" + std::to_string(f.skipped) + ")";
        if (!f.pass) out += " counterexample: " + f.counterexample;
        out += '\n';
    }
    out += std::string("overall: ") + (report.all_pass() ? "pass" : "FAIL") + '\n';
    return out;
}

}  // namespace stirling
