// Acceptance battery.  Each scenario prints one PASS/FAIL line with its wall
// time; run with no argument for all scenarios or with a number (1..10) for a
// single one.  The process exits 0 only if every scenario that ran passed.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "stirling/stirling.hpp"
#include "support/oracles.hpp"
#include "support/run_cli.hpp"

using namespace stirling;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::vector<MultisetShape> compositions(int max_total, int max_parts) {
    std::vector<MultisetShape> out;
    out.emplace_back();
    std::vector<int> parts;
    const auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        if (static_cast<int>(parts.size()) == max_parts) return;
        for (int p = 1; p <= remaining; ++p) {
            parts.push_back(p);
            self(self, remaining - p);
            parts.pop_back();
        }
    };
    for (int K = 1; K <= max_total; ++K) rec(rec, K);
    return out;
}

Outcome criterion_weak_value() {
    const MultisetShape shape = MultisetShape::parse("1,3,1,4");
    if (count_partition_systems(shape, 4, 2) != 27) return fail("enumerated count");
    if (B_rec(shape, 2) != 27) return fail("polynomial value");
    const auto systems =
        clitest::run_cli("systems --shape 1,3,1,4 --n 4 --m 2 --kind partition --format json");
    if (systems.exit_code != 0 || systems.out.find("\"count\": \"27\"") == std::string::npos)
        return fail("systems command");
    const auto poly = clitest::run_cli("poly --shape 1,3,1,4 --eval 2 --format json");
    if (poly.exit_code != 0 || poly.out.find("\"B\": \"27\"") == std::string::npos)
        return fail("poly command");
    return {};
}

Outcome criterion_strict_value() {
    const MultisetShape shape = MultisetShape::parse("1,3,1,4");
    if (count_permutation_systems(shape, 6, 4) != 9) return fail("enumerated count");
    if (b_rec(shape, 6) != 9) return fail("polynomial value");
    const auto systems =
        clitest::run_cli("systems --shape 1,3,1,4 --n 6 --m 4 --kind permutation --format json");
    if (systems.exit_code != 0 || systems.out.find("\"count\": \"9\"") == std::string::npos)
        return fail("systems command");
    const auto poly = clitest::run_cli("poly --shape 1,3,1,4 --eval 6 --format json");
    if (poly.exit_code != 0 || poly.out.find("\"b\": \"9\"") == std::string::npos)
        return fail("poly command");
    return {};
}

Outcome criterion_examples_table() {
    for (int n = 0; n <= 5; ++n) {
        const MultisetShape ones{std::vector<int>(static_cast<size_t>(n), 1)};
        for (int m = 0; m <= 8; ++m)
            if (B_rec(ones, m) != pow_int(BigInt(m), n)) return fail("all-ones row");
    }
    for (int k = 1; k <= 6; ++k) {
        const MultisetShape single{std::vector<int>{k}};
        for (int m = 0; m <= 8; ++m) {
            if (B_rec(single, m) != binomial(k + m - 1, k)) return fail("single-run row B");
            if (b_rec(single, m) != binomial(m, k)) return fail("single-run row b");
        }
    }
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> ks(static_cast<size_t>(n) - 1, 1);
        ks.push_back(2);
        const MultisetShape shape{ks};
        for (int m = 0; m <= 8; ++m) {
            if (B_rec(shape, m) != oracles::power_sum(n, m)) return fail("power-sum row B");
            if (b_rec(shape, m) != oracles::power_sum(n, m - 1)) return fail("power-sum row b");
        }
    }
    for (int n = 0; n <= 5; ++n) {
        const MultisetShape pairs{std::vector<int>(static_cast<size_t>(n), 2)};
        const MultisetShape mixed = tn_shape(2, n);
        for (int m = 0; m <= 8; ++m) {
            if (B_rec(pairs, m) != oracles::classical_S(n + m, m)) return fail("all-pairs row B");
            if (b_rec(pairs, m) != oracles::classical_c(m, m - n)) return fail("all-pairs row b");
            if (B_rec(mixed, m) != oracles::central_S2(n + m, m)) return fail("paired-run row B");
        }
    }
    return {};
}

Outcome criterion_route_equivalence() {
    for (const MultisetShape& shape : compositions(10, 4)) {
        for (int m = 0; m <= 8; ++m) {
            const BigInt B = B_rec(shape, m);
            const BigInt b = b_rec(shape, m);
            if (B_series(shape, m) != B) return fail(shape.to_string() + " B series route");
            if (closed_form_S(shape, m) != B) return fail(shape.to_string() + " B closed route");
            if (b_series(shape, m) != b) return fail(shape.to_string() + " b series route");
            if (closed_form_s(shape, m) != b) return fail(shape.to_string() + " b closed route");
            if (!shape.empty() && shape.last() > 1) {
                if (B_conv(shape, m) != B)
                    return fail(shape.to_string() + " B convolution route");
                if (b_conv(shape, m) != b)
                    return fail(shape.to_string() + " b convolution route");
            }
        }
    }
    return {};
}

Outcome criterion_polynomial_structure() {
    for (const MultisetShape& shape : compositions(10, 4)) {
        const StirlingPolyPair pair = to_polynomial(shape);
        const int K = shape.total();
        const int n = shape.components();
        if (pair.B.degree() != K || pair.b.degree() != K)
            return fail(shape.to_string() + " degree");
        if (pair.B.coefficient(K) != make_rational(sp_count(shape), factorial(K)))
            return fail(shape.to_string() + " leading coefficient");
        if (!shape.empty()) {
            for (int j = 0; j <= K - n; ++j) {
                if (poly_eval(pair.B, BigRational(-j)) != 0)
                    return fail(shape.to_string() + " missing B zero");
                if (poly_eval(pair.b, BigRational(j)) != 0)
                    return fail(shape.to_string() + " missing b zero");
            }
        }
        ExactPolynomial reflected = pair.b.reflected();
        if (K % 2 == 1) reflected = make_rational(-1, 1) * reflected;
        if (pair.B != reflected) return fail(shape.to_string() + " reciprocity");
    }
    return {};
}

Outcome criterion_order_polynomial() {
    for (const MultisetShape& shape : compositions(8, 8)) {
        const KStirlingPoset poset = build_poset(shape);
        for (int m = 0; m <= 5; ++m) {
            if (oracles::naive_omega(poset.base, m, false) != B_rec(shape, m))
                return fail(shape.to_string() + " weak maps at " + std::to_string(m));
            if (oracles::naive_omega(poset.base, m, true) != b_rec(shape, m))
                return fail(shape.to_string() + " strict maps at " + std::to_string(m));
        }
    }
    return {};
}

Outcome criterion_eulerian_tables() {
    for (const MultisetShape& shape : compositions(10, 10)) {
        if (sp_count(shape) > 100000) continue;
        const EulerianTable rec = eulerian_rec(shape);
        const EulerianTable brute = eulerian_brute(shape, 100000000LL);
        if (rec.counts != brute.counts) return fail(shape.to_string() + " brute mismatch");
        BigInt sum = 0;
        for (const BigInt& c : rec.counts) sum += c;
        if (sum != sp_count(shape)) return fail(shape.to_string() + " row sum");
    }
    for (int n = 1; n <= 8; ++n) {
        const MultisetShape pairs{std::vector<int>(static_cast<size_t>(n), 2)};
        const EulerianTable rec = eulerian_rec(pairs);
        for (int i = 1; i <= n; ++i)
            if (rec.at(i) != oracles::second_order_eulerian(n, i - 1))
                return fail("all-pairs row " + std::to_string(n));
    }
    for (int n = 1; n <= 5; ++n) {
        const std::vector<int> ks(static_cast<size_t>(n), 2);
        const EulerianTable rec = eulerian_rec(MultisetShape{ks});
        std::vector<BigInt> histogram(static_cast<size_t>(n) + 1, 0);
        for (const auto& w : oracles::multiset_words(ks)) {
            if (!oracles::word_is_stirling(w)) continue;
            int descents = 1;  // the final position always counts
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] > w[i + 1]) ++descents;
            histogram[static_cast<size_t>(descents)] += 1;
        }
        if (histogram != rec.counts) return fail("direct count row " + std::to_string(n));
    }
    return {};
}

Outcome criterion_odd_triangles() {
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            if (count_leader_partitions(n, k) != S_odd(n, k))
                return fail("partition leaders at row " + std::to_string(n));
    for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= n; ++k)
            if (count_leader_permutations(n, k) != s_odd(n, k))
                return fail("permutation leaders at row " + std::to_string(n));
    if (partition_leaders({{1, 3}, {2}, {4}}) != std::vector<int>{1, 2})
        return fail("partition worked example");
    if (permutation_leaders({1, 4, 8, 5, 2, 7, 6, 3}) != std::vector<int>{1, 2, 3})
        return fail("permutation worked example");
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 6; ++m)
            if (!odd_vs_polynomial(n, m))
                return fail("shape identity at n=" + std::to_string(n));
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            if (!r_stirling_sum_check(n, k))
                return fail("restricted sum at row " + std::to_string(n));
    return {};
}

Outcome criterion_power_triangles() {
    for (int t = 1; t <= 4; ++t)
        for (int n = 0; n <= 8; ++n)
            if (!verify_basis_identity(t, n))
                return fail("basis identity at t=" + std::to_string(t));
    for (int t = 1; t <= 2; ++t)
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= n; ++k) {
                if (count_tuple_systems(t, n, k, SystemKind::partitions) != S_t(t, n, k))
                    return fail("partition tuples at t=" + std::to_string(t));
                if (count_tuple_systems(t, n, k, SystemKind::permutations) != s_t(t, n, k))
                    return fail("permutation tuples at t=" + std::to_string(t));
            }
    for (int t = 1; t <= 3; ++t)
        for (int n = 0; n <= 4; ++n)
            for (int m = 0; m <= 6; ++m)
                if (!central_vs_polynomial(t, n, m))
                    return fail("chain sums at t=" + std::to_string(t));
    return {};
}

Outcome criterion_battery_determinism() {
    const auto first = clitest::run_cli("verify --format plain");
    if (first.exit_code != 0) return fail("first run exit code");
    const auto second = clitest::run_cli("verify --format plain");
    if (second.exit_code != 0) return fail("second run exit code");
    if (first.out != second.out) return fail("report bytes differ");
    if (first.out.find("overall: pass") == std::string::npos) return fail("missing overall line");
    return {};
}

struct Criterion {
    int id;
    const char* slug;
    long long limit_ms;
    Outcome (*run)();
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "weak-value-27", 1000, criterion_weak_value},
        {2, "strict-value-9", 1000, criterion_strict_value},
        {3, "examples-table", 5000, criterion_examples_table},
        {4, "route-equivalence", 60000, criterion_route_equivalence},
        {5, "polynomial-structure", 30000, criterion_polynomial_structure},
        {6, "order-polynomial-maps", 60000, criterion_order_polynomial},
        {7, "eulerian-tables", 30000, criterion_eulerian_tables},
        {8, "odd-triangles", 30000, criterion_odd_triangles},
        {9, "power-triangles", 30000, criterion_power_triangles},
        {10, "battery-determinism", 300000, criterion_battery_determinism},
    };
    int selected = 0;
    if (argc > 1) {
        selected = std::atoi(argv[1]);
        if (selected < 1 || selected > 10) {
            std::fprintf(stderr, "usage: %s [criterion 1..10]\n", argv[0]);
            return 1;
        }
    }
    bool all_pass = true;
    for (const Criterion& c : criteria) {
        if (selected != 0 && c.id != selected) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = fail(e.what());
        }
        const long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        if (outcome.pass && ms > c.limit_ms)
            outcome = fail("exceeded the " + std::to_string(c.limit_ms) + " ms budget");
        std::printf("criterion %d (%s): %s [%lld ms]%s%s\n", c.id, c.slug,
                    outcome.pass ? "PASS" : "FAIL", ms, outcome.detail.empty() ? "" : " ",
                    outcome.detail.c_str());
        all_pass = all_pass && outcome.pass;
    }
    return all_pass ? 0 : 1;
}
