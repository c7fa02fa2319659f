#pragma once

// The Stirling polynomials B_k(m) (weak / second kind) and b_k(m) (strict /
// first kind) by four independent routes:
//
//   *_series  — closed-form series coefficients through the Eulerian numbers
//   *_rec     — the two-term recurrences that step the last multiplicity
//   *_conv    — the one-level convolution that peels the whole last block
//   closed_*  — the fully iterated nested sums over the weight decomposition
//
// The routes deliberately share nothing beyond core arithmetic; their
// agreement is a meaningful cross-check, not a tautology.  Both families are
// polynomials in m of degree K; to_polynomial recovers exact coefficients
// and asserts every structural claim (degree, leading coefficient, zero
// patterns, reciprocity).

#include <map>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"
#include "permutations.hpp"
#include "polynomial.hpp"
#include "shape.hpp"

namespace stirling {

// ---------------------------------------------------------------- series --

// B_k(m) = sum_i A_{k,i} * C(K+m-i, K): the coefficient of x^m in the
// Eulerian numerator divided by (1-x)^{K+1}.
inline BigInt B_series(const MultisetShape& shape, int m) {
    if (m < 0) throw parameter_error("negative evaluation point");
    if (shape.empty()) return 1;
    const EulerianTable table = eulerian_rec(shape);
    const int K = shape.total();
    BigInt sum = 0;
    for (int i = 1; i <= shape.components(); ++i)
        sum += table.at(i) * binomial(K + m - i, K);
    return sum;
}

// b_k(m) = sum_{i=K-n+1}^{K} A_{k,K+1-i} * C(K+m-i, K): same expansion for
// the reversed numerator, whose support sits at the top indices.
inline BigInt b_series(const MultisetShape& shape, int m) {
    if (m < 0) throw parameter_error("negative evaluation point");
    if (shape.empty()) return 1;
    const EulerianTable table = eulerian_rec(shape);
    const int K = shape.total();
    const int n = shape.components();
    BigInt sum = 0;
    for (int i = K - n + 1; i <= K; ++i)
        sum += table.at(K + 1 - i) * binomial(K + m - i, K);
    return sum;
}

// ------------------------------------------------------------ recurrence --

namespace detail {

using RecKey = std::pair<std::vector<int>, int>;

inline BigInt B_rec_impl(const MultisetShape& shape, int m, std::map<RecKey, BigInt>& memo) {
    if (shape.empty()) return 1;
    if (m == 0) return 0;
    const RecKey key{shape.multiplicities(), m};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt value;
    if (shape.last() == 1) {
        value = BigInt(m) * B_rec_impl(shape.drop_last(), m, memo);
    } else {
        value = B_rec_impl(shape, m - 1, memo) + B_rec_impl(shape.decrement_last(), m, memo);
    }
    memo.emplace(key, value);
    return value;
}

inline BigInt b_rec_impl(const MultisetShape& shape, int m, std::map<RecKey, BigInt>& memo) {
    if (shape.empty()) return 1;
    if (m == 0) return 0;
    const RecKey key{shape.multiplicities(), m};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt value;
    if (shape.last() == 1) {
        value = BigInt(m) * b_rec_impl(shape.drop_last(), m, memo);
    } else {
        value = b_rec_impl(shape, m - 1, memo) + b_rec_impl(shape.decrement_last(), m - 1, memo);
    }
    memo.emplace(key, value);
    return value;
}

}  // namespace detail

// B_k(m) = B_k(m-1) + B_{k'}(m) when k_n > 1, m * B_{k'}(m) when k_n = 1,
// with k' the shape whose last multiplicity is decremented (and dropped at
// zero).  Memoized per thread; concurrent calls agree because the function
// is pure.
inline BigInt B_rec(const MultisetShape& shape, int m) {
    if (m < 0) throw parameter_error("negative evaluation point");
    thread_local std::map<detail::RecKey, BigInt> memo;
    return detail::B_rec_impl(shape, m, memo);
}

// b_k(m) = b_k(m-1) + b_{k'}(m-1) when k_n > 1, m * b_{k'}(m) when k_n = 1.
inline BigInt b_rec(const MultisetShape& shape, int m) {
    if (m < 0) throw parameter_error("negative evaluation point");
    thread_local std::map<detail::RecKey, BigInt> memo;
    return detail::b_rec_impl(shape, m, memo);
}

// ----------------------------------------------------------- convolution --

namespace detail {

// Values B(0..m) for an arbitrary prefix shape, by repeated convolution:
// trailing ones contribute a factor i^a, and a last block of size t > 1
// contributes sum_i i * B_prefix(i) * C(t+j-i-2, t-2) at evaluation point j.
inline std::vector<BigInt> conv_table_B(const std::vector<int>& ks, int m) {
    if (ks.empty()) return std::vector<BigInt>(static_cast<size_t>(m) + 1, BigInt(1));
    if (ks.back() == 1) {
        size_t cut = ks.size();
        while (cut > 0 && ks[cut - 1] == 1) --cut;
        const long ones = static_cast<long>(ks.size() - cut);
        const auto inner = conv_table_B(std::vector<int>(ks.begin(), ks.begin() + static_cast<long>(cut)), m);
        std::vector<BigInt> values(static_cast<size_t>(m) + 1);
        for (int i = 0; i <= m; ++i) values[static_cast<size_t>(i)] = pow_int(i, ones) * inner[static_cast<size_t>(i)];
        return values;
    }
    const int t = ks.back();
    const auto inner = conv_table_B(std::vector<int>(ks.begin(), ks.end() - 1), m);
    std::vector<BigInt> values(static_cast<size_t>(m) + 1, BigInt(0));
    for (int j = 0; j <= m; ++j)
        for (int i = 0; i <= j; ++i)
            values[static_cast<size_t>(j)] += BigInt(i) * inner[static_cast<size_t>(i)] * binomial(t + j - i - 2, t - 2);
    return values;
}

// b analog: the last block of size t > 1 contributes
// sum_{i<j} i * b_prefix(i) * C(j-i-1, t-2).
inline std::vector<BigInt> conv_table_b(const std::vector<int>& ks, int m) {
    if (ks.empty()) return std::vector<BigInt>(static_cast<size_t>(m) + 1, BigInt(1));
    if (ks.back() == 1) {
        size_t cut = ks.size();
        while (cut > 0 && ks[cut - 1] == 1) --cut;
        const long ones = static_cast<long>(ks.size() - cut);
        const auto inner = conv_table_b(std::vector<int>(ks.begin(), ks.begin() + static_cast<long>(cut)), m);
        std::vector<BigInt> values(static_cast<size_t>(m) + 1);
        for (int i = 0; i <= m; ++i) values[static_cast<size_t>(i)] = pow_int(i, ones) * inner[static_cast<size_t>(i)];
        return values;
    }
    const int t = ks.back();
    const auto inner = conv_table_b(std::vector<int>(ks.begin(), ks.end() - 1), m);
    std::vector<BigInt> values(static_cast<size_t>(m) + 1, BigInt(0));
    for (int j = 0; j <= m; ++j)
        for (int i = 0; i < j; ++i)
            values[static_cast<size_t>(j)] += BigInt(i) * inner[static_cast<size_t>(i)] * binomial(j - i - 1, t - 2);
    return values;
}

}  // namespace detail

// B_k(m) = sum_{i=0}^m i * B_{k minus last block}(i) * C(k_n+m-i-2, k_n-2),
// valid only when the last multiplicity exceeds 1.
inline BigInt B_conv(const MultisetShape& shape, int m) {
    if (shape.empty() || shape.last() == 1) throw parameter_error("convolution requires k_n > 1");
    if (m < 0) throw parameter_error("negative evaluation point");
    return detail::conv_table_B(shape.multiplicities(), m)[static_cast<size_t>(m)];
}

// b_k(m) = sum_{i=0}^{m-1} i * b_{k minus last block}(i) * C(m-i-1, k_n-2).
inline BigInt b_conv(const MultisetShape& shape, int m) {
    if (shape.empty() || shape.last() == 1) throw parameter_error("convolution requires k_n > 1");
    if (m < 0) throw parameter_error("negative evaluation point");
    return detail::conv_table_b(shape.multiplicities(), m)[static_cast<size_t>(m)];
}

// ----------------------------------------------------------- closed form --

// Nested-sum closed form for B: after pulling out m^trailing for a trailing
// run of ones, sum over weak chains 1 <= i_1 <= ... <= i_l <= m of
//   prod_j i_j^{a_j} * C(t_j + i_{j+1} - i_j - 2, i_{j+1} - i_j),  i_{l+1} = m.
inline BigInt closed_form_S(const MultisetShape& shape, int m) {
    if (m < 0) throw parameter_error("negative evaluation point");
    const WeightDecomposition w = decompose(shape);
    const size_t l = w.a.size();
    BigInt total = 0;
    if (l == 0) {
        total = 1;
    } else if (m >= 1) {
        std::vector<int> chain(l, 1);  // chain[j] = i_{j+1}
        while (true) {
            BigInt term = 1;
            for (size_t j = 0; j < l; ++j) {
                const int gap_to = (j + 1 < l) ? chain[j + 1] : m;
                term *= pow_int(chain[j], w.a[j]);
                term *= binomial(w.t[j] + gap_to - chain[j] - 2, gap_to - chain[j]);
            }
            total += term;
            // advance odometer over weak chains
            bool advanced = false;
            for (size_t j = l; j-- > 0;) {
                if (chain[j] < m) {
                    ++chain[j];
                    for (size_t r = j + 1; r < l; ++r) chain[r] = chain[j];
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
    return pow_int(m, w.trailing) * total;
}

// Nested-sum closed form for b: strict chains 1 <= i_1 < ... < i_l < m with
// gap factors C(i_{j+1} - i_j - 1, t_j - 2).
inline BigInt closed_form_s(const MultisetShape& shape, int m) {
    if (m < 0) throw parameter_error("negative evaluation point");
    const WeightDecomposition w = decompose(shape);
    const size_t l = w.a.size();
    BigInt total = 0;
    if (l == 0) {
        total = 1;
    } else if (m >= 1) {
        std::vector<int> chain(l);
        for (size_t j = 0; j < l; ++j) chain[j] = static_cast<int>(j) + 1;
        while (chain.back() < m) {
            BigInt term = 1;
            for (size_t j = 0; j < l; ++j) {
                const int gap_to = (j + 1 < l) ? chain[j + 1] : m;
                term *= pow_int(chain[j], w.a[j]);
                term *= binomial(gap_to - chain[j] - 1, w.t[j] - 2);
            }
            total += term;
            // advance odometer over strict chains i_1 < ... < i_l < m
            bool advanced = false;
            for (size_t j = l; j-- > 0;) {
                if (chain[j] < m - static_cast<int>(l - j)) {  // room for the rest
                    ++chain[j];
                    for (size_t r = j + 1; r < l; ++r) chain[r] = chain[r - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
    return pow_int(m, w.trailing) * total;
}

// ------------------------------------------------------------ polynomial --

// Exact polynomial forms of B_k and b_k with every structural claim
// asserted: degree K, leading coefficient |SP_k|/K!, the zero patterns
// B(0) = B(-1) = ... = B(-K+n) = 0 and b(0) = ... = b(K-n) = 0 (with the
// next point nonzero), and the reciprocity B(x) = (-1)^K b(-x).
struct StirlingPolyPair {
    MultisetShape shape;
    ExactPolynomial B;
    ExactPolynomial b;
};

inline StirlingPolyPair to_polynomial(const MultisetShape& shape) {
    const int K = shape.total();
    const int n = shape.components();
    std::vector<std::pair<long, BigRational>> pb, ps;
    pb.reserve(static_cast<size_t>(K) + 1);
    ps.reserve(static_cast<size_t>(K) + 1);
    for (int m = 0; m <= K; ++m) {
        pb.emplace_back(m, BigRational(B_series(shape, m)));
        ps.emplace_back(m, BigRational(b_series(shape, m)));
    }
    StirlingPolyPair pair{shape, interpolate(pb), interpolate(ps)};

    if (pair.B.degree() != K || pair.b.degree() != K)
        throw consistency_error("polynomial degree differs from K");
    const BigRational lead = make_rational(sp_count(shape), factorial(K));
    if (pair.B.leading() != lead || pair.b.leading() != lead)
        throw consistency_error("leading coefficient differs from sp_count/K!");
    if (!shape.empty()) {
        for (int j = 0; j <= K - n; ++j) {
            if (poly_eval(pair.B, BigRational(-j)) != 0)
                throw consistency_error("B zero pattern fails at m = -" + std::to_string(j));
            if (poly_eval(pair.b, BigRational(j)) != 0)
                throw consistency_error("b zero pattern fails at m = " + std::to_string(j));
        }
        if (poly_eval(pair.B, BigRational(-(K - n) - 1)) == 0)
            throw consistency_error("B vanishes beyond the claimed zero set");
        if (poly_eval(pair.b, BigRational(K - n + 1)) == 0)
            throw consistency_error("b vanishes beyond the claimed zero set");
    }
    if (poly_eval(pair.B, BigRational(1)) != 1)
        throw consistency_error("B(1) differs from 1");
    const ExactPolynomial reflected =
        (K % 2 == 0) ? pair.b.reflected() : BigRational(-1) * pair.b.reflected();
    if (!(pair.B == reflected))
        throw consistency_error("reciprocity B(x) = (-1)^K b(-x) fails");
    return pair;
}

}  // namespace stirling
