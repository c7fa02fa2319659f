#pragma once

// Stirling permutations of a multiset shape: validation, deterministic
// enumeration by the insertion construction, descent statistics, and the
// Eulerian numbers A_{k,i} both by brute force and by recurrence.

#include <algorithm>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"
#include "shape.hpp"

namespace stirling {

// A Stirling permutation as its one-line word of K values.
using Word = std::vector<int>;

// Stirling condition: between two equal values nothing smaller appears,
// i.e. word[s] >= word[i] whenever word[i] = word[j] and i < s < j.
// Single left-to-right pass: a value is "open" between its first and last
// copy; every letter must be >= all open values, so the open stack stays
// nondecreasing and closes only at its top.
inline bool is_stirling_word(const Word& word) {
    const int n = word.empty() ? 0 : *std::max_element(word.begin(), word.end());
    if (n < 0) return false;
    std::vector<int> count(static_cast<size_t>(n) + 1, 0), seen(static_cast<size_t>(n) + 1, 0);
    for (int v : word) {
        if (v < 1) return false;
        ++count[static_cast<size_t>(v)];
    }
    std::vector<int> open;
    for (int v : word) {
        ++seen[static_cast<size_t>(v)];
        if (!open.empty() && v < open.back()) return false;
        if (count[static_cast<size_t>(v)] > 1) {
            if (seen[static_cast<size_t>(v)] == 1)
                open.push_back(v);
            else if (seen[static_cast<size_t>(v)] == count[static_cast<size_t>(v)])
                open.pop_back();  // v >= top and v <= top (v is open), so v is the top
        }
    }
    return true;
}

// element i appears exactly k_i times, elements within 1..n
inline bool word_matches_shape(const Word& word, const MultisetShape& shape) {
    std::vector<int> counts(static_cast<size_t>(shape.components()) + 1, 0);
    for (int v : word) {
        if (v < 1 || v > shape.components()) return false;
        ++counts[static_cast<size_t>(v)];
    }
    for (int i = 1; i <= shape.components(); ++i)
        if (counts[static_cast<size_t>(i)] != shape.at(i - 1)) return false;
    return true;
}

namespace detail {

// DFS over insertion positions: the word for components 1..i spawns one
// child per gap (0..len) where the contiguous block (i+1)^{k_{i+1}} can go.
// Parent-before-child with gaps ascending gives the insertion-position
// lexicographic order, and every Stirling permutation arises exactly once.
template <typename Fn>
void insertion_dfs(const MultisetShape& shape, int comp, Word& word, Fn&& emit) {
    if (comp == shape.components()) {
        emit(word);
        return;
    }
    const int block = shape.at(comp);
    for (size_t gap = 0; gap <= word.size(); ++gap) {
        Word next;
        next.reserve(word.size() + static_cast<size_t>(block));
        next.insert(next.end(), word.begin(), word.begin() + static_cast<long>(gap));
        next.insert(next.end(), static_cast<size_t>(block), comp + 1);
        next.insert(next.end(), word.begin() + static_cast<long>(gap), word.end());
        insertion_dfs(shape, comp + 1, next, emit);
    }
}

}  // namespace detail

// Streams every Stirling permutation of the shape in a deterministic order.
// Refuses up front if the output would exceed the cap.
template <typename Fn>
void for_each_stirling_word(const MultisetShape& shape, long long cap, Fn&& emit) {
    if (cap < 0) throw parameter_error("negative enumeration cap");
    if (sp_count(shape) > cap) throw budget_error("enumeration budget exceeded");
    Word word;
    if (shape.components() > 0) word.assign(static_cast<size_t>(shape.at(0)), 1);
    detail::insertion_dfs(shape, std::min(shape.components(), 1), word, emit);
    // note: for the empty shape this emits the single empty word
}

inline std::vector<Word> enumerate_stirling_words(const MultisetShape& shape,
                                                  long long cap = default_budget) {
    std::vector<Word> words;
    for_each_stirling_word(shape, cap, [&](const Word& w) { words.push_back(w); });
    return words;
}

// Descent indices: { i : word[i] > word[i+1], 1-based, i < K } plus the
// terminal index K, which always counts.  Empty word has no descents.
inline std::vector<int> descents(const Word& word) {
    std::vector<int> ds;
    const int K = static_cast<int>(word.size());
    for (int i = 1; i < K; ++i)
        if (word[static_cast<size_t>(i) - 1] > word[static_cast<size_t>(i)]) ds.push_back(i);
    if (K >= 1) ds.push_back(K);
    return ds;
}

// counts[i] = A_{k,i} = number of Stirling permutations with exactly i
// descents.  The terminal position always counts, so nonempty shapes have
// counts[0] = 0 and entries at i = 1..n; the empty shape has the single
// empty word with zero descents.
struct EulerianTable {
    MultisetShape shape;
    std::vector<BigInt> counts;

    BigInt at(int i) const {  // A_{k,i} with out-of-range indices = 0
        if (i < 0 || i >= static_cast<int>(counts.size())) return 0;
        return counts[static_cast<size_t>(i)];
    }
};

inline EulerianTable eulerian_brute(const MultisetShape& shape, long long cap = default_budget) {
    EulerianTable table{
        shape, std::vector<BigInt>(static_cast<size_t>(shape.components()) + 1, BigInt(0))};
    for_each_stirling_word(shape, cap, [&](const Word& w) {
        const size_t d = descents(w).size();
        if (d >= table.counts.size()) throw consistency_error("descent count outside 0..n");
        ++table.counts[d];
    });
    return table;
}

// A_{k,i} = i*A_{k\k_n,i} + (k_1+...+k_{n-1}+1-(i-1))*A_{k\k_n,i-1},
// row by row over prefixes, seeded with the single-component row (1).
// The multiplicity k_n itself does not appear: inserting the new block
// either lands in one of the i existing descent gaps or in one of the
// remaining gaps, creating a descent at its end.
inline EulerianTable eulerian_rec(const MultisetShape& shape) {
    const auto& ks = shape.multiplicities();
    std::vector<BigInt> counts(1, BigInt(1));  // empty shape: one word, no descents
    std::vector<BigInt> row;                   // row[i-1] = words of the prefix with i descents
    int prefix_total = 0;
    for (size_t c = 0; c < ks.size(); ++c) {
        if (c == 0) {
            row.assign(1, BigInt(1));
        } else {
            std::vector<BigInt> next(c + 1, BigInt(0));
            for (size_t i = 1; i <= c + 1; ++i) {
                const BigInt above = (i <= row.size()) ? row[i - 1] : BigInt(0);
                const BigInt left = (i >= 2 && i - 1 <= row.size()) ? row[i - 2] : BigInt(0);
                next[i - 1] = BigInt(static_cast<long>(i)) * above +
                              BigInt(prefix_total + 1 - (static_cast<long>(i) - 1)) * left;
            }
            row = std::move(next);
        }
        prefix_total += ks[c];
    }
    if (!ks.empty()) {
        counts.assign(1, BigInt(0));
        counts.insert(counts.end(), row.begin(), row.end());
    }
    return EulerianTable{shape, std::move(counts)};
}

}  // namespace stirling
