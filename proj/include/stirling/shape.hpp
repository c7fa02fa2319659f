#pragma once

// The multiset shape k = (k_1,...,k_n) — the multiplicity tuple of the
// multiset {1^{k_1},...,n^{k_n}} — with its derived statistics, the
// series/weight decomposition, and the count of Stirling permutations.

#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"

namespace stirling {

// Immutable value type; derived statistics are computed at construction
// because every downstream algorithm branches on them.  The empty shape is
// first-class (it terminates all recurrences).
class MultisetShape {
public:
    MultisetShape() = default;

    explicit MultisetShape(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
        for (int k : mult_)
            if (k < 1) throw parameter_error("shape multiplicities must be positive");
        total_ = std::accumulate(mult_.begin(), mult_.end(), 0);
        for (int k : mult_) length_ += (k > 1);
    }

    // Comma-separated positive integers, e.g. "1,3,1,4"; empty text is the
    // empty shape.
    static MultisetShape parse(const std::string& text) {
        std::vector<int> ks;
        size_t pos = 0;
        while (pos < text.size()) {
            while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
            if (pos == text.size()) break;
            size_t end = pos;
            while (end < text.size() && text[end] != ',') ++end;
            size_t len = 0;
            int value = 0;
            try {
                value = std::stoi(text.substr(pos, end - pos), &len);
            } catch (const std::exception&) {
                throw parameter_error("invalid shape text: " + text);
            }
            size_t rest = pos + len;
            while (rest < end && (text[rest] == ' ' || text[rest] == '\t')) ++rest;
            if (rest != end || value < 1) throw parameter_error("invalid shape text: " + text);
            ks.push_back(value);
            pos = end + (end < text.size() ? 1 : 0);
        }
        return MultisetShape(std::move(ks));
    }

    bool empty() const { return mult_.empty(); }
    int components() const { return static_cast<int>(mult_.size()); }  // n
    int total() const { return total_; }                               // K
    int length() const { return length_; }                             // l = #{i : k_i > 1}
    const std::vector<int>& multiplicities() const { return mult_; }
    int at(int i) const { return mult_[static_cast<size_t>(i)]; }      // 0-based
    int last() const { return mult_.back(); }

    // shape without its last component
    MultisetShape drop_last() const {
        return MultisetShape(std::vector<int>(mult_.begin(), mult_.end() - 1));
    }

    // shape with its last component decremented (dropped when it hits zero)
    MultisetShape decrement_last() const {
        std::vector<int> ks = mult_;
        if (ks.empty()) throw parameter_error("cannot decrement the empty shape");
        if (--ks.back() == 0) ks.pop_back();
        return MultisetShape(std::move(ks));
    }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < mult_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(mult_[i]);
        }
        return s;
    }

    auto operator<=>(const MultisetShape& o) const { return mult_ <=> o.mult_; }
    bool operator==(const MultisetShape& o) const { return mult_ == o.mult_; }

private:
    std::vector<int> mult_;
    int total_ = 0;
    int length_ = 0;
};

// The unique reading of the tuple as l runs "a_i - 1 ones then an end
// t_i > 1" followed by a trailing run of ones.
struct WeightDecomposition {
    std::vector<int> a;  // run lengths, each >= 1
    std::vector<int> t;  // run ends, each >= 2
    int trailing = 0;    // ones after the last end

    bool operator==(const WeightDecomposition&) const = default;
};

inline WeightDecomposition decompose(const MultisetShape& shape) {
    WeightDecomposition w;
    int ones = 0;
    for (int k : shape.multiplicities()) {
        if (k == 1) {
            ++ones;
        } else {
            w.a.push_back(ones + 1);
            w.t.push_back(k);
            ones = 0;
        }
    }
    w.trailing = ones;
    return w;
}

inline MultisetShape recompose(const WeightDecomposition& w) {
    if (w.a.size() != w.t.size()) throw parameter_error("weight lists of unequal length");
    std::vector<int> ks;
    for (size_t i = 0; i < w.a.size(); ++i) {
        if (w.a[i] < 1 || w.t[i] < 2) throw parameter_error("invalid weight entry");
        ks.insert(ks.end(), static_cast<size_t>(w.a[i]) - 1, 1);
        ks.push_back(w.t[i]);
    }
    if (w.trailing < 0) throw parameter_error("negative trailing run");
    ks.insert(ks.end(), static_cast<size_t>(w.trailing), 1);
    return MultisetShape(std::move(ks));
}

// |SP_k| = prod_{i=1}^{n-1} (k_1 + ... + k_i + 1): inserting the block of
// i+1's into any of that many gaps grows each permutation uniquely.
inline BigInt sp_count(const MultisetShape& shape) {
    BigInt count = 1;
    int prefix = 0;
    const auto& ks = shape.multiplicities();
    for (size_t i = 0; i + 1 < ks.size(); ++i) {
        prefix += ks[i];
        count *= prefix + 1;
    }
    return count;
}

}  // namespace stirling
