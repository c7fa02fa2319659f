#pragma once

// Dense univariate polynomials with exact rational coefficients, plus
// Lagrange interpolation and Horner evaluation.  This is all the polynomial
// machinery the counting identities need: add/multiply, reflect through
// x -> -x for reciprocity checks, and exact recovery from integer nodes.

#include <utility>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"

namespace stirling {

// coefficients()[i] is the coefficient of x^i; the highest-index coefficient
// is nonzero unless the polynomial is zero (empty coefficient list).
class ExactPolynomial {
public:
    ExactPolynomial() = default;
    explicit ExactPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    static ExactPolynomial constant(const BigRational& c) {
        return ExactPolynomial(std::vector<BigRational>{c});
    }

    // c * x^d
    static ExactPolynomial monomial(int d, const BigRational& c) {
        std::vector<BigRational> cs(static_cast<size_t>(d) + 1);
        cs.back() = c;
        return ExactPolynomial(std::move(cs));
    }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial reported as -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigRational>& coefficients() const { return coeffs_; }

    BigRational coefficient(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return BigRational(0);
        return coeffs_[static_cast<size_t>(i)];
    }

    BigRational leading() const { return is_zero() ? BigRational(0) : coeffs_.back(); }

    bool operator==(const ExactPolynomial& o) const { return coeffs_ == o.coeffs_; }

    friend ExactPolynomial operator+(const ExactPolynomial& p, const ExactPolynomial& q) {
        std::vector<BigRational> cs(std::max(p.coeffs_.size(), q.coeffs_.size()));
        for (size_t i = 0; i < cs.size(); ++i) cs[i] = p.coefficient(static_cast<int>(i)) + q.coefficient(static_cast<int>(i));
        return ExactPolynomial(std::move(cs));
    }

    friend ExactPolynomial operator-(const ExactPolynomial& p, const ExactPolynomial& q) {
        std::vector<BigRational> cs(std::max(p.coeffs_.size(), q.coeffs_.size()));
        for (size_t i = 0; i < cs.size(); ++i) cs[i] = p.coefficient(static_cast<int>(i)) - q.coefficient(static_cast<int>(i));
        return ExactPolynomial(std::move(cs));
    }

    friend ExactPolynomial operator*(const ExactPolynomial& p, const ExactPolynomial& q) {
        if (p.is_zero() || q.is_zero()) return ExactPolynomial();
        std::vector<BigRational> cs(p.coeffs_.size() + q.coeffs_.size() - 1);
        for (size_t i = 0; i < p.coeffs_.size(); ++i)
            for (size_t j = 0; j < q.coeffs_.size(); ++j) cs[i + j] += p.coeffs_[i] * q.coeffs_[j];
        return ExactPolynomial(std::move(cs));
    }

    friend ExactPolynomial operator*(const BigRational& c, const ExactPolynomial& p) {
        std::vector<BigRational> cs = p.coeffs_;
        for (auto& x : cs) x *= c;
        return ExactPolynomial(std::move(cs));
    }

    // p(-x): negate coefficients of odd powers.
    ExactPolynomial reflected() const {
        std::vector<BigRational> cs = coeffs_;
        for (size_t i = 1; i < cs.size(); i += 2) cs[i] = -cs[i];
        return ExactPolynomial(std::move(cs));
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigRational> coeffs_;
};

// Exact Horner evaluation; negative and rational arguments are fine.
inline BigRational poly_eval(const ExactPolynomial& p, const BigRational& x) {
    BigRational acc(0);
    const auto& cs = p.coefficients();
    for (size_t i = cs.size(); i-- > 0;) acc = acc * x + cs[i];
    return acc;
}

// Unique polynomial of degree < #points through the given (abscissa, value)
// pairs, by the Lagrange basis.  Exact over the rationals, so there are no
// conditioning concerns.
inline ExactPolynomial interpolate(const std::vector<std::pair<long, BigRational>>& points) {
    if (points.empty()) throw parameter_error("interpolation needs at least one point");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw parameter_error("degenerate interpolation nodes");

    ExactPolynomial result;
    for (size_t i = 0; i < points.size(); ++i) {
        // basis_i = prod_{j != i} (x - x_j) / (x_i - x_j)
        ExactPolynomial basis = ExactPolynomial::constant(BigRational(1));
        BigInt denom = 1;
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * ExactPolynomial({BigRational(-points[j].first), BigRational(1)});
            denom *= BigInt(points[i].first) - BigInt(points[j].first);
        }
        result = result + (points[i].second / BigRational(denom)) * basis;
    }
    return result;
}

}  // namespace stirling
