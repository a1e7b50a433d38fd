#pragma once

/**
 * @file ehrhart.hpp
 * @brief Lattice-point counts of dilates, h*-polynomials, and two independent
 * generating-function oracles (descent-counting Eulerian polynomials and the
 * odd-part product for lecture hall partitions).
 */

#include "lhp/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace lhp {

/// Integer polynomial, constant term first, trailing zeros trimmed.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    Int operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

    Int evaluate(Int x) const {
        Int acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = checked_add(checked_mul(acc, x), *it);
        return acc;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            Int c = coeffs_[i];
            if (c == 0) continue;
            if (!out.empty()) out += c < 0 ? " - " : " + ";
            else if (c < 0) out += "-";
            Int a = c < 0 ? -c : c;
            if (i == 0 || a != 1) out += std::to_string(a);
            if (i >= 1) out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Int> coeffs_;
};

/// |k O(P,s) cap Z^n| for k = 0..kmax.
inline std::vector<Int> ehrhart_counts(const LabeledPoset& p, const SSequence& s, Int kmax,
                                       Int budget = kDefaultBudget) {
    detail::require_same_size(p.n(), s.n(), "ehrhart_counts");
    if (kmax < 0) throw InputError("ehrhart_counts: kmax must be nonnegative");
    std::vector<Int> counts{1};
    for (Int k = 1; k <= kmax; ++k) {
        dilate_box_size(s, k, budget);
        Int c = 0;
        detail::scan_dilate(p, s, k, [&](const Point&) { ++c; });
        counts.push_back(c);
    }
    return counts;
}

/**
 * Recovers h* from the counting function by multiplying the Ehrhart series
 * with (1 - x)^(dim+1). Coefficients beyond dim, where the supplied counts
 * determine them, must vanish.
 */
inline IntPolynomial hstar_from_counts(const std::vector<Int>& counts, Int dim) {
    if (dim < 0) throw InputError("hstar_from_counts: dim must be nonnegative");
    if (static_cast<Int>(counts.size()) < dim + 1)
        throw InputError("hstar_from_counts: need at least dim+1 counts");
    if (counts[0] != 1) throw InputError("hstar_from_counts: counts[0] must be 1");
    std::vector<Int> h(counts.size(), 0);
    for (std::size_t j = 0; j < counts.size(); ++j) {
        Int acc = 0;
        for (std::size_t i = 0; i <= j && static_cast<Int>(i) <= dim + 1; ++i) {
            Int term = checked_mul(binomial(dim + 1, static_cast<Int>(i)), counts[j - i]);
            acc = i % 2 ? checked_sub(acc, term) : checked_add(acc, term);
        }
        h[j] = acc;
    }
    for (std::size_t j = 0; j < h.size(); ++j) {
        if (static_cast<Int>(j) <= dim && h[j] < 0)
            throw InputError("hstar_from_counts: negative coefficient h*_" + std::to_string(j) +
                             " = " + std::to_string(h[j]) + " (wrong dim or bad counts)");
        if (static_cast<Int>(j) > dim && h[j] != 0)
            throw InputError("hstar_from_counts: coefficient h*_" + std::to_string(j) + " = " +
                             std::to_string(h[j]) + " beyond degree " + std::to_string(dim));
    }
    h.resize(static_cast<std::size_t>(dim) + 1);
    return IntPolynomial(std::move(h));
}

/// h* of O(P,s); the polytope is full-dimensional so dim = n.
inline IntPolynomial hstar(const LabeledPoset& p, const SSequence& s, Int budget = kDefaultBudget) {
    const Int d = static_cast<Int>(s.n());
    return hstar_from_counts(ehrhart_counts(p, s, d, budget), d);
}

/// Permutations of [n] counted by number of descents.
inline IntPolynomial eulerian_oracle(int n) {
    if (n < 1) throw InputError("eulerian_oracle: n must be positive");
    if (n > 9) throw BudgetExceeded("eulerian_oracle: n > 9 exceeds the enumeration budget");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Int> coeffs(static_cast<std::size_t>(n), 0);
    do {
        std::size_t descents = 0;
        for (std::size_t i = 0; i + 1 < perm.size(); ++i)
            if (perm[i] > perm[i + 1]) ++descents;
        ++coeffs[descents];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return IntPolynomial(std::move(coeffs));
}

/**
 * Entry m counts the lattice points of the (1, 2, ..., n)-lecture hall cone
 * with coordinate sum m, by direct enumeration.
 */
inline std::vector<Int> lecture_hall_gf(int n, Int max_sum, Int budget = kDefaultBudget) {
    if (n < 1) throw InputError("lecture_hall_gf: n must be positive");
    if (max_sum < 0) throw InputError("lecture_hall_gf: max_sum must be nonnegative");
    std::vector<Int> out(static_cast<std::size_t>(max_sum) + 1, 0);
    Int visited = 0;
    // position i (1-based) holds lambda_i; lambda_{i-1}/(i-1) <= lambda_i/i
    auto rec = [&](auto&& self, int i, Int prev, Int sum) -> void {
        if (++visited > budget)
            throw BudgetExceeded("lecture_hall_gf: enumeration exceeds the budget");
        if (i > n) {
            ++out[static_cast<std::size_t>(sum)];
            return;
        }
        Int lo = 0;
        if (i > 1) lo = (checked_mul(prev, i) + (i - 2)) / (i - 1); // ceil(prev * i / (i-1))
        for (Int v = lo; sum + v <= max_sum; ++v) self(self, i + 1, v, sum + v);
    };
    rec(rec, 1, 0, 0);
    return out;
}

/// Truncated series of prod_{i=1..n} 1 / (1 - q^(2i-1)).
inline std::vector<Int> odd_product_gf(int n, Int max_sum) {
    if (n < 1) throw InputError("odd_product_gf: n must be positive");
    if (max_sum < 0) throw InputError("odd_product_gf: max_sum must be nonnegative");
    std::vector<Int> series(static_cast<std::size_t>(max_sum) + 1, 0);
    series[0] = 1;
    for (int i = 1; i <= n; ++i) {
        const std::size_t part = static_cast<std::size_t>(2 * i - 1);
        for (std::size_t m = part; m < series.size(); ++m)
            series[m] = checked_add(series[m], series[m - part]);
    }
    return series;
}

} // namespace lhp
