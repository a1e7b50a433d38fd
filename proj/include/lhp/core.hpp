#pragma once

/**
 * @file core.hpp
 * @brief Parameter sequences, labeled posets, membership predicates and
 * dilate enumeration for s-lecture hall cones, simplices and order polytopes.
 *
 * All comparisons of ratios lambda_i / s_i are done by cross-multiplication
 * in checked 64-bit arithmetic. Nothing in here touches floating point.
 */

#include "lhp/error.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lhp {

/// An integer vector. Its size is the ambient dimension (n or n+1).
using Point = std::vector<Int>;

namespace detail {

inline void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
    }
}

inline std::string to_string(std::span<const Int> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

} // namespace detail

/**
 * The sequence s = (s_1, ..., s_n) of positive integers.
 *
 * Indexing through value() is 1-based and extends the sequence by the two
 * conventions s_0 = 0 and s_{n+1} = s_n + 1.
 */
class SSequence {
  public:
    explicit SSequence(std::vector<Int> values) : values_(std::move(values)) {
        if (values_.empty()) throw InputError("s must have at least one entry");
        for (Int v : values_) {
            if (v < 1) throw InputError("every entry of s must be a positive integer");
        }
        checked_add(values_.back(), 1);
    }

    /// The sequence (1, 2, ..., n).
    static SSequence identity(std::size_t n) {
        std::vector<Int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Int>(i + 1);
        return SSequence(std::move(v));
    }

    std::size_t n() const noexcept { return values_.size(); }

    /// s_i for i in 0..n+1.
    Int value(std::size_t i) const {
        if (i == 0) return 0;
        if (i == values_.size() + 1) return values_.back() + 1;
        return values_.at(i - 1);
    }

    /// s_{n+1} = s_n + 1.
    Int extended() const noexcept { return values_.back() + 1; }

    std::span<const Int> values() const noexcept { return values_; }

    bool weakly_increasing() const noexcept {
        return std::is_sorted(values_.begin(), values_.end());
    }

    /// s_i - s_{i-1} in {0, 1} for i in [n], with s_0 = 0.
    bool zero_one_diff() const noexcept {
        for (std::size_t i = 1; i <= n(); ++i) {
            Int d = value(i) - value(i - 1);
            if (d != 0 && d != 1) return false;
        }
        return true;
    }

    /// Product s_1 * ... * s_n, the normalized volume of the simplex.
    Int product() const {
        Int p = 1;
        for (Int v : values_) p = checked_mul(p, v);
        return p;
    }

    std::string str() const { return detail::to_string(values_); }

    friend bool operator==(const SSequence&, const SSequence&) = default;

  private:
    std::vector<Int> values_;
};

/**
 * A naturally labeled partial order on {1, ..., n}, stored as its full
 * reflexive-transitive closure.
 */
class LabeledPoset {
  public:
    /// Builds the closure of the given cover pairs (1-based, i below j).
    LabeledPoset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers)
        : n_(n), leq_(n * n, 0) {
        if (n == 0) throw InputError("poset must have a nonempty ground set");
        for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
        for (auto [i, j] : covers) {
            if (i < 1 || j < 1 || i > n || j > n) {
                throw InputError("poset relation (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") is outside the ground set");
            }
            leq_[(i - 1) * n + (j - 1)] = 1;
        }
        // Warshall
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (leq_[i * n + k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (leq_[k * n + j]) leq_[i * n + j] = 1;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (leq_[i * n + j] && leq_[j * n + i]) {
                    throw InputError("poset relation is not antisymmetric on " +
                                     std::to_string(i + 1) + " and " + std::to_string(j + 1));
                }
                if (leq_[j * n + i]) {
                    throw InputError("poset is not naturally labeled: " + std::to_string(j + 1) +
                                     " precedes " + std::to_string(i + 1));
                }
            }
        }
    }

    static LabeledPoset chain(std::size_t n) {
        std::vector<std::pair<std::size_t, std::size_t>> covers;
        for (std::size_t i = 1; i < n; ++i) covers.emplace_back(i, i + 1);
        return LabeledPoset(n, covers);
    }

    static LabeledPoset antichain(std::size_t n) { return LabeledPoset(n, {}); }

    std::size_t n() const noexcept { return n_; }

    /// i below-or-equal j, 1-based.
    bool leq(std::size_t i, std::size_t j) const { return leq_.at((i - 1) * n_ + (j - 1)) != 0; }

    /// All strict relations (i, j), i < j, in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> relations() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t i = 1; i <= n_; ++i)
            for (std::size_t j = i + 1; j <= n_; ++j)
                if (leq(i, j)) out.emplace_back(i, j);
        return out;
    }

    /// Cover relations of the closure (the Hasse diagram).
    std::vector<std::pair<std::size_t, std::size_t>> covers() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (auto [i, j] : relations()) {
            bool cover = true;
            for (std::size_t k = i + 1; k < j && cover; ++k)
                if (leq(i, k) && leq(k, j)) cover = false;
            if (cover) out.emplace_back(i, j);
        }
        return out;
    }

    friend bool operator==(const LabeledPoset&, const LabeledPoset&) = default;

  private:
    std::size_t n_;
    std::vector<char> leq_;
};

/// lambda_i / s_i <= lambda_j / s_j, exactly.
inline bool ratio_leq(Int lambda_i, Int s_i, Int lambda_j, Int s_j) {
    return checked_mul(lambda_i, s_j) <= checked_mul(lambda_j, s_i);
}

/// Membership in the cone 0 <= lam_1/s_1 <= ... <= lam_n/s_n.
inline bool cone_contains(const SSequence& s, std::span<const Int> lam) {
    detail::require_same_size(lam.size(), s.n(), "cone_contains");
    if (lam[0] < 0) return false;
    for (std::size_t i = 1; i < lam.size(); ++i) {
        if (!ratio_leq(lam[i - 1], s.value(i), lam[i], s.value(i + 1))) return false;
    }
    return true;
}

/// Membership in the k-th dilate of the s-lecture hall simplex.
inline bool simplex_contains(const SSequence& s, std::span<const Int> lam, Int k) {
    detail::require_same_size(lam.size(), s.n(), "simplex_contains");
    if (k < 1) throw InputError("simplex_contains: dilation factor must be positive");
    return cone_contains(s, lam) && lam.back() <= checked_mul(k, s.value(s.n()));
}

/// The (P,s)-partition inequalities alone, without the box bounds.
inline bool is_partition(const LabeledPoset& p, const SSequence& s, std::span<const Int> lam) {
    detail::require_same_size(p.n(), s.n(), "is_partition");
    detail::require_same_size(lam.size(), s.n(), "is_partition");
    for (auto [i, j] : p.relations()) {
        if (!ratio_leq(lam[i - 1], s.value(i), lam[j - 1], s.value(j))) return false;
    }
    return true;
}

/// Membership in k * O(P, s).
inline bool order_polytope_contains(const LabeledPoset& p, const SSequence& s,
                                    std::span<const Int> lam, Int k) {
    detail::require_same_size(p.n(), s.n(), "order_polytope_contains");
    detail::require_same_size(lam.size(), s.n(), "order_polytope_contains");
    if (k < 1) throw InputError("order_polytope_contains: dilation factor must be positive");
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] < 0 || lam[i] > checked_mul(k, s.value(i + 1))) return false;
    }
    return is_partition(p, s, lam);
}

/// Number of points in the box prod [0, k s_i]; throws once it passes the budget.
inline Int dilate_box_size(const SSequence& s, Int k, Int budget) {
    Int size = 1;
    for (Int v : s.values()) {
        size = checked_mul(size, checked_add(checked_mul(k, v), 1));
        if (size > budget) {
            throw BudgetExceeded("dilate box for k=" + std::to_string(k) + " and s=" + s.str() +
                                 " exceeds the budget of " + std::to_string(budget) + " points");
        }
    }
    return size;
}

namespace detail {

/// Depth-first scan of prod [0, k s_i] in lexicographic order. Partial
/// vectors are pruned with every relation whose endpoints are both set; with
/// a natural labeling that is every relation (i, j) with j at the frontier.
template <class Visit>
void scan_dilate(const LabeledPoset& p, const SSequence& s, Int k, Visit&& visit) {
    const std::size_t n = s.n();
    std::vector<std::vector<std::size_t>> below(n + 1);
    for (auto [i, j] : p.relations()) below[j].push_back(i);
    Point lam(n, 0);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == n) {
            visit(static_cast<const Point&>(lam));
            return;
        }
        const Int hi = checked_mul(k, s.value(pos + 1));
        for (Int v = 0; v <= hi; ++v) {
            lam[pos] = v;
            bool ok = true;
            for (std::size_t i : below[pos + 1]) {
                if (!ratio_leq(lam[i - 1], s.value(i), v, s.value(pos + 1))) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, pos + 1);
        }
        lam[pos] = 0;
    };
    rec(rec, 0);
}

} // namespace detail

/// All lattice points of k * O(P, s), strictly lex-increasing.
inline std::vector<Point> enumerate_dilate_points(const LabeledPoset& p, const SSequence& s, Int k,
                                                  Int budget = kDefaultBudget) {
    detail::require_same_size(p.n(), s.n(), "enumerate_dilate_points");
    if (k < 1) throw InputError("enumerate_dilate_points: dilation factor must be positive");
    dilate_box_size(s, k, budget);
    std::vector<Point> out;
    detail::scan_dilate(p, s, k, [&](const Point& lam) { out.push_back(lam); });
    return out;
}

/// Componentwise minimum.
inline Point meet(std::span<const Int> a, std::span<const Int> b) {
    detail::require_same_size(a.size(), b.size(), "meet");
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
    return out;
}

/// Componentwise maximum.
inline Point join(std::span<const Int> a, std::span<const Int> b) {
    detail::require_same_size(a.size(), b.size(), "join");
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

inline Point add(std::span<const Int> a, std::span<const Int> b) {
    detail::require_same_size(a.size(), b.size(), "add");
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
    return out;
}

inline Point subtract(std::span<const Int> a, std::span<const Int> b) {
    detail::require_same_size(a.size(), b.size(), "subtract");
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_sub(a[i], b[i]);
    return out;
}

} // namespace lhp
