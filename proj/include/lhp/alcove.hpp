#pragma once

/**
 * @file alcove.hpp
 * @brief The difference-plus-homogenization transform from the s-lecture
 * hall simplex to its alcoved form, lattice-point tests in alcove
 * coordinates, and the lexicographic orders on points and collections.
 *
 * Everything here requires s to be weakly increasing with first differences
 * in {0, 1} (taking s_0 = 0, so s_1 = 1).
 */

#include "lhp/core.hpp"

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <vector>

namespace lhp {

inline void require_gated(const SSequence& s) {
    if (!s.weakly_increasing() || !s.zero_one_diff())
        throw GateError("s=" + s.str() +
                        " must be weakly increasing with first differences in {0,1} and s_1 = 1");
}

/// Multiplicity vector of length n+1, tagged with the dilate it belongs to.
struct AlcovePoint {
    Point z;
    Int degree = 1;

    friend bool operator==(const AlcovePoint&, const AlcovePoint&) = default;
};

/// z_i = x_i - x_{i-1} (x_0 = 0), z_{n+1} = k s_{n+1} - x_n.
inline AlcovePoint to_alcove(const SSequence& s, std::span<const Int> x, Int k = 1) {
    require_gated(s);
    detail::require_same_size(x.size(), s.n(), "to_alcove");
    if (!simplex_contains(s, x, k))
        throw PreconditionError("to_alcove: " + detail::to_string(x) + " is not in " +
                                std::to_string(k) + " P_n^s");
    AlcovePoint out{Point(s.n() + 1), k};
    Int prev = 0;
    for (std::size_t i = 0; i < s.n(); ++i) {
        out.z[i] = x[i] - prev;
        prev = x[i];
    }
    out.z[s.n()] = checked_sub(checked_mul(k, s.extended()), prev);
    return out;
}

/// Membership of z in k A_n^s via the defining linear inequalities.
inline bool is_in_dilate(const SSequence& s, std::span<const Int> z, Int k) {
    detail::require_same_size(z.size(), s.n() + 1, "is_in_dilate");
    if (k < 1) throw InputError("is_in_dilate: dilation factor must be positive");
    const std::size_t n = s.n();
    Int total = 0;
    for (Int v : z) total = checked_add(total, v);
    if (total != checked_mul(k, s.extended())) return false;
    Int prefix = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        prefix = checked_add(prefix, z[j - 1]);
        if (prefix < 0 || prefix > checked_mul(k, s.value(j))) return false;
        if (j <= n - 1) {
            Int lhs = checked_mul(s.value(j + 1) - s.value(j), prefix);
            if (lhs < 0 || lhs > checked_mul(s.value(j), z[j])) return false;
        }
    }
    return true;
}

/// Partial sums of z, dropping the homogenizing coordinate. No validation.
inline Point partial_sums(std::span<const Int> z) {
    Point x(z.size() > 0 ? z.size() - 1 : 0);
    Int acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc = checked_add(acc, z[i]);
        x[i] = acc;
    }
    return x;
}

inline Point from_alcove(const SSequence& s, const AlcovePoint& p) {
    require_gated(s);
    if (!is_in_dilate(s, p.z, p.degree))
        throw PreconditionError("from_alcove: " + detail::to_string(p.z) + " is not in " +
                                std::to_string(p.degree) + " A_n^s");
    return partial_sums(p.z);
}

/**
 * The combinatorial characterization of degree-1 lattice points:
 * (1) sum z = s_{n+1}; (2) 0 <= z_1 + ... + z_j <= s_j for j in [n+1];
 * (3) s_{i+1} = s_i implies z_{i+1} >= 0; (4) s_{i+1} > s_i and an earlier
 * nonzero entry imply z_{i+1} >= 1.
 *
 * Condition (4) asks for a positive entry, not merely a nonzero one: on
 * vectors with negative entries "nonzero" admits points such as (1,-1,2,2)
 * for s = (1,2,3) that are not in the polytope.
 */
inline bool lemma_conditions(const SSequence& s, std::span<const Int> z) {
    require_gated(s);
    detail::require_same_size(z.size(), s.n() + 1, "lemma_conditions");
    const std::size_t n = s.n();
    Int total = 0;
    for (Int v : z) total = checked_add(total, v);
    if (total != s.extended()) return false;
    Int prefix = 0;
    for (std::size_t j = 1; j <= n + 1; ++j) {
        prefix = checked_add(prefix, z[j - 1]);
        if (prefix < 0 || prefix > s.value(j)) return false;
    }
    bool seen_nonzero = false;
    for (std::size_t i = 1; i <= n; ++i) {
        seen_nonzero = seen_nonzero || z[i - 1] != 0;
        const Int zi1 = z[i];
        if (s.value(i + 1) == s.value(i)) {
            if (zi1 < 0) return false;
        } else if (seen_nonzero && zi1 < 1) {
            return false;
        }
    }
    return true;
}

/// A(s) = { i in [n+1] : s_{i-1} < s_i }, ascending, 1-based.
inline std::vector<std::size_t> diff_support(const SSequence& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= s.n() + 1; ++i)
        if (s.value(i - 1) < s.value(i)) out.push_back(i);
    return out;
}

/// Membership mask for A(s), indexed 1..n+1 (entry 0 unused).
inline std::vector<char> diff_support_mask(const SSequence& s) {
    std::vector<char> mask(s.n() + 2, 0);
    for (std::size_t i : diff_support(s)) mask[i] = 1;
    return mask;
}

/// a vs b: greater iff the first nonzero entry of a - b is positive.
inline std::strong_ordering lex_compare(std::span<const Int> a, std::span<const Int> b) {
    detail::require_same_size(a.size(), b.size(), "lex_compare");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

/// All degree-1 lattice points of A_n^s, lex-decreasing.
inline std::vector<Point> enumerate_multisets(const SSequence& s, Int budget = kDefaultBudget) {
    require_gated(s);
    const std::size_t n = s.n();
    Int visited = 0;
    std::vector<Point> out;
    Point z(n + 1, 0);
    // prefix sums bounded by s_j; the last entry is forced by the total
    auto rec = [&](auto&& self, std::size_t pos, Int prefix) -> void {
        if (++visited > budget) throw BudgetExceeded("enumerate_multisets: budget exceeded");
        if (pos == n) {
            z[n] = s.extended() - prefix;
            if (lemma_conditions(s, z)) out.push_back(z);
            return;
        }
        for (Int v = 0; prefix + v <= s.value(pos + 1); ++v) {
            z[pos] = v;
            self(self, pos + 1, prefix + v);
        }
        z[pos] = 0;
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) { return a > b; });
    return out;
}

/// Human-readable multiset {1^a 2^b ...}; zero multiplicities are omitted.
inline std::string render_multiset(std::span<const Int> z) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] == 0) continue;
        if (!first) out += " ";
        first = false;
        out += std::to_string(i + 1) + "^" + std::to_string(z[i]);
    }
    return out + "}";
}

/**
 * A multiset of degree-1 alcove points, kept sorted lex-decreasing.
 * Repeats are allowed.
 */
class Collection {
  public:
    Collection() = default;

    explicit Collection(std::vector<Point> elems) : elems_(std::move(elems)) {
        for (std::size_t i = 1; i < elems_.size(); ++i)
            detail::require_same_size(elems_[i].size(), elems_[0].size(), "Collection");
        normalize();
    }

    explicit Collection(const std::vector<AlcovePoint>& elems) {
        for (const AlcovePoint& p : elems) {
            if (p.degree != 1)
                throw InputError("Collection: elements must all be degree-1 points, got degree " +
                                 std::to_string(p.degree));
            elems_.push_back(p.z);
        }
        for (std::size_t i = 1; i < elems_.size(); ++i)
            detail::require_same_size(elems_[i].size(), elems_[0].size(), "Collection");
        normalize();
    }

    Collection(std::initializer_list<Point> elems) : Collection(std::vector<Point>(elems)) {}

    const std::vector<Point>& elems() const noexcept { return elems_; }
    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    const Point& operator[](std::size_t i) const { return elems_.at(i); }

    /// Coordinate sum of all elements (the multiunion).
    Point sum() const {
        if (elems_.empty()) return {};
        Point y(elems_[0].size(), 0);
        for (const Point& e : elems_) y = add(y, e);
        return y;
    }

    /// Replaces elements i and j (i != j) by a and b and re-sorts.
    void replace_pair(std::size_t i, std::size_t j, Point a, Point b) {
        elems_.at(i) = std::move(a);
        elems_.at(j) = std::move(b);
        normalize();
    }

    friend bool operator==(const Collection&, const Collection&) = default;

  private:
    void normalize() {
        std::sort(elems_.begin(), elems_.end(), [](const Point& a, const Point& b) { return a > b; });
    }
    std::vector<Point> elems_;
};

/// Compares equal-size collections at the first index where they differ.
inline std::strong_ordering collection_compare(const Collection& a, const Collection& b) {
    if (a.size() != b.size()) throw InputError("collection_compare: size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto c = lex_compare(a[i], b[i]);
        if (c != 0) return c;
    }
    return std::strong_ordering::equal;
}

inline std::string render(const Collection& c) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ", ";
        out += render_multiset(c[i]);
    }
    return out + "]";
}

} // namespace lhp
