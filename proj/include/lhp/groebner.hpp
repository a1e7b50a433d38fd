#pragma once

/**
 * @file groebner.hpp
 * @brief Pair minimization, the quadratic marked binomials x_I x_J - x_I- x_J-
 * for s-lecture hall multisets, and normal forms under the induced reduction.
 *
 * No term order is built explicitly. The marked binomials define a rewriting
 * relation on collections (monomials), and that relation is what every
 * operation here works with.
 */

#include "lhp/alcove.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lhp {

/**
 * alpha_r(y) = min { i in [n+1] : y_i >= r and y_j >= r for every j > i in A(s) },
 * 1-based; nullopt when no index qualifies.
 */
inline std::optional<std::size_t> alpha(std::span<const Int> y, Int r, const SSequence& s) {
    detail::require_same_size(y.size(), s.n() + 1, "alpha");
    const auto in_a = diff_support_mask(s);
    // scan from the right, tracking whether every later A(s)-coordinate is >= r
    std::optional<std::size_t> best;
    bool tail_ok = true;
    for (std::size_t i = y.size(); i >= 1; --i) {
        if (y[i - 1] >= r && tail_ok) best = i;
        if (in_a[i] && y[i - 1] < r) tail_ok = false;
    }
    return best;
}

/// Position (1-based) of the first nonzero entry.
inline std::size_t ell(std::span<const Int> x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) return i + 1;
    throw InputError("ell: the zero vector has no leading entry");
}

/// Marked binomial: lead is the non-minimal pair, trail its minimizer.
struct Binomial {
    Collection lead;
    Collection trail;

    friend bool operator==(const Binomial&, const Binomial&) = default;
};

/**
 * The degree-1 lattice points of A_n^s together with a precomputed table of
 * which pairs are minimal. Shared context for everything that reduces
 * collections.
 */
class MultisetTable {
  public:
    explicit MultisetTable(SSequence s, Int budget = kDefaultBudget)
        : s_(std::move(s)), points_(enumerate_multisets(s_, budget)) {
        const std::size_t m = points_.size();
        if (checked_mul(checked_mul(static_cast<Int>(m), static_cast<Int>(m)),
                        static_cast<Int>(m)) > budget)
            throw BudgetExceeded("MultisetTable: pair table exceeds the budget");
        for (std::size_t i = 0; i < m; ++i) index_.emplace(points_[i], i);
        minimizer_.resize(m * m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                auto best = brute_minimize(i, j);
                minimizer_[i * m + j] = best;
                minimizer_[j * m + i] = best;
            }
        }
    }

    const SSequence& s() const noexcept { return s_; }

    /// Degree-1 points, lex-decreasing.
    const std::vector<Point>& points() const noexcept { return points_; }

    std::optional<std::size_t> find(std::span<const Int> z) const {
        auto it = index_.find(Point(z.begin(), z.end()));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t index_of(std::span<const Int> z) const {
        auto i = find(z);
        if (!i) throw PreconditionError(detail::to_string(z) + " is not a degree-1 point of A_n^s");
        return *i;
    }

    /// Minimal pair with the same sum, as point indices (first >= second in lex order).
    std::pair<std::size_t, std::size_t> minimizer(std::size_t i, std::size_t j) const {
        return minimizer_.at(i * points_.size() + j);
    }

    bool is_minimal_pair(std::size_t i, std::size_t j) const {
        auto [a, b] = minimizer(i, j);
        return (a == i && b == j) || (a == j && b == i);
    }

    bool is_minimal_pair(std::span<const Int> a, std::span<const Int> b) const {
        return is_minimal_pair(index_of(a), index_of(b));
    }

  private:
    // Exhaustive scan of every split y = p + (y - p) into two degree-1 points.
    // Points are sorted descending, so indices sort the same way: smaller index
    // means lex-larger point.
    std::pair<std::size_t, std::size_t> brute_minimize(std::size_t i, std::size_t j) const {
        const Point y = add(points_[i], points_[j]);
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t p = 0; p < points_.size(); ++p) {
            auto q = find(subtract(y, points_[p]));
            if (!q) continue;
            std::pair<std::size_t, std::size_t> cand{std::min(p, *q), std::max(p, *q)};
            // collection order: compare larger elements, then smaller ones;
            // larger index = lex-smaller point
            if (!best || cand.first > best->first ||
                (cand.first == best->first && cand.second > best->second))
                best = cand;
        }
        return *best;
    }

    SSequence s_;
    std::vector<Point> points_;
    std::map<Point, std::size_t> index_;
    std::vector<std::pair<std::size_t, std::size_t>> minimizer_;
};

/// The lex-minimal pair {I-, J-} with I- + J- = I + J, by exhaustive split search.
inline Collection minimize_pair(const MultisetTable& table, std::span<const Int> I,
                                std::span<const Int> J) {
    auto [a, b] = table.minimizer(table.index_of(I), table.index_of(J));
    return Collection{table.points()[a], table.points()[b]};
}

inline Collection minimize_pair(std::span<const Int> I, std::span<const Int> J, const SSequence& s) {
    return minimize_pair(MultisetTable(s), I, J);
}

/**
 * Closed-form minimizer. Let y = I + J, u the larger and v the smaller part.
 * v vanishes before a start index, after which every A(s)-coordinate of u and
 * v must be positive, so the start is the first i with y_i >= 1 (i outside
 * A(s) and u already started) or y_i >= 2 (otherwise) such that y_j >= 2 for
 * every later j in A(s). From there v is maximized coordinatewise:
 *   v_j = min(y_j - 1, s_j - (v_1 + ... + v_{j-1}))   for j in A(s),
 *   v_j = min(y_j,     s_j - (v_1 + ... + v_{j-1}))   otherwise,
 * additionally capped at floor(y_j / 2) while u and v still agree.
 */
inline Collection minimize_pair_greedy(std::span<const Int> I, std::span<const Int> J,
                                       const SSequence& s) {
    require_gated(s);
    detail::require_same_size(I.size(), s.n() + 1, "minimize_pair_greedy");
    detail::require_same_size(J.size(), s.n() + 1, "minimize_pair_greedy");
    if (!lemma_conditions(s, I) || !lemma_conditions(s, J))
        throw PreconditionError("minimize_pair_greedy: inputs must be degree-1 points of A_n^s");
    const Point y = add(I, J);
    const std::size_t N = y.size();
    const auto in_a = diff_support_mask(s);
    const std::size_t first = ell(y);

    std::size_t start = N;
    bool tail_ok = true; // y_j >= 2 for every j > i in A(s)
    for (std::size_t i = N; i >= 1; --i) {
        const Int need = (!in_a[i] && i > first) ? 1 : 2;
        if (tail_ok && y[i - 1] >= need) start = i;
        if (in_a[i] && y[i - 1] < 2) tail_ok = false;
    }

    Point v(N, 0);
    bool tied = start == first;
    Int prefix = 0;
    for (std::size_t j = start; j <= N; ++j) {
        Int cap = std::min(in_a[j] ? y[j - 1] - 1 : y[j - 1], s.value(j) - prefix);
        if (tied) cap = std::min(cap, y[j - 1] / 2);
        v[j - 1] = cap;
        prefix += cap;
        if (tied && 2 * cap != y[j - 1]) tied = false;
    }
    Point u = subtract(y, v);
    if (!lemma_conditions(s, u) || !lemma_conditions(s, v))
        throw InternalError("minimize_pair_greedy: closed form left A_n^s for y=" +
                            detail::to_string(y));
    return Collection{std::move(u), std::move(v)};
}

/**
 * Every binomial x_I x_J - x_I- x_J- with {I, J} not minimal, sorted by
 * lead from largest to smallest.
 */
inline std::vector<Binomial> groebner_basis(const MultisetTable& table) {
    std::vector<Binomial> out;
    const auto& pts = table.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i; j < pts.size(); ++j) {
            if (table.is_minimal_pair(i, j)) continue;
            auto [a, b] = table.minimizer(i, j);
            out.push_back({Collection{pts[i], pts[j]}, Collection{pts[a], pts[b]}});
        }
    }
    std::sort(out.begin(), out.end(), [](const Binomial& x, const Binomial& y) {
        return collection_compare(x.lead, y.lead) > 0;
    });
    return out;
}

inline std::vector<Binomial> groebner_basis(const SSequence& s, Int budget = kDefaultBudget) {
    return groebner_basis(MultisetTable(s, budget));
}

/// Every pair inside C is minimal.
inline bool is_standard(const Collection& c, const MultisetTable& table) {
    std::vector<std::size_t> idx;
    for (const Point& p : c.elems()) idx.push_back(table.index_of(p));
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (!table.is_minimal_pair(idx[a], idx[b])) return false;
    return true;
}

inline bool is_standard(const Collection& c, const SSequence& s) {
    return is_standard(c, MultisetTable(s));
}

/// Positions (i, j), i < j, of the non-minimal pairs of C.
inline std::vector<std::pair<std::size_t, std::size_t>> reducible_pairs(const Collection& c,
                                                                         const MultisetTable& table) {
    std::vector<std::size_t> idx;
    for (const Point& p : c.elems()) idx.push_back(table.index_of(p));
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (!table.is_minimal_pair(idx[a], idx[b])) out.emplace_back(a, b);
    return out;
}

/// Chooses the lex-greatest reducible pair.
struct GreatestPairFirst {
    std::size_t operator()(const std::vector<std::pair<std::size_t, std::size_t>>& eligible,
                           const Collection& c) const {
        std::size_t best = 0;
        for (std::size_t k = 1; k < eligible.size(); ++k) {
            const auto [a, b] = eligible[k];
            const auto [ba, bb] = eligible[best];
            auto cmp = lex_compare(c[a], c[ba]);
            if (cmp == 0) cmp = lex_compare(c[b], c[bb]);
            if (cmp > 0) best = k;
        }
        return best;
    }
};

/**
 * Rewrites C with the marked binomials until every pair is minimal. `select`
 * picks which reducible pair to rewrite next (index into the eligible list).
 * An iteration cap of |C|^2 |points| guards termination.
 */
template <class Select = GreatestPairFirst>
Collection normal_form(Collection c, const MultisetTable& table, Select&& select = {}) {
    const Int cap = std::max<Int>(1, static_cast<Int>(c.size() * c.size() * table.points().size()));
    for (Int step = 0;; ++step) {
        auto eligible = reducible_pairs(c, table);
        if (eligible.empty()) return c;
        if (step >= cap)
            throw InternalError("normal_form: reduction did not terminate within " +
                                std::to_string(cap) + " steps");
        auto [a, b] = eligible.at(select(eligible, c));
        auto [ma, mb] = table.minimizer(table.index_of(c[a]), table.index_of(c[b]));
        c.replace_pair(a, b, table.points()[ma], table.points()[mb]);
    }
}

inline Collection normal_form(const Collection& c, const SSequence& s) {
    return normal_form(c, MultisetTable(s));
}

/**
 * For a pairwise-minimal collection x^1 >= ... >= x^m with sum y, checks
 * ell(x^i) = alpha_i(y) for every i.
 */
inline bool lemma_sp_check(const Collection& c, const MultisetTable& table) {
    if (!is_standard(c, table))
        throw PreconditionError("lemma_sp_check: collection is not pairwise minimal");
    if (c.empty()) return true;
    const Point y = c.sum();
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto a = alpha(y, static_cast<Int>(i + 1), table.s());
        if (!a || *a != ell(c[i])) return false;
    }
    return true;
}

inline bool lemma_sp_check(const Collection& c, const SSequence& s) {
    return lemma_sp_check(c, MultisetTable(s));
}

} // namespace lhp
