#pragma once

/**
 * @file idp.hpp
 * @brief The saturation order on O(P,s), the canonical chain decomposition of
 * points of k O(P,s), and brute-force cross-checks of the integer
 * decomposition property.
 */

#include "lhp/core.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lhp {

/// a_i <= b_i for all i, and a_i != 0 forces b_i = s_i.
inline bool triangle_leq(std::span<const Int> a, std::span<const Int> b, const SSequence& s) {
    detail::require_same_size(a.size(), s.n(), "triangle_leq");
    detail::require_same_size(b.size(), s.n(), "triangle_leq");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] != 0 && b[i] != s.value(i + 1)) return false;
    }
    return true;
}

/// lambda = parts[0] + ... + parts[k-1] with parts[i] below parts[i+1].
struct DecompositionChain {
    Int k = 0;
    std::vector<Point> parts;

    friend bool operator==(const DecompositionChain&, const DecompositionChain&) = default;
};

/**
 * Canonical decomposition of lam in k O(P,s): the top part is lam ^ s and the
 * remainder (lam - s) v 0 is decomposed recursively in (k-1) O(P,s).
 */
inline DecompositionChain idp_decompose(const LabeledPoset& p, const SSequence& s,
                                        std::span<const Int> lam, Int k) {
    if (!order_polytope_contains(p, s, lam, k))
        throw PreconditionError("idp_decompose: " + detail::to_string(lam) + " is not in " +
                                std::to_string(k) + " O(P,s)");
    const Point zero(s.n(), 0);
    const Point sv(s.values().begin(), s.values().end());
    DecompositionChain chain{k, std::vector<Point>(static_cast<std::size_t>(k))};
    Point rest(lam.begin(), lam.end());
    for (Int i = k; i >= 1; --i) {
        chain.parts[static_cast<std::size_t>(i - 1)] = meet(rest, sv);
        rest = join(subtract(rest, sv), zero);
    }
    if (rest != zero) throw InternalError("idp_decompose: nonzero remainder after k steps");
    return chain;
}

enum class ChainFailure {
    None,
    WrongLength,       ///< parts.size() != k or a part has the wrong dimension
    PartNotInPolytope, ///< some part is not a lattice point of O(P,s)
    OrderViolated,     ///< parts[i] is not below parts[i+1]
    SumMismatch,       ///< the parts do not add up to lambda
};

inline const char* to_string(ChainFailure f) {
    switch (f) {
    case ChainFailure::None: return "ok";
    case ChainFailure::WrongLength: return "wrong_length";
    case ChainFailure::PartNotInPolytope: return "part_not_in_polytope";
    case ChainFailure::OrderViolated: return "order_violated";
    case ChainFailure::SumMismatch: return "sum_mismatch";
    }
    return "unknown";
}

struct ChainVerdict {
    bool ok = true;
    ChainFailure reason = ChainFailure::None;
    std::size_t index = 0; ///< offending part (0-based), when applicable

    explicit operator bool() const noexcept { return ok; }
};

inline ChainVerdict verify_chain(const DecompositionChain& c, const LabeledPoset& p,
                                 const SSequence& s, std::span<const Int> lam) {
    auto fail = [](ChainFailure r, std::size_t i) { return ChainVerdict{false, r, i}; };
    if (c.k < 1 || c.parts.size() != static_cast<std::size_t>(c.k) || lam.size() != s.n())
        return fail(ChainFailure::WrongLength, 0);
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        if (c.parts[i].size() != s.n()) return fail(ChainFailure::WrongLength, i);
        if (!order_polytope_contains(p, s, c.parts[i], 1))
            return fail(ChainFailure::PartNotInPolytope, i);
    }
    for (std::size_t i = 0; i + 1 < c.parts.size(); ++i)
        if (!triangle_leq(c.parts[i], c.parts[i + 1], s)) return fail(ChainFailure::OrderViolated, i);
    Point sum(s.n(), 0);
    for (const Point& part : c.parts) sum = add(sum, part);
    if (!std::equal(sum.begin(), sum.end(), lam.begin(), lam.end()))
        return fail(ChainFailure::SumMismatch, 0);
    return {};
}

namespace detail {

/// rest is a candidate remainder for `count` more parts: 0 <= rest <= count * s.
inline bool within_box(std::span<const Int> rest, const SSequence& s, Int count) {
    for (std::size_t i = 0; i < rest.size(); ++i)
        if (rest[i] < 0 || rest[i] > count * s.value(i + 1)) return false;
    return true;
}

} // namespace detail

/**
 * Counts every chain lambda^(1) below ... below lambda^(k) of lattice points
 * of O(P,s) summing to lam, by exhaustive search over the degree-1 points in
 * lex order. Stops early once `limit` chains are found.
 */
inline Int count_decomposition_chains(const LabeledPoset& p, const SSequence& s,
                                      std::span<const Int> lam, Int k, Int limit = 2,
                                      Int budget = kDefaultBudget) {
    if (!order_polytope_contains(p, s, lam, k))
        throw PreconditionError("count_decomposition_chains: point is not in the dilate");
    const auto gens = enumerate_dilate_points(p, s, 1, budget);
    Int found = 0;
    Int steps = 0;
    std::vector<const Point*> chosen;
    auto rec = [&](auto&& self, const Point& rest, Int remaining) -> void {
        if (found >= limit) return;
        if (remaining == 0) {
            if (std::all_of(rest.begin(), rest.end(), [](Int v) { return v == 0; })) ++found;
            return;
        }
        for (const Point& g : gens) {
            if (++steps > budget) throw BudgetExceeded("count_decomposition_chains: budget exceeded");
            if (!chosen.empty() && !triangle_leq(*chosen.back(), g, s)) continue;
            Point next = subtract(rest, g);
            if (!detail::within_box(next, s, remaining - 1)) continue;
            chosen.push_back(&g);
            self(self, next, remaining - 1);
            chosen.pop_back();
        }
    };
    rec(rec, Point(lam.begin(), lam.end()), k);
    return found;
}

/**
 * Decides IDP for the k-th dilate directly: every lattice point of k O(P,s)
 * must lie in the k-fold Minkowski sum of the degree-1 lattice points. The
 * sums are tracked as a bitmap over the box prod [0, k s_i].
 */
inline bool idp_brute_oracle(const LabeledPoset& p, const SSequence& s, Int k,
                             Int budget = kDefaultBudget) {
    detail::require_same_size(p.n(), s.n(), "idp_brute_oracle");
    if (k < 1) throw InputError("idp_brute_oracle: dilation factor must be positive");
    const Int box = dilate_box_size(s, k, budget);
    const auto gens = enumerate_dilate_points(p, s, 1, budget);
    if (checked_mul(static_cast<Int>(gens.size()), box) > checked_mul(budget, 8))
        throw BudgetExceeded("idp_brute_oracle: Minkowski sum exceeds the budget");
    const std::size_t n = s.n();
    std::vector<Int> stride(n);
    {
        Int acc = 1;
        for (std::size_t i = n; i-- > 0;) {
            stride[i] = acc;
            acc *= k * s.value(i + 1) + 1;
        }
    }
    auto encode = [&](std::span<const Int> v) {
        Int idx = 0;
        for (std::size_t i = 0; i < n; ++i) idx += v[i] * stride[i];
        return static_cast<std::size_t>(idx);
    };
    std::vector<Point> layer{Point(n, 0)};
    for (Int step = 1; step <= k; ++step) {
        std::vector<char> seen(static_cast<std::size_t>(box), 0);
        std::vector<Point> next;
        for (const Point& a : layer) {
            for (const Point& g : gens) {
                Point sum = add(a, g);
                auto idx = encode(sum);
                if (!seen[idx]) {
                    seen[idx] = 1;
                    next.push_back(std::move(sum));
                }
            }
        }
        layer = std::move(next);
        if (step == k) {
            bool all = true;
            detail::scan_dilate(p, s, k, [&](const Point& lam) {
                if (!seen[encode(lam)]) all = false;
            });
            return all;
        }
    }
    return true;
}

/**
 * For every way of writing lam as a sum of m <= k lattice points of O(P,s)
 * (exhaustive), checks that each summand lies componentwise between the
 * bottom and top parts of the canonical chain.
 */
inline bool sandwich_check(const LabeledPoset& p, const SSequence& s, std::span<const Int> lam,
                           Int k, Int budget = kDefaultBudget) {
    const DecompositionChain chain = idp_decompose(p, s, lam, k);
    const Point& lo = chain.parts.front();
    const Point& hi = chain.parts.back();
    const auto gens = enumerate_dilate_points(p, s, 1, budget);
    const Point zero(s.n(), 0);
    Int steps = 0;
    bool ok = true;
    std::vector<std::size_t> chosen;
    // summands are chosen with nonincreasing generator index: each multiset once
    auto rec = [&](auto&& self, const Point& rest, Int remaining, std::size_t max_index) -> void {
        if (!ok) return;
        if (rest == zero) {
            // padding with zero summands is allowed while m <= k
            if (remaining > 0 && std::any_of(lo.begin(), lo.end(), [](Int v) { return v > 0; }))
                ok = false;
            for (std::size_t gi : chosen) {
                const Point& g = gens[gi];
                for (std::size_t x = 0; x < g.size(); ++x)
                    if (g[x] < lo[x] || g[x] > hi[x]) ok = false;
            }
            return;
        }
        if (remaining == 0) return;
        for (std::size_t gi = max_index + 1; gi-- > 0;) {
            if (++steps > budget) throw BudgetExceeded("sandwich_check: budget exceeded");
            Point next = subtract(rest, gens[gi]);
            if (!detail::within_box(next, s, remaining - 1)) continue;
            chosen.push_back(gi);
            self(self, next, remaining - 1, gi);
            chosen.pop_back();
        }
    };
    if (!gens.empty()) rec(rec, Point(lam.begin(), lam.end()), k, gens.size() - 1);
    return ok;
}

} // namespace lhp
