#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force reference computations over collections of
 * s-lecture hall multisets. These share no code path with the reduction
 * machinery they are used to check.
 */

#include "lhp/alcove.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace lhp::oracle {

/// Every size-k multiset of the given points, each as a sorted Collection.
inline std::vector<Collection> all_collections(const std::vector<Point>& points, std::size_t k,
                                               Int budget = kDefaultBudget) {
    std::vector<Collection> out;
    std::vector<Point> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (cur.size() == k) {
            out.emplace_back(cur);
            if (static_cast<Int>(out.size()) > budget)
                throw BudgetExceeded("all_collections: budget exceeded");
            return;
        }
        for (std::size_t i = from; i < points.size(); ++i) {
            cur.push_back(points[i]);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// For each multiunion y, the collection-order minimum among all size-k collections summing to y.
inline std::map<Point, Collection> minimal_collections(const std::vector<Point>& points, std::size_t k,
                                                       Int budget = kDefaultBudget) {
    std::map<Point, Collection> best;
    for (auto& c : all_collections(points, k, budget)) {
        Point y = c.sum();
        auto it = best.find(y);
        if (it == best.end()) best.emplace(std::move(y), std::move(c));
        else if (collection_compare(c, it->second) < 0) it->second = std::move(c);
    }
    return best;
}

/// Minimal pair by scanning every split of I + J into two points of the list.
inline Collection minimal_pair_scan(const std::vector<Point>& points, std::span<const Int> I,
                                    std::span<const Int> J) {
    const Point y = add(I, J);
    std::optional<Collection> best;
    for (const Point& p : points) {
        const Point q = subtract(y, p);
        if (std::find(points.begin(), points.end(), q) == points.end()) continue;
        Collection c{p, q};
        if (!best || collection_compare(c, *best) < 0) best = std::move(c);
    }
    if (!best) throw PreconditionError("minimal_pair_scan: inputs are not in the point list");
    return *best;
}

} // namespace lhp::oracle
