#pragma once

/**
 * @file triangulation.hpp
 * @brief The flag complex whose faces are the pairwise-minimal sets of
 * s-lecture hall multisets, and exact certificates that it is a unimodular
 * triangulation of the simplex.
 *
 * Regularity is not re-checked: the complex comes from a square-free initial
 * ideal and is regular by construction.
 */

#include "lhp/ehrhart.hpp"
#include "lhp/groebner.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace lhp {

/// Graph on the degree-1 points; {I, J} is an edge iff the pair is minimal.
struct CompatibilityGraph {
    std::vector<Point> vertices;
    std::vector<std::vector<char>> adjacent;

    bool edge(std::size_t i, std::size_t j) const { return i != j && adjacent.at(i).at(j); }

    std::size_t edge_count() const {
        std::size_t e = 0;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j) e += adjacent[i][j];
        return e;
    }
};

inline CompatibilityGraph compatibility_graph(const MultisetTable& table) {
    const std::size_t m = table.points().size();
    CompatibilityGraph g{table.points(), std::vector<std::vector<char>>(m, std::vector<char>(m, 0))};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            g.adjacent[i][j] = g.adjacent[j][i] = table.is_minimal_pair(i, j) ? 1 : 0;
    return g;
}

inline CompatibilityGraph compatibility_graph(const SSequence& s, Int budget = kDefaultBudget) {
    return compatibility_graph(MultisetTable(s, budget));
}

struct SimplicialComplex {
    std::vector<Point> vertices;                        ///< alcove coordinates
    std::vector<std::vector<std::size_t>> maximal_faces; ///< sorted vertex indices
    std::vector<Int> f_vector;                           ///< f_{-1} = 1 first
};

namespace detail {

// Bron-Kerbosch with Tomita pivoting.
inline void maximal_cliques(const CompatibilityGraph& g, std::vector<std::size_t>& r,
                            std::vector<std::size_t> p, std::vector<std::size_t> x,
                            std::vector<std::vector<std::size_t>>& out) {
    if (p.empty()) {
        if (x.empty()) {
            auto face = r;
            std::sort(face.begin(), face.end());
            out.push_back(std::move(face));
        }
        return;
    }
    std::size_t pivot = p.front();
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
        for (std::size_t u : *set) {
            std::size_t cnt = 0;
            for (std::size_t v : p) cnt += g.edge(u, v);
            if (cnt > best || (cnt == best && u < pivot)) {
                best = cnt;
                pivot = u;
            }
        }
    }
    std::vector<std::size_t> candidates;
    for (std::size_t v : p)
        if (!g.edge(pivot, v)) candidates.push_back(v);
    for (std::size_t v : candidates) {
        std::vector<std::size_t> np, nx;
        for (std::size_t u : p)
            if (g.edge(v, u)) np.push_back(u);
        for (std::size_t u : x)
            if (g.edge(v, u)) nx.push_back(u);
        r.push_back(v);
        maximal_cliques(g, r, std::move(np), std::move(nx), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

// Counts every clique (face) by size; index i holds faces with i vertices.
inline void count_cliques(const CompatibilityGraph& g, std::vector<std::size_t>& clique,
                          std::size_t next, std::vector<Int>& counts) {
    if (counts.size() <= clique.size()) counts.resize(clique.size() + 1, 0);
    ++counts[clique.size()];
    for (std::size_t v = next; v < g.vertices.size(); ++v) {
        bool ok = true;
        for (std::size_t u : clique)
            if (!g.edge(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        clique.push_back(v);
        count_cliques(g, clique, v + 1, counts);
        clique.pop_back();
    }
}

} // namespace detail

/// Faces are the cliques of the compatibility graph; all facets must have n+1 vertices.
inline SimplicialComplex build_triangulation(const MultisetTable& table) {
    const auto g = compatibility_graph(table);
    SimplicialComplex t;
    t.vertices = g.vertices;
    std::vector<std::size_t> all(g.vertices.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::size_t> r;
    detail::maximal_cliques(g, r, all, {}, t.maximal_faces);
    std::sort(t.maximal_faces.begin(), t.maximal_faces.end());
    const std::size_t want = table.s().n() + 1;
    for (const auto& f : t.maximal_faces) {
        if (f.size() != want)
            throw InternalError("build_triangulation: maximal face with " + std::to_string(f.size()) +
                                " vertices, expected " + std::to_string(want));
    }
    std::vector<std::size_t> clique;
    detail::count_cliques(g, clique, 0, t.f_vector);
    return t;
}

inline SimplicialComplex build_triangulation(const SSequence& s, Int budget = kDefaultBudget) {
    return build_triangulation(MultisetTable(s, budget));
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int bareiss_determinant(std::vector<std::vector<Int>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                __int128 num = static_cast<__int128>(a[i][j]) * a[k][k] -
                               static_cast<__int128>(a[i][k]) * a[k][j];
                __int128 q = num / prev; // exact by Sylvester's identity
                if (q > INT64_MAX || q < INT64_MIN)
                    throw OverflowError("bareiss_determinant: entry overflow");
                a[i][j] = static_cast<Int>(q);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

struct UnimodularVerdict {
    bool ok = true;
    std::size_t face = 0; ///< first offending maximal face
    Int determinant = 1;  ///< its determinant

    explicit operator bool() const noexcept { return ok; }
};

/**
 * |det(p_1 - p_0, ..., p_n - p_0)| = 1 for every maximal face, with the
 * vertices mapped back to the simplex by partial sums.
 */
inline UnimodularVerdict verify_unimodular(const SimplicialComplex& t, const SSequence& s) {
    const std::size_t n = s.n();
    for (std::size_t f = 0; f < t.maximal_faces.size(); ++f) {
        const auto& face = t.maximal_faces[f];
        if (face.size() != n + 1) return {false, f, 0};
        std::vector<Point> pts;
        for (std::size_t v : face) {
            detail::require_same_size(t.vertices.at(v).size(), n + 1, "verify_unimodular");
            pts.push_back(partial_sums(t.vertices[v]));
        }
        std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t c = 0; c < n; ++c) m[i - 1][c] = checked_sub(pts[i][c], pts[0][c]);
        Int det = bareiss_determinant(std::move(m));
        if (det != 1 && det != -1) return {false, f, det};
    }
    return {};
}

/// Lattice-point count of the k-th dilate predicted by a unimodular complex.
inline Int predicted_count(const SimplicialComplex& t, Int k) {
    if (k == 0) return 1;
    Int total = 0;
    for (std::size_t i = 1; i < t.f_vector.size(); ++i)
        total = checked_add(total, checked_mul(t.f_vector[i], binomial(k - 1, static_cast<Int>(i) - 1)));
    return total;
}

struct CoverVerdict {
    bool ok = true;
    std::vector<Int> predicted; ///< from the face numbers
    std::vector<Int> expected;  ///< by direct enumeration
    Int facets = 0;
    Int volume = 0; ///< s_1 * ... * s_n

    explicit operator bool() const noexcept { return ok; }
};

/**
 * Counting certificate that the complex covers the simplex: for k <= kmax,
 * the sum over nonempty faces F of C(k-1, dim F) must equal the number of
 * lattice points of k P_n^s, and the facet count must equal s_1 * ... * s_n.
 */
inline CoverVerdict verify_cover(const SimplicialComplex& t, const SSequence& s, Int kmax,
                                 Int budget = kDefaultBudget) {
    CoverVerdict v;
    v.expected = ehrhart_counts(LabeledPoset::chain(s.n()), s, kmax, budget);
    for (Int k = 0; k <= kmax; ++k) v.predicted.push_back(predicted_count(t, k));
    v.facets = static_cast<Int>(t.maximal_faces.size());
    v.volume = s.product();
    v.ok = v.predicted == v.expected && v.facets == v.volume;
    return v;
}

/// h-vector of a pure complex from its f-vector.
inline IntPolynomial h_vector(const SimplicialComplex& t) {
    if (t.maximal_faces.empty()) throw InputError("h_vector: complex has no faces");
    const std::size_t width = t.maximal_faces.front().size();
    for (const auto& f : t.maximal_faces)
        if (f.size() != width) throw InputError("h_vector: complex is not pure");
    const Int d = static_cast<Int>(width);
    std::vector<Int> h(width + 1, 0);
    for (Int j = 0; j <= d; ++j) {
        Int acc = 0;
        for (Int i = 0; i <= j; ++i) {
            const Int f = static_cast<std::size_t>(i) < t.f_vector.size() ? t.f_vector[i] : 0;
            Int term = checked_mul(binomial(d - i, j - i), f);
            acc = (j - i) % 2 ? checked_sub(acc, term) : checked_add(acc, term);
        }
        h[static_cast<std::size_t>(j)] = acc;
    }
    return IntPolynomial(std::move(h));
}

} // namespace lhp
