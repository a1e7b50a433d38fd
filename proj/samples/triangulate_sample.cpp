// Builds the flag triangulation of the (1,2,3)-lecture hall simplex and
// prints each facet as a list of multisets together with its h-vector.

#include "lhp/triangulation.hpp"

#include <iostream>

int main() {
    const lhp::SSequence s({1, 2, 3});
    const lhp::MultisetTable table(s);
    const auto t = lhp::build_triangulation(table);

    for (const auto& face : t.maximal_faces) {
        for (std::size_t v : face) std::cout << lhp::render_multiset(t.vertices[v]) << " ";
        std::cout << "\n";
    }
    std::cout << "facets: " << t.maximal_faces.size() << "\n";
    std::cout << "h-vector: " << lhp::h_vector(t).str() << "\n";
    std::cout << "unimodular: " << (lhp::verify_unimodular(t, s) ? "yes" : "no") << "\n";
}
