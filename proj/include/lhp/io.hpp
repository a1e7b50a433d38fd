#pragma once

/**
 * @file io.hpp
 * @brief JSON and flag parsing plus the report schemas used by the command
 * line front end. Requires nlohmann/json.
 */

#include "lhp/groebner.hpp"
#include "lhp/idp.hpp"
#include "lhp/triangulation.hpp"

#include "json.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace lhp::io {

using nlohmann::json;

/// "1,2,3" -> {1, 2, 3}. Whitespace around entries is ignored.
inline std::vector<Int> parse_int_list(std::string_view text) {
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        Int v = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size())
            throw InputError("cannot parse integer list '" + std::string(text) + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

inline SSequence parse_sequence(std::string_view text) { return SSequence(parse_int_list(text)); }

/// {"n": int, "covers": [[i, j], ...]}, 1-based, i below j.
inline LabeledPoset parse_poset(const json& j) {
    try {
        if (!j.is_object() || !j.contains("n")) throw InputError("poset JSON needs an object with \"n\"");
        const auto n = j.at("n").get<Int>();
        if (n < 1) throw InputError("poset JSON: n must be positive");
        std::vector<std::pair<std::size_t, std::size_t>> covers;
        if (j.contains("covers")) {
            for (const auto& c : j.at("covers")) {
                if (!c.is_array() || c.size() != 2) throw InputError("poset JSON: covers must be pairs");
                const auto a = c[0].get<Int>(), b = c[1].get<Int>();
                if (a < 1 || b < 1) throw InputError("poset JSON: indices are 1-based");
                covers.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
            }
        }
        return LabeledPoset(static_cast<std::size_t>(n), covers);
    } catch (const json::exception& e) {
        throw InputError(std::string("poset JSON: ") + e.what());
    }
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline json to_json(const LabeledPoset& p) {
    json covers = json::array();
    for (auto [i, j] : p.covers()) covers.push_back({i, j});
    return {{"n", p.n()}, {"covers", covers}};
}

/// A list of alcove points, e.g. [[0,0,3,1],[0,0,1,3]].
inline Collection parse_collection(const json& j) {
    try {
        if (!j.is_array()) throw InputError("collection JSON must be an array of integer arrays");
        std::vector<Point> elems;
        for (const auto& e : j) elems.push_back(e.get<Point>());
        return Collection(std::move(elems));
    } catch (const json::exception& e) {
        throw InputError(std::string("collection JSON: ") + e.what());
    }
}

inline json to_json(const IntPolynomial& p) { return p.is_zero() ? json::array({0}) : json(p.coeffs()); }

inline json to_json(const Collection& c) { return json(c.elems()); }

inline json to_json(const Binomial& b) { return {{"lead", to_json(b.lead)}, {"trail", to_json(b.trail)}}; }

inline json to_json(const std::vector<Binomial>& basis) {
    json out = json::array();
    for (const auto& b : basis) out.push_back(to_json(b));
    return out;
}

/// {lambda, k, chain, unique, brute_ok}
inline json chain_report(std::span<const Int> lambda, Int k, const DecompositionChain& chain,
                         bool unique, bool brute_ok) {
    return {{"lambda", Point(lambda.begin(), lambda.end())},
            {"k", k},
            {"chain", chain.parts},
            {"unique", unique},
            {"brute_ok", brute_ok}};
}

/// {vertices, maximal_faces, f_vector, h_vector, unimodular, cover_ok, regular}
inline json triangulation_report(const SimplicialComplex& t, const IntPolynomial& h, bool unimodular,
                                 bool cover_ok) {
    return {{"vertices", t.vertices},
            {"maximal_faces", t.maximal_faces},
            {"f_vector", t.f_vector},
            {"h_vector", to_json(h)},
            {"unimodular", unimodular},
            {"cover_ok", cover_ok},
            {"regular", "by construction (square-free quadratic Groebner basis)"}};
}

} // namespace lhp::io
