#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "omnisig/catalog.hpp"
#include "omnisig/group.hpp"
#include "omnisig/signature.hpp"

namespace omnisig {

/// Candidate witness (a_1, b_1, ..., a_h, b_h, c_1, ..., c_r); entries are
/// element indices into the group's canonical element table.
struct GeneratingVector {
    std::vector<std::pair<int, int>> pairs; // hyperbolic (a_i, b_i)
    std::vector<int> elliptic;              // c_1 ... c_r

    std::vector<int> all_entries() const {
        std::vector<int> out;
        for (const auto& [a, b] : pairs) {
            out.push_back(a);
            out.push_back(b);
        }
        for (int c : elliptic) out.push_back(c);
        return out;
    }
};

/// Outcome of checking the three generating-vector conditions, reported in
/// definition order: 1 generation, 2 element orders, 3 product relation.
/// failed_condition 0 means pass; -1 means a shape/membership precondition
/// violation before any condition could be checked.
struct VerifyResult {
    bool ok = false;
    int failed_condition = -1;
    std::string detail;

    static VerifyResult pass() { return {true, 0, ""}; }
    static VerifyResult fail(int condition, std::string why) {
        return {false, condition, std::move(why)};
    }
};

/// Commutator convention: [a, b] = a b a^-1 b^-1; the condition-3 product is
/// evaluated strictly left to right.
inline int commutator(const FiniteGroup& g, int a, int b) {
    return g.mul(g.mul(g.mul(a, b), g.inv(a)), g.inv(b));
}

inline int condition_product(const FiniteGroup& g, const GeneratingVector& vec) {
    int acc = g.identity();
    for (const auto& [a, b] : vec.pairs) acc = g.mul(acc, commutator(g, a, b));
    for (int c : vec.elliptic) acc = g.mul(acc, c);
    return acc;
}

inline VerifyResult verify(const FiniteGroup& g, const GeneratingVector& vec,
                           const Signature& sig) {
    if (static_cast<std::int64_t>(vec.pairs.size()) != sig.orbit_genus() ||
        static_cast<std::int64_t>(vec.elliptic.size()) != sig.period_count())
        return VerifyResult::fail(-1, "vector shape (" + std::to_string(vec.pairs.size()) +
                                          " pairs, " + std::to_string(vec.elliptic.size()) +
                                          " elliptic) does not match signature " +
                                          format_signature(sig));
    for (int e : vec.all_entries())
        if (e < 0 || static_cast<std::size_t>(e) >= g.order())
            return VerifyResult::fail(-1, "entry index " + std::to_string(e) +
                                              " is not an element of " + g.name());

    // Condition 1: the entries generate G.
    const std::size_t sub = g.generated_subgroup_order(vec.all_entries());
    if (sub != g.order())
        return VerifyResult::fail(1, "entries generate a proper subgroup of order " +
                                         std::to_string(sub) + " < " +
                                         std::to_string(g.order()));

    // Condition 2: order(c_i) = m_i.
    for (std::size_t i = 0; i < vec.elliptic.size(); ++i) {
        const std::int64_t got = g.element_order(vec.elliptic[i]);
        if (got != sig.periods()[i])
            return VerifyResult::fail(2, "c_" + std::to_string(i + 1) + " has order " +
                                             std::to_string(got) + ", signature requires " +
                                             std::to_string(sig.periods()[i]));
    }

    // Condition 3: product of commutators and elliptic entries is trivial.
    const int prod = condition_product(g, vec);
    if (prod != g.identity()) {
        std::string images = "[";
        for (std::size_t i = 0; i < g.elements()[prod].images.size(); ++i) {
            if (i) images += ",";
            images += std::to_string(g.elements()[prod].images[i] + 1);
        }
        images += "]";
        return VerifyResult::fail(3, "product is the non-identity element " + images);
    }
    return VerifyResult::pass();
}

inline nlohmann::json witness_to_json(const FiniteGroup& g, const GeneratingVector& vec,
                                      const Signature& sig) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [a, b] : vec.pairs)
        pairs.push_back({detail::images_1indexed(g.elements()[a]),
                         detail::images_1indexed(g.elements()[b])});
    nlohmann::json elliptic = nlohmann::json::array();
    for (int c : vec.elliptic) elliptic.push_back(detail::images_1indexed(g.elements()[c]));
    return {{"group", g.name()},
            {"signature", format_signature(sig)},
            {"vector", {{"pairs", pairs}, {"elliptic", elliptic}}}};
}

/// Rebuilds a witness against `g`; throws if any permutation is foreign.
inline GeneratingVector witness_from_json(const FiniteGroup& g, const nlohmann::json& doc) {
    GeneratingVector vec;
    for (const auto& pair : doc.at("vector").at("pairs")) {
        const int a = g.index_of(detail::permutation_from_images_1indexed(pair.at(0)));
        const int b = g.index_of(detail::permutation_from_images_1indexed(pair.at(1)));
        vec.pairs.emplace_back(a, b);
    }
    for (const auto& c : doc.at("vector").at("elliptic"))
        vec.elliptic.push_back(g.index_of(detail::permutation_from_images_1indexed(c)));
    return vec;
}

} // namespace omnisig
