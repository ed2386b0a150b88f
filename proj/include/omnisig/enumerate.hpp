#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "omnisig/parallel.hpp"
#include "omnisig/signature.hpp"

namespace omnisig {

/// The enumerated set P_sigma: all canonical signatures passing is_potential,
/// sorted by (h, r, lexicographic periods), no duplicates.
struct PotentialSignatureSet {
    Genus genus;
    std::vector<Signature> signatures;
};

namespace detail {

inline std::vector<std::int64_t> divisors_at_least_two(std::int64_t n) {
    std::vector<std::int64_t> divs;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        if (d >= 2) divs.push_back(d);
        if (const std::int64_t q = n / d; q != d && q >= 2) divs.push_back(q);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Non-decreasing multisets of divisors m >= 2 of N with sum(1 - 1/m) = target.
inline void period_multisets(const std::vector<std::int64_t>& divs, const Rational& target,
                             std::size_t min_idx, std::vector<std::int64_t>& stack,
                             std::int64_t h, std::vector<Signature>& out) {
    if (target == Rational(0)) {
        out.emplace_back(h, stack);
        return;
    }
    for (std::size_t i = min_idx; i < divs.size(); ++i) {
        const Rational term(divs[i] - 1, divs[i]);
        if (target < term) break; // terms grow with m; nothing larger fits
        stack.push_back(divs[i]);
        period_multisets(divs, target - term, i, stack, h, out);
        stack.pop_back();
    }
}

// All potential signatures for genus sigma whose determined order is exactly n.
inline std::vector<Signature> signatures_for_order(std::int64_t sigma, std::int64_t n) {
    std::vector<Signature> out;
    const auto divs = divisors_at_least_two(n);
    std::vector<std::int64_t> stack;
    for (std::int64_t h = 0;; ++h) {
        if (h >= 1 && checked_mul(n, h - 1) > sigma - 1) break;
        // sum(1 - 1/m_i) must equal 2(sigma-1)/N - 2(h-1)
        const Rational target = Rational(2 * (sigma - 1), n) - Rational(2 * (h - 1));
        if (target < Rational(0)) break;
        if (target == Rational(0)) {
            if (h >= 2) out.emplace_back(h, std::vector<std::int64_t>{});
            continue;
        }
        period_multisets(divs, target, 0, stack, h, out);
    }
    return out;
}

} // namespace detail

/// Exhaustive enumeration of P_sigma, organized by candidate order N up to
/// the Hurwitz cap 84(sigma-1). Deterministic regardless of `jobs`.
inline PotentialSignatureSet enumerate_potential(Genus g, unsigned jobs = 0) {
    const std::int64_t sigma = g.value();
    const std::int64_t cap = detail::checked_mul(84, sigma - 1);
    std::vector<std::vector<Signature>> per_order(static_cast<std::size_t>(cap));
    parallel_for_index(static_cast<std::size_t>(cap), jobs, [&](std::size_t i) {
        per_order[i] = detail::signatures_for_order(sigma, static_cast<std::int64_t>(i) + 1);
    });

    std::vector<Signature> all;
    for (auto& block : per_order)
        for (auto& s : block) all.push_back(std::move(s));
    std::sort(all.begin(), all.end());

    // N is uniquely determined per (signature, sigma), so distinct orders can
    // never produce the same signature.
    for (std::size_t i = 1; i < all.size(); ++i)
        if (all[i] == all[i - 1])
            throw std::logic_error("enumerate_potential: duplicate signature across orders: " +
                                   format_signature(all[i]));
    for (const Signature& s : all) {
        if (!is_potential(s, g))
            throw std::logic_error("enumerate_potential: emitted non-potential signature " +
                                   format_signature(s));
        // r + 4h <= 2*sigma + 2 holds whenever the determined order is at
        // least 2 (any period forces that); N = 1 admits only (sigma; -).
        if (*required_group_order(s, g) >= 2) {
            if (s.period_count() + 4 * s.orbit_genus() > 2 * sigma + 2)
                throw std::logic_error("enumerate_potential: r + 4h bound violated by " +
                                       format_signature(s));
        } else if (s.period_count() != 0 || s.orbit_genus() != sigma) {
            throw std::logic_error("enumerate_potential: unexpected order-1 signature " +
                                   format_signature(s));
        }
    }
    return PotentialSignatureSet{g, std::move(all)};
}

/// Multiway intersection of enumerated sets, canonically sorted.
inline std::vector<Signature> intersect_sets(std::span<const PotentialSignatureSet> sets) {
    if (sets.empty())
        throw std::invalid_argument("intersect_sets: at least one set required");
    std::vector<Signature> acc = sets[0].signatures;
    for (std::size_t i = 1; i < sets.size(); ++i) {
        std::vector<Signature> next;
        std::set_intersection(acc.begin(), acc.end(), sets[i].signatures.begin(),
                              sets[i].signatures.end(), std::back_inserter(next));
        acc = std::move(next);
    }
    return acc;
}

inline std::string to_text(const PotentialSignatureSet& set) {
    std::string out;
    for (const Signature& s : set.signatures) {
        out += format_signature(s);
        out += "\n";
    }
    return out;
}

inline std::string to_csv(const PotentialSignatureSet& set) {
    std::string out = "h,r,periods,required_order\n";
    for (const Signature& s : set.signatures) {
        out += std::to_string(s.orbit_genus());
        out += ",";
        out += std::to_string(s.period_count());
        out += ",";
        bool first = true;
        for (std::int64_t m : s.periods()) {
            if (!first) out += ";";
            out += std::to_string(m);
            first = false;
        }
        out += ",";
        out += std::to_string(*required_group_order(s, set.genus));
        out += "\n";
    }
    return out;
}

inline nlohmann::json to_json(const PotentialSignatureSet& set) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Signature& s : set.signatures) {
        arr.push_back({{"h", s.orbit_genus()},
                       {"periods", s.periods()},
                       {"required_order", *required_group_order(s, set.genus)}});
    }
    return arr;
}

} // namespace omnisig
