#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "omnisig/enumerate.hpp"
#include "omnisig/signature.hpp"

namespace omnisig {

/// P_sigma <= P_sigma' in the divisibility order.
inline bool contains_genus(Genus sigma, Genus sigma_prime) {
    return (sigma_prime.value() - 1) % (sigma.value() - 1) == 0;
}

/// Meet: gcd(sigma-1, sigma'-1) + 1.
inline Genus meet_genus(Genus sigma, Genus sigma_prime) {
    return Genus(std::gcd(sigma.value() - 1, sigma_prime.value() - 1) + 1);
}

/// Join: lcm(sigma-1, sigma'-1) + 1.
inline Genus join_genus(Genus sigma, Genus sigma_prime) {
    return Genus(detail::checked_mul((sigma.value() - 1) / std::gcd(sigma.value() - 1, sigma_prime.value() - 1),
                                     sigma_prime.value() - 1) + 1);
}

/// (0; 2, 2sigma+1, 4sigma+2): lies in P_sigma and leaves P_sigma' exactly
/// when (sigma-1) does not divide (sigma'-1).
inline Signature witness_non_containment(Genus sigma) {
    const std::int64_t s = sigma.value();
    return Signature(0, {2, 2 * s + 1, 4 * s + 2});
}

enum class LatticeClaim { containment, meet, join, consecutive_intersection };

inline const char* to_string(LatticeClaim c) {
    switch (c) {
        case LatticeClaim::containment: return "containment";
        case LatticeClaim::meet: return "meet";
        case LatticeClaim::join: return "join";
        case LatticeClaim::consecutive_intersection: return "consecutive-intersection";
    }
    return "?";
}

struct LatticeReport {
    LatticeClaim claim;
    std::int64_t sigma;
    std::int64_t sigma_prime;
    std::int64_t predicted_genus; // meet/join target; 0 when not applicable
    bool matches;
    std::vector<Signature> counterexamples;
};

inline nlohmann::json to_json(const LatticeReport& r) {
    nlohmann::json cex = nlohmann::json::array();
    for (const Signature& s : r.counterexamples) cex.push_back(format_signature(s));
    return {{"claim", to_string(r.claim)},
            {"sigma", r.sigma},
            {"sigma_prime", r.sigma_prime},
            {"predicted_genus", r.predicted_genus},
            {"matches", r.matches},
            {"counterexamples", cex}};
}

namespace detail {

// Enumeration cache shared across the pairwise sweep.
class SetCache {
public:
    const PotentialSignatureSet& get(Genus g, unsigned jobs) {
        std::lock_guard lock(mu_);
        auto it = sets_.find(g.value());
        if (it == sets_.end())
            it = sets_.emplace(g.value(), enumerate_potential(g, jobs)).first;
        return it->second;
    }

private:
    std::mutex mu_;
    std::map<std::int64_t, PotentialSignatureSet> sets_;
};

inline bool sorted_subset(const std::vector<Signature>& a, const std::vector<Signature>& b,
                          std::vector<Signature>* missing) {
    std::vector<Signature> diff;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
    if (missing) *missing = diff;
    return diff.empty();
}

} // namespace detail

/// Full pairwise empirical check of the lattice theorems over 2..max_genus:
/// containment vs divisibility, intersection = meet, union within join.
inline std::vector<LatticeReport> verify_lattice(std::int64_t max_genus, unsigned jobs = 0,
                                                 std::int64_t guard = 40) {
    if (max_genus < 2) throw std::invalid_argument("verify_lattice: max_genus must be >= 2");
    if (max_genus > guard)
        throw std::invalid_argument("verify_lattice: max_genus " + std::to_string(max_genus) +
                                    " exceeds guard " + std::to_string(guard) +
                                    "; raise the guard explicitly to go further");

    detail::SetCache cache;
    // Warm the cache up front so the pair loop below is read-only.
    std::vector<std::int64_t> genera;
    for (std::int64_t s = 2; s <= max_genus; ++s) genera.push_back(s);
    parallel_for_index(genera.size(), jobs, [&](std::size_t i) {
        cache.get(Genus(genera[i]), 1);
    });

    std::vector<LatticeReport> reports;
    for (std::int64_t s = 2; s <= max_genus; ++s) {
        for (std::int64_t t = 2; t <= max_genus; ++t) {
            const Genus gs(s), gt(t);
            const auto& ps = cache.get(gs, jobs).signatures;
            const auto& pt = cache.get(gt, jobs).signatures;

            std::vector<Signature> missing;
            const bool subset = detail::sorted_subset(ps, pt, &missing);
            const bool predicted = contains_genus(gs, gt);
            LatticeReport containment{LatticeClaim::containment, s, t, 0,
                                      subset == predicted, {}};
            if (!containment.matches) containment.counterexamples = missing;
            reports.push_back(std::move(containment));

            const Genus meet = meet_genus(gs, gt);
            std::vector<Signature> inter;
            std::set_intersection(ps.begin(), ps.end(), pt.begin(), pt.end(),
                                  std::back_inserter(inter));
            const auto& pmeet = cache.get(meet, jobs).signatures;
            LatticeReport meet_report{t == s + 1 ? LatticeClaim::consecutive_intersection
                                                 : LatticeClaim::meet,
                                      s, t, meet.value(), inter == pmeet, {}};
            if (!meet_report.matches) {
                std::set_symmetric_difference(inter.begin(), inter.end(), pmeet.begin(),
                                              pmeet.end(),
                                              std::back_inserter(meet_report.counterexamples));
            }
            reports.push_back(std::move(meet_report));

            const Genus join = join_genus(gs, gt);
            if (join.value() <= max_genus) {
                const auto& pjoin = cache.get(join, jobs).signatures;
                std::vector<Signature> uni;
                std::set_union(ps.begin(), ps.end(), pt.begin(), pt.end(),
                               std::back_inserter(uni));
                std::vector<Signature> outside;
                const bool ok = detail::sorted_subset(uni, pjoin, &outside);
                reports.push_back(
                    LatticeReport{LatticeClaim::join, s, t, join.value(), ok, std::move(outside)});
            }
        }
    }
    return reports;
}

} // namespace omnisig
