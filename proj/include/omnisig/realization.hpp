#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "omnisig/catalog.hpp"
#include "omnisig/constructions.hpp"
#include "omnisig/enumerate.hpp"
#include "omnisig/search.hpp"
#include "omnisig/signature.hpp"

namespace omnisig {

enum class RealizationStatus { realized, absent_in_catalog, inconclusive };

inline const char* to_string(RealizationStatus s) {
    switch (s) {
        case RealizationStatus::realized: return "realized";
        case RealizationStatus::absent_in_catalog: return "absent-in-catalog";
        case RealizationStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

/// One signature's fate against a catalog. "absent-in-catalog" means every
/// catalog group of the required order failed exhaustively; that proves
/// non-membership in A_sigma only when the order class is complete, which
/// is a caller assertion echoed in `order_class_complete`.
struct RealizationRecord {
    Signature signature;
    std::int64_t genus;
    std::int64_t required_order = 0;
    RealizationStatus status = RealizationStatus::absent_in_catalog;
    std::optional<std::string> group_name;
    std::optional<nlohmann::json> witness; // serialized generating vector
    int groups_examined = 0;
    bool order_class_complete = false;
};

/// Realizes each member of P_sigma against the catalog groups of its
/// determined order. Records stream in canonical signature order.
inline std::vector<RealizationRecord> actual_relative(
    Genus genus, const GroupCatalog& catalog,
    const std::set<std::int64_t>& complete_orders = {},
    std::uint64_t node_guard = kDefaultNodeGuard) {
    const PotentialSignatureSet pset = enumerate_potential(genus);
    std::vector<RealizationRecord> records;
    records.reserve(pset.signatures.size());
    for (const Signature& sig : pset.signatures) {
        RealizationRecord rec{sig, genus.value()};
        rec.required_order = *required_group_order(sig, genus);
        rec.order_class_complete = complete_orders.contains(rec.required_order);
        bool any_inconclusive = false;
        if (const auto* groups = catalog.groups_of_order(rec.required_order)) {
            for (const FiniteGroup& g : *groups) {
                ++rec.groups_examined;
                const SearchResult result = search(g, sig, node_guard);
                if (result.status == SearchStatus::found) {
                    rec.status = RealizationStatus::realized;
                    rec.group_name = g.name();
                    rec.witness = witness_to_json(g, *result.witness, sig);
                    break;
                }
                if (result.status == SearchStatus::inconclusive) any_inconclusive = true;
            }
        }
        if (rec.status != RealizationStatus::realized && any_inconclusive)
            rec.status = RealizationStatus::inconclusive;
        if (rec.status == RealizationStatus::realized && !is_potential(sig, genus))
            throw std::logic_error("actual_relative: realized signature " +
                                   format_signature(sig) + " is not potential (A subset of P "
                                   "violated)");
        records.push_back(std::move(rec));
    }
    return records;
}

struct OmnipersistentGenusResult {
    std::int64_t sigma;
    bool ok;
    std::vector<std::string> details; // one line per construction
};

struct OmnipersistentReport {
    bool all_ok = true;
    std::vector<OmnipersistentGenusResult> per_genus;
};

/// Runs the four omnipersistent constructions for each genus in the range
/// and records pass/fail per genus.
inline OmnipersistentReport verify_omnipersistent_actual(std::int64_t sigma_min,
                                                         std::int64_t sigma_max) {
    if (sigma_min < 2 || sigma_min > sigma_max)
        throw std::invalid_argument("verify_omnipersistent_actual: need 2 <= min <= max");
    OmnipersistentReport report;
    for (std::int64_t s = sigma_min; s <= sigma_max; ++s) {
        OmnipersistentGenusResult res{s, true, {}};
        try {
            const auto actions = constructions_omnipersistent(s);
            for (const RealizedAction& a : actions) {
                const VerifyResult check = verify(a.group, a.vector, a.signature);
                res.details.push_back(a.group.name() + " " + format_signature(a.signature) +
                                      ": " + (check.ok ? "pass" : check.detail));
                if (!check.ok) res.ok = false;
            }
        } catch (const std::exception& e) {
            res.ok = false;
            res.details.push_back(e.what());
        }
        if (!res.ok) report.all_ok = false;
        report.per_genus.push_back(std::move(res));
    }
    return report;
}

namespace detail {

// The genus-2 actual signatures with their order multipliers k, order
// being k*(sigma-1).
inline std::vector<std::pair<Signature, std::int64_t>> genus2_actual_table() {
    return {
        {Signature(2, {}), 1},
        {Signature(1, {2, 2}), 2},
        {Signature(0, {2, 3, 8}), 48},
        {Signature(0, {2, 4, 6}), 24},
        {Signature(0, {3, 3, 4}), 24},
        {Signature(0, {2, 4, 8}), 16},
        {Signature(0, {2, 2, 2, 3}), 12},
        {Signature(0, {2, 6, 6}), 12},
        {Signature(0, {3, 4, 4}), 12},
        {Signature(0, {2, 5, 10}), 10},
        {Signature(0, {2, 2, 2, 4}), 8},
        {Signature(0, {2, 8, 8}), 8},
        {Signature(0, {4, 4, 4}), 8},
        {Signature(0, {2, 2, 3, 3}), 6},
        {Signature(0, {3, 6, 6}), 6},
        {Signature(0, {5, 5, 5}), 5},
        {Signature(0, {2, 2, 2, 2, 2}), 4},
        {Signature(0, {2, 2, 4, 4}), 4},
        {Signature(0, {3, 3, 3, 3}), 3},
        {Signature(0, {2, 2, 2, 2, 2, 2}), 2},
    };
}

} // namespace detail

struct Table2Entry {
    Signature signature;
    std::int64_t order; // tabulated multiplier times (sigma - 1) at sigma = 2
    RealizationStatus status;
    std::optional<std::string> group_name;
};

/// Attempts each of the twenty genus-2 actual signatures over the catalog
/// groups of the tabulated order.
inline std::vector<Table2Entry> table2_genus2_check(const GroupCatalog& catalog,
                                                    std::uint64_t node_guard =
                                                        kDefaultNodeGuard) {
    const Genus genus2(2);
    const PotentialSignatureSet p2 = enumerate_potential(genus2);
    std::vector<Table2Entry> out;
    for (const auto& [sig, order] : detail::genus2_actual_table()) {
        if (*required_group_order(sig, genus2) != order)
            throw std::logic_error("table2_genus2_check: tabulated order mismatch for " +
                                   format_signature(sig));
        if (!std::binary_search(p2.signatures.begin(), p2.signatures.end(), sig))
            throw std::logic_error("table2_genus2_check: " + format_signature(sig) +
                                   " missing from P_2 (A subset of P violated)");
        Table2Entry entry{sig, order, RealizationStatus::absent_in_catalog, std::nullopt};
        bool any_inconclusive = false;
        if (const auto* groups = catalog.groups_of_order(order)) {
            for (const FiniteGroup& g : *groups) {
                const SearchResult result = search(g, sig, node_guard);
                if (result.status == SearchStatus::found) {
                    entry.status = RealizationStatus::realized;
                    entry.group_name = g.name();
                    break;
                }
                if (result.status == SearchStatus::inconclusive) any_inconclusive = true;
            }
        }
        if (entry.status != RealizationStatus::realized && any_inconclusive)
            entry.status = RealizationStatus::inconclusive;
        out.push_back(std::move(entry));
    }
    return out;
}

inline nlohmann::json to_json(const RealizationRecord& rec) {
    nlohmann::json j = {{"signature", format_signature(rec.signature)},
                        {"genus", rec.genus},
                        {"required_order", rec.required_order},
                        {"status", to_string(rec.status)},
                        {"groups_examined", rec.groups_examined},
                        {"order_class_complete", rec.order_class_complete}};
    if (rec.group_name) j["group"] = *rec.group_name;
    if (rec.witness) j["witness"] = *rec.witness;
    return j;
}

inline std::string realization_csv(const std::vector<RealizationRecord>& records) {
    std::string out = "signature,status,group,order\n";
    for (const RealizationRecord& rec : records) {
        out += "\"" + format_signature(rec.signature) + "\",";
        out += to_string(rec.status);
        out += ",";
        out += rec.group_name.value_or("");
        out += ",";
        out += std::to_string(rec.required_order);
        out += "\n";
    }
    return out;
}

} // namespace omnisig
