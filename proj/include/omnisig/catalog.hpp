#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "omnisig/group.hpp"

namespace omnisig {

class catalog_error : public std::runtime_error {
public:
    explicit catalog_error(const std::string& what) : std::runtime_error(what) {}
};

/// Explicit finite groups keyed by order; a desk-scale stand-in for a full
/// group census. Completeness per order is never assumed, only asserted by
/// the caller.
struct GroupCatalog {
    std::map<std::int64_t, std::vector<FiniteGroup>> by_order;
    std::vector<std::string> sources;

    void add(FiniteGroup group, const std::string& source) {
        auto& bucket = by_order[static_cast<std::int64_t>(group.order())];
        for (const FiniteGroup& g : bucket)
            if (g.name() == group.name())
                throw catalog_error("catalog: duplicate group name '" + group.name() +
                                    "' at order " + std::to_string(group.order()));
        bucket.push_back(std::move(group));
        sources.push_back(source);
    }

    const std::vector<FiniteGroup>* groups_of_order(std::int64_t n) const {
        const auto it = by_order.find(n);
        return it == by_order.end() ? nullptr : &it->second;
    }

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& [order, groups] : by_order) n += groups.size();
        return n;
    }
};

struct CatalogEntryReport {
    std::string name;
    std::int64_t declared_order = 0;
    std::int64_t computed_order = 0; // 0 when construction failed
    bool ok = false;
    std::string issue; // empty when ok
};

namespace detail {

inline Permutation permutation_from_images_1indexed(const nlohmann::json& arr) {
    if (!arr.is_array() || arr.empty())
        throw catalog_error("catalog: generator must be a non-empty array of images");
    Permutation p;
    p.images.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number_integer())
            throw catalog_error("catalog: generator images must be integers");
        const std::int64_t img = v.get<std::int64_t>();
        if (img < 1 || img > static_cast<std::int64_t>(arr.size()))
            throw catalog_error("catalog: image " + std::to_string(img) +
                                " outside 1.." + std::to_string(arr.size()));
        p.images.push_back(static_cast<int>(img - 1));
    }
    if (!p.valid()) throw catalog_error("catalog: image array is not a permutation");
    return p;
}

inline nlohmann::json images_1indexed(const Permutation& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : p.images) arr.push_back(v + 1);
    return arr;
}

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw catalog_error("cannot open catalog file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw catalog_error("catalog " + path + ": invalid JSON: " + e.what());
    }
    return doc;
}

} // namespace detail

/// Validates a catalog document group by group: schema, permutation
/// validity, closure within the cap, and declared vs computed order.
/// When `out` is non-null, every ok group is added to it.
inline std::vector<CatalogEntryReport> validate_catalog_json(const nlohmann::json& doc,
                                                             const std::string& source,
                                                             GroupCatalog* out,
                                                             std::size_t order_cap =
                                                                 FiniteGroup::kDefaultOrderCap) {
    if (!doc.is_object() || !doc.contains("groups") || !doc["groups"].is_array())
        throw catalog_error("catalog " + source + ": top level must be {\"groups\": [...]}");
    std::vector<CatalogEntryReport> reports;
    for (const auto& entry : doc["groups"]) {
        CatalogEntryReport rep;
        try {
            if (!entry.is_object() || !entry.contains("name") || !entry.contains("order") ||
                !entry.contains("degree") || !entry.contains("generators"))
                throw catalog_error(
                    "catalog: group entry needs name, order, degree, generators");
            rep.name = entry["name"].get<std::string>();
            rep.declared_order = entry["order"].get<std::int64_t>();
            const int degree = entry["degree"].get<int>();
            std::vector<Permutation> gens;
            for (const auto& garr : entry["generators"]) {
                Permutation p = detail::permutation_from_images_1indexed(garr);
                if (p.degree() != degree)
                    throw catalog_error("catalog: generator degree " +
                                        std::to_string(p.degree()) + " != declared degree " +
                                        std::to_string(degree));
                gens.push_back(std::move(p));
            }
            FiniteGroup g = FiniteGroup::from_generators(rep.name, degree, std::move(gens),
                                                         order_cap);
            rep.computed_order = static_cast<std::int64_t>(g.order());
            if (rep.computed_order != rep.declared_order)
                throw catalog_error("catalog: group '" + rep.name + "' declares order " +
                                    std::to_string(rep.declared_order) + " but closure has " +
                                    std::to_string(rep.computed_order));
            rep.ok = true;
            if (out) out->add(std::move(g), source);
        } catch (const std::exception& e) {
            rep.ok = false;
            rep.issue = e.what();
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

inline std::vector<CatalogEntryReport> validate_catalog(const std::string& path,
                                                        GroupCatalog* out = nullptr) {
    return validate_catalog_json(detail::read_json_file(path), path, out);
}

/// Loads a catalog file; any invalid entry is an error.
inline GroupCatalog load_catalog(const std::string& path) {
    GroupCatalog catalog;
    const auto reports = validate_catalog(path, &catalog);
    for (const CatalogEntryReport& r : reports)
        if (!r.ok) throw catalog_error(path + ": group '" + r.name + "': " + r.issue);
    return catalog;
}

/// The shipped constructive catalog: cyclic groups up to order 100,
/// dihedral up to order 100, and C_2 x C_n up to order 100. Named
/// permutation groups (S_4, A_5, PSL(2,7)) come from the data file.
inline GroupCatalog builtin_catalog() {
    GroupCatalog catalog;
    for (std::int64_t n = 1; n <= 100; ++n)
        catalog.add(FiniteGroup::cyclic(n), "builtin");
    for (std::int64_t n = 1; n <= 50; ++n)
        catalog.add(FiniteGroup::dihedral(n), "builtin");
    for (std::int64_t n = 2; n <= 50; ++n) // n = 1 would duplicate C_2
        catalog.add(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(n)),
                    "builtin");
    return catalog;
}

} // namespace omnisig
