#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "omnisig/catalog.hpp"
#include "omnisig/group.hpp"

namespace omnisig {

class spec_error : public std::runtime_error {
public:
    explicit spec_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::int64_t spec_number(std::string_view text, std::size_t& pos) {
    std::size_t start = pos;
    std::int64_t v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + (text[pos] - '0');
        ++pos;
    }
    if (pos == start)
        throw spec_error("group spec: expected a number at offset " + std::to_string(pos) +
                         " in \"" + std::string(text) + "\"");
    return v;
}

inline FiniteGroup parse_group_spec_at(std::string_view text, std::size_t& pos) {
    if (text.compare(pos, 2, "C:") == 0) {
        pos += 2;
        return FiniteGroup::cyclic(spec_number(text, pos));
    }
    if (text.compare(pos, 2, "D:") == 0) {
        pos += 2;
        return FiniteGroup::dihedral(spec_number(text, pos));
    }
    if (text.compare(pos, 2, "P:") == 0) {
        pos += 2;
        FiniteGroup left = parse_group_spec_at(text, pos);
        if (pos >= text.size() || text[pos] != ',')
            throw spec_error("group spec: product needs two comma-separated parts in \"" +
                             std::string(text) + "\"");
        ++pos;
        FiniteGroup right = parse_group_spec_at(text, pos);
        return FiniteGroup::direct_product(left, right);
    }
    if (text.compare(pos, 5, "file:") == 0) {
        pos += 5;
        const std::size_t hash = text.find('#', pos);
        if (hash == std::string_view::npos)
            throw spec_error("group spec: file specifier needs \"file:path#name\" in \"" +
                             std::string(text) + "\"");
        const std::string path(text.substr(pos, hash - pos));
        const std::string name(text.substr(hash + 1));
        pos = text.size();
        const GroupCatalog catalog = load_catalog(path);
        for (const auto& [order, groups] : catalog.by_order)
            for (const FiniteGroup& g : groups)
                if (g.name() == name) return g;
        throw spec_error("group spec: no group named '" + name + "' in " + path);
    }
    throw spec_error("group spec: expected C:n, D:n, P:a,b or file:path#name in \"" +
                     std::string(text) + "\"");
}

} // namespace detail

/// "C:n" cyclic, "D:n" dihedral of order 2n, "P:a,b" direct product,
/// "file:path#name" catalog entry.
inline FiniteGroup parse_group_spec(std::string_view text) {
    std::size_t pos = 0;
    FiniteGroup g = detail::parse_group_spec_at(text, pos);
    if (pos != text.size())
        throw spec_error("group spec: trailing characters in \"" + std::string(text) + "\"");
    return g;
}

} // namespace omnisig
