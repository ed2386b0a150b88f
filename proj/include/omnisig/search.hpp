#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "omnisig/generating_vector.hpp"
#include "omnisig/group.hpp"
#include "omnisig/signature.hpp"

namespace omnisig {

enum class SearchStatus { found, absent, inconclusive };

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::absent: return "absent";
        case SearchStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

/// `absent` is a definitive exhaustion result; `inconclusive` only occurs
/// when the node guard was hit first.
struct SearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<GeneratingVector> witness;
    std::uint64_t nodes = 0;
};

constexpr std::uint64_t kDefaultNodeGuard = 100'000'000;

namespace detail {

// Subgroup closure threaded through the backtracking search. Once full it
// stays full, so deeper levels skip all closure work (early accept).
struct PartialClosure {
    std::vector<char> in;
    std::vector<int> members;
    bool full = false;

    static PartialClosure trivial(const FiniteGroup& g) {
        PartialClosure c;
        c.in.assign(g.order(), 0);
        c.in[g.identity()] = 1;
        c.members = {g.identity()};
        c.full = g.order() == 1;
        return c;
    }

    // Closure of <previous entries, x>. `entries` must list every element
    // already folded in; old members times x can be new, so the whole
    // member list re-enters the frontier.
    PartialClosure extend(const FiniteGroup& g, std::vector<int>& entries, int x) const {
        entries.push_back(x);
        if (full || in[x]) {
            PartialClosure out = *this;
            return out;
        }
        PartialClosure out = *this;
        out.in[x] = 1;
        out.members.push_back(x);
        std::size_t frontier = 0; // all members re-scan against the grown set
        while (frontier < out.members.size()) {
            const int e = out.members[frontier++];
            for (int gen : entries) {
                const int y = g.mul(gen, e);
                if (!out.in[y]) {
                    out.in[y] = 1;
                    out.members.push_back(y);
                }
            }
        }
        out.full = out.members.size() == g.order();
        return out;
    }
};

struct VectorSearch {
    const FiniteGroup& g;
    const Signature& sig;
    std::uint64_t guard;
    std::uint64_t nodes = 0;
    bool guard_hit = false;

    std::int64_t h;
    std::int64_t r;
    std::vector<std::vector<int>> elliptic_candidates; // per period index
    GeneratingVector current;
    std::optional<GeneratingVector> found;

    VectorSearch(const FiniteGroup& group, const Signature& signature, std::uint64_t node_guard)
        : g(group), sig(signature), guard(node_guard), h(signature.orbit_genus()),
          r(signature.period_count()) {}

    bool tick() {
        if (++nodes > guard) {
            guard_hit = true;
            return false;
        }
        return true;
    }

    // Pairs phase: product accumulates commutators left to right.
    bool pairs_phase(std::size_t pair_idx, int prod, const PartialClosure& closure,
                     std::vector<int>& entries, int fixed_c1) {
        if (pair_idx == static_cast<std::size_t>(h))
            return elliptic_phase(prod, closure, entries, fixed_c1);
        const int n = static_cast<int>(g.order());
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (!tick()) return false;
                current.pairs[pair_idx] = {a, b};
                const std::size_t mark = entries.size();
                PartialClosure next = closure.extend(g, entries, a);
                next = next.extend(g, entries, b);
                const int p = g.mul(prod, commutator(g, a, b));
                if (!pairs_phase(pair_idx + 1, p, next, entries, fixed_c1)) return false;
                entries.resize(mark);
            }
        }
        return true;
    }

    bool elliptic_phase(int prod, const PartialClosure& closure, std::vector<int>& entries,
                        int fixed_c1) {
        if (r == 0) {
            if (prod == g.identity() && closure.full) return accept();
            return true;
        }
        if (r == 1) {
            // c_1 is forced by the product relation.
            const int c = g.inv(prod);
            if (!tick()) return false;
            if (g.element_order(c) != sig.periods()[0]) return true;
            const std::size_t mark = entries.size();
            const PartialClosure last = closure.extend(g, entries, c);
            bool keep = true;
            if (last.full) {
                current.elliptic[0] = c;
                keep = accept();
            }
            entries.resize(mark);
            return keep;
        }
        // r >= 2: fold in the pre-chosen c_1, then backtrack c_2..c_{r-1}.
        current.elliptic[0] = fixed_c1;
        return free_elliptic(1, g.mul(prod, fixed_c1), closure, entries);
    }

    bool free_elliptic(std::size_t idx, int prod, const PartialClosure& closure,
                       std::vector<int>& entries) {
        if (idx == static_cast<std::size_t>(r) - 1) {
            // The last c is forced; accept iff its order matches.
            const int c = g.inv(prod);
            if (!tick()) return false;
            if (g.element_order(c) != sig.periods()[r - 1]) return true;
            const std::size_t mark = entries.size();
            const PartialClosure last = closure.extend(g, entries, c);
            bool keep = true;
            if (last.full) {
                current.elliptic[r - 1] = c;
                keep = accept();
            }
            entries.resize(mark);
            return keep;
        }
        for (int c : elliptic_candidates[idx]) {
            if (!tick()) return false;
            current.elliptic[idx] = c;
            const std::size_t mark = entries.size();
            const PartialClosure next = closure.extend(g, entries, c);
            const bool keep = free_elliptic(idx + 1, g.mul(prod, c), next, entries);
            entries.resize(mark);
            if (!keep) return false;
        }
        return true;
    }

    // Records the witness; returns false, the "stop searching" signal.
    bool accept() {
        found = current;
        return false;
    }

    SearchResult run() {
        current.pairs.assign(static_cast<std::size_t>(h), {0, 0});
        current.elliptic.assign(static_cast<std::size_t>(r), 0);

        elliptic_candidates.resize(static_cast<std::size_t>(r));
        for (std::int64_t i = 0; i < r; ++i) {
            elliptic_candidates[i] = g.elements_of_order(sig.periods()[i]);
            if (elliptic_candidates[i].empty())
                return {SearchStatus::absent, std::nullopt, nodes};
        }

        std::vector<int> entries;
        if (r >= 2) {
            // Conjugating a whole vector preserves all three conditions, so
            // c_1 only needs to range over conjugacy class representatives.
            for (int rep : g.conjugacy_class_representatives()) {
                if (g.element_order(rep) != sig.periods()[0]) continue;
                if (!tick()) break;
                entries.clear();
                PartialClosure closure = PartialClosure::trivial(g).extend(g, entries, rep);
                if (!pairs_phase(0, g.identity(), closure, entries, rep)) break;
            }
        } else {
            pairs_phase(0, g.identity(), PartialClosure::trivial(g), entries, -1);
        }

        if (found) return {SearchStatus::found, found, nodes};
        if (guard_hit) return {SearchStatus::inconclusive, std::nullopt, nodes};
        return {SearchStatus::absent, std::nullopt, nodes};
    }
};

} // namespace detail

/// Exhaustive backtracking search for an (h; m_1,...,m_r)-generating vector
/// in G. Deterministic: the returned witness is the first in search order
/// over the canonical element ordering.
inline SearchResult search(const FiniteGroup& g, const Signature& sig,
                           std::uint64_t node_guard = kDefaultNodeGuard) {
    const std::int64_t n = static_cast<std::int64_t>(g.order());
    for (std::int64_t m : sig.periods())
        if (n % m != 0) return {SearchStatus::absent, std::nullopt, 0};
    detail::VectorSearch vs(g, sig, node_guard);
    SearchResult result = vs.run();
    if (result.status == SearchStatus::found) {
        const VerifyResult check = verify(g, *result.witness, sig);
        if (!check.ok)
            throw std::logic_error("search: produced witness failing verify: " + check.detail);
    }
    return result;
}

} // namespace omnisig
