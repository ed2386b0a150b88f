// Acceptance gate: one line per criterion, PASS/FAIL, exact-equality
// tolerance throughout. Exit 0 iff every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "omnisig/constructions.hpp"
#include "omnisig/enumerate.hpp"
#include "omnisig/lattice.hpp"
#include "omnisig/realization.hpp"
#include "omnisig/search.hpp"
#include "oracle.hpp"

#ifndef OMNISIG_DATA_DIR
#define OMNISIG_DATA_DIR "data"
#endif

using namespace omnisig;

namespace {

struct Criterion {
    int number;
    std::string title;
    double time_limit_seconds; // 0 = untimed
    std::function<bool(std::string&)> body;
};

bool contains_sig(const std::vector<Signature>& sorted, const Signature& s) {
    return std::binary_search(sorted.begin(), sorted.end(), s);
}

// ---- criterion bodies ------------------------------------------------------

bool criterion1(std::string& why) {
    const char* expected[] = {
        "(0; 2,2,2,2,2,2)", "(0; 2,6,6)",   "(0; 2,2,4,4)", "(0; 3,6,6)",   "(0; 5,5,5)",
        "(0; 2,2,2,2,2)",   "(0; 2,2,3,3)", "(0; 2,2,2,6)", "(0; 4,4,4)",   "(0; 2,8,8)",
        "(0; 2,2,2,4)",     "(0; 3,3,9)",   "(0; 2,5,10)",  "(0; 3,4,4)",   "(0; 3,3,6)",
        "(0; 3,3,3,3)",     "(0; 2,4,12)",  "(0; 2,2,2,3)", "(0; 3,3,5)",   "(0; 2,4,8)",
        "(0; 2,3,18)",      "(0; 2,5,5)",   "(0; 3,3,4)",   "(0; 2,4,6)",   "(0; 2,3,12)",
        "(0; 2,3,10)",      "(0; 2,3,9)",   "(0; 2,4,5)",   "(0; 2,3,8)",   "(0; 2,3,7)",
        "(1; 2,2)",         "(1; 3)",       "(1; 2)",       "(2; -)",
    };
    std::multiset<Signature> want;
    for (const char* t : expected) want.insert(parse_signature(t));
    const auto got_list = enumerate_potential(Genus(2)).signatures;
    const std::multiset<Signature> got(got_list.begin(), got_list.end());
    if (got != want) {
        why = "enumerated " + std::to_string(got.size()) + " signatures, expected the 34 known";
        return false;
    }
    return true;
}

bool criterion2(std::string& why) {
    std::map<std::int64_t, PotentialSignatureSet> sets;
    for (std::int64_t s = 2; s <= 15; ++s) sets.emplace(s, enumerate_potential(Genus(s)));
    for (std::int64_t s = 2; s <= 15; ++s) {
        for (std::int64_t t = 2; t <= 15; ++t) {
            const auto& ps = sets.at(s).signatures;
            const auto& pt = sets.at(t).signatures;
            const bool subset = std::all_of(ps.begin(), ps.end(), [&](const Signature& sig) {
                return contains_sig(pt, sig);
            });
            if (subset != ((t - 1) % (s - 1) == 0)) {
                why = "containment mismatch at (" + std::to_string(s) + ", " +
                      std::to_string(t) + ")";
                return false;
            }
            std::vector<PotentialSignatureSet> pair{sets.at(s), sets.at(t)};
            const auto meet = std::gcd(s - 1, t - 1) + 1;
            if (intersect_sets(pair) != sets.at(meet).signatures) {
                why = "intersection mismatch at (" + std::to_string(s) + ", " +
                      std::to_string(t) + ")";
                return false;
            }
        }
    }
    return true;
}

bool criterion3(std::string& why) {
    const auto p2 = enumerate_potential(Genus(2)).signatures;
    for (std::int64_t n = 2; n <= 12; ++n) {
        std::vector<PotentialSignatureSet> pair{enumerate_potential(Genus(n)),
                                                enumerate_potential(Genus(n + 1))};
        if (intersect_sets(pair) != p2) {
            why = "P_" + std::to_string(n) + " intersect P_" + std::to_string(n + 1) +
                  " is not P_2";
            return false;
        }
    }
    return true;
}

bool criterion4(std::string& why) {
    for (std::int64_t sigma = 2; sigma <= 100; ++sigma) {
        try {
            const auto actions = constructions_omnipersistent(sigma);
            const std::int64_t n = sigma - 1;
            const std::int64_t expected_orders[4] = {n, 2 * n, 2 * n, 4 * n};
            for (int i = 0; i < 4; ++i) {
                if (static_cast<std::int64_t>(actions[i].group.order()) !=
                    expected_orders[i]) {
                    why = "sigma " + std::to_string(sigma) + " construction " +
                          std::to_string(i + 1) + ": order " +
                          std::to_string(actions[i].group.order());
                    return false;
                }
                if (!verify(actions[i].group, actions[i].vector, actions[i].signature).ok) {
                    why = "sigma " + std::to_string(sigma) + " construction " +
                          std::to_string(i + 1) + " fails verify";
                    return false;
                }
            }
        } catch (const std::exception& e) {
            why = "sigma " + std::to_string(sigma) + ": " + e.what();
            return false;
        }
    }
    return true;
}

bool criterion5(std::string& why) {
    for (std::int64_t sigma = 2; sigma <= 30; ++sigma) {
        const auto g = FiniteGroup::cyclic(4 * sigma + 2);
        const Signature sig(0, {2, 2 * sigma + 1, 4 * sigma + 2});
        if (search(g, sig).status != SearchStatus::found) {
            why = "search missed C_" + std::to_string(4 * sigma + 2);
            return false;
        }
        try {
            construction_kulkarni(sigma);
        } catch (const std::exception& e) {
            why = std::string("closed-form vector failed: ") + e.what();
            return false;
        }
    }
    return true;
}

bool criterion6(std::string& why) {
    for (std::int64_t sigma = 2; sigma <= 30; ++sigma) {
        const auto g = FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                   FiniteGroup::cyclic(2 * sigma + 2));
        if (search(g, Signature(0, {2, 2 * sigma + 2, 2 * sigma + 2})).status !=
            SearchStatus::found) {
            why = "search missed C_2 x C_" + std::to_string(2 * sigma + 2);
            return false;
        }
    }
    return true;
}

bool criterion7(std::string& why) {
    const GroupCatalog catalog =
        load_catalog(std::string(OMNISIG_DATA_DIR) + "/named_groups.json");
    const auto* groups = catalog.groups_of_order(168);
    if (!groups || groups->front().order() != 168) {
        why = "bundled catalog entry does not close to order 168";
        return false;
    }
    for (const auto& rec : actual_relative(Genus(3), catalog)) {
        if (rec.signature == Signature(0, {2, 3, 7})) {
            if (rec.status != RealizationStatus::realized) {
                why = std::string("(0; 2,3,7) at genus 3: ") + to_string(rec.status);
                return false;
            }
            return true;
        }
    }
    why = "(0; 2,3,7) missing from P_3";
    return false;
}

bool criterion8(std::string& why) {
    const std::pair<std::int64_t, std::int64_t> pairs[] = {{4, 5}, {3, 4}, {5, 6},
                                                           {4, 6}, {6, 8}};
    for (const auto& [s, t] : pairs) {
        if ((t - 1) % (s - 1) == 0) {
            why = "chosen pair is actually divisible";
            return false;
        }
        const Signature w(0, {2, 2 * s + 1, 4 * s + 2});
        if (!is_potential(w, Genus(s)) || is_potential(w, Genus(t))) {
            why = "witness behaved wrongly for (" + std::to_string(s) + ", " +
                  std::to_string(t) + ")";
            return false;
        }
    }
    return true;
}

bool criterion9(std::string& why) {
    for (std::int64_t sigma = 2; sigma <= 6; ++sigma) {
        if (enumerate_potential(Genus(sigma)).signatures != oracle::enumerate_by_sweep(sigma)) {
            why = "enumerator/oracle mismatch at genus " + std::to_string(sigma);
            return false;
        }
    }
    const GroupCatalog catalog = builtin_catalog();
    for (std::int64_t sigma = 2; sigma <= 6; ++sigma) {
        for (const Signature& sig : enumerate_potential(Genus(sigma)).signatures) {
            const auto n = required_group_order(sig, Genus(sigma));
            if (!n || *n > 16) continue;
            const auto* groups = catalog.groups_of_order(*n);
            if (!groups) continue;
            for (const FiniteGroup& g : *groups) {
                const SearchResult fast = search(g, sig);
                if (fast.status == SearchStatus::inconclusive) {
                    why = "pruned search inconclusive on " + g.name();
                    return false;
                }
                if (fast.status == SearchStatus::absent) {
                    // The unpruned oracle must exhaust; bound its leaf count.
                    double est = 1.0;
                    for (std::int64_t i = 0; i < 2 * sig.orbit_genus(); ++i)
                        est *= static_cast<double>(g.order());
                    for (std::int64_t m : sig.periods())
                        est *= static_cast<double>(g.elements_of_order(m).size());
                    if (est > 5e6) continue;
                }
                if ((fast.status == SearchStatus::found) !=
                    oracle::naive_search_found(g, sig)) {
                    why = "pruned/unpruned disagreement: " + g.name() + " on " +
                          format_signature(sig);
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion10(std::string& why) {
    std::mt19937 rng(20260824);

    std::uniform_int_distribution<std::int64_t> gdist(2, 500);
    for (int trial = 0; trial < 10000; ++trial) {
        const Genus a(gdist(rng)), b(gdist(rng)), c(gdist(rng));
        const bool ok = meet_genus(a, b) == meet_genus(b, a) &&
                        join_genus(a, b) == join_genus(b, a) &&
                        meet_genus(meet_genus(a, b), c) == meet_genus(a, meet_genus(b, c)) &&
                        join_genus(join_genus(a, b), c) == join_genus(a, join_genus(b, c)) &&
                        meet_genus(a, join_genus(a, b)) == a &&
                        join_genus(a, meet_genus(a, b)) == a &&
                        contains_genus(meet_genus(a, b), a) &&
                        contains_genus(a, join_genus(a, b));
        if (!ok) {
            why = "lattice axiom failure on triple (" + std::to_string(a.value()) + ", " +
                  std::to_string(b.value()) + ", " + std::to_string(c.value()) + ")";
            return false;
        }
    }

    const auto actions = constructions_omnipersistent(9);
    for (int trial = 0; trial < 1000; ++trial) {
        const RealizedAction& action = actions[trial % 4];
        const auto& g = action.group;
        std::uniform_int_distribution<int> pick(0, static_cast<int>(g.order()) - 1);
        const int t = pick(rng);
        GeneratingVector conj;
        for (const auto& [a, b] : action.vector.pairs)
            conj.pairs.emplace_back(g.mul(g.mul(t, a), g.inv(t)),
                                    g.mul(g.mul(t, b), g.inv(t)));
        for (int c : action.vector.elliptic)
            conj.elliptic.push_back(g.mul(g.mul(t, c), g.inv(t)));
        if (!verify(g, conj, action.signature).ok) {
            why = "conjugation broke a valid vector in " + g.name();
            return false;
        }
    }

    try {
        // actual_relative itself asserts A subset of P; re-check explicitly.
        for (const auto& rec : actual_relative(Genus(2), builtin_catalog()))
            if (rec.status == RealizationStatus::realized &&
                !is_potential(rec.signature, Genus(2))) {
                why = "realized non-potential signature " + format_signature(rec.signature);
                return false;
            }
    } catch (const std::exception& e) {
        why = std::string("realization run failed: ") + e.what();
        return false;
    }

    std::uniform_int_distribution<std::int64_t> hdist(0, 5), rdist(0, 6), mdist(2, 99);
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<std::int64_t> periods(rdist(rng));
        for (auto& m : periods) m = mdist(rng);
        const Signature s(hdist(rng), periods);
        if (parse_signature(format_signature(s)) != s) {
            why = "round-trip failure on " + format_signature(s);
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "P_2 reproduction (34 signatures, as multisets)", 1.0, criterion1},
        {2, "containment and intersection vs divisibility, genera 2..15", 60.0, criterion2},
        {3, "consecutive-genus collapse to P_2, n = 2..12", 0.0, criterion3},
        {4, "four genus-independent constructions, sigma = 2..100", 30.0, criterion4},
        {5, "cyclic (0; 2, 2s+1, 4s+2) family by search and closed form", 0.0, criterion5},
        {6, "abelian (0; 2, 2s+2, 2s+2) family by search", 0.0, criterion6},
        {7, "(0; 2,3,7) realized at genus 3 from the bundled catalog", 60.0, criterion7},
        {8, "non-containment witnesses for five non-dividing pairs", 0.0, criterion8},
        {9, "enumerator and search agree with independent oracles", 0.0, criterion9},
        {10, "property suite: lattice axioms, conjugation, A in P, round-trip", 0.0,
         criterion10},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string why;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.body(why);
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.time_limit_seconds > 0 && seconds > c.time_limit_seconds) {
            ok = false;
            why = "exceeded time limit of " + std::to_string(c.time_limit_seconds) + " s";
        }
        std::printf("%s  criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                    c.title.c_str(), seconds, why.empty() ? "" : " -- ", why.c_str());
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
