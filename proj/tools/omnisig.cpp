// omnisig: enumerate potential signatures of finite-group actions on closed
// surfaces, verify the divisibility lattice on them, and decide realizability
// by generating-vector search in explicit finite groups.

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "omnisig/catalog.hpp"
#include "omnisig/constructions.hpp"
#include "omnisig/enumerate.hpp"
#include "omnisig/group_spec.hpp"
#include "omnisig/lattice.hpp"
#include "omnisig/realization.hpp"
#include "omnisig/search.hpp"
#include "omnisig/signature.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

std::set<std::int64_t> parse_order_list(const std::string& text) {
    std::set<std::int64_t> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string tok = text.substr(pos, next - pos);
        if (!tok.empty()) out.insert(std::stoll(tok));
        pos = next + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"potential and actual signatures of group actions on surfaces"};
    app.require_subcommand(1);
    unsigned jobs = 0;
    app.add_option("--jobs", jobs, "parallelism degree (0 = available hardware)");

    // enumerate
    std::int64_t enum_genus = 0;
    std::string enum_format = "text";
    auto* cmd_enum = app.add_subcommand("enumerate", "enumerate P_sigma for one genus");
    cmd_enum->add_option("--genus", enum_genus, "genus sigma >= 2")->required();
    cmd_enum->add_option("--format", enum_format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // lattice contains|meet|join
    auto* cmd_lattice = app.add_subcommand("lattice", "genus-level lattice operations");
    cmd_lattice->require_subcommand(1);
    std::int64_t lat_a = 0, lat_b = 0;
    auto* lat_contains = cmd_lattice->add_subcommand("contains", "is P_sigma within P_sigma'?");
    auto* lat_meet = cmd_lattice->add_subcommand("meet", "genus of the meet");
    auto* lat_join = cmd_lattice->add_subcommand("join", "genus of the join");
    for (auto* sub : {lat_contains, lat_meet, lat_join}) {
        sub->add_option("sigma", lat_a, "first genus")->required();
        sub->add_option("sigma_prime", lat_b, "second genus")->required();
    }

    // verify lattice|omnipersistent
    auto* cmd_verify = app.add_subcommand("verify", "empirical theorem verification");
    cmd_verify->require_subcommand(1);
    std::int64_t ver_max_genus = 9;
    std::int64_t ver_guard = 40;
    auto* ver_lattice = cmd_verify->add_subcommand("lattice", "pairwise lattice checks");
    ver_lattice->add_option("--max-genus", ver_max_genus, "largest genus in the sweep")
        ->required();
    ver_lattice->add_option("--guard", ver_guard, "refuse sweeps beyond this genus");
    std::int64_t ver_from = 2, ver_to = 2;
    auto* ver_omni =
        cmd_verify->add_subcommand("omnipersistent", "the four construction families");
    ver_omni->add_option("--from", ver_from, "first genus")->required();
    ver_omni->add_option("--to", ver_to, "last genus")->required();

    // search
    std::string search_group, search_sig;
    std::uint64_t search_nodes = omnisig::kDefaultNodeGuard;
    auto* cmd_search = app.add_subcommand("search", "generating-vector search in one group");
    cmd_search->add_option("--group", search_group, "group spec C:n | D:n | P:a,b | file:path#name")
        ->required();
    cmd_search->add_option("--signature", search_sig, "signature, e.g. \"(0; 2,3,7)\"")
        ->required();
    cmd_search->add_option("--nodes", search_nodes, "search node guard");

    // realize
    std::int64_t real_genus = 0;
    std::string real_catalog;
    std::string real_orders;
    std::string real_format = "json";
    auto* cmd_realize = app.add_subcommand("realize", "realize P_sigma against a catalog");
    cmd_realize->add_option("--genus", real_genus, "genus sigma >= 2")->required();
    cmd_realize->add_option("--catalog", real_catalog,
                            "extra catalog JSON (default: $OMNISIG_CATALOG)");
    cmd_realize->add_option("--complete-orders", real_orders,
                            "orders asserted complete in the catalog, e.g. \"12,24\"");
    cmd_realize->add_option("--format", real_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    bool real_no_builtin = false;
    cmd_realize->add_flag("--no-builtin", real_no_builtin, "skip the built-in groups");

    // catalog validate
    auto* cmd_catalog = app.add_subcommand("catalog", "catalog file operations");
    cmd_catalog->require_subcommand(1);
    std::string cat_path;
    auto* cat_validate = cmd_catalog->add_subcommand("validate", "check a catalog file");
    cat_validate->add_option("path", cat_path, "catalog JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*cmd_enum) {
            const auto set = omnisig::enumerate_potential(omnisig::Genus(enum_genus), jobs);
            if (enum_format == "text")
                std::cout << omnisig::to_text(set);
            else if (enum_format == "csv")
                std::cout << omnisig::to_csv(set);
            else
                std::cout << omnisig::to_json(set).dump(2) << "\n";
            return kExitPass;
        }

        if (*cmd_lattice) {
            const omnisig::Genus a(lat_a), b(lat_b);
            if (*lat_contains) {
                const bool yes = omnisig::contains_genus(a, b);
                std::cout << (yes ? "true" : "false") << "\n";
                return yes ? kExitPass : kExitNegative;
            }
            if (*lat_meet) {
                std::cout << omnisig::meet_genus(a, b).value() << "\n";
                return kExitPass;
            }
            std::cout << omnisig::join_genus(a, b).value() << "\n";
            return kExitPass;
        }

        if (*ver_lattice) {
            const auto reports = omnisig::verify_lattice(ver_max_genus, jobs, ver_guard);
            bool all = true;
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : reports) {
                all = all && r.matches;
                arr.push_back(omnisig::to_json(r));
            }
            std::cout << nlohmann::json{{"max_genus", ver_max_genus},
                                        {"all_match", all},
                                        {"reports", arr}}
                             .dump(2)
                      << "\n";
            return all ? kExitPass : kExitNegative;
        }

        if (*ver_omni) {
            const auto report = omnisig::verify_omnipersistent_actual(ver_from, ver_to);
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& g : report.per_genus)
                arr.push_back({{"sigma", g.sigma}, {"ok", g.ok}, {"details", g.details}});
            std::cout << nlohmann::json{{"from", ver_from},
                                        {"to", ver_to},
                                        {"all_ok", report.all_ok},
                                        {"per_genus", arr}}
                             .dump(2)
                      << "\n";
            return report.all_ok ? kExitPass : kExitNegative;
        }

        if (*cmd_search) {
            const omnisig::FiniteGroup g = omnisig::parse_group_spec(search_group);
            const omnisig::Signature sig = omnisig::parse_signature(search_sig);
            const omnisig::SearchResult result = omnisig::search(g, sig, search_nodes);
            nlohmann::json out = {{"group", g.name()},
                                  {"order", g.order()},
                                  {"signature", omnisig::format_signature(sig)},
                                  {"status", omnisig::to_string(result.status)},
                                  {"nodes", result.nodes}};
            if (result.status == omnisig::SearchStatus::found)
                out["witness"] = omnisig::witness_to_json(g, *result.witness, sig);
            else if (result.status == omnisig::SearchStatus::absent)
                out["detail"] = "definitive absence";
            else
                out["detail"] = "node guard exceeded; result inconclusive";
            std::cout << out.dump(2) << "\n";
            switch (result.status) {
                case omnisig::SearchStatus::found: return kExitPass;
                case omnisig::SearchStatus::absent: return kExitNegative;
                case omnisig::SearchStatus::inconclusive: return kExitInconclusive;
            }
        }

        if (*cmd_realize) {
            omnisig::GroupCatalog catalog;
            if (!real_no_builtin) catalog = omnisig::builtin_catalog();
            std::string catalog_path = real_catalog;
            if (catalog_path.empty())
                if (const char* env = std::getenv("OMNISIG_CATALOG")) catalog_path = env;
            if (!catalog_path.empty()) {
                const auto extra = omnisig::load_catalog(catalog_path);
                for (const auto& [order, groups] : extra.by_order)
                    for (const auto& g : groups) catalog.add(g, catalog_path);
            }
            const auto complete = parse_order_list(real_orders);
            const auto records =
                omnisig::actual_relative(omnisig::Genus(real_genus), catalog, complete);
            if (real_format == "csv") {
                std::cout << "# complete-orders: " << real_orders << "\n"
                          << omnisig::realization_csv(records);
            } else {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& rec : records) arr.push_back(omnisig::to_json(rec));
                std::cout << nlohmann::json{{"genus", real_genus},
                                            {"complete_orders", complete},
                                            {"catalog_size", catalog.size()},
                                            {"records", arr}}
                                 .dump(2)
                          << "\n";
            }
            return kExitPass;
        }

        if (*cat_validate) {
            const auto reports = omnisig::validate_catalog(cat_path);
            bool all = true;
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : reports) {
                all = all && r.ok;
                arr.push_back({{"name", r.name},
                               {"declared_order", r.declared_order},
                               {"computed_order", r.computed_order},
                               {"ok", r.ok},
                               {"issue", r.issue}});
            }
            std::cout << nlohmann::json{{"file", cat_path}, {"ok", all}, {"groups", arr}}.dump(2)
                      << "\n";
            return all ? kExitPass : kExitData;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const omnisig::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const omnisig::catalog_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const omnisig::spec_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
