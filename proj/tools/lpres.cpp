/*
 * Command line front end.
 *
 * Subcommands: analyze (coset table and subgroup classification),
 * present (subgroup presentation by a chosen or automatic strategy),
 * abelian (abelian invariants of the group or a subgroup), lowindex
 * (census of subgroups up to an index bound), verify (enumeration at a
 * fixed truncation depth). Exit codes: 0 success, 1 bad input, 2
 * inconclusive within the configured limits.
 */

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpres/lpres.hpp"

namespace {

struct Globals {
    bool json = false;
    int max_cosets = 1 << 16;
    std::string schedule;
    unsigned seed = 0;
};

lpres::EnumerationLimits limits_from(const Globals& g) {
    lpres::EnumerationLimits limits;
    limits.max_cosets = g.max_cosets;
    if (!g.schedule.empty()) {
        limits.depth_schedule.clear();
        std::stringstream parts(g.schedule);
        std::string part;
        while (std::getline(parts, part, ',')) {
            try {
                limits.depth_schedule.push_back(std::stoi(part));
            } catch (const std::exception&) {
                throw lpres::MalformedInputError("bad depth schedule entry '" + part + "'");
            }
        }
    }
    limits.validate();
    return limits;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::string join_names(const std::vector<lpres::MonoidElement>& elems, int nphi) {
    std::string out;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += lpres::format_monoid_element(elems[i], nphi);
    }
    return out;
}

void run_analyze(const std::string& path, const std::string& name, const Globals& g) {
    lpres::PresentationFile pf = lpres::parse_lpres_path(path);
    lpres::EnumerationLimits limits = limits_from(g);
    int depth = -1;
    lpres::CosetTable table = lpres::enumerate_cosets(pf.lp, pf.subgroup(name), limits, &depth);
    lpres::SubgroupReport report = lpres::classify_subgroup(pf.lp, table);

    std::vector<lpres::Permutation> quotient;
    if (report.normal)
        quotient = lpres::quotient_group(table, limits.closure_cap);

    if (g.json) {
        nlohmann::json j = lpres::to_json(report);
        j["subgroup"] = name;
        j["verified_depth"] = depth;
        j["table"] = lpres::to_json(table, pf.lp.alphabet);
        if (report.normal)
            j["quotient"] = {{"order", quotient.size()},
                             {"abelian", lpres::is_abelian(quotient)},
                             {"dihedral", lpres::is_dihedral(quotient)}};
        std::cout << j.dump(2) << '\n';
        return;
    }

    int nphi = static_cast<int>(pf.lp.substitutions.size());
    std::cout << "subgroup: " << name << '\n';
    std::cout << "index: " << table.ncosets() << '\n';
    std::cout << "verified depth: " << depth << '\n';
    std::cout << "action:\n";
    for (int gidx = 0; gidx < table.ngens(); ++gidx)
        std::cout << "  " << pf.lp.alphabet.names[static_cast<std::size_t>(gidx)] << ": "
                  << lpres::cycle_string(table.columns()[static_cast<std::size_t>(gidx)]) << '\n';
    std::cout << "normal: " << yesno(report.normal) << '\n';
    std::cout << "phi-invariant: " << yesno(report.phi_invariant) << '\n';
    std::cout << "leaf-invariant: " << yesno(report.leaf_invariant) << '\n';
    std::cout << "weakly leaf-invariant (V): " << yesno(report.weakly_leaf_invariant_V) << '\n';
    std::cout << "weakly leaf-invariant (V~): " << yesno(report.weakly_leaf_invariant_Vtilde)
              << '\n';
    std::cout << "tree nodes: " << join_names(report.tree.nodes, nphi) << '\n';
    std::cout << "reduced tree nodes: " << join_names(report.leadsto.nodes, nphi) << '\n';
    std::cout << "recommended strategy: " << report.recommended << '\n';
    if (report.normal) {
        std::cout << "quotient order: " << quotient.size() << '\n';
        std::cout << "quotient abelian: " << yesno(lpres::is_abelian(quotient)) << '\n';
        std::cout << "quotient dihedral: " << yesno(lpres::is_dihedral(quotient)) << '\n';
    }
}

lpres::SubgroupPresentationResult presentation_by_strategy(const lpres::LPresentation& lp,
                                                           const lpres::CosetTable& table,
                                                           const std::string& strategy,
                                                           const lpres::EnumerationLimits& limits,
                                                           lpres::GeneralPipelineInfo* info,
                                                           bool* have_info) {
    *have_info = false;
    if (strategy == "auto") {
        lpres::SubgroupPresentationResult result = lpres::best_strategy(lp, table);
        if (result.strategy == "general") {
            *have_info = true;
            return lpres::general_subgroup_lpres(lp, table, info, limits.closure_cap);
        }
        return result;
    }
    if (strategy == "classical") {
        if (!lp.substitutions.empty())
            throw lpres::StrategyInapplicableError(
                "classical rewriting applies only without substitutions");
        lpres::FinitePresentation fp;
        fp.alphabet = lp.alphabet;
        fp.relators = lp.fixed;
        fp.relators.insert(fp.relators.end(), lp.iterated.begin(), lp.iterated.end());
        return lpres::classical_reidemeister_schreier(fp, table);
    }
    if (strategy == "invariant-normal")
        return lpres::invariant_normal_lpres(lp, table);
    if (strategy == "leaf-invariant")
        return lpres::leaf_invariant_lpres(lp, table);
    if (strategy == "weak-normal")
        return lpres::weakly_leaf_invariant_normal_lpres(lp, table);
    if (strategy == "general") {
        *have_info = true;
        return lpres::general_subgroup_lpres(lp, table, info, limits.closure_cap);
    }
    throw lpres::MalformedInputError("unknown strategy '" + strategy + "'");
}

void run_present(const std::string& path, const std::string& name, const std::string& strategy,
                 const Globals& g) {
    lpres::PresentationFile pf = lpres::parse_lpres_path(path);
    lpres::EnumerationLimits limits = limits_from(g);
    int depth = -1;
    lpres::CosetTable table = lpres::enumerate_cosets(pf.lp, pf.subgroup(name), limits, &depth);

    lpres::GeneralPipelineInfo info;
    bool have_info = false;
    lpres::SubgroupPresentationResult result =
        presentation_by_strategy(pf.lp, table, strategy, limits, &info, &have_info);

    if (g.json) {
        nlohmann::json j = lpres::to_json(result, pf.lp.alphabet);
        j["subgroup"] = name;
        j["index"] = table.ncosets();
        j["verified_depth"] = depth;
        if (have_info)
            j["general"] = {{"core_index", info.core_index},
                            {"core_rank", info.core_rank},
                            {"quotient_order", info.quotient_order},
                            {"quotient_generators", info.quotient_generators}};
        std::cout << j.dump(2) << '\n';
        return;
    }

    std::cout << "subgroup: " << name << '\n';
    std::cout << "index: " << table.ncosets() << '\n';
    std::cout << "strategy: " << result.strategy << '\n';
    std::cout << "rank: " << result.dictionary.size() << '\n';
    if (have_info) {
        std::cout << "core index: " << info.core_index << '\n';
        std::cout << "quotient order: " << info.quotient_order << '\n';
    }
    std::cout << "generators:\n";
    for (std::size_t i = 0; i < result.dictionary.size(); ++i)
        std::cout << "  " << result.presentation.alphabet.names[i] << " = "
                  << lpres::format_word(result.dictionary[i], pf.lp.alphabet) << '\n';
    std::cout << "presentation: " << lpres::format_presentation(result.presentation) << '\n';
    lpres::PresentationFile out;
    out.lp = result.presentation;
    std::cout << "\n" << lpres::lpres_file_text(out);
}

void run_abelian(const std::string& path, const std::string& name, bool have_name,
                 std::optional<int> depth, const Globals& g) {
    lpres::PresentationFile pf = lpres::parse_lpres_path(path);
    lpres::EnumerationLimits limits = limits_from(g);
    lpres::LPresentation target = pf.lp;
    if (have_name) {
        lpres::CosetTable table = lpres::enumerate_cosets(pf.lp, pf.subgroup(name), limits);
        target = lpres::best_strategy(pf.lp, table).presentation;
    }
    lpres::AbelianInvariants inv = lpres::abelian_invariants(target, depth);
    if (g.json) {
        nlohmann::json j = lpres::to_json(inv);
        j["description"] = lpres::format_abelian(inv);
        if (have_name)
            j["subgroup"] = name;
        std::cout << j.dump(2) << '\n';
        return;
    }
    if (have_name)
        std::cout << "subgroup: " << name << '\n';
    std::cout << "abelian invariants: " << lpres::format_abelian(inv) << '\n';
    std::cout << "heuristic: " << yesno(inv.heuristic) << '\n';
}

void run_lowindex(const std::string& path, int max_index, const Globals& g) {
    lpres::PresentationFile pf = lpres::parse_lpres_path(path);
    lpres::EnumerationLimits limits = limits_from(g);
    std::vector<lpres::CosetTable> tables = lpres::low_index_tables(pf.lp, max_index, limits);

    struct Row {
        int count = 0, normal = 0, maximal = 0, leaf = 0, weak = 0, normal_weak = 0;
    };
    std::vector<Row> rows(static_cast<std::size_t>(max_index) + 1);
    for (const lpres::CosetTable& t : tables) {
        lpres::SubgroupReport report = lpres::classify_subgroup(pf.lp, t);
        Row& row = rows[static_cast<std::size_t>(t.ncosets())];
        row.count += 1;
        row.normal += report.normal;
        row.maximal += lpres::is_primitive(t);
        row.leaf += report.leaf_invariant;
        row.weak += report.weakly_leaf_invariant_Vtilde;
        row.normal_weak += report.normal && report.weakly_leaf_invariant_Vtilde;
    }

    if (g.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (int n = 1; n <= max_index; ++n) {
            const Row& row = rows[static_cast<std::size_t>(n)];
            arr.push_back({{"index", n},
                           {"count", row.count},
                           {"normal", row.normal},
                           {"maximal", row.maximal},
                           {"leaf_invariant", row.leaf},
                           {"weakly_leaf_invariant", row.weak},
                           {"normal_weakly_leaf_invariant", row.normal_weak}});
        }
        nlohmann::json j = {{"max_index", max_index},
                            {"total", tables.size()},
                            {"rows", arr}};
        std::cout << j.dump(2) << '\n';
        return;
    }

    std::cout << std::left << std::setw(7) << "index" << std::setw(11) << "subgroups"
              << std::setw(8) << "normal" << std::setw(9) << "maximal" << std::setw(10)
              << "leaf-inv" << std::setw(10) << "weak-inv" << "normal+weak\n";
    for (int n = 1; n <= max_index; ++n) {
        const Row& row = rows[static_cast<std::size_t>(n)];
        std::cout << std::left << std::setw(7) << n << std::setw(11) << row.count << std::setw(8)
                  << row.normal << std::setw(9) << row.maximal << std::setw(10) << row.leaf
                  << std::setw(10) << row.weak << row.normal_weak << '\n';
    }
    std::cout << "total: " << tables.size() << " subgroups up to index " << max_index << '\n';
}

void run_verify(const std::string& path, const std::string& name, int depth, const Globals& g) {
    lpres::PresentationFile pf = lpres::parse_lpres_path(path);
    lpres::EnumerationLimits limits = limits_from(g);
    limits.depth_schedule = {depth};
    limits.validate();
    int verified = -1;
    lpres::CosetTable table =
        lpres::enumerate_cosets(pf.lp, pf.subgroup(name), limits, &verified);
    if (g.json) {
        nlohmann::json j = {{"subgroup", name},
                            {"index", table.ncosets()},
                            {"verified", true},
                            {"depth", verified}};
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::cout << "subgroup: " << name << '\n';
    std::cout << "index: " << table.ncosets() << '\n';
    std::cout << "verified: yes (depth " << verified << ")\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reidemeister-Schreier toolkit for finitely L-presented groups"};
    app.require_subcommand(1);
    app.fallthrough(true);

    Globals g;
    app.add_flag("--json", g.json, "emit JSON instead of text");
    app.add_option("--max-cosets", g.max_cosets, "coset limit for the enumerator")
        ->capture_default_str();
    app.add_option("--depth-schedule", g.schedule,
                   "comma separated truncation depths, e.g. 2,4,6,8");
    app.add_option("--seed", g.seed,
                   "reserved for reproducibility; all current algorithms are deterministic");

    std::string file, subgroup, strategy = "auto";
    int max_index = 2;
    int depth = 2;
    bool have_depth = false;

    CLI::App* analyze = app.add_subcommand("analyze", "coset table and subgroup classification");
    analyze->add_option("file", file, "presentation file")->required();
    analyze->add_option("--subgroup", subgroup, "subgroup name from the file")->required();
    analyze->callback([&] { run_analyze(file, subgroup, g); });

    CLI::App* present = app.add_subcommand("present", "subgroup presentation by rewriting");
    present->add_option("file", file, "presentation file")->required();
    present->add_option("--subgroup", subgroup, "subgroup name from the file")->required();
    present
        ->add_option("--strategy", strategy, "auto, classical, invariant-normal, leaf-invariant, "
                                             "weak-normal or general")
        ->check(CLI::IsMember({"auto", "classical", "invariant-normal", "leaf-invariant",
                               "weak-normal", "general"}))
        ->capture_default_str();
    present->callback([&] { run_present(file, subgroup, strategy, g); });

    CLI::App* abelian = app.add_subcommand("abelian", "abelian invariants");
    abelian->add_option("file", file, "presentation file")->required();
    abelian->add_option("--subgroup", subgroup, "subgroup name from the file");
    abelian->add_option("--depth", depth, "truncation depth for non-invariant presentations")
        ->each([&](const std::string&) { have_depth = true; });
    abelian->callback([&] {
        run_abelian(file, subgroup, !subgroup.empty(),
                    have_depth ? std::optional<int>(depth) : std::nullopt, g);
    });

    CLI::App* lowindex = app.add_subcommand("lowindex", "subgroup census up to an index bound");
    lowindex->add_option("file", file, "presentation file")->required();
    lowindex->add_option("--max", max_index, "largest index to enumerate")->required();
    lowindex->callback([&] { run_lowindex(file, max_index, g); });

    CLI::App* verify = app.add_subcommand("verify", "enumerate and verify at a fixed depth");
    verify->add_option("file", file, "presentation file")->required();
    verify->add_option("--subgroup", subgroup, "subgroup name from the file")->required();
    verify->add_option("--depth", depth, "truncation depth")->required();
    verify->callback([&] { run_verify(file, subgroup, depth, g); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const lpres::LowIndexInconclusiveError& e) {
        std::cerr << "inconclusive: " << e.what() << " (" << e.partial.size()
                  << " subgroups found before the limit)\n";
        return 2;
    } catch (const lpres::InconclusiveError& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return 2;
    } catch (const lpres::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 2;
    } catch (const lpres::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
