#pragma once

/*
 * Rendering of words, presentations, tables and reports, both as
 * readable text and as JSON. Word and file formatting are inverse to
 * the parser, so a printed presentation file parses back to an equal
 * presentation.
 */

#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "abelian.hpp"
#include "classify.hpp"
#include "coset_table.hpp"
#include "parser.hpp"
#include "presentation.hpp"
#include "subgroup_presentation.hpp"
#include "word.hpp"

namespace lpres {

inline std::vector<std::string> default_endo_names(int count) {
    if (count == 1)
        return {"sigma"};
    std::vector<std::string> names;
    for (int i = 1; i <= count; ++i)
        names.push_back("phi" + std::to_string(i));
    return names;
}

/* "b a^-2 b^-1" with runs of one letter collapsed into powers. */
inline std::string format_word(const Word& w, const Alphabet& alphabet) {
    if (w.empty())
        return "1";
    std::ostringstream os;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        int letter = w[i];
        int exponent = letter > 0 ? static_cast<int>(j - i) : -static_cast<int>(j - i);
        if (i > 0)
            os << ' ';
        os << alphabet.names[static_cast<std::size_t>(std::abs(letter) - 1)];
        if (exponent != 1)
            os << '^' << exponent;
        i = j;
    }
    return os.str();
}

inline std::string format_word_list(const std::vector<Word>& words, const Alphabet& alphabet,
                                    const std::string& separator = ", ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i > 0)
            os << separator;
        os << format_word(words[i], alphabet);
    }
    return os.str();
}

inline std::string format_endo(const FreeEndomorphism& endo, const Alphabet& alphabet) {
    std::ostringstream os;
    for (std::size_t i = 0; i < endo.images.size(); ++i) {
        if (i > 0)
            os << ", ";
        os << alphabet.names[i] << " -> " << format_word(endo.images[i], alphabet);
    }
    return os.str();
}

/* Single-line "< generators | fixed | substitutions | iterated >". */
inline std::string format_presentation(const LPresentation& lp,
                                       std::vector<std::string> endo_names = {}) {
    if (endo_names.empty())
        endo_names = default_endo_names(static_cast<int>(lp.substitutions.size()));
    std::ostringstream os;
    os << "< ";
    for (std::size_t i = 0; i < lp.alphabet.names.size(); ++i)
        os << (i > 0 ? ", " : "") << lp.alphabet.names[i];
    os << " | " << format_word_list(lp.fixed, lp.alphabet) << " | ";
    for (std::size_t i = 0; i < lp.substitutions.size(); ++i) {
        if (i > 0)
            os << "; ";
        os << endo_names[i] << ": " << format_endo(lp.substitutions[i], lp.alphabet);
    }
    os << " | " << format_word_list(lp.iterated, lp.alphabet) << " >";
    return os.str();
}

/* The file grammar the parser reads; printing then parsing is identity. */
inline std::string lpres_file_text(const PresentationFile& file) {
    std::vector<std::string> endo_names = file.endo_names;
    if (endo_names.empty())
        endo_names = default_endo_names(static_cast<int>(file.lp.substitutions.size()));
    std::ostringstream os;
    os << "# lpres v1\n";
    os << "generators:";
    for (const std::string& name : file.lp.alphabet.names)
        os << ' ' << name;
    os << '\n';
    if (!file.lp.fixed.empty())
        os << "fixed: " << format_word_list(file.lp.fixed, file.lp.alphabet) << '\n';
    for (std::size_t i = 0; i < file.lp.substitutions.size(); ++i)
        os << "endo " << endo_names[i] << ": "
           << format_endo(file.lp.substitutions[i], file.lp.alphabet) << '\n';
    if (!file.lp.iterated.empty())
        os << "iterated: " << format_word_list(file.lp.iterated, file.lp.alphabet) << '\n';
    os << "invariant: " << (file.lp.invariant ? "yes" : "no") << '\n';
    for (const auto& [name, words] : file.subgroups) {
        os << "subgroup " << name << ":";
        if (!words.empty())
            os << ' ' << format_word_list(words, file.lp.alphabet);
        os << '\n';
    }
    return os.str();
}

/* "Z^2 x (Z/3)" style description of a finitely generated abelian group. */
inline std::string format_abelian(const AbelianInvariants& inv) {
    std::vector<std::string> parts;
    if (inv.free_rank == 1)
        parts.push_back("Z");
    else if (inv.free_rank > 1)
        parts.push_back("Z^" + std::to_string(inv.free_rank));
    std::size_t i = 0;
    while (i < inv.torsion.size()) {
        std::size_t j = i;
        while (j < inv.torsion.size() && inv.torsion[j] == inv.torsion[i])
            ++j;
        std::string part = "(Z/" + inv.torsion[i].get_str() + ")";
        if (j - i > 1)
            part += "^" + std::to_string(j - i);
        parts.push_back(part);
        i = j;
    }
    if (parts.empty())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k)
        out += (k > 0 ? " x " : "") + parts[k];
    return out;
}

inline nlohmann::json word_strings(const std::vector<Word>& words, const Alphabet& alphabet) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Word& w : words)
        arr.push_back(format_word(w, alphabet));
    return arr;
}

inline nlohmann::json to_json(const CosetTable& table, const Alphabet& alphabet) {
    nlohmann::json action = nlohmann::json::array();
    for (const auto& column : table.columns()) {
        nlohmann::json images = nlohmann::json::array();
        for (int p : column)
            images.push_back(p + 1);
        action.push_back(images);
    }
    return {{"degree", table.ncosets()},
            {"generators", alphabet.names},
            {"action", action}};
}

inline nlohmann::json to_json(const LPresentation& lp, std::vector<std::string> endo_names = {}) {
    if (endo_names.empty())
        endo_names = default_endo_names(static_cast<int>(lp.substitutions.size()));
    nlohmann::json subs = nlohmann::json::array();
    for (std::size_t i = 0; i < lp.substitutions.size(); ++i) {
        nlohmann::json images;
        for (std::size_t g = 0; g < lp.alphabet.names.size(); ++g)
            images[lp.alphabet.names[g]] =
                format_word(lp.substitutions[i].images[g], lp.alphabet);
        subs.push_back({{"name", endo_names[i]}, {"images", images}});
    }
    return {{"generators", lp.alphabet.names},
            {"fixed", word_strings(lp.fixed, lp.alphabet)},
            {"substitutions", subs},
            {"iterated", word_strings(lp.iterated, lp.alphabet)},
            {"invariant", lp.invariant}};
}

inline nlohmann::json to_json(const AbelianInvariants& inv) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const Int& t : inv.torsion) {
        if (t.fits_slong_p())
            torsion.push_back(t.get_si());
        else
            torsion.push_back(t.get_str());
    }
    return {{"rank", inv.free_rank}, {"torsion", torsion}, {"heuristic", inv.heuristic}};
}

inline nlohmann::json to_json(const SubgroupReport& report) {
    auto element_names = [&](const std::vector<MonoidElement>& elems) {
        nlohmann::json arr = nlohmann::json::array();
        for (const MonoidElement& e : elems)
            arr.push_back(format_monoid_element(e, static_cast<int>(report.tree.phi.size())));
        return arr;
    };
    return {{"index", report.index},
            {"normal", report.normal},
            {"phi_invariant", report.phi_invariant},
            {"leaf_invariant", report.leaf_invariant},
            {"weakly_leaf_invariant_V", report.weakly_leaf_invariant_V},
            {"weakly_leaf_invariant_Vtilde", report.weakly_leaf_invariant_Vtilde},
            {"recommended_strategy", report.recommended},
            {"tree_nodes", element_names(report.tree.nodes)},
            {"reduced_tree_nodes", element_names(report.leadsto.nodes)}};
}

inline nlohmann::json to_json(const SubgroupPresentationResult& result,
                              const Alphabet& parent_alphabet) {
    return {{"strategy", result.strategy},
            {"rank", static_cast<int>(result.dictionary.size())},
            {"presentation", to_json(result.presentation)},
            {"generator_words", word_strings(result.dictionary, parent_alphabet)}};
}

} // namespace lpres
